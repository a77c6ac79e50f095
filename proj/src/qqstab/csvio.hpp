/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qqstab::csv {

/// Shortest round-trip decimal form of a double (std::to_chars), so report
/// files are byte-stable across runs and platforms with the same doubles.
std::string fmt(double v);
std::string fmt(std::uint64_t v);
std::string fmt(std::int64_t v);
std::string fmt(bool v);  // "1" / "0"

/// One comma-separated record terminated by '\n'. Fields must not contain
/// commas or newlines (all writers here emit numeric or enum-name fields).
void write_row(std::ostream& out, std::span<const std::string> fields);
void write_row(std::ostream& out, std::initializer_list<std::string> fields);

}  // namespace qqstab::csv
