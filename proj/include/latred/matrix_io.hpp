#pragma once

#include <iosfwd>
#include <string>

#include "latred/exactlin.hpp"

namespace latred {

// File format: first line "rows cols", then `rows` lines of `cols` decimal
// integers separated by single spaces. Lines starting with '#' are ignored.

IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix_string(const std::string& text);
IntMatrix load_matrix_file(const std::string& path);

/// Canonical text form: header line plus space-separated rows.
std::string format_matrix(const IntMatrix& m);

/// FNV-1a 64-bit digest of the canonical text form, as "fnv1a64:<16 hex>".
std::string matrix_digest(const IntMatrix& m);

}  // namespace latred
