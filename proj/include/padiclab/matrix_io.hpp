#pragma once

#include <iosfwd>
#include <string>

#include "padiclab/int_matrix.hpp"

namespace padiclab {

// Text format: "ROWS COLS\n" then one line per row of space-separated signed
// decimal entries, newline-terminated.
IntMatrix parse_matrix_text(std::istream& in);
IntMatrix parse_matrix_text(const std::string& text);
std::string serialize_matrix_text(const IntMatrix& m);

// JSON object {"rows": R, "cols": C, "data": [row-major entries]}.  Entries
// with |x| > 2^53 are written as decimal strings so consumers that read JSON
// numbers as doubles never silently lose precision; both encodings parse.
IntMatrix parse_matrix_json(const std::string& text);
std::string serialize_matrix_json(const IntMatrix& m);

// Load from a file in either format: .json goes through the JSON parser,
// anything else through the text parser.
IntMatrix load_matrix_file(const std::string& path);
void save_matrix_file(const IntMatrix& m, const std::string& path);

}  // namespace padiclab
