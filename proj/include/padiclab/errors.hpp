#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padiclab {

// Modulus < 2, composite where a prime is required, or p = 2 where an odd
// prime is required.
struct InvalidModulusError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Non-conformable dimensions, non-square input where squareness is required.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input outside the operation's domain (e.g. negative entry fed to a
// non-negative digit expansion, invalid divisibility chain).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Parameter outside the supported size range (r too large, k out of range).
struct SizeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A digit expansion that violates its own invariants.
struct MalformedExpansionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Rejection-sampling attempt budget exhausted.
struct SamplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text or structured input that does not parse; carries 1-based line/column.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace padiclab
