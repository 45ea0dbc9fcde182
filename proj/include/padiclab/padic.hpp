#pragma once

#include <cstdint>
#include <vector>

#include "padiclab/int_matrix.hpp"

namespace padiclab {

// Base-p digit matrices of a non-negative matrix M:
//   M = digits[0] + p*digits[1] + p^2*digits[2] + ...
// Every digit entry lies in [0, p).  Canonical form: the last digit matrix is
// nonzero, except the zero matrix which keeps a single zero digit.
struct PAdicExpansion {
    std::uint64_t p = 0;
    std::vector<IntMatrix> digits;

    std::size_t length() const { return digits.size(); }
};

// Peel digits by repeated rem/quo.  Entries must be non-negative.
PAdicExpansion padic_expand(const IntMatrix& m, std::uint64_t p);

// Evaluate the expansion back to one matrix; validates shape agreement,
// digit ranges, and the canonical trailing digit.
IntMatrix padic_reconstruct(const PAdicExpansion& e);

}  // namespace padiclab
