#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padiclab/int_matrix.hpp"

namespace padiclab {

enum class RankMethod { FractionFree, ModP, Oracle };

std::string to_string(RankMethod m);

struct RankResult {
    std::size_t rank = 0;
    RankMethod method = RankMethod::FractionFree;
};

// U * S * V = A with U, V unimodular (det = +-1) and S diagonal,
// non-negative, each diagonal entry dividing the next.
struct SmithDecomposition {
    IntMatrix U, S, V;

    std::vector<mpz_class> invariant_factors() const;
    std::size_t rank() const;
};

// Rank over the integers by fraction-free elimination (exact divisions only,
// no rationals).  Pivot: smallest-magnitude nonzero entry of the remaining
// block, ties broken by scan order.
RankResult rank_z(const IntMatrix& a);

// Rank over Z/pZ by Gaussian elimination on word-sized residues; p must be
// prime.
RankResult rank_mod_p(const IntMatrix& a, std::uint64_t p);

// Smith normal form with transform tracking.  Square matrices only.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Rank over Z/pZ read off the invariant factors: unimodular transforms stay
// invertible mod p, so the rank is the number of factors not divisible by p.
// Independent of rank_mod_p's elimination; square matrices only.
RankResult rank_p_via_snf(const IntMatrix& a, std::uint64_t p);

// gcd of the absolute values of all k x k minors (0 if they all vanish).
// The product of the first k invariant factors equals this, which makes it an
// independent cross-check; exponential in the size, meant for small matrices.
mpz_class snf_minor_gcd_oracle(const IntMatrix& a, std::size_t k);

// Rank over the rationals by straightforward mpq elimination.
RankResult rank_z_oracle(const IntMatrix& a);

// Exact determinant (square matrices).
mpz_class determinant(const IntMatrix& a);

}  // namespace padiclab
