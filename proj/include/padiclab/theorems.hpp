#pragma once

#include <cstdint>
#include <vector>

#include "padiclab/int_matrix.hpp"
#include "padiclab/reports.hpp"
#include "padiclab/rng.hpp"

namespace padiclab {

// Per-digit mod-p ranks of a matrix's base-p digit expansion.
struct DigitRankProfile {
    std::uint64_t p = 0;
    std::vector<std::size_t> ranks;
};

// (p^r0 - 1)(p + 1) / (2(p - 1)) as an exact rational; not always an integer,
// so callers compare rank <= bound in rational arithmetic.
mpq_class rem_rank_bound(std::uint64_t p, std::size_t r0);

// For square A: with r = rank over Z, r0 = rank mod p, checks
//   rank(A rem p) <= rem_rank_bound(p, r0)   and
//   rank(A quo p) <= r + rem_rank_bound(p, r0),
// applicable when n > p^r0.
VerificationReport verify_theorem1(const IntMatrix& a, std::uint64_t p);

// For a vector u whose residues cover {1, ..., p-1}: the (p-1) x n matrix
// with rows (c*u) rem p has rank (p+1)/2, and (u u^T) rem p has the same
// rank.
VerificationReport verify_rank1_rem(const IntMatrix& u, std::uint64_t p);

// Column-prefix ranks of the b_matrix: rank of the first k columns is k for
// k = 2 .. (p-1)/2, and the full matrix has rank (p+1)/2.  p odd prime <= 101.
VerificationReport verify_B_columns(std::uint64_t p);

// If L is Latin of order p-1 on {1, ..., p-1}, its integer rank is (p+1)/2.
VerificationReport latin_square_rank_check(const IntMatrix& l, std::uint64_t p);

// Number of carries when adding a + b in base p.
std::size_t carry_count(std::uint64_t a, std::uint64_t b, std::uint64_t p);

// v_p(binomial(a+b, a)) via factorial valuations (independent of
// carry_count); requires a + b <= 10^6.
std::size_t binom_valuation(std::uint64_t a, std::uint64_t b, std::uint64_t p);

// ((2^i + k) quo 2^i) and binomial(2^i + k, 2^i) have the same parity.
VerificationReport quo_binom_parity(std::size_t i, std::uint64_t k);

// ranks[i] = rank mod p of digit i of the base-p expansion of M.
DigitRankProfile digit_rank_profile(const IntMatrix& m, std::uint64_t p);

// For M = gram(binary_code_matrix(r)), 1 <= r <= 8: in digit matrix i >= 1,
// every column group of weight k < 2^i is zero, and the weight-2^i group has
// mod-2 rank binomial(r, 2^i).
VerificationReport verify_block_lemmas(std::size_t r);

// For the same M, 1 <= r <= 7: each digit-i column of a weight-(2^i + z)
// group equals, mod 2, the sum of the weight-2^i group columns indexed by the
// size-2^i subsets of its summing set; consequently the whole digit matrix
// has the rank of that single group.
VerificationReport verify_column_dependence(std::size_t r);

// Random {0,1} matrices U, V invertible mod 2, M = usv(U, r, V): when the
// first r columns of U (as rows) and first r rows of V (as columns) each
// cover all 2^r binary patterns, the digit-i ranks for i >= 1 equal
// binomial(r, 2^i).  Coverage is reported per trial; without it the profile
// comparison is observational only.
std::vector<VerificationReport> verify_theorem_padic(std::size_t n, std::size_t r,
                                                     std::size_t trials, RngStream& rng);

// Deterministic instance embedding the binary code matrix, n = 2^r: the
// profile must be [r, C(r,2), C(r,4), ...].
VerificationReport theorem_padic_canonical(std::size_t r);

// For odd p = 2k+1: sum_{i=0..k} C(r+2i, 2i+1) + C(r+2k-1, 2k) - 2r.
mpz_class conjecture_bound(std::uint64_t p, std::size_t r);

// Sample U, V with entries uniform in [0, p-1] invertible mod p, form
// M = usv(U, r, V), and compare the mod-p rank of digit 1 of M against
// conjecture_bound(p, r).  The trial/seed/timing fields are left for the
// sweep driver; u_out/v_out receive the sampled matrices when non-null.
TrialRecord conjecture_trial(std::uint64_t p, std::size_t r, std::size_t n, RngStream& rng,
                             IntMatrix* u_out = nullptr, IntMatrix* v_out = nullptr);

}  // namespace padiclab
