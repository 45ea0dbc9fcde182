#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "padiclab/int_matrix.hpp"
#include "padiclab/rng.hpp"

namespace padiclab {

// The 2^r x r matrix whose rows are all binary r-tuples, sorted by Hamming
// weight and then by value; column 0 carries the most significant bit.
// row_blocks[w] is the half-open row range of weight-w rows.
struct BinaryCodeMatrix {
    std::size_t r = 0;
    IntMatrix matrix;
    std::vector<std::pair<std::size_t, std::size_t>> row_blocks;
};

// Column grouping of gram(A) for a binary code matrix A: column l of A*A^T is
// the sum of the A-columns listed in source[l]; groups[k] collects the columns
// whose source set has size k.
struct ColumnBlockPartition {
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::vector<std::size_t>> source;
};

BinaryCodeMatrix binary_code_matrix(std::size_t r);

// A * A^T.
IntMatrix gram(const IntMatrix& a);

ColumnBlockPartition summing_partition(const BinaryCodeMatrix& a);

// (p-1) x (p-1) multiplication table of the nonzero residues mod p, entries
// in [1, p-1].
IntMatrix cayley_table(std::uint64_t p);

// (u * u^T) mod p for a vector u given as a 1 x n or n x 1 matrix.
IntMatrix outer_rem(const IntMatrix& u, std::uint64_t p);

// (p-1) x (p+1)/2: the first (p-1)/2 columns of the Cayley table plus a
// constant-p column.
IntMatrix b_matrix(std::uint64_t p);

// True when L is an order p-1 Latin square on symbols {1, ..., p-1}.
bool is_latin(const IntMatrix& l, std::uint64_t p);

// Cayley table with rows, columns, and symbols permuted; permutations are
// 0-based bijections of {0, ..., p-2}.
IntMatrix latin_from_permutations(std::uint64_t p, const std::vector<std::size_t>& row_perm,
                                  const std::vector<std::size_t>& col_perm,
                                  const std::vector<std::size_t>& sym_perm);

IntMatrix random_latin_square(std::uint64_t p, RngStream& rng);

// Entries uniform in [lo, hi] subset of [0, p-1], resampled until the matrix
// is invertible mod p; throws SamplingError after the attempt budget.
IntMatrix random_mod_p_invertible(std::size_t n, std::uint64_t p, std::uint64_t lo,
                                  std::uint64_t hi, RngStream& rng,
                                  std::size_t budget = 10000);

// U * diag(1 x r, 0 x (n-r)) * V, i.e. (first r columns of U) times (first r
// rows of V).
IntMatrix usv(const IntMatrix& u, std::size_t r, const IntMatrix& v);

// diag(factors) scrambled by random elementary unimodular row and column
// operations (ops_per_side of them on each side, addmul multipliers drawn
// from [-max_mult, max_mult] minus zero).  factors must be a divisibility
// chain padded with zeros to length n; the result has integer rank equal to
// the number of nonzero factors and mod-p rank equal to the number of factors
// coprime to p, by construction.
IntMatrix planted_smith_matrix(std::size_t n, const std::vector<mpz_class>& factors,
                               RngStream& rng, std::size_t ops_per_side = 0,
                               long max_mult = 2);

std::vector<std::size_t> random_permutation(std::size_t n, RngStream& rng);

}  // namespace padiclab
