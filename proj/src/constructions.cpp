#include "padiclab/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "padiclab/errors.hpp"
#include "padiclab/exact_linalg.hpp"
#include "padiclab/primes.hpp"

namespace padiclab {

BinaryCodeMatrix binary_code_matrix(std::size_t r) {
    if (r < 1 || r > 20)
        throw SizeError("binary_code_matrix: r must be in [1, 20], got " + std::to_string(r));
    std::size_t n = std::size_t(1) << r;
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        int wa = std::popcount(a), wb = std::popcount(b);
        return wa != wb ? wa < wb : a < b;
    });

    BinaryCodeMatrix out;
    out.r = r;
    out.matrix = IntMatrix(n, r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < r; ++j)
            out.matrix.at(i, j) = (order[i] >> (r - 1 - j)) & 1;  // column 0 = MSB

    out.row_blocks.resize(r + 1);
    std::size_t pos = 0;
    for (std::size_t w = 0; w <= r; ++w) {
        std::size_t begin = pos;
        while (pos < n && static_cast<std::size_t>(std::popcount(order[pos])) == w) ++pos;
        out.row_blocks[w] = {begin, pos};
    }
    return out;
}

IntMatrix gram(const IntMatrix& a) { return matmul(a, transpose(a)); }

ColumnBlockPartition summing_partition(const BinaryCodeMatrix& a) {
    ColumnBlockPartition out;
    std::size_t n = a.matrix.rows();
    out.groups.resize(a.r + 1);
    out.source.resize(n);
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t j = 0; j < a.r; ++j)
            if (a.matrix.at(l, j) == 1) out.source[l].push_back(j);
        out.groups[out.source[l].size()].push_back(l);
    }
    return out;
}

IntMatrix cayley_table(std::uint64_t p) {
    require_odd_prime(p);
    std::size_t m = p - 1;
    IntMatrix out(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            out.at(i, j) = static_cast<unsigned long>((i + 1) * (j + 1) % p);
    return out;
}

IntMatrix outer_rem(const IntMatrix& u, std::uint64_t p) {
    const IntMatrix* col = &u;
    IntMatrix flipped;
    if (u.cols() != 1) {
        if (u.rows() != 1) throw ShapeError("outer_rem expects a vector");
        flipped = transpose(u);
        col = &flipped;
    }
    return mat_rem(outer(*col, transpose(*col)), p);
}

IntMatrix b_matrix(std::uint64_t p) {
    require_odd_prime(p);
    IntMatrix cayley = cayley_table(p);
    std::size_t rows = p - 1, half = (p - 1) / 2;
    IntMatrix out(rows, half + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < half; ++j) out.at(i, j) = cayley.at(i, j);
        out.at(i, half) = static_cast<unsigned long>(p);
    }
    return out;
}

bool is_latin(const IntMatrix& l, std::uint64_t p) {
    std::size_t m = p - 1;
    if (l.rows() != m || l.cols() != m) return false;
    std::vector<bool> seen(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t j = 0; j < m; ++j) {
            const mpz_class& v = l.at(i, j);
            if (v < 1 || v > static_cast<unsigned long>(m)) return false;
            std::size_t s = v.get_ui() - 1;
            if (seen[s]) return false;
            seen[s] = true;
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t s = l.at(i, j).get_ui() - 1;
            if (seen[s]) return false;
            seen[s] = true;
        }
    }
    return true;
}

namespace {

void check_perm(const std::vector<std::size_t>& perm, std::size_t m, const char* what) {
    if (perm.size() != m) throw ShapeError(std::string(what) + ": wrong permutation length");
    std::vector<bool> seen(m);
    for (std::size_t v : perm) {
        if (v >= m || seen[v]) throw DomainError(std::string(what) + ": not a permutation");
        seen[v] = true;
    }
}

}  // namespace

IntMatrix latin_from_permutations(std::uint64_t p, const std::vector<std::size_t>& row_perm,
                                  const std::vector<std::size_t>& col_perm,
                                  const std::vector<std::size_t>& sym_perm) {
    IntMatrix cayley = cayley_table(p);
    std::size_t m = p - 1;
    check_perm(row_perm, m, "row_perm");
    check_perm(col_perm, m, "col_perm");
    check_perm(sym_perm, m, "sym_perm");
    IntMatrix out(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t s = cayley.at(row_perm[i], col_perm[j]).get_ui() - 1;
            out.at(i, j) = static_cast<unsigned long>(sym_perm[s] + 1);
        }
    return out;
}

std::vector<std::size_t> random_permutation(std::size_t n, RngStream& rng) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.next_below(i)]);
    return perm;
}

IntMatrix random_latin_square(std::uint64_t p, RngStream& rng) {
    require_odd_prime(p);
    std::size_t m = p - 1;
    auto rows = random_permutation(m, rng);
    auto cols = random_permutation(m, rng);
    auto syms = random_permutation(m, rng);
    return latin_from_permutations(p, rows, cols, syms);
}

IntMatrix random_mod_p_invertible(std::size_t n, std::uint64_t p, std::uint64_t lo,
                                  std::uint64_t hi, RngStream& rng, std::size_t budget) {
    require_prime(p);
    if (lo > hi || hi > p - 1)
        throw DomainError("entry range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] not inside [0, " + std::to_string(p - 1) + "]");
    std::uint64_t span = hi - lo + 1;
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = static_cast<unsigned long>(lo + rng.next_below(span));
        if (rank_mod_p(m, p).rank == n) return m;
    }
    throw SamplingError("no invertible mod-" + std::to_string(p) + " matrix found in " +
                        std::to_string(budget) + " attempts");
}

IntMatrix usv(const IntMatrix& u, std::size_t r, const IntMatrix& v) {
    if (u.rows() != u.cols() || v.rows() != v.cols() || u.rows() != v.rows())
        throw ShapeError("usv needs square U and V of equal size");
    if (r > u.rows()) throw ShapeError("usv: r exceeds the matrix size");
    std::size_t n = u.rows();
    IntMatrix out(n, n);
    mpz_class acc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            acc = 0;
            for (std::size_t k = 0; k < r; ++k)
                mpz_addmul(acc.get_mpz_t(), u.raw(i, k), v.raw(k, j));
            out.at(i, j) = acc;
        }
    return out;
}

IntMatrix planted_smith_matrix(std::size_t n, const std::vector<mpz_class>& factors,
                               RngStream& rng, std::size_t ops_per_side, long max_mult) {
    if (factors.size() != n) throw DomainError("factor list length must equal n");
    std::size_t r = 0;
    while (r < n && factors[r] != 0) ++r;
    for (std::size_t i = 0; i < n; ++i) {
        if (factors[i] < 0) throw DomainError("factors must be non-negative");
        if (i >= r && factors[i] != 0) throw DomainError("zero factors must trail");
        if (i + 1 < r && !mpz_divisible_p(factors[i + 1].get_mpz_t(), factors[i].get_mpz_t()))
            throw DomainError("factors must form a divisibility chain");
    }
    if (ops_per_side == 0) ops_per_side = 3 * n;
    if (max_mult < 1) throw DomainError("max_mult must be >= 1");

    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a.at(i, i) = factors[i];
    if (n < 2) return a;

    mpz_class c;
    auto draw_mult = [&]() {
        // Nonzero value in [-max_mult, max_mult].
        long v = static_cast<long>(rng.next_below(2 * max_mult)) - max_mult;
        return mpz_class(v >= 0 ? v + 1 : v);
    };
    // Left side: random row operations.
    for (std::size_t t = 0; t < ops_per_side; ++t) {
        std::size_t i = rng.next_below(n);
        std::size_t j = rng.next_below(n - 1);
        if (j >= i) ++j;
        if (rng.next_below(4) == 3) {
            a.swap_rows(i, j);
        } else {
            c = draw_mult();
            for (std::size_t k = 0; k < n; ++k)
                mpz_addmul(a.raw(i, k), c.get_mpz_t(), a.raw(j, k));
        }
    }
    // Right side: random column operations.
    for (std::size_t t = 0; t < ops_per_side; ++t) {
        std::size_t i = rng.next_below(n);
        std::size_t j = rng.next_below(n - 1);
        if (j >= i) ++j;
        if (rng.next_below(4) == 3) {
            a.swap_cols(i, j);
        } else {
            c = draw_mult();
            for (std::size_t k = 0; k < n; ++k)
                mpz_addmul(a.raw(k, i), c.get_mpz_t(), a.raw(k, j));
        }
    }
    return a;
}

}  // namespace padiclab
