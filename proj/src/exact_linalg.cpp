#include "padiclab/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "padiclab/errors.hpp"
#include "padiclab/primes.hpp"

namespace padiclab {

std::string to_string(RankMethod m) {
    switch (m) {
        case RankMethod::FractionFree: return "fraction-free";
        case RankMethod::ModP: return "mod-p";
        case RankMethod::Oracle: return "oracle";
    }
    return "?";
}

std::vector<mpz_class> SmithDecomposition::invariant_factors() const {
    std::size_t n = std::min(S.rows(), S.cols());
    std::vector<mpz_class> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = S.at(i, i);
    return out;
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
        if (S.at(i, i) != 0) ++r;
    return r;
}

namespace {

// Smallest-magnitude nonzero entry of W[k.., k..]; scan row-major so ties go
// to the earliest position.  Returns false if the block is all zero.
bool find_pivot(const IntMatrix& w, std::size_t k, std::size_t& pi, std::size_t& pj) {
    mpz_srcptr best = nullptr;
    for (std::size_t i = k; i < w.rows(); ++i) {
        for (std::size_t j = k; j < w.cols(); ++j) {
            mpz_srcptr v = w.raw(i, j);
            if (mpz_sgn(v) == 0) continue;
            if (!best || mpz_cmpabs(v, best) < 0) {
                best = v;
                pi = i;
                pj = j;
            }
        }
    }
    return best != nullptr;
}

// Fraction-free elimination.  Returns the pivot count; if det is non-null the
// matrix must be square and *det receives the exact determinant.
std::size_t bareiss(IntMatrix w, mpz_class* det) {
    std::size_t m = std::min(w.rows(), w.cols());
    mpz_class prev(1), t;
    int sign = 1;
    std::size_t k = 0;
    for (; k < m; ++k) {
        std::size_t pi, pj;
        if (!find_pivot(w, k, pi, pj)) break;
        if (pi != k) {
            w.swap_rows(k, pi);
            sign = -sign;
        }
        if (pj != k) {
            w.swap_cols(k, pj);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < w.rows(); ++i) {
            for (std::size_t j = k + 1; j < w.cols(); ++j) {
                // w[i][j] <- (w[k][k]*w[i][j] - w[i][k]*w[k][j]) / prev, exact.
                mpz_mul(t.get_mpz_t(), w.raw(k, k), w.raw(i, j));
                mpz_submul(t.get_mpz_t(), w.raw(i, k), w.raw(k, j));
                mpz_divexact(w.raw(i, j), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = w.at(k, k);
    }
    if (det) {
        if (k < m)
            *det = 0;
        else
            *det = sign > 0 ? prev : mpz_class(-prev);
    }
    return k;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1;
    base %= p;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, base, p);
        base = mulmod_u64(base, base, p);
        exp >>= 1;
    }
    return acc;
}

}  // namespace

RankResult rank_z(const IntMatrix& a) {
    return {bareiss(a, nullptr), RankMethod::FractionFree};
}

mpz_class determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeError("determinant needs a square matrix");
    if (a.rows() == 0) return 1;
    mpz_class det;
    bareiss(a, &det);
    return det;
}

RankResult rank_mod_p(const IntMatrix& a, std::uint64_t p) {
    require_prime(p);
    std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::uint64_t> w(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            w[i * cols + j] = mpz_fdiv_ui(a.raw(i, j), p);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && w[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(w[pivot * cols + j], w[rank * cols + j]);
        std::uint64_t inv = powmod_u64(w[rank * cols + col], p - 2, p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            std::uint64_t v = w[i * cols + col];
            if (v == 0) continue;
            std::uint64_t f = mulmod_u64(v, inv, p);
            w[i * cols + col] = 0;
            for (std::size_t j = col + 1; j < cols; ++j) {
                std::uint64_t sub = mulmod_u64(f, w[rank * cols + j], p);
                std::uint64_t& cell = w[i * cols + j];
                cell = cell >= sub ? cell - sub : cell + (p - sub);
            }
        }
        ++rank;
    }
    return {rank, RankMethod::ModP};
}

namespace {

// Working state for the diagonalization: every elementary operation on S is
// mirrored on U or V so that U * S * V stays equal to the input.
struct SnfWork {
    IntMatrix S, U, V;
    std::size_t n;
    mpz_class t;

    explicit SnfWork(const IntMatrix& a)
        : S(a), U(IntMatrix::identity(a.rows())), V(IntMatrix::identity(a.cols())),
          n(a.rows()) {}

    void row_swap(std::size_t i, std::size_t j) {
        S.swap_rows(i, j);
        U.swap_cols(i, j);
    }

    void col_swap(std::size_t i, std::size_t j) {
        S.swap_cols(i, j);
        V.swap_rows(i, j);
    }

    // S.row(i) += c * S.row(j); compensate in U.
    void row_addmul(std::size_t i, std::size_t j, const mpz_class& c) {
        for (std::size_t k = 0; k < n; ++k)
            mpz_addmul(S.raw(i, k), c.get_mpz_t(), S.raw(j, k));
        for (std::size_t k = 0; k < n; ++k)
            mpz_submul(U.raw(k, j), c.get_mpz_t(), U.raw(k, i));
    }

    // S.col(j) += c * S.col(i); compensate in V.
    void col_addmul(std::size_t j, std::size_t i, const mpz_class& c) {
        for (std::size_t k = 0; k < n; ++k)
            mpz_addmul(S.raw(k, j), c.get_mpz_t(), S.raw(k, i));
        for (std::size_t k = 0; k < n; ++k)
            mpz_submul(V.raw(i, k), c.get_mpz_t(), V.raw(j, k));
    }

    void row_negate(std::size_t i) {
        for (std::size_t k = 0; k < n; ++k) mpz_neg(S.raw(i, k), S.raw(i, k));
        for (std::size_t k = 0; k < n; ++k) mpz_neg(U.raw(k, i), U.raw(k, i));
    }

    // Unimodular transform [[x, y], [-b/g, a/g]] on rows (i, j), where
    // g = x*a + y*b.  Puts g in place of a when rows are (a ...), (b ...).
    void row_gcd_transform(std::size_t i, std::size_t j, const mpz_class& a,
                           const mpz_class& b, const mpz_class& g, const mpz_class& x,
                           const mpz_class& y) {
        mpz_class ag = a / g, bg = b / g;
        mpz_class ri, rj;
        for (std::size_t k = 0; k < n; ++k) {
            ri = x * S.at(i, k) + y * S.at(j, k);
            rj = ag * S.at(j, k) - bg * S.at(i, k);
            S.at(i, k) = ri;
            S.at(j, k) = rj;
        }
        // U <- U * E^{-1}, E^{-1} = [[a/g, -y], [b/g, x]] on columns (i, j).
        for (std::size_t k = 0; k < n; ++k) {
            ri = ag * U.at(k, i) + bg * U.at(k, j);
            rj = x * U.at(k, j) - y * U.at(k, i);
            U.at(k, i) = ri;
            U.at(k, j) = rj;
        }
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeError("smith_normal_form needs a square matrix");
    SnfWork w(a);
    std::size_t n = w.n;
    mpz_class q;

    // Diagonalize.  At step k the pivot is the smallest-magnitude nonzero of
    // the trailing block; quotient reduction leaves strictly smaller
    // remainders, so each inner loop terminates.
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pi, pj;
        if (!find_pivot(w.S, k, pi, pj)) break;
        w.row_swap(k, pi);
        w.col_swap(k, pj);
        for (;;) {
            bool residue = false;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (w.S.at(i, k) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), w.S.raw(i, k), w.S.raw(k, k));
                if (q != 0) w.row_addmul(i, k, mpz_class(-q));
                if (w.S.at(i, k) != 0) residue = true;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (w.S.at(k, j) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), w.S.raw(k, j), w.S.raw(k, k));
                if (q != 0) w.col_addmul(j, k, mpz_class(-q));
                if (w.S.at(k, j) != 0) residue = true;
            }
            if (!residue) break;
            if (!find_pivot(w.S, k, pi, pj)) break;
            w.row_swap(k, pi);
            w.col_swap(k, pj);
        }
    }

    // Enforce the divisibility chain.  Folding column j into column i puts
    // (d_i, d_j) into one column; a gcd row transform replaces them with
    // (g, d_i*d_j/g), both multiples of every earlier factor.
    std::size_t r = 0;
    while (r < n && w.S.at(r, r) != 0) ++r;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            if (mpz_divisible_p(w.S.raw(j, j), w.S.raw(i, i))) continue;
            mpz_class a_ = w.S.at(i, i), b_ = w.S.at(j, j);
            w.col_addmul(i, j, mpz_class(1));  // S[j][i] becomes d_j
            mpz_class g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a_.get_mpz_t(),
                       b_.get_mpz_t());
            w.row_gcd_transform(i, j, a_, b_, g, x, y);
            // Clear the fill-in at (i, j); divisible by g by construction.
            if (w.S.at(i, j) != 0) {
                mpz_class c = w.S.at(i, j) / g;
                w.col_addmul(j, i, mpz_class(-c));
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        if (w.S.at(i, i) < 0) w.row_negate(i);

    return {std::move(w.U), std::move(w.S), std::move(w.V)};
}

RankResult rank_p_via_snf(const IntMatrix& a, std::uint64_t p) {
    require_prime(p);
    SmithDecomposition d = smith_normal_form(a);
    std::size_t r = 0;
    for (const mpz_class& s : d.invariant_factors())
        if (s != 0 && mpz_fdiv_ui(s.get_mpz_t(), p) != 0) ++r;
    return {r, RankMethod::Oracle};
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

mpz_class snf_minor_gcd_oracle(const IntMatrix& a, std::size_t k) {
    if (k < 1 || k > std::min(a.rows(), a.cols()))
        throw SizeError("minor order " + std::to_string(k) + " out of range for " +
                        std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    mpz_class d(0);
    std::vector<std::size_t> rsel(k), csel(k);
    for (std::size_t i = 0; i < k; ++i) rsel[i] = i;
    bool more_rows = true;
    while (more_rows && d != 1) {
        for (std::size_t i = 0; i < k; ++i) csel[i] = i;
        bool more_cols = true;
        while (more_cols && d != 1) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(rsel[i], csel[j]);
            mpz_class det = determinant(sub);
            mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), det.get_mpz_t());
            more_cols = next_combination(csel, a.cols());
        }
        more_rows = next_combination(rsel, a.rows());
    }
    return abs(d);
}

RankResult rank_z_oracle(const IntMatrix& a) {
    std::size_t rows = a.rows(), cols = a.cols();
    std::vector<mpq_class> w(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) w[i * cols + j] = mpq_class(a.at(i, j));

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && w[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(w[pivot * cols + j], w[rank * cols + j]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (w[i * cols + col] == 0) continue;
            mpq_class f = w[i * cols + col] / w[rank * cols + col];
            w[i * cols + col] = 0;
            for (std::size_t j = col + 1; j < cols; ++j)
                w[i * cols + j] -= f * w[rank * cols + j];
        }
        ++rank;
    }
    return {rank, RankMethod::Oracle};
}

}  // namespace padiclab
