#include "padiclab/int_matrix.hpp"

#include <string>
#include <utility>

#include "padiclab/errors.hpp"

namespace padiclab {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t nr = rows.size();
    std::size_t nc = nr ? rows.begin()->size() : 0;
    IntMatrix m(nr, nc);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != nc) throw ShapeError("ragged row list");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap(data_[i * cols_ + a], data_[i * cols_ + b]);
}

IntMatrix IntMatrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                               std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_)
        throw ShapeError("submatrix out of range");
    IntMatrix out(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) out.at(i, j) = at(row0 + i, col0 + j);
    return out;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& which) const {
    IntMatrix out(rows_, which.size());
    for (std::size_t j = 0; j < which.size(); ++j) {
        if (which[j] >= cols_) throw ShapeError("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) out.at(i, j) = at(i, which[j]);
    }
    return out;
}

namespace {

void check_modulus(std::uint64_t p) {
    if (p < 2)
        throw InvalidModulusError("modulus must be >= 2, got " + std::to_string(p));
}

}  // namespace

IntMatrix mat_rem(const IntMatrix& m, std::uint64_t p) {
    check_modulus(p);
    mpz_class pz = mpz_class(static_cast<unsigned long>(p));
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            // Floored division agrees with Euclidean division for positive p,
            // so the remainder always lands in [0, p).
            mpz_fdiv_r(out.raw(i, j), m.raw(i, j), pz.get_mpz_t());
    return out;
}

IntMatrix mat_quo(const IntMatrix& m, std::uint64_t p) {
    check_modulus(p);
    mpz_class pz = mpz_class(static_cast<unsigned long>(p));
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_fdiv_q(out.raw(i, j), m.raw(i, j), pz.get_mpz_t());
    return out;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("matmul: inner dimensions disagree");
    IntMatrix out(a.rows(), b.cols());
    mpz_class acc;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                mpz_addmul(acc.get_mpz_t(), a.raw(i, k), b.raw(k, j));
            out.at(i, j) = acc;
        }
    }
    return out;
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j);
    return out;
}

IntMatrix outer(const IntMatrix& col, const IntMatrix& row) {
    if (col.cols() != 1) throw ShapeError("outer: first argument must be a column vector");
    if (row.rows() != 1) throw ShapeError("outer: second argument must be a row vector");
    IntMatrix out(col.rows(), row.cols());
    for (std::size_t i = 0; i < col.rows(); ++i)
        for (std::size_t j = 0; j < row.cols(); ++j)
            mpz_mul(out.raw(i, j), col.raw(i, 0), row.raw(0, j));
    return out;
}

}  // namespace padiclab
