#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace padiclab {

// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    // Convenience for literals in tests and small fixtures.
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    // Raw limb access for hot loops.
    mpz_ptr raw(std::size_t i, std::size_t j) { return data_[i * cols_ + j].get_mpz_t(); }
    mpz_srcptr raw(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j].get_mpz_t();
    }

    bool operator==(const IntMatrix& other) const = default;

    bool is_zero() const;
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    IntMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                        std::size_t ncols) const;
    // New matrix keeping the given columns, in the given order.
    IntMatrix select_columns(const std::vector<std::size_t>& which) const;

  private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> data_;
};

// Element-wise Euclidean remainder: every entry mapped into [0, p).
IntMatrix mat_rem(const IntMatrix& m, std::uint64_t p);

// Element-wise Euclidean quotient: m = p * quo + rem with 0 <= rem < p.
// Quotients of negative entries are negative.
IntMatrix mat_quo(const IntMatrix& m, std::uint64_t p);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& m);
// Column vector (n x 1) times row vector (1 x m) -> n x m.
IntMatrix outer(const IntMatrix& col, const IntMatrix& row);

}  // namespace padiclab
