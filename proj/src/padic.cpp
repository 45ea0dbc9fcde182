#include "padiclab/padic.hpp"

#include <string>

#include "padiclab/errors.hpp"

namespace padiclab {

PAdicExpansion padic_expand(const IntMatrix& m, std::uint64_t p) {
    if (p < 2)
        throw InvalidModulusError("modulus must be >= 2, got " + std::to_string(p));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) < 0)
                throw DomainError("digit expansion needs non-negative entries; entry (" +
                                  std::to_string(i) + "," + std::to_string(j) + ") is " +
                                  m.at(i, j).get_str());

    PAdicExpansion e;
    e.p = p;
    IntMatrix cur = m;
    do {
        e.digits.push_back(mat_rem(cur, p));
        cur = mat_quo(cur, p);
    } while (!cur.is_zero());
    return e;
}

IntMatrix padic_reconstruct(const PAdicExpansion& e) {
    if (e.p < 2)
        throw InvalidModulusError("modulus must be >= 2, got " + std::to_string(e.p));
    if (e.digits.empty()) throw MalformedExpansionError("expansion has no digits");
    std::size_t rows = e.digits[0].rows(), cols = e.digits[0].cols();
    mpz_class pz(static_cast<unsigned long>(e.p));
    for (std::size_t d = 0; d < e.digits.size(); ++d) {
        const IntMatrix& dig = e.digits[d];
        if (dig.rows() != rows || dig.cols() != cols)
            throw MalformedExpansionError("digit " + std::to_string(d) +
                                          " has mismatched shape");
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (dig.at(i, j) < 0 || dig.at(i, j) >= pz)
                    throw MalformedExpansionError(
                        "digit " + std::to_string(d) + " entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ") = " + dig.at(i, j).get_str() +
                        " outside [0, p)");
    }
    if (e.digits.size() > 1 && e.digits.back().is_zero())
        throw MalformedExpansionError("trailing digit matrix is zero");

    IntMatrix out(rows, cols);
    // Horner evaluation from the top digit down.
    for (std::size_t d = e.digits.size(); d-- > 0;) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                mpz_mul(out.raw(i, j), out.raw(i, j), pz.get_mpz_t());
                mpz_add(out.raw(i, j), out.raw(i, j), e.digits[d].raw(i, j));
            }
    }
    return out;
}

}  // namespace padiclab
