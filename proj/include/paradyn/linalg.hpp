#pragma once

// Dense matrices and exact determinants over integral domains.

#include "paradyn/exactring.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace paradyn {

template <class R>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const R& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    std::size_t rows_, cols_;
    std::vector<R> data_;
};

/// Fraction-free Bareiss elimination. Every division is exact in an integral
/// domain; the `zero` argument supplies the additive identity of R.
template <class R>
R det_bareiss(Matrix<R> m, const R& zero) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return one_like(zero);
    bool negate = false;
    R prev = one_like(zero);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(m(p, k))) ++p;
            if (p == n) return zero;
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_div(t, prev);
            }
            m(i, k) = zero;
        }
        prev = m(k, k);
    }
    R d = m(n - 1, n - 1);
    if (negate) d = zero - d;
    return d;
}

Integer det(Matrix<Integer> m);
/// Clears row denominators and runs integer Bareiss.
Rational det(const Matrix<Rational>& m);

/// Sylvester matrix of two coefficient rows. Row i of the top block holds
/// `a` shifted i places right (e rows), the bottom block holds `b` (d rows),
/// where d = a.size()-1 and e = b.size()-1 are the declared degrees.
template <class R>
Matrix<R> sylvester_matrix(std::span<const R> a, std::span<const R> b, const R& zero) {
    const std::size_t d = a.size() - 1, e = b.size() - 1, n = d + e;
    Matrix<R> m(n, n, zero);
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j <= d; ++j) m(i, i + j) = a[j];
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= e; ++j) m(e + i, i + j) = b[j];
    return m;
}

}  // namespace paradyn
