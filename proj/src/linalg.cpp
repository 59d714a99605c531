#include "paradyn/linalg.hpp"

namespace paradyn {

Integer det(Matrix<Integer> m) { return det_bareiss(std::move(m), Integer(0)); }

Rational det(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    Matrix<Integer> im(n, m.cols(), Integer(0));
    Integer scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Integer l(1);
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) im(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
        scale *= l;
    }
    Rational r(det(std::move(im)), scale);
    r.canonicalize();
    return r;
}

}  // namespace paradyn
