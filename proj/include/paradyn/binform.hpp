#pragma once

// Binary forms in (X, Y) over an integral domain R (Integer, Rational or
// MPoly), homogeneous pairs (lifts of rational maps), resultants and
// discriminants.

#include "paradyn/arith.hpp"
#include "paradyn/exactring.hpp"
#include "paradyn/linalg.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace paradyn {

template <class R>
R determinant(Matrix<R> m, const R& zero) {
    if constexpr (std::is_same_v<R, Rational>) {
        (void)zero;
        return det(m);
    } else if constexpr (std::is_same_v<R, Integer>) {
        (void)zero;
        return det(std::move(m));
    } else {
        return det_bareiss(std::move(m), zero);
    }
}

/// (Z0, Z1) ^ (W0, W1) = Z0*W1 - Z1*W0.
template <class S>
S wedge(const std::pair<S, S>& z, const std::pair<S, S>& w) {
    return z.first * w.second - z.second * w.first;
}

/// Homogeneous form sum_i c_i X^(deg-i) Y^i of a declared degree.
template <class R>
class BinForm {
public:
    /// Coefficients c_0..c_deg; the declared degree is coeffs.size() - 1.
    explicit BinForm(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("a binary form needs at least one coefficient");
    }
    static BinForm zero(unsigned degree, const R& zero_scalar) { return BinForm(std::vector<R>(degree + 1, zero_scalar)); }
    static BinForm X(const R& zero_scalar) { return BinForm({one_like(zero_scalar), zero_scalar}); }
    static BinForm Y(const R& zero_scalar) { return BinForm({zero_scalar, one_like(zero_scalar)}); }

    unsigned degree() const { return static_cast<unsigned>(c_.size() - 1); }
    const std::vector<R>& coeffs() const { return c_; }
    const R& coeff(std::size_t i) const { return c_.at(i); }
    R zero_scalar() const { return zero_like(c_[0]); }
    bool is_zero() const {
        for (const auto& c : c_)
            if (!paradyn::is_zero(c)) return false;
        return true;
    }
    /// Coefficient of Y^deg, i.e. the value at (0, 1).
    const R& y_lead() const { return c_.back(); }

    R eval(const R& x, const R& y) const {
        // Horner in both variables: sum c_i x^(k-i) y^i.
        R acc = zero_scalar();
        R ypow = one_like(c_[0]);
        std::vector<R> xp(c_.size(), one_like(c_[0]));
        for (std::size_t i = 1; i < c_.size(); ++i) xp[i] = xp[i - 1] * x;
        const std::size_t k = degree();
        for (std::size_t i = 0; i <= k; ++i) {
            acc = acc + c_[i] * xp[k - i] * ypow;
            ypow = ypow * y;
        }
        return acc;
    }

    friend BinForm operator+(const BinForm& p, const BinForm& q) {
        if (p.degree() != q.degree()) throw std::invalid_argument("adding forms of different degree");
        std::vector<R> v(p.c_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] + q.c_[i];
        return BinForm(std::move(v));
    }
    friend BinForm operator-(const BinForm& p, const BinForm& q) {
        if (p.degree() != q.degree()) throw std::invalid_argument("subtracting forms of different degree");
        std::vector<R> v(p.c_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] - q.c_[i];
        return BinForm(std::move(v));
    }
    friend BinForm operator*(const BinForm& p, const BinForm& q) {
        std::vector<R> v(p.c_.size() + q.c_.size() - 1, p.zero_scalar());
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (paradyn::is_zero(p.c_[i])) continue;
            for (std::size_t j = 0; j < q.c_.size(); ++j) v[i + j] = v[i + j] + p.c_[i] * q.c_[j];
        }
        return BinForm(std::move(v));
    }
    friend BinForm operator*(const R& s, const BinForm& p) {
        std::vector<R> v(p.c_);
        for (auto& c : v) c = s * c;
        return BinForm(std::move(v));
    }
    friend bool operator==(const BinForm& p, const BinForm& q) { return p.c_ == q.c_; }

    BinForm pow(unsigned e) const {
        BinForm r({one_like(c_[0])});
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// dP/dY as a form of degree deg - 1.
    BinForm derivative_y() const {
        if (degree() == 0) return BinForm({zero_scalar()});
        std::vector<R> v(degree(), zero_scalar());
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = from_int_like(c_[0], static_cast<long>(i)) * c_[i];
        return BinForm(std::move(v));
    }

    /// P(g0, g1) for forms g0, g1 of a common degree e; result has degree deg*e.
    BinForm substitute(const BinForm& g0, const BinForm& g1) const {
        const unsigned k = degree();
        std::vector<BinForm> p0{BinForm({one_like(c_[0])})}, p1{BinForm({one_like(c_[0])})};
        for (unsigned i = 1; i <= k; ++i) {
            p0.push_back(p0.back() * g0);
            p1.push_back(p1.back() * g1);
        }
        BinForm out = zero(k * g0.degree(), zero_scalar());
        for (unsigned i = 0; i <= k; ++i) {
            if (paradyn::is_zero(c_[i])) continue;
            out = out + c_[i] * (p0[k - i] * p1[i]);
        }
        return out;
    }

private:
    std::vector<R> c_;
};

/// Exact quotient of forms; throws InexactDivision on a nonzero remainder.
template <class R>
BinForm<R> exact_div(const BinForm<R>& p, const BinForm<R>& q) {
    if (q.is_zero()) throw InexactDivision("division by the zero form");
    if (q.degree() > p.degree()) throw InexactDivision("divisor form has larger degree");
    std::size_t top = q.degree();
    while (is_zero(q.coeff(top))) --top;
    const unsigned e = p.degree() - q.degree();
    std::vector<R> rem(p.coeffs());
    std::vector<R> quo(e + 1, p.zero_scalar());
    for (long k = e; k >= 0; --k) {
        const std::size_t idx = static_cast<std::size_t>(k) + top;
        if (is_zero(rem[idx])) continue;
        R r = exact_div(rem[idx], q.coeff(top));
        for (std::size_t j = 0; j <= top; ++j) {
            if (is_zero(q.coeff(j))) continue;
            rem[static_cast<std::size_t>(k) + j] = rem[static_cast<std::size_t>(k) + j] - r * q.coeff(j);
        }
        quo[static_cast<std::size_t>(k)] = std::move(r);
    }
    for (const auto& x : rem)
        if (!is_zero(x)) throw InexactDivision("form division leaves a remainder");
    return BinForm<R>(std::move(quo));
}

/// Ordered pair (F0, F1) of forms of equal degree: a lift of a rational map.
template <class R>
struct HomPair {
    BinForm<R> F0, F1;

    HomPair(BinForm<R> f0, BinForm<R> f1) : F0(std::move(f0)), F1(std::move(f1)) {
        if (F0.degree() != F1.degree()) throw std::invalid_argument("lift components differ in degree");
    }
    unsigned degree() const { return F0.degree(); }
    static HomPair identity(const R& zero_scalar) {
        return HomPair(BinForm<R>::X(zero_scalar), BinForm<R>::Y(zero_scalar));
    }
    std::pair<R, R> operator()(const R& x, const R& y) const { return {F0.eval(x, y), F1.eval(x, y)}; }
    friend bool operator==(const HomPair& a, const HomPair& b) { return a.F0 == b.F0 && a.F1 == b.F1; }
};

/// F o G = (F0(G0, G1), F1(G0, G1)).
template <class R>
HomPair<R> compose(const HomPair<R>& F, const HomPair<R>& G) {
    return HomPair<R>(F.F0.substitute(G.F0, G.F1), F.F1.substitute(G.F0, G.F1));
}

/// n-fold self-composition F^n.
template <class R>
HomPair<R> iterate(const HomPair<R>& F, unsigned n) {
    if (n == 0) throw std::invalid_argument("iterate requires n >= 1");
    HomPair<R> result = F;
    for (unsigned k = 1; k < n; ++k) result = compose(F, result);
    return result;
}

/// Y*F0^(n) - X*F1^(n) given the already iterated pair.
template <class R>
BinForm<R> fix_form_of_iterate(const HomPair<R>& Fn) {
    const R z = Fn.F0.zero_scalar();
    return BinForm<R>::Y(z) * Fn.F0 - BinForm<R>::X(z) * Fn.F1;
}

/// Phi_n = Y*F0^(n) - X*F1^(n).
template <class R>
BinForm<R> fix_form(const HomPair<R>& F, unsigned n) {
    return fix_form_of_iterate(iterate(F, n));
}

/// Phi_n** = prod_{m | n} Phi_m^mu(n/m), computed as one exact division.
template <class R>
BinForm<R> dynatomic(const HomPair<R>& F, unsigned n) {
    if (n == 0) throw std::invalid_argument("dynatomic requires n >= 1");
    const R z = F.F0.zero_scalar();
    BinForm<R> num({one_like(z)}), den({one_like(z)});
    HomPair<R> iter = F;
    unsigned have = 1;
    for (auto m : divisors(n)) {
        int mu = moebius(n / m);
        while (have < m) {
            iter = compose(F, iter);
            ++have;
        }
        if (mu == 0) continue;
        BinForm<R> phi = fix_form_of_iterate(iter);
        if (mu > 0)
            num = num * phi;
        else
            den = den * phi;
    }
    return exact_div(num, den);
}

/// Determinant of the Sylvester matrix built from the declared degrees.
template <class R>
R sylvester_resultant(const BinForm<R>& P, const BinForm<R>& Q) {
    const R z = P.zero_scalar();
    if (P.degree() == 0 && Q.degree() == 0) return one_like(z);
    return determinant(sylvester_matrix<R>(std::span<const R>(P.coeffs()), std::span<const R>(Q.coeffs()), z), z);
}

/// Homogeneous resultant of the two lift components.
template <class R>
R rho(const HomPair<R>& F) {
    return sylvester_resultant(F.F0, F.F1);
}

/// P(X + tY, Y).
template <class R>
BinForm<R> shear(const BinForm<R>& P, long t) {
    const R z = P.zero_scalar();
    BinForm<R> g0({one_like(z), from_int_like(z, t)});
    return P.substitute(g0, BinForm<R>::Y(z));
}

/// Ordered-pair root product prod_i prod_{l != i} (A_i ^ A_l), evaluated
/// without roots as Res(P, dP/dY) / P(0, 1). When P(0, 1) vanishes the form
/// is first sheared by (X, Y) -> (X + tY, Y), which has determinant one.
template <class R>
R hom_discriminant(const BinForm<R>& P) {
    const unsigned k = P.degree();
    if (k < 2) throw std::invalid_argument("discriminant needs degree >= 2");
    if (P.is_zero()) throw std::invalid_argument("discriminant of the zero form");
    for (long step = 0; step <= 2 * static_cast<long>(k); ++step) {
        const long t = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
        BinForm<R> S = t == 0 ? P : shear(P, t);
        if (is_zero(S.y_lead())) continue;
        return exact_div(sylvester_resultant(S, S.derivative_y()), S.y_lead());
    }
    throw std::logic_error("shear search exhausted for a nonzero form");
}

}  // namespace paradyn
