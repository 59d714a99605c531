#pragma once

// Dense univariate polynomials over the rationals.

#include "paradyn/exactring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace paradyn {

class UniPoly {
public:
    UniPoly() = default;
    /// Coefficients from the constant term upward; trailing zeros are trimmed.
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
    static UniPoly monomial(const Rational& c, std::size_t degree);
    /// c0 + c1*T for the linear polynomial helper.
    static UniPoly linear(const Rational& c0, const Rational& c1) { return UniPoly({c0, c1}); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly pow(unsigned e) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator-(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator*(const Rational& c, const UniPoly& p);
    friend bool operator==(const UniPoly& p, const UniPoly& q) { return p.c_ == q.c_; }

    /// Euclidean division: {quotient, remainder}.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    /// Canonical text in descending powers, e.g. `T^3 - 2*T^2`.
    std::string str(const std::string& var = "T") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient p / q; throws InexactDivision when the remainder is nonzero.
UniPoly exact_div(const UniPoly& p, const UniPoly& q);

/// Standard univariate resultant lc(p)^deg q * prod q(roots of p), via the
/// Sylvester determinant with highest coefficients first.
Rational resultant(const UniPoly& p, const UniPoly& q);

/// Sylvester determinant with q padded to a declared degree >= deg q.
/// Equals lc(p)^q_degree * prod q(roots of p) whenever p is nonconstant.
Rational resultant(const UniPoly& p, const UniPoly& q, unsigned q_degree);

/// Unique polynomial of degree < nodes.size() through (nodes[i], values[i]).
UniPoly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

}  // namespace paradyn
