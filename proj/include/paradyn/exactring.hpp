#pragma once

// Exact integers, rationals and sparse multivariate polynomials over the
// integers. Polynomials are kept in graded-lexicographic order so that the
// canonical printer is byte-for-byte deterministic.

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace paradyn {

using Integer = mpz_class;
using Rational = mpq_class;

class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InexactDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Integer zero_like(const Integer&) { return Integer(0); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Integer one_like(const Integer&) { return Integer(1); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Integer from_int_like(const Integer&, long v) { return Integer(v); }
inline Rational from_int_like(const Rational&, long v) { return Rational(v); }

/// Exact quotient; throws InexactDivision when b does not divide a.
Integer exact_div(const Integer& a, const Integer& b);
inline Rational exact_div(const Rational& a, const Rational& b) {
    if (is_zero(b)) throw InexactDivision("division by zero rational");
    return Rational(a / b);
}

Integer ipow(const Integer& base, unsigned long e);
Rational rpow(const Rational& base, long e);
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);

/// Ordered variable list shared by all polynomials of one ring.
class Ring {
public:
    explicit Ring(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    /// Index of a variable name, or size() when absent.
    std::size_t index_of(std::string_view name) const;

    friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

/// Exponent vector over a ring's variables.
class Monomial {
public:
    using Exps = boost::container::small_vector<std::uint32_t, 8>;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(Exps exps) : exps_(std::move(exps)) {}

    std::size_t size() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const Exps& exps() const { return exps_; }

    std::uint64_t degree() const;
    bool divides(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// a / b; requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    Exps exps_;
};

/// Graded-lex comparison: true when a comes strictly before b in print order
/// (higher total degree first, then lexicographically larger first).
bool grlex_before(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
    Monomial mono;
    Integer coeff;
};

/// Sparse polynomial with integer coefficients.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}
    MPoly(RingPtr ring, const Integer& constant);

    static MPoly variable(const RingPtr& ring, std::size_t index);
    static MPoly variable(const RingPtr& ring, std::string_view name);
    /// Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
    static MPoly from_terms(RingPtr ring, std::vector<Term> terms);
    /// Trusts that terms are already grlex-descending, distinct and nonzero.
    static MPoly from_canonical(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    long degree() const;
    const Term& leading_term() const { return terms_.front(); }
    /// Coefficient of a given monomial (zero if absent).
    Integer coeff(const Monomial& m) const;
    Integer content() const;

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& p, const MPoly& q);
    friend MPoly operator-(const MPoly& p, const MPoly& q);
    friend MPoly operator*(const MPoly& p, const MPoly& q);
    friend MPoly operator*(const MPoly& p, const Integer& c);
    friend MPoly operator*(const Integer& c, const MPoly& p) { return p * c; }
    MPoly& operator+=(const MPoly& q) { return *this = *this + q; }
    MPoly& operator-=(const MPoly& q) { return *this = *this - q; }
    MPoly& operator*=(const MPoly& q) { return *this = *this * q; }

    friend bool operator==(const MPoly& p, const MPoly& q);

    MPoly pow(unsigned e) const;
    /// Divides every coefficient by c; throws InexactDivision if c does not divide one.
    MPoly divide_coefficients(const Integer& c) const;

    Rational eval(const std::vector<Rational>& point) const;
    Integer eval(const std::vector<Integer>& point) const;

    /// Canonical text: `4*a^3*c - a^2*b^2 + ...`; "0" for zero.
    std::string str() const;

private:
    friend MPoly exact_div(const MPoly& p, const MPoly& q);
    RingPtr ring_;
    std::vector<Term> terms_;  // strictly grlex-descending, no zero coefficients
};

void require_same_ring(const MPoly& p, const MPoly& q);

/// Exact quotient r with q*r == p; throws InexactDivision on a nonzero remainder.
MPoly exact_div(const MPoly& p, const MPoly& q);

MPoly parse_mpoly(const RingPtr& ring, std::string_view text);

inline bool is_zero(const MPoly& x) { return x.is_zero(); }
inline MPoly zero_like(const MPoly& x) { return MPoly(x.ring()); }
inline MPoly one_like(const MPoly& x) { return MPoly(x.ring(), Integer(1)); }
inline MPoly from_int_like(const MPoly& x, long v) { return MPoly(x.ring(), Integer(v)); }
inline std::string to_string(const MPoly& p) { return p.str(); }

}  // namespace paradyn
