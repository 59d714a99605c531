#include "paradyn/unipoly.hpp"

#include "paradyn/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace paradyn {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return {};
    Rational inv = 1 / c_.back();
    return inv * *this;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = constant(Rational(1)), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    std::vector<Rational> v(std::max(p.c_.size(), q.c_.size()), Rational(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) v[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) v[i] += q.c_[i];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) { return p + (-q); }

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> v(p.c_.size() + q.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j) v[i + j] += p.c_[i] * q.c_[j];
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
    std::vector<Rational> v(p.c_);
    for (auto& x : v) x *= c;
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(c_);
    const long dd = divisor.degree();
    if (degree() < dd) return {UniPoly(), *this};
    std::vector<Rational> quo(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
    const Rational inv = 1 / divisor.lead();
    for (long k = degree() - dd; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + dd)] * inv;
        quo[static_cast<std::size_t>(k)] = q;
        if (sgn(q) == 0) continue;
        for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

std::string UniPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != 1 || i == 0) {
            os << mag.get_str();
            wrote = true;
        }
        if (i > 0) {
            if (wrote) os << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

UniPoly exact_div(const UniPoly& p, const UniPoly& q) {
    auto [quo, rem] = p.divmod(q);
    if (!rem.is_zero()) throw InexactDivision("univariate division leaves remainder " + rem.str());
    return quo;
}

Rational resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return Rational(0);
    if (p.degree() == 0) return rpow(p.lead(), q.degree());
    if (q.degree() == 0) return rpow(q.lead(), p.degree());
    std::vector<Rational> a(p.coeffs().rbegin(), p.coeffs().rend());
    std::vector<Rational> b(q.coeffs().rbegin(), q.coeffs().rend());
    return det(sylvester_matrix<Rational>(a, b, Rational(0)));
}

Rational resultant(const UniPoly& p, const UniPoly& q, unsigned q_degree) {
    if (p.degree() < 1) throw std::invalid_argument("declared-degree resultant needs a nonconstant first argument");
    if (q.degree() > static_cast<long>(q_degree)) throw std::invalid_argument("declared degree below actual degree");
    std::vector<Rational> a(p.coeffs().rbegin(), p.coeffs().rend());
    std::vector<Rational> b(q_degree + 1, Rational(0));
    for (std::size_t i = 0; i < q.coeffs().size(); ++i) b[q_degree - i] = q.coeffs()[i];
    return det(sylvester_matrix<Rational>(a, b, Rational(0)));
}

UniPoly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
    const std::size_t n = nodes.size();
    if (values.size() != n) throw std::invalid_argument("interpolate: node/value count mismatch");
    // Newton divided differences, then expand into the monomial basis.
    std::vector<Rational> dd(values);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            Rational gap = nodes[i] - nodes[i - level];
            if (sgn(gap) == 0) throw std::invalid_argument("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / gap;
        }
    UniPoly result;
    for (std::size_t k = n; k-- > 0;) result = result * UniPoly::linear(-nodes[k], Rational(1)) + UniPoly::constant(dd[k]);
    return result;
}

}  // namespace paradyn
