#include "paradyn/exactring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace paradyn {

Integer exact_div(const Integer& a, const Integer& b) {
    if (is_zero(b)) throw InexactDivision("division by zero integer");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw InexactDivision("integer division leaves a remainder: " + a.get_str() + " / " + b.get_str());
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational rpow(const Rational& base, long e) {
    if (e < 0) {
        if (is_zero(base)) throw std::domain_error("zero to a negative power");
        return rpow(Rational(1 / base), -e);
    }
    Rational r(ipow(base.get_num(), static_cast<unsigned long>(e)), ipow(base.get_den(), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw ParseError("empty rational");
    if (s.front() == '+') s.erase(0, 1);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (i >= t.size()) return false;
        return std::all_of(t.begin() + static_cast<long>(i), t.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    if (slash == std::string::npos) {
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            // decimal literal, e.g. -0.75
            std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
            bool neg = !whole.empty() && whole[0] == '-';
            if (neg) whole.erase(0, 1);
            if (whole.empty()) whole = "0";
            if (!valid_int(whole) || (!frac.empty() && !valid_int(frac)) || (!frac.empty() && frac[0] == '-'))
                throw ParseError("bad decimal: " + s);
            Integer den = ipow(Integer(10), frac.size());
            Integer num(whole + frac, 10);
            Rational r(num, den);
            r.canonicalize();
            return neg ? Rational(-r) : r;
        }
        if (!valid_int(s)) throw ParseError("bad integer: " + s);
        return Rational(Integer(s, 10));
    }
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d) || d[0] == '-') throw ParseError("bad rational: " + s);
    Integer den(d, 10);
    if (is_zero(den)) throw ParseError("zero denominator: " + s);
    Rational r(Integer(n, 10), den);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty() || !std::isalpha(static_cast<unsigned char>(names_[i][0])))
            throw std::invalid_argument("bad variable name: '" + names_[i] + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
    }
}

std::size_t Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return names_.size();
}

RingPtr make_ring(std::vector<std::string> names) { return std::make_shared<const Ring>(std::move(names)); }

std::uint64_t Monomial::degree() const {
    std::uint64_t s = 0;
    for (auto e : exps_) s += e;
    return s;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
    return r;
}

bool grlex_before(const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : m.exps()) {
        h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

namespace {

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_before(a, b); }
};

void sort_terms(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return grlex_before(x.mono, y.mono); });
}

}  // namespace

void require_same_ring(const MPoly& p, const MPoly& q) {
    if (p.ring() == q.ring()) return;
    if (!p.ring() || !q.ring() || !(*p.ring() == *q.ring())) throw RingMismatch("polynomials live in different rings");
}

MPoly::MPoly(RingPtr ring, const Integer& constant) : ring_(std::move(ring)) {
    if (!paradyn::is_zero(constant)) terms_.push_back(Term{Monomial(ring_->size()), constant});
}

MPoly MPoly::variable(const RingPtr& ring, std::size_t index) {
    if (index >= ring->size()) throw std::out_of_range("variable index");
    MPoly p(ring);
    Monomial m(ring->size());
    m[index] = 1;
    p.terms_.push_back(Term{std::move(m), Integer(1)});
    return p;
}

MPoly MPoly::variable(const RingPtr& ring, std::string_view name) {
    auto i = ring->index_of(name);
    if (i == ring->size()) throw std::out_of_range("unknown variable " + std::string(name));
    return variable(ring, i);
}

MPoly MPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    for (auto& t : terms) {
        if (t.mono.size() != ring->size()) throw std::invalid_argument("monomial length does not match ring");
        acc[t.mono] += t.coeff;
    }
    MPoly p(std::move(ring));
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!paradyn::is_zero(c)) p.terms_.push_back(Term{m, c});
    sort_terms(p.terms_);
    return p;
}

MPoly MPoly::from_canonical(RingPtr ring, std::vector<Term> terms) {
    MPoly p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }

long MPoly::degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.front().mono.degree()); }

Integer MPoly::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return grlex_before(t.mono, key); });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Integer(0);
}

Integer MPoly::content() const {
    Integer g(0);
    for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    return g;
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

MPoly merge(const MPoly& p, const MPoly& q, bool subtract) {
    require_same_ring(p, q);
    std::vector<Term> out;
    out.reserve(p.term_count() + q.term_count());
    const auto& a = p.terms();
    const auto& b = q.terms();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && grlex_before(a[i].mono, b[j].mono))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || grlex_before(b[j].mono, a[i].mono)) {
            out.push_back(Term{b[j].mono, subtract ? Integer(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Integer c = subtract ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
            if (!is_zero(c)) out.push_back(Term{a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return MPoly::from_canonical(p.ring() ? p.ring() : q.ring(), std::move(out));
}

}  // namespace

MPoly operator+(const MPoly& p, const MPoly& q) { return merge(p, q, false); }
MPoly operator-(const MPoly& p, const MPoly& q) { return merge(p, q, true); }

MPoly operator*(const MPoly& p, const MPoly& q) {
    require_same_ring(p, q);
    if (p.is_zero() || q.is_zero()) return MPoly(p.ring());
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    acc.reserve(p.term_count() * q.term_count() / 2 + 1);
    Integer tmp;
    for (const auto& s : p.terms()) {
        for (const auto& t : q.terms()) {
            mpz_mul(tmp.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
            acc[s.mono * t.mono] += tmp;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!is_zero(c)) out.push_back(Term{m, std::move(c)});
    MPoly r(p.ring());
    sort_terms(out);
    r.terms_ = std::move(out);
    return r;
}

MPoly operator*(const MPoly& p, const Integer& c) {
    if (is_zero(c)) return MPoly(p.ring());
    MPoly r(p);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

bool operator==(const MPoly& p, const MPoly& q) {
    if (p.terms_.size() != q.terms_.size()) return false;
    if (!p.terms_.empty()) require_same_ring(p, q);
    for (std::size_t i = 0; i < p.terms_.size(); ++i)
        if (!(p.terms_[i].mono == q.terms_[i].mono) || p.terms_[i].coeff != q.terms_[i].coeff) return false;
    return true;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result(ring_, Integer(1));
    MPoly base(*this);
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

MPoly MPoly::divide_coefficients(const Integer& c) const {
    MPoly r(*this);
    for (auto& t : r.terms_) t.coeff = paradyn::exact_div(t.coeff, c);
    return r;
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
    if (!ring_ && terms_.empty()) return Rational(0);
    if (point.size() != ring_->size()) throw std::invalid_argument("evaluation point has wrong length");
    // cache powers per variable
    std::vector<std::vector<Rational>> powers(point.size(), std::vector<Rational>{Rational(1)});
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational v(t.coeff);
        for (std::size_t i = 0; i < point.size(); ++i) {
            auto e = t.mono[i];
            if (!e) continue;
            auto& pw = powers[i];
            while (pw.size() <= e) pw.push_back(Rational(pw.back() * point[i]));
            v *= pw[e];
        }
        sum += v;
    }
    return sum;
}

Integer MPoly::eval(const std::vector<Integer>& point) const {
    if (!ring_ && terms_.empty()) return Integer(0);
    if (point.size() != ring_->size()) throw std::invalid_argument("evaluation point has wrong length");
    std::vector<std::vector<Integer>> powers(point.size(), std::vector<Integer>{Integer(1)});
    Integer sum(0);
    for (const auto& t : terms_) {
        Integer v(t.coeff);
        for (std::size_t i = 0; i < point.size(); ++i) {
            auto e = t.mono[i];
            if (!e) continue;
            auto& pw = powers[i];
            while (pw.size() <= e) pw.push_back(Integer(pw.back() * point[i]));
            v *= pw[e];
        }
        sum += v;
    }
    return sum;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Integer mag = abs(t.coeff);
        bool neg = sgn(t.coeff) < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool constant = t.mono.degree() == 0;
        bool wrote = false;
        if (mag != 1 || constant) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (!t.mono[i]) continue;
            if (wrote) os << '*';
            os << ring_->name(i);
            if (t.mono[i] > 1) os << '^' << t.mono[i];
            wrote = true;
        }
    }
    return os.str();
}

MPoly exact_div(const MPoly& p, const MPoly& q) {
    require_same_ring(p, q);
    if (q.is_zero()) throw InexactDivision("division by the zero polynomial");
    MPoly quotient(p.ring() ? p.ring() : q.ring());
    if (p.is_zero()) return quotient;
    if (q.term_count() == 1) {
        const auto& lq = q.leading_term();
        for (const auto& t : p.terms()) {
            if (!lq.mono.divides(t.mono)) throw InexactDivision("monomial does not divide term");
            quotient.terms_.push_back(Term{t.mono / lq.mono, exact_div(t.coeff, lq.coeff)});
        }
        return quotient;
    }
    std::map<Monomial, Integer, GrlexLess> rem;
    for (const auto& t : p.terms()) rem.emplace_hint(rem.end(), t.mono, t.coeff);
    const auto& lq = q.leading_term();
    Integer tmp;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lq.mono.divides(it->first)) throw InexactDivision("nonzero remainder in polynomial division");
        Monomial m = it->first / lq.mono;
        Integer c = exact_div(it->second, lq.coeff);
        rem.erase(it);
        for (std::size_t k = 1; k < q.terms().size(); ++k) {
            const auto& qt = q.terms()[k];
            mpz_mul(tmp.get_mpz_t(), c.get_mpz_t(), qt.coeff.get_mpz_t());
            auto [pos, inserted] = rem.try_emplace(m * qt.mono);
            pos->second -= tmp;
            if (is_zero(pos->second)) rem.erase(pos);
        }
        quotient.terms_.push_back(Term{std::move(m), std::move(c)});
    }
#ifndef NDEBUG
    if (!(quotient * q == p)) throw InexactDivision("back-multiplication check failed");
#endif
    return quotient;
}

// ---------------------------------------------------------------------------
// Parser for the canonical syntax (also accepts arbitrary term order,
// repeated variables and whitespace).

namespace {

class PolyParser {
public:
    PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), s_(text) {}

    MPoly parse() {
        skip();
        std::vector<Term> terms;
        bool first = true;
        while (true) {
            skip();
            if (pos_ >= s_.size()) {
                if (first) throw ParseError("empty polynomial");
                break;
            }
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw ParseError(err("expected '+' or '-'"));
            }
            terms.push_back(term(sign));
            first = false;
        }
        return MPoly::from_terms(ring_, std::move(terms));
    }

private:
    std::string err(const std::string& what) const {
        return what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'";
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    Integer number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(err("expected digits"));
        return Integer(std::string(s_.substr(start, pos_ - start)), 10);
    }
    Term term(int sign) {
        Term t{Monomial(ring_->size()), Integer(sign)};
        bool need_factor = true;
        while (need_factor) {
            skip();
            if (pos_ >= s_.size()) throw ParseError(err("unexpected end"));
            char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.coeff *= number();
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
                auto name = s_.substr(start, pos_ - start);
                auto idx = ring_->index_of(name);
                if (idx == ring_->size()) throw ParseError(err("unknown variable '" + std::string(name) + "'"));
                std::uint32_t e = 1;
                skip();
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    skip();
                    e = static_cast<std::uint32_t>(number().get_ui());
                }
                t.mono[idx] += e;
            } else {
                throw ParseError(err(std::string("unexpected character '") + c + "'"));
            }
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
            } else {
                need_factor = false;
            }
        }
        return t;
    }

    const RingPtr& ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_mpoly(const RingPtr& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

}  // namespace paradyn
