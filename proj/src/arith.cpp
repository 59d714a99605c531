#include "paradyn/arith.hpp"

#include <stdexcept>

namespace paradyn {

std::vector<unsigned> divisors(unsigned n) {
    if (n == 0) throw std::invalid_argument("divisors of 0");
    std::vector<unsigned> small, large;
    for (unsigned k = 1; k * k <= n; ++k) {
        if (n % k) continue;
        small.push_back(k);
        if (k != n / k) large.push_back(n / k);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<unsigned> proper_divisors(unsigned n) {
    auto v = divisors(n);
    v.pop_back();
    return v;
}

int moebius(unsigned n) {
    if (n == 0) throw std::invalid_argument("moebius(0) is undefined");
    int sign = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

int moebius_sum_check(unsigned n) {
    int s = 0;
    for (auto m : divisors(n)) s += moebius(m);
    return s;
}

UniPoly cyclotomic(unsigned i) {
    UniPoly num = UniPoly::constant(Rational(1)), den = UniPoly::constant(Rational(1));
    for (auto k : divisors(i)) {
        int mu = moebius(i / k);
        if (mu == 0) continue;
        UniPoly f = UniPoly::monomial(Rational(1), k) - UniPoly::constant(Rational(1));
        (mu > 0 ? num : den) = (mu > 0 ? num : den) * f;
    }
    return exact_div(num, den);
}

Integer formal_period_count(unsigned d, unsigned n) {
    if (d < 2) throw std::invalid_argument("degree must exceed 1");
    Integer total(0);
    for (auto m : divisors(n)) {
        int mu = moebius(n / m);
        if (mu) total += mu * (ipow(Integer(d), m) + 1);
    }
    return total;
}

namespace {

Integer checked_quotient(const Integer& num, const Integer& den, const char* what) {
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error(std::string(what) + " is not an integer");
    return Integer(num / den);
}

}  // namespace

Integer norm_exponents(unsigned d, unsigned n, std::optional<unsigned> ell) {
    if (n == 0) throw std::invalid_argument("period must be positive");
    const Integer dn = formal_period_count(d, n);
    const Integer dd = Integer(d) * (d - 1);
    if (!ell) {
        if (n == 1) return Integer(1);
        return checked_quotient(dn * (dn - 1), dd, "N_d(n)");
    }
    if (*ell == 0 || *ell >= n) throw std::invalid_argument("N_d(n, ell) requires 0 < ell < n");
    if (*ell == 1) return checked_quotient(dn, Integer(d - 1), "N_d(n,1)");
    return checked_quotient(dn * formal_period_count(d, *ell), dd, "N_d(n,ell)");
}

DegreeBook::DegreeBook(unsigned d) : d_(d) {
    if (d < 2) throw std::invalid_argument("degree must exceed 1");
}

Integer DegreeBook::M(unsigned n) const {
    if (n == 1) return Integer(1);
    const Integer dn = d_n(n);
    return checked_quotient(dn * (dn - n), Integer(d_) * (d_ - 1), "M_d(n)");
}

Integer DegreeBook::coeff_degree(unsigned n) const {
    if (n == 1) return Integer(1);
    return checked_quotient(d_n(n), Integer(d_ - 1), "coefficient degree");
}

}  // namespace paradyn
