#pragma once

// Divisors, the Moebius function, cyclotomic polynomials, and the degree
// bookkeeping for formally exact periodic points of degree-d maps.

#include "paradyn/exactring.hpp"
#include "paradyn/unipoly.hpp"

#include <optional>
#include <vector>

namespace paradyn {

/// Positive divisors of n in increasing order.
std::vector<unsigned> divisors(unsigned n);
/// Divisors of n strictly smaller than n.
std::vector<unsigned> proper_divisors(unsigned n);

int moebius(unsigned n);
/// Sum of mu(m) over m | n; 1 for n == 1 and 0 otherwise.
int moebius_sum_check(unsigned n);

/// i-th cyclotomic polynomial as the exact quotient of the Moebius product of T^k - 1.
UniPoly cyclotomic(unsigned i);

/// d_n = sum_{m | n} mu(n/m) (d^m + 1), the number of formally exact
/// period-n points of a degree-d map, counted with multiplicity.
Integer formal_period_count(unsigned d, unsigned n);

/// N_d(n) when ell is empty, N_d(n, ell) otherwise (ell < n).
Integer norm_exponents(unsigned d, unsigned n, std::optional<unsigned> ell = std::nullopt);

/// Degree bookkeeping for a fixed d > 1.
class DegreeBook {
public:
    explicit DegreeBook(unsigned d);

    unsigned d() const { return d_; }
    Integer d_n(unsigned n) const { return formal_period_count(d_, n); }
    Integer N(unsigned n) const { return norm_exponents(d_, n); }
    Integer N(unsigned n, unsigned ell) const { return norm_exponents(d_, n, ell); }
    /// Exponent of the resultant in the pairwise cycle-form product.
    Integer M(unsigned n) const;
    /// Degree of the coefficients of Phi_n** in the map coefficients.
    Integer coeff_degree(unsigned n) const;

private:
    unsigned d_;
};

}  // namespace paradyn
