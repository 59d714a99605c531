#pragma once

// Specialized maps over Q: multiplier polynomials of formally exact cycles,
// cyclic resultants, the normalized discriminant/resultant values and the
// exact verifier for the factorization identities relating them.

#include "paradyn/binform.hpp"
#include "paradyn/unipoly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace paradyn {

class DegenerateMap : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an identity is algebraically impossible on the given input,
/// e.g. a polynomial that should be an exact n-th power is not.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Division of p_n**(1) by a vanishing cyclic resultant.
class DegenerateDelta : public std::domain_error {
public:
    DegenerateDelta(unsigned n, unsigned ell)
        : std::domain_error("Delta_{" + std::to_string(n) + "," + std::to_string(ell) +
                            "} vanishes; the map lies on the corresponding bifurcation hypersurface"),
          n_(n), ell_(ell) {}
    unsigned n() const { return n_; }
    unsigned ell() const { return ell_; }

private:
    unsigned n_, ell_;
};

/// Integer 2x2 matrix [[a11, a12], [a21, a22]] acting by
/// (X, Y) -> (a11 X + a12 Y, a21 X + a22 Y).
struct SL2 {
    std::array<long, 4> a{1, 0, 0, 1};

    long det() const { return a[0] * a[3] - a[1] * a[2]; }
    bool is_identity() const { return a == std::array<long, 4>{1, 0, 0, 1}; }
    SL2 inverse() const { return SL2{{a[3], -a[1], -a[2], a[0]}}; }
    friend SL2 operator*(const SL2& p, const SL2& q) {
        return SL2{{p.a[0] * q.a[0] + p.a[1] * q.a[2], p.a[0] * q.a[1] + p.a[1] * q.a[3],
                    p.a[2] * q.a[0] + p.a[3] * q.a[2], p.a[2] * q.a[1] + p.a[3] * q.a[3]}};
    }
    static SL2 shear(long t) { return SL2{{1, t, 0, 1}}; }
    static SL2 rotation() { return SL2{{0, -1, 1, 0}}; }
    std::string str() const;
};

/// A degree-d rational map over Q, held as a primitive integer lift.
class RatMapQ {
public:
    /// Divides out the content; throws DegenerateMap if rho vanishes or d < 2.
    explicit RatMapQ(HomPair<Integer> lift);
    /// Coefficient rows a_0..a_d (of F0) and b_0..b_d (of F1), denominators cleared.
    static RatMapQ from_rational(const std::vector<Rational>& a, const std::vector<Rational>& b);
    static RatMapQ from_integers(const std::vector<long>& a, const std::vector<long>& b);

    unsigned degree() const { return lift_.degree(); }
    const HomPair<Integer>& lift() const { return lift_; }
    const Integer& rho() const { return rho_; }

private:
    HomPair<Integer> lift_;
    Integer rho_;
};

/// A ^ F ^ A^-1 for A in SL2(Z).
RatMapQ conjugate(const RatMapQ& f, const SL2& A);

struct Normalized {
    RatMapQ map;
    SL2 conjugation;
};

/// Conjugates f by the first element of a fixed ladder of SL2(Z) matrices
/// (identity, shears t = 1, -1, 2, -2, ..., then the rotation composed with
/// shears) for which infinity is not fixed by f^n, so that no formally exact
/// period-m point with m | n sits at infinity.
Normalized normalize_infinity(const RatMapQ& f, unsigned n);

enum class MultiplierRoute {
    Norm,       ///< determinants of multiplication matrices in Q[z]/(phi)
    Sylvester,  ///< declared-degree Sylvester resultants Res_z(phi, W_T)
};

/// prod_j (lambda_j - T) over the d_n formally exact period-n points, with
/// multiplicity. Evaluated at T = 0..d_n and interpolated.
UniPoly multiplier_product(const RatMapQ& f, unsigned n, MultiplierRoute route = MultiplierRoute::Norm);

/// prod_j (lambda_j - T) at a single rational T, without interpolation.
Rational multiplier_product_value(const RatMapQ& f, unsigned n, const Rational& T);

/// Monic p with p^n == (-1)^deg(M) M; throws InvariantViolation otherwise.
UniPoly nth_root_poly(const UniPoly& M, unsigned n);

/// Formally exact multiplier polynomial p_n**(T; f), monic convention.
UniPoly mult_poly(const RatMapQ& f, unsigned n);

/// Cyclic resultant Res(C_{n/ell}(T), p_ell**(T; f)) for ell | n, ell < n.
Rational delta(const RatMapQ& f, unsigned n, unsigned ell);
Rational delta_from_mult_poly(const UniPoly& p_ell, unsigned n, unsigned ell);

/// p_n**(1; f) / prod_{ell | n, ell < n} Delta_{n,ell}; throws DegenerateDelta on a zero factor.
Rational delta_diag(const RatMapQ& f, unsigned n);

/// Exact value raw / rho^k of a regular function at a lift.
struct RegValue {
    Rational value;
    Integer raw;
    Integer rho;
    unsigned long rho_power = 0;
};

/// rho^{-N_d(n)} Disc(Phi_n**).
RegValue D_star(const RatMapQ& f, unsigned n);
/// rho^{-N_d(n, ell)} Res(Phi_n**, Phi_ell**), ell < n.
RegValue R_star(const RatMapQ& f, unsigned n, unsigned ell);

struct IdentityLine {
    std::string name;
    Rational lhs;  // absolute values
    Rational rhs;
    bool pass = false;
    std::string note;
};

struct TheoremReport {
    unsigned n = 0;
    RegValue D;
    std::optional<Rational> delta_nn;       // empty when a proper Delta vanishes
    std::map<unsigned, Rational> delta;     // ell -> Delta_{n,ell}
    std::map<unsigned, RegValue> R;         // ell -> R_{n,ell}** for every ell < n
    Rational p_at_one;                      // p_n**(1; f)
    int sign = 0;                           // sign of D_n** / RHS when both are nonzero
    Rational residual;                      // |D_n**| - |RHS|
    bool degenerate = false;
    std::vector<IdentityLine> lines;

    bool ok() const;
    /// One identity per line: name, |LHS|, |RHS|, PASS/FAIL.
    std::string str() const;
};

TheoremReport verify_theorem(const RatMapQ& f, unsigned n);

/// Smallest K <= limit with value * rho^K integral, or nullopt.
std::optional<unsigned> minimal_rho_clearing(const Rational& value, const Integer& rho, unsigned limit);

}  // namespace paradyn
