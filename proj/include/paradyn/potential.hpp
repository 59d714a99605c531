#pragma once

// Floating-point escape rates and the Green-function identities for lifts
// of rational maps, used as an independent numeric oracle.

#include "paradyn/multiplier.hpp"

#include <array>
#include <complex>
#include <vector>

namespace paradyn {

using cplx = std::complex<double>;

struct CVec2 {
    cplx z0, z1;

    double norm() const { return std::sqrt(std::norm(z0) + std::norm(z1)); }
    CVec2 unit() const {
        const double s = norm();
        return {z0 / s, z1 / s};
    }
};

inline cplx wedge(const CVec2& z, const CVec2& w) { return z.z0 * w.z1 - z.z1 * w.z0; }

/// Unit-norm lift of a finite point z of the line.
inline CVec2 unit_lift(cplx z) { return CVec2{1.0, z}.unit(); }

/// A lift with complex coefficients; c_i multiplies X^(d-i) Y^i.
struct ComplexLift {
    std::vector<cplx> F0, F1;

    static ComplexLift from(const HomPair<Integer>& F, double scale = 1.0);
    unsigned degree() const { return static_cast<unsigned>(F0.size() - 1); }
    CVec2 operator()(const CVec2& z) const;
    ComplexLift scaled(cplx c) const;
};

struct GreenEval {
    double value = 0;
    unsigned iterations = 0;
    double log_accumulator = 0;  // weighted sum of renormalization logs
    double error_estimate = 0;
    bool converged = true;
};

/// G^F(Z) = lim log|F^n(Z)| / d^n via unit renormalization at each step.
GreenEval escape_rate(const ComplexLift& F, const CVec2& Z, unsigned iters = 64);

/// G^F at a point with F^n(Z) = c Z, as log(|F^n(Z)| / |Z|) / (d^n - 1). Stable at
/// repelling cycles, where the orbit of a rounded point leaves the cycle.
double periodic_escape_rate(const ComplexLift& F, const CVec2& Z, unsigned n);

/// Complex roots of a rational polynomial: companion eigenvalues, then Newton polishing.
std::vector<cplx> numeric_roots(const UniPoly& p);

/// Real positive c with |Res(cF)| = 1, i.e. |rho|^(-1/(2d)).
double unit_resultant_scale(const Integer& rho, unsigned d);

/// Natural log of |x| for a nonzero integer of any size.
double log_abs(const Integer& x);

struct PeriodicPoints {
    RatMapQ map;              // conjugate of the input with no root at infinity
    SL2 conjugation;
    ComplexLift lift;         // scaled so that |Res| = 1
    std::vector<cplx> roots;  // affine roots of the dehomogenized Phi_n**
    double log_kappa = 0;     // Phi_n** = kappa * prod (Z ^ unit_lift(z_j))
    double min_separation = 0;
    double max_newton_step = 0;
};

/// Roots of Phi_n** by companion-matrix eigenvalues plus Newton polishing.
PeriodicPoints periodic_points(const RatMapQ& f, unsigned n);

struct GreenSum {
    double sum = 0;       // sum_j G^F(unit lifts) + log|kappa|
    double residual = 0;  // |sum|
    std::size_t points = 0;
    double min_separation = 0;
};

/// Sum of G^F over the formally exact period-n points, on lifts normalized by Phi_n**.
GreenSum fixed_point_sum(const RatMapQ& f, unsigned n);

struct KernelCheck {
    cplx point;
    cplx multiplier;
    double lhs = 0;  // log|f'(z) - 1|
    double rhs = 0;  // sum over the other fixed points of the kernel
    double residual = 0;
};

/// log|f'(z) - 1| against sum_{w != z} (log|Z^W| - G(Z) - G(W)) at each
/// simple fixed point (multiplier away from 1).
std::vector<KernelCheck> multiplier_kernel_check(const RatMapQ& f);

struct CycleFormCheck {
    double log_lhs = 0;  // n log|Delta_{n,n}|
    double log_rhs = 0;  // log prod_{r != s} |Res(Lambda_r, Lambda_s)|
    double relative_error = 0;
    std::size_t cycles = 0;
};

/// Groups the period-n points into cycles numerically and compares the
/// product of cross-cycle resultants with the exact |Delta_{n,n}|^n.
CycleFormCheck cycle_form_check(const RatMapQ& f, unsigned n);

}  // namespace paradyn
