#include "paradyn/potential.hpp"

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace paradyn {

double log_abs(const Integer& x) {
    if (sgn(x) == 0) return -std::numeric_limits<double>::infinity();
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double unit_resultant_scale(const Integer& rho, unsigned d) {
    return std::exp(-log_abs(rho) / (2.0 * d));
}

ComplexLift ComplexLift::from(const HomPair<Integer>& F, double scale) {
    ComplexLift L;
    for (const auto& c : F.F0.coeffs()) L.F0.emplace_back(c.get_d() * scale);
    for (const auto& c : F.F1.coeffs()) L.F1.emplace_back(c.get_d() * scale);
    return L;
}

namespace {

cplx eval_form(const std::vector<cplx>& c, const CVec2& z) {
    const std::size_t k = c.size() - 1;
    cplx acc = 0, ypow = 1;
    std::vector<cplx> xp(k + 1, 1.0);
    for (std::size_t i = 1; i <= k; ++i) xp[i] = xp[i - 1] * z.z0;
    for (std::size_t i = 0; i <= k; ++i) {
        acc += c[i] * xp[k - i] * ypow;
        ypow *= z.z1;
    }
    return acc;
}

// Coefficients low-to-high in z of the dehomogenized form, as doubles with a
// common power-of-two shift so that the largest has magnitude about one.
std::vector<double> scaled_coefficients(const BinForm<Integer>& P) {
    long emax = std::numeric_limits<long>::min();
    for (const auto& c : P.coeffs()) {
        if (sgn(c) == 0) continue;
        long e = 0;
        mpz_get_d_2exp(&e, c.get_mpz_t());
        emax = std::max(emax, e);
    }
    std::vector<double> out;
    for (const auto& c : P.coeffs()) {
        if (sgn(c) == 0) {
            out.push_back(0.0);
            continue;
        }
        long e = 0;
        const double m = mpz_get_d_2exp(&e, c.get_mpz_t());
        out.push_back(std::ldexp(m, static_cast<int>(e - emax)));
    }
    return out;
}

cplx horner(const std::vector<double>& c, cplx z, cplx* derivative) {
    cplx p = 0, dp = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
    if (derivative) *derivative = dp;
    return p;
}

std::vector<cplx> polynomial_roots(const std::vector<double>& c, double& max_step) {
    const std::size_t k = c.size() - 1;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
    for (std::size_t i = 1; i < k; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < k; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k - 1)) = -c[i] / c[k];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<cplx> roots;
    max_step = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        cplx z = es.eigenvalues()[i];
        for (int it = 0; it < 8; ++it) {
            cplx dp;
            cplx p = horner(c, z, &dp);
            if (dp == 0.0) break;
            cplx step = p / dp;
            if (!std::isfinite(std::abs(step))) break;
            z -= step;
            if (it == 7) max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z)));
            if (std::abs(step) < 1e-17 * std::max(1.0, std::abs(z))) break;
        }
        roots.push_back(z);
    }
    return roots;
}

using hp_real = boost::multiprecision::cpp_bin_float_50;
using hp_complex = boost::multiprecision::cpp_complex_50;

// Aberth-Ehrlich refinement of all roots at once in 50-digit arithmetic from
// the exact integer coefficients (low to high). Clustered roots, which double
// precision cannot separate, converge here as well.
std::vector<cplx> aberth_refine(const std::vector<Integer>& coeffs, std::vector<cplx> start, double& last_step) {
    std::vector<hp_real> c;
    for (const auto& x : coeffs) c.emplace_back(x.get_str());
    const std::size_t k = start.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(start[i] - start[j]) < 1e-12 * std::max(1.0, std::abs(start[i])))
                start[i] += std::polar(1e-9 * std::max(1.0, std::abs(start[i])), 0.7 * static_cast<double>(i + 1));
    std::vector<hp_complex> z;
    for (const auto& s : start) z.emplace_back(s.real(), s.imag());

    const hp_real tol("1e-40");
    hp_real worst = 0;
    for (int it = 0; it < 500; ++it) {
        worst = 0;
        for (std::size_t i = 0; i < k; ++i) {
            hp_complex p = 0, dp = 0;
            for (std::size_t m = c.size(); m-- > 0;) {
                dp = dp * z[i] + p;
                p = p * z[i] + c[m];
            }
            if (p == hp_complex(0)) continue;
            const hp_complex ratio = p / dp;
            hp_complex repulsion = 0;
            for (std::size_t j = 0; j < k; ++j)
                if (j != i) repulsion += hp_complex(1) / (z[i] - z[j]);
            const hp_complex step = ratio / (hp_complex(1) - ratio * repulsion);
            z[i] -= step;
            const hp_real size = abs(z[i]);
            const hp_real rel = hp_real(abs(step)) / (size > 1 ? size : hp_real(1));
            if (rel > worst) worst = rel;
        }
        if (worst < tol) break;
    }
    last_step = worst.convert_to<double>();
    std::vector<cplx> out;
    for (const auto& r : z) out.emplace_back(r.real().convert_to<double>(), r.imag().convert_to<double>());
    return out;
}

cplx affine_image(const ComplexLift& F, cplx z) {
    CVec2 w = F(CVec2{1.0, z});
    return w.z1 / w.z0;
}

cplx affine_derivative(const ComplexLift& F, cplx z) {
    // f = F1(1,z)/F0(1,z); differentiate the dehomogenized forms.
    auto eval = [&](const std::vector<cplx>& c, cplx* d) {
        cplx p = 0, dp = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            dp = dp * z + p;
            p = p * z + c[i];
        }
        *d = dp;
        return p;
    };
    cplx d0, d1;
    cplx v0 = eval(F.F0, &d0), v1 = eval(F.F1, &d1);
    return (d1 * v0 - v1 * d0) / (v0 * v0);
}

}  // namespace

std::vector<cplx> numeric_roots(const UniPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<double> c;
    for (const auto& x : p.coeffs()) c.push_back(x.get_d());
    double step = 0;
    return polynomial_roots(c, step);
}

CVec2 ComplexLift::operator()(const CVec2& z) const { return {eval_form(F0, z), eval_form(F1, z)}; }

ComplexLift ComplexLift::scaled(cplx c) const {
    ComplexLift L = *this;
    for (auto& x : L.F0) x *= c;
    for (auto& x : L.F1) x *= c;
    return L;
}

GreenEval escape_rate(const ComplexLift& F, const CVec2& Z, unsigned iters) {
    GreenEval g;
    const double d = F.degree();
    double acc = std::log(Z.norm());
    CVec2 W = Z.unit();
    double weight = 1.0, last = 0.0;
    for (unsigned k = 1; k <= iters; ++k) {
        CVec2 V = F(W);
        const double s = V.norm();
        if (!(s > 0) || !std::isfinite(s)) {
            g.converged = false;
            break;
        }
        weight /= d;
        last = std::log(s);
        acc += last * weight;
        W = {V.z0 / s, V.z1 / s};
        g.iterations = k;
    }
    g.log_accumulator = acc - std::log(Z.norm());
    g.value = acc;
    // The tail sum_{j > n} d^-j log|F(W_j)| is bounded by the last increment's scale.
    g.error_estimate = std::fabs(last) * weight / (d - 1.0);
    return g;
}

double periodic_escape_rate(const ComplexLift& F, const CVec2& Z, unsigned n) {
    // F^n(Z/|Z|) = prod_k s_k^(d^(n-k)) W_n with W_n close to Z/|Z|.
    const double d = F.degree();
    double log_growth = 0;
    CVec2 W = Z.unit();
    for (unsigned k = 1; k <= n; ++k) {
        const CVec2 V = F(W);
        const double s = V.norm();
        log_growth += std::log(s) * std::pow(d, n - k);
        W = {V.z0 / s, V.z1 / s};
    }
    return log_growth / (std::pow(d, n) - 1.0) + std::log(Z.norm());
}

PeriodicPoints periodic_points(const RatMapQ& f, unsigned n) {
    Normalized norm = normalize_infinity(f, n);
    const RatMapQ& g = norm.map;
    const unsigned d = g.degree();
    const BinForm<Integer> phi = dynatomic(g.lift(), n);
    const double c = unit_resultant_scale(g.rho(), d);

    PeriodicPoints out{g, norm.conjugation, ComplexLift::from(g.lift(), c), {}, 0.0, 0.0, 0.0};
    double double_step = 0;
    out.roots = aberth_refine(phi.coeffs(), polynomial_roots(scaled_coefficients(phi), double_step), out.max_newton_step);

    const double e = DegreeBook(d).coeff_degree(n).get_d();
    double lk = log_abs(phi.y_lead()) + e * std::log(c);
    for (const auto& z : out.roots) lk += 0.5 * std::log1p(std::norm(z));
    out.log_kappa = lk;

    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < out.roots.size(); ++i)
        for (std::size_t j = i + 1; j < out.roots.size(); ++j)
            sep = std::min(sep, std::abs(wedge(unit_lift(out.roots[i]), unit_lift(out.roots[j]))));
    out.min_separation = sep;
    return out;
}

GreenSum fixed_point_sum(const RatMapQ& f, unsigned n) {
    const PeriodicPoints pts = periodic_points(f, n);
    GreenSum out;
    double s = pts.log_kappa;
    for (const auto& z : pts.roots) s += periodic_escape_rate(pts.lift, unit_lift(z), n);
    out.sum = s;
    out.residual = std::fabs(s);
    out.points = pts.roots.size();
    out.min_separation = pts.min_separation;
    return out;
}

std::vector<KernelCheck> multiplier_kernel_check(const RatMapQ& f) {
    const PeriodicPoints pts = periodic_points(f, 1);
    std::vector<double> G;
    for (const auto& z : pts.roots) G.push_back(periodic_escape_rate(pts.lift, unit_lift(z), 1));
    std::vector<KernelCheck> out;
    for (std::size_t i = 0; i < pts.roots.size(); ++i) {
        KernelCheck kc;
        kc.point = pts.roots[i];
        kc.multiplier = affine_derivative(pts.lift, kc.point);
        if (std::abs(kc.multiplier - 1.0) < 1e-6) continue;
        kc.lhs = std::log(std::abs(kc.multiplier - 1.0));
        double rhs = 0;
        for (std::size_t j = 0; j < pts.roots.size(); ++j) {
            if (j == i) continue;
            rhs += std::log(std::abs(wedge(unit_lift(pts.roots[i]), unit_lift(pts.roots[j])))) - G[i] - G[j];
        }
        kc.rhs = rhs;
        kc.residual = std::fabs(kc.lhs - rhs);
        out.push_back(kc);
    }
    return out;
}

CycleFormCheck cycle_form_check(const RatMapQ& f, unsigned n) {
    const PeriodicPoints pts = periodic_points(f, n);
    const std::size_t k = pts.roots.size();
    std::vector<std::size_t> next(k);
    for (std::size_t i = 0; i < k; ++i) {
        const CVec2 image = unit_lift(affine_image(pts.lift, pts.roots[i]));
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < k; ++j) {
            double dist = std::abs(wedge(image, unit_lift(pts.roots[j])));
            if (dist < best) {
                best = dist;
                next[i] = j;
            }
        }
    }
    std::vector<long> cycle_of(k, -1);
    long cycles = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (cycle_of[i] >= 0) continue;
        std::size_t j = i;
        unsigned len = 0;
        while (cycle_of[j] < 0) {
            cycle_of[j] = cycles;
            j = next[j];
            ++len;
        }
        if (j != i || len != n)
            throw std::runtime_error("numeric cycle grouping failed: period-" + std::to_string(n) +
                                     " points are not separated well enough");
        ++cycles;
    }

    CycleFormCheck out;
    out.cycles = static_cast<std::size_t>(cycles);
    const double dn = static_cast<double>(k);
    double rhs = 2.0 * (dn - n) * pts.log_kappa;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (cycle_of[i] != cycle_of[j])
                rhs += std::log(std::abs(wedge(unit_lift(pts.roots[i]), unit_lift(pts.roots[j]))));
    const Rational dnn = delta_diag(f, n);
    out.log_lhs = n * (log_abs(dnn.get_num()) - log_abs(dnn.get_den()));
    out.log_rhs = rhs;
    out.relative_error = std::fabs(std::expm1(rhs - out.log_lhs));
    return out;
}

}  // namespace paradyn
