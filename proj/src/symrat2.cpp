#include "paradyn/symrat2.hpp"

#include <chrono>
#include <sstream>

namespace paradyn {

const Rat2Symbols& Rat2Symbols::get() {
    static const Rat2Symbols s = [] {
        RingPtr ring = make_ring({"a", "b", "c", "p", "q", "r"});
        auto v = [&](std::size_t i) { return MPoly::variable(ring, i); };
        HomPair<MPoly> F(BinForm<MPoly>({v(0), v(1), v(2)}), BinForm<MPoly>({v(3), v(4), v(5)}));
        return Rat2Symbols{ring, F};
    }();
    return s;
}

MPoly rho2() { return rho(Rat2Symbols::get().F); }

BinForm<MPoly> phi1_form() { return fix_form(Rat2Symbols::get().F, 1); }

BinForm<MPoly> phi2_form() { return dynatomic(Rat2Symbols::get().F, 2); }

MPoly disc_phi1() { return hom_discriminant(phi1_form()); }

MPoly disc_phi2() { return hom_discriminant(phi2_form()); }

FactorCheck res_phi2_phi1() {
    FactorCheck out;
    out.resultant = sylvester_resultant(phi2_form(), phi1_form());
    out.quotient = exact_div(out.resultant, rho2());
    out.matches = out.quotient == disc_phi2();
    return out;
}

namespace {

const MPoly& zero_poly() {
    static const MPoly z(Rat2Symbols::get().ring);
    return z;
}

MPoly constant(long v) { return MPoly(Rat2Symbols::get().ring, Integer(v)); }

// X * (F0 dF1/dY - F1 dF0/dY): numerator of the one-step derivative.
BinForm<MPoly> derivative_numerator() {
    const auto& F = Rat2Symbols::get().F;
    BinForm<MPoly> A = F.F0 * F.F1.derivative_y() - F.F1 * F.F0.derivative_y();
    return BinForm<MPoly>::X(zero_poly()) * A;
}

BinForm<MPoly> f0_squared() {
    const auto& F = Rat2Symbols::get().F;
    return F.F0 * F.F0;
}

// Equality of p up to sign: returns +1, -1 or 0.
int sign_relation(const MPoly& lhs, const MPoly& rhs) {
    if (lhs == rhs) return 1;
    if (lhs == -rhs) return -1;
    return 0;
}

std::string sign_text(int s) { return s > 0 ? "sign +" : (s < 0 ? "sign -" : "no sign relation"); }

}  // namespace

MPoly fixed_multiplier_numerator(long T) {
    BinForm<MPoly> W = derivative_numerator() - constant(T) * f0_squared();
    return sylvester_resultant(phi1_form(), W);
}

bool SymbolicReport::ok() const {
    for (const auto& l : lines)
        if (!l.holds) return false;
    return !lines.empty();
}

std::string SymbolicReport::str() const {
    std::ostringstream os;
    for (const auto& l : lines) {
        os << l.name << "  " << (l.holds ? "PASS" : "FAIL");
        if (!l.detail.empty()) os << "  (" << l.detail << ')';
        os << '\n';
    }
    return os.str();
}

SymbolicReport theorem_symbolic(unsigned n) {
    if (n != 1 && n != 2) throw std::invalid_argument("symbolic verification is available for n = 1, 2");
    SymbolicReport rep;
    rep.n = n;
    const MPoly r2 = rho2();
    const MPoly W = sylvester_resultant(phi1_form(), Rat2Symbols::get().F.F0);
    const MPoly V = W * W;  // Res(Phi_1**, F0^2)

    if (n == 1) {
        // Delta_{1,1} = p_1**(1) = -U(1)/V and D_1** = Disc(Phi_1**)/rho2.
        const MPoly U1 = fixed_multiplier_numerator(1);
        int s = sign_relation(U1 * r2, disc_phi1() * V);
        rep.lines.push_back({"Delta_{1,1} = +-D_1** = +-Disc(Phi_1**)/rho2", s != 0, sign_text(s)});
        return rep;
    }

    const MPoly d2 = disc_phi2();
    const FactorCheck fc = res_phi2_phi1();
    rep.lines.push_back({"Res(Phi_2**, Phi_1**) = rho2 * Disc(Phi_2**)", fc.matches, ""});
    // R_{2,1}** = rho2^-2 Res and D_2** = rho2^-1 Disc: equal iff Res = rho2 * Disc.
    rep.lines.push_back({"R_{2,1}** = D_2**", fc.resultant == r2 * d2, ""});

    const MPoly Um1 = fixed_multiplier_numerator(-1);
    int s21 = sign_relation(Um1 * r2, d2 * V);
    rep.lines.push_back({"Delta_{2,1} = +-Disc(Phi_2**)/rho2", s21 != 0, sign_text(s21)});

    // Multiplier of the 2-cycle: lambda = Res(Phi_2**, X*A) / Res(Phi_2**, F0)^2.
    const BinForm<MPoly> phi2 = phi2_form();
    const MPoly P = sylvester_resultant(phi2, derivative_numerator());
    const MPoly Qh = sylvester_resultant(phi2, Rat2Symbols::get().F.F0);
    const MPoly Q = Qh * Qh;
    // Delta_{2,2}^2 = (lambda - 1)^2 / Delta_{2,1}^2 = 1 iff (P - Q) V = +-U(-1) Q.
    int s22 = sign_relation((P - Q) * V, Um1 * Q);
    rep.lines.push_back({"Delta_{2,2}^2 = 1", s22 != 0, sign_text(s22)});
    return rep;
}

StretchResult delta31_stretch(double budget_seconds) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    StretchResult out;
    const MPoly r2 = rho2();
    const MPoly W = sylvester_resultant(phi1_form(), Rat2Symbols::get().F.F0);

    // Cyclic route: Delta_{3,1} = p_1**(w) p_1**(w^2) = U(w) U(w^2) / W^4 for w^2 + w + 1 = 0.
    std::vector<MPoly> U;
    for (long t : {0L, 1L, -1L, 2L}) U.push_back(fixed_multiplier_numerator(t));
    // Coefficients of U(T) = u0 + u1 T + u2 T^2 + u3 T^3 from the values at 0, 1, -1, 2.
    const MPoly& u0 = U[0];
    const MPoly u2 = exact_div(U[1] + U[2] - constant(2) * u0, constant(2));
    const MPoly s13 = U[1] - u0 - u2;                                     // u1 + u3
    const MPoly u3 = exact_div(U[3] - u0 - constant(4) * u2 - constant(2) * s13, constant(6));
    const MPoly u1 = s13 - u3;
    const MPoly beta = u0 + u3 - u2, alpha = u1 - u2;
    const MPoly norm = alpha * alpha - alpha * beta + beta * beta;
    const MPoly W2 = W * W;
    const MPoly scale = exact_div(W2 * W2, r2 * r2);
    MPoly numerator = exact_div(norm, scale);
    out.numerator = numerator;
    out.note = "cyclic route";

    const double elapsed = std::chrono::duration<double>(clock::now() - start).count();
    if (elapsed > budget_seconds) {
        out.seconds = elapsed;
        out.note += "; budget exhausted before the resultant route";
        return out;
    }
    const MPoly res = sylvester_resultant(dynatomic(Rat2Symbols::get().F, 3), phi1_form());
    try {
        const MPoly q = exact_div(res, r2.pow(4));
        out.divisible = true;
        out.sylvester_route = true;
        out.sign_vs_cyclic = sign_relation(q, numerator);
        out.note += "; resultant route";
    } catch (const InexactDivision&) {
        out.note += "; Res(Phi_3**, Phi_1**) is not divisible by rho2^4";
    }
    out.seconds = std::chrono::duration<double>(clock::now() - start).count();
    if (out.seconds > budget_seconds) out.note += "; over budget";
    return out;
}

}  // namespace paradyn
