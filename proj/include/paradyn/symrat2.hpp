#pragma once

// Symbolic computations for the generic quadratic map
// [aX^2 + bXY + cY^2 : pX^2 + qXY + rY^2] over Z[a, b, c, p, q, r].

#include "paradyn/binform.hpp"
#include "paradyn/exactring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace paradyn {

struct Rat2Symbols {
    RingPtr ring;  // variables in the order a, b, c, p, q, r
    HomPair<MPoly> F;

    static const Rat2Symbols& get();
};

MPoly rho2();
/// Phi_1 = Phi_1** = Y F0 - X F1 and the period-2 dynatomic form Phi_2**.
BinForm<MPoly> phi1_form();
BinForm<MPoly> phi2_form();

MPoly disc_phi1();
MPoly disc_phi2();

struct FactorCheck {
    MPoly resultant;  // Res(Phi_2**, Phi_1**)
    MPoly quotient;   // resultant / rho2
    bool matches = false;
};

/// Res(Phi_2**, Phi_1**) by Sylvester, divided exactly by rho2 and compared with disc_phi2().
FactorCheck res_phi2_phi1();

struct SymbolicLine {
    std::string name;
    bool holds = false;
    std::string detail;
};

struct SymbolicReport {
    unsigned n = 0;
    std::vector<SymbolicLine> lines;

    bool ok() const;
    std::string str() const;
};

/// The identities relating D_n**, R_{2,1}** and the cyclic resultants,
/// checked as polynomial identities after clearing denominators (n in {1, 2}).
SymbolicReport theorem_symbolic(unsigned n);

/// Res(Phi_1**, X*A - T*F0^2) where f' = X*A/F0^2 on the fixed points;
/// dividing by Res(Phi_1**, F0)^2 gives prod_j (lambda_j - T).
MPoly fixed_multiplier_numerator(long T);

struct StretchResult {
    std::optional<MPoly> numerator;  // rho2^2 * Delta_{3,1}, up to sign
    bool sylvester_route = false;    // computed from Res(Phi_3**, Phi_1**)
    bool divisible = false;          // Res(Phi_3**, Phi_1**) divisible by rho2^4
    int sign_vs_cyclic = 0;          // +-1 when both routes ran
    double seconds = 0;
    std::string note;
};

/// rho2^2 * Delta_{3,1} from the cyclic-resultant route, and, unless the
/// elapsed time would exceed `budget_seconds`, independently as
/// Res(Phi_3**, Phi_1**) / rho2^4.
StretchResult delta31_stretch(double budget_seconds = 1800);

}  // namespace paradyn
