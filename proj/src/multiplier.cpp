#include "paradyn/multiplier.hpp"

#include <sstream>

namespace paradyn {

std::string SL2::str() const {
    std::ostringstream os;
    os << "[[" << a[0] << ", " << a[1] << "], [" << a[2] << ", " << a[3] << "]]";
    return os.str();
}

namespace {

Integer lift_content(const HomPair<Integer>& F) {
    Integer g(0);
    for (const auto* form : {&F.F0, &F.F1})
        for (const auto& c : form->coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

BinForm<Integer> divide_form(const BinForm<Integer>& P, const Integer& g) {
    std::vector<Integer> v(P.coeffs());
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return BinForm<Integer>(std::move(v));
}

UniPoly dehomogenize(const BinForm<Integer>& P) {
    std::vector<Rational> v;
    v.reserve(P.coeffs().size());
    for (const auto& c : P.coeffs()) v.emplace_back(c);
    return UniPoly(std::move(v));
}

// True when f^n does not fix infinity, tracked exactly along the orbit of (0, 1).
bool infinity_not_fixed(const HomPair<Integer>& F, unsigned n) {
    Integer x(0), y(1);
    for (unsigned k = 0; k < n; ++k) {
        auto [u, v] = F(x, y);
        Integer g;
        mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
        x = u / g;
        y = v / g;
    }
    return sgn(x) != 0;
}

// Coefficients (length k) of h mod phi, in the basis 1, z, ..., z^(k-1).
std::vector<Rational> reduce_mod(const UniPoly& h, const UniPoly& phi) {
    const auto k = static_cast<std::size_t>(phi.degree());
    UniPoly r = h.divmod(phi).second;
    std::vector<Rational> v(k, Rational(0));
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) v[i] = r.coeffs()[i];
    return v;
}

// Matrix of multiplication by h on Q[z]/(phi).
Matrix<Rational> multiplication_matrix(const UniPoly& h, const UniPoly& phi) {
    const auto k = static_cast<std::size_t>(phi.degree());
    Matrix<Rational> m(k, k, Rational(0));
    std::vector<Rational> col = reduce_mod(h, phi);
    const Rational inv_lead = 1 / phi.lead();
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < k; ++i) m(i, j) = col[i];
        Rational top = col[k - 1];
        for (std::size_t i = k - 1; i > 0; --i) col[i] = col[i - 1];
        col[0] = 0;
        if (sgn(top) != 0) {
            Rational s = top * inv_lead;
            for (std::size_t i = 0; i < k; ++i) col[i] -= s * phi.coeffs()[i];
        }
    }
    return m;
}

Integer denominator_lcm(const Matrix<Rational>& a, Integer acc) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), a(i, j).get_den_mpz_t());
    return acc;
}

Matrix<Integer> scaled(const Matrix<Rational>& a, const Integer& L) {
    Matrix<Integer> m(a.rows(), a.cols(), Integer(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Rational v = a(i, j) * L;
            m(i, j) = v.get_num();
        }
    return m;
}

Rational abs_pow(const Rational& x, unsigned long e) { return rpow(abs(x), static_cast<long>(e)); }

}  // namespace

RatMapQ::RatMapQ(HomPair<Integer> lift) : lift_(std::move(lift)) {
    if (lift_.degree() < 2) throw DegenerateMap("map degree must be at least 2");
    Integer g = lift_content(lift_);
    if (sgn(g) == 0) throw DegenerateMap("zero lift");
    if (g != 1) lift_ = HomPair<Integer>(divide_form(lift_.F0, g), divide_form(lift_.F1, g));
    rho_ = paradyn::rho(lift_);
    if (sgn(rho_) == 0) throw DegenerateMap("components share a root: resultant vanishes, degree drops");
}

RatMapQ RatMapQ::from_rational(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("lift rows differ in length");
    Integer L(1);
    for (const auto* row : {&a, &b})
        for (const auto& c : *row) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
    auto clear = [&](const std::vector<Rational>& row) {
        std::vector<Integer> v;
        for (const auto& c : row) v.emplace_back(Rational(c * L).get_num());
        return BinForm<Integer>(std::move(v));
    };
    return RatMapQ(HomPair<Integer>(clear(a), clear(b)));
}

RatMapQ RatMapQ::from_integers(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<Integer> va(a.begin(), a.end()), vb(b.begin(), b.end());
    return RatMapQ(HomPair<Integer>(BinForm<Integer>(va), BinForm<Integer>(vb)));
}

RatMapQ conjugate(const RatMapQ& f, const SL2& A) {
    if (A.det() != 1) throw std::invalid_argument("conjugation matrix must have determinant 1");
    const Integer z(0);
    const SL2 B = A.inverse();
    BinForm<Integer> L0({Integer(B.a[0]), Integer(B.a[1])});
    BinForm<Integer> L1({Integer(B.a[2]), Integer(B.a[3])});
    const auto& F = f.lift();
    BinForm<Integer> H0 = F.F0.substitute(L0, L1), H1 = F.F1.substitute(L0, L1);
    BinForm<Integer> G0 = Integer(A.a[0]) * H0 + Integer(A.a[1]) * H1;
    BinForm<Integer> G1 = Integer(A.a[2]) * H0 + Integer(A.a[3]) * H1;
    return RatMapQ(HomPair<Integer>(std::move(G0), std::move(G1)));
}

Normalized normalize_infinity(const RatMapQ& f, unsigned n) {
    constexpr long kShearBound = 64;
    std::vector<SL2> ladder{SL2{}};
    for (long t = 1; t <= kShearBound; ++t) {
        ladder.push_back(SL2::shear(t));
        ladder.push_back(SL2::shear(-t));
    }
    ladder.push_back(SL2::rotation());
    for (long t = 1; t <= kShearBound; ++t) {
        ladder.push_back(SL2::rotation() * SL2::shear(t));
        ladder.push_back(SL2::rotation() * SL2::shear(-t));
    }
    for (const auto& A : ladder) {
        if (A.is_identity()) {
            if (infinity_not_fixed(f.lift(), n)) return {f, A};
            continue;
        }
        RatMapQ g = conjugate(f, A);
        if (infinity_not_fixed(g.lift(), n)) return {g, A};
    }
    throw std::runtime_error("no conjugation in the search ladder moves infinity off the period-" +
                             std::to_string(n) + " locus");
}

namespace {

// Data shared by both evaluation routes: the dehomogenized dynatomic
// polynomial phi and the derivative of the iterate written as A/B.
struct MultiplierSetup {
    UniPoly phi, Dq, A, B;
    unsigned iterate_degree = 0;
};

MultiplierSetup multiplier_setup(const RatMapQ& f, unsigned n) {
    if (n == 0) throw std::invalid_argument("period must be positive");
    const Normalized norm = normalize_infinity(f, n);
    const auto& F = norm.map.lift();
    const HomPair<Integer> Fn = iterate(F, n);
    MultiplierSetup s;
    s.phi = dehomogenize(dynatomic(F, n));
    const UniPoly N = dehomogenize(Fn.F1);
    s.Dq = dehomogenize(Fn.F0);
    s.A = N.derivative() * s.Dq - N * s.Dq.derivative();
    s.B = s.Dq * s.Dq;
    s.iterate_degree = Fn.degree();
    return s;
}

// det(A - T B) / det(B) on Q[z]/(phi) for each requested T.
std::vector<Rational> norm_route(const MultiplierSetup& s, const std::vector<Rational>& Ts) {
    const auto k = static_cast<std::size_t>(s.phi.degree());
    Matrix<Rational> MA = multiplication_matrix(s.A, s.phi), MB = multiplication_matrix(s.B, s.phi);
    Integer L = denominator_lcm(MB, denominator_lcm(MA, Integer(1)));
    for (const auto& t : Ts) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), t.get_den_mpz_t());
    const Matrix<Integer> IA = scaled(MA, L), IB = scaled(MB, L);
    const Integer detB = det(IB);
    if (sgn(detB) == 0) throw InvariantViolation("denominator of the iterate vanishes at a periodic point");
    std::vector<Rational> out;
    for (const auto& t : Ts) {
        // Scale rows by the denominator of t to stay integral: det(q A - p B) = q^k det(A - t B).
        const Integer p = t.get_num(), q = t.get_den();
        Matrix<Integer> W = IA;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) W(i, j) = q * IA(i, j) - p * IB(i, j);
        out.push_back(Rational(det(std::move(W))) / (Rational(detB) * rpow(Rational(q), static_cast<long>(k))));
    }
    return out;
}

std::vector<Rational> sylvester_route(const MultiplierSetup& s, const std::vector<Rational>& Ts) {
    const unsigned Dn = s.iterate_degree;
    const Rational den = resultant(s.phi, s.Dq, Dn);
    if (sgn(den) == 0) throw InvariantViolation("denominator of the iterate vanishes at a periodic point");
    const Rational den2 = den * den;
    std::vector<Rational> out;
    for (const auto& t : Ts) out.push_back(resultant(s.phi, s.A - t * s.B, 2 * Dn) / den2);
    return out;
}

}  // namespace

UniPoly multiplier_product(const RatMapQ& f, unsigned n, MultiplierRoute route) {
    const MultiplierSetup s = multiplier_setup(f, n);
    const auto k = static_cast<unsigned>(s.phi.degree());
    std::vector<Rational> nodes;
    for (unsigned t = 0; t <= k; ++t) nodes.emplace_back(t);
    const std::vector<Rational> values = route == MultiplierRoute::Norm ? norm_route(s, nodes) : sylvester_route(s, nodes);
    UniPoly M = interpolate(nodes, values);
    const Rational expected_lead = (k % 2 == 0) ? Rational(1) : Rational(-1);
    if (M.degree() != static_cast<long>(k) || M.lead() != expected_lead)
        throw InvariantViolation("multiplier product has unexpected degree or leading coefficient");
    return M;
}

Rational multiplier_product_value(const RatMapQ& f, unsigned n, const Rational& T) {
    return norm_route(multiplier_setup(f, n), {T}).front();
}

UniPoly nth_root_poly(const UniPoly& M, unsigned n) {
    if (n == 0) throw std::invalid_argument("root index must be positive");
    const long deg = M.degree();
    if (deg < 0) throw InvariantViolation("zero polynomial has no monic root");
    const UniPoly s = (deg % 2 == 0) ? M : -M;
    if (s.lead() != 1) throw InvariantViolation("sign-adjusted product is not monic");
    if (deg % static_cast<long>(n) != 0)
        throw InvariantViolation("degree " + std::to_string(deg) + " is not divisible by " + std::to_string(n));
    if (n == 1) return s;
    const long k = deg / static_cast<long>(n);
    std::vector<Rational> p(static_cast<std::size_t>(k + 1), Rational(0));
    p[static_cast<std::size_t>(k)] = 1;
    for (long j = 1; j <= k; ++j) {
        const UniPoly power = UniPoly(p).pow(n);
        const auto idx = static_cast<std::size_t>(deg - j);
        p[static_cast<std::size_t>(k - j)] = (s.coeff(idx) - power.coeff(idx)) / static_cast<long>(n);
    }
    UniPoly root(p);
    if (!(root.pow(n) == s)) throw InvariantViolation("multiplier product is not an exact n-th power");
    return root;
}

UniPoly mult_poly(const RatMapQ& f, unsigned n) { return nth_root_poly(multiplier_product(f, n), n); }

Rational delta_from_mult_poly(const UniPoly& p_ell, unsigned n, unsigned ell) {
    if (ell == 0 || ell >= n || n % ell != 0) throw std::invalid_argument("Delta_{n,ell} requires ell | n, ell < n");
    return resultant(cyclotomic(n / ell), p_ell);
}

Rational delta(const RatMapQ& f, unsigned n, unsigned ell) {
    if (ell == 0 || ell >= n || n % ell != 0) throw std::invalid_argument("Delta_{n,ell} requires ell | n, ell < n");
    return delta_from_mult_poly(mult_poly(f, ell), n, ell);
}

Rational delta_diag(const RatMapQ& f, unsigned n) {
    Rational value = mult_poly(f, n).eval(Rational(1));
    for (auto ell : proper_divisors(n)) {
        Rational dl = delta(f, n, ell);
        if (sgn(dl) == 0) throw DegenerateDelta(n, ell);
        value /= dl;
    }
    return value;
}

namespace {

RegValue regular(Integer raw, const Integer& rho, const Integer& k) {
    RegValue r;
    r.raw = std::move(raw);
    r.rho = rho;
    r.rho_power = k.get_ui();
    r.value = Rational(r.raw) / rpow(Rational(rho), static_cast<long>(r.rho_power));
    return r;
}

}  // namespace

RegValue D_star(const RatMapQ& f, unsigned n) {
    return regular(hom_discriminant(dynatomic(f.lift(), n)), f.rho(), norm_exponents(f.degree(), n));
}

RegValue R_star(const RatMapQ& f, unsigned n, unsigned ell) {
    return regular(sylvester_resultant(dynatomic(f.lift(), n), dynatomic(f.lift(), ell)), f.rho(),
                   norm_exponents(f.degree(), n, ell));
}

bool TheoremReport::ok() const {
    for (const auto& l : lines)
        if (!l.pass) return false;
    return !lines.empty();
}

std::string TheoremReport::str() const {
    std::ostringstream os;
    for (const auto& l : lines) {
        os << l.name << "  |LHS| = " << l.lhs.get_str() << "  |RHS| = " << l.rhs.get_str() << "  "
           << (l.pass ? "PASS" : "FAIL");
        if (!l.note.empty()) os << "  (" << l.note << ')';
        os << '\n';
    }
    return os.str();
}

TheoremReport verify_theorem(const RatMapQ& f, unsigned n) {
    TheoremReport rep;
    rep.n = n;
    const std::string ns = std::to_string(n);

    std::map<unsigned, UniPoly> p;
    for (auto m : divisors(n)) p.emplace(m, mult_poly(f, m));
    rep.p_at_one = p.at(n).eval(Rational(1));

    Rational signed_rhs_delta(1);  // prod Delta_{n,ell}^{n-ell}
    Rational cleared(1);           // prod |Delta_{n,ell}|^ell
    for (auto ell : proper_divisors(n)) {
        Rational dl = delta_from_mult_poly(p.at(ell), n, ell);
        rep.delta.emplace(ell, dl);
        if (sgn(dl) == 0) rep.degenerate = true;
        signed_rhs_delta *= rpow(dl, n - ell);
        cleared *= abs_pow(dl, ell);
    }

    rep.D = D_star(f, n);
    const Rational absD = abs(rep.D.value);

    if (!rep.degenerate) {
        Rational dnn = rep.p_at_one;
        for (const auto& [ell, dl] : rep.delta) dnn /= dl;
        rep.delta_nn = dnn;
        const Rational signed_rhs = rpow(dnn, n) * signed_rhs_delta;
        const Rational absR = abs(signed_rhs);
        rep.residual = absD - absR;
        if (sgn(signed_rhs) != 0 && sgn(rep.D.value) != 0) rep.sign = sgn(rep.D.value) * sgn(signed_rhs);
        rep.lines.push_back({"D_" + ns + "**", absD, absR, absD == absR, ""});
    } else {
        rep.residual = absD;
        rep.lines.push_back({"D_" + ns + "**", absD, Rational(0), sgn(absD) == 0, "a proper cyclic resultant vanishes"});
    }
    const Rational lhs_cleared = absD * cleared;
    const Rational rhs_cleared = abs_pow(rep.p_at_one, n);
    rep.lines.push_back({"D_" + ns + "** cleared", lhs_cleared, rhs_cleared, lhs_cleared == rhs_cleared, ""});

    for (unsigned ell = 1; ell < n; ++ell) {
        RegValue R = R_star(f, n, ell);
        const Rational absRv = abs(R.value);
        const std::string name = "R_{" + ns + "," + std::to_string(ell) + "}**";
        if (n % ell == 0) {
            const Rational target = abs_pow(rep.delta.at(ell), ell);
            rep.lines.push_back({name, absRv, target, absRv == target, ""});
        } else {
            rep.lines.push_back({name, absRv, Rational(1), absRv == 1, "ell does not divide n"});
        }
        rep.R.emplace(ell, std::move(R));
    }
    return rep;
}

std::optional<unsigned> minimal_rho_clearing(const Rational& value, const Integer& rho, unsigned limit) {
    Rational v = value;
    for (unsigned K = 0; K <= limit; ++K) {
        if (v.get_den() == 1) return K;
        v *= rho;
    }
    return std::nullopt;
}

}  // namespace paradyn
