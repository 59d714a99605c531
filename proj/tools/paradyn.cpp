#include "paradyn/corpus.hpp"
#include "paradyn/mapfile.hpp"
#include "paradyn/multiplier.hpp"
#include "paradyn/potential.hpp"
#include "paradyn/raster.hpp"
#include "paradyn/symrat2.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#ifndef PARADYN_GOLDEN_DIR
#define PARADYN_GOLDEN_DIR "tests/golden"
#endif

using namespace paradyn;

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string form_text(const BinForm<Integer>& P) {
    static const RingPtr xy = make_ring({"X", "Y"});
    std::vector<Term> terms;
    const unsigned k = P.degree();
    for (unsigned i = 0; i <= k; ++i) {
        Monomial m(2);
        m[0] = k - i;
        m[1] = i;
        terms.push_back({m, P.coeff(i)});
    }
    return MPoly::from_terms(xy, std::move(terms)).str();
}

std::string read_golden(const std::string& dir, const std::string& name) {
    std::ifstream in(dir + "/" + name + ".txt");
    if (!in) throw std::runtime_error("missing golden file " + dir + "/" + name + ".txt");
    std::string line, body;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') body = line;
    return body;
}

int cmd_dynatomic(const std::string& map_path, unsigned n, bool symbolic) {
    if (symbolic) {
        const BinForm<MPoly> phi = n == 1 ? phi1_form() : dynatomic(Rat2Symbols::get().F, n);
        const unsigned k = phi.degree();
        for (unsigned i = 0; i <= k; ++i) {
            std::cout << "[X^" << (k - i) << "*Y^" << i << "] " << phi.coeff(i).str() << '\n';
        }
        return 0;
    }
    const RatMapQ f = read_map_file(map_path).to_map();
    std::cout << form_text(dynatomic(f.lift(), n)) << '\n';
    return 0;
}

bool verify_one(const RatMapQ& f, unsigned n, std::optional<unsigned> ell, bool print) {
    const TheoremReport rep = verify_theorem(f, n);
    if (print) {
        std::cout << rep.str();
        if (ell && *ell < n && n % *ell == 0)
            std::cout << "Delta_{" << n << "," << *ell << "} = " << rep.delta.at(*ell).get_str() << '\n';
        if (rep.delta_nn) std::cout << "Delta_{" << n << "," << n << "} = " << rep.delta_nn->get_str() << '\n';
    }
    return rep.ok();
}

int cmd_verify(const std::string& map_path, std::vector<unsigned> periods, std::optional<unsigned> ell,
               std::size_t corpus, std::uint64_t seed, unsigned degree) {
    if (corpus == 0) {
        const RatMapQ f = read_map_file(map_path).to_map();
        if (periods.empty()) periods = {1};
        bool ok = true;
        for (auto n : periods) ok = verify_one(f, n, ell, true) && ok;
        return ok ? 0 : kFail;
    }
    if (periods.empty()) periods = degree == 2 ? std::vector<unsigned>{1, 2, 3, 4} : std::vector<unsigned>{1, 2, 3};
    const auto maps = random_corpus(degree, corpus, seed);
    std::size_t passed = 0, checks = 0;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        bool map_ok = true;
        for (auto n : periods) {
            ++checks;
            const bool ok = verify_one(maps[i], n, ell, false);
            passed += ok;
            map_ok = map_ok && ok;
        }
        std::cout << "map " << i << "  ";
        std::cout << "F0:";
        for (const auto& c : maps[i].lift().F0.coeffs()) std::cout << ' ' << c;
        std::cout << "  F1:";
        for (const auto& c : maps[i].lift().F1.coeffs()) std::cout << ' ' << c;
        std::cout << "  " << (map_ok ? "PASS" : "FAIL") << '\n';
    }
    std::cout << passed << "/" << checks << " identities verified\n";
    return passed == checks ? 0 : kFail;
}

int cmd_rat2(const std::string& target, bool stretch, const std::string& golden_dir) {
    auto report = [&](const std::string& name, const MPoly& p, bool up_to_sign) {
        const std::string golden = read_golden(golden_dir, name);
        std::cout << p.str() << '\n';
        bool match = p.str() == golden;
        if (!match && up_to_sign && (-p).str() == golden) {
            std::cout << "golden: MATCH (up to sign)\n";
            return 0;
        }
        std::cout << "golden: " << (match ? "MATCH" : "MISMATCH") << '\n';
        return match ? 0 : kFail;
    };
    if (target == "rho2") return report("rho2", rho2(), false);
    if (target == "disc1") return report("disc_phi1", disc_phi1(), false);
    if (target == "disc2") return report("disc_phi2", disc_phi2(), false);
    if (target == "res21") {
        const FactorCheck fc = res_phi2_phi1();
        int rc = report("res_phi2_phi1", fc.resultant, false);
        std::cout << "Res(Phi_2**, Phi_1**) / rho2 = Disc(Phi_2**): " << (fc.matches ? "PASS" : "FAIL") << '\n';
        const SymbolicReport sr = theorem_symbolic(2);
        std::cout << sr.str();
        return (rc == 0 && fc.matches && sr.ok()) ? 0 : kFail;
    }
    if (target == "delta31") {
        if (!stretch) {
            std::cerr << "delta31 is a long computation; pass --stretch to run it\n";
            return kUsage;
        }
        const StretchResult sr = delta31_stretch();
        std::cerr << sr.note << " (" << sr.seconds << " s)\n";
        if (!sr.numerator) return kFail;
        int rc = report("delta31_numerator", *sr.numerator, true);
        if (sr.sylvester_route) {
            std::cout << "Res(Phi_3**, Phi_1**) / rho2^4 agrees with the cyclic route: "
                      << (sr.sign_vs_cyclic != 0 ? "PASS" : "FAIL") << '\n';
            if (sr.sign_vs_cyclic == 0) rc = kFail;
        }
        return rc;
    }
    std::cerr << "unknown rat2 target: " << target << " (rho2, disc1, disc2, res21, delta31)\n";
    return kUsage;
}

int cmd_green_check(const std::string& map_path, unsigned n, double tol, bool cycles) {
    const RatMapQ f = read_map_file(map_path).to_map();
    const ComplexLift L = ComplexLift::from(f.lift(), unit_resultant_scale(f.rho(), f.degree()));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double pull = 0;
    for (int i = 0; i < 1000; ++i) {
        CVec2 Z{{u(rng), u(rng)}, {u(rng), u(rng)}};
        pull = std::max(pull, std::fabs(escape_rate(L, L(Z)).value - f.degree() * escape_rate(L, Z).value));
    }
    const GreenSum gs = fixed_point_sum(f, n);
    double kernel = 0;
    for (const auto& k : multiplier_kernel_check(f)) kernel = std::max(kernel, k.residual);
    bool ok = true;
    auto line = [&](const std::string& name, double r) {
        const bool pass = r < tol;
        ok = ok && pass;
        std::cout << name << "  residual = " << r << "  " << (pass ? "PASS" : "FAIL") << '\n';
    };
    line("pullback G(F(Z)) = d G(Z)", pull);
    line("sum of G over period-" + std::to_string(n) + " points", gs.residual);
    line("multiplier kernel at simple fixed points", kernel);
    if (cycles) line("cycle forms against |Delta_{n,n}|^n", cycle_form_check(f, n).relative_error);
    return ok ? 0 : kFail;
}

std::pair<double, double> parse_center(const std::string& s) {
    auto comma = s.find(',');
    const Rational re = parse_rational(s.substr(0, comma));
    const Rational im = comma == std::string::npos ? Rational(0) : parse_rational(s.substr(comma + 1));
    return {re.get_d(), im.get_d()};
}

int cmd_raster(RasterConfig cfg, const std::string& center, const std::string& px, const std::string& out) {
    if (!center.empty()) std::tie(cfg.center_re, cfg.center_im) = parse_center(center);
    if (!px.empty()) {
        auto x = px.find('x');
        cfg.width = static_cast<unsigned>(std::stoul(px.substr(0, x)));
        cfg.height = x == std::string::npos ? cfg.width : static_cast<unsigned>(std::stoul(px.substr(x + 1)));
    }
    const Raster r = render(cfg);
    for (const auto& o : r.overlays) {
        std::cerr << (o.kind == OverlayPoint::Kind::Parabolic ? "parabolic" : "superattracting") << " n=" << o.period
                  << " t=";
        if (o.exact)
            std::cerr << o.exact->get_str();
        else if (o.t.imag() == 0.0)
            std::cerr << o.t.real();
        else
            std::cerr << o.t.real() << (o.t.imag() < 0 ? "-" : "+") << std::fabs(o.t.imag()) << "i";
        std::cerr << '\n';
    }
    const std::string bytes = r.ppm();
    if (out.empty() || out == "-") {
        std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + out);
        f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dynatomic discriminants, multiplier resultants and numeric checks for rational maps"};
    app.require_subcommand(1);

    std::string map_path, golden_dir = PARADYN_GOLDEN_DIR, out, center, px, target;
    unsigned n = 1, degree = 2;
    std::vector<unsigned> periods;
    std::optional<unsigned> ell;
    std::size_t corpus = 0;
    std::uint64_t seed = 7;
    bool symbolic = false, stretch = false, cycles = false;
    double tol = 1e-6;
    RasterConfig rc;

    auto* dyn = app.add_subcommand("dynatomic", "print the dynatomic form Phi_n**");
    dyn->add_option("--map", map_path, "map file");
    dyn->add_option("--n", n, "period")->check(CLI::PositiveNumber);
    dyn->add_flag("--symbolic", symbolic, "generic quadratic map over Z[a,b,c,p,q,r]");

    auto* ver = app.add_subcommand("verify", "check the discriminant and resultant factorizations exactly");
    ver->add_option("--map", map_path, "map file");
    ver->add_option("--n", periods, "period(s)")->delimiter(',');
    ver->add_option("--ell", ell, "also print Delta_{n,ell}");
    ver->add_option("--corpus", corpus, "number of seeded random maps");
    ver->add_option("--seed", seed, "corpus seed");
    ver->add_option("--degree", degree, "corpus map degree")->check(CLI::Range(2u, 16u));

    auto* r2 = app.add_subcommand("rat2", "symbolic quadratic-map polynomials with golden comparison");
    r2->add_option("target", target, "rho2 | disc1 | disc2 | res21 | delta31")->required();
    r2->add_flag("--stretch", stretch, "allow the long delta31 computation");
    r2->add_option("--golden", golden_dir, "directory of golden files");

    auto* gc = app.add_subcommand("green-check", "floating-point escape-rate identities");
    gc->add_option("--map", map_path, "map file")->required();
    gc->add_option("--n", n, "period")->check(CLI::PositiveNumber);
    gc->add_option("--tol", tol, "residual tolerance");
    gc->add_flag("--cycles", cycles, "include the cycle-form check");

    auto* ras = app.add_subcommand("raster", "PPM picture of z^2 + t with parabolic and superattracting overlays");
    ras->add_option("--center", center, "center re,im");
    ras->add_option("--width", rc.half_width, "half-width along the real axis");
    ras->add_option("--px", px, "pixels, N or WxH");
    ras->add_option("--maxiter", rc.max_iter, "escape-time iterations");
    ras->add_option("--radius", rc.escape_radius, "escape radius");
    ras->add_option("--periods", rc.periods, "overlay periods")->delimiter(',');
    ras->add_option("-o,--o,--output", out, "output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*dyn) {
            if (!symbolic && map_path.empty()) throw CLI::RequiredError("--map");
            return cmd_dynatomic(map_path, n, symbolic);
        }
        if (*ver) {
            if (corpus == 0 && map_path.empty()) throw CLI::RequiredError("--map or --corpus");
            return cmd_verify(map_path, periods, ell, corpus, seed, degree);
        }
        if (*r2) return cmd_rat2(target, stretch, golden_dir);
        if (*gc) return cmd_green_check(map_path, n, tol, cycles);
        if (*ras) return cmd_raster(rc, center, px, out);
    } catch (const CLI::Error& e) {
        app.exit(e);
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DegenerateMap& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
