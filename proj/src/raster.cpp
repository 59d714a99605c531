#include "paradyn/raster.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace paradyn {

RatMapQ quadratic_family_member(const Rational& t) {
    return RatMapQ::from_rational({Rational(1), Rational(0), Rational(0)}, {t, Rational(0), Rational(1)});
}

UniPoly parabolic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("period must be positive");
    // Multipliers have weight n when t has weight 2, so prod (lambda_j - 1)
    // over the finite period-n points has degree at most n * (#points) / 2.
    const long points = n == 1 ? 2 : formal_period_count(2, n).get_si();
    const long bound = n * points / 2;
    std::vector<Rational> nodes, values;
    for (long t = 0; t <= bound + 1; ++t) {
        nodes.emplace_back(t);
        values.push_back(multiplier_product_value(quadratic_family_member(Rational(t)), n, Rational(1)));
    }
    const Rational check_node = nodes.back(), check_value = values.back();
    nodes.pop_back();
    values.pop_back();
    UniPoly Q = interpolate(nodes, values);
    if (Q.eval(check_node) != check_value) throw InvariantViolation("parabolic polynomial exceeds its degree bound");
    const UniPoly M = Q.monic();
    return nth_root_poly(M.degree() % 2 ? -M : M, n);
}

UniPoly superattracting_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("period must be positive");
    const UniPoly t = UniPoly::linear(Rational(0), Rational(1));
    UniPoly z;  // 0
    for (unsigned k = 0; k < n; ++k) z = z * z + t;
    return z;
}

void RasterConfig::validate() const {
    if (width == 0 || height == 0) throw std::invalid_argument("raster dimensions must be positive");
    if (!(half_width > 0) || !std::isfinite(half_width)) throw std::invalid_argument("half-width must be positive");
    if (!(escape_radius >= 2.0)) throw std::invalid_argument("escape radius must be at least 2");
    if (max_iter == 0) throw std::invalid_argument("max iterations must be positive");
    for (auto p : periods)
        if (p == 0 || p > period_bound)
            throw std::invalid_argument("overlay period " + std::to_string(p) + " outside 1.." +
                                        std::to_string(period_bound));
}

namespace {

void add_roots(std::vector<OverlayPoint>& out, const UniPoly& p, OverlayPoint::Kind kind, unsigned n) {
    if (p.degree() == 1) {
        Rational r = -p.coeff(0) / p.coeff(1);
        out.push_back({kind, n, cplx(r.get_d(), 0.0), r});
        return;
    }
    for (const auto& z : numeric_roots(p)) {
        std::optional<Rational> exact;
        if (std::fabs(z.imag()) < 1e-9) {
            const Rational r(static_cast<long>(std::lround(z.real())));
            if (std::fabs(z.real() - r.get_d()) < 1e-9 && sgn(p.eval(r)) == 0) exact = r;
        }
        out.push_back({kind, n, exact ? cplx(exact->get_d(), 0.0) : z, exact});
    }
}

}  // namespace

std::vector<OverlayPoint> overlay_points(const std::vector<unsigned>& periods) {
    std::vector<OverlayPoint> out;
    for (auto n : periods) {
        add_roots(out, parabolic_polynomial(n), OverlayPoint::Kind::Parabolic, n);
        add_roots(out, superattracting_polynomial(n), OverlayPoint::Kind::Superattracting, n);
    }
    return out;
}

Raster render(const RasterConfig& cfg) {
    cfg.validate();
    Raster r;
    r.width = cfg.width;
    r.height = cfg.height;
    r.rgb.assign(static_cast<std::size_t>(cfg.width) * cfg.height * 3, 0);
    const double step = 2.0 * cfg.half_width / cfg.width;
    const double top = cfg.center_im + step * cfg.height / 2.0;
    const double left = cfg.center_re - cfg.half_width;
    const double r2 = cfg.escape_radius * cfg.escape_radius;

    auto render_row = [&](unsigned y) {
        const double ci = top - (y + 0.5) * step;
        for (unsigned x = 0; x < cfg.width; ++x) {
            const double cr = left + (x + 0.5) * step;
            double zr = 0, zi = 0;
            unsigned it = 0;
            while (it < cfg.max_iter && zr * zr + zi * zi <= r2) {
                const double nr = zr * zr - zi * zi + cr;
                zi = 2 * zr * zi + ci;
                zr = nr;
                ++it;
            }
            const std::uint8_t g =
                it == cfg.max_iter ? 0 : static_cast<std::uint8_t>(255 - (255ull * it) / cfg.max_iter);
            auto* px = &r.rgb[(static_cast<std::size_t>(y) * cfg.width + x) * 3];
            px[0] = px[1] = px[2] = g;
        }
    };
    const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), cfg.height));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (unsigned y = w; y < cfg.height; y += workers) render_row(y);
        });
    for (auto& th : pool) th.join();

    r.overlays = overlay_points(cfg.periods);
    for (const auto& o : r.overlays) {
        const double fx = (o.t.real() - left) / step, fy = (top - o.t.imag()) / step;
        const long cx = static_cast<long>(std::floor(fx)), cy = static_cast<long>(std::floor(fy));
        const int channel = o.kind == OverlayPoint::Kind::Parabolic ? 0 : 1;
        for (long dy = -1; dy <= 1; ++dy)
            for (long dx = -1; dx <= 1; ++dx) {
                const long x = cx + dx, y = cy + dy;
                if (x < 0 || y < 0 || x >= static_cast<long>(cfg.width) || y >= static_cast<long>(cfg.height)) continue;
                r.rgb[(static_cast<std::size_t>(y) * cfg.width + static_cast<std::size_t>(x)) * 3 + channel] = 255;
            }
    }
    return r;
}

std::string Raster::ppm() const {
    std::string out = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(rgb.data()), rgb.size());
    return out;
}

}  // namespace paradyn
