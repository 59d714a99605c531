#pragma once

// Escape-time picture of the quadratic family z^2 + t with overlays at the
// parabolic and superattracting parameters of chosen periods.

#include "paradyn/potential.hpp"
#include "paradyn/unipoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace paradyn {

/// Lift (X^2, t X^2 + Y^2) of z^2 + t.
RatMapQ quadratic_family_member(const Rational& t);

/// Lambda_n(t), proportional to p_n**(1; z^2 + t), normalized monic.
UniPoly parabolic_polynomial(unsigned n);

/// P_t^n(0) in Z[t].
UniPoly superattracting_polynomial(unsigned n);

struct RasterConfig {
    double center_re = -0.5, center_im = 0.0;
    double half_width = 1.5;  // along the real axis
    unsigned width = 512, height = 512;
    unsigned max_iter = 512;
    double escape_radius = 2.0;
    std::vector<unsigned> periods{1, 2};
    unsigned period_bound = 6;

    void validate() const;
};

struct OverlayPoint {
    enum class Kind { Parabolic, Superattracting } kind;
    unsigned period;
    cplx t;
    std::optional<Rational> exact;  // set for rational roots found exactly
};

struct Raster {
    unsigned width = 0, height = 0;
    std::vector<std::uint8_t> rgb;  // row-major, three bytes per pixel
    std::vector<OverlayPoint> overlays;

    std::string ppm() const;
};

/// Roots of the overlay polynomials for the configured periods.
std::vector<OverlayPoint> overlay_points(const std::vector<unsigned>& periods);

Raster render(const RasterConfig& cfg);

}  // namespace paradyn
