#pragma once

// Text format for a rational map:
//   degree: d
//   F0: a_0 ... a_d
//   F1: b_0 ... b_d
// with `#` comments; entries are integers, fractions p/q or decimals.

#include "paradyn/multiplier.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace paradyn {

struct MapFile {
    unsigned degree = 0;
    std::vector<Rational> a, b;

    /// Clears denominators to a primitive integer lift; throws DegenerateMap when rho = 0.
    RatMapQ to_map() const;
    std::string str() const;
};

MapFile parse_map_file(std::string_view text);
MapFile read_map_file(const std::filesystem::path& path);
MapFile map_file_of(const RatMapQ& f);

}  // namespace paradyn
