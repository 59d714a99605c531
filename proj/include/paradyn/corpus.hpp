#pragma once

#include "paradyn/multiplier.hpp"

#include <cstdint>
#include <vector>

namespace paradyn {

/// `count` degree-d integer maps with coefficients in [-bound, bound] and
/// rho != 0, drawn from a seeded 64-bit Mersenne twister. Coefficients are
/// reduced with a plain modulus so the corpus is the same on every platform.
std::vector<RatMapQ> random_corpus(unsigned d, std::size_t count, std::uint64_t seed, long bound = 9);

}  // namespace paradyn
