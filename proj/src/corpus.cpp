#include "paradyn/corpus.hpp"

#include <random>

namespace paradyn {

std::vector<RatMapQ> random_corpus(unsigned d, std::size_t count, std::uint64_t seed, long bound) {
    std::mt19937_64 rng(seed);
    const auto width = static_cast<std::uint64_t>(2 * bound + 1);
    auto draw = [&] { return static_cast<long>(rng() % width) - bound; };
    std::vector<RatMapQ> out;
    while (out.size() < count) {
        std::vector<long> a(d + 1), b(d + 1);
        for (auto& x : a) x = draw();
        for (auto& x : b) x = draw();
        try {
            out.push_back(RatMapQ::from_integers(a, b));
        } catch (const DegenerateMap&) {
        }
    }
    return out;
}

}  // namespace paradyn
