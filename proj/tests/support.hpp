#ifndef FRECHET_TESTS_SUPPORT_HPP
#define FRECHET_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <random>
#include <vector>

#include "frechet/fuzzy_search.hpp"
#include "frechet/geometry.hpp"

namespace frechet::test {

struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng() % n); }
    std::mt19937_64 eng;
};

inline Point random_point(Rng& rng, int dim, double lo = -10.0, double hi = 10.0) {
    Point p = Point::zero(dim);
    for (int i = 0; i < dim; ++i) p[i] = rng.uniform(lo, hi);
    return p;
}

inline Curve random_curve(Rng& rng, std::size_t n, int dim, double lo = -10.0, double hi = 10.0) {
    std::vector<Point> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_point(rng, dim, lo, hi));
    return Curve(std::move(v));
}

/// Random-walk curve; produces more interesting free-space structure than
/// i.i.d. vertices.
inline Curve random_walk_curve(Rng& rng, std::size_t n, int dim, double step = 1.0) {
    std::vector<Point> v;
    v.reserve(n);
    Point cur = random_point(rng, dim, -2.0, 2.0);
    v.push_back(cur);
    for (std::size_t i = 1; i < n; ++i) {
        for (int d = 0; d < dim; ++d) cur[d] += rng.uniform(-step, step);
        v.push_back(cur);
    }
    return Curve(std::move(v));
}

/// a <= b up to `ulps` representable steps.
inline bool leq_ulps(double a, double b, int ulps) {
    for (int i = 0; i < ulps; ++i) b = std::nextafter(b, std::numeric_limits<double>::infinity());
    return a <= b;
}

/// A contract-honoring decider around a known optimum: forced outside the
/// accuracy band, deterministic pseudo-random inside it.
inline FuzzyDecider adversarial_decider(double true_value, std::uint64_t seed) {
    return [true_value, seed](double delta, double accuracy) {
        if (true_value > (1.0 + accuracy) * delta) return FuzzyAnswer::No;
        if (true_value < (1.0 - accuracy) * delta) return FuzzyAnswer::Yes;
        std::uint64_t h = seed;
        auto mix = [&h](std::uint64_t v) {
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        };
        std::uint64_t bits;
        static_assert(sizeof(bits) == sizeof(delta));
        std::memcpy(&bits, &delta, sizeof(bits));
        mix(bits);
        std::memcpy(&bits, &accuracy, sizeof(bits));
        mix(bits);
        return (h >> 13) & 1 ? FuzzyAnswer::Yes : FuzzyAnswer::No;
    };
}

/// An exact decider: Yes iff true_value <= delta. Satisfies every fuzzy
/// contract.
inline FuzzyDecider exact_decider(double true_value) {
    return [true_value](double delta, double) {
        return true_value <= delta ? FuzzyAnswer::Yes : FuzzyAnswer::No;
    };
}

}  // namespace frechet::test

#endif
