#ifndef FRECHET_GENERATORS_HPP
#define FRECHET_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <utility>

#include "frechet/geometry.hpp"

namespace frechet {

/// Random chain satisfying the backbone properties: non-consecutive vertices
/// at L2 distance >= 1, edge lengths in [c1, c2]. Rejection-sampled with a
/// forward bias; throws after a bounded number of failed placements.
/// Deterministic per seed across platforms.
Curve generate_backbone(std::size_t n, double c1, double c2, std::uint64_t seed, int dim = 2);

/// Curve with vertex-restricted kappa bound at most `kappa`: collinear
/// samples for kappa < 2, a coordinate-monotone staircase otherwise.
Curve generate_kbounded(std::size_t n, double kappa, std::uint64_t seed, int dim = 2);

/// Boustrophedon traversal of the k x k x k integer lattice (n = k^3) with
/// unit steps, and the matching threshold k / 2.
std::pair<Curve, double> generate_lattice_sigma(std::size_t n);

}  // namespace frechet

#endif
