#ifndef FRECHET_SIMPLIFY_HPP
#define FRECHET_SIMPLIFY_HPP

#include <cstddef>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

/// A mu-simplification of a curve: an order-preserving vertex subsequence
/// keeping first and last vertex, where every skipped vertex stays within mu
/// of the simplified vertex that covers it, and every simplified edge except
/// possibly the last has length > mu.
struct Simplification {
    Curve curve;
    std::vector<std::size_t> index_map;  // original index of each kept vertex
    double mu = 0.0;
};

/// Greedy linear-time construction: from the current kept vertex, scan
/// forward and keep the first vertex that leaves the closed mu-ball; append
/// the final vertex if the scan runs out.
Simplification greedy_simplify(const Curve& c, double mu, Norm norm);

}  // namespace frechet

#endif
