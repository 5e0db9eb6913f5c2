#ifndef FRECHET_ORACLE_HPP
#define FRECHET_ORACLE_HPP

// Brute-force reference implementations. Everything else in the library is
// tested against this module; nothing in the library calls into it.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

/// An order-preserving complete correspondence: starts at (0,0), ends at
/// (n-1,m-1), each step advances i and/or j by one.
using Correspondence = std::vector<std::pair<std::size_t, std::size_t>>;

struct FrechetResult {
    double value = 0.0;
    std::optional<Correspondence> witness;
    std::pair<std::size_t, std::size_t> witness_pair{0, 0};
};

/// Exact discrete Frechet distance by the quadratic dynamic program, with a
/// witness correspondence reconstructed by backtracking. O(nm) time/space;
/// meant for n, m up to a couple thousand.
FrechetResult dfd_dp(const Curve& a, const Curve& b, Norm norm);

/// Decision "DFD(a, b) <= delta?" by explicit full-matrix reachability over
/// white cells with moves right, up, diagonal.
bool dfd_decision_naive(const Curve& a, const Curve& b, double delta, Norm norm);

/// Exact set of rows j (0-based) such that cell (i, j) is reachable from
/// (0, 0) through white cells. Test oracle for the compressed column
/// reachability.
std::vector<std::size_t> reachable_column_naive(const Curve& a, const Curve& b, double delta,
                                                Norm norm, std::size_t i);

}  // namespace frechet

#endif
