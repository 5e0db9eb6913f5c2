#ifndef FRECHET_FREESPACE_HPP
#define FRECHET_FREESPACE_HPP

// Free-space diagram construction, viable-path decision, and the
// binary-search exact algorithm for general curves.

#include <cstddef>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

/// One closed run of rows [lo, hi], 0-based, lo <= hi.
struct RowInterval {
    std::size_t lo = 0;
    std::size_t hi = 0;
    bool operator==(const RowInterval&) const = default;
};

/// Sorted, disjoint, maximal row intervals of one column.
using IntervalList = std::vector<RowInterval>;

/// White cells of the free-space diagram, one sorted row list per column.
/// Column i corresponds to vertex i of the first curve, rows to vertices of
/// the second.
struct WhiteCellSet {
    std::vector<std::vector<std::size_t>> columns;
    std::size_t total() const {
        std::size_t s = 0;
        for (const auto& c : columns) s += c.size();
        return s;
    }
};

/// All cells (i, j) with dist(a[i], b[j]) <= delta (closed comparison).
/// Columns are filled in parallel when OpenMP is enabled; the output is
/// identical to the serial reference.
WhiteCellSet build_white_cells(const Curve& a, const Curve& b, double delta, Norm norm);

namespace serial {
/// Reference single-threaded construction, kept for testing and benchmarks.
WhiteCellSet build_white_cells(const Curve& a, const Curve& b, double delta, Norm norm);
}  // namespace serial

/// True iff a monotone path of white cells connects (0,0) to (n-1,m-1) with
/// steps right, up, diagonal. O(|W|) column sweep; the directed graph over
/// white cells is implicit.
bool viable_path_exists(const WhiteCellSet& w, std::size_t n, std::size_t m);

/// Maximal runs of consecutive white rows in column i.
IntervalList intervals_from_column(const WhiteCellSet& w, std::size_t i);

/// Exact DFD: binary search over the sorted multiset of all n*m pairwise
/// vertex distances with the free-space decision as predicate. Returns the
/// smallest feasible candidate, which equals the DP value bit-for-bit.
double dfd_binary_search(const Curve& a, const Curve& b, Norm norm);

}  // namespace frechet

#endif
