#ifndef FRECHET_SPATIAL_INDEX_HPP
#define FRECHET_SPATIAL_INDEX_HPP

// The two geometric accelerators: uniform-grid approximate range queries and
// the well-separated pair decomposition.

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

/// A hash grid over points with floor-convention cell keys: coordinate x
/// lands in lattice cell floor(x / cell_size) along each axis.
class UniformGrid {
public:
    UniformGrid(std::vector<Point> points, double cell_size);

    double cell_size() const { return cell_size_; }
    const std::vector<Point>& points() const { return points_; }

    /// Lattice coordinates of the cell containing p.
    std::array<std::int64_t, kMaxDim> cell_of(const Point& p) const;

    /// Indices of points stored in the given cell (empty if none).
    const std::vector<std::size_t>* cell(const std::array<std::int64_t, kMaxDim>& key) const;

    /// Indices of all points in cells intersecting the axis-aligned box of
    /// half-width radius around center. Deterministic cell order.
    std::vector<std::size_t> collect_box(const Point& center, double radius) const;

private:
    struct KeyHash {
        std::size_t operator()(const std::array<std::int64_t, kMaxDim>& k) const {
            std::uint64_t h = 0x9e3779b97f4a7c15ULL;
            for (std::int64_t v : k) {
                h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            }
            return static_cast<std::size_t>(h);
        }
    };

    std::vector<Point> points_;
    double cell_size_;
    int dim_;
    std::unordered_map<std::array<std::int64_t, kMaxDim>, std::vector<std::size_t>, KeyHash> cells_;
};

UniformGrid build_grid(std::vector<Point> points, double cell_size);

/// Points guaranteed to include everything within delta of center and
/// nothing beyond (1+beta)*delta, under the given norm. Grid cell size is
/// expected to be beta*delta (checked loosely). Returns (point, index).
std::vector<std::pair<Point, std::size_t>> approx_range_query(const UniformGrid& g,
                                                              const Point& center, double delta,
                                                              double beta, Norm norm);

/// One well-separated pair: the minimum distance between the two sets is at
/// least `separation` times the diameter of either set.
struct WspdPair {
    std::vector<std::size_t> set_a;  // ascending original indices
    std::vector<std::size_t> set_b;
    std::size_t rep_a = 0;  // first of set_a in insertion order
    std::size_t rep_b = 0;
};

/// WSPD via a compressed quadtree with the standard pair-splitting
/// recursion. Separation is measured between tight bounding boxes in L2,
/// which implies the point-set invariant. Every unordered pair of distinct
/// point indices is covered by exactly one emitted pair.
std::vector<WspdPair> build_wspd(const std::vector<Point>& points, double separation);

/// For each pair, the representative distance d under the norm, doubled into
/// candidates {4/5 d, 6/5 d}; returned sorted.
std::vector<double> wspd_candidate_values(const std::vector<WspdPair>& pairs,
                                          const std::vector<Point>& points, Norm norm);

}  // namespace frechet

#endif
