#include "frechet/spatial_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace frechet {

UniformGrid::UniformGrid(std::vector<Point> points, double cell_size)
    : points_(std::move(points)), cell_size_(cell_size) {
    if (cell_size_ <= 0.0 || !std::isfinite(cell_size_))
        throw std::invalid_argument("cell_size must be positive");
    dim_ = points_.empty() ? 1 : points_.front().dim();
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].dim() != dim_) throw std::invalid_argument("mixed dimensions in grid");
        cells_[cell_of(points_[i])].push_back(i);
    }
}

namespace {

// floor(coord / cell) clamped to a safe integer band; coordinates that far
// outside the working scale only cost query over-collection, never UB.
std::int64_t lattice_index(double coord, double cell) {
    constexpr double kClamp = 4.0e18;
    const double c = std::floor(coord / cell);
    if (c > kClamp) return static_cast<std::int64_t>(kClamp);
    if (c < -kClamp) return static_cast<std::int64_t>(-kClamp);
    return static_cast<std::int64_t>(c);
}

}  // namespace

std::array<std::int64_t, kMaxDim> UniformGrid::cell_of(const Point& p) const {
    std::array<std::int64_t, kMaxDim> key{};
    for (int i = 0; i < p.dim(); ++i) key[i] = lattice_index(p[i], cell_size_);
    return key;
}

const std::vector<std::size_t>* UniformGrid::cell(
    const std::array<std::int64_t, kMaxDim>& key) const {
    auto it = cells_.find(key);
    return it == cells_.end() ? nullptr : &it->second;
}

std::vector<std::size_t> UniformGrid::collect_box(const Point& center, double radius) const {
    std::array<std::int64_t, kMaxDim> lo{}, hi{};
    const int d = center.dim();
    for (int i = 0; i < d; ++i) {
        lo[i] = lattice_index(center[i] - radius, cell_size_);
        hi[i] = lattice_index(center[i] + radius, cell_size_);
    }
    std::vector<std::size_t> out;
    std::array<std::int64_t, kMaxDim> key = lo;
    for (;;) {
        if (const auto* pts = cell(key)) out.insert(out.end(), pts->begin(), pts->end());
        int axis = 0;
        while (axis < d) {
            if (++key[axis] <= hi[axis]) break;
            key[axis] = lo[axis];
            ++axis;
        }
        if (axis == d) break;
    }
    return out;
}

UniformGrid build_grid(std::vector<Point> points, double cell_size) {
    return UniformGrid(std::move(points), cell_size);
}

std::vector<std::pair<Point, std::size_t>> approx_range_query(const UniformGrid& g,
                                                              const Point& center, double delta,
                                                              double beta, Norm norm) {
    if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
    if (beta <= 0.0 || beta > 1.0) throw std::invalid_argument("need 0 < beta <= 1");
    const double outer = (1.0 + beta) * delta;
    std::vector<std::pair<Point, std::size_t>> out;
    // The box probe alone can pick up points beyond (1+beta)*delta under L1
    // and L2, so candidates are filtered at the outer radius; the caller
    // still re-filters exactly at delta.
    for (std::size_t idx : g.collect_box(center, outer)) {
        const Point& p = g.points()[idx];
        if (dist(p, center, norm) <= outer) out.emplace_back(p, idx);
    }
    return out;
}

// --- WSPD ------------------------------------------------------------------

namespace {

struct Box {
    std::array<double, kMaxDim> lo{};
    std::array<double, kMaxDim> hi{};

    static Box of(const std::vector<Point>& pts, const std::vector<std::size_t>& idx, int d) {
        Box b;
        b.lo.fill(std::numeric_limits<double>::infinity());
        b.hi.fill(-std::numeric_limits<double>::infinity());
        for (std::size_t i : idx)
            for (int k = 0; k < d; ++k) {
                b.lo[k] = std::min(b.lo[k], pts[i][k]);
                b.hi[k] = std::max(b.hi[k], pts[i][k]);
            }
        return b;
    }

    double diam(int d) const {
        double s = 0.0;
        for (int k = 0; k < d; ++k) {
            const double t = hi[k] - lo[k];
            s += t * t;
        }
        return std::sqrt(s);
    }

    static double distance(const Box& a, const Box& b, int d) {
        double s = 0.0;
        for (int k = 0; k < d; ++k) {
            const double t = std::max({0.0, a.lo[k] - b.hi[k], b.lo[k] - a.hi[k]});
            s += t * t;
        }
        return std::sqrt(s);
    }
};

struct QtNode {
    std::vector<std::size_t> idx;  // ascending original indices
    Box bbox;
    std::vector<std::unique_ptr<QtNode>> children;
    bool coincident = false;  // all points share one location
};

class WspdBuilder {
public:
    WspdBuilder(const std::vector<Point>& pts, double sep) : pts_(pts), sep_(sep) {
        dim_ = pts.front().dim();
    }

    std::vector<WspdPair> run() {
        std::vector<std::size_t> all(pts_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        Box root_box = Box::of(pts_, all, dim_);
        double width = 0.0;
        for (int k = 0; k < dim_; ++k) width = std::max(width, root_box.hi[k] - root_box.lo[k]);
        std::array<double, kMaxDim> origin{};
        for (int k = 0; k < dim_; ++k) origin[k] = root_box.lo[k];
        auto root = build(std::move(all), origin, width == 0.0 ? 1.0 : width);
        self_pairs(*root);
        return std::move(pairs_);
    }

private:
    std::unique_ptr<QtNode> build(std::vector<std::size_t> idx, std::array<double, kMaxDim> origin,
                                  double width) {
        auto node = std::make_unique<QtNode>();
        node->idx = std::move(idx);
        node->bbox = Box::of(pts_, node->idx, dim_);

        bool all_same = true;
        for (std::size_t i : node->idx)
            if (pts_[i] != pts_[node->idx.front()]) {
                all_same = false;
                break;
            }
        if (node->idx.size() == 1 || all_same) {
            node->coincident = true;
            return node;
        }

        // Shrink toward the occupied subcell while only one child is
        // non-empty (path compression), then split for real.
        for (;;) {
            if (width <= 0.0 || !std::isfinite(width) ||
                width < 1e-280) {  // degenerate spread; treat points individually
                node->coincident = true;
                return node;
            }
            const double half = width / 2.0;
            std::unordered_map<std::uint32_t, std::vector<std::size_t>> parts;
            for (std::size_t i : node->idx) {
                std::uint32_t code = 0;
                for (int k = 0; k < dim_; ++k)
                    if (pts_[i][k] >= origin[k] + half) code |= (1u << k);
                parts[code].push_back(i);
            }
            if (parts.size() == 1) {
                const std::uint32_t code = parts.begin()->first;
                for (int k = 0; k < dim_; ++k)
                    if (code & (1u << k)) origin[k] += half;
                width = half;
                continue;
            }
            std::vector<std::uint32_t> codes;
            for (const auto& [code, part] : parts) codes.push_back(code);
            std::sort(codes.begin(), codes.end());
            for (std::uint32_t code : codes) {
                std::array<double, kMaxDim> sub_origin = origin;
                for (int k = 0; k < dim_; ++k)
                    if (code & (1u << k)) sub_origin[k] += half;
                node->children.push_back(build(std::move(parts[code]), sub_origin, half));
            }
            return node;
        }
    }

    bool separated(const QtNode& u, const QtNode& v) const {
        const double d = Box::distance(u.bbox, v.bbox, dim_);
        const double r = std::max(u.bbox.diam(dim_), v.bbox.diam(dim_));
        return d >= sep_ * r;
    }

    void emit(const QtNode& u, const QtNode& v) {
        WspdPair p;
        p.set_a = u.idx;
        p.set_b = v.idx;
        p.rep_a = p.set_a.front();
        p.rep_b = p.set_b.front();
        pairs_.push_back(std::move(p));
    }

    // Pairs between points of a single coincident group (diameter zero, so
    // singleton-vs-singleton pairs are trivially separated).
    void coincident_self_pairs(const QtNode& u) {
        for (std::size_t i = 0; i < u.idx.size(); ++i)
            for (std::size_t j = i + 1; j < u.idx.size(); ++j) {
                WspdPair p;
                p.set_a = {u.idx[i]};
                p.set_b = {u.idx[j]};
                p.rep_a = u.idx[i];
                p.rep_b = u.idx[j];
                pairs_.push_back(std::move(p));
            }
    }

    void self_pairs(const QtNode& u) {
        if (u.coincident) {
            coincident_self_pairs(u);
            return;
        }
        for (std::size_t i = 0; i < u.children.size(); ++i) {
            self_pairs(*u.children[i]);
            for (std::size_t j = i + 1; j < u.children.size(); ++j)
                cross_pairs(*u.children[i], *u.children[j]);
        }
    }

    void cross_pairs(const QtNode& u, const QtNode& v) {
        if (separated(u, v)) {
            emit(u, v);
            return;
        }
        // Split the node with the larger quadtree cell; leaves force the
        // other side to split. Two coincident groups are always separated.
        const QtNode* split = nullptr;
        const QtNode* keep = nullptr;
        bool split_is_u;
        if (u.coincident && v.coincident) {
            emit(u, v);  // both diameters are zero
            return;
        }
        if (u.coincident) {
            split = &v;
            keep = &u;
            split_is_u = false;
        } else if (v.coincident) {
            split = &u;
            keep = &v;
            split_is_u = true;
        } else if (u.bbox.diam(dim_) >= v.bbox.diam(dim_)) {
            split = &u;
            keep = &v;
            split_is_u = true;
        } else {
            split = &v;
            keep = &u;
            split_is_u = false;
        }
        for (const auto& child : split->children) {
            if (split_is_u)
                cross_pairs(*child, *keep);
            else
                cross_pairs(*keep, *child);
        }
    }

    const std::vector<Point>& pts_;
    double sep_;
    int dim_;
    std::vector<WspdPair> pairs_;
};

}  // namespace

std::vector<WspdPair> build_wspd(const std::vector<Point>& points, double separation) {
    if (points.size() < 2) throw std::invalid_argument("WSPD needs at least 2 points");
    if (separation < 1.0) throw std::invalid_argument("separation must be >= 1");
    return WspdBuilder(points, separation).run();
}

std::vector<double> wspd_candidate_values(const std::vector<WspdPair>& pairs,
                                          const std::vector<Point>& points, Norm norm) {
    if (pairs.empty()) throw std::invalid_argument("empty WSPD pair list");
    std::vector<double> values;
    values.reserve(pairs.size() * 2);
    for (const WspdPair& p : pairs) {
        const double d = dist(points[p.rep_a], points[p.rep_b], norm);
        values.push_back(0.8 * d);
        values.push_back(1.2 * d);
    }
    std::sort(values.begin(), values.end());
    return values;
}

}  // namespace frechet
