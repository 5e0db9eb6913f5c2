#include "frechet/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace frechet {

namespace {

// Raw-engine uniforms: std::mt19937_64 output is standardized, the library
// distributions are not, and generator fixtures must match across platforms.
struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // Marsaglia polar method on raw uniforms.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = uniform(-1.0, 1.0);
            v = uniform(-1.0, 1.0);
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }
    std::mt19937_64 eng;

private:
    bool have_spare_ = false;
    double spare_ = 0.0;
};

std::vector<double> random_unit(Rng& rng, int dim) {
    std::vector<double> v(dim);
    double norm2;
    do {
        norm2 = 0.0;
        for (int i = 0; i < dim; ++i) {
            v[i] = rng.gaussian();
            norm2 += v[i] * v[i];
        }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& c : v) c *= inv;
    return v;
}

// Occupancy grid with unit cells for the minimum-separation test.
class UnitGrid {
public:
    explicit UnitGrid(int dim) : dim_(dim) {}

    void insert(const Point& p, std::size_t idx) { cells_[key(p)].push_back(idx); }

    bool violates_separation(const Point& cand, const std::vector<Point>& placed,
                             std::size_t skip_after) const {
        std::array<std::int64_t, kMaxDim> base = key(cand);
        std::array<std::int64_t, kMaxDim> off{};
        off.fill(-1);
        for (;;) {
            std::array<std::int64_t, kMaxDim> k = base;
            for (int i = 0; i < dim_; ++i) k[i] += off[i];
            if (auto it = cells_.find(k); it != cells_.end()) {
                for (std::size_t idx : it->second) {
                    if (idx >= skip_after) continue;  // consecutive vertices are exempt
                    if (dist(cand, placed[idx], Norm::L2) < 1.0 + 1e-9) return true;
                }
            }
            int axis = 0;
            while (axis < dim_) {
                if (++off[axis] <= 1) break;
                off[axis] = -1;
                ++axis;
            }
            if (axis == dim_) break;
        }
        return false;
    }

private:
    std::array<std::int64_t, kMaxDim> key(const Point& p) const {
        std::array<std::int64_t, kMaxDim> k{};
        for (int i = 0; i < dim_; ++i) k[i] = static_cast<std::int64_t>(std::floor(p[i]));
        return k;
    }

    struct Hash {
        std::size_t operator()(const std::array<std::int64_t, kMaxDim>& k) const {
            std::uint64_t h = 1469598103934665603ULL;
            for (auto v : k) h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ULL;
            return static_cast<std::size_t>(h);
        }
    };

    int dim_;
    std::unordered_map<std::array<std::int64_t, kMaxDim>, std::vector<std::size_t>, Hash> cells_;
};

}  // namespace

Curve generate_backbone(std::size_t n, double c1, double c2, std::uint64_t seed, int dim) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(c1 > 0.0 && c1 <= c2)) throw std::invalid_argument("need 0 < c1 <= c2");
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");

    Rng rng(seed);
    std::vector<Point> pts;
    pts.reserve(n);
    pts.push_back(Point::zero(dim));
    UnitGrid occupied(dim);
    occupied.insert(pts[0], 0);

    // Edge lengths stay a hair inside [c1, c2] so reconstructed lengths
    // cannot round outside the closed interval.
    const double pad = 1e-6 * (c2 - c1) + 1e-12;
    std::vector<double> heading = random_unit(rng, dim);
    const int per_vertex_retries = 128;
    // The walk can coil into a dead end; when it does, unwind a stretch and
    // continue. The overall budget keeps pathological parameters from
    // spinning forever.
    long budget = 400 * static_cast<long>(n) + 20000;

    while (pts.size() < n) {
        const std::size_t k = pts.size();
        bool placed = false;
        for (int attempt = 0; attempt < per_vertex_retries && !placed; ++attempt) {
            if (--budget < 0)
                throw std::runtime_error(
                    "backbone generation failed: placement budget exhausted");
            std::vector<double> dir = random_unit(rng, dim);
            const double w = attempt < 48 ? 0.75 : 0.0;
            double norm2 = 0.0;
            for (int i = 0; i < dim; ++i) {
                dir[i] = w * heading[i] + (1.0 - w) * dir[i];
                norm2 += dir[i] * dir[i];
            }
            if (norm2 == 0.0) continue;
            const double inv = 1.0 / std::sqrt(norm2);
            const double len = rng.uniform(c1 + pad, c2 - pad);
            Point cand = Point::zero(dim);
            for (int i = 0; i < dim; ++i) cand[i] = pts.back()[i] + dir[i] * inv * len;

            if (occupied.violates_separation(cand, pts, k - 1)) continue;
            const double edge = dist(cand, pts.back(), Norm::L2);
            if (edge < c1 || edge > c2) continue;

            for (int i = 0; i < dim; ++i) heading[i] = dir[i] * inv;
            occupied.insert(cand, k);
            pts.push_back(cand);
            placed = true;
        }
        if (!placed) {
            const std::size_t pop = std::min<std::size_t>(12, pts.size() - 1);
            if (pop == 0)
                throw std::runtime_error("backbone generation failed at the first edge");
            pts.resize(pts.size() - pop);
            occupied = UnitGrid(dim);
            for (std::size_t i = 0; i < pts.size(); ++i) occupied.insert(pts[i], i);
            if (pts.size() >= 2) {
                double h2 = 0.0;
                for (int i = 0; i < dim; ++i) {
                    heading[i] = pts.back()[i] - pts[pts.size() - 2][i];
                    h2 += heading[i] * heading[i];
                }
                if (h2 > 0.0)
                    for (int i = 0; i < dim; ++i) heading[i] /= std::sqrt(h2);
            }
        }
    }
    return Curve(std::move(pts));
}

Curve generate_kbounded(std::size_t n, double kappa, std::uint64_t seed, int dim) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (kappa < 1.0) throw std::invalid_argument("kappa must be >= 1");
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");

    Rng rng(seed);
    std::vector<Point> pts;
    pts.reserve(n);
    Point cur = Point::zero(dim);
    pts.push_back(cur);

    if (kappa < 2.0 || dim == 1) {
        // Samples along a straight axis-aligned ray: kappa estimate is 1.
        for (std::size_t k = 1; k < n; ++k) {
            cur[0] += rng.uniform(0.5, 1.5);
            pts.push_back(cur);
        }
    } else {
        // Coordinate-monotone staircase: every vertex between x and y lies in
        // their bounding box, which keeps the vertex-restricted bound at 2.
        for (std::size_t k = 1; k < n; ++k) {
            const int axis = static_cast<int>((k - 1) % static_cast<std::size_t>(dim));
            cur[axis] += rng.uniform(0.5, 1.5);
            pts.push_back(cur);
        }
    }
    return Curve(std::move(pts));
}

std::pair<Curve, double> generate_lattice_sigma(std::size_t n) {
    const double root = std::cbrt(static_cast<double>(n));
    const std::size_t k = static_cast<std::size_t>(std::llround(root));
    if (k < 3 || k * k * k != n)
        throw std::invalid_argument("lattice size must be a perfect cube >= 27");

    std::vector<Point> pts;
    pts.reserve(n);
    double x = 0.0, y = 0.0, z = 0.0;
    double dx = 1.0, dy = 1.0;
    pts.push_back(Point{x, y, z});
    for (std::size_t zi = 0; zi < k; ++zi) {
        for (std::size_t yi = 0; yi < k; ++yi) {
            for (std::size_t xi = 0; xi + 1 < k; ++xi) {
                x += dx;
                pts.push_back(Point{x, y, z});
            }
            dx = -dx;
            if (yi + 1 < k) {
                y += dy;
                pts.push_back(Point{x, y, z});
            }
        }
        dy = -dy;
        if (zi + 1 < k) {
            z += 1.0;
            pts.push_back(Point{x, y, z});
        }
    }
    return {Curve(std::move(pts)), static_cast<double>(k) / 2.0};
}

}  // namespace frechet
