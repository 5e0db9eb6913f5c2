#ifndef FRECHET_GEOMETRY_HPP
#define FRECHET_GEOMETRY_HPP

#include <array>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace frechet {

/// Maximum supported ambient dimension.
inline constexpr int kMaxDim = 8;

enum class Norm { L1, L2, LInf };

/// A point in R^d, 1 <= d <= kMaxDim. Coordinates are stored inline so
/// curves stay contiguous in memory.
class Point {
public:
    Point() : dim_(0) { coords_.fill(0.0); }

    Point(std::initializer_list<double> cs) : dim_(static_cast<int>(cs.size())) {
        check_dim(dim_);
        coords_.fill(0.0);
        int i = 0;
        for (double c : cs) coords_[i++] = c;
        check_finite();
    }

    Point(const double* cs, int dim) : dim_(dim) {
        check_dim(dim);
        coords_.fill(0.0);
        for (int i = 0; i < dim; ++i) coords_[i] = cs[i];
        check_finite();
    }

    static Point zero(int dim) {
        check_dim(dim);
        Point p;
        p.dim_ = dim;
        return p;
    }

    int dim() const { return dim_; }
    double operator[](int i) const { return coords_[i]; }
    double& operator[](int i) { return coords_[i]; }

    bool operator==(const Point& o) const {
        if (dim_ != o.dim_) return false;
        for (int i = 0; i < dim_; ++i)
            if (coords_[i] != o.coords_[i]) return false;
        return true;
    }
    bool operator!=(const Point& o) const { return !(*this == o); }

private:
    static void check_dim(int d) {
        if (d < 1 || d > kMaxDim) throw std::invalid_argument("point dimension out of range");
    }
    void check_finite() const;

    std::array<double, kMaxDim> coords_;
    int dim_;
};

/// A polygonal curve: an ordered, non-empty sequence of points of uniform
/// dimension.
class Curve {
public:
    Curve() = default;
    explicit Curve(std::vector<Point> vertices);

    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    int dim() const { return vertices_.empty() ? 0 : vertices_.front().dim(); }

    const Point& operator[](std::size_t i) const { return vertices_[i]; }
    const Point& front() const { return vertices_.front(); }
    const Point& back() const { return vertices_.back(); }

    const std::vector<Point>& vertices() const { return vertices_; }

    void push_back(const Point& p);

    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }

private:
    std::vector<Point> vertices_;
};

/// Per-curve classification summary used by the curve-class algorithms.
struct CurveClassReport {
    bool is_backbone = false;
    double c1 = 0.0;
    double c2 = 0.0;
    double kappa_lower_bound = 1.0;
};

/// Norm-induced distance between two points of equal dimension.
/// All downstream threshold comparisons go through this one function so
/// that decisions stay bit-for-bit consistent across algorithms.
double dist(const Point& p, const Point& q, Norm norm);

/// True iff every pair of non-consecutive vertices is at L2 distance >= 1
/// and every edge length lies in [c1, c2]. A single-vertex curve passes
/// vacuously.
bool check_backbone(const Curve& c, double c1, double c2);

/// Lower bound on the smallest kappa for which the vertex-restricted
/// kappa-bounded condition holds: for vertices x, y and any vertex v between
/// them, v must lie in ball(x, kappa/2 * dist(x,y)) or ball(y, kappa/2 *
/// dist(x,y)). Checks all vertex pairs when samples == 0, otherwise a
/// deterministic random sample of that many pairs. Test fixture only.
double estimate_kappa(const Curve& c, std::size_t samples = 0);

/// Full classification: backbone check plus kappa estimate.
CurveClassReport classify_curve(const Curve& c, double c1, double c2);

void require_same_dim(const Curve& a, const Curve& b);

}  // namespace frechet

#endif
