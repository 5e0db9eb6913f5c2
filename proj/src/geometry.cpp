#include "frechet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace frechet {

void Point::check_finite() const {
    for (int i = 0; i < dim_; ++i)
        if (!std::isfinite(coords_[i])) throw std::invalid_argument("non-finite coordinate");
}

Curve::Curve(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("curve must have at least one vertex");
    const int d = vertices_.front().dim();
    for (const Point& p : vertices_)
        if (p.dim() != d) throw std::invalid_argument("mixed dimensions in curve");
}

void Curve::push_back(const Point& p) {
    if (!vertices_.empty() && p.dim() != dim())
        throw std::invalid_argument("mixed dimensions in curve");
    vertices_.push_back(p);
}

double dist(const Point& p, const Point& q, Norm norm) {
    if (p.dim() != q.dim()) throw std::invalid_argument("dimension mismatch");
    const int d = p.dim();
    switch (norm) {
        case Norm::L1: {
            double s = 0.0;
            for (int i = 0; i < d; ++i) s += std::abs(p[i] - q[i]);
            return s;
        }
        case Norm::L2: {
            double s = 0.0;
            for (int i = 0; i < d; ++i) {
                const double t = p[i] - q[i];
                s += t * t;
            }
            return std::sqrt(s);
        }
        case Norm::LInf: {
            double s = 0.0;
            for (int i = 0; i < d; ++i) s = std::max(s, std::abs(p[i] - q[i]));
            return s;
        }
    }
    return 0.0;
}

bool check_backbone(const Curve& c, double c1, double c2) {
    if (c1 <= 0.0 || c2 <= 0.0 || c1 > c2) throw std::invalid_argument("need 0 < c1 <= c2");
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double l = dist(c[i], c[i + 1], Norm::L2);
        if (l < c1 || l > c2) return false;
    }
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j)
            if (dist(c[i], c[j], Norm::L2) < 1.0) return false;
    return true;
}

namespace {

// Minimal admissible kappa contributed by one (x, y) pair: every vertex
// strictly between them must fit in one of the two balls of radius
// kappa/2 * dist(x, y).
double pair_kappa(const Curve& c, std::size_t a, std::size_t b) {
    const double d = dist(c[a], c[b], Norm::L2);
    if (d == 0.0) return 1.0;  // coincident endpoints carry no constraint we can scale
    double k = 1.0;
    for (std::size_t t = a + 1; t < b; ++t) {
        const double r = std::min(dist(c[t], c[a], Norm::L2), dist(c[t], c[b], Norm::L2));
        k = std::max(k, 2.0 * r / d);
    }
    return k;
}

}  // namespace

double estimate_kappa(const Curve& c, std::size_t samples) {
    const std::size_t n = c.size();
    if (n < 2) throw std::invalid_argument("estimate_kappa needs n >= 2");
    const std::size_t total_pairs = n * (n - 1) / 2;
    double k = 1.0;
    if (samples == 0 || samples >= total_pairs) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 2; b < n; ++b) k = std::max(k, pair_kappa(c, a, b));
    } else {
        std::mt19937_64 rng(0x6b61707061ULL);  // fixed seed: fixture determinism
        for (std::size_t s = 0; s < samples; ++s) {
            const std::size_t a = static_cast<std::size_t>(rng() % n);
            const std::size_t b = static_cast<std::size_t>(rng() % n);
            const auto [lo, hi] = std::minmax(a, b);
            if (hi > lo + 1) k = std::max(k, pair_kappa(c, lo, hi));
        }
    }
    return k;
}

CurveClassReport classify_curve(const Curve& c, double c1, double c2) {
    CurveClassReport r;
    r.c1 = c1;
    r.c2 = c2;
    r.is_backbone = check_backbone(c, c1, c2);
    r.kappa_lower_bound = c.size() >= 2 ? estimate_kappa(c) : 1.0;
    return r;
}

void require_same_dim(const Curve& a, const Curve& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("empty curve");
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace frechet
