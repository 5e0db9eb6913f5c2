#include "frechet/curve_classes.hpp"

#include <algorithm>
#include <cmath>

#include "frechet/freespace.hpp"
#include "frechet/oracle.hpp"
#include "frechet/output_sensitive.hpp"
#include "frechet/simplify.hpp"
#include "frechet/spatial_index.hpp"

namespace frechet {

namespace {

void check_decide_args(double delta, double eps, double beta) {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("need 0 < eps < 1");
    if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("need 0 < beta <= 1");
}

void mark_column(const Point& p, const UniformGrid& grid, double delta, double beta, Norm norm,
                 std::vector<std::size_t>& out) {
    out.clear();
    for (const auto& [q, j] : approx_range_query(grid, p, delta, beta, norm))
        if (dist(p, q, norm) <= delta) out.push_back(j);
    std::sort(out.begin(), out.end());
}

FuzzyAnswer decide_from_columns(WhiteCellSet&& w, std::size_t r, std::size_t s,
                                const Simplification& sa, const Simplification& sb,
                                DecideStats* stats) {
    if (stats) {
        stats->white_cells = w.total();
        stats->simplified_a = sa.curve.size();
        stats->simplified_b = sb.curve.size();
    }
    return viable_path_exists(w, r, s) ? FuzzyAnswer::Yes : FuzzyAnswer::No;
}

}  // namespace

FuzzyAnswer fuzzy_decide_simplified(const Curve& a, const Curve& b, double delta, double eps,
                                    double beta, Norm norm, DecideStats* stats) {
    require_same_dim(a, b);
    check_decide_args(delta, eps, beta);
    const double mu = eps * delta / 2.0;
    const Simplification sa = greedy_simplify(a, mu, norm);
    const Simplification sb = greedy_simplify(b, mu, norm);
    const UniformGrid grid(sb.curve.vertices(), beta * delta);

    WhiteCellSet w;
    w.columns.resize(sa.curve.size());
    const std::int64_t r = static_cast<std::int64_t>(sa.curve.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < r; ++i)
        mark_column(sa.curve[static_cast<std::size_t>(i)], grid, delta, beta, norm, w.columns[i]);

    return decide_from_columns(std::move(w), sa.curve.size(), sb.curve.size(), sa, sb, stats);
}

namespace serial {

FuzzyAnswer fuzzy_decide_simplified(const Curve& a, const Curve& b, double delta, double eps,
                                    double beta, Norm norm, DecideStats* stats) {
    require_same_dim(a, b);
    check_decide_args(delta, eps, beta);
    const double mu = eps * delta / 2.0;
    const Simplification sa = greedy_simplify(a, mu, norm);
    const Simplification sb = greedy_simplify(b, mu, norm);
    const UniformGrid grid(sb.curve.vertices(), beta * delta);

    WhiteCellSet w;
    w.columns.resize(sa.curve.size());
    for (std::size_t i = 0; i < sa.curve.size(); ++i)
        mark_column(sa.curve[i], grid, delta, beta, norm, w.columns[i]);

    return decide_from_columns(std::move(w), sa.curve.size(), sb.curve.size(), sa, sb, stats);
}

}  // namespace serial

namespace {

// Decision at delta = 0 in near-linear time: white cells are exactly the
// coincident vertex pairs, recovered through a unit grid on exact
// coordinates.
bool zero_decision(const Curve& a, const Curve& b, Norm norm) {
    const UniformGrid grid(b.vertices(), 1.0);
    WhiteCellSet w;
    w.columns.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j : grid.collect_box(a[i], 0.0))
            if (dist(a[i], b[j], norm) == 0.0) w.columns[i].push_back(j);
        std::sort(w.columns[i].begin(), w.columns[i].end());
    }
    return viable_path_exists(w, a.size(), b.size());
}

}  // namespace

FuzzyOptimizeResult approx_dfd_kbounded(const Curve& a, const Curve& b, const ApproxParams& params,
                                        Norm norm) {
    require_same_dim(a, b);
    if (zero_decision(a, b, norm)) {
        FuzzyOptimizeResult r;
        r.value = 0.0;
        return r;
    }
    std::vector<Point> points = a.vertices();
    points.insert(points.end(), b.vertices().begin(), b.vertices().end());
    const FuzzyDecider decider = [&](double delta, double accuracy) {
        return fuzzy_decide_simplified(a, b, delta, accuracy, params.beta, norm);
    };
    return fuzzy_optimize(points, decider, params.eps, norm);
}

std::optional<double> small_exact(const Curve& a, const Curve& b, double beta_cap, Norm norm) {
    require_same_dim(a, b);
    if (!(beta_cap > 0.0)) throw std::invalid_argument("beta_cap must be > 0");

    const UniformGrid grid(b.vertices(), beta_cap / 2.0);
    std::vector<double> t;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j : grid.collect_box(a[i], beta_cap)) {
            const double d = dist(a[i], b[j], norm);
            if (d < beta_cap) t.push_back(d);
        }
    }
    if (t.empty()) return std::nullopt;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());

    if (!decision_switching(a, b, t.back(), norm)) return std::nullopt;
    std::size_t lo = 0, hi = t.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (decision_switching(a, b, t[mid], norm))
            hi = mid;
        else
            lo = mid + 1;
    }
    return t[lo];
}

double appr_f_backbone(const Curve& a, const Curve& b, double eps, Norm norm, double c1, double c2,
                       std::vector<FuzzyAnswer>* probe_log) {
    require_same_dim(a, b);
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("need 0 < eps < 1");
    if (!check_backbone(a, c1, c2) || !check_backbone(b, c1, c2))
        throw std::invalid_argument("inputs are not backbone curves for the given c1, c2");

    const double growth = 1.0 + eps / 3.0;
    double delta_old = 1.0, delta_new = 1.0;
    bool seen_yes = false, seen_no = false;

    // DFD <= c2 * (n + m) for backbone curves bounds the number of probes.
    const double max_delta = c2 * static_cast<double>(a.size() + b.size());
    long budget = static_cast<long>(std::ceil(std::log(std::max(max_delta, 2.0)) /
                                              std::log1p(eps / 3.0))) +
                  64;

    while (!seen_yes || !seen_no) {
        if (delta_new < 1.0) {
            const auto v = small_exact(a, b, 2.0, norm);
            if (!v) throw ContractViolation("small_exact missed a DFD the search placed below 2");
            return *v;
        }
        const FuzzyAnswer ans = fuzzy_decide_simplified(a, b, delta_new, eps / 3.0, 0.5, norm);
        if (probe_log) probe_log->push_back(ans);
        if (ans == FuzzyAnswer::Yes) {
            seen_yes = true;
            delta_old = delta_new;
            delta_new = delta_old / growth;
        } else {
            seen_no = true;
            delta_old = delta_new;
            delta_new = growth * delta_old;
        }
        if (--budget < 0) throw ContractViolation("backbone search exceeded its probe budget");
    }
    return delta_old;
}

Curve densify(const Curve& c, double max_edge) {
    if (!(max_edge > 0.0)) throw std::invalid_argument("max_edge must be > 0");
    std::vector<Point> out;
    out.push_back(c[0]);
    for (std::size_t e = 0; e + 1 < c.size(); ++e) {
        const Point& p = c[e];
        const Point& q = c[e + 1];
        const double len = dist(p, q, Norm::L2);
        const std::size_t k = len > max_edge ? static_cast<std::size_t>(std::ceil(len / max_edge))
                                             : 1;
        for (std::size_t j = 1; j < k; ++j) {
            Point v = Point::zero(p.dim());
            for (int t = 0; t < p.dim(); ++t)
                v[t] = (p[t] * static_cast<double>(k - j) + q[t] * static_cast<double>(j)) /
                       static_cast<double>(k);
            out.push_back(v);
        }
        out.push_back(q);
    }
    return Curve(std::move(out));
}

double exact_dfd(const Curve& a, const Curve& b, Norm norm, ExactAlgorithm algo) {
    switch (algo) {
        case ExactAlgorithm::Dp:
            return dfd_dp(a, b, norm).value;
        case ExactAlgorithm::BinarySearch:
            return dfd_binary_search(a, b, norm);
        case ExactAlgorithm::OutputSensitive:
            return dfd_output_sensitive(a, b, norm).value;
    }
    return 0.0;
}

double approx_fd_continuous(const Curve& a, const Curve& b, double eps, Norm norm,
                            ExactAlgorithm algo) {
    require_same_dim(a, b);
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("need 0 < eps < 1");

    const double pilot = exact_dfd(a, b, norm, algo);
    if (pilot == 0.0) return 0.0;

    double h = eps * pilot / 4.0;
    double value = exact_dfd(densify(a, h), densify(b, h), norm, algo);
    if (value > 0.0 && value < pilot / 2.0) {
        h = eps * value / 4.0;
        value = exact_dfd(densify(a, h), densify(b, h), norm, algo);
    }
    return value;
}

}  // namespace frechet
