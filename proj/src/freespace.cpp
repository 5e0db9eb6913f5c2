#include "frechet/freespace.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace frechet {

namespace {

void fill_column(const Curve& a, const Curve& b, double delta, Norm norm, std::size_t i,
                 std::vector<std::size_t>& out) {
    out.clear();
    for (std::size_t j = 0; j < b.size(); ++j)
        if (dist(a[i], b[j], norm) <= delta) out.push_back(j);
}

}  // namespace

WhiteCellSet build_white_cells(const Curve& a, const Curve& b, double delta, Norm norm) {
    require_same_dim(a, b);
    if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
    WhiteCellSet w;
    w.columns.resize(a.size());
    const std::int64_t n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        fill_column(a, b, delta, norm, static_cast<std::size_t>(i), w.columns[i]);
    return w;
}

namespace serial {

WhiteCellSet build_white_cells(const Curve& a, const Curve& b, double delta, Norm norm) {
    require_same_dim(a, b);
    if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
    WhiteCellSet w;
    w.columns.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) fill_column(a, b, delta, norm, i, w.columns[i]);
    return w;
}

}  // namespace serial

bool viable_path_exists(const WhiteCellSet& w, std::size_t n, std::size_t m) {
    if (w.columns.size() != n) throw std::invalid_argument("white cell set built for different n");
    if (n == 0 || m == 0) return false;

    // Rows of column 0 reachable from (0,0): the prefix run starting at row 0.
    std::vector<std::size_t> reach;
    const auto& c0 = w.columns[0];
    for (std::size_t k = 0; k < c0.size() && c0[k] == k; ++k) reach.push_back(c0[k]);
    if (reach.empty()) return false;

    std::vector<std::size_t> next;
    for (std::size_t i = 1; i < n; ++i) {
        const auto& col = w.columns[i];
        next.clear();
        // A white cell (i, j) is enterable from the left column if j or j-1
        // was reachable there; within the column reachability climbs through
        // consecutive white rows.
        std::size_t r = 0;  // cursor into reach
        for (std::size_t k = 0; k < col.size(); ++k) {
            const std::size_t j = col[k];
            bool in = !next.empty() && k > 0 && col[k - 1] == j - 1 && next.back() == j - 1;
            if (!in) {
                while (r < reach.size() && reach[r] + 1 < j) ++r;
                in = r < reach.size() && (reach[r] == j || reach[r] + 1 == j);
            }
            if (in) next.push_back(j);
        }
        reach.swap(next);
        if (reach.empty()) return false;
    }
    return !reach.empty() && reach.back() == m - 1;
}

IntervalList intervals_from_column(const WhiteCellSet& w, std::size_t i) {
    if (i >= w.columns.size()) throw std::invalid_argument("column index out of range");
    const auto& rows = w.columns[i];
    IntervalList out;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (!out.empty() && out.back().hi + 1 == rows[k])
            out.back().hi = rows[k];
        else
            out.push_back({rows[k], rows[k]});
    }
    return out;
}

double dfd_binary_search(const Curve& a, const Curve& b, Norm norm) {
    require_same_dim(a, b);
    const std::size_t n = a.size(), m = b.size();
    std::vector<double> cand;
    cand.reserve(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) cand.push_back(dist(a[i], b[j], norm));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    auto feasible = [&](double delta) {
        return viable_path_exists(build_white_cells(a, b, delta, norm), n, m);
    };

    // Smallest candidate for which the decision holds; the optimum is always
    // attained by a vertex pair, so it is in the candidate set.
    std::size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (feasible(cand[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return cand[lo];
}

}  // namespace frechet
