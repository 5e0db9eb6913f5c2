#include "frechet/output_sensitive.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

#include "frechet/errors.hpp"
#include "frechet/spatial_index.hpp"

namespace frechet {

namespace {

// Rows j with dist(p, b[j]) <= delta, sorted. The grid bounds the scan to
// cells near p; delta == 0 degenerates to exact coincidence, found through a
// unit grid.
std::vector<std::size_t> white_rows_near(const Point& p, const Curve& b, double delta, Norm norm,
                                         const UniformGrid& grid) {
    std::vector<std::size_t> rows = grid.collect_box(p, delta);
    std::vector<std::size_t> out;
    out.reserve(rows.size());
    for (std::size_t j : rows)
        if (dist(p, b[j], norm) <= delta) out.push_back(j);
    std::sort(out.begin(), out.end());
    return out;
}

UniformGrid make_row_grid(const Curve& b, double delta) {
    const double cell = delta > 0.0 ? delta / 2.0 : 1.0;
    return UniformGrid(b.vertices(), cell);
}

void switching_rows_for_column(const Point& p, const Curve& b, double delta, Norm norm,
                               const UniformGrid& grid, std::vector<std::size_t>& out) {
    out.clear();
    const std::size_t m = b.size();
    for (std::size_t j : white_rows_near(p, b, delta, norm, grid)) {
        const bool black_below = (j == 0) || dist(p, b[j - 1], norm) > delta;
        const bool black_above = (j == m - 1) || dist(p, b[j + 1], norm) > delta;
        if (black_below || black_above) out.push_back(j);
    }
}

}  // namespace

SwitchingCellSet compute_switching_cells(const Curve& a, const Curve& b, double delta, Norm norm) {
    require_same_dim(a, b);
    if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
    const UniformGrid grid = make_row_grid(b, delta);
    SwitchingCellSet s;
    s.columns.resize(a.size());
    const std::int64_t n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i)
        switching_rows_for_column(a[static_cast<std::size_t>(i)], b, delta, norm, grid,
                                  s.columns[i]);
    for (const auto& col : s.columns) s.total_count += col.size();
    return s;
}

namespace serial {

SwitchingCellSet compute_switching_cells(const Curve& a, const Curve& b, double delta, Norm norm) {
    require_same_dim(a, b);
    if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
    const UniformGrid grid = make_row_grid(b, delta);
    SwitchingCellSet s;
    s.columns.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        switching_rows_for_column(a[i], b, delta, norm, grid, s.columns[i]);
    for (const auto& col : s.columns) s.total_count += col.size();
    return s;
}

}  // namespace serial

std::vector<IntervalList> columns_from_switching(const SwitchingCellSet& s, const Curve& a,
                                                 const Curve& b, double delta, Norm norm) {
    const std::size_t m = b.size();
    std::vector<IntervalList> cols(s.columns.size());
    for (std::size_t i = 0; i < s.columns.size(); ++i) {
        const auto& rows = s.columns[i];
        IntervalList& out = cols[i];
        std::size_t k = 0;
        while (k < rows.size()) {
            const std::size_t j = rows[k];
            const bool low = (j == 0) || dist(a[i], b[j - 1], norm) > delta;
            const bool high = (j == m - 1) || dist(a[i], b[j + 1], norm) > delta;
            if (!low) throw ContractViolation("switching rows: run without a low endpoint");
            if (high) {
                out.push_back({j, j});
                ++k;
                continue;
            }
            if (k + 1 >= rows.size())
                throw ContractViolation("switching rows: unterminated run");
            const std::size_t j2 = rows[k + 1];
            const bool high2 = (j2 == m - 1) || dist(a[i], b[j2 + 1], norm) > delta;
            if (!high2) throw ContractViolation("switching rows: run without a high endpoint");
            out.push_back({j, j2});
            k += 2;
        }
    }
    return cols;
}

IntervalList merge_col(const IntervalList& r_prev, const IntervalList& c_i) {
    // A cell (i, j) is reachable iff it is white and some reachable cell of
    // the previous column covers row j or j-1 (right or diagonal move), or a
    // reachable cell sits directly below inside the same white run. Each
    // previous interval [a, b] therefore acts as the entry band [a, b+1],
    // and a run [c, d] entered at row e is reachable on [e, d].
    //
    // The literal endpoint-scan formulation of this merge can also be read
    // as opening the output interval at an entry-list endpoint that lies
    // below the white run; the interval form below pins the recurrence and
    // is validated against full-matrix reachability.
    IntervalList out;
    std::size_t ri = 0;
    for (const RowInterval& run : c_i) {
        while (ri < r_prev.size() && r_prev[ri].hi + 1 < run.lo) ++ri;
        if (ri == r_prev.size()) break;
        const RowInterval& entry = r_prev[ri];
        if (entry.lo <= run.hi) out.push_back({std::max(run.lo, entry.lo), run.hi});
    }
    return out;
}

std::vector<IntervalList> reachable_columns(const Curve& a, const Curve& b, double delta,
                                            Norm norm) {
    const SwitchingCellSet s = compute_switching_cells(a, b, delta, norm);
    const std::vector<IntervalList> cols = columns_from_switching(s, a, b, delta, norm);
    std::vector<IntervalList> reach(cols.size());
    if (cols.empty()) return reach;
    if (!cols[0].empty() && cols[0].front().lo == 0)
        reach[0].push_back({0, cols[0].front().hi});
    for (std::size_t i = 1; i < cols.size(); ++i) reach[i] = merge_col(reach[i - 1], cols[i]);
    return reach;
}

bool decision_switching(const Curve& a, const Curve& b, double delta, Norm norm,
                        std::size_t* switching_count) {
    require_same_dim(a, b);
    const SwitchingCellSet s = compute_switching_cells(a, b, delta, norm);
    if (switching_count) *switching_count = s.total_count;
    const std::vector<IntervalList> cols = columns_from_switching(s, a, b, delta, norm);
    IntervalList reach;
    if (!cols[0].empty() && cols[0].front().lo == 0) reach.push_back({0, cols[0].front().hi});
    for (std::size_t i = 1; i < cols.size() && !reach.empty(); ++i)
        reach = merge_col(reach, cols[i]);
    return !reach.empty() && reach.back().hi == b.size() - 1;
}

DistanceSelector::DistanceSelector(const Curve& a, const Curve& b, Norm norm) {
    require_same_dim(a, b);
    sorted_.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) sorted_.push_back(dist(a[i], b[j], norm));
    std::sort(sorted_.begin(), sorted_.end());
}

double DistanceSelector::select(std::int64_t k) const {
    if (k < 1 || k > total()) throw std::invalid_argument("rank out of range");
    return sorted_[static_cast<std::size_t>(k - 1)];
}

double select_pairwise_distance(const Curve& a, const Curve& b, std::int64_t k, Norm norm) {
    return DistanceSelector(a, b, norm).select(k);
}

OutputSensitiveResult dfd_output_sensitive(const Curve& a, const Curve& b, Norm norm) {
    const DistanceSelector sel(a, b, norm);
    OutputSensitiveResult res;
    std::int64_t lo = 1, hi = sel.total();
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        const double delta = sel.select(mid);
        std::size_t count = 0;
        const bool ok = decision_switching(a, b, delta, norm, &count);
        ++res.probes;
        res.max_switching_cells = std::max(res.max_switching_cells, count);
        if (ok)
            hi = mid;
        else
            lo = mid + 1;
    }
    res.value = sel.select(lo);
    std::size_t count = 0;
    if (!decision_switching(a, b, res.value, norm, &count))
        throw ContractViolation("rank search landed on an infeasible distance");
    ++res.probes;
    res.max_switching_cells = std::max(res.max_switching_cells, count);
    return res;
}

}  // namespace frechet
