#ifndef FRECHET_OUTPUT_SENSITIVE_HPP
#define FRECHET_OUTPUT_SENSITIVE_HPP

// Pseudo-output-sensitive exact DFD: switching cells, compressed column
// reachability, and the selection-driven search.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "frechet/freespace.hpp"
#include "frechet/geometry.hpp"

namespace frechet {

/// White cells with a black (or out-of-range) vertical neighbor, per
/// column. Rows 0 and m-1 count out-of-range neighbors as black, so white
/// boundary rows are switching cells; every maximal white run is then
/// delimited by exactly two (or one coinciding) switching rows.
struct SwitchingCellSet {
    std::vector<std::vector<std::size_t>> columns;  // sorted rows per column
    std::size_t total_count = 0;
};

/// Switching cells found by a uniform grid (cell size delta/2) over the
/// second curve's vertices: candidates near each a[i] are filtered at delta
/// and kept when a vertical neighbor falls outside delta. Columns are
/// computed in parallel when OpenMP is enabled.
SwitchingCellSet compute_switching_cells(const Curve& a, const Curve& b, double delta, Norm norm);

namespace serial {
SwitchingCellSet compute_switching_cells(const Curve& a, const Curve& b, double delta, Norm norm);
}  // namespace serial

/// Reconstructs each column's maximal white runs by pairing consecutive
/// switching rows (run bottom = black below, run top = black above); no
/// per-cell scan. Throws ContractViolation on malformed pairing.
std::vector<IntervalList> columns_from_switching(const SwitchingCellSet& s, const Curve& a,
                                                 const Curve& b, double delta, Norm norm);

/// One column step of compressed reachability: intervals of rows reachable
/// in the current column, given the reachable intervals of the previous
/// column and the current column's white runs.
IntervalList merge_col(const IntervalList& r_prev, const IntervalList& c_i);

/// Reachable row intervals for every column.
std::vector<IntervalList> reachable_columns(const Curve& a, const Curve& b, double delta,
                                            Norm norm);

/// Decision "DFD(a,b) <= delta?" from switching cells alone. Optionally
/// reports |B| for the probed threshold.
bool decision_switching(const Curve& a, const Curve& b, double delta, Norm norm,
                        std::size_t* switching_count = nullptr);

/// Cached k-th smallest of the n*m cross distances (rank k is 1-based).
class DistanceSelector {
public:
    DistanceSelector(const Curve& a, const Curve& b, Norm norm);
    std::int64_t total() const { return static_cast<std::int64_t>(sorted_.size()); }
    double select(std::int64_t k) const;  // 1 <= k <= total()

private:
    std::vector<double> sorted_;
};

/// One-off variant of the selector.
double select_pairwise_distance(const Curve& a, const Curve& b, std::int64_t k, Norm norm);

struct OutputSensitiveResult {
    double value = 0.0;
    std::size_t max_switching_cells = 0;  // empirical Phi over probed thresholds
    std::size_t probes = 0;
};

/// Exact DFD by binary search on distance ranks with the switching-cell
/// decision. Matches the DP value bit-for-bit.
OutputSensitiveResult dfd_output_sensitive(const Curve& a, const Curve& b, Norm norm);

}  // namespace frechet

#endif
