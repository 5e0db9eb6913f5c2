#ifndef FRECHET_CURVE_CLASSES_HPP
#define FRECHET_CURVE_CLASSES_HPP

// Specialized epsilon-approximation algorithms for kappa-bounded and
// backbone curves, plus continuous Frechet approximation via densification.

#include <cstddef>
#include <optional>
#include <vector>

#include "frechet/fuzzy_search.hpp"
#include "frechet/geometry.hpp"

namespace frechet {

struct ApproxParams {
    double eps = 0.1;    // target approximation ratio, 0 < eps < 1
    double kappa = 1.0;  // kappa bound of the second curve (not verified)
    double c1 = 0.5;     // backbone edge-length bounds
    double c2 = 2.0;
    double beta = 0.5;  // grid query slack
};

/// Instrumentation from one fuzzy decision (white cells per the simplified
/// diagram, simplified sizes).
struct DecideStats {
    std::size_t white_cells = 0;
    std::size_t simplified_a = 0;
    std::size_t simplified_b = 0;
};

/// The shared eps-fuzzy decision engine for both curve classes: simplify
/// both curves at mu = eps*delta/2, throw the second simplification into a
/// grid of cell size beta*delta, mark white cells through approximate range
/// queries filtered exactly at delta, and test for a viable path. Yes
/// implies DFD <= (1+eps) delta; No implies DFD >= (1-eps) delta.
FuzzyAnswer fuzzy_decide_simplified(const Curve& a, const Curve& b, double delta, double eps,
                                    double beta, Norm norm, DecideStats* stats = nullptr);

namespace serial {
/// Reference single-threaded white-cell marking path.
FuzzyAnswer fuzzy_decide_simplified(const Curve& a, const Curve& b, double delta, double eps,
                                    double beta, Norm norm, DecideStats* stats = nullptr);
}  // namespace serial

/// eps-approximation of DFD(a, b) for a kappa-bounded curve b: WSPD search
/// over the union of vertex sets driven by the fuzzy decision engine.
/// Returns the search value and its probe trace.
FuzzyOptimizeResult approx_dfd_kbounded(const Curve& a, const Curve& b, const ApproxParams& params,
                                        Norm norm);

/// Exact DFD when it is below beta_cap, found by collecting all vertex
/// pairs closer than beta_cap through grid queries and binary searching
/// their distances with the exact decision procedure. nullopt when
/// DFD >= beta_cap.
std::optional<double> small_exact(const Curve& a, const Curve& b, double beta_cap, Norm norm);

/// eps-approximation of DFD for two backbone curves by geometric search
/// from delta = 1, delegating to small_exact below 1. Validates both curves
/// against check_backbone with the given constants.
double appr_f_backbone(const Curve& a, const Curve& b, double eps, Norm norm, double c1 = 0.5,
                       double c2 = 2.0, std::vector<FuzzyAnswer>* probe_log = nullptr);

/// Subdivides every edge with equally spaced interior vertices so that all
/// edge lengths are at most max_edge. Original vertices are preserved as a
/// subsequence; the continuous image is unchanged.
Curve densify(const Curve& c, double max_edge);

enum class ExactAlgorithm { Dp, BinarySearch, OutputSensitive };

/// One-sided eps-approximation of the continuous Frechet distance through
/// the sandwich FD <= DFD <= FD + longest-edge: densify both curves at
/// eps*pilot/4 and recompute DFD, refining once if the value collapsed.
double approx_fd_continuous(const Curve& a, const Curve& b, double eps, Norm norm,
                            ExactAlgorithm algo = ExactAlgorithm::Dp);

/// Exact DFD dispatch used by approx_fd_continuous and the CLI.
double exact_dfd(const Curve& a, const Curve& b, Norm norm, ExactAlgorithm algo);

}  // namespace frechet

#endif
