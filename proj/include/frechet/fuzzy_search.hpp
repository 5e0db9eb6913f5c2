#ifndef FRECHET_FUZZY_SEARCH_HPP
#define FRECHET_FUZZY_SEARCH_HPP

// Generic epsilon-approximation driver: WSPD candidate distances plus a
// fuzzy binary search.

#include <functional>
#include <vector>

#include "frechet/errors.hpp"
#include "frechet/geometry.hpp"

namespace frechet {

enum class FuzzyAnswer { No, Yes };

/// A fuzzy decision procedure for an optimum delta*. An answer must satisfy
///   Yes => delta* <= (1 + accuracy) * delta
///   No  => delta* >= (1 - accuracy) * delta
/// and may be either inside the band.
using FuzzyDecider = std::function<FuzzyAnswer(double delta, double accuracy)>;

struct ProbeRecord {
    double delta = 0.0;
    double accuracy = 0.0;
    FuzzyAnswer answer = FuzzyAnswer::No;
};

struct SearchTrace {
    std::vector<ProbeRecord> probes;
    double result = 0.0;
};

struct Bracket {
    double lo = 0.0;  // strictly below delta*
    double hi = 0.0;  // at or above delta*
};

/// Binary search over sorted positive candidates with the decider at
/// accuracy 1/10, landing on adjacent candidates x (answer No) and y (answer
/// Yes). Returns (4/5 x, 7/5 y); when every answer is identical, both roles
/// collapse onto the extreme candidate. The returned interval contains
/// delta* whenever the decider honors its contract and delta* lies within
/// the candidates' span.
Bracket bracket_from_candidates(const std::vector<double>& candidates, const FuzzyDecider& decide,
                                SearchTrace* trace = nullptr);

struct FuzzyOptimizeResult {
    double value = 0.0;
    SearchTrace trace;
};

/// epsilon-approximates delta*, the optimum of a problem whose answer is a
/// pairwise distance of `points`, using only the fuzzy decider. Stage one
/// brackets delta* through WSPD candidate distances at accuracy 1/10; stage
/// two bisects the bracket at accuracy eps/4, keeping decide(k_l) == No and
/// decide(k_h) == Yes, and returns k_l once the gap is small enough that
/// (1 - eps) delta* <= k_l <= (1 + eps) delta* is forced.
FuzzyOptimizeResult fuzzy_optimize(const std::vector<Point>& points, const FuzzyDecider& decide,
                                   double eps, Norm norm);

}  // namespace frechet

#endif
