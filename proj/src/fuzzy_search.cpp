#include "frechet/fuzzy_search.hpp"

#include <algorithm>
#include <cmath>

#include "frechet/spatial_index.hpp"

namespace frechet {

namespace {

FuzzyAnswer probe(const FuzzyDecider& decide, double delta, double accuracy, SearchTrace* trace) {
    const FuzzyAnswer a = decide(delta, accuracy);
    if (trace) trace->probes.push_back({delta, accuracy, a});
    return a;
}

constexpr double kStageOneAccuracy = 0.1;

}  // namespace

Bracket bracket_from_candidates(const std::vector<double>& candidates, const FuzzyDecider& decide,
                                SearchTrace* trace) {
    if (candidates.empty()) throw std::invalid_argument("no candidates");
    if (!std::is_sorted(candidates.begin(), candidates.end()))
        throw std::invalid_argument("candidates must be sorted");

    const auto at = [&](std::size_t i) { return candidates[i]; };
    const std::size_t k = candidates.size();

    if (k == 1 || probe(decide, at(0), kStageOneAccuracy, trace) == FuzzyAnswer::Yes)
        return {0.8 * at(0), 1.4 * at(0)};
    if (probe(decide, at(k - 1), kStageOneAccuracy, trace) == FuzzyAnswer::No)
        return {0.8 * at(k - 1), 1.4 * at(k - 1)};

    // Invariant: answer at lo is No, at hi is Yes.
    std::size_t lo = 0, hi = k - 1;
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (probe(decide, at(mid), kStageOneAccuracy, trace) == FuzzyAnswer::Yes)
            hi = mid;
        else
            lo = mid;
    }
    return {0.8 * at(lo), 1.4 * at(hi)};
}

FuzzyOptimizeResult fuzzy_optimize(const std::vector<Point>& points, const FuzzyDecider& decide,
                                   double eps, Norm norm) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("need 0 < eps < 1");
    if (points.size() < 2) throw std::invalid_argument("need at least 2 points");

    FuzzyOptimizeResult res;
    SearchTrace& trace = res.trace;

    const auto pairs = build_wspd(points, 10.0);
    std::vector<double> cand = wspd_candidate_values(pairs, points, norm);
    cand.erase(cand.begin(), std::upper_bound(cand.begin(), cand.end(), 0.0));
    if (cand.empty()) {
        // All points coincide, so every pairwise distance is zero.
        trace.result = 0.0;
        return res;
    }

    const Bracket br = bracket_from_candidates(cand, decide, &trace);
    const double acc = eps / 4.0;
    double k_l = br.lo / (1.0 + eps);
    double k_h = br.hi / (1.0 - eps);

    // With an honest decider the initial answers are forced: k_l sits
    // strictly below any delta* consistent with the stage-one answers and
    // k_h strictly above. A few geometric adjustment rounds recover from
    // marginal cases; running out of them means the decider broke its
    // contract.
    int guard = 0;
    while (probe(decide, k_l, acc, &trace) == FuzzyAnswer::Yes) {
        k_h = k_l;
        k_l /= 2.0;
        if (++guard > 900) throw ContractViolation("fuzzy decider: no lower No answer found");
    }
    guard = 0;
    while (probe(decide, k_h, acc, &trace) == FuzzyAnswer::No) {
        k_l = std::max(k_l, k_h);
        k_h *= 2.0;
        if (++guard > 900) throw ContractViolation("fuzzy decider: no upper Yes answer found");
    }
    if (!(k_l < k_h)) throw ContractViolation("fuzzy decider: inverted bracket");

    // Bisect while keeping decide(k_l) == No and decide(k_h) == Yes. The
    // stop threshold is the tighter of the bracket-relative bound and a
    // k_l-relative bound that caps the final gap at eps/2 * delta*.
    const double bracket_gap = (br.hi - br.lo) * eps / 3.0;
    int rounds = 0;
    while (k_h - k_l > std::min(bracket_gap, 0.5 * eps * (1.0 - acc) * k_l)) {
        const double mid = 0.5 * (k_l + k_h);
        if (probe(decide, mid, acc, &trace) == FuzzyAnswer::Yes)
            k_h = mid;
        else
            k_l = mid;
        if (++rounds > 4000) throw ContractViolation("fuzzy refinement failed to converge");
    }

    trace.result = k_l;
    res.value = k_l;
    return res;
}

}  // namespace frechet
