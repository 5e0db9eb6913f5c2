#include "frechet/curve_classes.hpp"

#include <cmath>

#include "doctest.h"
#include "frechet/generators.hpp"
#include "frechet/oracle.hpp"
#include "support.hpp"

using namespace frechet;
using test::Rng;

namespace {

Curve seg_a() { return Curve({{0.0, 0.0}, {2.0, 0.0}}); }
Curve seg_b() { return Curve({{0.0, 1.0}, {2.0, 1.0}}); }

}  // namespace

TEST_CASE("fuzzy_decide_simplified on identical curves") {
    Rng rng(51);
    const Curve c = test::random_walk_curve(rng, 20, 2);
    CHECK(fuzzy_decide_simplified(c, c, 0.5, 0.1, 0.5, Norm::L2) == FuzzyAnswer::Yes);
}

TEST_CASE("fuzzy_decide_simplified on the 2x2 instance") {
    CHECK(fuzzy_decide_simplified(seg_a(), seg_b(), 2.0, 0.1, 0.5, Norm::L2) == FuzzyAnswer::Yes);
    CHECK(fuzzy_decide_simplified(seg_a(), seg_b(), 0.5, 0.1, 0.5, Norm::L2) == FuzzyAnswer::No);
}

TEST_CASE("fuzzy_decide_simplified honors the fuzzy contract") {
    Rng rng(52);
    for (int trial = 0; trial < 3000; ++trial) {
        const Curve a = test::random_walk_curve(rng, 1 + rng.index(15), 2);
        const Curve b = test::random_walk_curve(rng, 1 + rng.index(15), 2);
        const double truth = dfd_dp(a, b, Norm::L2).value;
        const double delta = rng.uniform(0.05, 6.0);
        const double eps = rng.uniform(0.01, 0.99);
        const FuzzyAnswer ans = fuzzy_decide_simplified(a, b, delta, eps, 0.5, Norm::L2);
        if (ans == FuzzyAnswer::Yes)
            CHECK(test::leq_ulps(truth, (1.0 + eps) * delta, 4));
        else
            CHECK(test::leq_ulps((1.0 - eps) * delta, truth, 4));
    }
}

TEST_CASE("parallel and serial deciders agree") {
    Rng rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        const Curve a = test::random_walk_curve(rng, 1 + rng.index(30), 2);
        const Curve b = test::random_walk_curve(rng, 1 + rng.index(30), 2);
        const double delta = rng.uniform(0.05, 5.0);
        CHECK(fuzzy_decide_simplified(a, b, delta, 0.2, 0.5, Norm::L2) ==
              serial::fuzzy_decide_simplified(a, b, delta, 0.2, 0.5, Norm::L2));
    }
}

TEST_CASE("approx_dfd_kbounded on dense straight segments") {
    Rng rng(54);
    const Curve a = generate_kbounded(60, 1.0, 1);
    const Curve b = generate_kbounded(50, 1.0, 2);
    ApproxParams params;
    params.eps = 0.25;
    params.kappa = 1.0;
    const double truth = dfd_dp(a, b, Norm::L2).value;
    const double approx = approx_dfd_kbounded(a, b, params, Norm::L2).value;
    CHECK(approx >= (1.0 - params.eps) * truth);
    CHECK(approx <= (1.0 + params.eps) * truth);
}

TEST_CASE("approx_dfd_kbounded detects an exact zero") {
    Rng rng(55);
    const Curve c = test::random_walk_curve(rng, 25, 2);
    ApproxParams params;
    params.eps = 0.3;
    CHECK(approx_dfd_kbounded(c, c, params, Norm::L2).value == 0.0);

    // Zero DFD without equal vertex counts.
    const Curve a({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
    const Curve b({{0.0, 0.0}, {1.0, 0.0}});
    CHECK(approx_dfd_kbounded(a, b, params, Norm::L2).value == 0.0);
}

TEST_CASE("approx_dfd_kbounded on staircases meets the eps bound") {
    Rng rng(56);
    for (int trial = 0; trial < 100; ++trial) {
        const Curve a = generate_kbounded(10 + rng.index(40), 3.0, rng.eng());
        const Curve b = generate_kbounded(10 + rng.index(40), 3.0, rng.eng());
        ApproxParams params;
        params.eps = 0.1;
        params.kappa = 3.0;
        const double truth = dfd_dp(a, b, Norm::L2).value;
        const double approx = approx_dfd_kbounded(a, b, params, Norm::L2).value;
        CHECK(approx >= (1.0 - params.eps) * truth);
        CHECK(approx <= (1.0 + params.eps) * truth);
    }
}

TEST_CASE("small_exact finds small distances exactly") {
    const Curve a({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}});
    const Curve b({{0.0, 0.3}, {1.0, 0.3}, {2.0, 0.3}});
    const auto v = small_exact(a, b, 2.0, Norm::L2);
    REQUIRE(v.has_value());
    CHECK(*v == dfd_dp(a, b, Norm::L2).value);
    CHECK(*v == doctest::Approx(0.3));
}

TEST_CASE("small_exact of identical chains is 0") {
    const Curve a({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}});
    CHECK(small_exact(a, a, 1.0, Norm::L2) == 0.0);
}

TEST_CASE("small_exact reports NOT_SMALL beyond the cap") {
    const Curve a({{0.0, 0.0}, {1.0, 0.0}});
    const Curve b({{0.0, 5.0}, {1.0, 5.0}});
    CHECK(dfd_dp(a, b, Norm::L2).value == 5.0);
    CHECK_FALSE(small_exact(a, b, 2.0, Norm::L2).has_value());
}

TEST_CASE("small_exact equals the oracle whenever it returns") {
    Rng rng(57);
    for (int trial = 0; trial < 300; ++trial) {
        const Curve a = test::random_walk_curve(rng, 1 + rng.index(15), 2);
        const Curve b = test::random_walk_curve(rng, 1 + rng.index(15), 2);
        const double cap = rng.uniform(0.5, 4.0);
        const auto v = small_exact(a, b, cap, Norm::L2);
        const double truth = dfd_dp(a, b, Norm::L2).value;
        if (v.has_value()) {
            CHECK(*v == truth);
        } else {
            CHECK(truth >= cap);
        }
    }
}

TEST_CASE("appr_f_backbone delegates small instances to small_exact") {
    const Curve a({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}});
    const Curve b({{0.0, 0.3}, {1.0, 0.3}, {2.0, 0.3}, {3.0, 0.3}});
    CHECK(appr_f_backbone(a, b, 0.2, Norm::L2) == doctest::Approx(0.3));
    CHECK(appr_f_backbone(a, a, 0.2, Norm::L2) == 0.0);
}

TEST_CASE("appr_f_backbone rejects non-backbone input") {
    const Curve bad({{0.0, 0.0}, {0.1, 0.0}, {0.2, 0.0}});
    CHECK_THROWS_AS(appr_f_backbone(bad, bad, 0.2, Norm::L2), std::invalid_argument);
}

TEST_CASE("appr_f_backbone approximates a moderate distance") {
    // Two parallel unit-spaced chains offset by 8 vertically.
    std::vector<Point> va, vb;
    for (int i = 0; i < 12; ++i) {
        va.push_back({static_cast<double>(i), 0.0});
        vb.push_back({static_cast<double>(i), 8.0});
    }
    const Curve a(va), b(vb);
    const double truth = dfd_dp(a, b, Norm::L2).value;
    CHECK(truth == 8.0);
    const double eps = 0.2;
    const double v = appr_f_backbone(a, b, eps, Norm::L2);
    CHECK(v >= (1.0 - eps) * truth);
    CHECK(v <= (1.0 + eps) * truth);
    // Geometric-search band: the output is within one growth step of truth.
    CHECK(v >= truth / (1.0 + eps));
    CHECK(v <= truth * (1.0 + eps / 3.0) / (1.0 - eps / 3.0));
}

TEST_CASE("appr_f_backbone probe sequence is one run plus one flip") {
    Rng rng(58);
    for (int trial = 0; trial < 40; ++trial) {
        const Curve a = generate_backbone(30, 0.9, 1.2, rng.eng());
        const Curve b = generate_backbone(30, 0.9, 1.2, rng.eng());
        std::vector<FuzzyAnswer> probes;
        appr_f_backbone(a, b, 0.3, Norm::L2, 0.5, 2.0, &probes);
        if (probes.size() < 2) continue;  // delegated before both answers
        for (std::size_t i = 0; i + 2 < probes.size(); ++i) CHECK(probes[i] == probes[i + 1]);
        CHECK(probes[probes.size() - 2] != probes.back());
    }
}

TEST_CASE("densify splits a segment into exact thirds") {
    const Curve c({{0.0, 0.0}, {3.0, 0.0}});
    const Curve d = densify(c, 1.0);
    REQUIRE(d.size() == 4);
    CHECK(d[1] == Point{1.0, 0.0});
    CHECK(d[2] == Point{2.0, 0.0});
}

TEST_CASE("densify leaves short edges alone") {
    const Curve c({{0.0, 0.0}, {0.5, 0.0}, {1.0, 0.4}});
    const Curve d = densify(c, 1.0);
    CHECK(d.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(d[i] == c[i]);
}

TEST_CASE("densify keeps the original vertices as a subsequence") {
    Rng rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        const Curve c = test::random_walk_curve(rng, 2 + rng.index(10), 2, 2.0);
        const Curve d = densify(c, rng.uniform(0.2, 1.5));
        std::size_t pos = 0;
        for (const Point& p : c) {
            while (pos < d.size() && !(d[pos] == p)) ++pos;
            REQUIRE(pos < d.size());
            ++pos;
        }
    }
}

TEST_CASE("DFD of refinements decreases toward the continuous value") {
    Rng rng(60);
    for (int trial = 0; trial < 30; ++trial) {
        const Curve a = test::random_walk_curve(rng, 2 + rng.index(6), 2, 3.0);
        const Curve b = test::random_walk_curve(rng, 2 + rng.index(6), 2, 3.0);
        double prev = dfd_dp(a, b, Norm::L2).value;
        for (double h : {2.0, 1.0, 0.5}) {
            const double cur = dfd_dp(densify(a, h), densify(b, h), Norm::L2).value;
            CHECK(cur <= prev + h);  // sandwich band shrinks with h
            prev = cur;
        }
    }
}

TEST_CASE("approx_fd_continuous on parallel segments") {
    const Curve a({{0.0, 0.0}, {10.0, 0.0}});
    const Curve b({{0.0, 1.0}, {10.0, 1.0}});
    for (double eps : {0.5, 0.1}) {
        const double v = approx_fd_continuous(a, b, eps, Norm::L2);
        CHECK(v >= 1.0);
        CHECK(v <= 1.0 + eps * v + 1e-12);
    }
}

TEST_CASE("approx_fd_continuous of identical curves is 0") {
    Rng rng(61);
    const Curve c = test::random_walk_curve(rng, 8, 2);
    CHECK(approx_fd_continuous(c, c, 0.2, Norm::L2) == 0.0);
}

TEST_CASE("approx_fd_continuous tracks a fine densification") {
    Rng rng(62);
    for (int trial = 0; trial < 20; ++trial) {
        const Curve a = test::random_walk_curve(rng, 2 + rng.index(5), 2, 3.0);
        const Curve b = test::random_walk_curve(rng, 2 + rng.index(5), 2, 3.0);
        const double eps = 0.1;
        const double v = approx_fd_continuous(a, b, eps, Norm::L2);
        const double coarse = dfd_dp(a, b, Norm::L2).value;
        if (coarse == 0.0) continue;
        const double fine =
            dfd_dp(densify(a, eps * v / 40.0), densify(b, eps * v / 40.0), Norm::L2).value;
        CHECK(v <= coarse + 1e-12);
        CHECK(v >= fine - eps * v - 1e-12);
    }
}
