#include <gtest/gtest.h>

#include <cmath>

#include "support/fixtures.hpp"
#include "vrpsplit/generator.hpp"
#include "vrpsplit/instance.hpp"

using namespace vrpsplit;
using vrpsplit::testing::example12;

namespace {

Instance single(Cost demand, Cost capacity) { return Instance({{demand, 0, 7, 7}}, capacity); }

bool mentions(const ValidationReport& r, const std::string& text) {
    for (const auto& v : r.violations) {
        if (v.find(text) != std::string::npos) return true;
    }
    return false;
}

} // namespace

TEST(Validate, SingleFeasibleCustomer) { EXPECT_TRUE(validate(single(5, 10), Mode::hard).ok()); }

TEST(Validate, DemandAboveCapacityInHardMode) {
    const auto report = validate(single(15, 10), Mode::hard);
    ASSERT_EQ(report.violations.size(), 1u);
    EXPECT_EQ(report.violations[0], "demand exceeds capacity at i=1");
}

TEST(Validate, SoftModeAdmitsAnyDemand) { EXPECT_TRUE(validate(single(15, 10), Mode::soft).ok()); }

TEST(Validate, ReportsEveryViolation) {
    Instance inst({{-1, 0, NAN, 3}, {2, -4, 1, INFINITY}}, 0, -1);
    const auto report = validate(inst, Mode::hard);
    EXPECT_TRUE(mentions(report, "capacity must be positive"));
    EXPECT_TRUE(mentions(report, "alpha"));
    EXPECT_TRUE(mentions(report, "invalid demand at i=1"));
    EXPECT_TRUE(mentions(report, "invalid distance from depot at i=1"));
    EXPECT_TRUE(mentions(report, "invalid distance from previous customer at i=2"));
    EXPECT_TRUE(mentions(report, "invalid distance to depot at i=2"));
}

TEST(Validate, FirstDistPrevIsIgnored) {
    Instance inst({{1, -5, 1, 1}}, 10);
    EXPECT_TRUE(validate(inst, Mode::hard).ok());
}

TEST(Preprocess, Example12Prefixes) {
    const Preprocessed pre = preprocess(example12());
    const std::vector<Cost> d{0, 3, 10, 12, 19, 22, 30, 36, 44, 48, 51, 54};
    const std::vector<Cost> q{0, 11, 14, 20, 25, 32, 40, 41, 48, 51, 58, 61, 67};
    EXPECT_EQ(std::vector<Cost>(pre.distances().begin(), pre.distances().end()), d);
    EXPECT_EQ(std::vector<Cost>(pre.loads().begin(), pre.loads().end()), q);
}

TEST(Preprocess, SingleCustomer) {
    const Preprocessed pre = preprocess(single(5, 10));
    EXPECT_EQ(std::vector<Cost>(pre.distances().begin(), pre.distances().end()), std::vector<Cost>{0});
    EXPECT_EQ(std::vector<Cost>(pre.loads().begin(), pre.loads().end()), (std::vector<Cost>{0, 5}));
}

TEST(Preprocess, EmptyInstance) {
    const Preprocessed pre = preprocess(Instance({}, 10));
    EXPECT_EQ(pre.size(), 0);
    EXPECT_TRUE(pre.distances().empty());
    EXPECT_EQ(pre.loads().size(), 1u);
}

TEST(Preprocess, IdempotentAndMatchesDirectSums) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Instance inst = gen_random(static_cast<int>(seed * 5 % 51), seed);
        const Preprocessed pre = preprocess(inst);
        EXPECT_EQ(pre, preprocess(inst));
        EXPECT_EQ(pre.distance(1) == 0 || inst.empty(), true);
        for (int i = 0; i < inst.size(); ++i) {
            for (int j = i + 1; j <= inst.size(); ++j) {
                Cost direct = 0;
                Cost load = 0;
                for (int k = i + 2; k <= j; ++k) direct += inst.customer(k).dist_prev;
                for (int k = i + 1; k <= j; ++k) load += inst.customer(k).demand;
                ASSERT_EQ(pre.distance(j) - pre.distance(i + 1), direct) << "seed " << seed;
                ASSERT_EQ(pre.load(j) - pre.load(i), load);
            }
        }
        for (int i = 1; i < inst.size(); ++i) {
            EXPECT_LE(pre.distance(i), pre.distance(i + 1));
            EXPECT_LE(pre.load(i), pre.load(i + 1));
        }
    }
}

TEST(ArcCost, Example12Examples) {
    const Instance inst = example12();
    const Preprocessed pre(inst);
    EXPECT_EQ(arc_cost(pre, inst, 0, 4), 25);
    EXPECT_EQ(arc_cost(pre, inst, 4, 9), 44);
    for (int i = 0; i < inst.size(); ++i) {
        EXPECT_EQ(arc_cost(pre, inst, i, i + 1),
                  inst.customer(i + 1).dist_from_depot + inst.customer(i + 1).dist_to_depot);
    }
}

TEST(ArcCost, RejectsBadIndices) {
    const Instance inst = example12();
    const Preprocessed pre(inst);
    EXPECT_THROW(arc_cost(pre, inst, 3, 3), std::out_of_range);
    EXPECT_THROW(arc_cost(pre, inst, -1, 2), std::out_of_range);
    EXPECT_THROW(arc_cost(pre, inst, 0, 13), std::out_of_range);
    EXPECT_THROW(arc_feasible(pre, 30, 5, 4), std::out_of_range);
    EXPECT_THROW(soft_arc_cost(pre, inst, 12, 13), std::out_of_range);
}

TEST(ArcFeasible, Example12Examples) {
    const Instance inst = example12();
    const Preprocessed pre(inst);
    EXPECT_FALSE(arc_feasible(pre, 30, 0, 7));
    EXPECT_TRUE(arc_feasible(pre, 30, 1, 7));
    for (int i = 0; i < inst.size(); ++i) EXPECT_TRUE(arc_feasible(pre, 30, i, i + 1));
}

TEST(SoftArcCost, Example12Examples) {
    const Instance inst = example12(1);
    const Preprocessed pre(inst);
    EXPECT_EQ(soft_arc_cost(pre, inst, 0, 12), 101);
    for (int i = 0; i < inst.size(); ++i) {
        for (int j = i + 1; j <= inst.size(); ++j) {
            if (arc_feasible(pre, inst.capacity(), i, j)) {
                EXPECT_EQ(soft_arc_cost(pre, inst, i, j), arc_cost(pre, inst, i, j));
            }
            EXPECT_EQ(soft_arc_cost(pre, example12(0), i, j), arc_cost(pre, inst, i, j));
        }
    }
}

TEST(ExtractRoutes, Example12Chain) {
    std::vector<int> pred(13, -1);
    pred[12] = 9;
    pred[9] = 4;
    pred[4] = 0;
    EXPECT_EQ(extract_routes(pred, 12), vrpsplit::testing::kExample12Routes);
}

TEST(ExtractRoutes, SingleCustomer) {
    const std::vector<int> pred{-1, 0};
    EXPECT_EQ(extract_routes(pred, 1), (std::vector<Route>{{1, 1}}));
}

TEST(ExtractRoutes, EmptyTour) { EXPECT_TRUE(extract_routes(std::vector<int>{-1}, 0).empty()); }

TEST(ExtractRoutes, BrokenChainThrows) {
    EXPECT_THROW(extract_routes(std::vector<int>{-1, 0, 2}, 2), std::logic_error);
    EXPECT_THROW(extract_routes(std::vector<int>{-1, 0, 1, 3}, 3), std::logic_error);
    EXPECT_THROW(extract_routes(std::vector<int>{-1, -1}, 1), std::logic_error);
    EXPECT_THROW(extract_routes(std::vector<int>{-1}, 4), std::logic_error);
}

TEST(RecomputeCost, Example12Routes) {
    EXPECT_EQ(recompute_cost(example12(), vrpsplit::testing::kExample12Routes, Mode::hard), 84);
}

TEST(RecomputeCost, EmptyTour) { EXPECT_EQ(recompute_cost(Instance({}, 10), {}, Mode::hard), 0); }

TEST(RecomputeCost, OverloadedRouteIsInfiniteInHardMode) {
    const std::vector<Route> all{{1, 12}};
    EXPECT_EQ(recompute_cost(example12(), all, Mode::hard), kInfinity);
    EXPECT_EQ(recompute_cost(example12(1), all, Mode::soft), 101);
}

TEST(RecomputeCost, RejectsGapsAndOverlaps) {
    const Instance inst = example12();
    EXPECT_THROW(recompute_cost(inst, std::vector<Route>{{1, 4}, {6, 12}}, Mode::hard), std::invalid_argument);
    EXPECT_THROW(recompute_cost(inst, std::vector<Route>{{1, 4}, {4, 12}}, Mode::hard), std::invalid_argument);
    EXPECT_THROW(recompute_cost(inst, std::vector<Route>{{1, 4}, {5, 11}}, Mode::hard), std::invalid_argument);
    EXPECT_THROW(recompute_cost(inst, std::vector<Route>{{1, 13}}, Mode::hard), std::invalid_argument);
}

// Quadrangle inequality on feasible arcs; it holds with equality for these
// costs, so both directions are asserted.
TEST(ArcCostProperties, MongeOnExhaustiveQuadruples) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        RandomOptions options;
        options.capacity = 100 + 50 * static_cast<Cost>(seed);
        const Instance inst = gen_random(50, seed, options);
        const Preprocessed pre(inst);
        const int n = inst.size();
        auto ok = [&](int i, int j) { return arc_feasible(pre, inst.capacity(), i, j); };
        for (int i1 = 0; i1 < n; ++i1) {
            for (int i2 = i1 + 1; i2 < n; ++i2) {
                for (int j1 = i2 + 1; j1 <= n && ok(i1, j1); ++j1) {
                    for (int j2 = j1 + 1; j2 <= n && ok(i1, j2); ++j2) {
                        if (!ok(i2, j1) || !ok(i2, j2)) continue;
                        const Cost lhs = arc_cost(pre, inst, i1, j1) + arc_cost(pre, inst, i2, j2);
                        const Cost rhs = arc_cost(pre, inst, i1, j2) + arc_cost(pre, inst, i2, j1);
                        ASSERT_EQ(lhs, rhs) << i1 << ' ' << i2 << ' ' << j1 << ' ' << j2;
                    }
                }
            }
        }
    }
}

TEST(ArcCostProperties, ConstantDifference) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        RandomOptions options;
        options.capacity = 300;
        const Instance inst = gen_random(50, seed + 100, options);
        const Preprocessed pre(inst);
        const int n = inst.size();
        for (int i1 = 0; i1 < n; ++i1) {
            for (int i2 = i1 + 1; i2 < n; ++i2) {
                std::optional<Cost> k;
                for (int j = i2 + 1; j <= n; ++j) {
                    if (!arc_feasible(pre, inst.capacity(), i1, j)) break;
                    const Cost diff = arc_cost(pre, inst, i1, j) - arc_cost(pre, inst, i2, j);
                    if (!k) k = diff;
                    ASSERT_EQ(diff, *k) << i1 << ' ' << i2 << ' ' << j;
                }
            }
        }
    }
}
