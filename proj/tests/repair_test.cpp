#include <gtest/gtest.h>

#include <random>

#include "frc/constructions.hpp"
#include "frc/error.hpp"
#include "frc/repair.hpp"
#include "oracle.hpp"

namespace frc {
namespace {

void expect_valid(const FrCode& code, const RepairPlan& plan) {
    const auto lost = code.node(plan.failed).to_vector();
    ASSERT_EQ(plan.assignments.size(), lost.size());
    for (std::size_t i = 0; i < lost.size(); ++i) {
        EXPECT_EQ(plan.assignments[i].packet, lost[i]);
        EXPECT_NE(plan.assignments[i].helper, plan.failed);
        EXPECT_TRUE(code.node(plan.assignments[i].helper).contains(lost[i]));
    }
    for (auto h : plan.helpers) EXPECT_NE(h, plan.failed);
    EXPECT_EQ(plan.bandwidth(), lost.size());
}

TEST(PlanRepair, RingNodeZero) {
    const auto code = build_ring({5, 5, 2});
    const auto plan = plan_repair(code, 0);
    expect_valid(code, plan);
    EXPECT_EQ(plan.helpers, (std::vector<std::size_t>{1, 4}));
    EXPECT_EQ(plan.bandwidth(), 2u);
}

TEST(PlanRepair, PrgDeficientNode) {
    const auto code = build_prg({7, 5});
    const auto plan = plan_repair(code, 6);
    expect_valid(code, plan);
    EXPECT_EQ(plan.bandwidth(), 4u);
    // Each lost packet is an edge to a distinct neighbour, so all four are needed.
    ASSERT_EQ(oracle::min_helpers(oracle::as_sets(code), 6), 4u);
    EXPECT_EQ(plan.repair_degree(), 4u);
}

TEST(PlanRepair, Unrepairable) {
    const auto code = FrCode::make(2, 2, {{0}, {1}});
    try {
        plan_repair(code, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Unrepairable);
    }
}

TEST(PlanRepair, OutOfRangeNode) {
    EXPECT_THROW(plan_repair(build_ring({5, 5, 2}), 5), Error);
}

TEST(PlanRepair, BudgetExceeded) {
    const auto code = build_prg({13, 11});
    try {
        plan_repair(code, 0, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
}

TEST(PlanRepair, EmptyNodeNeedsNoHelpers) {
    const auto code = FrCode::make(3, 1, {{0}, {}, {0}});
    const auto plan = plan_repair(code, 1);
    EXPECT_TRUE(plan.helpers.empty());
    EXPECT_EQ(plan.bandwidth(), 0u);
}

TEST(PlanRepair, OverlapToyCode) {
    // Node 0 = {0,1,2}; node 1 holds 0,1; node 2 holds 1,2; node 3 holds 2.
    // Hand count: no single survivor holds all three, {1,2} does.
    const auto code = FrCode::make(4, 3, {{0, 1, 2}, {0, 1}, {1, 2}, {2}});
    const auto plan = plan_repair(code, 0);
    expect_valid(code, plan);
    EXPECT_EQ(plan.helpers, (std::vector<std::size_t>{1, 2}));
    const auto baseline = plan_repair_first_replica(code, 0);
    expect_valid(code, baseline);
    EXPECT_EQ(baseline.helpers, (std::vector<std::size_t>{1, 2}));
}

TEST(RepairDegreeProfile, Rings) {
    EXPECT_EQ(repair_degree_profile(build_ring({5, 5, 2})), std::vector<std::size_t>(5, 2));
    // Frozen after the exhaustive helper oracle: each node's four packets sit
    // on its two ring neighbours.
    const auto ring = build_ring({6, 12, 2});
    for (std::size_t i = 0; i < 6; ++i) ASSERT_EQ(oracle::min_helpers(oracle::as_sets(ring), i), 2u);
    EXPECT_EQ(repair_degree_profile(ring), std::vector<std::size_t>(6, 2));
}

TEST(PlanRepairProperty, ValidAndMinimalOnRandomCodes) {
    std::mt19937 rng(4242);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto code = oracle::random_code(rng, 10, 20);
        const auto sets = oracle::as_sets(code);
        for (std::size_t f = 0; f < code.n(); ++f) {
            bool repairable = true;
            for (auto p : sets[f]) repairable = repairable && code.holders(p).size() >= 2;
            if (!repairable) {
                EXPECT_THROW(plan_repair(code, f), Error);
                continue;
            }
            const auto plan = plan_repair(code, f);
            expect_valid(code, plan);
            EXPECT_EQ(plan.repair_degree(), oracle::min_helpers(sets, f));
            EXPECT_GE(plan_repair_first_replica(code, f).repair_degree(), plan.repair_degree());
            ++checked;
        }
    }
    EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace frc
