#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "frc/analysis.hpp"
#include "frc/code.hpp"

namespace frc {

struct PacketAssignment {
    std::size_t packet = 0;
    std::size_t helper = 0;
};

// Exact uncoded repair of one failed node. Every lost packet is copied once
// from a surviving replica (beta = 1), so bandwidth equals the lost count.
struct RepairPlan {
    std::size_t failed = 0;
    std::vector<PacketAssignment> assignments;  // ascending by packet
    std::vector<std::size_t> helpers;           // ascending, distinct
    std::size_t repair_degree() const { return helpers.size(); }
    std::size_t bandwidth() const { return assignments.size() * beta; }

    static constexpr std::size_t beta = 1;
};

// Plan with the fewest distinct helpers. Candidate helper sets are tried by
// increasing size in lexicographic order; each packet goes to the
// lowest-indexed chosen helper holding it.
// Throws Error{IndexOutOfRange, Unrepairable, BudgetExceeded}.
RepairPlan plan_repair(const FrCode& code, std::size_t failed,
                       std::uint64_t budget = kDefaultEnumerationBudget);

// Baseline: each packet from its lowest-indexed surviving replica.
RepairPlan plan_repair_first_replica(const FrCode& code, std::size_t failed);

// Minimal helper count for every node.
std::vector<std::size_t> repair_degree_profile(const FrCode& code,
                                               std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace frc
