#include "frc/repair.hpp"

#include <string>

#include "frc/error.hpp"

namespace frc {

namespace {

void check_repairable(const FrCode& code, std::size_t failed) {
    if (failed >= code.n())
        throw Error(ErrorKind::IndexOutOfRange, "failed node " + std::to_string(failed) +
                                                    " outside [0, " +
                                                    std::to_string(code.n()) + ")");
    for (auto packet : code.node(failed).to_vector())
        if (code.holders(packet).size() < 2)
            throw Error(ErrorKind::Unrepairable, "packet " + std::to_string(packet) +
                                                     " of node " + std::to_string(failed) +
                                                     " has no surviving replica");
}

RepairPlan assign(const FrCode& code, std::size_t failed,
                  const std::vector<std::size_t>& helpers) {
    RepairPlan plan;
    plan.failed = failed;
    std::vector<bool> used(code.n(), false);
    for (auto packet : code.node(failed).to_vector()) {
        for (auto h : helpers) {
            if (code.node(h).contains(packet)) {
                plan.assignments.push_back({packet, h});
                used[h] = true;
                break;
            }
        }
    }
    for (std::size_t h = 0; h < code.n(); ++h)
        if (used[h]) plan.helpers.push_back(h);
    return plan;
}

class CoverSearch {
public:
    CoverSearch(const FrCode& code, const PacketSet& lost, std::vector<std::size_t> candidates,
                std::uint64_t budget)
        : code_(code),
          lost_(lost),
          candidates_(std::move(candidates)),
          budget_(budget),
          stack_(candidates_.size() + 1, PacketSet(code.theta())) {}

    // Lexicographically first candidate subset of the given size covering
    // every lost packet, or false.
    bool find(std::size_t size) {
        size_ = size;
        chosen_.assign(size, 0);
        return descend(0, 0);
    }

    std::vector<std::size_t> chosen_nodes() const {
        std::vector<std::size_t> out;
        for (auto c : chosen_) out.push_back(candidates_[c]);
        return out;
    }

private:
    bool descend(std::size_t start, std::size_t depth) {
        if (depth == size_) {
            if (++visited_ > budget_)
                throw Error(ErrorKind::BudgetExceeded,
                            "helper search exceeded budget " + std::to_string(budget_));
            return lost_.is_subset_of(stack_[depth]);
        }
        for (std::size_t i = start; i + (size_ - depth) <= candidates_.size(); ++i) {
            stack_[depth + 1].assign_union(stack_[depth], code_.node(candidates_[i]));
            chosen_[depth] = i;
            if (descend(i + 1, depth + 1)) return true;
        }
        return false;
    }

    const FrCode& code_;
    const PacketSet& lost_;
    std::vector<std::size_t> candidates_;
    std::uint64_t budget_;
    std::vector<PacketSet> stack_;
    std::vector<std::size_t> chosen_;
    std::size_t size_ = 0;
    std::uint64_t visited_ = 0;
};

}  // namespace

RepairPlan plan_repair(const FrCode& code, std::size_t failed, std::uint64_t budget) {
    check_repairable(code, failed);
    const PacketSet& lost = code.node(failed);
    if (lost.empty()) return assign(code, failed, {});

    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < code.n(); ++i) {
        if (i == failed) continue;
        PacketSet overlap = code.node(i);
        overlap &= lost;
        if (!overlap.empty()) candidates.push_back(i);
    }

    CoverSearch search(code, lost, candidates, budget);
    for (std::size_t size = 1; size <= candidates.size(); ++size)
        if (search.find(size)) return assign(code, failed, search.chosen_nodes());
    // Unreachable after check_repairable: all candidates together cover.
    throw Error(ErrorKind::Unrepairable, "no helper set covers the lost packets");
}

RepairPlan plan_repair_first_replica(const FrCode& code, std::size_t failed) {
    check_repairable(code, failed);
    std::vector<std::size_t> everyone;
    for (std::size_t i = 0; i < code.n(); ++i)
        if (i != failed) everyone.push_back(i);
    return assign(code, failed, everyone);
}

std::vector<std::size_t> repair_degree_profile(const FrCode& code, std::uint64_t budget) {
    std::vector<std::size_t> out;
    out.reserve(code.n());
    for (std::size_t i = 0; i < code.n(); ++i) out.push_back(plan_repair(code, i, budget).repair_degree());
    return out;
}

}  // namespace frc
