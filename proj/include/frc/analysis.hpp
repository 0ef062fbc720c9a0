#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "frc/code.hpp"

namespace frc {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

// Subset enumeration refuses (BudgetExceeded) when the number of candidate
// subsets exceeds budget. With workers > 1 the search is split by the first
// chosen node; results do not depend on the worker count.
struct EnumerationOptions {
    std::uint64_t budget = kDefaultEnumerationBudget;
    unsigned workers = 1;
};

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct Coverage {
    std::size_t k = 0;
    std::size_t value = 0;               // min |union| over all k-subsets
    std::vector<std::size_t> witness;    // lexicographically least minimiser
};

// Exact minimum number of distinct packets held by any k nodes.
// Throws Error{KOutOfRange, BudgetExceeded}.
Coverage min_coverage(const FrCode& code, std::size_t k, const EnumerationOptions& opts = {});

struct CoverageProfile {
    std::size_t theta = 0;
    std::vector<Coverage> per_k;  // per_k[i].k == i + 1
};

// min_coverage for k = 1..k_max.
CoverageProfile coverage_profile(const FrCode& code, std::size_t k_max,
                                 const EnumerationOptions& opts = {});

// File size supported by a [theta, theta-1] outer MDS code.
std::size_t default_file_size(const FrCode& code);

// Least k whose every k-subset of nodes holds at least file_size packets.
// Throws Error{FileSizeRange, Unreachable, BudgetExceeded}.
std::size_t reconstruction_degree(const FrCode& code, std::size_t file_size,
                                  const EnumerationOptions& opts = {});

// One evaluation of M >= k*alpha - C(k,2) [- 1 when weak].
struct GoodnessReport {
    std::size_t k = 0;
    std::size_t alpha = 0;
    std::size_t theta = 0;
    bool weak = false;
    std::size_t file_size = 0;
    std::int64_t rhs = 0;
    std::int64_t margin = 0;
    bool passed = false;

    int rhs_sign() const { return rhs > 0 ? 1 : (rhs < 0 ? -1 : 0); }
};

GoodnessReport goodness_arithmetic(std::size_t k, std::size_t alpha, std::size_t theta,
                                   bool weak, std::size_t file_size);

struct StructuralReport {
    bool weak = false;  // single-deficient-node shape detected
    std::vector<GoodnessReport> per_k;  // k = 1..min(alpha, n), M = min_coverage(k)
    std::optional<std::size_t> first_failing_k;
    bool passed() const { return !first_failing_k.has_value(); }
};

// Checks the bound at every k <= alpha against brute-force coverage. The weak
// relaxation applies only to the partial-regular-graph shape: regular
// replication and exactly one node of storage alpha-1.
StructuralReport goodness_structural(const FrCode& code, const EnumerationOptions& opts = {});

struct PrgMargin {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t theta = 0;   // 2pq + p + q
    std::int64_t margin = 0; // 2p^2 - 2pq - 4p + 3q + 2
};

// Throws Error{ParityError, DegreeRange}.
PrgMargin prg_margin(std::size_t n, std::size_t d);

// 3 rho^2 + theta^2 - 4 rho theta + theta + rho - 2 (theta = n case).
std::int64_t ring_margin_case1(std::int64_t rho, std::int64_t theta);

// The block-circulant polynomial in (m, rho, theta). Diagnostic only: it was
// derived with d = rho/m, which does not match the constructed d = m*rho.
std::int64_t ring_margin_case2(std::int64_t m, std::int64_t rho, std::int64_t theta);

enum class PredictionBasis { Theorem, Conjecture, Undefined };

const char* to_string(PredictionBasis b);

struct RingPrediction {
    std::optional<std::size_t> k;
    PredictionBasis basis = PredictionBasis::Undefined;
};

// Closed-form reconstruction degree of ring codes. theta = n and theta = m*n
// are proven cases; n > theta and non-multiple theta > n are conjectured.
RingPrediction predicted_k_ring(std::size_t n, std::size_t theta, std::size_t rho);

}  // namespace frc
