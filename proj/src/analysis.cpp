#include "frc/analysis.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <numeric>
#include <string>

#include "frc/constructions.hpp"
#include "frc/error.hpp"

namespace frc {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n-k+i) / i is exact; dividing out gcd(result, i) first keeps
        // the intermediate product as small as possible.
        const std::uint64_t g = std::gcd(result, i);
        const std::uint64_t factor = (n - k + i) / (i / g);
        result /= g;
        if (result > kMax / factor) return kMax;
        result *= factor;
    }
    return result;
}

namespace {

// Depth-first walk over k-subsets in lexicographic order. A branch is cut as
// soon as its partial union is no smaller than the best complete union, which
// keeps the first minimiser found (the lexicographically least one).
class CoverageSearch {
public:
    CoverageSearch(const FrCode& code, std::size_t k)
        : nodes_(code.nodes()),
          k_(k),
          unions_(k + 1, PacketSet(code.theta())),
          chosen_(k, 0),
          best_(code.theta() + 1) {}

    // Subsets whose smallest element is `first`.
    void run_from(std::size_t first) {
        chosen_[0] = first;
        unions_[1] = nodes_[first];
        if (k_ == 1) {
            record();
            return;
        }
        descend(first + 1, 1);
    }

    std::size_t best() const { return best_; }
    const std::vector<std::size_t>& witness() const { return witness_; }

private:
    void record() {
        const auto covered = unions_[k_].count();
        if (covered < best_) {
            best_ = covered;
            witness_ = chosen_;
        }
    }

    void descend(std::size_t start, std::size_t depth) {
        const std::size_t last = nodes_.size() - (k_ - depth);
        for (std::size_t i = start; i <= last; ++i) {
            unions_[depth + 1].assign_union(unions_[depth], nodes_[i]);
            if (unions_[depth + 1].count() >= best_) continue;
            chosen_[depth] = i;
            if (depth + 1 == k_)
                record();
            else
                descend(i + 1, depth + 1);
        }
    }

    const std::vector<PacketSet>& nodes_;
    std::size_t k_;
    std::vector<PacketSet> unions_;
    std::vector<std::size_t> chosen_;
    std::size_t best_;
    std::vector<std::size_t> witness_;
};

struct PartialResult {
    std::size_t best;
    std::vector<std::size_t> witness;
};

PartialResult search_range(const FrCode& code, std::size_t k, std::size_t first_begin,
                           std::size_t first_end) {
    CoverageSearch search(code, k);
    for (std::size_t first = first_begin; first < first_end; ++first) search.run_from(first);
    return {search.best(), search.witness()};
}

}  // namespace

Coverage min_coverage(const FrCode& code, std::size_t k, const EnumerationOptions& opts) {
    const std::size_t n = code.n();
    if (k < 1 || k > n)
        throw Error(ErrorKind::KOutOfRange,
                    "k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
    const auto subsets = binomial(n, k);
    if (subsets > opts.budget)
        throw Error(ErrorKind::BudgetExceeded, "C(" + std::to_string(n) + ", " +
                                                   std::to_string(k) + ") = " +
                                                   std::to_string(subsets) +
                                                   " subsets exceeds budget " +
                                                   std::to_string(opts.budget));

    // First elements 0..n-k; partitions are contiguous and merged in order, so
    // ties resolve to the lowest partition exactly as in a sequential walk.
    const std::size_t firsts = n - k + 1;
    const std::size_t workers = std::clamp<std::size_t>(opts.workers, 1, firsts);
    PartialResult merged{code.theta() + 1, {}};
    if (workers == 1) {
        merged = search_range(code, k, 0, firsts);
    } else {
        std::vector<std::future<PartialResult>> parts;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = firsts * w / workers;
            const std::size_t end = firsts * (w + 1) / workers;
            parts.push_back(std::async(std::launch::async, search_range, std::cref(code), k,
                                       begin, end));
        }
        for (auto& part : parts) {
            auto r = part.get();
            if (r.best < merged.best) merged = std::move(r);
        }
    }
    return Coverage{k, merged.best, std::move(merged.witness)};
}

CoverageProfile coverage_profile(const FrCode& code, std::size_t k_max,
                                 const EnumerationOptions& opts) {
    CoverageProfile profile{code.theta(), {}};
    for (std::size_t k = 1; k <= k_max; ++k) profile.per_k.push_back(min_coverage(code, k, opts));
    return profile;
}

std::size_t default_file_size(const FrCode& code) { return code.theta() - 1; }

std::size_t reconstruction_degree(const FrCode& code, std::size_t file_size,
                                  const EnumerationOptions& opts) {
    if (file_size < 1 || file_size > code.theta())
        throw Error(ErrorKind::FileSizeRange, "file size " + std::to_string(file_size) +
                                                  " outside [1, " +
                                                  std::to_string(code.theta()) + "]");
    // k nodes hold at most k * alpha packets, so smaller k cannot qualify.
    const std::size_t alpha = profile(code).alpha;
    const std::size_t first_k = std::max<std::size_t>(1, (file_size + alpha - 1) / alpha);
    for (std::size_t k = first_k; k <= code.n(); ++k)
        if (min_coverage(code, k, opts).value >= file_size) return k;
    throw Error(ErrorKind::Unreachable, "no node subset recovers the file");
}

GoodnessReport goodness_arithmetic(std::size_t k, std::size_t alpha, std::size_t theta,
                                   bool weak, std::size_t file_size) {
    GoodnessReport r;
    r.k = k;
    r.alpha = alpha;
    r.theta = theta;
    r.weak = weak;
    r.file_size = file_size;
    const auto kk = static_cast<std::int64_t>(k);
    r.rhs = kk * static_cast<std::int64_t>(alpha) - kk * (kk - 1) / 2 - (weak ? 1 : 0);
    r.margin = static_cast<std::int64_t>(file_size) - r.rhs;
    r.passed = r.margin >= 0;
    return r;
}

StructuralReport goodness_structural(const FrCode& code, const EnumerationOptions& opts) {
    const auto p = profile(code);
    StructuralReport report;
    report.weak = p.is_regular_replication && has_single_deficient_node(p);
    const std::size_t k_max = std::min(p.alpha, code.n());
    for (std::size_t k = 1; k <= k_max; ++k) {
        const auto cov = min_coverage(code, k, opts);
        auto r = goodness_arithmetic(k, p.alpha, code.theta(), report.weak, cov.value);
        if (!r.passed && !report.first_failing_k) report.first_failing_k = k;
        report.per_k.push_back(r);
    }
    return report;
}

PrgMargin prg_margin(std::size_t n, std::size_t d) {
    const PrgSpec spec{n, d};
    spec.validate();
    PrgMargin m;
    m.p = spec.p();
    m.q = spec.q();
    m.theta = 2 * m.p * m.q + m.p + m.q;
    if (m.theta != (n * d - 1) / 2)
        throw Error(ErrorKind::InvariantViolation, "theta formula disagrees with edge count");
    const auto p = static_cast<std::int64_t>(m.p);
    const auto q = static_cast<std::int64_t>(m.q);
    m.margin = 2 * p * p - 2 * p * q - 4 * p + 3 * q + 2;
    return m;
}

std::int64_t ring_margin_case1(std::int64_t rho, std::int64_t theta) {
    return 3 * rho * rho + theta * theta - 4 * rho * theta + theta + rho - 2;
}

std::int64_t ring_margin_case2(std::int64_t m, std::int64_t rho, std::int64_t theta) {
    return m * m * m * theta * theta + (m + 2) * rho * rho - 2 * m * m * theta * rho +
           m * m * theta - (m + 2) * rho - 2 * m * theta * rho + 2 * m * theta - 2 * m;
}

const char* to_string(PredictionBasis b) {
    switch (b) {
        case PredictionBasis::Theorem: return "theorem";
        case PredictionBasis::Conjecture: return "conjecture";
        case PredictionBasis::Undefined: return "undefined";
    }
    return "undefined";
}

RingPrediction predicted_k_ring(std::size_t n, std::size_t theta, std::size_t rho) {
    if (n == 0 || theta == 0 || rho < 2 || rho >= n) return {};
    if (theta == n) return {n - rho, PredictionBasis::Theorem};
    if (theta % n == 0) return {n - rho + 1, PredictionBasis::Theorem};
    if (n > theta) return {n - rho, PredictionBasis::Conjecture};
    return {n - rho + 1, PredictionBasis::Conjecture};
}

}  // namespace frc
