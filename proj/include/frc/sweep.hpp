#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frc/analysis.hpp"

namespace frc {

// Inclusive integer range, written "A..B" on the command line.
struct Range {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

// Throws Error{ParseError}.
Range parse_range(std::string_view text);

enum class Provenance { Generated, Transcribed };
enum class TableFamily { Ring, T };

const char* to_string(TableFamily f);
TableFamily parse_family(std::string_view text);

struct TableRow {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t rho = 0;
    std::size_t theta = 0;
    std::optional<std::size_t> t;
    Provenance provenance = Provenance::Generated;

    // Equality ignores provenance.
    friend bool operator==(const TableRow& a, const TableRow& b) {
        return a.n == b.n && a.k == b.k && a.d == b.d && a.rho == b.rho && a.theta == b.theta &&
               a.t == b.t;
    }
    bool same_parameters(const TableRow& o) const {
        return n == o.n && k == o.k && d == o.d && rho == o.rho && theta == o.theta;
    }
};

// CSV with header "n,k,d,rho,theta" or "n,k,d,rho,theta,t".
// Throws Error{ParseError} on a bad header, Error{MalformedRow} on bad rows.
std::vector<TableRow> parse_table(std::string_view text,
                                  Provenance provenance = Provenance::Transcribed);
std::vector<TableRow> read_table(const std::string& path,
                                 Provenance provenance = Provenance::Transcribed);
std::string format_table(const std::vector<TableRow>& rows);

// Rings ring(n, m*n, rho) over the ranges whose reconstruction degree (file
// size theta-1) satisfies the strict goodness bound with alpha = d. Sorted by
// rho descending, then n, then theta.
// Throws Error{BudgetExceeded, InvariantViolation}.
std::vector<TableRow> sweep_ring(Range n, Range rho, Range m, const EnumerationOptions& opts = {});

// Optional table filter on the bound's right-hand side.
enum class RhsFilter { None, Positive, NonNegative };

RhsFilter parse_rhs_filter(std::string_view text);
const char* to_string(RhsFilter f);

struct AuditFinding {
    std::size_t index = 0;  // 0-based row position in the audited table
    TableRow row;
    // (a) n*d == rho*theta for rings; n == theta and d == rho for t rows.
    bool identity_ok = false;
    // (b) strict bound at the listed k with M = theta-1, alpha = d.
    GoodnessReport goodness;
    // (c) sign of the right-hand side and the table filter verdict.
    bool rhs_positive = false;
    bool rhs_nonnegative = false;
    bool rhs_filter_ok = true;
    // (d) ring rows only.
    std::optional<RingPrediction> prediction;
    std::optional<bool> prediction_matches;
    // (e) earlier row with identical (n, k, d, rho, theta).
    std::optional<std::size_t> duplicate_of;

    bool passed() const {
        return identity_ok && goodness.passed && rhs_filter_ok &&
               prediction_matches.value_or(true);
    }
};

// Throws Error{MalformedRow}.
std::vector<AuditFinding> audit_table(const std::vector<TableRow>& rows, TableFamily family,
                                      RhsFilter filter = RhsFilter::None);

std::vector<TableRow> filter_rhs(const std::vector<TableRow>& rows, RhsFilter filter);
// Keeps the first row for each (n, k, d, rho, theta).
std::vector<TableRow> dedup_parameters(const std::vector<TableRow>& rows);
std::vector<TableRow> restrict_rho(const std::vector<TableRow>& rows, std::size_t rho);

// Multiset comparison of a derived table against a transcribed one.
struct RelationReport {
    std::string name;
    std::vector<TableRow> missing;  // derived but absent from the target
    std::vector<TableRow> extra;    // in the target but not derived
    bool holds() const { return missing.empty() && extra.empty(); }
};

RelationReport compare_tables(std::string name, const std::vector<TableRow>& derived,
                              const std::vector<TableRow>& target);

// theta ranges over [min_theta, max_multiple * n], skipping multiples of n.
struct ThetaRule {
    std::size_t min_theta = 2;
    std::size_t max_multiple = 2;
};

struct ConjectureInstance {
    std::size_t n = 0;
    std::size_t theta = 0;
    std::size_t rho = 0;
    std::size_t predicted = 0;
    std::size_t brute_force = 0;
    bool agrees() const { return predicted == brute_force; }
};

struct ConjectureReport {
    std::vector<ConjectureInstance> instances;  // ordered by (n, rho, theta)
    std::size_t agreements() const;
};

// Compares the conjectured heterogeneous ring formula with brute force at
// file size theta-1. Reports only; never asserts agreement.
ConjectureReport conjecture_harness(Range n, Range rho, ThetaRule rule = {},
                                    const EnumerationOptions& opts = {});

}  // namespace frc
