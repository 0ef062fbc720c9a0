#include "frc/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "frc/constructions.hpp"
#include "frc/error.hpp"

namespace frc {

namespace {

std::optional<std::size_t> parse_size(std::string_view text) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
    return value;
}

std::string row_label(std::size_t line, const std::string& text) {
    return "line " + std::to_string(line) + " ('" + text + "')";
}

}  // namespace

Range parse_range(std::string_view text) {
    const auto dots = text.find("..");
    std::optional<std::size_t> lo, hi;
    if (dots == std::string_view::npos) {
        lo = hi = parse_size(text);
    } else {
        lo = parse_size(text.substr(0, dots));
        hi = parse_size(text.substr(dots + 2));
    }
    if (!lo || !hi || *lo > *hi)
        throw Error(ErrorKind::ParseError, "bad range '" + std::string(text) + "', expected A..B");
    return {*lo, *hi};
}

const char* to_string(TableFamily f) { return f == TableFamily::Ring ? "ring" : "t"; }

TableFamily parse_family(std::string_view text) {
    if (text == "ring") return TableFamily::Ring;
    if (text == "t") return TableFamily::T;
    throw Error(ErrorKind::ParseError, "unknown family '" + std::string(text) + "'");
}

std::vector<TableRow> parse_table(std::string_view text, Provenance provenance) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::size_t columns = 0;
    std::vector<TableRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (columns == 0) {
            if (line == "n,k,d,rho,theta")
                columns = 5;
            else if (line == "n,k,d,rho,theta,t")
                columns = 6;
            else
                throw Error(ErrorKind::ParseError, "unexpected table header '" + line + "'");
            continue;
        }
        std::vector<std::size_t> fields;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            auto v = parse_size(cell);
            if (!v)
                throw Error(ErrorKind::MalformedRow,
                            row_label(line_no, line) + ": '" + cell + "' is not a count");
            fields.push_back(*v);
        }
        if (fields.size() != columns || line.back() == ',')
            throw Error(ErrorKind::MalformedRow,
                        row_label(line_no, line) + ": expected " + std::to_string(columns) +
                            " fields");
        TableRow row{fields[0], fields[1], fields[2], fields[3], fields[4], std::nullopt,
                     provenance};
        if (columns == 6) row.t = fields[5];
        rows.push_back(row);
    }
    if (columns == 0) throw Error(ErrorKind::ParseError, "table has no header");
    return rows;
}

std::vector<TableRow> read_table(const std::string& path, Provenance provenance) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_table(ss.str(), provenance);
}

std::string format_table(const std::vector<TableRow>& rows) {
    const bool with_t = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.t.has_value(); });
    std::ostringstream out;
    out << (with_t ? "n,k,d,rho,theta,t\n" : "n,k,d,rho,theta\n");
    for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << r.d << ',' << r.rho << ',' << r.theta;
        if (with_t) out << ',' << r.t.value_or(0);
        out << '\n';
    }
    return out.str();
}

std::vector<TableRow> sweep_ring(Range n_range, Range rho_range, Range m_range,
                                 const EnumerationOptions& opts) {
    std::vector<TableRow> rows;
    for (std::size_t rho = std::max<std::size_t>(rho_range.lo, 2); rho <= rho_range.hi; ++rho) {
        for (std::size_t m = std::max<std::size_t>(m_range.lo, 1); m <= m_range.hi; ++m) {
            for (std::size_t n = std::max(n_range.lo, rho + 1); n <= n_range.hi; ++n) {
                const auto code = build_ring({n, m * n, rho});
                const auto p = profile(code);
                if (!p.is_uniform_storage)
                    throw Error(ErrorKind::InvariantViolation,
                                "ring with theta = m*n produced non-uniform storage");
                const std::size_t theta = code.theta();
                const std::size_t k = reconstruction_degree(code, theta - 1, opts);
                if (goodness_arithmetic(k, p.alpha, theta, false, theta - 1).passed)
                    rows.push_back({n, k, p.alpha, rho, theta, std::nullopt, Provenance::Generated});
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
        return std::make_tuple(b.rho, a.n, a.theta) < std::make_tuple(a.rho, b.n, b.theta);
    });
    return rows;
}

RhsFilter parse_rhs_filter(std::string_view text) {
    if (text == "none") return RhsFilter::None;
    if (text == "positive") return RhsFilter::Positive;
    if (text == "nonnegative") return RhsFilter::NonNegative;
    throw Error(ErrorKind::ParseError, "unknown rhs filter '" + std::string(text) + "'");
}

const char* to_string(RhsFilter f) {
    switch (f) {
        case RhsFilter::None: return "none";
        case RhsFilter::Positive: return "positive";
        case RhsFilter::NonNegative: return "nonnegative";
    }
    return "none";
}

namespace {

bool rhs_admitted(std::int64_t rhs, RhsFilter filter) {
    switch (filter) {
        case RhsFilter::None: return true;
        case RhsFilter::Positive: return rhs > 0;
        case RhsFilter::NonNegative: return rhs >= 0;
    }
    return true;
}

std::int64_t strict_rhs(const TableRow& r) {
    return goodness_arithmetic(r.k, r.d, r.theta, false, r.theta - 1).rhs;
}

}  // namespace

std::vector<AuditFinding> audit_table(const std::vector<TableRow>& rows, TableFamily family,
                                      RhsFilter filter) {
    std::vector<AuditFinding> findings;
    findings.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.n == 0 || r.k == 0 || r.d == 0 || r.rho == 0 || r.theta == 0)
            throw Error(ErrorKind::MalformedRow, "row " + std::to_string(i + 1) +
                                                     " has a zero parameter");
        if (family == TableFamily::T && !r.t)
            throw Error(ErrorKind::MalformedRow,
                        "row " + std::to_string(i + 1) + " of a t table lacks t");

        AuditFinding f;
        f.index = i;
        f.row = r;
        if (family == TableFamily::Ring)
            f.identity_ok = r.n * r.d == r.rho * r.theta;
        else
            f.identity_ok = r.n == r.theta && r.d == r.rho;
        f.goodness = goodness_arithmetic(r.k, r.d, r.theta, false, r.theta - 1);
        f.rhs_positive = f.goodness.rhs > 0;
        f.rhs_nonnegative = f.goodness.rhs >= 0;
        f.rhs_filter_ok = rhs_admitted(f.goodness.rhs, filter);
        if (family == TableFamily::Ring) {
            f.prediction = predicted_k_ring(r.n, r.theta, r.rho);
            f.prediction_matches = f.prediction->k == r.k;
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (rows[j].same_parameters(r)) {
                f.duplicate_of = j;
                break;
            }
        }
        findings.push_back(std::move(f));
    }
    return findings;
}

std::vector<TableRow> filter_rhs(const std::vector<TableRow>& rows, RhsFilter filter) {
    std::vector<TableRow> out;
    for (const auto& r : rows)
        if (rhs_admitted(strict_rhs(r), filter)) out.push_back(r);
    return out;
}

std::vector<TableRow> dedup_parameters(const std::vector<TableRow>& rows) {
    std::vector<TableRow> out;
    for (const auto& r : rows) {
        const bool seen = std::any_of(out.begin(), out.end(),
                                      [&](const TableRow& o) { return o.same_parameters(r); });
        if (!seen) out.push_back(r);
    }
    return out;
}

std::vector<TableRow> restrict_rho(const std::vector<TableRow>& rows, std::size_t rho) {
    std::vector<TableRow> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
                 [rho](const TableRow& r) { return r.rho == rho; });
    return out;
}

RelationReport compare_tables(std::string name, const std::vector<TableRow>& derived,
                              const std::vector<TableRow>& target) {
    using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t,
                           std::optional<std::size_t>>;
    auto key = [](const TableRow& r) { return Key{r.n, r.k, r.d, r.rho, r.theta, r.t}; };

    std::map<Key, long> balance;
    for (const auto& r : derived) ++balance[key(r)];
    for (const auto& r : target) --balance[key(r)];

    RelationReport report{std::move(name), {}, {}};
    // Walk in input order so the report lists rows as they appear in the tables.
    auto missing = balance;
    for (const auto& r : derived) {
        if (missing[key(r)] > 0) {
            report.missing.push_back(r);
            --missing[key(r)];
        }
    }
    auto extra = balance;
    for (const auto& r : target) {
        if (extra[key(r)] < 0) {
            report.extra.push_back(r);
            ++extra[key(r)];
        }
    }
    return report;
}

std::size_t ConjectureReport::agreements() const {
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(),
                                                  [](const auto& i) { return i.agrees(); }));
}

ConjectureReport conjecture_harness(Range n_range, Range rho_range, ThetaRule rule,
                                    const EnumerationOptions& opts) {
    ConjectureReport report;
    for (std::size_t n = n_range.lo; n <= n_range.hi; ++n) {
        for (std::size_t rho = std::max<std::size_t>(rho_range.lo, 2);
             rho <= rho_range.hi && rho < n; ++rho) {
            const std::size_t theta_lo = std::max<std::size_t>(rule.min_theta, 2);
            for (std::size_t theta = theta_lo; theta <= rule.max_multiple * n; ++theta) {
                if (theta % n == 0) continue;
                const auto predicted = predicted_k_ring(n, theta, rho);
                const auto code = build_ring({n, theta, rho});
                const auto k = reconstruction_degree(code, theta - 1, opts);
                report.instances.push_back({n, theta, rho, *predicted.k, k});
            }
        }
    }
    return report;
}

}  // namespace frc
