#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "frc/packet_set.hpp"

namespace frc {

// Node and packet labels are 0-based internally; only the display layer adds 1.
struct NodeId {
    std::size_t index = 0;
    friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

struct PacketId {
    std::size_t index = 0;
    friend auto operator<=>(const PacketId&, const PacketId&) = default;
};

inline constexpr std::size_t kDefaultMaxTheta = 4096;

// Raw node -> packet lists as read from a file or produced by a construction.
// Signed so out-of-range input can be reported instead of wrapping.
using StorageLists = std::vector<std::vector<std::int64_t>>;

// An FR/WFR code: n node packet-sets over theta packets. Validated once at
// construction and immutable afterwards, so it can be shared across workers.
// Replication need not be constant; regularity is a property reported by
// profile(), not a structural guarantee.
class FrCode {
public:
    // Throws Error{EmptySystem, IndexOutOfRange, DuplicatePacket, OrphanPacket,
    // ThetaLimit, InvariantViolation}.
    static FrCode make(std::size_t n, std::size_t theta, const StorageLists& storage,
                       std::size_t max_theta = kDefaultMaxTheta);

    std::size_t n() const noexcept { return nodes_.size(); }
    std::size_t theta() const noexcept { return theta_; }

    const PacketSet& node(std::size_t i) const { return nodes_.at(i); }
    const std::vector<PacketSet>& nodes() const noexcept { return nodes_; }

    // Nodes holding the packet, ascending.
    std::vector<std::size_t> holders(std::size_t packet) const;

    // Canonical form: each node's packets ascending.
    std::vector<std::vector<std::size_t>> storage_lists() const;

    friend bool operator==(const FrCode&, const FrCode&) = default;

private:
    FrCode(std::size_t theta, std::vector<PacketSet> nodes)
        : theta_(theta), nodes_(std::move(nodes)) {}

    std::size_t theta_ = 0;
    std::vector<PacketSet> nodes_;
};

struct CodeProfile {
    std::vector<std::size_t> alpha_per_node;
    std::size_t alpha = 0;
    std::vector<std::size_t> rho_per_packet;
    std::size_t rho = 0;
    bool is_regular_replication = false;
    bool is_uniform_storage = false;
};

CodeProfile profile(const FrCode& code);

// True when exactly one node stores alpha-1 packets and every other node
// stores alpha (the partial-regular-graph shape).
bool has_single_deficient_node(const CodeProfile& p);

// n x theta 0/1 matrix, row-major.
class IncidenceMatrix {
public:
    IncidenceMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint8_t at(std::size_t r, std::size_t c) const { return cells_.at(r * cols_ + c); }
    void set(std::size_t r, std::size_t c, std::uint8_t v) { cells_.at(r * cols_ + c) = v ? 1 : 0; }

    std::size_t row_sum(std::size_t r) const;
    std::size_t col_sum(std::size_t c) const;

    friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> cells_;
};

IncidenceMatrix incidence_matrix(const FrCode& code);

// Inverse view; validation is delegated to FrCode::make.
FrCode code_from_incidence(const IncidenceMatrix& matrix,
                           std::size_t max_theta = kDefaultMaxTheta);

enum class IdentityClass {
    Regular,          // n * alpha == rho * theta, uniform storage and replication
    SingleDeficient,  // n * alpha - 1 == rho * theta, one node short by one
    Heterogeneous,
};

const char* to_string(IdentityClass c);

struct IdentityReport {
    IdentityClass classification = IdentityClass::Heterogeneous;
    std::size_t n_alpha = 0;     // n * alpha
    std::size_t rho_theta = 0;   // rho * theta
    std::size_t sum_alpha = 0;
    std::size_t sum_rho = 0;
    bool double_counting = false;  // always true for a valid code
};

IdentityReport check_identities(const FrCode& code);

// (n, k, d) system parameters around a code. d follows the table convention
// d = alpha (one helper per stored packet); beta is always 1.
struct DssParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t file_size = 0;
    static constexpr std::size_t beta = 1;

    // Throws Error{InvariantViolation} unless 1 <= k <= n, 1 <= d <= n-1 and
    // file_size <= theta.
    static DssParams make(std::size_t n, std::size_t k, std::size_t d, std::size_t file_size,
                          std::size_t theta);
};

}  // namespace frc
