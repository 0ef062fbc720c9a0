#include "frc/code.hpp"

#include <algorithm>
#include <string>

#include "frc/error.hpp"

namespace frc {

FrCode FrCode::make(std::size_t n, std::size_t theta, const StorageLists& storage,
                    std::size_t max_theta) {
    if (n == 0 || theta == 0)
        throw Error(ErrorKind::EmptySystem, "code needs at least one node and one packet");
    if (theta > max_theta)
        throw Error(ErrorKind::ThetaLimit, "theta " + std::to_string(theta) +
                                               " exceeds limit " + std::to_string(max_theta));
    if (storage.size() != n)
        throw Error(ErrorKind::InvariantViolation,
                    "expected " + std::to_string(n) + " node sets, got " +
                        std::to_string(storage.size()));

    std::vector<PacketSet> nodes(n, PacketSet(theta));
    PacketSet placed(theta);
    for (std::size_t i = 0; i < n; ++i) {
        for (auto packet : storage[i]) {
            if (packet < 0 || static_cast<std::uint64_t>(packet) >= theta)
                throw Error(ErrorKind::IndexOutOfRange,
                            "node " + std::to_string(i) + " holds packet " +
                                std::to_string(packet) + " outside [0, " +
                                std::to_string(theta) + ")");
            auto p = static_cast<std::size_t>(packet);
            if (nodes[i].contains(p))
                throw Error(ErrorKind::DuplicatePacket, "node " + std::to_string(i) +
                                                            " lists packet " +
                                                            std::to_string(p) + " twice");
            nodes[i].insert(p);
            placed.insert(p);
        }
    }
    if (placed.count() != theta) {
        for (std::size_t p = 0; p < theta; ++p)
            if (!placed.contains(p))
                throw Error(ErrorKind::OrphanPacket,
                            "packet " + std::to_string(p) + " is stored on no node");
    }
    return FrCode(theta, std::move(nodes));
}

std::vector<std::size_t> FrCode::holders(std::size_t packet) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].contains(packet)) out.push_back(i);
    return out;
}

std::vector<std::vector<std::size_t>> FrCode::storage_lists() const {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(nodes_.size());
    for (const auto& node : nodes_) out.push_back(node.to_vector());
    return out;
}

CodeProfile profile(const FrCode& code) {
    CodeProfile p;
    p.alpha_per_node.reserve(code.n());
    p.rho_per_packet.assign(code.theta(), 0);
    for (const auto& node : code.nodes()) {
        p.alpha_per_node.push_back(node.count());
        for (auto packet : node.to_vector()) ++p.rho_per_packet[packet];
    }
    p.alpha = *std::max_element(p.alpha_per_node.begin(), p.alpha_per_node.end());
    p.rho = *std::max_element(p.rho_per_packet.begin(), p.rho_per_packet.end());
    auto all_equal = [](const std::vector<std::size_t>& v) {
        return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
    };
    p.is_uniform_storage = all_equal(p.alpha_per_node);
    p.is_regular_replication = all_equal(p.rho_per_packet);
    return p;
}

bool has_single_deficient_node(const CodeProfile& p) {
    if (p.alpha == 0) return false;
    std::size_t deficient = 0;
    for (auto a : p.alpha_per_node) {
        if (a == p.alpha - 1)
            ++deficient;
        else if (a != p.alpha)
            return false;
    }
    return deficient == 1;
}

std::size_t IncidenceMatrix::row_sum(std::size_t r) const {
    std::size_t s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += at(r, c);
    return s;
}

std::size_t IncidenceMatrix::col_sum(std::size_t c) const {
    std::size_t s = 0;
    for (std::size_t r = 0; r < rows_; ++r) s += at(r, c);
    return s;
}

IncidenceMatrix incidence_matrix(const FrCode& code) {
    IncidenceMatrix m(code.n(), code.theta());
    for (std::size_t i = 0; i < code.n(); ++i)
        for (auto packet : code.node(i).to_vector()) m.set(i, packet, 1);
    return m;
}

FrCode code_from_incidence(const IncidenceMatrix& matrix, std::size_t max_theta) {
    StorageLists storage(matrix.rows());
    for (std::size_t r = 0; r < matrix.rows(); ++r)
        for (std::size_t c = 0; c < matrix.cols(); ++c)
            if (matrix.at(r, c)) storage[r].push_back(static_cast<std::int64_t>(c));
    return FrCode::make(matrix.rows(), matrix.cols(), storage, max_theta);
}

const char* to_string(IdentityClass c) {
    switch (c) {
        case IdentityClass::Regular: return "regular";
        case IdentityClass::SingleDeficient: return "single-deficient";
        case IdentityClass::Heterogeneous: return "heterogeneous";
    }
    return "heterogeneous";
}

IdentityReport check_identities(const FrCode& code) {
    const auto p = profile(code);
    IdentityReport r;
    r.n_alpha = code.n() * p.alpha;
    r.rho_theta = p.rho * code.theta();
    for (auto a : p.alpha_per_node) r.sum_alpha += a;
    for (auto rho : p.rho_per_packet) r.sum_rho += rho;
    r.double_counting = r.sum_alpha == r.sum_rho;

    if (p.is_uniform_storage && p.is_regular_replication && r.n_alpha == r.rho_theta)
        r.classification = IdentityClass::Regular;
    else if (p.is_regular_replication && has_single_deficient_node(p) &&
             r.n_alpha == r.rho_theta + 1)
        r.classification = IdentityClass::SingleDeficient;
    else
        r.classification = IdentityClass::Heterogeneous;
    return r;
}

DssParams DssParams::make(std::size_t n, std::size_t k, std::size_t d, std::size_t file_size,
                          std::size_t theta) {
    if (k < 1 || k > n)
        throw Error(ErrorKind::InvariantViolation, "k must lie in [1, n]");
    if (d < 1 || d + 1 > n)
        throw Error(ErrorKind::InvariantViolation, "d must lie in [1, n-1]");
    if (file_size > theta)
        throw Error(ErrorKind::InvariantViolation, "file size exceeds theta");
    return DssParams{n, k, d, file_size};
}

}  // namespace frc
