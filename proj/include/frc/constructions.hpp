#pragma once

#include <cstddef>

#include "frc/code.hpp"

namespace frc {

// Partial regular graph: n-1 vertices of degree d, the last of degree d-1.
// n and d odd, 3 <= d <= n-2.
struct PrgSpec {
    std::size_t n = 0;
    std::size_t d = 0;

    std::size_t p() const { return (n - 1) / 2; }
    std::size_t q() const { return (d - 1) / 2; }

    // Throws Error{ParityError, DegreeRange}.
    void validate() const;
};

// theta packets on a ring of n nodes, each on rho consecutive nodes.
struct RingSpec {
    std::size_t n = 0;
    std::size_t theta = 0;
    std::size_t rho = 0;

    std::size_t quotient() const { return theta / n; }
    std::size_t remainder() const { return theta % n; }
    // Block count when theta = m * n; 0 otherwise.
    std::size_t blocks() const { return remainder() == 0 ? quotient() : 0; }

    // Throws Error{RhoRange, EmptySystem}.
    void validate() const;
};

// Circulant t-family: theta = n, node i stores {i + j*(t+1) mod n : j < d}.
struct TSpec {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t t = 0;

    std::size_t step() const { return (t + 1) % n; }

    // Throws Error{DegreeRange, DegenerateOffsets}.
    void validate() const;
};

// Edge-to-packet code of the partial regular graph built as a circulant graph
// with offsets 1..q plus the matching (j, j+p) for j < p. Packets are numbered
// circulant edges first, by (offset, start vertex), then matching edges by
// start vertex. The deficient vertex is n-1.
FrCode build_prg(const PrgSpec& spec);

// Packet j lives on nodes {(j + i) mod n : i < rho}.
FrCode build_ring(const RingSpec& spec);

FrCode build_t_code(const TSpec& spec);

}  // namespace frc
