#include "frc/constructions.hpp"

#include <numeric>
#include <string>

#include "frc/error.hpp"

namespace frc {

void PrgSpec::validate() const {
    if (n % 2 == 0 || d % 2 == 0)
        throw Error(ErrorKind::ParityError, "PRG needs odd n and odd d (got n=" +
                                                std::to_string(n) + ", d=" + std::to_string(d) +
                                                ")");
    if (d < 3 || d + 2 > n)
        throw Error(ErrorKind::DegreeRange, "PRG needs 3 <= d <= n-2 (got n=" +
                                                std::to_string(n) + ", d=" + std::to_string(d) +
                                                ")");
}

void RingSpec::validate() const {
    if (n == 0 || theta == 0)
        throw Error(ErrorKind::EmptySystem, "ring needs n >= 1 and theta >= 1");
    if (rho < 2 || rho >= n)
        throw Error(ErrorKind::RhoRange, "ring needs 2 <= rho <= n-1 (got n=" +
                                             std::to_string(n) + ", rho=" + std::to_string(rho) +
                                             ")");
}

void TSpec::validate() const {
    if (n < 2 || d < 2)
        throw Error(ErrorKind::DegreeRange, "t-construction needs n >= 2 and d >= 2");
    // The d offsets j*(t+1) mod n are distinct iff the step's additive order
    // n / gcd(t+1, n) is at least d.
    const std::size_t order = n / std::gcd(t + 1, n);
    if (order < d)
        throw Error(ErrorKind::DegenerateOffsets,
                    "offsets collide: n/gcd(t+1, n) = " + std::to_string(order) + " < d = " +
                        std::to_string(d));
}

FrCode build_prg(const PrgSpec& spec) {
    spec.validate();
    const std::size_t n = spec.n;
    const std::size_t p = spec.p();
    const std::size_t q = spec.q();

    StorageLists storage(n);
    std::int64_t packet = 0;
    auto add_edge = [&](std::size_t u, std::size_t v) {
        storage[u].push_back(packet);
        storage[v].push_back(packet);
        ++packet;
    };
    for (std::size_t offset = 1; offset <= q; ++offset)
        for (std::size_t v = 0; v < n; ++v) add_edge(v, (v + offset) % n);
    for (std::size_t j = 0; j < p; ++j) add_edge(j, j + p);

    return FrCode::make(n, static_cast<std::size_t>(packet), storage);
}

FrCode build_ring(const RingSpec& spec) {
    spec.validate();
    StorageLists storage(spec.n);
    for (std::size_t j = 0; j < spec.theta; ++j)
        for (std::size_t i = 0; i < spec.rho; ++i)
            storage[(j + i) % spec.n].push_back(static_cast<std::int64_t>(j));
    return FrCode::make(spec.n, spec.theta, storage);
}

FrCode build_t_code(const TSpec& spec) {
    spec.validate();
    const std::size_t step = spec.step();
    StorageLists storage(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = 0; j < spec.d; ++j)
            storage[i].push_back(static_cast<std::int64_t>((i + j * step) % spec.n));
    return FrCode::make(spec.n, spec.n, storage);
}

}  // namespace frc
