#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frc {

enum class ErrorKind {
    EmptySystem,
    IndexOutOfRange,
    OrphanPacket,
    DuplicatePacket,
    ThetaLimit,
    ParityError,
    DegreeRange,
    RhoRange,
    DegenerateOffsets,
    ParseError,
    InvariantViolation,
    KOutOfRange,
    FileSizeRange,
    Unreachable,
    BudgetExceeded,
    Unrepairable,
    MalformedRow,
};

std::string_view to_string(ErrorKind kind);

// Every domain failure surfaces as this exception; kind() names the failure
// class so callers (and the CLI) can report it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace frc
