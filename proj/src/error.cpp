#include "frc/error.hpp"

namespace frc {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptySystem: return "EmptySystem";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::OrphanPacket: return "OrphanPacket";
        case ErrorKind::DuplicatePacket: return "DuplicatePacket";
        case ErrorKind::ThetaLimit: return "ThetaLimit";
        case ErrorKind::ParityError: return "ParityError";
        case ErrorKind::DegreeRange: return "DegreeRange";
        case ErrorKind::RhoRange: return "RhoRange";
        case ErrorKind::DegenerateOffsets: return "DegenerateOffsets";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::KOutOfRange: return "KOutOfRange";
        case ErrorKind::FileSizeRange: return "FileSizeRange";
        case ErrorKind::Unreachable: return "Unreachable";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::Unrepairable: return "Unrepairable";
        case ErrorKind::MalformedRow: return "MalformedRow";
    }
    return "Unknown";
}

}  // namespace frc
