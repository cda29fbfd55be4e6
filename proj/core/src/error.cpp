#include "dimgrid/error.hpp"

namespace dimgrid {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ZeroRange: return "ZeroRange";
        case ErrorKind::InvalidRange: return "InvalidRange";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::TooFewPoints: return "TooFewPoints";
        case ErrorKind::DegenerateDistances: return "DegenerateDistances";
        case ErrorKind::DegenerateFit: return "DegenerateFit";
        case ErrorKind::SingleClass: return "SingleClass";
        case ErrorKind::UnknownGenerator: return "UnknownGenerator";
        case ErrorKind::NoiseEstimateUnavailable: return "NoiseEstimateUnavailable";
        case ErrorKind::CacheWrite: return "CacheWriteError";
        case ErrorKind::Io: return "IoError";
        case ErrorKind::Parse: return "ParseError";
    }
    return "Unknown";
}

}  // namespace dimgrid
