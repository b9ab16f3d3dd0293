#include "tensorgraph/error.hpp"

namespace tensorgraph {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::UnequalParts: return "UnequalParts";
    case ErrorCode::DuplicateColorAtVertex: return "DuplicateColorAtVertex";
    case ErrorCode::MissingColorAtVertex: return "MissingColorAtVertex";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::DanglingHalfEdge: return "DanglingHalfEdge";
    case ErrorCode::HalfEdgeReused: return "HalfEdgeReused";
    case ErrorCode::UnknownHalfEdge: return "UnknownHalfEdge";
    case ErrorCode::BadPermutation: return "BadPermutation";
    case ErrorCode::WrongValence: return "WrongValence";
    case ErrorCode::OddEuler: return "OddEuler";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::BadCardinal: return "BadCardinal";
    case ErrorCode::TwistedInput: return "TwistedInput";
    case ErrorCode::WrongRank: return "WrongRank";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::AttemptsExhausted: return "AttemptsExhausted";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::VersionUnsupported: return "VersionUnsupported";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace tensorgraph
