#ifndef TENSORGRAPH_ERROR_HPP
#define TENSORGRAPH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tensorgraph {

enum class ErrorCode {
    // construction of colored graphs
    InvalidRank,
    UnequalParts,
    DuplicateColorAtVertex,
    MissingColorAtVertex,
    UnknownNode,
    ColorOutOfRange,
    ParityViolation,
    DuplicateLabel,
    // construction of stranded graphs
    DanglingHalfEdge,
    HalfEdgeReused,
    UnknownHalfEdge,
    BadPermutation,
    WrongValence,
    // topology
    OddEuler,
    NegativeGenus,
    Disconnected,
    // bubbles
    BadCardinal,
    // checks
    TwistedInput,
    WrongRank,
    // sampling
    BadParameters,
    AttemptsExhausted,
    // documents
    ParseError,
    UnknownFormat,
    VersionUnsupported,
    // broken internal invariant
    Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace tensorgraph

#endif // TENSORGRAPH_ERROR_HPP
