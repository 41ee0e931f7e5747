#ifndef TIHANY_ERROR_HPP
#define TIHANY_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tihany {

enum class ErrorCode {
    OutOfRange,
    TooLarge,
    NotTriangleFree,
    InsufficientSize,
    NotFound,
    MalformedInput,
    AlphaTooLarge,
    BadParameters,
    HypothesisViolation,
    GuardFailed,
    ConstructionExhausted,
    PotentialCounterexample,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotTriangleFree: return "NotTriangleFree";
    case ErrorCode::InsufficientSize: return "InsufficientSize";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::AlphaTooLarge: return "AlphaTooLarge";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::GuardFailed: return "GuardFailed";
    case ErrorCode::ConstructionExhausted: return "ConstructionExhausted";
    case ErrorCode::PotentialCounterexample: return "PotentialCounterexample";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace tihany

#endif // TIHANY_ERROR_HPP
