#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aenergy {

enum class ErrorCode {
    InvalidEdge,
    InvalidFamilyParam,
    UnknownFamily,
    MalformedGraph6,
    EdgeCountMismatch,
    ParseError,
    NumericalInput,
    NoConvergence,
    InvalidAlpha,
    InvalidK,
    NoClosedForm,
    Inapplicable,
    CorpusTooLarge,
    ReproductionFailure,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this one exception type; callers switch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace aenergy
