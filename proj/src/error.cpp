#include "aenergy/error.hpp"

namespace aenergy {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidEdge: return "InvalidEdge";
        case ErrorCode::InvalidFamilyParam: return "InvalidFamilyParam";
        case ErrorCode::UnknownFamily: return "UnknownFamily";
        case ErrorCode::MalformedGraph6: return "MalformedGraph6";
        case ErrorCode::EdgeCountMismatch: return "EdgeCountMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NumericalInput: return "NumericalInput";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::InvalidAlpha: return "InvalidAlpha";
        case ErrorCode::InvalidK: return "InvalidK";
        case ErrorCode::NoClosedForm: return "NoClosedForm";
        case ErrorCode::Inapplicable: return "Inapplicable";
        case ErrorCode::CorpusTooLarge: return "CorpusTooLarge";
        case ErrorCode::ReproductionFailure: return "ReproductionFailure";
    }
    return "Unknown";
}

}  // namespace aenergy
