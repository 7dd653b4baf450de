#include "hypiso/error.hpp"

namespace hypiso {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::AmbiguousInput: return "AmbiguousInput";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::InvalidPolygon: return "InvalidPolygon";
    case ErrorCode::IdealVertex: return "IdealVertex";
    case ErrorCode::InvalidTotal: return "InvalidTotal";
    case ErrorCode::EvaluationFailure: return "EvaluationFailure";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace hypiso
