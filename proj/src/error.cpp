#include "dal/error.hpp"

namespace dal {

auto to_string(ErrorCode code) -> const char *
{
    switch (code) {
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::InvalidLabeling: return "InvalidLabeling";
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::TwinObstruction: return "TwinObstruction";
        case ErrorCode::ProvablyInfeasible: return "ProvablyInfeasible";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

} // namespace dal
