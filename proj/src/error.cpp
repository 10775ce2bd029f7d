#include "ncat/error.hpp"

namespace ncat {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_arguments: return "invalid-arguments";
        case ErrorCode::constraint_violation: return "constraint-violation";
        case ErrorCode::no_source: return "no-source";
        case ErrorCode::not_composable: return "not-composable";
        case ErrorCode::schema_error: return "schema-error";
        case ErrorCode::unknown_id: return "unknown-id";
        case ErrorCode::duplicate_id: return "duplicate-id";
        case ErrorCode::unknown_atom: return "unknown-atom";
        case ErrorCode::flow_data_inconsistent: return "flow-data-inconsistent";
    }
    return "unknown";
}

}  // namespace ncat
