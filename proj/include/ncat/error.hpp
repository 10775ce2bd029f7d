#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncat {

enum class ErrorCode {
    invalid_arguments,
    constraint_violation,
    no_source,
    not_composable,
    schema_error,
    unknown_id,
    duplicate_id,
    unknown_atom,
    flow_data_inconsistent,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ncat
