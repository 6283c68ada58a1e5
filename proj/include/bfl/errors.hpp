#pragma once

#include <stdexcept>
#include <string>

namespace bfl {

enum class ErrorCode {
    missing_column,
    unparsable_row,
    non_positive_price,
    empty_series,
    duplicate_date,
    indivisible_length,
    too_few_values,
    empty_census,
    empty_sweep,
    invalid_config,
    io_failure,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::missing_column:      return "missing_column";
        case ErrorCode::unparsable_row:      return "unparsable_row";
        case ErrorCode::non_positive_price:  return "non_positive_price";
        case ErrorCode::empty_series:        return "empty_series";
        case ErrorCode::duplicate_date:      return "duplicate_date";
        case ErrorCode::indivisible_length:  return "indivisible_length";
        case ErrorCode::too_few_values:      return "too_few_values";
        case ErrorCode::empty_census:        return "empty_census";
        case ErrorCode::empty_sweep:         return "empty_sweep";
        case ErrorCode::invalid_config:      return "invalid_config";
        case ErrorCode::io_failure:          return "io_failure";
    }
    return "unknown";
}

// Bad input or a violated precondition. The CLI maps these to exit code 2;
// anything else that escapes is a plain error (exit code 1).
class ValidationError : public std::runtime_error {
public:
    ValidationError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace bfl
