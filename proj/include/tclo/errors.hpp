#pragma once

#include <stdexcept>
#include <string>

namespace tclo {

/// Caller broke an interface contract (bad flag value, mixed fields, malformed input).
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Input data failed a mathematical validation gate (singular curve, non-primary ideal).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A computation exceeded its configured size budget and was abandoned, not answered.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tclo
