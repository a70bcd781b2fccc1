#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace primestar {

/// Argument outside the mathematical domain of an operation (m = 0, b < 2, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A configured search or size budget ran out before an answer was found.
/// Never a claim that no answer exists.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::string progress = {})
        : std::runtime_error(what), progress_(std::move(progress)) {}

    /// Free-form description of how far the computation got.
    const std::string& progress() const noexcept { return progress_; }

private:
    std::string progress_;
};

/// Malformed textual input. `position()` is a 0-based character offset, or a
/// 1-based line number for line-oriented formats.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace primestar
