#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace percol {

/// Input outside the admissible domain of an operation (k below a series
/// minimum, non-positive bounds, malformed period shape).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A structure violates its own invariants (bad profile sums, unused colors).
class InvalidColoring : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(unsigned long long budget)
        : std::runtime_error("search budget of " + std::to_string(budget) + " states exceeded"),
          budget_(budget) {}
    unsigned long long budget() const noexcept { return budget_; }

private:
    unsigned long long budget_;
};

class BoundsMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a result that is guaranteed by construction fails its
/// re-verification. Reaching one of these means a bug or a counterexample.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class TransitivityViolation : public InternalError {
public:
    using InternalError::InternalError;
};

/// Value-or-error for operations whose negative outcome is a regular result
/// (NotPerfect, Contradiction, ...) rather than an exceptional one.
template <class T, class E>
class Result {
public:
    Result(T value) : data_(std::in_place_index<0>, std::move(value)) {}
    Result(E error) : data_(std::in_place_index<1>, std::move(error)) {}

    bool has_value() const noexcept { return data_.index() == 0; }
    explicit operator bool() const noexcept { return has_value(); }

    const T& value() const& {
        if (!has_value()) throw std::logic_error("Result holds an error");
        return std::get<0>(data_);
    }
    T&& value() && {
        if (!has_value()) throw std::logic_error("Result holds an error");
        return std::get<0>(std::move(data_));
    }
    const E& error() const& {
        if (has_value()) throw std::logic_error("Result holds a value");
        return std::get<1>(data_);
    }

    const T& operator*() const& { return value(); }
    const T* operator->() const { return &value(); }

private:
    std::variant<T, E> data_;
};

}  // namespace percol
