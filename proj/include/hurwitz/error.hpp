#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace hurwitz {

// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Two truncated series of different orders were combined.
class OrderMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A majorant hypothesis ||v_n|| <= a_n failed before certification started.
class HypothesisViolation : public std::domain_error {
public:
    HypothesisViolation(std::size_t index, std::string norm, std::string bound)
        : std::domain_error("majorant hypothesis violated at n=" + std::to_string(index) + ": norm " + norm
                            + " exceeds " + bound),
          index_(index), norm_(std::move(norm)), bound_(std::move(bound)) {}

    std::size_t index() const noexcept { return index_; }
    const std::string& norm() const noexcept { return norm_; }
    const std::string& bound() const noexcept { return bound_; }

private:
    std::size_t index_;
    std::string norm_;
    std::string bound_;
};

} // namespace hurwitz
