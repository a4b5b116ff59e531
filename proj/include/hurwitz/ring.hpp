#pragma once

#include <concepts>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Commutative ring with identity. zero_like/one_like take a prototype because some
/// carriers (truncated series) need a shape to build their constants.
template <typename T>
concept CommutativeRing = std::copyable<T> && std::equality_comparable<T>
    && requires(const T& a, const T& b, const Integer& k) {
           { a + b } -> std::convertible_to<T>;
           { a - b } -> std::convertible_to<T>;
           { -a } -> std::convertible_to<T>;
           { a * b } -> std::convertible_to<T>;
           { zero_like(a) } -> std::same_as<T>;
           { one_like(a) } -> std::same_as<T>;
           { scale(k, a) } -> std::same_as<T>;
       };

/// Carrier whose elements can be divided exactly by nonzero integers (needed for x^n/n!).
template <typename T>
concept IntegerDivisible = CommutativeRing<T> && requires(const T& a, const Integer& k) {
    { divide(a, k) } -> std::same_as<T>;
};

/// Ring with a rational-valued norm: ||x||=0 iff x=0, triangle inequality,
/// ||-x|| = ||x||, ||xy|| <= ||x|| ||y||.
template <typename T>
concept NormedRing = CommutativeRing<T> && requires(const T& a) {
    { norm(a) } -> std::same_as<Rational>;
};

template <CommutativeRing T>
T pow(const T& base, unsigned long exponent) {
    T result = one_like(base);
    T square = base;
    while (exponent != 0) {
        if (exponent & 1U)
            result = result * square;
        exponent >>= 1U;
        if (exponent != 0)
            square = square * square;
    }
    return result;
}

} // namespace hurwitz
