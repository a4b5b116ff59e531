#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hurwitz {

using Integer = mpz_class;

Integer factorial(unsigned long n);

/// Exact fraction p/q, always stored reduced with q > 0, so equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    explicit Rational(const Integer& value) : value_(value) {}
    Rational(const Integer& numerator, const Integer& denominator);

    /// Accepts "p" or "p/q" with an optional leading '-' or '+'. Throws ParseError.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    std::string str() const;
    double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x);

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

Rational abs(const Rational& x);

// Ring hooks used by the generic algorithms.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational scale(const Integer& k, const Rational& x) { return Rational(k) * x; }
/// Exact division by a nonzero integer.
Rational divide(const Rational& x, const Integer& k);
/// Absolute value; multiplicative, so submultiplicativity holds with equality.
inline Rational norm(const Rational& x) { return abs(x); }

} // namespace hurwitz
