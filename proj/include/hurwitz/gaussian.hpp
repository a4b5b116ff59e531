#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// re + im*i with rational parts. A normed integral domain under the 1-norm |re| + |im|.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    std::string str() const;

    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
    friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
    friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
    friend GaussianRational operator-(const GaussianRational& z) { return {-z.re_, -z.im_}; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

inline GaussianRational conj(const GaussianRational& z) { return {z.re(), -z.im()}; }

inline GaussianRational zero_like(const GaussianRational&) { return {}; }
inline GaussianRational one_like(const GaussianRational&) { return GaussianRational(1); }
inline GaussianRational scale(const Integer& k, const GaussianRational& z) {
    return {scale(k, z.re()), scale(k, z.im())};
}
inline GaussianRational divide(const GaussianRational& z, const Integer& k) {
    return {divide(z.re(), k), divide(z.im(), k)};
}
/// 1-norm. The Euclidean modulus is generally irrational; this one stays exact.
inline Rational norm(const GaussianRational& z) { return abs(z.re()) + abs(z.im()); }

} // namespace hurwitz
