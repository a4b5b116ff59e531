#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/error.hpp"
#include "hurwitz/ring.hpp"

namespace hurwitz {

/// Truncated exponential generating function sum_{n=0}^{N} a_n x^n / n!, stored as the
/// derivative coefficients a_0..a_N. The product is the binomial convolution
/// c_n = sum_k C(n,k) a_k b_{n-k}, so truncation at N is a ring homomorphism.
///
/// The coefficient ring is the template parameter; combining series of different
/// orders throws OrderMismatch.
template <CommutativeRing R>
class HurwitzSeries {
public:
    using value_type = R;

    explicit HurwitzSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("a Hurwitz series needs at least the constant coefficient");
    }

    static HurwitzSeries zero(std::size_t order, const R& like) {
        return HurwitzSeries(std::vector<R>(order + 1, zero_like(like)));
    }
    static HurwitzSeries constant(const R& c, std::size_t order) {
        auto s = zero(order, c);
        s.coeffs_[0] = c;
        return s;
    }
    /// The series x, i.e. coefficients (0, 1, 0, ...). At order 0 this is the zero series.
    static HurwitzSeries variable(std::size_t order, const R& like) {
        auto s = zero(order, like);
        if (order >= 1)
            s.coeffs_[1] = one_like(like);
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<R>& coeffs() const { return coeffs_; }
    const R& operator[](std::size_t n) const { return coeffs_[n]; }

    HurwitzSeries truncated(std::size_t order) const {
        if (order > this->order())
            throw OrderMismatch("cannot truncate order " + std::to_string(this->order()) + " up to "
                                + std::to_string(order));
        return HurwitzSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    HurwitzSeries& operator+=(const HurwitzSeries& rhs) {
        require_same_order(rhs);
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            coeffs_[n] = coeffs_[n] + rhs.coeffs_[n];
        return *this;
    }
    HurwitzSeries& operator-=(const HurwitzSeries& rhs) {
        require_same_order(rhs);
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            coeffs_[n] = coeffs_[n] - rhs.coeffs_[n];
        return *this;
    }

    friend HurwitzSeries operator+(HurwitzSeries lhs, const HurwitzSeries& rhs) { return lhs += rhs; }
    friend HurwitzSeries operator-(HurwitzSeries lhs, const HurwitzSeries& rhs) { return lhs -= rhs; }
    friend HurwitzSeries operator-(HurwitzSeries s) {
        for (auto& c : s.coeffs_)
            c = -c;
        return s;
    }

    friend HurwitzSeries operator*(const HurwitzSeries& f, const HurwitzSeries& g) {
        f.require_same_order(g);
        const std::size_t size = f.coeffs_.size();
        std::vector<R> out;
        out.reserve(size);
        Integer binom;
        for (std::size_t n = 0; n < size; ++n) {
            R acc = f.coeffs_[0] * g.coeffs_[n];
            binom = 1;
            for (std::size_t k = 1; k <= n; ++k) {
                binom = binom * static_cast<unsigned long>(n - k + 1) / static_cast<unsigned long>(k);
                acc = acc + scale(binom, f.coeffs_[k] * g.coeffs_[n - k]);
            }
            out.push_back(std::move(acc));
        }
        return HurwitzSeries(std::move(out));
    }

    friend bool operator==(const HurwitzSeries&, const HurwitzSeries&) = default;

private:
    void require_same_order(const HurwitzSeries& rhs) const {
        if (coeffs_.size() != rhs.coeffs_.size())
            throw OrderMismatch("series orders differ: " + std::to_string(order()) + " vs "
                                + std::to_string(rhs.order()));
    }

    std::vector<R> coeffs_;
};

template <CommutativeRing R>
HurwitzSeries<R> zero_like(const HurwitzSeries<R>& s) {
    return HurwitzSeries<R>::zero(s.order(), s[0]);
}

template <CommutativeRing R>
HurwitzSeries<R> one_like(const HurwitzSeries<R>& s) {
    return HurwitzSeries<R>::constant(one_like(s[0]), s.order());
}

template <CommutativeRing R>
HurwitzSeries<R> scale(const Integer& k, const HurwitzSeries<R>& s) {
    std::vector<R> out;
    out.reserve(s.order() + 1);
    for (const auto& c : s.coeffs())
        out.push_back(scale(k, c));
    return HurwitzSeries<R>(std::move(out));
}

template <IntegerDivisible R>
HurwitzSeries<R> divide(const HurwitzSeries<R>& s, const Integer& k) {
    std::vector<R> out;
    out.reserve(s.order() + 1);
    for (const auto& c : s.coeffs())
        out.push_back(divide(c, k));
    return HurwitzSeries<R>(std::move(out));
}

/// Values (v_0, ..., v_m) with v_k the k-th derivative of some f, either evaluated at a
/// point (scalar ring) or kept as a series.
template <CommutativeRing R>
struct DerivativeJet {
    std::vector<R> values;

    explicit DerivativeJet(std::vector<R> v) : values(std::move(v)) {
        if (values.empty())
            throw std::invalid_argument("a derivative jet must be nonempty");
    }

    std::size_t size() const { return values.size(); }
    const R& operator[](std::size_t k) const { return values[k]; }

    /// The first `count` entries.
    DerivativeJet prefix(std::size_t count) const {
        if (count == 0 || count > values.size())
            throw std::domain_error("jet prefix of length " + std::to_string(count) + " out of range [1, "
                                    + std::to_string(values.size()) + "]");
        return DerivativeJet(std::vector<R>(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(count)));
    }

    friend bool operator==(const DerivativeJet&, const DerivativeJet&) = default;
};

/// Derivative: shifts coefficients left, dropping the order by one. Never pads with a
/// coefficient the caller did not supply.
template <CommutativeRing R>
HurwitzSeries<R> delta(const HurwitzSeries<R>& f) {
    if (f.order() == 0)
        throw std::domain_error("derivative of an order-0 truncation carries no information");
    return HurwitzSeries<R>(std::vector<R>(f.coeffs().begin() + 1, f.coeffs().end()));
}

/// (f, delta f, ..., delta^depth f); the k-th entry has order order(f) - k.
template <CommutativeRing R>
DerivativeJet<HurwitzSeries<R>> hurwitz_expansion(const HurwitzSeries<R>& f, std::size_t depth) {
    if (depth > f.order())
        throw std::domain_error("expansion depth " + std::to_string(depth) + " exceeds series order "
                                + std::to_string(f.order()));
    std::vector<HurwitzSeries<R>> out{f};
    out.reserve(depth + 1);
    for (std::size_t k = 1; k <= depth; ++k)
        out.push_back(delta(out.back()));
    return DerivativeJet<HurwitzSeries<R>>(std::move(out));
}

/// sum_{n=0}^{N} a_n c^n / n! exactly. No restriction on c: the truncation is a polynomial.
template <IntegerDivisible R>
R evaluate(const HurwitzSeries<R>& f, const R& c) {
    R sum = f[0];
    R power = one_like(c);
    Integer fact = 1;
    for (std::size_t n = 1; n <= f.order(); ++n) {
        power = power * c;
        fact *= static_cast<unsigned long>(n);
        sum = sum + divide(f[n] * power, fact);
    }
    return sum;
}

/// max_{0<=n<=N} ||a_n / n!||. Over a truncation this is only a lower bound on the
/// supremum over the full sequence. Requires 0 <= c_norm <= 1.
template <typename R>
    requires NormedRing<R> && IntegerDivisible<R>
Rational tail_norm_bound(const HurwitzSeries<R>& f, const Rational& c_norm) {
    if (c_norm.sign() < 0 || c_norm > Rational(1))
        throw std::domain_error("evaluation point norm must lie in [0, 1], got " + c_norm.str());
    Rational best = norm(f[0]);
    Integer fact = 1;
    for (std::size_t n = 1; n <= f.order(); ++n) {
        fact *= static_cast<unsigned long>(n);
        const Rational v = norm(divide(f[n], fact));
        if (v > best)
            best = v;
    }
    return best;
}

} // namespace hurwitz
