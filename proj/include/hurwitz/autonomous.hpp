#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/bell.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/ring.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// The autonomous operator on a jet (f, delta f, ..., delta^{m-1} f):
///
///   A_1 = f,   A_{n+1} = Y_n(A_1, ..., A_n; delta f, ..., delta^n f),
///
/// which are the successive t-derivatives of the solution of y' = f(y). Returns exactly
/// jet.size() values. Works over any coefficient ring, including truncated series.
/// Whether the jet entries really are derivatives of one function is not checked.
template <CommutativeRing R>
std::vector<R> autonomous_operator(const DerivativeJet<R>& jet) {
    const std::size_t m = jet.size();
    std::vector<R> a;
    a.reserve(m);
    a.push_back(jet[0]);
    const std::span<const R> derivatives(jet.values.data() + 1, m - 1);
    for (std::size_t n = 1; n < m; ++n) {
        const auto order = static_cast<unsigned>(n);
        a.push_back(complete_bell(order, std::span<const R>(a.data(), n), derivatives));
    }
    return a;
}

/// Phi(t) = base + sum_{n=1}^{N} A_n t^n / n!.
template <CommutativeRing R>
struct FlowSeries {
    R base;
    std::vector<R> a_coeffs;

    std::size_t order() const { return a_coeffs.size(); }
};

/// Evaluated flow at a list of times.
template <CommutativeRing R>
struct TrajectorySample {
    std::vector<Rational> t_values;
    std::vector<R> points;
};

/// Flow through x for a jet of f evaluated at x.
template <CommutativeRing R>
FlowSeries<R> flow_series(const R& x, const DerivativeJet<R>& jet) {
    return FlowSeries<R>{x, autonomous_operator(jet)};
}

/// Flow with coefficients that are series in x: runs the same recursion with the
/// truncated series ring as coefficient ring, using (f, delta f, ..., delta^{depth-1} f).
///
/// The k-th derivative is only known to order N - k, so every jet entry is cut to the
/// common order N - depth + 1; the returned A_n and the base x live at that order.
template <CommutativeRing R>
FlowSeries<HurwitzSeries<R>> flow_symbolic(const HurwitzSeries<R>& f, std::size_t depth) {
    if (depth < 1)
        throw std::domain_error("flow depth must be at least 1");
    if (depth > f.order())
        throw std::domain_error("flow depth " + std::to_string(depth) + " exceeds series order "
                                + std::to_string(f.order()));
    const std::size_t common = f.order() - (depth - 1);
    const auto expansion = hurwitz_expansion(f, depth - 1);
    std::vector<HurwitzSeries<R>> values;
    values.reserve(depth);
    for (const auto& d : expansion.values)
        values.push_back(d.truncated(common));
    const DerivativeJet<HurwitzSeries<R>> jet(std::move(values));
    return flow_series(HurwitzSeries<R>::variable(common, f[0]), jet);
}

/// base + sum A_n t^n / n!, exactly.
template <IntegerDivisible R>
R flow_eval(const FlowSeries<R>& flow, const Rational& t) {
    R sum = flow.base;
    const Integer p = t.numerator();
    const Integer q = t.denominator();
    Integer p_pow = 1;
    Integer denom = 1;
    for (std::size_t n = 1; n <= flow.order(); ++n) {
        p_pow *= p;
        denom *= q * static_cast<unsigned long>(n);
        if (p_pow == 0)
            break;
        sum = sum + divide(scale(p_pow, flow.a_coeffs[n - 1]), denom);
    }
    return sum;
}

template <IntegerDivisible R>
TrajectorySample<R> trajectory(const FlowSeries<R>& flow, std::vector<Rational> t_values) {
    TrajectorySample<R> sample{std::move(t_values), {}};
    sample.points.reserve(sample.t_values.size());
    for (const auto& t : sample.t_values)
        sample.points.push_back(flow_eval(flow, t));
    return sample;
}

} // namespace hurwitz
