#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/ring.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

namespace detail {

// powers[i-1][e-1] = b_i^e for e up to n / i.
template <CommutativeRing R>
std::vector<std::vector<R>> power_table(unsigned n, std::span<const R> b) {
    std::vector<std::vector<R>> powers(n);
    for (unsigned i = 1; i <= n; ++i) {
        auto& row = powers[i - 1];
        row.reserve(n / i);
        row.push_back(b[i - 1]);
        for (unsigned e = 2; e <= n / i; ++e)
            row.push_back(row.back() * b[i - 1]);
    }
    return powers;
}

// coefficient * prod_i b_i^{j_i}. Every partition of n >= 1 has a part, so the
// product is never empty.
template <CommutativeRing R>
R bell_monomial(const BellTerm& term, const std::vector<std::vector<R>>& powers) {
    const auto& mult = term.partition.multiplicities;
    std::optional<R> product;
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (mult[i] == 0)
            continue;
        const R& factor = powers[i][mult[i] - 1];
        if (product)
            *product = *product * factor;
        else
            product = factor;
    }
    return term.coefficient == 1 ? std::move(*product) : scale(term.coefficient, *product);
}

inline void require_length(const char* what, std::size_t have, unsigned n) {
    if (have < n)
        throw std::invalid_argument(std::string(what) + " needs at least " + std::to_string(n) + " entries, got "
                                    + std::to_string(have));
}

} // namespace detail

/// Partial Bell polynomial B_{n,k}(b_1, ..., b_n), with b[0] = b_1.
///
/// Each partition contributes set_partition_count(p) * prod b_i^{j_i}; that integer
/// equals n!/(prod j_i! (i!)^{j_i}), so no division happens in the coefficient ring.
template <CommutativeRing R>
R partial_bell(unsigned n, unsigned k, std::span<const R> b) {
    if (k < 1 || k > n)
        throw std::domain_error("partial Bell polynomial needs 1 <= k <= n, got n=" + std::to_string(n)
                                + " k=" + std::to_string(k));
    detail::require_length("b", b.size(), n);
    const auto powers = detail::power_table(n, b);
    R sum = zero_like(b[0]);
    for (const auto& term : detail::bell_terms(n))
        if (term.length == k)
            sum = sum + detail::bell_monomial(term, powers);
    return sum;
}

/// Y_n(b_1..b_n; a_1..a_n) = sum_k B_{n,k}(b) a_k, in a single pass over the partitions of n.
template <CommutativeRing R>
R complete_bell(unsigned n, std::span<const R> b, std::span<const R> a) {
    if (n < 1)
        throw std::domain_error("complete Bell polynomial needs n >= 1");
    detail::require_length("b", b.size(), n);
    detail::require_length("a", a.size(), n);
    const auto powers = detail::power_table(n, b);
    R sum = zero_like(b[0]);
    for (const auto& term : detail::bell_terms(n))
        sum = sum + detail::bell_monomial(term, powers) * a[term.length - 1];
    return sum;
}

template <CommutativeRing R>
R partial_bell(unsigned n, unsigned k, const std::vector<R>& b) {
    return partial_bell(n, k, std::span<const R>(b));
}

template <CommutativeRing R>
R complete_bell(unsigned n, const std::vector<R>& b, const std::vector<R>& a) {
    return complete_bell(n, std::span<const R>(b), std::span<const R>(a));
}

/// Truncated EGF of f(g(x)) by Faa di Bruno: c_0 = a_0, c_n = Y_n(b_1..b_n; a_1..a_n).
/// g must have zero constant term; composition at a nonzero base point is not defined here.
template <CommutativeRing R>
HurwitzSeries<R> compose_egf(const HurwitzSeries<R>& f, const HurwitzSeries<R>& g) {
    if (f.order() != g.order())
        throw OrderMismatch("compose_egf needs equal orders, got " + std::to_string(f.order()) + " and "
                            + std::to_string(g.order()));
    if (!(g[0] == zero_like(g[0])))
        throw std::domain_error("compose_egf requires the inner series to have zero constant term");
    const auto order = static_cast<unsigned>(f.order());
    std::vector<R> out{f[0]};
    out.reserve(order + 1);
    const std::span<const R> b(g.coeffs().data() + 1, order);
    const std::span<const R> a(f.coeffs().data() + 1, order);
    for (unsigned n = 1; n <= order; ++n)
        out.push_back(complete_bell(n, b, a));
    return HurwitzSeries<R>(std::move(out));
}

} // namespace hurwitz
