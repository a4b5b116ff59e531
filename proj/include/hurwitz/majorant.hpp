#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/autonomous.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/ring.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

// Majorant families for ||delta^n f(c)|| <= a_n:
//   power(a):     a_n = a^n                          (a > 0),  bound valid for 0 <= t < 1/a
//   factorial:    a_n = n!                                     bound valid for 0 <= t < 1/2
//   binomial(a):  a_0 = 1, a_n = a(a-1)...(a-n+1)    (a != 1), bound valid for 0 <= t < 1
//   explicit:     caller-supplied nonnegative sequence, no closed-form interval
enum class MajorantKind { power, factorial, binomial, explicit_sequence };

struct MajorantSpec {
    MajorantKind kind;
    Rational a;
    std::vector<Rational> values;  // explicit_sequence only

    static MajorantSpec power(Rational a) { return {MajorantKind::power, std::move(a), {}}; }
    static MajorantSpec factorial() { return {MajorantKind::factorial, Rational(0), {}}; }
    static MajorantSpec binomial(Rational a) { return {MajorantKind::binomial, std::move(a), {}}; }
    static MajorantSpec explicit_sequence(std::vector<Rational> v) {
        return {MajorantKind::explicit_sequence, Rational(0), std::move(v)};
    }

    std::string name() const;
    /// Closed-form validity interval for t, or nullopt for explicit sequences.
    std::optional<std::string> t_domain() const;
    /// Whether t lies in the closed-form validity interval (always true for explicit).
    bool t_in_domain(const Rational& t) const;
};

/// Parses "exp:a", "fact" or "binom:a". Explicit sequences are built by the caller.
MajorantSpec parse_majorant(const std::string& text);

/// (a_0, ..., a_upto). Throws std::domain_error if a value would be negative
/// (power with a <= 0, binomial whose falling factorials change sign, negative explicit
/// entries) or an explicit sequence is too short.
std::vector<Rational> majorant_values(const MajorantSpec& spec, std::size_t upto);

struct DominationResult {
    bool holds = true;
    std::optional<std::size_t> first_failure;
};

/// norms[n] <= majorant[n] for every n; reports the smallest violating n.
DominationResult check_domination(std::span<const Rational> norms, std::span<const Rational> majorant);

/// The autonomous operator on the majorant sequence: (A_1([a_0]), ..., A_N([a_{N-1}])).
std::vector<Rational> bound_series(std::span<const Rational> majorant);

/// sum_{n=1}^{N} bounds[n-1] t^n / n!. Requires t >= 0.
Rational bound_flow_eval(std::span<const Rational> bounds, const Rational& t);
/// As above, additionally rejecting t outside the majorant's validity interval.
Rational bound_flow_eval(std::span<const Rational> bounds, const Rational& t, const MajorantSpec& spec);

struct CertificationEntry {
    std::size_t n;
    Rational actual_norm;
    Rational bound;
    bool holds;
};

struct CertificationReport {
    std::vector<CertificationEntry> per_n;
    bool overall = true;
    std::optional<std::string> t_domain;
};

template <NormedRing R>
std::vector<Rational> norm_jet(const DerivativeJet<R>& jet) {
    std::vector<Rational> out;
    out.reserve(jet.size());
    for (const auto& v : jet.values)
        out.push_back(norm(v));
    return out;
}

/// Checks the majorant hypothesis on the jet (throwing HypothesisViolation if it fails),
/// then compares ||A_n|| of the jet against A_n of the majorant for n = 1..jet.size().
template <NormedRing R>
CertificationReport certify(const DerivativeJet<R>& jet, const MajorantSpec& spec) {
    const auto majorant = majorant_values(spec, jet.size() - 1);
    const auto norms = norm_jet(jet);
    const auto domination = check_domination(norms, majorant);
    if (!domination.holds) {
        const std::size_t n = *domination.first_failure;
        throw HypothesisViolation(n, norms[n].str(), majorant[n].str());
    }

    const auto actual = autonomous_operator(jet);
    const auto bounds = bound_series(majorant);

    CertificationReport report;
    report.t_domain = spec.t_domain();
    report.per_n.reserve(actual.size());
    for (std::size_t i = 0; i < actual.size(); ++i) {
        Rational actual_norm = norm(actual[i]);
        const bool holds = actual_norm <= bounds[i];
        report.overall = report.overall && holds;
        report.per_n.push_back(CertificationEntry{i + 1, std::move(actual_norm), bounds[i], holds});
    }
    return report;
}

} // namespace hurwitz
