#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hurwitz/autonomous.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

// Three right-hand sides with known flows through 0:
//   Exponential(a): f = e^{a z},      y(t) = (1/a) log(1/(1 - a t))
//   Geometric:      f = 1/(1 - z),    y(t) = 1 - sqrt(1 - 2t)
//   Binomial(a):    f = (1 + z)^a,    y(t) = (1 + (1 - a) t)^{1/(1-a)} - 1,  a != 1
enum class FamilyKind { exponential, geometric, binomial };

struct FamilySpec {
    FamilyKind kind;
    Rational a;          // unused for geometric
    unsigned order = 0;  // N

    static FamilySpec exponential(Rational a, unsigned order) { return {FamilyKind::exponential, std::move(a), order}; }
    static FamilySpec geometric(unsigned order) { return {FamilyKind::geometric, Rational(0), order}; }
    static FamilySpec binomial(Rational a, unsigned order) { return {FamilyKind::binomial, std::move(a), order}; }

    /// Throws std::domain_error for binomial with a = 1.
    void validate() const;
    /// "exp:a", "geom" or "binom:a".
    std::string name() const;
};

/// Parses "exp:a", "geom" or "binom:a". Throws ParseError.
FamilySpec parse_family(const std::string& text, unsigned order);

/// q(q-1)...(q-n+1), empty product 1.
Rational falling_factorial(const Rational& q, unsigned n);
/// a(a+1)...(a+n-1), empty product 1.
Rational pochhammer_rising(const Rational& a, unsigned n);
/// Generalized binomial C(q, n) = falling_factorial(q, n) / n!.
Rational rational_binomial(const Rational& q, unsigned n);

/// Derivatives at 0 of the family's f: (v_0, ..., v_N).
/// Binomial uses falling factorials a(a-1)...(a-n+1), the actual derivatives of (1+z)^a.
DerivativeJet<Rational> jet_of_family(const FamilySpec& spec);

/// (A_1, ..., A_N) from the closed forms, without running the recursion.
std::vector<Rational> image_of_family(const FamilySpec& spec);

struct ClosedFormFlow {
    FlowSeries<Rational> flow;
    std::string label;
};

/// Flow through 0 with coefficients image_of_family(spec) and a readable closed form.
ClosedFormFlow corollary1_flow(const FamilySpec& spec);

/// Closed-form flow value in double precision, for float sanity checks only.
double closed_form_value(const FamilySpec& spec, double t);

} // namespace hurwitz
