#include "hurwitz/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

#include "hurwitz/error.hpp"

namespace hurwitz {

void FamilySpec::validate() const {
    if (kind == FamilyKind::binomial && a == Rational(1))
        throw std::domain_error("binomial family requires a != 1");
}

std::string FamilySpec::name() const {
    switch (kind) {
    case FamilyKind::exponential:
        return "exp:" + a.str();
    case FamilyKind::geometric:
        return "geom";
    case FamilyKind::binomial:
        return "binom:" + a.str();
    }
    return {};
}

FamilySpec parse_family(const std::string& text, unsigned order) {
    if (text == "geom")
        return FamilySpec::geometric(order);
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("family must be exp:a, geom or binom:a, got \"" + text + "\"");
    const std::string head = text.substr(0, colon);
    Rational a = Rational::parse(text.substr(colon + 1));
    if (head == "exp")
        return FamilySpec::exponential(std::move(a), order);
    if (head == "binom")
        return FamilySpec::binomial(std::move(a), order);
    throw ParseError("unknown family \"" + head + "\"");
}

Rational falling_factorial(const Rational& q, unsigned n) {
    Rational r(1);
    for (unsigned i = 0; i < n; ++i)
        r *= q - Rational(static_cast<long>(i));
    return r;
}

Rational pochhammer_rising(const Rational& a, unsigned n) {
    Rational r(1);
    for (unsigned i = 0; i < n; ++i)
        r *= a + Rational(static_cast<long>(i));
    return r;
}

Rational rational_binomial(const Rational& q, unsigned n) { return divide(falling_factorial(q, n), factorial(n)); }

DerivativeJet<Rational> jet_of_family(const FamilySpec& spec) {
    spec.validate();
    std::vector<Rational> v;
    v.reserve(spec.order + 1);
    for (unsigned n = 0; n <= spec.order; ++n) {
        switch (spec.kind) {
        case FamilyKind::exponential:
            v.push_back(pow(spec.a, n));
            break;
        case FamilyKind::geometric:
            v.emplace_back(factorial(n));
            break;
        case FamilyKind::binomial:
            v.push_back(falling_factorial(spec.a, n));
            break;
        }
    }
    return DerivativeJet<Rational>(std::move(v));
}

std::vector<Rational> image_of_family(const FamilySpec& spec) {
    spec.validate();
    std::vector<Rational> out;
    out.reserve(spec.order);
    const Rational half(Integer(1), Integer(2));
    for (unsigned n = 1; n <= spec.order; ++n) {
        const Rational n_fact(factorial(n));
        switch (spec.kind) {
        case FamilyKind::exponential:
            out.push_back(pow(spec.a, n - 1) * Rational(factorial(n - 1)));
            break;
        case FamilyKind::geometric: {
            const Rational sign(n % 2 == 1 ? 1 : -1);
            out.push_back(sign * pow(Rational(2), n) * rational_binomial(half, n) * n_fact);
            break;
        }
        case FamilyKind::binomial: {
            const Rational one_minus_a = Rational(1) - spec.a;
            out.push_back(rational_binomial(Rational(1) / one_minus_a, n) * pow(one_minus_a, n) * n_fact);
            break;
        }
        }
    }
    return out;
}

ClosedFormFlow corollary1_flow(const FamilySpec& spec) {
    std::string label;
    switch (spec.kind) {
    case FamilyKind::exponential:
        label = spec.a.is_zero() ? "t" : "(1/a)*log(1/(1-a*t)), a=" + spec.a.str();
        break;
    case FamilyKind::geometric:
        label = "1-sqrt(1-2*t)";
        break;
    case FamilyKind::binomial:
        label = "(1+(1-a)*t)^(1/(1-a))-1, a=" + spec.a.str();
        break;
    }
    return ClosedFormFlow{FlowSeries<Rational>{Rational(0), image_of_family(spec)}, std::move(label)};
}

double closed_form_value(const FamilySpec& spec, double t) {
    spec.validate();
    const double a = spec.a.to_double();
    switch (spec.kind) {
    case FamilyKind::exponential:
        if (spec.a.is_zero())
            return t;
        return -std::log1p(-a * t) / a;
    case FamilyKind::geometric:
        return 1.0 - std::sqrt(1.0 - 2.0 * t);
    case FamilyKind::binomial:
        return std::pow(1.0 + (1.0 - a) * t, 1.0 / (1.0 - a)) - 1.0;
    }
    return 0.0;
}

} // namespace hurwitz
