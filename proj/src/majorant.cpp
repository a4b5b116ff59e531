#include "hurwitz/majorant.hpp"

#include <stdexcept>

#include "hurwitz/closed_forms.hpp"

namespace hurwitz {

std::string MajorantSpec::name() const {
    switch (kind) {
    case MajorantKind::power:
        return "exp:" + a.str();
    case MajorantKind::factorial:
        return "fact";
    case MajorantKind::binomial:
        return "binom:" + a.str();
    case MajorantKind::explicit_sequence:
        return "explicit";
    }
    return {};
}

std::optional<std::string> MajorantSpec::t_domain() const {
    switch (kind) {
    case MajorantKind::power:
        return "|a*t| < 1, a > 0 (a=" + a.str() + ")";
    case MajorantKind::factorial:
        return "|2*t| < 1";
    case MajorantKind::binomial:
        return "|t| < 1";
    case MajorantKind::explicit_sequence:
        return std::nullopt;
    }
    return std::nullopt;
}

bool MajorantSpec::t_in_domain(const Rational& t) const {
    const Rational abs_t = abs(t);
    switch (kind) {
    case MajorantKind::power:
        return abs(a * t) < Rational(1);
    case MajorantKind::factorial:
        return Rational(2) * abs_t < Rational(1);
    case MajorantKind::binomial:
        return abs_t < Rational(1);
    case MajorantKind::explicit_sequence:
        return true;
    }
    return false;
}

MajorantSpec parse_majorant(const std::string& text) {
    if (text == "fact")
        return MajorantSpec::factorial();
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("majorant must be exp:a, fact or binom:a, got \"" + text + "\"");
    const std::string head = text.substr(0, colon);
    Rational a = Rational::parse(text.substr(colon + 1));
    if (head == "exp")
        return MajorantSpec::power(std::move(a));
    if (head == "binom")
        return MajorantSpec::binomial(std::move(a));
    throw ParseError("unknown majorant \"" + head + "\"");
}

std::vector<Rational> majorant_values(const MajorantSpec& spec, std::size_t upto) {
    std::vector<Rational> out;
    out.reserve(upto + 1);
    switch (spec.kind) {
    case MajorantKind::power:
        if (spec.a.sign() <= 0)
            throw std::domain_error("power majorant needs a > 0, got " + spec.a.str());
        for (std::size_t n = 0; n <= upto; ++n)
            out.push_back(pow(spec.a, n));
        break;
    case MajorantKind::factorial:
        for (std::size_t n = 0; n <= upto; ++n)
            out.emplace_back(factorial(n));
        break;
    case MajorantKind::binomial:
        if (spec.a == Rational(1))
            throw std::domain_error("binomial majorant requires a != 1");
        for (std::size_t n = 0; n <= upto; ++n) {
            out.push_back(falling_factorial(spec.a, static_cast<unsigned>(n)));
            if (out.back().sign() < 0)
                throw std::domain_error("binomial majorant with a=" + spec.a.str() + " is negative at n="
                                        + std::to_string(n));
        }
        break;
    case MajorantKind::explicit_sequence:
        if (spec.values.size() < upto + 1)
            throw std::domain_error("explicit majorant has " + std::to_string(spec.values.size())
                                    + " entries, need " + std::to_string(upto + 1));
        for (std::size_t n = 0; n <= upto; ++n) {
            if (spec.values[n].sign() < 0)
                throw std::domain_error("explicit majorant entry " + std::to_string(n) + " is negative");
            out.push_back(spec.values[n]);
        }
        break;
    }
    return out;
}

DominationResult check_domination(std::span<const Rational> norms, std::span<const Rational> majorant) {
    if (norms.size() != majorant.size())
        throw std::invalid_argument("domination check needs equal lengths, got " + std::to_string(norms.size())
                                    + " and " + std::to_string(majorant.size()));
    for (std::size_t n = 0; n < norms.size(); ++n)
        if (norms[n] > majorant[n])
            return DominationResult{false, n};
    return {};
}

std::vector<Rational> bound_series(std::span<const Rational> majorant) {
    if (majorant.empty())
        throw std::invalid_argument("majorant sequence must be nonempty");
    for (std::size_t n = 0; n < majorant.size(); ++n)
        if (majorant[n].sign() < 0)
            throw std::domain_error("majorant entry " + std::to_string(n) + " is negative");
    return autonomous_operator(DerivativeJet<Rational>({majorant.begin(), majorant.end()}));
}

Rational bound_flow_eval(std::span<const Rational> bounds, const Rational& t) {
    if (t.sign() < 0)
        throw std::domain_error("bound evaluation needs t >= 0, got " + t.str());
    return flow_eval(FlowSeries<Rational>{Rational(0), {bounds.begin(), bounds.end()}}, t);
}

Rational bound_flow_eval(std::span<const Rational> bounds, const Rational& t, const MajorantSpec& spec) {
    if (!spec.t_in_domain(t))
        throw std::domain_error("t=" + t.str() + " lies outside the validity interval " + spec.t_domain().value_or(""));
    return bound_flow_eval(bounds, t);
}

} // namespace hurwitz
