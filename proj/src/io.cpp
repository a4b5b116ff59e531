#include "hurwitz/io.hpp"

#include <fstream>

#include "hurwitz/error.hpp"

namespace hurwitz::io {

namespace {

template <typename R>
R value_from_json(const json& j);

template <>
Rational value_from_json<Rational>(const json& j) {
    return rational_from_json(j);
}

template <>
GaussianRational value_from_json<GaussianRational>(const json& j) {
    return gaussian_from_json(j);
}

template <typename R>
std::vector<R> values_from_json(const json& j, const char* field) {
    if (!j.is_array())
        throw ParseError(std::string("\"") + field + "\" must be an array");
    std::vector<R> out;
    out.reserve(j.size());
    for (const auto& item : j)
        out.push_back(value_from_json<R>(item));
    return out;
}

const json& require_field(const json& j, const char* field) {
    if (!j.is_object() || !j.contains(field))
        throw ParseError(std::string("missing field \"") + field + "\"");
    return j.at(field);
}

} // namespace

RingKind parse_ring(const std::string& name) {
    if (name == "rational")
        return RingKind::rational;
    if (name == "gaussian")
        return RingKind::gaussian;
    throw ParseError("unknown ring \"" + name + "\"; expected rational or gaussian");
}

std::string ring_name(RingKind ring) { return ring == RingKind::rational ? "rational" : "gaussian"; }

Rational rational_from_json(const json& j) {
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    if (j.is_number_integer())
        return Rational::parse(j.dump());
    throw ParseError("expected a rational string or integer, got " + j.dump());
}

GaussianRational gaussian_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2)
            throw ParseError("gaussian rational must be [re, im], got " + j.dump());
        return {rational_from_json(j[0]), rational_from_json(j[1])};
    }
    return GaussianRational(rational_from_json(j));
}

std::vector<Rational> rationals_from_json(const json& j) { return values_from_json<Rational>(j, "values"); }

json to_json(const Rational& x) { return x.str(); }

json to_json(const GaussianRational& z) { return json::array({z.re().str(), z.im().str()}); }

AnyJet jet_from_json(const json& j) {
    const auto ring = parse_ring(require_field(j, "ring").get<std::string>());
    const json& values = require_field(j, "values");
    if (!values.is_array() || values.empty())
        throw ParseError("jet \"values\" must be a nonempty array");
    if (ring == RingKind::rational)
        return DerivativeJet<Rational>(values_from_json<Rational>(values, "values"));
    return DerivativeJet<GaussianRational>(values_from_json<GaussianRational>(values, "values"));
}

json jet_to_json(const AnyJet& jet) {
    return std::visit(
        [](const auto& x) {
            using R = typename std::decay_t<decltype(x.values)>::value_type;
            const RingKind ring = std::is_same_v<R, Rational> ? RingKind::rational : RingKind::gaussian;
            return json{{"ring", ring_name(ring)}, {"values", to_json(x.values)}};
        },
        jet);
}

AnySeries series_from_json(const json& j) {
    const auto ring = parse_ring(require_field(j, "ring").get<std::string>());
    const json& order = require_field(j, "order");
    if (!order.is_number_unsigned())
        throw ParseError("series \"order\" must be a nonnegative integer");
    const json& coeffs = require_field(j, "coeffs");
    if (!coeffs.is_array() || coeffs.size() != order.get<std::size_t>() + 1)
        throw ParseError("series \"coeffs\" must hold order + 1 entries");
    if (ring == RingKind::rational)
        return HurwitzSeries<Rational>(values_from_json<Rational>(coeffs, "coeffs"));
    return HurwitzSeries<GaussianRational>(values_from_json<GaussianRational>(coeffs, "coeffs"));
}

json series_to_json(const AnySeries& series) {
    return std::visit(
        [](const auto& s) {
            using R = typename std::decay_t<decltype(s)>::value_type;
            const RingKind ring = std::is_same_v<R, Rational> ? RingKind::rational : RingKind::gaussian;
            return json{{"ring", ring_name(ring)}, {"order", s.order()}, {"coeffs", to_json(s.coeffs())}};
        },
        series);
}

json report_to_json(const CertificationReport& report) {
    json per_n = json::array();
    for (const auto& e : report.per_n)
        per_n.push_back(
            {{"n", e.n}, {"actual_norm", to_json(e.actual_norm)}, {"bound", to_json(e.bound)}, {"holds", e.holds}});
    json out{{"per_n", per_n}, {"overall", report.overall}};
    out["t_domain"] = report.t_domain ? json(*report.t_domain) : json(nullptr);
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open \"" + path + "\"");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in \"" + path + "\": " + e.what());
    }
}

} // namespace hurwitz::io
