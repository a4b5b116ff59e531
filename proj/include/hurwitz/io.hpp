#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hurwitz/gaussian.hpp"
#include "hurwitz/majorant.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"

// Textual and JSON forms:
//   Rational          "p/q" or "p" (JSON integers are also accepted on input)
//   GaussianRational  ["re", "im"]
//   series            {"ring": "rational"|"gaussian", "order": N, "coeffs": [...]}
//   jet               {"ring": "rational"|"gaussian", "values": [...]}
// Exact values are always written as strings, never JSON numbers.

namespace hurwitz::io {

using json = nlohmann::json;

enum class RingKind { rational, gaussian };

RingKind parse_ring(const std::string& name);
std::string ring_name(RingKind ring);

using AnyJet = std::variant<DerivativeJet<Rational>, DerivativeJet<GaussianRational>>;
using AnySeries = std::variant<HurwitzSeries<Rational>, HurwitzSeries<GaussianRational>>;

Rational rational_from_json(const json& j);
/// A two-element array [re, im], or a bare rational (im = 0).
GaussianRational gaussian_from_json(const json& j);
std::vector<Rational> rationals_from_json(const json& j);

json to_json(const Rational& x);
json to_json(const GaussianRational& z);

template <typename R>
json to_json(const std::vector<R>& values) {
    json out = json::array();
    for (const auto& v : values)
        out.push_back(to_json(v));
    return out;
}

AnyJet jet_from_json(const json& j);
json jet_to_json(const AnyJet& jet);

AnySeries series_from_json(const json& j);
json series_to_json(const AnySeries& series);

json report_to_json(const CertificationReport& report);

/// Reads and parses a UTF-8 JSON file. Throws ParseError.
json read_json_file(const std::string& path);

} // namespace hurwitz::io
