// Python bindings. Rationals cross the boundary as fractions.Fraction (int, str and
// Fraction are accepted on input); Gaussian rationals as (re, im) pairs of Fractions.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hurwitz/autonomous.hpp"
#include "hurwitz/bell.hpp"
#include "hurwitz/closed_forms.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/gaussian.hpp"
#include "hurwitz/majorant.hpp"
#include "hurwitz/partition.hpp"

namespace py = pybind11;
using namespace hurwitz;

namespace {

py::object fraction_type() {
    static py::object type = py::module_::import("fractions").attr("Fraction");
    return type;
}

Rational to_rational(const py::handle& obj) {
    if (py::isinstance<py::str>(obj))
        return Rational::parse(obj.cast<std::string>());
    if (py::isinstance<py::int_>(obj))
        return Rational::parse(py::str(obj).cast<std::string>());
    if (py::isinstance(obj, fraction_type()))
        return Rational::parse(py::str(obj).cast<std::string>());
    throw ParseError("expected int, str or Fraction, got " + py::repr(obj).cast<std::string>());
}

bool is_pair(const py::handle& obj) {
    return (py::isinstance<py::tuple>(obj) || py::isinstance<py::list>(obj)) && py::len(obj) == 2;
}

GaussianRational to_gaussian(const py::handle& obj) {
    if (is_pair(obj)) {
        const auto seq = py::reinterpret_borrow<py::sequence>(obj);
        return {to_rational(seq[0]), to_rational(seq[1])};
    }
    return GaussianRational(to_rational(obj));
}

py::object from_rational(const Rational& x) { return fraction_type()(x.str()); }
py::object from_value(const Rational& x) { return from_rational(x); }
py::object from_value(const GaussianRational& z) { return py::make_tuple(from_rational(z.re()), from_rational(z.im())); }

template <typename R>
py::list from_values(const std::vector<R>& values) {
    py::list out;
    for (const auto& v : values)
        out.append(from_value(v));
    return out;
}

using AnyValues = std::variant<std::vector<Rational>, std::vector<GaussianRational>>;

// A sequence is Gaussian as soon as one entry is an (re, im) pair.
AnyValues to_values(const py::sequence& seq) {
    bool gaussian = false;
    for (const auto& item : seq)
        gaussian = gaussian || is_pair(item);
    if (gaussian) {
        std::vector<GaussianRational> out;
        for (const auto& item : seq)
            out.push_back(to_gaussian(item));
        return out;
    }
    std::vector<Rational> out;
    for (const auto& item : seq)
        out.push_back(to_rational(item));
    return out;
}

std::vector<GaussianRational> as_gaussian(const AnyValues& values) {
    if (const auto* g = std::get_if<std::vector<GaussianRational>>(&values))
        return *g;
    std::vector<GaussianRational> out;
    for (const auto& x : std::get<std::vector<Rational>>(values))
        out.emplace_back(x);
    return out;
}

py::object partial_bell_py(unsigned n, unsigned k, const py::sequence& b) {
    return std::visit([&](const auto& values) { return from_value(partial_bell(n, k, values)); }, to_values(b));
}

py::object complete_bell_py(unsigned n, const py::sequence& b, const py::sequence& a) {
    const auto bv = to_values(b);
    const auto av = to_values(a);
    if (bv.index() == av.index())
        return std::visit(
            [&](const auto& bs) {
                using V = std::decay_t<decltype(bs)>;
                return from_value(complete_bell(n, bs, std::get<V>(av)));
            },
            bv);
    return from_value(complete_bell(n, as_gaussian(bv), as_gaussian(av)));
}

py::list autonomous_operator_py(const py::sequence& jet) {
    return std::visit([](const auto& v) { return from_values(autonomous_operator(DerivativeJet(v))); }, to_values(jet));
}

py::dict flow_py(const py::sequence& jet, const py::object& base, const std::vector<py::object>& times) {
    std::vector<Rational> ts;
    for (const auto& t : times)
        ts.push_back(to_rational(t));
    auto values = to_values(jet);
    if (is_pair(base))
        values = as_gaussian(values);
    return std::visit(
        [&](const auto& v) {
            using R = typename std::decay_t<decltype(v)>::value_type;
            const R x = [&] {
                if constexpr (std::is_same_v<R, GaussianRational>)
                    return to_gaussian(base);
                else
                    return to_rational(base);
            }();
            const auto flow = flow_series(x, DerivativeJet<R>(v));
            const auto sample = trajectory(flow, ts);
            py::dict out;
            out["base"] = from_value(flow.base);
            out["a_coeffs"] = from_values(flow.a_coeffs);
            out["points"] = from_values(sample.points);
            return out;
        },
        values);
}

py::dict family_py(const std::string& family, unsigned order, bool compare) {
    const FamilySpec spec = parse_family(family, order);
    const auto closed = corollary1_flow(spec);
    py::dict out;
    out["family"] = spec.name();
    out["label"] = closed.label;
    out["closed_form"] = from_values(closed.flow.a_coeffs);
    if (compare) {
        const auto recursion = autonomous_operator(jet_of_family(spec).prefix(spec.order));
        out["recursion"] = from_values(recursion);
        out["match"] = recursion == closed.flow.a_coeffs;
    }
    return out;
}

MajorantSpec majorant_from_py(const py::object& majorant) {
    if (py::isinstance<py::str>(majorant))
        return parse_majorant(majorant.cast<std::string>());
    std::vector<Rational> values;
    for (const auto& item : py::reinterpret_borrow<py::sequence>(majorant))
        values.push_back(to_rational(item));
    return MajorantSpec::explicit_sequence(std::move(values));
}

py::dict certify_py(const py::sequence& jet, const py::object& majorant) {
    const MajorantSpec spec = majorant_from_py(majorant);
    const auto report = std::visit([&](const auto& v) { return certify(DerivativeJet(v), spec); }, to_values(jet));
    py::list per_n;
    for (const auto& e : report.per_n) {
        py::dict entry;
        entry["n"] = e.n;
        entry["actual_norm"] = from_rational(e.actual_norm);
        entry["bound"] = from_rational(e.bound);
        entry["holds"] = e.holds;
        per_n.append(entry);
    }
    py::dict out;
    out["per_n"] = per_n;
    out["overall"] = report.overall;
    out["t_domain"] = report.t_domain ? py::object(py::str(*report.t_domain)) : py::object(py::none());
    return out;
}

py::object bound_flow_eval_py(const py::sequence& bounds, const py::object& t, const py::object& majorant) {
    std::vector<Rational> b;
    for (const auto& item : bounds)
        b.push_back(to_rational(item));
    if (majorant.is_none())
        return from_rational(bound_flow_eval(b, to_rational(t)));
    return from_rational(bound_flow_eval(b, to_rational(t), majorant_from_py(majorant)));
}

} // namespace

PYBIND11_MODULE(hurwitz_flow, m) {
    m.doc() = "Exact Bell polynomials, autonomous flows and majorant bounds";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<HypothesisViolation>(m, "HypothesisViolation", PyExc_ValueError);

    m.def(
        "partitions",
        [](unsigned n, std::optional<unsigned> parts) {
            std::vector<std::vector<unsigned>> out;
            for (const auto& p : enumerate_partitions(n, parts))
                out.push_back(p.multiplicities);
            return out;
        },
        py::arg("n"), py::arg("parts") = py::none(), "Partitions of n as multiplicity vectors (j_1, ..., j_n).");
    m.def("partial_bell", &partial_bell_py, py::arg("n"), py::arg("k"), py::arg("b"),
          "Partial Bell polynomial B_{n,k}(b_1, ..., b_{n-k+1}).");
    m.def("complete_bell", &complete_bell_py, py::arg("n"), py::arg("b"), py::arg("a"),
          "Complete Bell polynomial Y_n(b; a) = sum_k a_k B_{n,k}(b).");
    m.def("autonomous_operator", &autonomous_operator_py, py::arg("jet"),
          "Flow coefficients A_1..A_m from the jet [f, f', ..., f^(m-1)] at the base point.");
    m.def("flow", &flow_py, py::arg("jet"), py::arg("base") = py::int_(0), py::arg("t") = std::vector<py::object>{},
          "Truncated flow x + sum A_n t^n/n!, optionally evaluated at rational times.");
    m.def("family", &family_py, py::arg("family"), py::arg("order"), py::arg("compare_recursion") = false,
          "Closed-form flow coefficients of exp:a, geom or binom:a.");
    m.def("certify", &certify_py, py::arg("jet"), py::arg("majorant"),
          "Check the flow of a jet against the bound series of a majorant (spec string or explicit list).");
    m.def("bound_flow_eval", &bound_flow_eval_py, py::arg("bounds"), py::arg("t"), py::arg("majorant") = py::none(),
          "Evaluate sum bounds[n-1] t^n/n! exactly.");
}
