// hurwitz: command-line front end for Bell polynomials, autonomous flows, closed-form
// oracles and majorant certification.
//
// Exit codes: 0 success/certified, 2 usage or parse error, 3 majorant hypothesis
// violated, 4 internal invariant breach.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hurwitz/autonomous.hpp"
#include "hurwitz/bell.hpp"
#include "hurwitz/closed_forms.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/gaussian.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/majorant.hpp"
#include "hurwitz/partition.hpp"

namespace {

using namespace hurwitz;
using io::json;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_hypothesis = 3;
constexpr int exit_internal = 4;

// Thrown for invalid argument combinations detected after CLI11 parsing.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string format = "json";
    unsigned n = 0;
    std::optional<unsigned> parts;
    unsigned k = 0;
    std::string b;
    std::string a;
    std::string jet_path;
    unsigned order = 0;
    std::optional<std::string> base;
    std::optional<std::string> eval;
    std::string family;
    bool compare = false;
    std::string majorant;
    std::optional<std::string> eval_t;
};

unsigned max_order() {
    const char* env = std::getenv("HURWITZ_MAX_ORDER");
    if (!env || !*env)
        return 64;
    try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(env, &used);
        if (used == std::string(env).size() && v > 0)
            return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("HURWITZ_MAX_ORDER must be a positive integer, got \"") + env + "\"");
}

void check_order(const char* what, unsigned value) {
    if (value < 1)
        throw UsageError(std::string(what) + " must be >= 1");
    const unsigned cap = max_order();
    if (value > cap)
        throw UsageError(std::string(what) + " " + std::to_string(value) + " exceeds HURWITZ_MAX_ORDER=" + std::to_string(cap));
}

json parse_json_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error&) {
        throw ParseError(std::string(what) + " is not valid JSON: " + text);
    }
}

bool is_gaussian_list(const json& list) {
    for (const auto& item : list)
        if (item.is_array())
            return true;
    return false;
}

std::vector<Rational> parse_t_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(Rational::parse(item));
    if (out.empty())
        throw ParseError("--eval needs at least one time value");
    return out;
}

json envelope(const std::string& command, json inputs, json result) {
    return json{{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}, {"exact", true}};
}

std::string float_text(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string float_text(const Rational& x) { return float_text(x.to_double()); }
std::string float_text(const GaussianRational& z) { return float_text(z.re()) + "," + float_text(z.im()); }

template <typename R>
constexpr bool is_gaussian = std::is_same_v<R, GaussianRational>;

template <typename R>
std::string value_header(const std::string& name) {
    return is_gaussian<R> ? name + "_re," + name + "_im" : name;
}

void print_csv_banner(std::ostream& out) { out << "# inexact: float approximations of exact results\n"; }

// partitions -------------------------------------------------------------------------

int cmd_partitions(const Options& opt, std::ostream& out) {
    if (opt.n == 0)
        throw UsageError("--n must be >= 1");
    check_order("--n", opt.n);
    const auto list = enumerate_partitions(opt.n, opt.parts);
    if (opt.format == "csv") {
        print_csv_banner(out);
        for (unsigned i = 1; i <= opt.n; ++i)
            out << (i > 1 ? "," : "") << "j" << i;
        out << "\n";
        for (const auto& p : list) {
            for (unsigned i = 0; i < p.n(); ++i)
                out << (i ? "," : "") << p.multiplicities[i];
            out << "\n";
        }
        return exit_ok;
    }
    json parts = json::array();
    for (const auto& p : list)
        parts.push_back(p.multiplicities);
    json inputs{{"n", opt.n}};
    inputs["parts"] = opt.parts ? json(*opt.parts) : json(nullptr);
    out << envelope("partitions", inputs, json{{"count", list.size()}, {"partitions", parts}}).dump(2) << "\n";
    return exit_ok;
}

// bell / bell-complete ---------------------------------------------------------------

template <typename R>
std::vector<R> ring_values(const json& list) {
    std::vector<R> out;
    for (const auto& item : list) {
        if constexpr (is_gaussian<R>)
            out.push_back(io::gaussian_from_json(item));
        else
            out.push_back(io::rational_from_json(item));
    }
    return out;
}

template <typename R>
int emit_scalar(const Options& opt, const std::string& command, json inputs, const R& value, std::ostream& out) {
    if (opt.format == "csv") {
        print_csv_banner(out);
        out << value_header<R>("value") << "\n" << float_text(value) << "\n";
        return exit_ok;
    }
    out << envelope(command, std::move(inputs), json{{"value", io::to_json(value)}}).dump(2) << "\n";
    return exit_ok;
}

int cmd_bell(const Options& opt, std::ostream& out) {
    check_order("--n", opt.n);
    const json b = parse_json_text(opt.b, "--b");
    if (!b.is_array() || b.empty())
        throw ParseError("--b must be a nonempty JSON list");
    const auto run = [&](auto tag) {
        using R = decltype(tag);
        const auto values = ring_values<R>(b);
        const R result = partial_bell(opt.n, opt.k, values);
        json inputs{{"n", opt.n}, {"k", opt.k}, {"b", io::to_json(values)}};
        return emit_scalar(opt, "bell", inputs, result, out);
    };
    return is_gaussian_list(b) ? run(GaussianRational{}) : run(Rational{});
}

int cmd_bell_complete(const Options& opt, std::ostream& out) {
    check_order("--n", opt.n);
    const json b = parse_json_text(opt.b, "--b");
    const json a = parse_json_text(opt.a, "--a");
    if (!b.is_array() || b.empty() || !a.is_array() || a.empty())
        throw ParseError("--b and --a must be nonempty JSON lists");
    const auto run = [&](auto tag) {
        using R = decltype(tag);
        const auto bv = ring_values<R>(b);
        const auto av = ring_values<R>(a);
        const R result = complete_bell(opt.n, bv, av);
        json inputs{{"n", opt.n}, {"b", io::to_json(bv)}, {"a", io::to_json(av)}};
        return emit_scalar(opt, "bell-complete", inputs, result, out);
    };
    return is_gaussian_list(b) || is_gaussian_list(a) ? run(GaussianRational{}) : run(Rational{});
}

// flow -------------------------------------------------------------------------------

template <typename R>
R parse_base(const std::optional<std::string>& text) {
    if (!text)
        return R(0);
    if constexpr (is_gaussian<R>) {
        if (!text->empty() && text->front() == '[')
            return io::gaussian_from_json(parse_json_text(*text, "--base"));
        return GaussianRational(Rational::parse(*text));
    } else {
        return Rational::parse(*text);
    }
}

template <typename R>
int run_flow(const Options& opt, const DerivativeJet<R>& full_jet, std::ostream& out) {
    if (opt.order > full_jet.size())
        throw UsageError("--order " + std::to_string(opt.order) + " exceeds the jet length "
                         + std::to_string(full_jet.size()));
    const auto jet = full_jet.prefix(opt.order);
    const R base = parse_base<R>(opt.base);
    const auto flow = flow_series(base, jet);
    std::optional<TrajectorySample<R>> sample;
    if (opt.eval)
        sample = trajectory(flow, parse_t_list(*opt.eval));

    if (opt.format == "csv") {
        print_csv_banner(out);
        out << "n," << value_header<R>("A") << "\n";
        for (std::size_t n = 0; n < flow.order(); ++n)
            out << n + 1 << "," << float_text(flow.a_coeffs[n]) << "\n";
        if (sample) {
            out << "t," << value_header<R>("phi") << "\n";
            for (std::size_t i = 0; i < sample->points.size(); ++i)
                out << float_text(sample->t_values[i]) << "," << float_text(sample->points[i]) << "\n";
        }
        return exit_ok;
    }

    json inputs{{"jet", io::jet_to_json(jet)}, {"order", opt.order}, {"base", io::to_json(base)}};
    json result{{"order", flow.order()}, {"base", io::to_json(base)}, {"a_coeffs", io::to_json(flow.a_coeffs)}};
    if (sample) {
        inputs["eval"] = io::to_json(sample->t_values);
        result["trajectory"] = json{{"t", io::to_json(sample->t_values)}, {"points", io::to_json(sample->points)}};
    }
    out << envelope("flow", inputs, result).dump(2) << "\n";
    return exit_ok;
}

int cmd_flow(const Options& opt, std::ostream& out) {
    check_order("--order", opt.order);
    const auto jet = io::jet_from_json(io::read_json_file(opt.jet_path));
    return std::visit([&](const auto& j) { return run_flow(opt, j, out); }, jet);
}

// oracle -----------------------------------------------------------------------------

int cmd_oracle(const Options& opt, std::ostream& out) {
    check_order("--order", opt.order);
    const FamilySpec spec = parse_family(opt.family, opt.order);
    const auto closed = corollary1_flow(spec);
    std::optional<std::vector<Rational>> recursion;
    if (opt.compare)
        recursion = autonomous_operator(jet_of_family(spec).prefix(spec.order));
    const bool match = !recursion || *recursion == closed.flow.a_coeffs;

    if (opt.format == "csv") {
        print_csv_banner(out);
        out << "n,closed_form" << (recursion ? ",recursion" : "") << "\n";
        for (std::size_t n = 0; n < closed.flow.order(); ++n) {
            out << n + 1 << "," << float_text(closed.flow.a_coeffs[n]);
            if (recursion)
                out << "," << float_text((*recursion)[n]);
            out << "\n";
        }
    } else {
        json inputs{{"family", spec.name()}, {"order", opt.order}, {"compare_recursion", opt.compare}};
        json result{{"closed_form", io::to_json(closed.flow.a_coeffs)}, {"label", closed.label}};
        if (recursion) {
            result["recursion"] = io::to_json(*recursion);
            result["match"] = match;
        }
        out << envelope("oracle", inputs, result).dump(2) << "\n";
    }
    return match ? exit_ok : exit_internal;
}

// bound ------------------------------------------------------------------------------

MajorantSpec majorant_from_option(const std::string& text) {
    const std::string prefix = "explicit:";
    if (text.rfind(prefix, 0) == 0) {
        const json doc = io::read_json_file(text.substr(prefix.size()));
        const json& values = doc.is_object() && doc.contains("values") ? doc.at("values") : doc;
        return MajorantSpec::explicit_sequence(io::rationals_from_json(values));
    }
    return parse_majorant(text);
}

template <typename R>
int run_bound(const Options& opt, const DerivativeJet<R>& full_jet, std::ostream& out) {
    if (opt.order > full_jet.size())
        throw UsageError("--order " + std::to_string(opt.order) + " exceeds the jet length "
                         + std::to_string(full_jet.size()));
    const auto jet = full_jet.prefix(opt.order);
    const MajorantSpec spec = majorant_from_option(opt.majorant);
    std::optional<Rational> eval_t;
    if (opt.eval_t)
        eval_t = Rational::parse(*opt.eval_t);

    json inputs{{"jet", io::jet_to_json(jet)}, {"majorant", spec.name()}, {"order", opt.order}};
    if (eval_t)
        inputs["eval_t"] = io::to_json(*eval_t);

    CertificationReport report;
    try {
        report = certify(jet, spec);
    } catch (const HypothesisViolation& e) {
        if (opt.format == "csv") {
            std::cerr << "hurwitz: " << e.what() << "\n";
        } else {
            json violation{{"n", e.index()}, {"norm", e.norm()}, {"bound", e.bound()}};
            out << envelope("bound", inputs, json{{"hypothesis_violation", violation}}).dump(2) << "\n";
        }
        return exit_hypothesis;
    }

    const auto majorant = majorant_values(spec, jet.size() - 1);
    std::vector<Rational> bounds;
    for (const auto& e : report.per_n)
        bounds.push_back(e.bound);
    std::optional<Rational> bound_value;
    if (eval_t)
        bound_value = bound_flow_eval(bounds, *eval_t, spec);

    if (opt.format == "csv") {
        print_csv_banner(out);
        out << "n,actual_norm,bound,holds\n";
        for (const auto& e : report.per_n)
            out << e.n << "," << float_text(e.actual_norm) << "," << float_text(e.bound) << ","
                << (e.holds ? "true" : "false") << "\n";
        if (bound_value)
            out << "t,bound_value\n" << float_text(*eval_t) << "," << float_text(*bound_value) << "\n";
    } else {
        json result = io::report_to_json(report);
        result["majorant"] = io::to_json(majorant);
        if (bound_value)
            result["eval"] = json{{"t", io::to_json(*eval_t)}, {"bound_value", io::to_json(*bound_value)}};
        out << envelope("bound", inputs, result).dump(2) << "\n";
    }
    return report.overall ? exit_ok : exit_internal;
}

int cmd_bound(const Options& opt, std::ostream& out) {
    check_order("--order", opt.order);
    const auto jet = io::jet_from_json(io::read_json_file(opt.jet_path));
    return std::visit([&](const auto& j) { return run_bound(opt, j, out); }, jet);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Bell polynomials, autonomous flows and majorant bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    auto* partitions = app.add_subcommand("partitions", "Enumerate partitions of n as multiplicity vectors");
    partitions->add_option("--n", opt.n, "Integer to partition")->required();
    partitions->add_option("--parts", opt.parts, "Keep only partitions with this many parts");

    auto* bell = app.add_subcommand("bell", "Partial Bell polynomial B_{n,k}(b)");
    bell->add_option("--n", opt.n)->required();
    bell->add_option("--k", opt.k)->required();
    bell->add_option("--b", opt.b, "JSON list b_1..b_n")->required();

    auto* bell_complete = app.add_subcommand("bell-complete", "Complete Bell polynomial Y_n(b; a)");
    bell_complete->add_option("--n", opt.n)->required();
    bell_complete->add_option("--b", opt.b, "JSON list b_1..b_n")->required();
    bell_complete->add_option("--a", opt.a, "JSON list a_1..a_n")->required();

    auto* flow = app.add_subcommand("flow", "Flow coefficients A_1..A_N of y' = f(y) from a derivative jet");
    flow->add_option("--jet", opt.jet_path, "Jet JSON file")->required();
    flow->add_option("--order", opt.order, "Number of flow coefficients N")->required();
    flow->add_option("--base", opt.base, "Initial value x (default 0)");
    flow->add_option("--eval", opt.eval, "Comma-separated times t1,t2,...");

    auto* oracle = app.add_subcommand("oracle", "Closed-form flow coefficients of exp:a, geom or binom:a");
    oracle->add_option("--family", opt.family)->required();
    oracle->add_option("--order", opt.order)->required();
    oracle->add_flag("--compare-recursion", opt.compare, "Also run the recursion and compare");

    auto* bound = app.add_subcommand("bound", "Certify majorant bounds on the flow coefficients");
    bound->add_option("--jet", opt.jet_path, "Jet JSON file")->required();
    bound->add_option("--majorant", opt.majorant, "exp:a | fact | binom:a | explicit:<file>")->required();
    bound->add_option("--order", opt.order)->required();
    bound->add_option("--eval-t", opt.eval_t, "Evaluate the truncated bound flow at t");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*partitions)
            return cmd_partitions(opt, std::cout);
        if (*bell)
            return cmd_bell(opt, std::cout);
        if (*bell_complete)
            return cmd_bell_complete(opt, std::cout);
        if (*flow)
            return cmd_flow(opt, std::cout);
        if (*oracle)
            return cmd_oracle(opt, std::cout);
        if (*bound)
            return cmd_bound(opt, std::cout);
    } catch (const HypothesisViolation& e) {
        std::cerr << "hurwitz: " << e.what() << "\n";
        return exit_hypothesis;
    } catch (const UsageError& e) {
        std::cerr << "hurwitz: " << e.what() << "\n" << app.help();
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "hurwitz: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "hurwitz: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "hurwitz: internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_internal;
}
