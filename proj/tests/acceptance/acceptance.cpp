// Acceptance checks: prints one PASS/FAIL line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/autonomous.hpp"
#include "hurwitz/bell.hpp"
#include "hurwitz/closed_forms.hpp"
#include "hurwitz/gaussian.hpp"
#include "hurwitz/majorant.hpp"
#include "hurwitz/series.hpp"
#include "support/random.hpp"

using namespace hurwitz;
using hurwitz::testing::Sampler;
using Series = HurwitzSeries<Rational>;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

struct Outcome {
    bool pass = true;
    std::size_t cases = 0;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        ++cases;
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::vector<FamilySpec> closed_form_families(unsigned order) {
    std::vector<FamilySpec> specs;
    for (const Rational a : {q(-2), q(-1, 2), q(1, 2), q(2), q(3)})
        specs.push_back(FamilySpec::exponential(a, order));
    specs.push_back(FamilySpec::geometric(order));
    for (const Rational a : {q(-1), q(1, 2), q(2), q(3)})
        specs.push_back(FamilySpec::binomial(a, order));
    return specs;
}

// 1. The recursion reproduces the closed-form images for n <= 20.
Outcome images_match_recursion() {
    Outcome out;
    for (const auto& spec : closed_form_families(20)) {
        const auto jet = jet_of_family(spec).prefix(spec.order);
        const auto actual = autonomous_operator(jet);
        const auto expected = image_of_family(spec);
        for (std::size_t n = 0; n < expected.size(); ++n)
            out.expect(actual[n] == expected[n],
                       spec.name() + " A_" + std::to_string(n + 1) + " = " + actual[n].str() + ", expected "
                           + expected[n].str());
    }
    return out;
}

// 2. Low-order complete Bell polynomials and the geometric sequence prefix.
Outcome worked_values() {
    Outcome out;
    const auto y1 = [](const std::vector<Rational>& b, const std::vector<Rational>& a) { return a[0] * b[0]; };
    const auto y2 = [](const std::vector<Rational>& b, const std::vector<Rational>& a) {
        return a[0] * b[1] + a[1] * b[0] * b[0];
    };
    const auto y3 = [](const std::vector<Rational>& b, const std::vector<Rational>& a) {
        return a[0] * b[2] + a[1] * (q(3) * b[0] * b[1]) + a[2] * b[0] * b[0] * b[0];
    };

    out.expect(complete_bell(1, std::vector<Rational>{q(2)}, std::vector<Rational>{q(3)}) == q(6), "Y1(2;3) != 6");
    out.expect(complete_bell(2, std::vector<Rational>{q(1), q(2)}, std::vector<Rational>{q(1), q(1)}) == q(3),
               "Y2(1,2;1,1) != 3");
    out.expect(complete_bell(3, std::vector<Rational>{q(1), q(1), q(1)}, std::vector<Rational>{q(1), q(2), q(6)}) == q(13),
               "Y3(1,1,1;1,2,6) != 13");

    Sampler s(2001);
    for (int trial = 0; trial < 100; ++trial) {
        const auto b = s.values<Rational>(3);
        const auto a = s.values<Rational>(3);
        out.expect(complete_bell(1, b, a) == y1(b, a), "Y1 formula mismatch");
        out.expect(complete_bell(2, b, a) == y2(b, a), "Y2 formula mismatch");
        out.expect(complete_bell(3, b, a) == y3(b, a), "Y3 formula mismatch");
    }

    const std::vector<Rational> prefix{q(1), q(1), q(3), q(15), q(105)};
    const auto recursion = autonomous_operator(jet_of_family(FamilySpec::geometric(5)).prefix(5));
    for (unsigned n = 1; n <= 5; ++n) {
        const Rational formula = pow(q(-1), n + 1) * pow(q(2), n) * rational_binomial(q(1, 2), n) * Rational(factorial(n));
        out.expect(formula == prefix[n - 1], "geometric formula at n=" + std::to_string(n));
        out.expect(recursion[n - 1] == prefix[n - 1], "geometric recursion at n=" + std::to_string(n));
    }
    return out;
}

Series polynomial_series(const std::vector<Rational>& c, std::size_t order) {
    std::vector<Rational> coeffs(order + 1, q(0));
    for (std::size_t j = 0; j < c.size() && j <= order; ++j)
        coeffs[j] = c[j] * Rational(factorial(j));
    return Series(coeffs);
}

// 3. Phi(t) = x + sum A_n t^n/n! solves d/dt Phi = f(Phi) through order 7.
Outcome ode_residual() {
    Outcome out;
    Sampler s(3001);
    const std::size_t depth = 8;
    for (int trial = 0; trial < 100; ++trial) {
        const auto degree = static_cast<std::size_t>(s.integer(0, 4));
        std::vector<Rational> c;
        for (std::size_t j = 0; j <= degree; ++j)
            c.push_back(s.rational(3, 5));
        // Large enough that truncation in x never touches the A_n.
        const auto f = polynomial_series(c, depth * degree + depth + 2);
        const auto flow = flow_symbolic(f, depth);
        const std::size_t m = flow.base.order();

        // Phi as a series in t over series in x.
        std::vector<Series> phi_coeffs{flow.base};
        for (const auto& a : flow.a_coeffs)
            phi_coeffs.push_back(a);
        const HurwitzSeries<Series> phi(phi_coeffs);
        const auto derivative = delta(phi);

        // f(Phi) through the Taylor expansion of f around x.
        std::vector<Series> outer;
        std::vector<Series> inner{Series::zero(m, q(0))};
        auto d = f;
        for (std::size_t k = 0; k < depth; ++k) {
            outer.push_back(d.truncated(m));
            if (k + 1 < depth)
                d = delta(d);
        }
        for (std::size_t n = 0; n + 1 < depth; ++n)
            inner.push_back(flow.a_coeffs[n]);
        const auto composed = compose_egf(HurwitzSeries<Series>(outer), HurwitzSeries<Series>(inner));

        // f(Phi) by direct polynomial evaluation in the t-series ring.
        auto direct = HurwitzSeries<Series>::zero(depth, Series::zero(m, q(0)));
        auto power = HurwitzSeries<Series>::constant(Series::constant(q(1), m), depth);
        for (std::size_t j = 0; j <= degree; ++j) {
            direct = direct + HurwitzSeries<Series>::constant(Series::constant(c[j], m), depth) * power;
            power = power * phi;
        }

        for (std::size_t n = 0; n < depth; ++n) {
            out.expect(composed[n] == derivative[n], "composition residual at t-order " + std::to_string(n));
            out.expect(direct[n] == derivative[n], "polynomial residual at t-order " + std::to_string(n));
        }
    }
    return out;
}

std::vector<MajorantSpec> corollary_majorants() {
    std::vector<MajorantSpec> specs;
    for (const Rational a : {q(1, 2), q(1), q(2), q(3)})
        specs.push_back(MajorantSpec::power(a));
    specs.push_back(MajorantSpec::factorial());
    for (const Rational a : {q(0), q(2), q(3)})
        specs.push_back(MajorantSpec::binomial(a));
    return specs;
}

// 4. Dominated jets certify; the majorant itself is tight.
Outcome majorant_certification() {
    Outcome out;
    Sampler s(4001);
    const std::size_t order = 12;
    for (const auto& spec : corollary_majorants()) {
        const auto majorant = majorant_values(spec, order - 1);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Rational> r;
            std::vector<GaussianRational> g;
            for (const auto& m : majorant) {
                r.push_back(m * s.unit());
                g.push_back(s.gaussian_within(m));
            }
            out.expect(certify(DerivativeJet<Rational>(r), spec).overall, spec.name() + " rational jet not certified");
            out.expect(certify(DerivativeJet<GaussianRational>(g), spec).overall,
                       spec.name() + " gaussian jet not certified");
        }
        const auto tight = certify(DerivativeJet<Rational>(majorant), spec);
        out.expect(tight.overall, spec.name() + " tight jet not certified");
        for (const auto& e : tight.per_n)
            out.expect(e.actual_norm == e.bound, spec.name() + " tight jet strict at n=" + std::to_string(e.n));
    }
    return out;
}

template <typename R>
void series_laws(Outcome& out, Sampler& s, int cases) {
    for (int trial = 0; trial < cases; ++trial) {
        const auto order = static_cast<std::size_t>(s.integer(0, 6));
        const auto f = s.series<R>(order), g = s.series<R>(order), h = s.series<R>(order);
        const auto zero = HurwitzSeries<R>::zero(order, f[0]);
        const auto one = one_like(f);
        out.expect(f + g == g + f, "series addition not commutative");
        out.expect((f + g) + h == f + (g + h), "series addition not associative");
        out.expect(f + zero == f && f + (-f) == zero, "series additive identity/inverse");
        out.expect(f * g == g * f, "series product not commutative");
        out.expect((f * g) * h == f * (g * h), "series product not associative");
        out.expect(f * (g + h) == f * g + f * h, "series product not distributive");
        out.expect(f * one == f, "series multiplicative identity");
    }
}

template <typename R>
void leibniz(Outcome& out, Sampler& s, int cases) {
    for (int trial = 0; trial < cases; ++trial) {
        const auto order = static_cast<std::size_t>(s.integer(1, 7));
        const auto f = s.series<R>(order), g = s.series<R>(order);
        const auto lower = order - 1;
        out.expect(delta(f * g) == delta(f) * g.truncated(lower) + f.truncated(lower) * delta(g), "Leibniz rule");
    }
}

template <typename R>
void norm_axioms(Outcome& out, Sampler& s, int cases, const std::string& ring) {
    for (int trial = 0; trial < cases; ++trial) {
        R x = s.value<R>();
        const R y = s.value<R>();
        if (trial % 10 == 0)
            x = zero_like(x);
        out.expect((norm(x) == q(0)) == (x == zero_like(x)) && norm(x) >= q(0), ring + " definiteness");
        out.expect(norm(x + y) <= norm(x) + norm(y), ring + " triangle inequality");
        out.expect(norm(-x) == norm(x), ring + " symmetry");
        out.expect(norm(x * y) <= norm(x) * norm(y), ring + " submultiplicativity");
    }
}

// 5. Ring laws, Leibniz rule and norm axioms on random samples.
Outcome ring_and_norm_laws() {
    Outcome out;
    Sampler s(5001);
    series_laws<Rational>(out, s, 500);
    series_laws<GaussianRational>(out, s, 500);
    leibniz<Rational>(out, s, 500);
    leibniz<GaussianRational>(out, s, 500);
    norm_axioms<Rational>(out, s, 500, "rational");
    norm_axioms<GaussianRational>(out, s, 500, "gaussian");
    return out;
}

// 6. Exact truncated flows at t = 1/10 against floating-point closed forms.
Outcome closed_form_floats() {
    Outcome out;
    const Rational t = q(1, 10);
    double worst = 0.0;
    for (const auto& spec : closed_form_families(20)) {
        const double exact = flow_eval(corollary1_flow(spec).flow, t).to_double();
        const double closed = closed_form_value(spec, t.to_double());
        const double err = std::abs(exact - closed);
        worst = std::max(worst, err);
        std::ostringstream msg;
        msg << spec.name() << " differs by " << err;
        out.expect(err <= 1e-12, msg.str());
    }
    if (out.pass) {
        std::ostringstream msg;
        msg << "max error " << worst;
        out.detail = msg.str();
    }
    return out;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 closed-form images equal the recursion for n <= 20", images_match_recursion},
        {"AC2 worked Bell values and geometric prefix", worked_values},
        {"AC3 ODE residual of the symbolic flow", ode_residual},
        {"AC4 majorant certification and tightness", majorant_certification},
        {"AC5 ring laws, Leibniz rule, norm axioms", ring_and_norm_laws},
        {"AC6 closed-form float agreement at t = 1/10", closed_form_floats},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome outcome = run();
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::printf("[%s] %s (%zu checks, %.2fs)%s%s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.cases,
                    elapsed.count(), outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
        failures += outcome.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
