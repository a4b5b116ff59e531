#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hurwitz/error.hpp"
#include "hurwitz/gaussian.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/ring.hpp"
#include "support/random.hpp"

using namespace hurwitz;
using hurwitz::testing::Sampler;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

static_assert(NormedRing<Rational> && IntegerDivisible<Rational>);
static_assert(NormedRing<GaussianRational> && IntegerDivisible<GaussianRational>);

template <typename R>
void check_ring_laws(Sampler& s, int cases) {
    for (int i = 0; i < cases; ++i) {
        const R x = s.value<R>(), y = s.value<R>(), z = s.value<R>();
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + zero_like(x) == x);
        CHECK(x * one_like(x) == x);
        CHECK(x + (-x) == zero_like(x));
    }
}

template <typename R>
void check_norm_axioms(Sampler& s, int cases) {
    for (int i = 0; i < cases; ++i) {
        const R x = s.value<R>(), y = s.value<R>();
        CHECK((norm(x) == Rational(0)) == (x == zero_like(x)));
        CHECK(norm(x + y) <= norm(x) + norm(y));
        CHECK(norm(-x) == norm(x));
        CHECK(norm(x * y) <= norm(x) * norm(y));
    }
    CHECK(norm(zero_like(s.value<R>())) == Rational(0));
}

} // namespace

TEST_CASE("rational canonical form") {
    CHECK(q(2, 4) == q(1, 2));
    CHECK(q(3, -6).denominator() == 2);
    CHECK(q(3, -6).numerator() == -1);
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(pow(q(2, 3), 0) == q(1));
    CHECK(pow(q(-2, 3), 3) == q(-8, 27));
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
    CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
}

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("-5/128") == q(-5, 128));
    CHECK(Rational::parse("+4/2") == q(2));
    CHECK(Rational::parse("17").str() == "17");
    CHECK(q(-6, 4).str() == "-3/2");
    for (const char* bad : {"", "1/", "/2", "1/0", "1.5", "a", "--1", " 1", "1/-2"})
        CHECK_THROWS_AS(Rational::parse(bad), ParseError);
}

TEST_CASE("rational norm") {
    CHECK(norm(q(0)) == q(0));
    CHECK(norm(q(-3, 4)) == q(3, 4));
    const Rational x = q(2, 3), y = q(-9, 4);
    CHECK(norm(x * y) == q(3, 2));
    CHECK(norm(x * y) == norm(x) * norm(y));
}

TEST_CASE("gaussian arithmetic and 1-norm") {
    const GaussianRational one_plus_i(q(1), q(1));
    const GaussianRational one_minus_i(q(1), q(-1));
    CHECK(one_plus_i * one_minus_i == GaussianRational(2));
    CHECK(one_plus_i * one_plus_i == GaussianRational(q(0), q(2)));
    CHECK(norm(GaussianRational(q(3), q(4))) == q(7));
    CHECK(norm(one_plus_i * one_plus_i) == q(2));
    CHECK(norm(one_plus_i) * norm(one_plus_i) == q(4));
    CHECK(norm(GaussianRational()) == q(0));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK(pow(GaussianRational::i(), 4) == GaussianRational(1));
    CHECK(GaussianRational(q(1, 2), q(-1)).str() == "1/2-i");
}

TEST_CASE("ring laws hold exactly on random samples") {
    Sampler s(11);
    check_ring_laws<Rational>(s, 200);
    check_ring_laws<GaussianRational>(s, 200);
}

TEST_CASE("norm axioms hold exactly on random samples") {
    Sampler s(12);
    check_norm_axioms<Rational>(s, 300);
    check_norm_axioms<GaussianRational>(s, 300);
    for (int i = 0; i < 200; ++i) {
        const Rational x = s.rational(), y = s.rational();
        CHECK(norm(x * y) == norm(x) * norm(y));
    }
}

TEST_CASE("integer scaling and exact division") {
    CHECK(scale(Integer(3), q(1, 6)) == q(1, 2));
    CHECK(divide(q(3), Integer(6)) == q(1, 2));
    CHECK(divide(GaussianRational(q(2), q(4)), Integer(4)) == GaussianRational(q(1, 2), q(1)));
    CHECK_THROWS_AS(divide(q(1), Integer(0)), std::domain_error);
}
