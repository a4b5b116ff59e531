#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hurwitz/autonomous.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/io.hpp"
#include "support/random.hpp"

using namespace hurwitz;
using hurwitz::io::json;
using hurwitz::testing::Sampler;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

} // namespace

TEST_CASE("rational text form") {
    CHECK(io::to_json(q(-5, 128)) == json("-5/128"));
    CHECK(io::to_json(q(15)) == json("15"));
    CHECK(io::rational_from_json(json("-6/4")) == q(-3, 2));
    CHECK_THROWS_AS(io::rational_from_json(json("6/-4")), ParseError);
    CHECK(io::rational_from_json(json(7)) == q(7));
    CHECK_THROWS_AS(io::rational_from_json(json(0.5)), ParseError);
    CHECK_THROWS_AS(io::rational_from_json(json("1/0")), ParseError);
    CHECK_THROWS_AS(io::rational_from_json(json("1.5")), ParseError);
    CHECK_THROWS_AS(io::rational_from_json(json("")), ParseError);
    CHECK_THROWS_AS(io::rational_from_json(json::array()), ParseError);
}

TEST_CASE("gaussian text form") {
    const GaussianRational z(q(1, 2), q(-3));
    CHECK(io::to_json(z) == json::array({"1/2", "-3"}));
    CHECK(io::gaussian_from_json(json::array({"1/2", "-3"})) == z);
    CHECK(io::gaussian_from_json(json("4")) == GaussianRational(4));
    CHECK_THROWS_AS(io::gaussian_from_json(json::array({"1"})), ParseError);
    CHECK_THROWS_AS(io::gaussian_from_json(json::array({"1", "x"})), ParseError);
}

TEST_CASE("jet files") {
    const auto jet = io::jet_from_json(json::parse(R"({"ring":"rational","values":["1","1","2","6"]})"));
    REQUIRE(std::holds_alternative<DerivativeJet<Rational>>(jet));
    CHECK(autonomous_operator(std::get<DerivativeJet<Rational>>(jet)) == std::vector<Rational>{q(1), q(1), q(3), q(15)});

    const auto gjet = io::jet_from_json(json::parse(R"({"ring":"gaussian","values":[["1","0"],["0","1"]]})"));
    REQUIRE(std::holds_alternative<DerivativeJet<GaussianRational>>(gjet));
    CHECK(std::get<DerivativeJet<GaussianRational>>(gjet)[1] == GaussianRational::i());

    CHECK_THROWS_AS(io::jet_from_json(json::parse(R"({"ring":"real","values":["1"]})")), ParseError);
    CHECK_THROWS_AS(io::jet_from_json(json::parse(R"({"ring":"rational","values":[]})")), ParseError);
    CHECK_THROWS_AS(io::jet_from_json(json::parse(R"({"ring":"rational"})")), ParseError);
    CHECK_THROWS_AS(io::jet_from_json(json::parse(R"(["1"])")), ParseError);
    CHECK_THROWS_AS(io::read_json_file("/nonexistent/jet.json"), ParseError);
}

TEST_CASE("series files") {
    const auto s = io::series_from_json(json::parse(R"({"ring":"rational","order":2,"coeffs":["1","-1/2","3"]})"));
    REQUIRE(std::holds_alternative<HurwitzSeries<Rational>>(s));
    CHECK(std::get<HurwitzSeries<Rational>>(s)[1] == q(-1, 2));
    CHECK_THROWS_AS(io::series_from_json(json::parse(R"({"ring":"rational","order":3,"coeffs":["1"]})")), ParseError);
}

TEST_CASE("exact values survive a serialization round trip") {
    Sampler s(71);
    for (int trial = 0; trial < 200; ++trial) {
        const auto r = s.values<Rational>(6);
        const auto g = s.values<GaussianRational>(6);
        const json rj = io::jet_to_json(DerivativeJet<Rational>(r));
        const json gj = io::jet_to_json(DerivativeJet<GaussianRational>(g));
        CHECK(std::get<DerivativeJet<Rational>>(io::jet_from_json(json::parse(rj.dump()))).values == r);
        CHECK(std::get<DerivativeJet<GaussianRational>>(io::jet_from_json(json::parse(gj.dump()))).values == g);

        const HurwitzSeries<Rational> series(r);
        const json sj = io::series_to_json(series);
        CHECK(std::get<HurwitzSeries<Rational>>(io::series_from_json(json::parse(sj.dump()))) == series);

        for (const auto& x : r)
            CHECK(io::to_json(x).is_string());
    }
}
