#include <doctest.h>

#include <string>

#include "hitreal/census.hpp"
#include "hitreal/counting.hpp"
#include "hitreal/json_io.hpp"
#include "hitreal/monodromy.hpp"
#include "hitreal/svg.hpp"
#include "helpers.hpp"

using namespace hitreal;
using test_support::raised;

namespace {
const Poly kSextic = parse_poly("(z^2-1)(z^2-4)(z^2-9)");
}

TEST_CASE("serialization is byte-stable") {
    HyperellipticCurve c = build_curve(kSextic);
    QuadDifferential q{SpectralPoint::at(Rational(-3, 2)), SpectralPoint::at(Rational(3, 2)), 1};

    Json once = to_json(analyze(c, q));
    Json twice = to_json(analyze(c, q));
    CHECK(once.dump() == twice.dump());
    CHECK(once.dump(2) == twice.dump(2));

    Json curve_a = to_json(c);
    Json curve_b = to_json(build_curve(parse_poly("(z^2-9)(z^2-4)(z^2-1)")));
    CHECK(curve_a.dump() == curve_b.dump());
}

TEST_CASE("scalar and structure round trips") {
    CHECK(to_json(Rational(-3, 2)).get<std::string>() == "-3/2");
    CHECK(to_json(ComplexQ(Rational(1), Rational(2))).get<std::string>() == "1+2i");
    CHECK(to_json(SpectralPoint::inf()).get<std::string>() == "inf");

    Json tuple = to_json(InvariantTuple{3, 0, 1, 2});
    CHECK(tuple.is_array());
    CHECK(tuple.dump() == "[3,0,1,2]");

    CHECK(poly_from_json(to_json(kSextic)) == kSextic);
}

TEST_CASE("polynomials parse from expressions, coefficients, or roots") {
    CHECK(poly_from_json(Json("(z^2-1)(z^2-4)(z^2-9)")) == kSextic);
    CHECK(poly_from_json(Json{{"coeffs", {"-36", "0", "49", "0", "-14", "0", "1"}}}) == kSextic);
    CHECK(poly_from_json(Json{{"roots", {"1", "-1", "2", "-2", "3", "-3"}}, {"lc", "1"}}) ==
          kSextic);
    CHECK(poly_from_json(Json{{"roots", {"i", "-i"}}, {"lc", "-2"}}) == parse_poly("-2*z^2-2"));
    CHECK(raised([] { poly_from_json(Json("z+w")); }) == Errc::ParseError);
    CHECK(raised([] { poly_from_json(Json{{"coeffs", {"no"}}}); }) == Errc::ParseError);
}

TEST_CASE("component counts and traces serialize with their inputs") {
    Json gl2 = to_json(count_gl2(1, 4));
    CHECK(gl2["count"] == 8);
    CHECK(gl2["d"] == 3);
    CHECK(gl2["group"] == "GL(2)");

    HyperellipticCurve c = build_curve(kSextic);
    QuadDifferential q{SpectralPoint::at(Rational(-3, 2)), SpectralPoint::at(Rational(3, 2)), 1};
    Json trace = to_json(trace_oval(c, q, ovals(c)[0]));
    CHECK(trace["circles"] == 1);
    CHECK(trace["zero_nodes"] == 2);
    CHECK(trace["decisions"].is_array());
    for (const auto& d : trace["decisions"]) {
        CHECK(d.contains("kind"));
        CHECK(d.contains("merged"));
    }
}

TEST_CASE("census reports carry the full verdict") {
    CensusReport rep = census(2, {true, 0, 12345});
    const Json j = to_json(rep);
    CHECK(j["schema"] == 1);
    CHECK(j["g"] == 2);
    CHECK(j["admissible"] == 26);
    CHECK(j["realized"] == 25);
    CHECK(j["missing"].dump() == "[[1,0,0,1]]");
    CHECK(j["seed"] == 12345);
    CHECK(j["tried_total"].get<long long>() > 0);
    CHECK(j["witnesses"].contains("3,0,1,2"));
    CHECK(!j["witnesses"].contains("1,0,0,1"));
    CHECK(j["budget"]["grid"] == true);

    const Json again = to_json(census(2, {true, 0, 12345}));
    CHECK(j.dump() == again.dump());
}

TEST_CASE("sign diagrams render ovals, markers, and the legend") {
    HyperellipticCurve c = build_curve(kSextic);
    std::string bare = sign_diagram_svg(c);
    CHECK(bare.find("<svg") == 0);
    CHECK(bare.rfind("</svg>") != std::string::npos);
    CHECK(bare.find("polyline") != std::string::npos);
    CHECK(bare.find("-2.0000") != std::string::npos);
    CHECK(bare.find("3.0000") != std::string::npos);
    CHECK(bare.find("&gt; 0") != std::string::npos);
    CHECK(bare.find("&lt; 0") != std::string::npos);
    CHECK(bare.find("zero of q") == std::string::npos);

    QuadDifferential q{SpectralPoint::at(Rational(-3, 2)), SpectralPoint::at(Rational(3, 2)), 1};
    std::string with_q = sign_diagram_svg(c, q);
    CHECK(with_q.find("1.5000") != std::string::npos);
    CHECK(with_q.find("zero of q") != std::string::npos);
    CHECK(with_q.find(">inf<") == std::string::npos);

    QuadDifferential at_inf{SpectralPoint::inf(), SpectralPoint::at(Rational(7, 2)), 1};
    std::string with_inf = sign_diagram_svg(c, at_inf);
    CHECK(with_inf.find(">inf<") != std::string::npos);

    HyperellipticCurve definite = build_curve(parse_poly("(z^2+1)(z^2+4)(z^2+9)"));
    std::string full = sign_diagram_svg(definite);
    CHECK(full.find("<svg") == 0);
}
