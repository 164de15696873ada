#include <doctest.h>

#include "hitreal/curve.hpp"
#include "helpers.hpp"

using namespace hitreal;
using test_support::raised;

namespace {
const Poly kSextic = parse_poly("(z^2-1)(z^2-4)(z^2-9)");
}

TEST_CASE("curve construction certifies genus and root data") {
    HyperellipticCurve c = build_curve(kSextic);
    CHECK(c.g == 2);
    CHECK(c.lc_sign == 1);
    CHECK(c.k() == 3);
    CHECK(c.roots().real_count() == 6);

    HyperellipticCurve neg = build_curve(-kSextic);
    CHECK(neg.lc_sign == -1);
    CHECK(neg.k() == 3);

    CHECK(build_curve(parse_poly("(z^2+1)(z^2+4)(z^2+9)(z^2+16)")).g == 3);
}

TEST_CASE("curve construction rejects bad input") {
    CHECK(raised([] { build_curve(parse_poly("z^5-1")); }) == Errc::OddDegree);
    CHECK(raised([] { build_curve(parse_poly("(z-1)^2*(z^4+2)")); }) == Errc::NonSquareFree);
    CHECK(raised([] { build_curve(parse_poly("z^4-1")); }) == Errc::UnsupportedGenus);
    CHECK(raised([] { build_curve(parse_poly("z^2-1")); }) == Errc::UnsupportedGenus);
}

TEST_CASE("curve construction from roots requires conjugation closure") {
    std::vector<ComplexQ> real_six = {
        ComplexQ(Rational(1)),  ComplexQ(Rational(-1)), ComplexQ(Rational(2)),
        ComplexQ(Rational(-2)), ComplexQ(Rational(3)),  ComplexQ(Rational(-3)),
    };
    HyperellipticCurve c = build_curve_from_roots(real_six, Rational(1));
    CHECK(c.p == kSextic);

    ComplexQ i(Rational(0), Rational(1));
    CHECK(raised([&] {
              build_curve_from_roots({i, i.conj(), ComplexQ(Rational(0), Rational(2)),
                                      ComplexQ(Rational(3)), ComplexQ(Rational(-3)),
                                      ComplexQ(Rational(7))},
                                     Rational(1));
          }) == Errc::NotConjugationClosed);
}

TEST_CASE("ovals are the maximal nonnegative intervals") {
    HyperellipticCurve c = build_curve(kSextic);
    auto ov = ovals(c);
    REQUIRE(ov.size() == 3);

    CHECK(ov[0].left_root == 1);  // [-2, -1]
    CHECK(ov[0].right_root == 2);
    CHECK(!ov[0].through_inf);
    CHECK(ov[0].upstairs_circles == 1);

    CHECK(ov[1].left_root == 3);  // [1, 2]
    CHECK(ov[1].right_root == 4);
    CHECK(!ov[1].through_inf);

    CHECK(ov[2].left_root == 5);  // [3, inf, -3]
    CHECK(ov[2].right_root == 0);
    CHECK(ov[2].through_inf);
    CHECK(ov[2].upstairs_circles == 1);

    for (const Oval& o : ov) {
        CHECK(!o.full_circle);
        CHECK(c.profile.segments[o.segment].sign == 1);
    }
}

TEST_CASE("positive definite curves have one full-circle oval") {
    HyperellipticCurve even = build_curve(parse_poly("(z^2+1)(z^2+4)(z^2+9)"));
    auto ov_even = ovals(even);
    REQUIRE(ov_even.size() == 1);
    CHECK(ov_even[0].full_circle);
    // Even genus: w ~ z^(g+1) swaps sheets through infinity, one circle upstairs.
    CHECK(ov_even[0].upstairs_circles == 1);

    HyperellipticCurve odd = build_curve(parse_poly("(z^2+1)(z^2+4)(z^2+9)(z^2+16)"));
    auto ov_odd = ovals(odd);
    REQUIRE(ov_odd.size() == 1);
    CHECK(ov_odd[0].full_circle);
    CHECK(ov_odd[0].upstairs_circles == 2);
}

TEST_CASE("negative definite curves have no ovals") {
    HyperellipticCurve c = build_curve(parse_poly("-(z^2+1)(z^2+4)(z^2+9)"));
    CHECK(ovals(c).empty());
}
