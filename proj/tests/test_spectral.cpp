#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hitreal/spectral.hpp"
#include "helpers.hpp"

using namespace hitreal;
using test_support::raised;

namespace {

const Poly kSextic = parse_poly("(z^2-1)(z^2-4)(z^2-9)");

QuadDifferential q_at(Rational a1, Rational a2, int sign = 1) {
    return QuadDifferential{SpectralPoint::at(std::move(a1)), SpectralPoint::at(std::move(a2)),
                            sign};
}

QuadDifferential q_pair(ComplexQ a, int sign = 1) {
    return QuadDifferential{SpectralPoint::at(a), SpectralPoint::at(a.conj()), sign};
}

}  // namespace

TEST_CASE("spectral point text round trip") {
    CHECK(to_string(SpectralPoint::inf()) == "inf");
    CHECK(to_string(SpectralPoint::at(Rational(-3, 2))) == "-3/2");
    CHECK(parse_spectral_point("inf") == SpectralPoint::inf());
    CHECK(parse_spectral_point("1+2i") ==
          SpectralPoint::at(ComplexQ(Rational(1), Rational(2))));
    CHECK(raised([] { parse_spectral_point("wat"); }) == Errc::ParseError);
}

TEST_CASE("reality holds exactly for conjugation-closed zero sets") {
    ComplexQ i(Rational(0), Rational(1));
    CHECK(check_reality(q_at(Rational(3, 2), Rational(-3, 2))));
    CHECK(check_reality(q_pair(i)));
    CHECK(check_reality(q_pair(ComplexQ(Rational(1), Rational(2)))));
    CHECK(check_reality({SpectralPoint::inf(), SpectralPoint::at(Rational(5)), 1}));
    CHECK(check_reality({SpectralPoint::inf(), SpectralPoint::inf(), 1}));

    CHECK(!check_reality({SpectralPoint::at(i), SpectralPoint::at(i + i), 1}));
    CHECK(!check_reality({SpectralPoint::inf(), SpectralPoint::at(i), 1}));
    CHECK(!check_reality({SpectralPoint::at(ComplexQ(Rational(1), Rational(2))),
                          SpectralPoint::at(ComplexQ(Rational(1), Rational(2))), 1}));
}

TEST_CASE("differential validation enforces reality and simple zeros") {
    HyperellipticCurve c = build_curve(kSextic);
    ComplexQ i(Rational(0), Rational(1));

    CHECK(raised([&] {
              validate_differential(c, {SpectralPoint::at(i), SpectralPoint::at(i + i), 1});
          }) == Errc::RealityViolation);
    CHECK(raised([&] { validate_differential(c, q_at(Rational(1, 2), Rational(1, 2))); }) ==
          Errc::NonSimpleZeros);
    CHECK(raised([&] { validate_differential(c, q_at(Rational(2), Rational(1, 2))); }) ==
          Errc::NonSimpleZeros);
    CHECK(raised([&] {
              validate_differential(c, {SpectralPoint::inf(), SpectralPoint::inf(), 1});
          }) == Errc::NonSimpleZeros);

    // Genus 2 admits one zero at infinity; higher genus admits none.
    validate_differential(c, {SpectralPoint::inf(), SpectralPoint::at(Rational(5)), 1});
    HyperellipticCurve c3 = build_curve(parse_poly("(z^2-1)(z^2-4)(z^2-9)(z^2-16)"));
    CHECK(raised([&] { validate_differential(c3, q_at(Rational(1, 2), Rational(9, 2))); }) ==
          Errc::NonSimpleZeros);
}

TEST_CASE("worked configuration with zeros on two ovals") {
    HyperellipticCurve c = build_curve(kSextic);
    SpectralInvariants s = analyze(c, q_at(Rational(-3, 2), Rational(3, 2)));
    CHECK(s.n == 3);
    CHECK(s.a == 0);
    CHECK(s.n_plus == 1);
    CHECK(s.n_minus == 0);
    CHECK(s.n_zero == 1);
    CHECK(s.u == 4);
    CHECK(s.oval_zero_counts == std::vector<int>{2, 2, 0});
    CHECK(s.n_S == 4);
    CHECK(s.g_S == 5);
}

TEST_CASE("conjugate-pair zeros leave every oval sign-definite") {
    HyperellipticCurve c = build_curve(kSextic);
    ComplexQ i(Rational(0), Rational(1));
    SpectralInvariants s = analyze(c, q_pair(i));
    CHECK(s.n_plus == 3);
    CHECK(s.n_minus == 0);
    CHECK(s.n_zero == 3);
    CHECK(s.u == 0);
    CHECK(s.oval_zero_counts == std::vector<int>{0, 0, 0});
    CHECK(s.n_S == 6);

    SpectralInvariants neg = analyze(c, q_pair(i, -1));
    CHECK(neg.n_plus == 0);
    CHECK(neg.n_minus == 3);
    CHECK(neg.n_S == 0);
}

TEST_CASE("flipping the overall sign swaps positive and negative circles") {
    HyperellipticCurve c = build_curve(kSextic);
    for (auto q : {q_at(Rational(-3, 2), Rational(3, 2)), q_at(Rational(0), Rational(4)),
                   q_pair(ComplexQ(Rational(1), Rational(1)))}) {
        SpectralInvariants plus = analyze(c, q);
        QuadDifferential flipped = q;
        flipped.sign = -q.sign;
        SpectralInvariants minus = analyze(c, flipped);
        CHECK(plus.n_plus == minus.n_minus);
        CHECK(plus.n_minus == minus.n_plus);
        CHECK(plus.u == minus.u);
        CHECK(plus.oval_zero_counts == minus.oval_zero_counts);
    }
}

TEST_CASE("curves without ovals have empty sign data") {
    HyperellipticCurve c = build_curve(parse_poly("-(z^2+1)(z^2+4)(z^2+9)"));
    SpectralInvariants s = analyze(c, q_at(Rational(0), Rational(1)));
    CHECK(s.n == 0);
    CHECK(s.a == 1);
    CHECK(s.n_plus == 0);
    CHECK(s.n_minus == 0);
    CHECK(s.u == 0);
    CHECK(s.n_S == 0);
    CHECK(s.oval_zero_counts.empty());
}

TEST_CASE("sign-twisted analysis matches plain analysis of the negated curve") {
    HyperellipticCurve c = build_curve(kSextic);
    HyperellipticCurve neg = build_curve(-kSextic);
    QuadDifferential q = q_at(Rational(-3, 2), Rational(3, 2));
    QuadDifferential q_neg = q;
    q_neg.sign = -q.sign;
    SpectralInvariants twisted = analyze(c, q, InvolutionKind::ConjSigmaF);
    SpectralInvariants plain = analyze(neg, q_neg, InvolutionKind::ConjF);
    CHECK(twisted.n_plus == plain.n_plus);
    CHECK(twisted.n_minus == plain.n_minus);
    CHECK(twisted.u == plain.u);
    CHECK(twisted.n_S == plain.n_S);
    CHECK(twisted.n == plain.n);
    CHECK(twisted.a == plain.a);
}

TEST_CASE("zero at infinity lands on the unbounded oval") {
    HyperellipticCurve c = build_curve(kSextic);
    SpectralInvariants s = analyze(c, {SpectralPoint::inf(), SpectralPoint::at(Rational(7, 2)), 1});
    CHECK(s.u == 4);  // both zeros on the oval through infinity
    CHECK(s.oval_zero_counts == std::vector<int>{0, 0, 4});
    CHECK(s.n_zero == 2);
    CHECK(s.n_S == 2 * s.n_plus + 2);
}

TEST_CASE("exact sign of the rational factor") {
    HyperellipticCurve c = build_curve(kSextic);
    QuadDifferential q = q_at(Rational(-3, 2), Rational(3, 2));
    CHECK(differential_sign_at(c, q, Rational(0)) == 1);
    CHECK(differential_sign_at(c, q, Rational(5, 2)) == -1);
    CHECK(differential_sign_at(c, q, Rational(3, 2)) == 0);
    CHECK(differential_sign_at(c, q, Rational(4)) == 1);
}

TEST_CASE("structural invariants hold across sampled configurations") {
    HyperellipticCurve c = build_curve(kSextic);
    auto ov = ovals(c);
    for (auto q : {q_at(Rational(-3, 2), Rational(3, 2)), q_at(Rational(0), Rational(1, 2)),
                   q_at(Rational(4), Rational(-4)), q_at(Rational(3, 2), Rational(7, 4)),
                   q_pair(ComplexQ(Rational(2), Rational(3))),
                   QuadDifferential{SpectralPoint::inf(), SpectralPoint::at(Rational(0)), -1}}) {
        SpectralInvariants s = analyze(c, q);
        CHECK(s.u % 2 == 0);
        CHECK(s.n_zero == s.n_plus + s.n_minus);
        CHECK(s.oval_zero_counts.size() == ov.size());
        CHECK(std::accumulate(s.oval_zero_counts.begin(), s.oval_zero_counts.end(), 0) == s.u);
        for (int zc : s.oval_zero_counts) CHECK(zc % 2 == 0);
        CHECK(s.n_S == 2 * s.n_plus + s.u / 2);
        CHECK(s.g_S == 5);
        CHECK(validate_invariants(c.g, s.n, s.a));
    }
}

TEST_CASE("closed-form spectral quantities") {
    CHECK(spectral_genus(2, 2) == 5);
    CHECK(spectral_genus(1, 2) == 2);
    CHECK(spectral_genus(3, 4) == 28);
    CHECK(fixed_determinant_degree(2, 2) == 2);
    CHECK(fixed_determinant_degree(3, 2) == 6);
    CHECK(fixed_determinant_degree(5, 6) == 100);
    CHECK(fibre_dim(Group::GL, 2, 2) == 5);
    CHECK(fibre_dim(Group::SL, 2, 2) == 3);
    CHECK(fibre_dim(Group::GL, 1, 3) == 3);
    CHECK(fibre_dim(Group::SL, 3, 6) == 40);
    for (int n = 1; n <= 5; ++n)
        for (int g = 2; g <= 6; ++g) {
            CHECK(fibre_dim(Group::GL, n, g) == spectral_genus(n, g));
            CHECK(fibre_dim(Group::GL, n, g) - fibre_dim(Group::SL, n, g) == g);
        }
}
