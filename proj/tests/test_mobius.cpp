#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hitreal/mobius.hpp"
#include "helpers.hpp"

using namespace hitreal;
using test_support::raised;

namespace {

const Poly kSextic = parse_poly("(z^2-1)(z^2-4)(z^2-9)");

struct Summary {
    int n, a, n_plus, n_minus, n_zero, u, n_S;
    std::vector<int> zero_counts_sorted;
};

Summary summarize(const SpectralInvariants& s) {
    Summary out{s.n, s.a, s.n_plus, s.n_minus, s.n_zero, s.u, s.n_S, s.oval_zero_counts};
    std::sort(out.zero_counts_sorted.begin(), out.zero_counts_sorted.end());
    return out;
}

bool operator==(const Summary& x, const Summary& y) {
    return x.n == y.n && x.a == y.a && x.n_plus == y.n_plus && x.n_minus == y.n_minus &&
           x.n_zero == y.n_zero && x.u == y.u && x.n_S == y.n_S &&
           x.zero_counts_sorted == y.zero_counts_sorted;
}

Summary analyze_config(const Poly& p, const SpectralPoint& a1, const SpectralPoint& a2,
                       int sign) {
    HyperellipticCurve c = build_curve(p);
    return summarize(analyze(c, QuadDifferential{a1, a2, sign}));
}

}  // namespace

TEST_CASE("pulling points through a coordinate change") {
    MobiusMap shift{Rational(1), Rational(1), Rational(0), Rational(1)};  // z = zeta + 1
    CHECK(shift.pull_point(ProjectivePoint::at(Rational(3, 2))) ==
          ProjectivePoint::at(Rational(1, 2)));
    CHECK(shift.pull_point(ProjectivePoint::inf()) == ProjectivePoint::inf());

    MobiusMap inv{Rational(0), Rational(1), Rational(1), Rational(0)};  // z = 1/zeta
    CHECK(inv.pull_point(ProjectivePoint::at(Rational(2))) == ProjectivePoint::at(Rational(1, 2)));
    CHECK(inv.pull_point(ProjectivePoint::at(Rational(0))) == ProjectivePoint::inf());
    CHECK(inv.pull_point(ProjectivePoint::inf()) == ProjectivePoint::at(Rational(0)));
}

TEST_CASE("coordinate changes preserve every analysis invariant") {
    SpectralPoint a1 = SpectralPoint::at(Rational(-3, 2));
    SpectralPoint a2 = SpectralPoint::at(Rational(3, 2));
    Summary base = analyze_config(kSextic, a1, a2, 1);

    std::vector<MobiusMap> maps = {
        {Rational(1), Rational(1), Rational(0), Rational(1)},    // z = zeta + 1
        {Rational(2), Rational(0), Rational(0), Rational(1)},    // z = 2 zeta
        {Rational(0), Rational(1), Rational(1), Rational(0)},    // z = 1/zeta
        {Rational(1), Rational(-5), Rational(2), Rational(3)},   // generic, det = 13
        {Rational(-1), Rational(7), Rational(3), Rational(1)},   // det = -22
    };
    for (const MobiusMap& m : maps) {
        TransformedConfig t = apply_mobius(m, kSextic, a1, a2, 1);
        CHECK(t.p.degree() == 6);
        CHECK(summarize(analyze(build_curve(t.p), QuadDifferential{t.a1, t.a2, t.sign})) == base);
    }
}

TEST_CASE("a zero moved to infinity is analyzed in the infinity chart") {
    // z = 3 zeta / (2 zeta + 1) sends zeta = inf to z = 3/2, so a2 pulls to infinity.
    MobiusMap m{Rational(3), Rational(0), Rational(2), Rational(1)};
    TransformedConfig t = apply_mobius(m, kSextic, SpectralPoint::at(Rational(-3, 2)),
                                       SpectralPoint::at(Rational(3, 2)), 1);
    CHECK(t.a2 == SpectralPoint::inf());
    CHECK(t.a1 == SpectralPoint::at(Rational(-1, 4)));
    Summary base = analyze_config(kSextic, SpectralPoint::at(Rational(-3, 2)),
                                  SpectralPoint::at(Rational(3, 2)), 1);
    CHECK(analyze_config(t.p, t.a1, t.a2, t.sign) == base);
}

TEST_CASE("a configuration with a zero at infinity can be moved to finite position") {
    SpectralPoint a1 = SpectralPoint::inf();
    SpectralPoint a2 = SpectralPoint::at(Rational(7, 2));
    Summary base = analyze_config(kSextic, a1, a2, 1);
    MobiusMap m{Rational(1), Rational(-5), Rational(2), Rational(3)};
    TransformedConfig t = apply_mobius(m, kSextic, a1, a2, 1);
    CHECK(!t.a1.infinite);
    CHECK(analyze_config(t.p, t.a1, t.a2, t.sign) == base);
}

TEST_CASE("conjugate-pair zeros stay conjugate under real coordinate changes") {
    SpectralPoint a1 = SpectralPoint::at(ComplexQ(Rational(1), Rational(2)));
    SpectralPoint a2 = SpectralPoint::at(ComplexQ(Rational(1), Rational(-2)));
    Summary base = analyze_config(kSextic, a1, a2, 1);
    MobiusMap m{Rational(1), Rational(-5), Rational(2), Rational(3)};
    TransformedConfig t = apply_mobius(m, kSextic, a1, a2, 1);
    CHECK(t.a1.value == t.a2.value.conj());
    CHECK(analyze_config(t.p, t.a1, t.a2, t.sign) == base);
}

TEST_CASE("degenerate coordinate changes are rejected") {
    CHECK(raised([] {
              apply_mobius({Rational(1), Rational(2), Rational(2), Rational(4)}, kSextic,
                           SpectralPoint::at(Rational(0)), SpectralPoint::at(Rational(4)), 1);
          }) == Errc::InvalidQuery);
    // z(inf) = alpha/gamma = 1 is a branch point: the pulled polynomial drops degree.
    CHECK(raised([] {
              apply_mobius({Rational(1), Rational(1), Rational(1), Rational(-1)}, kSextic,
                           SpectralPoint::at(Rational(0)), SpectralPoint::at(Rational(4)), 1);
          }) == Errc::InvalidQuery);
}
