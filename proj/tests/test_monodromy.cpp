#include <doctest.h>

#include <vector>

#include "hitreal/monodromy.hpp"

using namespace hitreal;

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

TEST_CASE("per-oval circle counts of the worked configuration") {
    HyperellipticCurve c = build_curve(kSextic);
    QuadDifferential q = q_at(Rational(-3, 2), Rational(3, 2));
    auto ov = ovals(c);
    REQUIRE(ov.size() == 3);

    OvalTrace t0 = trace_oval(c, q, ov[0]);  // [-2,-1], zeros over -3/2
    CHECK(t0.circles == 1);
    CHECK(t0.zero_nodes == 2);

    OvalTrace t1 = trace_oval(c, q, ov[1]);  // [1,2], zeros over 3/2
    CHECK(t1.circles == 1);
    CHECK(t1.zero_nodes == 2);

    OvalTrace t2 = trace_oval(c, q, ov[2]);  // [3,inf,-3], zero-free, positive
    CHECK(t2.circles == 2);
    CHECK(t2.zero_nodes == 0);
    for (int s : t2.arc_signs) CHECK(s == 1);

    CHECK(count_nS_oracle(c, q) == 4);
}

TEST_CASE("zero-free ovals contribute two or zero circles by sign") {
    HyperellipticCurve c = build_curve(kSextic);
    ComplexQ i(Rational(0), Rational(1));
    for (const Oval& o : ovals(c)) {
        CHECK(trace_oval(c, q_pair(i), o).circles == 2);
        CHECK(trace_oval(c, q_pair(i, -1), o).circles == 0);
    }
    CHECK(count_nS_oracle(c, q_pair(i)) == 6);
    CHECK(count_nS_oracle(c, q_pair(i, -1)) == 0);
}

TEST_CASE("ovals carrying 2k zeros close into k circles") {
    HyperellipticCurve c = build_curve(kSextic);
    auto ov = ovals(c);

    // Both zeros on the oval through infinity: 4 zero nodes upstairs.
    OvalTrace both = trace_oval(c, q_at(Rational(4), Rational(-4)), ov[2]);
    CHECK(both.zero_nodes == 4);
    CHECK(both.circles == 2);

    // Zero at infinity itself plus one finite zero on the same oval.
    OvalTrace at_inf =
        trace_oval(c, {SpectralPoint::inf(), SpectralPoint::at(Rational(7, 2)), 1}, ov[2]);
    CHECK(at_inf.zero_nodes == 4);
    CHECK(at_inf.circles == 2);

    // Two zeros inside one bounded oval.
    OvalTrace packed = trace_oval(c, q_at(Rational(5, 4), Rational(7, 4)), ov[1]);
    CHECK(packed.zero_nodes == 4);
    CHECK(packed.circles == 2);
}

TEST_CASE("junction taxonomy distinguishes branch points, zeros, and infinity") {
    HyperellipticCurve c = build_curve(kSextic);
    QuadDifferential q = q_at(Rational(-3, 2), Rational(3, 2));
    auto ov = ovals(c);

    OvalTrace bounded = trace_oval(c, q, ov[0]);
    int zero_junctions = 0, branch_junctions = 0, inf_junctions = 0;
    for (const GluingDecision& d : bounded.decisions) {
        if (d.kind == GluingDecision::ZeroNode) ++zero_junctions;
        if (d.kind == GluingDecision::BranchNode) ++branch_junctions;
        if (d.kind == GluingDecision::InfinityCrossing) ++inf_junctions;
    }
    CHECK(zero_junctions == 2);
    CHECK(branch_junctions == 2);
    CHECK(inf_junctions == 0);
    for (const GluingDecision& d : bounded.decisions)
        if (d.kind == GluingDecision::BranchNode) CHECK(d.merged);

    OvalTrace wrap = trace_oval(c, q, ov[2]);
    bool saw_inf = false;
    for (const GluingDecision& d : wrap.decisions)
        saw_inf = saw_inf || d.kind == GluingDecision::InfinityCrossing;
    CHECK(saw_inf);
}

TEST_CASE("full-circle oval traversal at even genus") {
    // One fixed circle upstairs double-covering the real line through infinity.
    HyperellipticCurve c = build_curve(parse_poly("(z^2+1)(z^2+4)(z^2+9)"));
    ComplexQ w(Rational(0), Rational(3, 2));  // strictly between the branch points

    SpectralInvariants pos = analyze(c, q_pair(w));
    CHECK(pos.n_S == 2);
    CHECK(count_nS_oracle(c, q_pair(w)) == 2);

    SpectralInvariants neg = analyze(c, q_pair(w, -1));
    CHECK(neg.n_S == 0);
    CHECK(count_nS_oracle(c, q_pair(w, -1)) == 0);

    QuadDifferential fixed_zeros = q_at(Rational(0), Rational(1));
    SpectralInvariants fz = analyze(c, fixed_zeros);
    CHECK(fz.u == 4);
    CHECK(count_nS_oracle(c, fixed_zeros) == fz.n_S);
}

TEST_CASE("curves with empty real locus have no fixed circles") {
    HyperellipticCurve c = build_curve(parse_poly("-(z^2+1)(z^2+4)(z^2+9)"));
    CHECK(count_nS_oracle(c, q_at(Rational(0), Rational(1))) == 0);
}

TEST_CASE("the sign-twisted involution traces the mirrored curve") {
    HyperellipticCurve c = build_curve(kSextic);
    for (auto q : {q_at(Rational(-3, 2), Rational(3, 2)), q_pair(ComplexQ(Rational(1), Rational(1))),
                   q_at(Rational(0), Rational(4), -1)}) {
        CHECK(count_nS_oracle(c, q, InvolutionKind::ConjSigmaF) ==
              analyze(c, q, InvolutionKind::ConjSigmaF).n_S);
    }
}

TEST_CASE("oracle agrees with the sign formula across a configuration sweep") {
    std::vector<Poly> curves = {
        kSextic,
        -kSextic,
        parse_poly("(z^2-1)(z^2+4)(z^2-9)"),
        parse_poly("(z^2-1/4)(z^2-4)(z^2+9)"),
        parse_poly("-(z^2-1)(z^2+4)(z^2+9)"),
        parse_poly("(z^2+1)(z^2+4)(z^2+9)"),
    };
    std::vector<QuadDifferential> qs = {
        q_at(Rational(-3, 2), Rational(3, 2)),
        q_at(Rational(-3, 2), Rational(3, 2), -1),
        q_at(Rational(0), Rational(5)),
        q_at(Rational(7), Rational(-6)),
        q_pair(ComplexQ(Rational(0), Rational(1))),
        q_pair(ComplexQ(Rational(-2), Rational(3)), -1),
        {SpectralPoint::inf(), SpectralPoint::at(Rational(5)), 1},
        {SpectralPoint::inf(), SpectralPoint::at(Rational(0)), -1},
    };
    for (const Poly& p : curves) {
        HyperellipticCurve c = build_curve(p);
        for (const QuadDifferential& q : qs) {
            bool valid = true;
            try {
                validate_differential(c, q);
            } catch (const Error&) {
                valid = false;
            }
            if (!valid) continue;
            for (InvolutionKind kind : {InvolutionKind::ConjF, InvolutionKind::ConjSigmaF})
                CHECK(count_nS_oracle(c, q, kind) == analyze(c, q, kind).n_S);
        }
    }
}

TEST_CASE("traversal records are well-formed") {
    HyperellipticCurve c = build_curve(kSextic);
    QuadDifferential q = q_at(Rational(-3, 2), Rational(3, 2));
    for (const Oval& o : ovals(c)) {
        OvalTrace t = trace_oval(c, q, o);
        CHECK(t.oval_index == o.index);
        CHECK(t.samples_used >= 64);
        CHECK(t.circles == track_fixed_circles(c, q, o));
        for (int s : t.arc_signs) CHECK((s == 1 || s == -1));
    }
}
