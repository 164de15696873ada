#include "hitreal/sign_profile.hpp"

#include "hitreal/errors.hpp"

namespace hitreal {

int sign_at(const Poly& p, const ProjectivePoint& x) {
    if (p.is_zero()) raise(Errc::InvalidQuery, "sign of the zero polynomial");
    if (x.infinite) return sign_of(p.lc());
    return sign_of(p.eval(x.value));
}

Rational simplest_in(const Rational& lo, const Rational& hi) {
    if (lo >= hi) raise(Errc::InvalidQuery, "empty interval");
    if (lo < 0 && hi > 0) return Rational(0);
    if (hi <= 0) return -simplest_in(-hi, -lo);
    // 0 <= lo < hi
    Integer fl = numerator(lo) / denominator(lo);  // floor for lo >= 0
    if (Rational(fl + 1) < hi) return Rational(fl + 1);
    if (lo == Rational(fl)) {
        // (integer, hi): pick fl + 1/m with the smallest admissible m.
        Rational c = hi - lo;
        Integer m = numerator(Rational(1) / c) / denominator(Rational(1) / c) + 1;
        while (Rational(1) / Rational(m) >= c) ++m;
        return lo + Rational(1) / Rational(m);
    }
    Rational flo = Rational(1) / (hi - Rational(fl));
    Rational fhi = Rational(1) / (lo - Rational(fl));
    return Rational(fl) + Rational(1) / simplest_in(flo, fhi);
}

Rational SignProfile::sample_above_roots() {
    if (roots.real_roots.empty()) return Rational(0);
    RealRoot& last = roots.real_roots.back();
    return simplest_in(last.high(), roots.bound + 1);
}

Rational SignProfile::sample_below_roots() {
    if (roots.real_roots.empty()) return Rational(0);
    RealRoot& first = roots.real_roots.front();
    return simplest_in(-roots.bound - 1, first.low());
}

Rational SignProfile::sample(int i) {
    const SignSegment& s = segments.at(static_cast<size_t>(i));
    if (s.full_circle) {
        Rational x(0);
        if (p.eval(x) != 0) return x;
        return simplest_in(Rational(1, 2), Rational(3, 2));
    }
    if (s.right_root == -1 || s.through_inf) return sample_above_roots();
    if (s.left_root == -1) return sample_below_roots();
    auto& rr = roots.real_roots;
    RealRoot& a = rr.at(static_cast<size_t>(s.left_root));
    RealRoot& b = rr.at(static_cast<size_t>(s.right_root));
    while (a.high() >= b.low()) {
        refine_root(p, a, (a.hi - a.lo) / 2);
        refine_root(p, b, (b.hi - b.lo) / 2);
    }
    // Narrow the bounding intervals until the sample stabilizes, so the value
    // is the simplest rational of essentially the whole open gap rather than
    // an artifact of however coarse the isolation happened to be.
    Rational c = simplest_in(a.high(), b.low());
    for (int round = 0; round < 8; ++round) {
        Rational gap = b.low() - a.high();
        refine_root(p, a, gap / 8);
        refine_root(p, b, gap / 8);
        Rational c2 = simplest_in(a.high(), b.low());
        if (c2 == c) break;
        c = c2;
    }
    return c;
}

SignProfile real_sign_profile(const Poly& p) {
    SignProfile out;
    out.p = p;
    out.roots = find_roots(p);
    int m = out.roots.real_count();
    bool odd = p.degree() % 2 == 1;
    if (m == 0) {
        SignSegment s;
        s.full_circle = true;
        s.through_inf = true;
        s.sign = sign_of(p.eval(Rational(0)));
        out.segments.push_back(s);
        return out;
    }
    for (int i = 0; i + 1 < m; ++i) {
        SignSegment s;
        s.left_root = i;
        s.right_root = i + 1;
        RealRoot& a = out.roots.real_roots[static_cast<size_t>(i)];
        RealRoot& b = out.roots.real_roots[static_cast<size_t>(i + 1)];
        s.sign = sign_of(p.eval(sample_between(p, a, b)));
        out.segments.push_back(s);
    }
    Rational above = simplest_in(out.roots.real_roots.back().high(), out.roots.bound + 1);
    Rational below = simplest_in(-out.roots.bound - 1, out.roots.real_roots.front().low());
    if (!odd) {
        SignSegment wrap;
        wrap.left_root = m - 1;
        wrap.right_root = 0;
        wrap.through_inf = true;
        wrap.sign = sign_of(p.eval(above));
        // Even degree: the sign does not change across infinity.
        out.segments.push_back(wrap);
    } else {
        SignSegment up;
        up.left_root = m - 1;
        up.right_root = -1;
        up.sign = sign_of(p.eval(above));
        out.segments.push_back(up);
        SignSegment down;
        down.left_root = -1;
        down.right_root = 0;
        down.sign = sign_of(p.eval(below));
        out.segments.push_back(down);
    }
    return out;
}

}  // namespace hitreal
