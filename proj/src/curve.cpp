#include "hitreal/curve.hpp"

#include "hitreal/errors.hpp"

namespace hitreal {

HyperellipticCurve build_curve(const Poly& p) {
    if (p.is_zero() || p.degree() < 1) raise(Errc::InvalidQuery, "curve polynomial must be nonconstant");
    if (p.degree() % 2 == 1)
        raise(Errc::OddDegree, "deg p = " + std::to_string(p.degree()) +
                                   " is odd, so infinity would be a branch point");
    int g = p.degree() / 2 - 1;
    if (g < 2) raise(Errc::UnsupportedGenus, "genus " + std::to_string(g) + " < 2");
    if (!is_square_free(p)) raise(Errc::NonSquareFree, "branch points must be distinct");
    HyperellipticCurve c;
    c.p = p;
    c.profile = real_sign_profile(p);
    c.g = g;
    c.lc_sign = sign_of(p.lc());
    return c;
}

HyperellipticCurve build_curve_from_roots(const std::vector<ComplexQ>& roots, const Rational& lc) {
    if (lc == 0) raise(Errc::InvalidQuery, "leading coefficient must be nonzero");
    return build_curve(poly_from_roots(roots, lc));
}

std::vector<Oval> ovals(const HyperellipticCurve& c) {
    std::vector<Oval> out;
    const auto& segs = c.profile.segments;
    for (size_t i = 0; i < segs.size(); ++i) {
        const SignSegment& s = segs[i];
        if (s.sign <= 0) continue;
        Oval o;
        o.index = static_cast<int>(out.size());
        o.segment = static_cast<int>(i);
        if (s.full_circle) {
            o.full_circle = true;
            o.through_inf = true;
            o.upstairs_circles = (c.g % 2 == 0) ? 1 : 2;
        } else {
            o.left_root = s.left_root;
            o.right_root = s.right_root;
            o.through_inf = s.through_inf;
            o.upstairs_circles = 1;
        }
        out.push_back(o);
    }
    return out;
}

}  // namespace hitreal
