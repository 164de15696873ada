#include "hitreal/mobius.hpp"

namespace hitreal {

ProjectivePoint MobiusMap::pull_point(const ProjectivePoint& z) const {
    if (z.infinite) {
        if (gamma == 0) return ProjectivePoint::inf();
        return ProjectivePoint::at(-delta / gamma);
    }
    Rational den = alpha - gamma * z.value;
    if (den == 0) return ProjectivePoint::inf();
    return ProjectivePoint::at((delta * z.value - beta) / den);
}

SpectralPoint MobiusMap::pull_point(const SpectralPoint& z) const {
    if (z.infinite) {
        if (gamma == 0) return SpectralPoint::inf();
        return SpectralPoint::at(Rational(-delta / gamma));
    }
    ComplexQ den = ComplexQ(alpha) - ComplexQ(gamma) * z.value;
    if (den == ComplexQ(Rational(0))) return SpectralPoint::inf();
    return SpectralPoint::at((ComplexQ(delta) * z.value - ComplexQ(beta)) / den);
}

namespace {

// Linear factor of the pulled-back numerator contributed by one zero a:
// finite a  -> (alpha - gamma a) zeta + (beta - delta a)
// a = inf   -> gamma zeta + delta  (the omitted factor (z - a) pulls back to B(zeta))
// Returns the pulled zero and the scalar c with factor = c (zeta - zero), or
// c = constant term when the pulled zero is infinite (factor degenerates to a constant).
struct PulledZero {
    SpectralPoint zero;
    ComplexQ scale;
};

PulledZero pull_zero(const MobiusMap& m, const SpectralPoint& a) {
    PulledZero out;
    out.zero = m.pull_point(a);
    if (a.infinite) {
        out.scale = out.zero.infinite ? ComplexQ(m.delta) : ComplexQ(m.gamma);
    } else {
        ComplexQ lead = ComplexQ(m.alpha) - ComplexQ(m.gamma) * a.value;
        out.scale = out.zero.infinite ? ComplexQ(m.beta) - ComplexQ(m.delta) * a.value : lead;
    }
    return out;
}

}  // namespace

TransformedConfig apply_mobius(const MobiusMap& m, const Poly& p, const SpectralPoint& a1,
                               const SpectralPoint& a2, int sign) {
    if (m.det() == 0) raise(Errc::InvalidQuery, "singular coordinate change");
    int d = p.degree();
    Poly num_a = Poly::constant(m.beta) + Poly::z().scaled(m.alpha);
    Poly num_b = Poly::constant(m.delta) + Poly::z().scaled(m.gamma);
    Poly out;
    for (int i = 0; i <= d; ++i) {
        if (p[i] == 0) continue;
        out = out + (num_a.pow(i) * num_b.pow(d - i)).scaled(p[i]);
    }
    if (out.degree() != d)
        raise(Errc::InvalidQuery, "coordinate change sends a branch point to infinity");

    PulledZero z1 = pull_zero(m, a1);
    PulledZero z2 = pull_zero(m, a2);
    // det^2 > 0 never flips the sign; conjugate-pair scales multiply to |c|^2 > 0.
    ComplexQ prod = z1.scale * z2.scale;
    if (!prod.is_real() || prod.re == 0)
        raise(Errc::InvalidQuery, "degenerate pulled zeros");
    TransformedConfig cfg;
    cfg.p = out;
    cfg.a1 = z1.zero;
    cfg.a2 = z2.zero;
    cfg.sign = sign * sign_of(prod.re);
    return cfg;
}

}  // namespace hitreal
