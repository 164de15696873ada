#pragma once

#include "hitreal/spectral.hpp"

namespace hitreal {

// Real fractional-linear change of coordinate z = (alpha*zeta + beta) / (gamma*zeta + delta),
// det = alpha*delta - beta*gamma != 0. Maps RP^1 to itself, so every invariant of a
// (curve, differential) configuration is preserved; used to validate the charts at infinity
// against configurations moved to finite position.
struct MobiusMap {
    Rational alpha, beta, gamma, delta;

    Rational det() const { return alpha * delta - beta * gamma; }
    // Image of a point of RP^1 under the inverse map zeta = (delta*z - beta)/(-gamma*z + alpha).
    ProjectivePoint pull_point(const ProjectivePoint& z) const;
    SpectralPoint pull_point(const SpectralPoint& z) const;
};

// The transformed configuration: P(zeta) = sum c_i (alpha zeta + beta)^i (gamma zeta + delta)^(d-i)
// has roots at the preimages of the roots of p and keeps degree d = 2g+2 (errors otherwise:
// a root of p at the image of zeta = inf would drop the degree).
struct TransformedConfig {
    Poly p;
    SpectralPoint a1, a2;
    int sign = 1;
};

TransformedConfig apply_mobius(const MobiusMap& m, const Poly& p, const SpectralPoint& a1,
                               const SpectralPoint& a2, int sign);

}  // namespace hitreal
