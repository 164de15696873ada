#pragma once

#include <vector>

#include "hitreal/sign_profile.hpp"

namespace hitreal {

// Real hyperelliptic curve w^2 = p(z) with p square-free of even degree
// 2g + 2, so the point at infinity is not a branch point and the hyperelliptic
// projection has two points over infinity.
struct HyperellipticCurve {
    Poly p;
    SignProfile profile;  // owns the certified root data
    int g = 0;
    int lc_sign = 0;

    const RootMultiset& roots() const { return profile.roots; }
    int k() const { return profile.roots.k(); }
};

// Validates and certifies the curve. Errors: OddDegree when deg p is odd
// (infinity would be a branch point), NonSquareFree, UnsupportedGenus for
// genus < 2.
HyperellipticCurve build_curve(const Poly& p);

// Same, from an explicit root multiset; errors NotConjugationClosed when a
// non-real root has no conjugate partner.
HyperellipticCurve build_curve_from_roots(const std::vector<ComplexQ>& roots, const Rational& lc);

// Connected component of the real locus downstairs: a maximal interval of
// RP^1 with p >= 0 on its closure, or all of RP^1 when p > 0 everywhere.
// Fixed circles of the conjugation (w, z) -> (conj w, conj z) live over these.
struct Oval {
    int index = 0;
    int left_root = -1;   // indices into the curve's real roots; -1 for the full circle
    int right_root = -1;
    bool through_inf = false;  // interior contains the point at infinity
    bool full_circle = false;
    // Number of fixed circles over this oval: 1 for root-bounded ovals (two
    // sheets glued at both branch points), and for the full circle 1 or 2
    // according to whether continuing w ~ z^(g+1) through infinity swaps the
    // sheets (g even) or not (g odd).
    int upstairs_circles = 1;
    int segment = -1;  // index of the covering segment in the sign profile
};

std::vector<Oval> ovals(const HyperellipticCurve& c);

}  // namespace hitreal
