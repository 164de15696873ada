#pragma once

#include <vector>

#include "hitreal/roots.hpp"

namespace hitreal {

// Sign of p at a point of RP^1. At infinity the value is taken in the chart
// zeta = 1/z with weight zeta^deg, i.e. the sign of the leading coefficient;
// for odd degree the two real approaches to infinity carry opposite signs and
// the sign profile below records the split.
int sign_at(const Poly& p, const ProjectivePoint& x);

// Maximal open interval of RP^1 minus the real roots on which p has constant
// sign. Roots are referenced by index into the owning profile's root list;
// -1 marks the point at infinity as an endpoint (odd degree only).
struct SignSegment {
    int left_root = -1;
    int right_root = -1;
    int sign = 0;
    bool through_inf = false;  // interior contains the point at infinity
    bool full_circle = false;  // no real roots: all of RP^1 minus nothing
};

// Cyclic decomposition of RP^1 minus the real roots of p. Segments are listed
// left to right; with m > 0 roots and even degree the m-th segment wraps
// through infinity, and with odd degree the wrap is split at infinity into
// (last root, inf) and (inf, first root).
struct SignProfile {
    Poly p;
    RootMultiset roots;
    std::vector<SignSegment> segments;

    int segment_count() const { return static_cast<int>(segments.size()); }

    // Rational interior point of the segment with p nonzero there. Segments
    // through infinity are sampled on their right-of-last-root side.
    Rational sample(int segment_index);
    // Finite samples on both sides of infinity for the wrap segment.
    Rational sample_above_roots();
    Rational sample_below_roots();
};

SignProfile real_sign_profile(const Poly& p);

// Simplest rational (smallest denominator, then smallest magnitude) strictly
// inside the open interval (lo, hi).
Rational simplest_in(const Rational& lo, const Rational& hi);

}  // namespace hitreal
