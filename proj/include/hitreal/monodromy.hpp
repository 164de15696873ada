#pragma once

#include <vector>

#include "hitreal/mobius.hpp"
#include "hitreal/spectral.hpp"

namespace hitreal {

struct MonodromyOptions {
    int min_samples = 64;  // per zero-free segment, doubled until stable
    int max_doublings = 6;
    int zero_retries = 3;  // resamples before SampleDegeneracy
};

// One gluing step along the traversal of the fixed circle(s) over an oval.
struct GluingDecision {
    enum Kind { ZeroNode, BranchNode, InfinityCrossing } kind;
    bool merged;  // true when the flanking arcs were joined (same sign)
};

// Traversal record of p^-1(oval): cyclic arc signs of eta^2 = q1 between the
// zeros of q on the circle, with the gluing decision at every junction.
struct OvalTrace {
    int oval_index = 0;
    int circles = 0;          // number of f-tilde-fixed circles found
    int zero_nodes = 0;       // zeros of q on the traversed circle(s)
    int samples_used = 0;     // per-segment density at stabilization
    std::vector<int> arc_signs;  // merged cyclic arcs, one entry per circle traversal arc
    std::vector<GluingDecision> decisions;
};

// Counts the fixed circles of the lifted involution over one oval by direct
// continuation: segment signs from dense exact sampling, lifts glued straight
// through branch points (the local coordinate w = q1(z) has eta^2 = w there)
// and pairwise at the zeros of q.
OvalTrace trace_oval(const HyperellipticCurve& c, const QuadDifferential& q, const Oval& oval,
                     const MonodromyOptions& opts = {});

int track_fixed_circles(const HyperellipticCurve& c, const QuadDifferential& q, const Oval& oval,
                        const MonodromyOptions& opts = {});

// Sum over all ovals; fixed circles of the lift only live over fixed circles
// of the base involution.
long long count_nS_oracle(const HyperellipticCurve& c, const QuadDifferential& q,
                          InvolutionKind kind = InvolutionKind::ConjF,
                          const MonodromyOptions& opts = {});

}  // namespace hitreal
