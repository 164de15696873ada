#include "hitreal/monodromy.hpp"

#include <algorithm>

#include "hitreal/curve.hpp"

namespace hitreal {

namespace {

int robust_sign(const HyperellipticCurve& c, const QuadDifferential& q, Rational x,
                const Rational& hi, const MonodromyOptions& opts) {
    for (int r = 0; r <= opts.zero_retries; ++r) {
        int s = differential_sign_at(c, q, x);
        if (s != 0) return s;
        x = x + (hi - x) / 9973;  // nudge off the zero, staying interior
    }
    raise(Errc::SampleDegeneracy, "sample kept landing on a zero of q");
}

// Constant sign of q1 on the zero-free open segment (lo, hi): sampled at
// midpoints of k equal strips, k doubled until the pattern repeats.
int segment_sign(const HyperellipticCurve& c, const QuadDifferential& q, const Rational& lo,
                 const Rational& hi, const MonodromyOptions& opts, int& samples_used) {
    int last = 0;
    int k = opts.min_samples;
    for (int round = 0; round <= opts.max_doublings; ++round, k *= 2) {
        int sign0 = 0;
        for (int j = 0; j < k; ++j) {
            Rational x = lo + (hi - lo) * Rational(2 * j + 1, 2 * k);
            int s = robust_sign(c, q, x, hi, opts);
            if (sign0 == 0)
                sign0 = s;
            else if (s != sign0)
                raise(Errc::SampleDegeneracy, "sign flip inside a declared segment");
        }
        if (sign0 == last) {
            samples_used = std::max(samples_used, k);
            return sign0;
        }
        last = sign0;
    }
    raise(Errc::SampleDegeneracy, "sign pattern failed to stabilize");
}

void tighten_above(const Poly& p, RealRoot& r, const Rational& x) {
    while (r.high() >= x) refine_root(p, r, (r.hi - r.lo) / 2);
}

void tighten_below(const Poly& p, RealRoot& r, const Rational& x) {
    while (r.low() <= x) refine_root(p, r, (r.hi - r.lo) / 2);
}

// A pass is an ordered list of zero-free sampling segments; consecutive
// segments abut at one zero of q each.
struct Pass {
    std::vector<int> signs;
};

Pass sample_pass(const HyperellipticCurve& c, const QuadDifferential& q, const Rational& lo,
                 const Rational& hi, const std::vector<Rational>& interior_zeros,
                 const MonodromyOptions& opts, int& samples_used) {
    Pass pass;
    Rational a = lo;
    for (const Rational& z : interior_zeros) {
        pass.signs.push_back(segment_sign(c, q, a, z, opts, samples_used));
        a = z;
    }
    pass.signs.push_back(segment_sign(c, q, a, hi, opts, samples_used));
    return pass;
}

// Cyclic gluing: arcs around the traversed circle with a junction after each.
// Zero junctions join the two lifts of the positive side; branch junctions and
// sign-preserving infinity crossings continue both lifts straight, merging the
// flanking arcs into one.
struct CircleTraversal {
    std::vector<int> arc_signs;
    std::vector<GluingDecision::Kind> junctions;
};

void count_circle(const CircleTraversal& tr, OvalTrace& out) {
    int m = static_cast<int>(tr.arc_signs.size());
    std::vector<int> merged;
    // rotate to start right after a zero junction if any exists
    int start = -1;
    for (int i = 0; i < m; ++i)
        if (tr.junctions[i] == GluingDecision::ZeroNode) start = (i + 1) % m;
    if (start < 0) {
        for (int i = 0; i < m; ++i) {
            if (tr.arc_signs[i] != tr.arc_signs[0])
                raise(Errc::SampleDegeneracy, "sign change without a zero between samples");
            out.decisions.push_back({tr.junctions[i], true});
        }
        out.arc_signs.push_back(tr.arc_signs[0]);
        out.circles += tr.arc_signs[0] > 0 ? 2 : 0;
        return;
    }
    for (int step = 0; step < m; ++step) {
        int i = (start + step) % m;
        if (merged.empty() || tr.junctions[(i + m - 1) % m] == GluingDecision::ZeroNode)
            merged.push_back(tr.arc_signs[i]);
        else {
            if (merged.back() != tr.arc_signs[i])
                raise(Errc::SampleDegeneracy, "sign change without a zero between samples");
            out.decisions.push_back({tr.junctions[(i + m - 1) % m], true});
        }
    }
    for (size_t i = 0; i < merged.size(); ++i)
        if (merged[i] == merged[(i + 1) % merged.size()])
            raise(Errc::SampleDegeneracy, "zero of q without a sign change");
    int positives = 0;
    for (size_t i = 0; i < merged.size(); ++i) {
        if (merged[i] > 0) ++positives;
        out.decisions.push_back({GluingDecision::ZeroNode, false});
        out.zero_nodes += 1;
        out.arc_signs.push_back(merged[i]);
    }
    out.circles += positives;
}

}  // namespace

OvalTrace trace_oval(const HyperellipticCurve& c, const QuadDifferential& q, const Oval& oval,
                     const MonodromyOptions& opts) {
    validate_differential(c, q);
    OvalTrace out;
    out.oval_index = oval.index;

    SignProfile prof = c.profile;
    Poly const& p = c.p;
    auto& roots = prof.roots.real_roots;

    // Real zeros of q on this oval, in the z coordinate.
    std::vector<Rational> zs;
    bool zero_at_inf = false;
    for (const SpectralPoint* a : {&q.a1, &q.a2}) {
        if (a->infinite) {
            if ((oval.through_inf || oval.full_circle) && c.lc_sign > 0) zero_at_inf = true;
            continue;
        }
        if (!a->value.is_real()) continue;
        const Rational& x = a->value.re;
        if (sign_of(p.eval(x)) <= 0) continue;
        bool inside;
        if (oval.full_circle)
            inside = true;
        else if (oval.through_inf)
            inside = compare_to_root(p, roots[oval.left_root], x) > 0 ||
                     compare_to_root(p, roots[oval.right_root], x) < 0;
        else
            inside = compare_to_root(p, roots[oval.left_root], x) > 0 &&
                     compare_to_root(p, roots[oval.right_root], x) < 0;
        if (inside) zs.push_back(x);
    }
    std::sort(zs.begin(), zs.end());

    Rational bound = prof.roots.bound;
    for (const Rational& z : zs)
        if (rat_abs(z) + 1 > bound) bound = rat_abs(z) + 1;

    if (oval.full_circle) {
        Pass pass = sample_pass(c, q, -bound, bound, zs, opts, out.samples_used);
        auto inf_kind = zero_at_inf ? GluingDecision::ZeroNode : GluingDecision::InfinityCrossing;
        // Even genus: one fixed circle upstairs double-covering RP^1 (the
        // sheets swap across infinity). Odd genus: two disjoint single covers.
        int traversals = (c.g % 2 == 0) ? 1 : 2;
        int reps = (c.g % 2 == 0) ? 2 : 1;
        for (int traversal = 0; traversal < traversals; ++traversal) {
            CircleTraversal tr;
            for (int rep = 0; rep < reps; ++rep) {
                for (size_t i = 0; i < pass.signs.size(); ++i) {
                    tr.arc_signs.push_back(pass.signs[i]);
                    tr.junctions.push_back(i + 1 < pass.signs.size() ? GluingDecision::ZeroNode
                                                                     : inf_kind);
                }
            }
            count_circle(tr, out);
        }
        return out;
    }

    RealRoot& left = roots[oval.left_root];
    RealRoot& right = roots[oval.right_root];

    if (!oval.through_inf) {
        while (left.high() >= right.low()) {
            refine_root(p, left, (left.hi - left.lo) / 2);
            refine_root(p, right, (right.hi - right.lo) / 2);
        }
        if (!zs.empty()) {
            tighten_above(p, left, zs.front());
            tighten_below(p, right, zs.back());
        }
        Pass pass = sample_pass(c, q, left.high(), right.low(), zs, opts, out.samples_used);
        CircleTraversal tr;
        for (int dir = 0; dir < 2; ++dir) {
            int m = static_cast<int>(pass.signs.size());
            for (int i = 0; i < m; ++i) {
                tr.arc_signs.push_back(pass.signs[dir == 0 ? i : m - 1 - i]);
                tr.junctions.push_back(i + 1 < m ? GluingDecision::ZeroNode
                                                 : GluingDecision::BranchNode);
            }
        }
        count_circle(tr, out);
        return out;
    }

    // Oval through infinity: the interval (left root, +inf) u (-inf, right root).
    std::vector<Rational> upper, lower;
    for (const Rational& z : zs)
        (compare_to_root(p, left, z) > 0 ? upper : lower).push_back(z);
    if (!upper.empty()) tighten_above(p, left, upper.front());
    if (!lower.empty()) tighten_below(p, right, lower.back());
    Pass up = sample_pass(c, q, left.high(), bound, upper, opts, out.samples_used);
    Pass low = sample_pass(c, q, -bound, right.low(), lower, opts, out.samples_used);
    auto inf_kind = zero_at_inf ? GluingDecision::ZeroNode : GluingDecision::InfinityCrossing;

    CircleTraversal tr;
    auto emit = [&tr, &inf_kind](const Pass& first, const Pass& second, bool reversed,
                                 GluingDecision::Kind end_kind) {
        const std::vector<int>* lists[2] = {&first.signs, &second.signs};
        for (int part = 0; part < 2; ++part) {
            const auto& s = *lists[part];
            int m = static_cast<int>(s.size());
            for (int i = 0; i < m; ++i) {
                tr.arc_signs.push_back(s[reversed ? m - 1 - i : i]);
                bool last = i + 1 == m;
                tr.junctions.push_back(!last ? GluingDecision::ZeroNode
                                             : (part == 0 ? inf_kind : end_kind));
            }
        }
    };
    emit(up, low, false, GluingDecision::BranchNode);   // forward sheet
    emit(low, up, true, GluingDecision::BranchNode);    // backward sheet
    count_circle(tr, out);
    return out;
}

int track_fixed_circles(const HyperellipticCurve& c, const QuadDifferential& q, const Oval& oval,
                        const MonodromyOptions& opts) {
    return trace_oval(c, q, oval, opts).circles;
}

long long count_nS_oracle(const HyperellipticCurve& c, const QuadDifferential& q,
                          InvolutionKind kind, const MonodromyOptions& opts) {
    if (kind == InvolutionKind::ConjSigmaF) {
        QuadDifferential flipped = q;
        flipped.sign = -q.sign;
        return count_nS_oracle(build_curve(-c.p), flipped, InvolutionKind::ConjF, opts);
    }
    if (kind != InvolutionKind::ConjF) {
        classify_hyperelliptic(c, kind);  // raises NoSuchInvolution if absent
        return 0;                         // fixed-point free: nothing to lie over
    }
    validate_differential(c, q);
    long long total = 0;
    for (const Oval& o : ovals(c)) total += track_fixed_circles(c, q, o, opts);
    return total;
}

}  // namespace hitreal
