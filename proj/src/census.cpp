#include "hitreal/census.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <utility>

#include "hitreal/counting.hpp"
#include "hitreal/errors.hpp"
#include "hitreal/monodromy.hpp"

namespace hitreal {

std::string to_string(const InvariantTuple& t) {
    return "(" + std::to_string(t.n) + ", " + std::to_string(t.a) + ", " +
           std::to_string(t.n_plus) + ", " + std::to_string(t.u_half) + ")";
}

bool tuple_admissible(int g, const InvariantTuple& t) {
    if (!validate_invariants(g, t.n, t.a)) return false;
    if (t.n_plus < 0 || t.n_plus > t.n) return false;
    if (t.u_half < 0 || t.u_half > 2 * g - 2) return false;
    if (t.u_half > 0 && t.n_plus >= t.n) return false;
    return true;
}

std::vector<InvariantTuple> admissible_tuples(int g) {
    if (g < 2) raise(Errc::UnsupportedGenus, "tuple enumeration needs genus >= 2");
    std::vector<InvariantTuple> out;
    for (int n = 0; n <= g + 1; ++n)
        for (int a = 0; a <= 1; ++a)
            for (int np = 0; np <= n; ++np)
                for (int uh = 0; uh <= 2 * g - 2; ++uh) {
                    InvariantTuple t{n, a, np, uh};
                    if (tuple_admissible(g, t)) out.push_back(t);
                }
    return out;  // the loop nest is already lexicographic
}

namespace {

using PointPair = std::pair<SpectralPoint, SpectralPoint>;

bool is_branch_point(const HyperellipticCurve& c, const SpectralPoint& x) {
    if (x.infinite) return false;  // deg p is even, so infinity never branches
    ComplexQ v = c.p.eval(x.value);
    return v.re == 0 && v.im == 0;
}

// Second interior point of the segment containing s: step right, halving
// until the point lands strictly on the same side of every real root as s.
Rational second_sample(HyperellipticCurve& c, const Rational& s) {
    Rational step(1);
    auto& roots = c.profile.roots.real_roots;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rational x = s + step;
        bool same_segment = true;
        for (auto& r : roots) {
            if (compare_to_root(c.p, r, x) != compare_to_root(c.p, r, s)) {
                same_segment = false;
                break;
            }
        }
        if (same_segment) return x;
        step = step / Rational(2);
    }
    raise(Errc::SampleDegeneracy, "no room for a second sample beside " + to_string(s));
}

std::vector<PointPair> candidate_pairs(HyperellipticCurve& c) {
    std::vector<Rational> seg;
    seg.reserve(static_cast<size_t>(c.profile.segment_count()));
    for (int i = 0; i < c.profile.segment_count(); ++i) seg.push_back(c.profile.sample(i));

    std::vector<PointPair> out;
    for (size_t i = 0; i < seg.size(); ++i)
        for (size_t j = i + 1; j < seg.size(); ++j)
            out.emplace_back(SpectralPoint::at(seg[i]), SpectralPoint::at(seg[j]));
    for (size_t i = 0; i < seg.size(); ++i)
        out.emplace_back(SpectralPoint::at(seg[i]), SpectralPoint::at(second_sample(c, seg[i])));
    for (size_t i = 0; i < seg.size(); ++i)
        out.emplace_back(SpectralPoint::at(seg[i]), SpectralPoint::inf());
    const ComplexQ conj_bases[] = {
        ComplexQ(Rational(0), Rational(1)),
        ComplexQ(Rational(1), Rational(1)),
        ComplexQ(Rational(0), Rational(2)),
        ComplexQ(Rational(1, 2), Rational(3, 2)),
    };
    for (const ComplexQ& b : conj_bases) {
        SpectralPoint a1 = SpectralPoint::at(b);
        if (!is_branch_point(c, a1)) out.emplace_back(a1, SpectralPoint::at(b.conj()));
    }
    return out;
}

// lc * prod_{j<=k} (z^2 - j^2) * prod_{k<j<=g+1} (z^2 + j^2): exactly 2k real
// branch points, the rest in conjugate pairs, all at distinct moduli.
Poly grid_poly(int g, int k, int lc) {
    Poly p = Poly::constant(Rational(lc));
    for (int j = 1; j <= g + 1; ++j) {
        Rational c0 = (j <= k) ? Rational(-j * j) : Rational(j * j);
        p = p * Poly(std::vector<Rational>{c0, Rational(0), Rational(1)});
    }
    return p;
}

Rational random_rational(std::mt19937_64& rng, int num_range, int max_den) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

HyperellipticCurve random_curve(int g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kdist(0, g + 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (;;) {
        int k = kdist(rng);
        Rational lc(coin(rng) ? 1 : -1);
        std::vector<ComplexQ> roots;
        for (int i = 0; i < 2 * k; ++i) roots.emplace_back(random_rational(rng, 12, 2));
        for (int i = 0; i < g + 1 - k; ++i) {
            Rational x = random_rational(rng, 3, 2);
            Rational y = random_rational(rng, 3, 2);
            if (y == 0) y = Rational(1);
            if (y < 0) y = -y;
            roots.emplace_back(x, y);
            roots.emplace_back(x, -y);
        }
        try {
            return build_curve(poly_from_roots(roots, lc));
        } catch (const Error&) {
            // coincident roots; redraw
        }
    }
}

PointPair random_pair(const HyperellipticCurve& c, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> type(0, 3);
    for (;;) {
        int t = type(rng);
        if (t <= 1) {  // two finite real zeros carry the richest sign patterns
            SpectralPoint a1 = SpectralPoint::at(random_rational(rng, 24, 3));
            SpectralPoint a2 = SpectralPoint::at(random_rational(rng, 24, 3));
            if (a1 == a2 || is_branch_point(c, a1) || is_branch_point(c, a2)) continue;
            return {a1, a2};
        }
        if (t == 2) {
            SpectralPoint a1 = SpectralPoint::at(random_rational(rng, 24, 3));
            if (is_branch_point(c, a1)) continue;
            return {a1, SpectralPoint::inf()};
        }
        Rational y = random_rational(rng, 6, 2);
        if (y == 0) continue;
        if (y < 0) y = -y;
        ComplexQ b(random_rational(rng, 6, 2), y);
        SpectralPoint a1 = SpectralPoint::at(b);
        if (is_branch_point(c, a1)) continue;
        return {a1, SpectralPoint::at(b.conj())};
    }
}

bool emit_grid_configs(HyperellipticCurve& c, long long& tried, const ConfigFn& fn) {
    // Kind is the outer loop so plain-conjugation hits win the first-found
    // witness slot; the sign-swapped lift only adds the curves with no ovals.
    std::vector<PointPair> pairs = candidate_pairs(c);
    for (InvolutionKind kind : {InvolutionKind::ConjF, InvolutionKind::ConjSigmaF}) {
        for (const PointPair& pr : pairs) {
            for (int sign : {+1, -1}) {
                ++tried;
                if (fn(c, QuadDifferential{pr.first, pr.second, sign}, kind)) return true;
            }
        }
    }
    return false;
}

std::optional<InvariantTuple> tuple_of(const HyperellipticCurve& c, const QuadDifferential& q,
                                       InvolutionKind kind) {
    try {
        SpectralInvariants s = analyze(c, q, kind);
        return InvariantTuple{s.n, s.a, s.n_plus, s.u / 2};
    } catch (const Error&) {
        return std::nullopt;  // non-simple zeros and similar rejections
    }
}

std::string search_note(const SearchBudget& budget, long long tried) {
    std::string s = "no hit in " + std::to_string(tried) + " configurations (";
    if (budget.use_grid) s += "full combinatorial grid plus ";
    s += std::to_string(budget.random_configs) + " random draws, seed " +
         std::to_string(budget.seed) + ")";
    return s;
}

}  // namespace

long long enumerate_configurations(int g, const SearchBudget& budget, const ConfigFn& fn) {
    if (g < 2) raise(Errc::UnsupportedGenus, "configuration search needs genus >= 2");
    long long tried = 0;
    if (budget.use_grid) {
        for (int k = 0; k <= g + 1; ++k)
            for (int lc : {+1, -1}) {
                HyperellipticCurve c = build_curve(grid_poly(g, k, lc));
                if (emit_grid_configs(c, tried, fn)) return tried;
            }
    }
    if (budget.random_configs > 0) {
        std::mt19937_64 rng(budget.seed);
        // Random draws stay in the ConjF chart: a curve pool with both leading
        // signs reaches the same tuples as the sign-swapped lift would, without
        // rebuilding the mirrored curve for every draw.
        std::vector<HyperellipticCurve> pool;
        const size_t pool_size = 64;
        pool.reserve(pool_size);
        for (size_t i = 0; i < pool_size; ++i) pool.push_back(random_curve(g, rng));
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        std::uniform_int_distribution<int> coin(0, 1);
        for (long long i = 0; i < budget.random_configs; ++i) {
            HyperellipticCurve& c = pool[pick(rng)];
            PointPair pr = random_pair(c, rng);
            int sign = coin(rng) ? 1 : -1;
            ++tried;
            if (fn(c, QuadDifferential{pr.first, pr.second, sign}, InvolutionKind::ConjF))
                return tried;
        }
    }
    return tried;
}

bool verify_witness(const Witness& w, const InvariantTuple& t) {
    try {
        HyperellipticCurve c = build_curve(w.p);
        SpectralInvariants s = analyze(c, w.q, w.kind);
        if (InvariantTuple{s.n, s.a, s.n_plus, s.u / 2} != t) return false;
        if (count_nS_oracle(c, w.q, w.kind) != s.n_S) return false;
        ComponentCount via_ns = count_gl(s.n_S, s.g_S);
        ComponentCount via_u = count_gl2(s.n_plus, s.u);
        return via_ns.count == via_u.count && via_ns.d == via_u.d;
    } catch (const Error&) {
        return false;
    }
}

RealizeResult realize(const InvariantTuple& t, int g, const SearchBudget& budget) {
    if (!tuple_admissible(g, t))
        raise(Errc::InvalidQuery,
              "tuple " + to_string(t) + " is not admissible at genus " + std::to_string(g));
    RealizeResult res;
    res.tuple = t;
    res.tried = enumerate_configurations(
        g, budget,
        [&](const HyperellipticCurve& c, const QuadDifferential& q, InvolutionKind kind) {
            std::optional<InvariantTuple> got = tuple_of(c, q, kind);
            if (!got || *got != t) return false;
            Witness w{c.p, q, kind};
            if (!verify_witness(w, t)) return false;
            res.found = true;
            res.witness = std::move(w);
            return true;
        });
    if (!res.found) res.note = search_note(budget, res.tried);
    return res;
}

CensusReport census(int g, const SearchBudget& budget) {
    CensusReport rep;
    rep.g = g;
    rep.budget = budget;
    std::vector<InvariantTuple> tuples = admissible_tuples(g);
    rep.results.reserve(tuples.size());
    for (const InvariantTuple& t : tuples) {
        RealizeResult r;
        r.tuple = t;
        rep.results.push_back(std::move(r));
    }

    size_t remaining = tuples.size();
    long long seen = 0;
    rep.tried_total = enumerate_configurations(
        g, budget,
        [&](const HyperellipticCurve& c, const QuadDifferential& q, InvolutionKind kind) {
            ++seen;
            std::optional<InvariantTuple> got = tuple_of(c, q, kind);
            if (!got) return false;
            auto it = std::lower_bound(tuples.begin(), tuples.end(), *got);
            if (it == tuples.end() || *it != *got) return false;
            RealizeResult& slot = rep.results[static_cast<size_t>(it - tuples.begin())];
            if (slot.found) return false;
            Witness w{c.p, q, kind};
            if (!verify_witness(w, *got)) return false;
            slot.found = true;
            slot.witness = std::move(w);
            slot.tried = seen;
            --remaining;
            return remaining == 0;
        });
    for (RealizeResult& r : rep.results) {
        if (!r.found) {
            r.tried = rep.tried_total;
            r.note = search_note(budget, rep.tried_total);
            rep.missing.push_back(r.tuple);
        }
    }
    return rep;
}

}  // namespace hitreal
