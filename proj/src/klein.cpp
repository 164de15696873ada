#include "hitreal/klein.hpp"

#include "hitreal/errors.hpp"

namespace hitreal {

const char* kind_name(InvolutionKind k) {
    switch (k) {
        case InvolutionKind::ConjF: return "conj";
        case InvolutionKind::ConjSigmaF: return "conj-sigma";
        case InvolutionKind::AntipodalH: return "antipodal";
        case InvolutionKind::AntipodalSigmaH: return "antipodal-sigma";
    }
    return "?";
}

std::optional<InvolutionKind> parse_kind(const std::string& name) {
    if (name == "conj" || name == "conj_f" || name == "f") return InvolutionKind::ConjF;
    if (name == "conj-sigma" || name == "conj_sigma_f" || name == "sigma-f")
        return InvolutionKind::ConjSigmaF;
    if (name == "antipodal" || name == "antipodal_h" || name == "h") return InvolutionKind::AntipodalH;
    if (name == "antipodal-sigma" || name == "antipodal_sigma_h")
        return InvolutionKind::AntipodalSigmaH;
    return std::nullopt;
}

bool validate_invariants(int g, int n, int a) {
    if (g < 2 || n < 0 || (a != 0 && a != 1)) return false;
    if (n > g + 1) return false;
    if (n == 0 && a != 1) return false;
    if (n == g + 1 && a != 0) return false;
    if (a == 0 && (n - (g + 1)) % 2 != 0) return false;
    return true;
}

std::vector<std::pair<int, int>> admissible_pairs(int g) {
    std::vector<std::pair<int, int>> out;
    for (int n = 0; n <= g + 1; ++n)
        for (int a = 0; a <= 1; ++a)
            if (validate_invariants(g, n, a)) out.emplace_back(n, a);
    return out;
}

namespace {

// (n, a) of the plain conjugation on w^2 = q where q's sign data is given by
// segment signs (cyclic, wrap handled by the caller passing even-degree data).
// The fixed locus lies over the closed positive intervals; its complement is
// assembled from the two half-plane covers and the imaginary arcs over
// negative intervals.
struct ConjResult {
    int n;
    int a;
    bool complement_counted;  // true when a came from the component count
};

ConjResult classify_conj(int g, int lc_sign_effective, const std::vector<int>& segment_signs,
                         int conj_pair_count) {
    int positive = 0, negative = 0;
    for (int s : segment_signs) (s > 0 ? positive : negative)++;

    if (positive == 0) {
        // Empty fixed locus; the complement is the whole (connected) surface.
        return {0, 1, false};
    }

    int n;
    if (segment_signs.size() == 1) {
        // No real branch points: the fixed locus double-covers RP^1. The two
        // sheets w ~ +-z^(g+1) are exchanged across infinity iff g+1 is odd.
        n = (g % 2 == 0) ? 1 : 2;
    } else {
        n = positive;
    }

    // Complement components. The cover of a half plane containing a branch
    // point is connected (one node); with no interior branch points it has two
    // sheets (two nodes). Each negative interval carries two imaginary arcs
    // +-i sqrt|q| joining an upper-sheet node to the opposite lower-sheet
    // node, so it identifies (U+, L-) and (U-, L+) whatever the local phase.
    int components;
    if (negative == 0) {
        components = (conj_pair_count > 0) ? 2 : 4;
    } else if (conj_pair_count > 0) {
        components = 1;  // U and L each connected, any bridge joins them
    } else {
        components = 2;  // {U+, L-} and {U-, L+}
    }
    (void)lc_sign_effective;
    return {n, components == 1 ? 1 : 0, true};
}

bool antipodally_closed(const Poly& p) {
    // Branch set closed under z -> -1/z together with conjugation closure
    // (automatic for real coefficients) iff z^d p(-1/z) = (c0/cd) p(z) and
    // 0 is not a root (its partner would be infinity).
    int d = p.degree();
    if (p[0] == 0) return false;
    Rational lambda = p[0] / p[d];
    for (int i = 0; i <= d; ++i) {
        Rational lhs = (i % 2 == 0) ? p[d - i] : -p[d - i];
        if (lhs != lambda * p[i]) return false;
    }
    return true;
}

}  // namespace

Classification classify_hyperelliptic(const HyperellipticCurve& c, InvolutionKind kind) {
    Classification out;
    out.inv.g = c.g;
    out.inv.kind = kind;

    if (kind == InvolutionKind::AntipodalH || kind == InvolutionKind::AntipodalSigmaH) {
        if (c.g % 2 == 0)
            raise(Errc::NoSuchInvolution,
                  "antipodal involutions exist only in odd genus (lift squares to the "
                  "hyperelliptic involution in even genus)");
        if (!antipodally_closed(c.p))
            raise(Errc::NoSuchInvolution, "branch set is not closed under z -> -1/conj(z)");
        out.inv.n = 0;  // the antipodal map is fixed-point free, hence so is any lift
        out.inv.a = 1;
        return out;
    }

    std::vector<int> signs;
    signs.reserve(c.profile.segments.size());
    for (const auto& s : c.profile.segments) signs.push_back(s.sign);
    int conj_pairs = (c.p.degree() - c.roots().real_count()) / 2;

    // The sigma-twisted conjugation fixes points with w imaginary, which is the
    // plain conjugation of w^2 = -p.
    if (kind == InvolutionKind::ConjSigmaF)
        for (auto& s : signs) s = -s;
    int lc_eff = (kind == InvolutionKind::ConjSigmaF) ? -c.lc_sign : c.lc_sign;

    ConjResult r = classify_conj(c.g, lc_eff, signs, conj_pairs);
    out.inv.n = r.n;
    out.inv.a = r.a;
    if (r.complement_counted && c.k() == 0 && r.n == 2)
        out.note = "a determined by direct count of complement components";
    if (!validate_invariants(out.inv.g, out.inv.n, out.inv.a))
        raise(Errc::InvalidQuery, "internal: classification violates the realizability constraints");
    return out;
}

}  // namespace hitreal
