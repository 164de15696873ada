#include "hitreal/spectral.hpp"

#include "hitreal/curve.hpp"

namespace hitreal {

std::string to_string(const SpectralPoint& x) {
    if (x.infinite) return "inf";
    return to_string(x.value);
}

SpectralPoint parse_spectral_point(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t == "inf" || t == "oo" || t == "infinity") return SpectralPoint::inf();
    auto z = parse_complex(t);
    if (!z) raise(Errc::ParseError, "not a point of P^1: '" + text + "'");
    return SpectralPoint::at(*z);
}

bool check_reality(const QuadDifferential& q) {
    if (q.a1.is_real_point() && q.a2.is_real_point()) return true;
    if (q.a1.infinite || q.a2.infinite) return false;
    return q.a2.value == q.a1.value.conj();
}

void validate_differential(const HyperellipticCurve& c, const QuadDifferential& q) {
    if (q.sign != 1 && q.sign != -1) raise(Errc::ParseError, "sign must be +1 or -1");
    if (!check_reality(q))
        raise(Errc::RealityViolation,
              "zeros {" + to_string(q.a1) + ", " + to_string(q.a2) +
                  "} are not closed under conjugation");
    if (q.a1 == q.a2) raise(Errc::NonSimpleZeros, "a1 = a2 = " + to_string(q.a1));
    for (const SpectralPoint* a : {&q.a1, &q.a2}) {
        if (a->infinite) continue;
        ComplexQ v = c.p.eval(a->value);
        if (v.re == 0 && v.im == 0)
            raise(Errc::NonSimpleZeros, "zero at branch point z = " + to_string(*a));
    }
    int n_inf = (q.a1.infinite ? 1 : 0) + (q.a2.infinite ? 1 : 0);
    int ord_inf = 2 * (c.g - 2) + n_inf;
    if (ord_inf > 1)
        raise(Errc::NonSimpleZeros, "zero of order " + std::to_string(ord_inf) +
                                        " at each point over infinity (genus " +
                                        std::to_string(c.g) + ")");
}

namespace {

// Index of the sign-profile segment whose interior contains x (x not a root).
int segment_containing(SignProfile& prof, const Rational& x) {
    int m = prof.roots.real_count();
    if (m == 0) return 0;
    int below = 0;
    for (int j = 0; j < m; ++j) {
        int cmp = compare_to_root(prof.p, prof.roots.real_roots[j], x);
        if (cmp == 0) return -1;
        if (cmp > 0) ++below;
    }
    if (below == 0 || below == m) return m - 1;  // wrap segment through infinity
    return below - 1;
}

// Sign of the numerator prod (x - a_i) over the finite zeros, exact.
int numerator_sign_at(const QuadDifferential& q, const Rational& x) {
    ComplexQ prod(Rational(1));
    for (const SpectralPoint* a : {&q.a1, &q.a2}) {
        if (a->infinite) continue;
        prod = prod * (ComplexQ(x) - a->value);
    }
    return sign_of(prod.re);  // conjugation closure keeps the product real
}

}  // namespace

SpectralInvariants analyze(const HyperellipticCurve& c, const QuadDifferential& q,
                           InvolutionKind kind) {
    if (kind == InvolutionKind::ConjSigmaF) {
        // (w,z) -> (-conj w, conj z) on w^2 = p is (v,z) -> (conj v, conj z)
        // on v^2 = -p via v = iw, and q = sign N/p dz^2 = (-sign) N/(-p) dz^2.
        QuadDifferential flipped = q;
        flipped.sign = -q.sign;
        return analyze(build_curve(-c.p), flipped, InvolutionKind::ConjF);
    }

    validate_differential(c, q);
    Classification cls = classify_hyperelliptic(c, kind);

    SpectralInvariants out;
    out.n = cls.inv.n;
    out.a = cls.inv.a;
    out.g_S = 1 + 4 * (c.g - 1);

    if (kind != InvolutionKind::ConjF) {
        // Fixed-point-free involutions: no ovals, and no zero is fixed by
        // z -> -1/conj(z) (that would need |z|^2 = -1).
        return out;
    }

    std::vector<Oval> ovs = ovals(c);
    out.oval_zero_counts.assign(ovs.size(), 0);
    SignProfile prof = c.profile;

    for (const SpectralPoint* a : {&q.a1, &q.a2}) {
        if (a->infinite) {
            // The two points over infinity have w/z^(g+1) -> +-sqrt(lc): real
            // (hence fixed) exactly when the leading coefficient is positive.
            if (c.lc_sign <= 0) continue;
            for (const Oval& o : ovs)
                if (o.through_inf || o.full_circle) out.oval_zero_counts[o.index] += 2;
        } else if (a->value.is_real()) {
            const Rational& x = a->value.re;
            if (sign_of(c.p.eval(x)) <= 0) continue;  // w imaginary: the two lifts are swapped
            int seg = segment_containing(prof, x);
            for (const Oval& o : ovs)
                if (o.segment == seg) out.oval_zero_counts[o.index] += 2;
        }
        // Non-real zeros lie off the real locus and pair with their conjugates.
    }

    for (const Oval& o : ovs) {
        int zeros = out.oval_zero_counts[o.index];
        out.u += zeros;
        if (zeros > 0) continue;
        Rational x = prof.sample(o.segment);
        int s = q.sign * numerator_sign_at(q, x) * sign_of(c.p.eval(x));
        if (s > 0)
            out.n_plus += o.upstairs_circles;
        else
            out.n_minus += o.upstairs_circles;
    }
    out.n_zero = out.n_plus + out.n_minus;
    out.n_S = 2 * out.n_plus + out.u / 2;
    return out;
}

int differential_sign_at(const HyperellipticCurve& c, const QuadDifferential& q,
                         const Rational& x) {
    int ps = sign_of(c.p.eval(x));
    if (ps == 0) return 0;
    return q.sign * numerator_sign_at(q, x) * ps;
}

long long spectral_genus(int n, int g) { return 1LL + 1LL * n * n * (g - 1); }

long long fixed_determinant_degree(int n, int g) { return 1LL * n * (n - 1) * (g - 1); }

long long fibre_dim(Group grp, int n, int g) {
    if (grp == Group::GL) return 1LL + 1LL * n * n * (g - 1);
    return (1LL * n * n - 1) * (g - 1);
}

}  // namespace hitreal
