#include "hitreal/counting.hpp"

namespace hitreal {

namespace {

long long pow2(int d) {
    if (d < 0 || d > 62) raise(Errc::InvalidQuery, "exponent out of range: " + std::to_string(d));
    return 1LL << d;
}

void require_even_u(int u) {
    if (u < 0 || u % 2 != 0) raise(Errc::OddU, "u must be even and nonnegative, got " + std::to_string(u));
}

}  // namespace

ComponentCount count_gl(int n_S, int g_S) {
    ComponentCount c;
    c.group = "GL(2)";
    c.n_S = n_S;
    c.g_S = g_S;
    if (n_S > 0) {
        c.d = n_S - 1;
        c.count = pow2(c.d);
    } else {
        c.d = g_S % 2 == 0 ? 0 : 1;
        c.count = pow2(c.d);
    }
    return c;
}

ComponentCount count_gl2(int n_plus, int u) {
    require_even_u(u);
    ComponentCount c;
    c.group = "GL(2)";
    c.n_plus = n_plus;
    c.u = u;
    int m = 2 * n_plus + u / 2;
    c.d = m > 0 ? m - 1 : 1;
    c.count = pow2(c.d);
    return c;
}

ComponentCount count_sl2(int n_zero, int u) {
    require_even_u(u);
    if (u == 0)
        raise(Errc::NotApplicable,
              "the SL(2) count requires a branch point fixed by the involution (u > 0)");
    ComponentCount c;
    c.group = "SL(2)";
    c.n_zero = n_zero;
    c.u = u;
    c.d = n_zero + u / 2 - 1;
    c.count = pow2(c.d);
    return c;
}

int torus_d(int m, long long fixed_two_torsion) {
    if (m < 1) raise(Errc::InvalidQuery, "torus dimension must be positive");
    for (int d = 0; d <= m; ++d)
        if (fixed_two_torsion == pow2(m + d)) return d;
    raise(Errc::NotPowerOfTwoForm, std::to_string(fixed_two_torsion) + " is not 2^(" +
                                       std::to_string(m) + "+d) for any 0 <= d <= " +
                                       std::to_string(m));
}

std::string to_string(RealityType t) {
    switch (t) {
        case RealityType::Real: return "Real";
        case RealityType::Quaternionic: return "Quaternionic";
        case RealityType::NeedsHolonomy: return "NeedsHolonomy";
        case RealityType::NeedsEpsilon1: return "NeedsEpsilon1";
    }
    return "?";
}

RealityType real_or_quaternionic(const RealityTypeQuery& query) {
    require_even_u(query.u);
    if (query.rho_mu && *query.rho_mu != 1 && *query.rho_mu != -1)
        raise(Errc::InvalidQuery, "rho_mu must be +1 or -1");
    if (query.u > 0) {
        if (!query.f_has_fixed_points)
            raise(Errc::InvalidQuery, "fixed zeros require a fixed-point set downstairs");
        if (query.rho_mu)
            raise(Errc::InvalidQuery, "holonomy sign applies only when no branch point is fixed");
        return RealityType::Real;
    }
    if (!query.f_has_fixed_points) return RealityType::NeedsEpsilon1;
    if (!query.rho_mu) return RealityType::NeedsHolonomy;
    return *query.rho_mu == 1 ? RealityType::Real : RealityType::Quaternionic;
}

TorusInvolution random_torus_involution(int m, std::mt19937_64& rng) {
    int n = 2 * m;
    gf2::Mat block = gf2::Mat::identity(n);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int b = 0; b < m; ++b) {
        if (coin(rng)) {
            // sheet swap [[0,1],[1,0]]; the reflection diag(1,-1) is the
            // identity mod 2, so the other branch keeps the identity columns
            block.col[2 * b] = gf2::Vec(1) << (2 * b + 1);
            block.col[2 * b + 1] = gf2::Vec(1) << (2 * b);
        }
    }
    gf2::Mat p, p_inv;
    gf2::random_invertible(n, rng, p, p_inv);
    TorusInvolution inv;
    inv.m = m;
    inv.mod2 = p * block * p_inv;
    std::uniform_int_distribution<gf2::Vec> any(0, (gf2::Vec(1) << n) - 1);
    gf2::Vec v0 = any(rng);
    inv.twice_c = inv.mod2.apply(v0) ^ v0;  // (M + 1) v0: translation conjugate to zero
    return inv;
}

long long torus_fixed_two_torsion_bruteforce(const TorusInvolution& inv) {
    int n = 2 * inv.m;
    long long count = 0;
    for (gf2::Vec v = 0; v < (gf2::Vec(1) << n); ++v)
        if ((inv.mod2.apply(v) ^ v) == inv.twice_c) ++count;
    return count;
}

}  // namespace hitreal
