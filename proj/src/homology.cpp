#include "hitreal/homology.hpp"

#include "hitreal/klein.hpp"

namespace hitreal {

std::string to_string(HomologyCase c) {
    switch (c) {
        case HomologyCase::Case1: return "Case1";
        case HomologyCase::Case2: return "Case2";
        case HomologyCase::Case3: return "Case3";
    }
    return "?";
}

ChainPresentation build_presentation(int g, int n, int a, int t, int u,
                                     const std::vector<int>& oval_zero_counts) {
    if (!validate_invariants(g, n, a))
        raise(Errc::InvalidCaseParams, "(n, a) = (" + std::to_string(n) + ", " +
                                           std::to_string(a) + ") is not admissible at genus " +
                                           std::to_string(g));
    if (t < 0 || u < 0 || 2 * t + u != 4 * g - 4)
        raise(Errc::InvalidCaseParams, "need 2t + u = 4g - 4, got t=" + std::to_string(t) +
                                           " u=" + std::to_string(u));
    if (static_cast<int>(oval_zero_counts.size()) != n)
        raise(Errc::InvalidCaseParams, "assignment must list one count per oval");
    int total = 0;
    for (int c : oval_zero_counts) {
        if (c < 0 || c % 2 != 0)
            raise(Errc::OddOvalAssignment, "each oval carries an even number of fixed zeros");
        total += c;
    }
    if (total != u)
        raise(Errc::InvalidCaseParams, "assigned zeros sum to " + std::to_string(total) +
                                           ", expected u=" + std::to_string(u));

    ChainPresentation pres;
    pres.g = g;
    pres.n = n;
    pres.a = a;
    pres.t = t;
    pres.u = u;
    pres.oval_zero_counts = oval_zero_counts;
    for (int c : oval_zero_counts)
        if (c == 0) ++pres.n0;

    if (a == 0) {
        pres.which = HomologyCase::Case1;
        pres.r = n - 1;
        pres.s = (g - n + 1) / 2;
    } else if ((g - n) % 2 == 0) {
        pres.which = HomologyCase::Case2;
        pres.r = n;
        pres.s = (g - n) / 2;
    } else {
        pres.which = HomologyCase::Case3;
        pres.r = n;
        pres.s = (g - n - 1) / 2;
    }

    // Generator layout: [A_i B_i A'_i B'_i] x s, [A''_j B''_j] x r,
    // [C_k C'_k] x t, [D_l] x u, then X, Y in Case3.
    auto add = [&pres](const std::string& base, int idx) {
        pres.names.push_back(base + std::to_string(idx));
        return static_cast<int>(pres.names.size()) - 1;
    };
    std::vector<int> A(pres.s), B(pres.s), Ap(pres.s), Bp(pres.s);
    for (int i = 0; i < pres.s; ++i) {
        A[i] = add("A", i);
        B[i] = add("B", i);
        Ap[i] = add("A'", i);
        Bp[i] = add("B'", i);
    }
    std::vector<int> App(pres.r), Bpp(pres.r);
    for (int j = 0; j < pres.r; ++j) {
        App[j] = add("A''", j);
        Bpp[j] = add("B''", j);
    }
    std::vector<int> C(t), Cp(t);
    for (int k = 0; k < t; ++k) {
        C[k] = add("C", k);
        Cp[k] = add("C'", k);
    }
    std::vector<int> D(u);
    for (int l = 0; l < u; ++l) D[l] = add("D", l);
    int X = -1, Y = -1;
    if (pres.which == HomologyCase::Case3) {
        X = add("X", 0);
        Y = add("Y", 0);
    }

    int N = pres.generator_count();
    if (N != 6 * g - 4) raise(Errc::InvalidCaseParams, "generator count mismatch");
    auto bit = [](int i) { return gf2::Vec(1) << i; };

    // Fixed zeros packed per oval: oval j owns a consecutive block of D's.
    // In Case1 the handle generators A''_j exist for ovals 0..n-2; the last
    // oval is the boundary of the quotient surface and has no handle.
    std::vector<gf2::Vec> oval_D(n, 0);
    {
        int next = 0;
        for (int j = 0; j < n; ++j)
            for (int c = 0; c < oval_zero_counts[j]; ++c) oval_D[j] |= bit(D[next++]);
    }

    pres.theta_col.assign(N, 0);
    for (int i = 0; i < pres.s; ++i) {
        gf2::Vec pair_a = bit(A[i]) | bit(Ap[i]);
        gf2::Vec pair_b = bit(B[i]) | bit(Bp[i]);
        pres.theta_col[A[i]] = pair_a;
        pres.theta_col[Ap[i]] = pair_a;
        pres.theta_col[B[i]] = pair_b;
        pres.theta_col[Bp[i]] = pair_b;
    }
    for (int k = 0; k < t; ++k) {
        gf2::Vec pair_c = bit(C[k]) | bit(Cp[k]);
        pres.theta_col[C[k]] = pair_c;
        pres.theta_col[Cp[k]] = pair_c;
    }
    for (int l = 0; l < u; ++l) pres.theta_col[D[l]] = 0;
    for (int j = 0; j < pres.r; ++j) pres.theta_col[App[j]] = oval_D[j];

    gf2::Vec sum_App = 0;
    for (int j = 0; j < pres.r; ++j) sum_App |= bit(App[j]);
    gf2::Vec sum_C = 0;
    for (int k = 0; k < t; ++k) sum_C |= bit(C[k]);

    switch (pres.which) {
        case HomologyCase::Case1:
            for (int j = 0; j < pres.r; ++j) pres.theta_col[Bpp[j]] = 0;
            break;
        case HomologyCase::Case2:
            for (int j = 0; j < pres.r; ++j) pres.theta_col[Bpp[j]] = sum_App ^ sum_C;
            break;
        case HomologyCase::Case3:
            for (int j = 0; j < pres.r; ++j) pres.theta_col[Bpp[j]] = bit(Y);
            pres.theta_col[X] = 0;
            pres.theta_col[Y] = sum_App;
            break;
    }

    for (int k = 0; k < t; ++k) pres.relation ^= bit(C[k]) | bit(Cp[k]);
    for (int l = 0; l < u; ++l) pres.relation ^= bit(D[l]);
    // omega is 1 exactly on the branch-point loops C_k, C'_k, D_l, which is
    // also the support of the relation.
    pres.omega = pres.relation;
    return pres;
}

namespace {

// dim {x : theta x in <R>, extra omega constraint optional} before the
// quotient by <R>. R lies in ker theta and ker omega, so the quotient
// removes exactly one dimension.
int line_preimage_dim(const ChainPresentation& pres, bool with_omega) {
    int N = pres.generator_count();
    gf2::Mat theta;
    theta.n = N;
    theta.col = pres.theta_col;
    std::vector<gf2::Vec> rows = gf2::equation_rows(theta);
    gf2::Vec rhs = pres.relation;  // target line spanned by R
    if (with_omega) {
        rows.push_back(pres.omega);  // omega(x) = 0 appended with rhs bit 0
    }
    int ker = N - gf2::rank(rows, N);
    std::vector<gf2::Vec> aug = rows;
    bool hit = true;
    {
        // solvable with rhs (R, 0)?
        int base = gf2::rank(rows, N);
        for (int i = 0; i < N; ++i)
            if (rhs >> i & 1) aug[i] |= gf2::Vec(1) << N;
        hit = gf2::rank(std::move(aug), N + 1) == base;
    }
    return ker + (hit ? 1 : 0);
}

}  // namespace

int theta_kernel_dim(const ChainPresentation& pres) {
    return line_preimage_dim(pres, false) - 1;
}

int sl2_exponent(const ChainPresentation& pres) {
    if (pres.u == 0)
        raise(Errc::NoFixedBranchPoint,
              "no branch point is fixed by the involution (u = 0)");
    int invariant_dim = line_preimage_dim(pres, true) - 1;
    return invariant_dim - (3 * pres.g - 3);
}

long long sigma_invariants_dim(int g) { return 6LL * g - 6; }

std::string dump_theta(const ChainPresentation& pres) {
    int N = pres.generator_count();
    std::string out;
    for (int j = 0; j < N; ++j) {
        out += pres.names[j];
        out += ": ";
        for (int i = 0; i < N; ++i) out += (pres.theta_col[j] >> i & 1) ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace hitreal
