#pragma once

#include <optional>
#include <random>
#include <string>

#include "hitreal/errors.hpp"
#include "hitreal/gf2.hpp"

namespace hitreal {

// Connected-component count in the power-of-two normal form 2^d, together
// with the inputs that produced it.
struct ComponentCount {
    std::string group;
    int d = 0;
    long long count = 1;
    // inputs echoed; -1 marks a field that does not apply
    int n_S = -1, g_S = -1, n_plus = -1, n_zero = -1, u = -1;
};

// Components of the fixed locus of the lifted involution on a rank-2
// GL-fibre torus of dimension g_S: 2^(n_S - 1) when the lift has fixed
// circles, otherwise 1 or 2 by the parity of g_S.
ComponentCount count_gl(int n_S, int g_S);

// Same count through the curve data: d = 2 n_plus + u/2 - 1 when positive,
// d = 1 otherwise. Errors: OddU.
ComponentCount count_gl2(int n_plus, int u);

// SL(2) fibre components 2^(n_zero + u/2 - 1); proven only when some branch
// point is fixed. Errors: OddU; NotApplicable when u = 0.
ComponentCount count_sl2(int n_zero, int u);

// Inverts count = 2^(m+d) for an anti-holomorphic involution on an
// m-dimensional torus. Errors: NotPowerOfTwoForm when no d in [0, m] fits.
int torus_d(int m, long long fixed_two_torsion);

enum class RealityType { Real, Quaternionic, NeedsHolonomy, NeedsEpsilon1 };

std::string to_string(RealityType t);

// Inputs for the real/quaternionic decision. rho_mu is the holonomy sign
// of the ruling line bundle, consulted only on the u = 0 path.
struct RealityTypeQuery {
    int u = 0;
    std::optional<int> rho_mu;
    bool f_has_fixed_points = true;
};

// Decision rule: a fixed branch point forces a real structure; without one
// the holonomy sign decides; fixed-point-free base involutions leave the
// first obstruction undetermined. Errors: OddU; InvalidQuery when u > 0 is
// combined with rho_mu or with a fixed-point-free involution.
RealityType real_or_quaternionic(const RealityTypeQuery& query);

// Brute-force side of the torus lemma, used as the oracle for torus_d.
// theta(x) = M x + c on the 2-torsion (Z_2)^(2m); counts fixed points exactly.
struct TorusInvolution {
    int m = 0;          // complex dimension; lattice rank 2m
    gf2::Mat mod2;      // involution matrix reduced mod 2
    gf2::Vec twice_c = 0;  // translation part doubled, i.e. 2c mod 2 on the half-lattice
};

// Random integral lattice involution with equal +-1 eigenspace dimensions:
// conjugate of a block diagonal of m blocks, each a sheet swap [[0,1],[1,0]]
// or a reflection diag(1,-1), by a random unimodular change of basis. The
// translation part is drawn from the image of M + 1 so that theta is
// conjugate to a linear involution (the geometric case).
TorusInvolution random_torus_involution(int m, std::mt19937_64& rng);

long long torus_fixed_two_torsion_bruteforce(const TorusInvolution& inv);

}  // namespace hitreal
