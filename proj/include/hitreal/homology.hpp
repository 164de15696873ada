#pragma once

#include <string>
#include <vector>

#include "hitreal/errors.hpp"
#include "hitreal/gf2.hpp"

namespace hitreal {

// The three shapes of the quotient surface with boundary, by the invariants
// of the base involution: Case1 when the complement of the fixed set is
// disconnected (a=0), Case2/Case3 when it is connected, split by the parity
// of g - n.
enum class HomologyCase { Case1, Case2, Case3 };

std::string to_string(HomologyCase c);

// GF(2) chain-level model of H_1 of the complement of the branch divisor in
// the base curve: named generators, the single boundary relation, the
// covering class omega, and the involution action theta = f_* + 1.
//
// Generators: handle quadruples A_i, B_i, A'_i, B'_i (i < s, swapped in
// pairs by f), oval handles A''_j, B''_j (j < r), branch-point loop pairs
// C_k, C'_k (k < t, swapped by f), fixed branch-point loops D_l (l < u), and
// in Case3 the extra pair X, Y. The relation is sum(C_k + C'_k) + sum(D_l).
struct ChainPresentation {
    int g = 0, n = 0, a = 0;
    int s = 0, r = 0, t = 0, u = 0;
    HomologyCase which = HomologyCase::Case1;
    std::vector<std::string> names;     // size N = 6g - 4
    std::vector<gf2::Vec> theta_col;    // theta(e_j), column-major
    gf2::Vec relation = 0;              // R as a bit vector over the generators
    gf2::Vec omega = 0;                 // functional: 1 on C_k, C'_k, D_l
    std::vector<int> oval_zero_counts;  // size n, each even, summing to u
    int n0 = 0;                         // ovals carrying no assigned zero

    int generator_count() const { return static_cast<int>(names.size()); }
    int dim() const { return generator_count() - 1; }  // 6g - 5 after the relation
};

// Builds the presentation for Klein invariants (n, a) at genus g with t
// swapped branch-point pairs and u fixed branch points, 2t + u = 4g - 4,
// fixed zeros distributed over the ovals by the given even counts.
// Errors: InvalidCaseParams, OddOvalAssignment. u = 0 is accepted so the
// downstream fixed-branch-point requirement has something to reject.
ChainPresentation build_presentation(int g, int n, int a, int t, int u,
                                     const std::vector<int>& oval_zero_counts);

// dim ker(theta) on the quotient by the relation, by Gaussian elimination.
int theta_kernel_dim(const ChainPresentation& pres);

// Exponent d of the SL(2) component count 2^d: the dimension of
// {x in ker omega : theta x in <R>} / <R> minus the Prym dimension 3g - 3.
// Errors: NoFixedBranchPoint when u = 0.
int sl2_exponent(const ChainPresentation& pres);

// dim of the sigma-invariant classes upstairs: H^1 of the complement mod the
// covering class, 6g - 6.
long long sigma_invariants_dim(int g);

// Plain bit-row dump of the theta action for fixtures and diagnostics.
std::string dump_theta(const ChainPresentation& pres);

}  // namespace hitreal
