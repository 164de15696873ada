#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hitreal/curve.hpp"

namespace hitreal {

// Anti-holomorphic involutions of the curve w^2 = p(z), p real:
//   ConjF           (w, z) -> ( conj w,  conj z)
//   ConjSigmaF      (w, z) -> (-conj w,  conj z)
//   AntipodalH      covers z -> -1/conj z (odd genus, antipodally closed branch set)
//   AntipodalSigmaH the other lift of the antipodal map
enum class InvolutionKind { ConjF, ConjSigmaF, AntipodalH, AntipodalSigmaH };

const char* kind_name(InvolutionKind k);
std::optional<InvolutionKind> parse_kind(const std::string& name);

// Topological invariants of an anti-holomorphic involution f on a genus-g
// surface: n = number of fixed circles, a = 0 if the complement of the fixed
// locus is disconnected, 1 otherwise.
struct KleinInvariants {
    int g = 0;
    int n = 0;
    int a = 0;
    InvolutionKind kind = InvolutionKind::ConjF;
};

// The realizability constraints:
//   0 <= n <= g + 1; n = 0 implies a = 1; n = g + 1 implies a = 0;
//   a = 0 implies n == g + 1 (mod 2).
bool validate_invariants(int g, int n, int a);

// All admissible (n, a) for genus g, lexicographically ordered.
std::vector<std::pair<int, int>> admissible_pairs(int g);

struct Classification {
    KleinInvariants inv;
    std::string note;  // set when a is decided by the direct complement count
};

// Computes (n, a) of the named involution directly from the certified root
// data: fixed circles from the sign profile (with the sheet monodromy through
// infinity for k = 0), and a from the number of components of the complement.
// Raises NoSuchInvolution for antipodal kinds at even genus or when the branch
// set is not closed under z -> -1/conj z.
Classification classify_hyperelliptic(const HyperellipticCurve& c, InvolutionKind kind);

}  // namespace hitreal
