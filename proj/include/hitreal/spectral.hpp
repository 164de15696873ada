#pragma once

#include <string>
#include <vector>

#include "hitreal/klein.hpp"

namespace hitreal {

// Zero datum of the rank-2 spectral construction: a point of P^1, either a
// finite complex rational or infinity.
struct SpectralPoint {
    bool infinite = false;
    ComplexQ value;

    static SpectralPoint inf() { return SpectralPoint{true, ComplexQ(Rational(0))}; }
    static SpectralPoint at(ComplexQ v) { return SpectralPoint{false, std::move(v)}; }
    static SpectralPoint at(Rational v) { return SpectralPoint{false, ComplexQ(std::move(v))}; }

    bool is_real_point() const { return infinite || value.is_real(); }
    friend bool operator==(const SpectralPoint& x, const SpectralPoint& y) {
        if (x.infinite != y.infinite) return false;
        return x.infinite || x.value == y.value;
    }
};

std::string to_string(const SpectralPoint& x);
SpectralPoint parse_spectral_point(const std::string& text);  // "inf" or a complex literal

// q = sign * (z - a1)(z - a2) (dz)^2 / w^2; a factor with a_i = inf is omitted.
// On a genus-2 curve this has the 4g - 4 = 4 simple zeros z^-1(a1) + z^-1(a2).
struct QuadDifferential {
    SpectralPoint a1, a2;
    int sign = 1;
};

// Reality condition f*(conj q) = q: true iff {a1, a2} is closed under
// conjugation (both real points of RP^1, or a conjugate pair).
bool check_reality(const QuadDifferential& q);

// Simple-zero preconditions shared by analyze and the monodromy oracle.
// Errors: RealityViolation when check_reality fails; NonSimpleZeros when
// a1 = a2, when some a_i is a branch point, or when the zero at infinity has
// order 2(g-2) + #{infinite a_i} > 1 (any genus > 2).
void validate_differential(const HyperellipticCurve& c, const QuadDifferential& q);

// Sign analysis of q along the fixed circles of the involution.
struct SpectralInvariants {
    int n_plus = 0;   // fixed circles with q nonvanishing and positive
    int n_minus = 0;  // fixed circles with q nonvanishing and negative
    int n_zero = 0;   // fixed circles carrying no zero of q (= n_plus + n_minus)
    int u = 0;        // zeros of q fixed by the involution
    std::vector<int> oval_zero_counts;  // fixed zeros per oval, each even
    int n_S = 0;      // fixed circles upstairs in the spectral curve: 2*n_plus + u/2
    int g_S = 0;      // spectral genus 1 + 4(g-1)
    int n = 0, a = 0;  // invariants of the base involution, for convenience
};

SpectralInvariants analyze(const HyperellipticCurve& c, const QuadDifferential& q,
                           InvolutionKind kind = InvolutionKind::ConjF);

// Exact sign of q1(x) = sign * prod(x - a_i) / p(x) at a rational x that is
// neither a root of p nor a zero of q; 0 exactly at the zeros of q1.
int differential_sign_at(const HyperellipticCurve& c, const QuadDifferential& q,
                         const Rational& x);

// Closed-form quantities of the rank-n spectral construction.
long long spectral_genus(int n, int g);          // 1 + n^2 (g - 1)
long long fixed_determinant_degree(int n, int g);  // n (n - 1) (g - 1)
enum class Group { GL, SL };
long long fibre_dim(Group grp, int n, int g);  // GL: 1 + n^2(g-1); SL: (n^2-1)(g-1)

}  // namespace hitreal
