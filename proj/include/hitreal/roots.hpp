#pragma once

#include <vector>

#include "hitreal/polynomial.hpp"

namespace hitreal {

// A certified real root of a square-free polynomial. Either an exact rational
// value, or an open isolating interval (lo, hi) containing exactly one root,
// with p(lo) and p(hi) nonzero of opposite sign.
struct RealRoot {
    bool exact = false;
    Rational value;
    Rational lo, hi;

    Rational approx() const { return exact ? value : (lo + hi) / 2; }
    Rational low() const { return exact ? value : lo; }
    Rational high() const { return exact ? value : hi; }
};

// Upper-half-plane representative of a conjugate pair, for reporting only.
// Counting and pairing facts are certified by the Sturm chain; the coordinates
// here are floating approximations with an error radius.
struct ComplexPairBox {
    double re = 0, im = 0, radius = 0;
};

// Sturm chain of a square-free integer-normalized polynomial.
// count_in(a, b) is the exact number of real roots in the open interval (a, b)
// assuming neither endpoint is a root.
class SturmChain {
  public:
    explicit SturmChain(const Poly& p);

    int sign_at(const Rational& x) const;  // sign of p(x)
    int count_in(const Rational& a, const Rational& b) const;
    int count_real() const;
    Rational root_bound() const { return bound_; }  // all real roots lie in (-bound_, bound_)

  private:
    int variations(const Rational& x) const;
    int variations_pos_inf() const;
    int variations_neg_inf() const;

    std::vector<std::vector<Integer>> chain_;  // primitive integer polynomials
    Rational bound_;
};

struct RootMultiset {
    Poly p;
    std::vector<RealRoot> real_roots;           // strictly ascending
    std::vector<ComplexPairBox> complex_pairs;  // ascending by (re, im)
    int degree = 0;
    Rational bound;  // Cauchy bound: every real root lies in (-bound, bound)

    int real_count() const { return static_cast<int>(real_roots.size()); }
    int k() const { return real_count() / 2; }  // real roots come in 2k for even-degree square-free p
};

bool is_square_free(const Poly& p);

// Isolates all roots. Raises NonSquareFree when p has a repeated root.
RootMultiset find_roots(const Poly& p);

// Shrinks the isolating interval below the given width (no-op for exact roots).
void refine_root(const Poly& p, RealRoot& r, const Rational& width);

// Exact trichotomy of x against the root; may refine r as a side effect and
// upgrades r to exact if x happens to be the root itself.
int compare_to_root(const Poly& p, RealRoot& r, const Rational& x);

// A rational strictly between two consecutive roots; refines both as needed.
Rational sample_between(const Poly& p, RealRoot& a, RealRoot& b);

}  // namespace hitreal
