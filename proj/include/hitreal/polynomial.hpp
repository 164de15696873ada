#pragma once

#include <string>
#include <vector>

#include "hitreal/rational.hpp"

namespace hitreal {

// Dense univariate polynomial in z with exact rational coefficients.
// Invariant: coeffs has no trailing zeros; the zero polynomial has empty coeffs.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Rational v) { return Poly(std::vector<Rational>{std::move(v)}); }
    static Poly z() { return Poly({Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& lc() const { return c_.back(); }

    Rational eval(const Rational& x) const;
    ComplexQ eval(const ComplexQ& x) const;

    Poly derivative() const;

    // Coefficient reversal z^deg * p(1/z); used for behaviour at infinity.
    Poly reversed() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly scaled(const Rational& s) const;
    Poly pow(unsigned e) const;

    // Exact division; both quotient and remainder. Divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);

    // Text form with smallest-degree term first: "c0 + c1*z + ... + cd*z^d".
    std::string to_text() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Parses polynomial expressions over z with rational coefficients:
// "+", "-", "*", "^" (non-negative integer exponents), parentheses, and
// implicit multiplication by juxtaposition, e.g. "(z^2-1)(z^2-4)(z^2-9)".
// Throws Error(ParseError) on malformed input.
Poly parse_poly(const std::string& text);

// Monic product of (z - r) over the given closed-under-conjugation multiset,
// scaled by lc. Raises NotConjugationClosed if some non-real root is unpaired.
Poly poly_from_roots(const std::vector<ComplexQ>& roots, const Rational& lc);

}  // namespace hitreal
