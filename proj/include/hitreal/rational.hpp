#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "hitreal/errors.hpp"

namespace hitreal {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& x) { return x.sign(); }
inline int sign_of(const Integer& x) { return x.sign(); }

inline Rational rat_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Canonical text form: "n" for integers, "n/d" otherwise (d > 0).
std::string to_string(const Rational& x);

// Parses "n", "-n", "n/d", with optional surrounding whitespace.
std::optional<Rational> parse_rational(const std::string& text);

double to_double(const Rational& x);

// Complex number with exact rational real and imaginary parts.
struct ComplexQ {
    Rational re;
    Rational im;

    ComplexQ() = default;
    ComplexQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit ComplexQ(Rational r) : re(std::move(r)), im(0) {}

    bool is_real() const { return im == 0; }
    ComplexQ conj() const { return ComplexQ(re, -im); }

    friend bool operator==(const ComplexQ&, const ComplexQ&) = default;

    friend ComplexQ operator+(const ComplexQ& a, const ComplexQ& b) {
        return ComplexQ(a.re + b.re, a.im + b.im);
    }
    friend ComplexQ operator-(const ComplexQ& a, const ComplexQ& b) {
        return ComplexQ(a.re - b.re, a.im - b.im);
    }
    friend ComplexQ operator*(const ComplexQ& a, const ComplexQ& b) {
        return ComplexQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend ComplexQ operator/(const ComplexQ& a, const ComplexQ& b) {
        Rational n = b.re * b.re + b.im * b.im;  // b != 0 required
        return ComplexQ((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }
};

// Text form "a", "bi", "a+bi", "a-bi"; accepts "i", "-i" shorthands.
std::string to_string(const ComplexQ& z);
std::optional<ComplexQ> parse_complex(const std::string& text);

// Point of the real projective line: a rational or the single point at infinity.
struct ProjectivePoint {
    bool infinite = false;
    Rational value;  // meaningful only when finite

    static ProjectivePoint inf() { return ProjectivePoint{true, Rational(0)}; }
    static ProjectivePoint at(Rational v) { return ProjectivePoint{false, std::move(v)}; }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        if (a.infinite != b.infinite) return false;
        return a.infinite || a.value == b.value;
    }
};

std::string to_string(const ProjectivePoint& x);

}  // namespace hitreal
