#include "hitreal/rational.hpp"

#include <cctype>

namespace hitreal {

std::string to_string(const Rational& x) {
    Integer num = numerator(x);
    Integer den = denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::optional<Rational> parse_rational(const std::string& text) {
    size_t i = 0, n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
    size_t digits_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_begin) return std::nullopt;
    // cpp_int's string constructor rejects a leading '+', so the sign is split off.
    Integer num(text.substr(digits_begin, i - digits_begin));
    if (negative) num = -num;
    Integer den = 1;
    skip_ws();
    if (i < n && text[i] == '/') {
        ++i;
        skip_ws();
        size_t dstart = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == dstart) return std::nullopt;
        den = Integer(text.substr(dstart, i - dstart));
        if (den == 0) return std::nullopt;
    }
    skip_ws();
    if (i != n) return std::nullopt;
    return Rational(num, den);
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_string(const ComplexQ& z) {
    if (z.im == 0) return to_string(z.re);
    std::string im_part;
    Rational ai = rat_abs(z.im);
    if (ai == 1)
        im_part = "i";
    else
        im_part = to_string(ai) + "i";
    if (z.re == 0) return (z.im < 0 ? "-" : "") + im_part;
    return to_string(z.re) + (z.im < 0 ? "-" : "+") + im_part;
}

std::optional<ComplexQ> parse_complex(const std::string& text) {
    // Strip whitespace once; the grammar is <rat>, <rat>i, or <rat>(+|-)<rat>i.
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) return std::nullopt;

    auto parse_part = [](const std::string& t, bool imag_unit_ok) -> std::optional<Rational> {
        if (!imag_unit_ok) return parse_rational(t);
        if (t == "i" || t == "+i") return Rational(1);
        if (t == "-i") return Rational(-1);
        if (!t.empty() && t.back() == 'i') return parse_rational(t.substr(0, t.size() - 1));
        return std::nullopt;
    };

    // Split at the last top-level +/- that is not the leading sign.
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') split = i;
    }
    if (split != std::string::npos) {
        auto re = parse_rational(s.substr(0, split));
        auto im = parse_part(s.substr(split), true);
        if (re && im) return ComplexQ(*re, *im);
    }
    if (auto im = parse_part(s, true); im && s.find('i') != std::string::npos)
        return ComplexQ(Rational(0), *im);
    if (auto re = parse_rational(s)) return ComplexQ(*re, Rational(0));
    return std::nullopt;
}

std::string to_string(const ProjectivePoint& x) {
    if (x.infinite) return "inf";
    return to_string(x.value);
}

}  // namespace hitreal
