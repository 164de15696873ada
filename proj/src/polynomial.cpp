#include "hitreal/polynomial.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace hitreal {

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

ComplexQ Poly::eval(const ComplexQ& x) const {
    ComplexQ acc(Rational(0));
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + ComplexQ(c_[i]);
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<int>(i));
    return Poly(std::move(d));
}

Poly Poly::reversed() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    std::vector<Rational> r(c_);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
}

Poly Poly::scaled(const Rational& s) const {
    std::vector<Rational> r(c_);
    for (auto& v : r) v *= s;
    return Poly(std::move(r));
}

Poly Poly::pow(unsigned e) const {
    Poly result = Poly::constant(Rational(1));
    Poly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) raise(Errc::InvalidQuery, "division by zero polynomial");
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quot;
    int db = b.degree();
    if (static_cast<int>(rem.size()) - 1 >= db) quot.assign(rem.size() - db, Rational(0));
    while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
        int dr = static_cast<int>(rem.size()) - 1;
        Rational f = rem.back() / b.lc();
        quot[static_cast<size_t>(dr - db)] = f;
        for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(dr - db + i)] -= f * b[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    q = Poly(std::move(quot));
    r = Poly(std::move(rem));
}

std::string Poly::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational v = c_[i];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        if (i == 0) {
            os << to_string(v);
        } else {
            if (v != 1) os << to_string(v) << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Recursive-descent parser.
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*')? factor)*        implicit product by juxtaposition
//   factor  := atom ('^' uint)?
//   atom    := rational | 'z' | '(' expr ')' | ('+'|'-') factor
class PolyParser {
  public:
    explicit PolyParser(const std::string& text) : s_(text) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& why) {
        raise(Errc::ParseError, "polynomial: " + why + " at offset " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool starts_atom(char c) {
        return c == '(' || c == 'z' || std::isdigit(static_cast<unsigned char>(c));
    }

    Poly expr() {
        Poly acc = term();
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Poly t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (starts_atom(c)) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected exponent");
            unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
            return base.pow(e);
        }
        return base;
    }

    Poly atom() {
        char c = peek();
        if (c == '+') {
            ++pos_;
            return factor();
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 'z') {
            ++pos_;
            return Poly::z();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Integer num(s_.substr(start, pos_ - start));
            Integer den = 1;
            // A '/' binds to the literal only when followed by digits (a rational literal).
            size_t save = pos_;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                size_t slash = pos_++;
                skip_ws();
                size_t dstart = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (pos_ == dstart) {
                    pos_ = slash;  // not a rational literal after all
                } else {
                    den = Integer(s_.substr(dstart, pos_ - dstart));
                    if (den == 0) fail("zero denominator");
                }
            } else {
                pos_ = save;
            }
            return Poly::constant(Rational(num, den));
        }
        fail("unexpected character");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

Poly poly_from_roots(const std::vector<ComplexQ>& roots, const Rational& lc) {
    // Pair off non-real roots with their conjugates; real roots pass through.
    std::map<std::pair<Rational, Rational>, int> pending;  // (re, |im|) -> signed count of upper-half excess
    Poly p = Poly::constant(lc);
    for (const auto& r : roots) {
        if (r.is_real()) {
            p = p * Poly({-r.re, Rational(1)});
        } else {
            auto key = std::make_pair(r.re, rat_abs(r.im));
            pending[key] += (r.im > 0 ? 1 : -1);
        }
    }
    for (const auto& [key, excess] : pending) {
        if (excess != 0) {
            ComplexQ rep(key.first, excess > 0 ? key.second : -key.second);
            raise(Errc::NotConjugationClosed, "root " + to_string(rep) + " unpaired");
        }
    }
    // Paired counts: multiply the real quadratic factor once per pair.
    std::map<std::pair<Rational, Rational>, int> totals;
    for (const auto& r : roots)
        if (!r.is_real()) totals[std::make_pair(r.re, rat_abs(r.im))] += 1;
    for (const auto& [key, count] : totals) {
        const auto& [re, im_abs] = key;
        // (z - (re+bi))(z - (re-bi)) = z^2 - 2 re z + re^2 + b^2
        Poly quad({re * re + im_abs * im_abs, Rational(-2) * re, Rational(1)});
        for (int i = 0; i < count / 2; ++i) p = p * quad;
    }
    return p;
}

}  // namespace hitreal
