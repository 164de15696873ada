#include "hitreal/roots.hpp"

#include <algorithm>
#include <complex>

#include "hitreal/errors.hpp"

namespace hitreal {

namespace {

using IPoly = std::vector<Integer>;  // dense, no trailing zeros

void itrim(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer icontent(const IPoly& p) {
    Integer g = 0;
    for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
    return g == 0 ? Integer(1) : g;
}

// Divides by content, preserving the sign of the leading coefficient.
void make_primitive(IPoly& p) {
    Integer g = icontent(p);
    for (auto& c : p) c /= g;
}

// Clears denominators of a rational polynomial into a primitive integer one.
IPoly to_integer(const Poly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, denominator(c));
    IPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(numerator(c) * (l / denominator(c)));
    itrim(out);
    make_primitive(out);
    return out;
}

// Sign of P(n/d) with d > 0, by homogeneous integer evaluation.
int isign_at(const IPoly& p, const Integer& n, const Integer& d) {
    if (p.empty()) return 0;
    Integer acc = 0;
    Integer dpow = 1;
    // acc = sum p[i] n^i d^(deg-i), built Horner-style from the top.
    for (size_t i = p.size(); i-- > 0;) {
        acc = acc * n + p[i] * dpow;
        if (i > 0) dpow *= d;
    }
    return acc.sign();
}

int isign_at(const IPoly& p, const Rational& x) { return isign_at(p, numerator(x), denominator(x)); }

// Pseudo-remainder adjusted so the result has the sign of f mod g.
IPoly signed_prem(IPoly f, const IPoly& g) {
    const Integer& glc = g.back();
    int mults = 0;
    while (f.size() >= g.size() && !f.empty()) {
        size_t shift = f.size() - g.size();
        Integer flc = f.back();
        for (auto& c : f) c *= glc;
        ++mults;
        for (size_t i = 0; i < g.size(); ++i) f[shift + i] -= flc * g[i];
        itrim(f);
    }
    if (glc < 0 && (mults % 2) == 1)
        for (auto& c : f) c = -c;
    return f;
}

IPoly iderivative(const IPoly& p) {
    if (p.size() <= 1) return {};
    IPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Integer(static_cast<unsigned>(i));
    return d;
}

IPoly ipoly_gcd(IPoly a, IPoly b) {
    itrim(a);
    itrim(b);
    while (!b.empty()) {
        IPoly r = signed_prem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    make_primitive(a);
    return a;
}

}  // namespace

SturmChain::SturmChain(const Poly& p) {
    IPoly s0 = to_integer(p);
    if (s0.empty()) raise(Errc::InvalidQuery, "Sturm chain of the zero polynomial");
    chain_.push_back(s0);
    IPoly s1 = iderivative(s0);
    itrim(s1);
    while (!s1.empty()) {
        chain_.push_back(s1);
        IPoly r = signed_prem(chain_[chain_.size() - 2], s1);
        make_primitive(r);
        for (auto& c : r) c = -c;
        s1 = std::move(r);
    }
    // Cauchy bound: 1 + max |c_i| / |lc|.
    Rational maxr(0);
    Rational lead = rat_abs(Rational(s0.back()));
    for (size_t i = 0; i + 1 < s0.size(); ++i) {
        Rational v = rat_abs(Rational(s0[i])) / lead;
        if (v > maxr) maxr = v;
    }
    bound_ = maxr + 1;
}

int SturmChain::sign_at(const Rational& x) const { return isign_at(chain_[0], x); }

int SturmChain::variations(const Rational& x) const {
    int count = 0, prev = 0;
    for (const auto& s : chain_) {
        int sg = isign_at(s, x);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

int SturmChain::variations_pos_inf() const {
    int count = 0, prev = 0;
    for (const auto& s : chain_) {
        int sg = s.back().sign();
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

int SturmChain::variations_neg_inf() const {
    int count = 0, prev = 0;
    for (const auto& s : chain_) {
        int sg = s.back().sign();
        if ((s.size() - 1) % 2 == 1) sg = -sg;
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

int SturmChain::count_in(const Rational& a, const Rational& b) const {
    // Endpoints are required to be non-roots, so (a,b) and (a,b] agree.
    return variations(a) - variations(b);
}

int SturmChain::count_real() const { return variations_neg_inf() - variations_pos_inf(); }

bool is_square_free(const Poly& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    IPoly g = ipoly_gcd(to_integer(p), to_integer(p.derivative()));
    return g.size() <= 1;
}

namespace {

struct Isolator {
    const SturmChain& chain;
    std::vector<RealRoot> out;

    // Both endpoints are non-roots; n roots lie strictly inside.
    void split(const Rational& lo, const Rational& hi, int n) {
        if (n == 0) return;
        if (n == 1) {
            RealRoot r;
            r.exact = false;
            r.lo = lo;
            r.hi = hi;
            out.push_back(r);
            return;
        }
        Rational mid = (lo + hi) / 2;
        if (chain.sign_at(mid) == 0) {
            // Exact hit. Carve a bracket around mid containing only this root.
            Rational delta = (hi - lo) / 4;
            while (true) {
                Rational a = mid - delta, b = mid + delta;
                if (chain.sign_at(a) != 0 && chain.sign_at(b) != 0 && chain.count_in(a, b) == 1) {
                    RealRoot r;
                    r.exact = true;
                    r.value = mid;
                    r.lo = a;
                    r.hi = b;
                    out.push_back(r);
                    split(lo, a, chain.count_in(lo, a));
                    split(b, hi, chain.count_in(b, hi));
                    return;
                }
                delta /= 2;
            }
        }
        int left = chain.count_in(lo, mid);
        split(lo, mid, left);
        split(mid, hi, n - left);
    }
};

void bisect_once(const Poly& p, RealRoot& r) {
    if (r.exact) {
        Rational q = (r.hi - r.lo) / 4;
        r.lo = r.value - q;
        r.hi = r.value + q;
        return;
    }
    Rational mid = (r.lo + r.hi) / 2;
    Rational pm = p.eval(mid);
    if (pm == 0) {
        r.exact = true;
        r.value = mid;
        Rational q = (r.hi - r.lo) / 4;
        r.lo = mid - q;
        r.hi = mid + q;
        return;
    }
    int slo = sign_of(p.eval(r.lo));
    if (slo != sign_of(pm))
        r.hi = mid;
    else
        r.lo = mid;
}

std::vector<ComplexPairBox> durand_kerner_pairs(const Poly& p, int want_pairs) {
    if (want_pairs == 0) return {};
    using C = std::complex<double>;
    int d = p.degree();
    std::vector<C> c(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) c[static_cast<size_t>(i)] = to_double(p[i]);
    for (int i = 0; i <= d; ++i) c[static_cast<size_t>(i)] /= c[static_cast<size_t>(d)];
    auto eval = [&](C x) {
        C acc = 0;
        for (int i = d; i >= 0; --i) acc = acc * x + c[static_cast<size_t>(i)];
        return acc;
    };
    std::vector<C> x(static_cast<size_t>(d));
    const C seed(0.4, 0.9);
    C cur(1.0, 0.0);
    for (auto& v : x) {
        cur *= seed;
        v = cur;
    }
    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0;
        for (int i = 0; i < d; ++i) {
            C den(1.0, 0.0);
            for (int j = 0; j < d; ++j)
                if (j != i) den *= (x[static_cast<size_t>(i)] - x[static_cast<size_t>(j)]);
            C step = eval(x[static_cast<size_t>(i)]) / den;
            x[static_cast<size_t>(i)] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-14) break;
    }
    // The want_pairs largest imaginary parts are the upper-half representatives.
    std::sort(x.begin(), x.end(), [](C a, C b) { return a.imag() > b.imag(); });
    std::vector<ComplexPairBox> pairs;
    Poly dp = p.derivative();
    for (int i = 0; i < want_pairs; ++i) {
        C v = x[static_cast<size_t>(i)];
        ComplexPairBox box;
        box.re = v.real();
        box.im = v.imag();
        ComplexQ vq(Rational(v.real() * 1e9) / 1000000000, Rational(v.imag() * 1e9) / 1000000000);
        ComplexQ num = p.eval(vq);
        ComplexQ den = dp.eval(vq);
        double nn = std::hypot(to_double(num.re), to_double(num.im));
        double dd = std::hypot(to_double(den.re), to_double(den.im));
        box.radius = dd > 0 ? d * nn / dd + 1e-12 : 1e-6;
        pairs.push_back(box);
    }
    std::sort(pairs.begin(), pairs.end(), [](const ComplexPairBox& a, const ComplexPairBox& b) {
        return a.re != b.re ? a.re < b.re : a.im < b.im;
    });
    return pairs;
}

}  // namespace

RootMultiset find_roots(const Poly& p) {
    if (p.is_zero()) raise(Errc::InvalidQuery, "zero polynomial has no well-defined roots");
    if (!is_square_free(p)) raise(Errc::NonSquareFree, "polynomial has a repeated root");
    RootMultiset out;
    out.p = p;
    out.degree = p.degree();
    if (p.degree() == 0) {
        out.bound = 1;
        return out;
    }
    SturmChain chain(p);
    out.bound = chain.root_bound();
    Isolator iso{chain, {}};
    int total = chain.count_real();
    if (total > 0) iso.split(-chain.root_bound(), chain.root_bound(), total);
    out.real_roots = std::move(iso.out);
    std::sort(out.real_roots.begin(), out.real_roots.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.approx() < b.approx(); });
    // Make isolating intervals pairwise disjoint so ordering is certified.
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 0; i + 1 < out.real_roots.size(); ++i) {
            if (out.real_roots[i].high() >= out.real_roots[i + 1].low()) {
                bisect_once(p, out.real_roots[i]);
                bisect_once(p, out.real_roots[i + 1]);
                again = true;
            }
        }
    }
    int pairs = (p.degree() - total) / 2;
    out.complex_pairs = durand_kerner_pairs(p, pairs);
    return out;
}

void refine_root(const Poly& p, RealRoot& r, const Rational& width) {
    while (!r.exact && r.hi - r.lo > width) bisect_once(p, r);
}

int compare_to_root(const Poly& p, RealRoot& r, const Rational& x) {
    if (r.exact) {
        if (x < r.value) return -1;
        if (x > r.value) return 1;
        return 0;
    }
    while (true) {
        if (x <= r.lo) return -1;
        if (x >= r.hi) return 1;
        if (p.eval(x) == 0) {
            r.exact = true;
            r.value = x;
            return 0;
        }
        bisect_once(p, r);
    }
}

Rational sample_between(const Poly& p, RealRoot& a, RealRoot& b) {
    while (a.high() >= b.low()) {
        bisect_once(p, a);
        bisect_once(p, b);
    }
    return (a.high() + b.low()) / 2;
}

}  // namespace hitreal
