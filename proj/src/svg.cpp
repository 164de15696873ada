#include "hitreal/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

namespace hitreal {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCx = 300.0, kCy = 300.0, kRadius = 210.0;

double to_double(const Rational& x) { return x.convert_to<double>(); }

// RP^1 as a circle: z = 0 on the right, z = 1 at the top, infinity on the
// left where the two ends of the real line meet.
double angle_of_z(double z) { return 2.0 * std::atan(z); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::pair<double, double> on_circle(double angle, double radius = kRadius) {
    return {kCx + radius * std::cos(angle), kCy - radius * std::sin(angle)};
}

void arc_polyline(std::string& out, double a0, double a1, const std::string& color, double width,
                  double opacity) {
    out += "  <polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + fmt(width) +
           "\" stroke-opacity=\"" + fmt(opacity) + "\" points=\"";
    int steps = std::max(8, static_cast<int>((a1 - a0) / (kPi / 90)));
    for (int i = 0; i <= steps; ++i) {
        auto [x, y] = on_circle(a0 + (a1 - a0) * i / steps);
        out += fmt(x) + "," + fmt(y) + " ";
    }
    out += "\"/>\n";
}

void marker(std::string& out, double angle, const std::string& color, const std::string& label) {
    auto [x, y] = on_circle(angle);
    out += "  <circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"5\" fill=\"" + color +
           "\"/>\n";
    auto [lx, ly] = on_circle(angle, kRadius + 26);
    out += "  <text x=\"" + fmt(lx) + "\" y=\"" + fmt(ly) +
           "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" + label +
           "</text>\n";
}

// Rational display sample near the angular midpoint of an arc, nudged off any
// exact zero. The sign evaluation itself is exact at the returned point.
int sign_near_angle(HyperellipticCurve& c, const QuadDifferential* q, double mid) {
    double z = std::tan(mid / 2);
    Rational zr;
    if (std::abs(z) > 1.0e6) {
        zr = Rational(z > 0 ? 10000000 : -10000000);
    } else {
        zr = Rational(static_cast<long long>(std::llround(z * 8192)), 8192);
    }
    for (int nudge = 0; nudge < 8; ++nudge) {
        int s = q ? differential_sign_at(c, *q, zr) : sign_of(c.p.eval(zr));
        if (s != 0) return s;
        zr += Rational(1, 8192);
    }
    return 0;
}

std::string render(HyperellipticCurve& c, const QuadDifferential* q) {
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    out += "  <rect width=\"600\" height=\"600\" fill=\"white\"/>\n";

    // Oval shading under everything else.
    for (const Oval& oval : ovals(c)) {
        double a0, a1;
        if (oval.full_circle) {
            a0 = -kPi;
            a1 = kPi;
        } else {
            auto& roots = c.profile.roots.real_roots;
            refine_root(c.p, roots[static_cast<size_t>(oval.left_root)], Rational(1, 10000));
            refine_root(c.p, roots[static_cast<size_t>(oval.right_root)], Rational(1, 10000));
            a0 = angle_of_z(to_double(roots[static_cast<size_t>(oval.left_root)].approx()));
            a1 = angle_of_z(to_double(roots[static_cast<size_t>(oval.right_root)].approx()));
            if (oval.through_inf) a1 += 2 * kPi;  // wraps through the infinity point
        }
        arc_polyline(out, a0, a1, "#2ca02c", 22, 0.25);
    }

    // Cut angles: branch points, plus the real zeros of q1 when q is present.
    std::vector<double> cuts;
    for (auto& r : c.profile.roots.real_roots) {
        refine_root(c.p, r, Rational(1, 10000));
        cuts.push_back(angle_of_z(to_double(r.approx())));
    }
    bool zero_at_inf = false;
    std::vector<double> zero_angles;
    if (q != nullptr) {
        for (const SpectralPoint* a : {&q->a1, &q->a2}) {
            if (a->infinite)
                zero_at_inf = !zero_at_inf;  // both infinite is rejected upstream
            else if (a->is_real_point())
                zero_angles.push_back(angle_of_z(to_double(a->value.re)));
        }
        if (zero_at_inf) cuts.push_back(kPi);
        cuts.insert(cuts.end(), zero_angles.begin(), zero_angles.end());
    }
    std::sort(cuts.begin(), cuts.end());

    // Sign-colored arcs between consecutive cuts (cyclically).
    auto color_of = [](int s) { return s > 0 ? "#1f77b4" : s < 0 ? "#d62728" : "#7f7f7f"; };
    if (cuts.empty()) {
        int s = sign_near_angle(c, q, 0.0);
        arc_polyline(out, -kPi, kPi, color_of(s), 6, 1.0);
    } else {
        for (size_t i = 0; i < cuts.size(); ++i) {
            double a0 = cuts[i];
            double a1 = (i + 1 < cuts.size()) ? cuts[i + 1] : cuts[0] + 2 * kPi;
            int s = sign_near_angle(c, q, (a0 + a1) / 2);
            arc_polyline(out, a0, a1, color_of(s), 6, 1.0);
        }
    }

    // Markers: branch points in black, zeros of q in orange.
    for (auto& r : c.profile.roots.real_roots) {
        double v = to_double(r.approx());
        marker(out, angle_of_z(v), "#000000", fmt(v));
    }
    if (q != nullptr) {
        for (const SpectralPoint* a : {&q->a1, &q->a2}) {
            if (a->infinite)
                marker(out, kPi, "#ff7f0e", "inf");
            else if (a->is_real_point())
                marker(out, angle_of_z(to_double(a->value.re)), "#ff7f0e",
                       fmt(to_double(a->value.re)));
        }
    }

    // Legend.
    const char* subject = q != nullptr ? "q1" : "p";
    double ly = 20;
    auto legend = [&](const std::string& color, const std::string& text) {
        out += "  <rect x=\"10\" y=\"" + fmt(ly - 10) + "\" width=\"12\" height=\"12\" fill=\"" +
               color + "\"/>\n";
        out += "  <text x=\"28\" y=\"" + fmt(ly) +
               "\" font-family=\"monospace\" font-size=\"12\">" + text + "</text>\n";
        ly += 18;
    };
    legend("#1f77b4", std::string(subject) + " &gt; 0");
    legend("#d62728", std::string(subject) + " &lt; 0");
    legend("#2ca02c", "oval");
    legend("#000000", "branch point");
    if (q != nullptr) legend("#ff7f0e", "zero of q");

    out += "</svg>\n";
    return out;
}

}  // namespace

std::string sign_diagram_svg(HyperellipticCurve& c) { return render(c, nullptr); }

std::string sign_diagram_svg(HyperellipticCurve& c, const QuadDifferential& q) {
    return render(c, &q);
}

}  // namespace hitreal
