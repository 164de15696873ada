#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hitreal/json_io.hpp"
#include "hitreal/svg.hpp"
#include "hitreal/version.hpp"

namespace {

using hitreal::Json;

void emit(const std::string& out_dir, const std::string& filename, const std::string& payload) {
    if (out_dir.empty()) {
        std::cout << payload;
        return;
    }
    std::filesystem::create_directories(out_dir);
    std::filesystem::path path = std::filesystem::path(out_dir) / filename;
    std::ofstream f(path);
    if (!f) hitreal::raise(hitreal::Errc::InvalidQuery, "cannot write " + path.string());
    f << payload;
}

void emit_json(const std::string& out_dir, const std::string& filename, const Json& j) {
    emit(out_dir, filename, j.dump(2) + "\n");
}

int usage_error(const std::string& code, const std::string& message) {
    Json err{{"error", Json{{"code", code}, {"message", message}}},
             {"schema", hitreal::kSchemaVersion}};
    std::cerr << err.dump() << "\n";
    return 1;
}

hitreal::InvolutionKind kind_or_raise(const std::string& name) {
    auto kind = hitreal::parse_kind(name);
    if (!kind)
        hitreal::raise(hitreal::Errc::ParseError,
                       "unknown involution kind \"" + name +
                           "\"; expected conj, conj-sigma, antipodal, or antipodal-sigma");
    return *kind;
}

hitreal::QuadDifferential parse_q(const std::string& a1, const std::string& a2, int sign) {
    if (sign != 1 && sign != -1)
        hitreal::raise(hitreal::Errc::InvalidQuery, "--sign must be 1 or -1");
    return hitreal::QuadDifferential{hitreal::parse_spectral_point(a1),
                                     hitreal::parse_spectral_point(a2), sign};
}

Json report_head() {
    return Json{{"schema", hitreal::kSchemaVersion}, {"version", hitreal::kVersion}};
}

// Mirrors the sign-swapped lift into the plain conjugation chart so per-oval
// traces run on the curve that actually carries the fixed circles.
struct TraceChart {
    hitreal::HyperellipticCurve curve;
    hitreal::QuadDifferential q;
};

TraceChart trace_chart(const hitreal::HyperellipticCurve& c, const hitreal::QuadDifferential& q,
                       hitreal::InvolutionKind kind) {
    if (kind == hitreal::InvolutionKind::ConjSigmaF)
        return TraceChart{hitreal::build_curve(-c.p),
                          hitreal::QuadDifferential{q.a1, q.a2, -q.sign}};
    return TraceChart{hitreal::build_curve(c.p), q};
}

Json analysis_report(const hitreal::HyperellipticCurve& c, const hitreal::QuadDifferential& q,
                     hitreal::InvolutionKind kind, const hitreal::SpectralInvariants& s) {
    Json counts;
    counts["gl2"] = hitreal::to_json(hitreal::count_gl2(s.n_plus, s.u));
    try {
        counts["sl2"] = hitreal::to_json(hitreal::count_sl2(s.n_zero, s.u));
    } catch (const hitreal::Error& e) {
        if (e.code() != hitreal::Errc::NotApplicable) throw;
        counts["sl2"] = "NotApplicable";
    }
    Json report = report_head();
    report["curve"] = hitreal::to_json(c);
    report["kind"] = hitreal::kind_name(kind);
    report["q"] = hitreal::to_json(q);
    report["klein"] = Json{{"a", s.a}, {"n", s.n}};
    report["spectral"] = hitreal::to_json(s);
    report["counts"] = counts;
    report["reality"] = hitreal::to_string(hitreal::real_or_quaternionic(
        hitreal::RealityTypeQuery{s.u, std::nullopt, s.n > 0}));
    return report;
}

int run_classify(const std::string& p_text, const std::string& kind_name,
                 const std::string& out_dir) {
    hitreal::HyperellipticCurve c = hitreal::build_curve(hitreal::parse_poly(p_text));
    hitreal::Classification cls = hitreal::classify_hyperelliptic(c, kind_or_raise(kind_name));
    Json report = report_head();
    report["curve"] = hitreal::to_json(c);
    report["klein"] = hitreal::to_json(cls.inv);
    if (!cls.note.empty()) report["note"] = cls.note;
    emit_json(out_dir, "classify.json", report);
    return 0;
}

int run_analyze(const std::string& p_text, const std::string& a1, const std::string& a2, int sign,
                const std::string& kind_name, bool with_oracle, const std::string& out_dir) {
    hitreal::HyperellipticCurve c = hitreal::build_curve(hitreal::parse_poly(p_text));
    hitreal::QuadDifferential q = parse_q(a1, a2, sign);
    hitreal::InvolutionKind kind = kind_or_raise(kind_name);
    hitreal::SpectralInvariants s = hitreal::analyze(c, q, kind);
    Json report = analysis_report(c, q, kind, s);

    bool mismatch = false;
    if (with_oracle) {
        long long ns = hitreal::count_nS_oracle(c, q, kind);
        Json oracle{{"match", ns == s.n_S}, {"n_S", ns}};
        if (kind == hitreal::InvolutionKind::ConjF ||
            kind == hitreal::InvolutionKind::ConjSigmaF) {
            TraceChart chart = trace_chart(c, q, kind);
            Json traces = Json::array();
            for (const hitreal::Oval& oval : hitreal::ovals(chart.curve))
                traces.push_back(hitreal::to_json(hitreal::trace_oval(chart.curve, chart.q, oval)));
            oracle["ovals"] = traces;
        }
        mismatch = ns != s.n_S;
        report["oracle"] = oracle;
        if (mismatch) report["mismatch"] = true;
    }
    emit_json(out_dir, "analyze.json", report);
    return mismatch ? 2 : 0;
}

int run_oracle(const std::string& p_text, const std::string& a1, const std::string& a2, int sign,
               const std::string& kind_name, const std::string& out_dir) {
    hitreal::HyperellipticCurve c = hitreal::build_curve(hitreal::parse_poly(p_text));
    hitreal::QuadDifferential q = parse_q(a1, a2, sign);
    hitreal::InvolutionKind kind = kind_or_raise(kind_name);
    hitreal::SpectralInvariants s = hitreal::analyze(c, q, kind);

    bool mismatch = false;
    Json report = report_head();
    report["curve"] = hitreal::to_json(c);
    report["kind"] = hitreal::kind_name(kind);
    report["q"] = hitreal::to_json(q);
    report["spectral"] = hitreal::to_json(s);

    long long ns = hitreal::count_nS_oracle(c, q, kind);
    report["circles"] = Json{{"formula", s.n_S}, {"match", ns == s.n_S}, {"oracle", ns}};
    mismatch |= ns != s.n_S;

    if (s.u > 0 && static_cast<int>(s.oval_zero_counts.size()) == s.n) {
        int t = (4 * c.g - 4 - s.u) / 2;
        hitreal::ChainPresentation pres =
            hitreal::build_presentation(c.g, s.n, s.a, t, s.u, s.oval_zero_counts);
        int kernel = hitreal::theta_kernel_dim(pres);
        int kernel_expected = 3 * c.g - 3 + s.n_zero + s.u / 2;
        int exponent = hitreal::sl2_exponent(pres);
        long long sl2_count = hitreal::count_sl2(s.n_zero, s.u).count;
        bool kernel_ok = kernel == kernel_expected;
        bool count_ok = (1LL << exponent) == sl2_count;
        report["homology"] = Json{{"kernel_dim", kernel},
                                  {"kernel_dim_expected", kernel_expected},
                                  {"match", kernel_ok && count_ok},
                                  {"sl2_count", sl2_count},
                                  {"sl2_exponent", exponent}};
        mismatch |= !(kernel_ok && count_ok);
    } else {
        report["homology"] = "skipped: needs a fixed zero on an oval";
    }
    if (mismatch) report["mismatch"] = true;
    emit_json(out_dir, "oracle.json", report);
    return mismatch ? 2 : 0;
}

int run_census(int g, long long budget, std::uint64_t seed, const std::string& out_dir) {
    hitreal::SearchBudget b;
    b.random_configs = budget;
    b.seed = seed;
    hitreal::CensusReport rep = hitreal::census(g, b);
    Json j = hitreal::to_json(rep);
    j["version"] = hitreal::kVersion;
    emit_json(out_dir, "census.json", j);
    return 0;
}

int run_diagram(const std::string& p_text, const std::string& a1, const std::string& a2, int sign,
                const std::string& format, const std::string& out_dir) {
    hitreal::HyperellipticCurve c = hitreal::build_curve(hitreal::parse_poly(p_text));
    std::optional<hitreal::QuadDifferential> q;
    if (!a1.empty() || !a2.empty()) {
        if (a1.empty() || a2.empty())
            hitreal::raise(hitreal::Errc::InvalidQuery, "--a1 and --a2 must be given together");
        q = parse_q(a1, a2, sign);
        hitreal::validate_differential(c, *q);
    }
    if (format == "svg") {
        std::string svg = q ? hitreal::sign_diagram_svg(c, *q) : hitreal::sign_diagram_svg(c);
        emit(out_dir, "diagram.svg", svg);
        return 0;
    }
    if (format != "json")
        hitreal::raise(hitreal::Errc::InvalidQuery, "--format must be json or svg");
    Json ovals_json = Json::array();
    for (const hitreal::Oval& oval : hitreal::ovals(c)) {
        ovals_json.push_back(Json{{"full_circle", oval.full_circle},
                                  {"index", oval.index},
                                  {"left_root", oval.left_root},
                                  {"right_root", oval.right_root},
                                  {"through_inf", oval.through_inf},
                                  {"upstairs_circles", oval.upstairs_circles}});
    }
    Json report = report_head();
    report["curve"] = hitreal::to_json(c);
    report["ovals"] = ovals_json;
    if (q) {
        report["q"] = hitreal::to_json(*q);
        Json traces = Json::array();
        for (const hitreal::Oval& oval : hitreal::ovals(c))
            traces.push_back(hitreal::to_json(hitreal::trace_oval(c, *q, oval)));
        report["traces"] = traces;
    }
    emit_json(out_dir, "diagram.json", report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological invariants of real hyperelliptic curves and exact component"
                 " counts of the fibres fixed by the induced involution"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file; command-line flags override it");

    std::string p_text, a1, a2, kind = "conj", out_dir;
    int sign = 1;
    bool with_oracle = false;
    int g = 2;
    long long budget = 100000;
    std::uint64_t seed = 12345;

    std::function<int()> action;

    auto* classify = app.add_subcommand("classify", "Klein invariants (n, a) of an involution");
    classify->add_option("--p", p_text, "curve polynomial, e.g. \"(z^2-1)(z^2-4)(z^2-9)\"")
        ->required();
    classify->add_option("--kind", kind, "conj | conj-sigma | antipodal | antipodal-sigma");
    classify->add_option("--out", out_dir, "output directory (stdout when absent)");
    classify->callback([&] { action = [&] { return run_classify(p_text, kind, out_dir); }; });

    auto* analyze = app.add_subcommand("analyze", "sign analysis and component counts");
    analyze->add_option("--p", p_text, "curve polynomial")->required();
    analyze->add_option("--a1", a1, "first zero of q (rational, complex, or inf)")->required();
    analyze->add_option("--a2", a2, "second zero of q")->required();
    analyze->add_option("--sign", sign, "sign of q, 1 or -1");
    analyze->add_option("--kind", kind, "involution kind");
    analyze->add_flag("--oracle", with_oracle, "also run the circle-tracking cross-check");
    analyze->add_option("--out", out_dir, "output directory");
    analyze->callback([&] {
        action = [&] { return run_analyze(p_text, a1, a2, sign, kind, with_oracle, out_dir); };
    });

    auto* oracle = app.add_subcommand("oracle", "monodromy and homology cross-checks");
    oracle->add_option("--p", p_text, "curve polynomial")->required();
    oracle->add_option("--a1", a1, "first zero of q")->required();
    oracle->add_option("--a2", a2, "second zero of q")->required();
    oracle->add_option("--sign", sign, "sign of q, 1 or -1");
    oracle->add_option("--kind", kind, "involution kind");
    oracle->add_option("--out", out_dir, "output directory");
    oracle->callback(
        [&] { action = [&] { return run_oracle(p_text, a1, a2, sign, kind, out_dir); }; });

    auto* census = app.add_subcommand("census", "admissible tuples and realizability search");
    census->add_option("--g", g, "genus");
    census->add_option("--budget", budget, "random configurations after the grid");
    census->add_option("--seed", seed, "random seed (recorded in the report)");
    census->add_option("--out", out_dir, "output directory");
    census->callback([&] { action = [&] { return run_census(g, budget, seed, out_dir); }; });

    auto* formulas = app.add_subcommand("formulas", "closed-form evaluation");
    formulas->require_subcommand(1);
    int fn = 2, fg = 2, f_ns = 0, f_gs = 5, f_nplus = 0, f_nzero = 0, f_u = 0, f_m = 1;
    long long f_count = 2;
    std::string f_group = "GL";

    auto* f_sg = formulas->add_subcommand("spectral-genus", "1 + n^2 (g - 1)");
    f_sg->add_option("--n", fn)->required();
    f_sg->add_option("--g", fg)->required();
    f_sg->callback([&] {
        action = [&] {
            emit_json(out_dir, "formulas.json", Json{{"value", hitreal::spectral_genus(fn, fg)}});
            return 0;
        };
    });

    auto* f_fd = formulas->add_subcommand("fixed-degree", "n (n - 1) (g - 1)");
    f_fd->add_option("--n", fn)->required();
    f_fd->add_option("--g", fg)->required();
    f_fd->callback([&] {
        action = [&] {
            emit_json(out_dir, "formulas.json",
                      Json{{"value", hitreal::fixed_determinant_degree(fn, fg)}});
            return 0;
        };
    });

    auto* f_dim = formulas->add_subcommand("fibre-dim", "GL: 1 + n^2(g-1); SL: (n^2-1)(g-1)");
    f_dim->add_option("--group", f_group, "GL or SL");
    f_dim->add_option("--n", fn)->required();
    f_dim->add_option("--g", fg)->required();
    f_dim->callback([&] {
        action = [&] {
            if (f_group != "GL" && f_group != "SL")
                hitreal::raise(hitreal::Errc::InvalidQuery, "--group must be GL or SL");
            hitreal::Group grp = f_group == "GL" ? hitreal::Group::GL : hitreal::Group::SL;
            emit_json(out_dir, "formulas.json", Json{{"value", hitreal::fibre_dim(grp, fn, fg)}});
            return 0;
        };
    });

    auto* f_gl = formulas->add_subcommand("count-gl", "components from (n_S, g_S)");
    f_gl->add_option("--ns", f_ns)->required();
    f_gl->add_option("--gs", f_gs)->required();
    f_gl->callback([&] {
        action = [&] {
            emit_json(out_dir, "formulas.json", hitreal::to_json(hitreal::count_gl(f_ns, f_gs)));
            return 0;
        };
    });

    auto* f_gl2 = formulas->add_subcommand("count-gl2", "components from (n_plus, u)");
    f_gl2->add_option("--nplus", f_nplus)->required();
    f_gl2->add_option("--u", f_u)->required();
    f_gl2->callback([&] {
        action = [&] {
            hitreal::ComponentCount cc = hitreal::count_gl2(f_nplus, f_u);
            emit_json(out_dir, "formulas.json", Json{{"count", cc.count}, {"d", cc.d}});
            return 0;
        };
    });

    auto* f_sl2 = formulas->add_subcommand("count-sl2", "components from (n_zero, u)");
    f_sl2->add_option("--nzero", f_nzero)->required();
    f_sl2->add_option("--u", f_u)->required();
    f_sl2->callback([&] {
        action = [&] {
            hitreal::ComponentCount cc = hitreal::count_sl2(f_nzero, f_u);
            emit_json(out_dir, "formulas.json", Json{{"count", cc.count}, {"d", cc.d}});
            return 0;
        };
    });

    auto* f_td = formulas->add_subcommand("torus-d", "d with count = 2^(m+d)");
    f_td->add_option("--m", f_m)->required();
    f_td->add_option("--count", f_count)->required();
    f_td->callback([&] {
        action = [&] {
            emit_json(out_dir, "formulas.json", Json{{"d", hitreal::torus_d(f_m, f_count)}});
            return 0;
        };
    });
    formulas->add_option("--out", out_dir, "output directory");

    std::string diagram_format = "svg";
    auto* diagram = app.add_subcommand("diagram", "SVG sign diagram of the real locus");
    diagram->add_option("--p", p_text, "curve polynomial")->required();
    diagram->add_option("--a1", a1, "first zero of q (optional, with --a2)");
    diagram->add_option("--a2", a2, "second zero of q");
    diagram->add_option("--sign", sign, "sign of q, 1 or -1");
    diagram->add_option("--format", diagram_format, "svg or json");
    diagram->add_option("--out", out_dir, "output directory");
    diagram->callback([&] {
        action = [&] { return run_diagram(p_text, a1, a2, sign, diagram_format, out_dir); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        return usage_error("Usage", e.what());
    }

    try {
        return action ? action() : usage_error("Usage", "no subcommand given");
    } catch (const hitreal::Error& e) {
        return usage_error(hitreal::errc_name(e.code()), e.what());
    } catch (const std::exception& e) {
        return usage_error("Internal", e.what());
    }
}
