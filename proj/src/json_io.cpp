#include "hitreal/json_io.hpp"

#include <string>
#include <vector>

#include "hitreal/errors.hpp"

namespace hitreal {

namespace {

Rational rational_from_json(const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) {
        auto z = parse_complex(v.get<std::string>());
        if (z && z->is_real()) return z->re;
    }
    raise(Errc::ParseError, "expected an integer or a rational literal, got " + v.dump());
}

ComplexQ complex_from_json(const Json& v) {
    if (v.is_number_integer()) return ComplexQ(Rational(v.get<long long>()));
    if (v.is_string()) {
        auto z = parse_complex(v.get<std::string>());
        if (z) return *z;
    }
    raise(Errc::ParseError, "expected a complex rational literal, got " + v.dump());
}

std::string bits(gf2::Vec v, int n) {
    std::string s(static_cast<size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (v >> i & 1) s[static_cast<size_t>(i)] = '1';
    return s;
}

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const ComplexQ& z) { return to_string(z); }

Json to_json(const SpectralPoint& x) { return to_string(x); }

Json to_json(const Poly& p) {
    Json coeffs = Json::array();
    for (const Rational& c : p.coeffs()) coeffs.push_back(to_string(c));
    return Json{{"coeffs", coeffs}, {"degree", p.degree()}, {"text", p.to_text()}};
}

Json to_json(const QuadDifferential& q) {
    return Json{{"a1", to_string(q.a1)}, {"a2", to_string(q.a2)}, {"sign", q.sign}};
}

Json to_json(const HyperellipticCurve& c) {
    Json j = to_json(c.p);
    j["genus"] = c.g;
    j["lc_sign"] = c.lc_sign;
    j["real_roots"] = c.roots().real_count();
    j["k"] = c.k();
    return j;
}

Json to_json(const KleinInvariants& inv) {
    return Json{{"a", inv.a}, {"g", inv.g}, {"kind", kind_name(inv.kind)}, {"n", inv.n}};
}

Json to_json(const SpectralInvariants& s) {
    return Json{{"a", s.a},
                {"g_S", s.g_S},
                {"n", s.n},
                {"n_S", s.n_S},
                {"n_minus", s.n_minus},
                {"n_plus", s.n_plus},
                {"n_zero", s.n_zero},
                {"oval_zero_counts", s.oval_zero_counts},
                {"u", s.u}};
}

Json to_json(const ComponentCount& cc) {
    return Json{{"count", cc.count}, {"d", cc.d}, {"group", cc.group}};
}

Json to_json(const OvalTrace& tr) {
    Json decisions = Json::array();
    for (const GluingDecision& d : tr.decisions) {
        const char* kind = d.kind == GluingDecision::ZeroNode        ? "zero"
                           : d.kind == GluingDecision::BranchNode    ? "branch"
                                                                     : "infinity";
        decisions.push_back(Json{{"kind", kind}, {"merged", d.merged}});
    }
    return Json{{"arc_signs", tr.arc_signs},
                {"circles", tr.circles},
                {"decisions", decisions},
                {"oval", tr.oval_index},
                {"samples_used", tr.samples_used},
                {"zero_nodes", tr.zero_nodes}};
}

Json to_json(const ChainPresentation& pres) {
    int n_gen = pres.generator_count();
    Json cols = Json::array();
    for (const gf2::Vec& col : pres.theta_col) cols.push_back(bits(col, n_gen));
    return Json{{"a", pres.a},
                {"case", to_string(pres.which)},
                {"dim", pres.dim()},
                {"g", pres.g},
                {"n", pres.n},
                {"n0", pres.n0},
                {"names", pres.names},
                {"omega", bits(pres.omega, n_gen)},
                {"oval_zero_counts", pres.oval_zero_counts},
                {"relation", bits(pres.relation, n_gen)},
                {"theta_columns", cols},
                {"t", pres.t},
                {"u", pres.u}};
}

Json to_json(const InvariantTuple& t) { return Json::array({t.n, t.a, t.n_plus, t.u_half}); }

Json to_json(const SearchBudget& b) {
    return Json{{"grid", b.use_grid}, {"random_configs", b.random_configs}, {"seed", b.seed}};
}

Json to_json(const Witness& w) {
    return Json{{"kind", kind_name(w.kind)}, {"p", to_json(w.p)}, {"q", to_json(w.q)}};
}

Json to_json(const CensusReport& rep) {
    Json witnesses = Json::object();
    for (const RealizeResult& r : rep.results) {
        if (!r.found) continue;
        Json w = to_json(r.witness);
        w["tried"] = r.tried;
        w["tuple"] = to_json(r.tuple);
        const InvariantTuple& t = r.tuple;
        std::string key = std::to_string(t.n) + "," + std::to_string(t.a) + "," +
                          std::to_string(t.n_plus) + "," + std::to_string(t.u_half);
        witnesses[key] = std::move(w);
    }
    Json missing = Json::array();
    for (const InvariantTuple& t : rep.missing) missing.push_back(to_json(t));
    return Json{{"admissible", rep.admissible_count()},
                {"budget", to_json(rep.budget)},
                {"g", rep.g},
                {"missing", missing},
                {"realized", rep.realized_count()},
                {"schema", 1},
                {"seed", rep.budget.seed},
                {"tried_total", rep.tried_total},
                {"witnesses", witnesses}};
}

Poly poly_from_json(const Json& spec) {
    if (spec.is_string()) return parse_poly(spec.get<std::string>());
    if (spec.is_object() && spec.contains("coeffs")) {
        std::vector<Rational> coeffs;
        for (const Json& c : spec.at("coeffs")) coeffs.push_back(rational_from_json(c));
        return Poly(std::move(coeffs));
    }
    if (spec.is_object() && spec.contains("roots")) {
        std::vector<ComplexQ> roots;
        for (const Json& r : spec.at("roots")) roots.push_back(complex_from_json(r));
        Rational lc(1);
        if (spec.contains("lc")) lc = rational_from_json(spec.at("lc"));
        return poly_from_roots(roots, lc);
    }
    raise(Errc::ParseError, "curve spec must be an expression string, {\"coeffs\": ...},"
                            " or {\"roots\": ..., \"lc\": ...}");
}

}  // namespace hitreal
