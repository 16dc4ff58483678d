#include "sepvar/report.hpp"

#include <sstream>

namespace sepvar {

namespace {

Json strings(const std::vector<Polynomial>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

Json point_json(const Point& p) {
    Json a = Json::array();
    for (const auto& v : p) a.push_back(v.to_string());
    return a;
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json laurent_list(const std::vector<LaurentPoly>& v) {
    Json a = Json::array();
    for (const auto& p : v) a.push_back(p.to_string());
    return a;
}

std::string dim_text(const std::optional<int>& d) { return d ? std::to_string(*d) : "unknown"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json ideal_json(const Ideal& ideal) {
    return Json{{"ring", ideal.ring()->names()}, {"generators", strings(ideal.generators())}};
}

Json stats_json(const GbStats& s) {
    return Json{{"pairs_created", s.pairs_created},   {"pairs_reduced", s.pairs_reduced},
                {"zero_reductions", s.zero_reductions}, {"reduction_steps", s.reduction_steps},
                {"basis_size", s.basis_size},         {"max_sugar", s.max_sugar}};
}

Json basic_json(const Decomposition& d) {
    Json j;
    j["n"] = d.n;
    Json inv = Json::array();
    for (int m = 0; m <= d.n / 2; ++m) {
        Json row{{"m", m}, {"f", invariant_f(d.n, m).to_string()}};
        if (m <= (d.n - 1) / 2) {
            const LocalSlice s = slice_s(d.n, m);
            row["s"] = s.s.to_string();
        }
        inv.push_back(row);
    }
    j["invariants"] = inv;
    j["graph_ideal"] = ideal_json(d.graph_ideal);
    j["graph_ideal"]["complete"] = d.graph_complete;
    j["graph_ideal"]["stats"] = stats_json(d.graph_stats);

    Json comps = Json::array();
    Json dims = Json::array();
    for (const auto& c : d.components) {
        comps.push_back({{"label", c.label},
                         {"status", c.status == ComponentReport::Status::Genuine ? "genuine component"
                                                                                   : "graph closure"},
                         {"dimension", optional_int(c.dimension)},
                         {"independent_set", c.independent_set},
                         {"ideal", ideal_json(c.ideal)}});
        dims.push_back(optional_int(c.dimension));
    }
    j["components"] = comps;
    j["dimensions"] = dims;

    Json cont = Json::array();
    for (const auto& c : d.containments) {
        cont.push_back({{"label", c.label},
                        {"candidate", ideal_json(c.candidate)},
                        {"decided", c.decided},
                        {"contained", c.contained},
                        {"normal_forms", c.normal_forms},
                        {"offending", c.offending ? Json(*c.offending) : Json(nullptr)}});
    }
    j["containments"] = cont;

    if (d.non_containment) {
        const auto& e = *d.non_containment;
        Json nc{{"path", e.path == NonContainmentEvidence::Path::Algebraic ? "algebraic" : "fallback"},
                {"established", e.established},
                {"conditional", e.conditional},
                {"note", e.note},
                {"witness_a", point_json(e.witness_a)},
                {"witness_b", point_json(e.witness_b)}};
        if (e.nonvanishing_generator) {
            nc["nonvanishing_generator"] = *e.nonvanishing_generator;
            nc["value"] = e.value.to_string();
            nc["from_partial_basis"] = e.from_partial_basis;
        }
        if (e.orbit) {
            nc["orbit"] = {{"in_orbit", e.orbit->in_orbit},
                           {"gcd", point_json(e.orbit->gcd)},
                           {"equations", e.orbit->equations}};
        }
        if (e.m1_value) nc["m1_value"] = e.m1_value->to_string();
        j["non_containment"] = nc;
    } else {
        j["non_containment"] = nullptr;
    }
    j["resolved"] = d.resolved;
    j["consistent"] = d.consistent;
    j["corollary"] = d.corollary ? Json(*d.corollary) : Json(nullptr);
    return j;
}

Json case_json(const CaseReport& r) {
    Json j;
    j["name"] = r.name;
    j["derivation"] = r.derivation.to_string();
    j["product_ring"] = {{"left", r.names.left}, {"right", r.names.right}, {"parameter", r.names.parameter}};
    Json kernel = Json::array();
    for (const auto& k : r.kernel)
        kernel.push_back({{"label", k.label}, {"f", k.f.to_string()}, {"image", k.image.to_string()},
                          {"in_kernel", k.in_kernel()}});
    j["kernel"] = kernel;
    Json plinth = Json::array();
    for (const auto& p : r.plinth)
        plinth.push_back({{"slice", p.slice.to_string()},
                          {"image", p.image.to_string()},
                          {"expected", p.expected.to_string()},
                          {"matches", p.image_matches},
                          {"invariant", p.image_invariant}});
    j["plinth"] = plinth;
    Json assumptions = Json::array();
    for (const auto& a : r.assumptions) assumptions.push_back({{"label", a.label}, {"statement", a.statement}});
    j["assumptions"] = assumptions;
    j["graph"] = {{"complete", r.graph_complete}, {"stats", stats_json(r.graph_stats)}};

    Json comps = Json::array();
    Json dims = Json::array();
    for (const auto& c : r.components) {
        comps.push_back({{"label", c.label},
                         {"linear", c.linear},
                         {"linear_dimension", optional_int(c.linear_dimension)},
                         {"dimension", optional_int(c.dimension)},
                         {"independent_set", c.independent_set},
                         {"ideal", ideal_json(c.ideal)}});
        dims.push_back(optional_int(c.dimension));
    }
    j["components"] = comps;
    j["dimensions"] = dims;
    Json nc = Json::array();
    for (const auto& n : r.non_containments)
        nc.push_back({{"inner", n.inner},
                      {"outer", n.outer},
                      {"established", n.established},
                      {"witness", point_json(n.witness)},
                      {"element", n.element ? Json(*n.element) : Json(nullptr)},
                      {"value", n.value.to_string()}});
    j["non_containments"] = nc;
    j["observations"] = r.observations;
    j["resolved"] = r.resolved;
    j["consistent"] = r.consistent;
    return j;
}

bool LemmaTable::rows_hold() const {
    for (const auto& r : rows)
        if (!r.holds) return false;
    return true;
}

LemmaTable lemma_table(int max_m, int sweep_max) {
    LemmaTable t;
    t.sweep_max = sweep_max;
    for (int m = 1; m <= max_m; ++m) t.rows.push_back(lemma_b_value(m));
    for (int p = 0; p <= sweep_max; ++p)
        for (int q = 0; q <= p; ++q)
            for (int r = 0; r <= sweep_max; ++r) {
                ++t.checked;
                const BinomialSum s = binomial_sum(p, q, r);
                if (s.lhs == s.rhs) continue;
                t.failures_stated.push_back({p, q, r});
                if (r <= p) t.failures_used.push_back({p, q, r});
            }
    return t;
}

Json lemma_json(const LemmaTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"m", r.m}, {"value", r.value.to_string()}, {"expected", r.expected.to_string()},
                        {"holds", r.holds}});
    auto triples = [](const std::vector<std::array<int, 3>>& v, std::size_t limit) {
        Json a = Json::array();
        for (std::size_t i = 0; i < v.size() && i < limit; ++i) {
            const auto [p, q, r] = v[i];
            const BinomialSum s = binomial_sum(p, q, r);
            a.push_back({{"p", p}, {"q", q}, {"r", r}, {"lhs", s.lhs.to_string()}, {"rhs", s.rhs.to_string()}});
        }
        return a;
    };
    return Json{{"rows", rows},
                {"rows_hold", t.rows_hold()},
                {"binomial_sweep",
                 {{"max", t.sweep_max},
                  {"checked", t.checked},
                  {"failures_r_le_p", t.failures_used.size()},
                  {"failures_total", t.failures_stated.size()},
                  {"first_failures", triples(t.failures_stated, 10)}}}};
}

Json curve_json(const Curve& c, const CurveCheck& check) {
    Json a = Json::array();
    for (std::size_t i = 0; i < c.A.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < c.A.cols(); ++k) row.push_back(c.A(i, k).to_string());
        a.push_back(row);
    }
    return Json{{"n", c.n},
                {"a", point_json(c.a)},
                {"b", point_json(c.b)},
                {"A", a},
                {"p", laurent_list(c.p)},
                {"q", laurent_list(c.q)},
                {"x", laurent_list(c.x)},
                {"y", laurent_list(c.y)},
                {"checks",
                 {{"polynomial", check.polynomial},
                  {"endpoints", check.endpoints},
                  {"group_identity", check.group_identity},
                  {"mismatches", check.mismatches}}},
                {"ok", check.ok()}};
}

std::string basic_text(const Decomposition& d) {
    std::ostringstream os;
    os << "V_" << d.n << " (D_" << d.n << " = x0 d/dx1 + ... + x" << d.n - 1 << " d/dx" << d.n << ")\n";
    os << "graph ideal: " << d.graph_ideal.generators().size() << " generators"
       << (d.graph_complete ? "" : " (partial, budget exhausted)") << "\n";
    os << "components:\n";
    for (const auto& c : d.components)
        os << "  " << c.label << ": dimension " << dim_text(c.dimension)
           << (c.status == ComponentReport::Status::Genuine ? " (genuine component)" : "") << "\n";
    for (const auto& c : d.containments) {
        os << "containment " << c.label << " in graph closure: ";
        if (!c.decided)
            os << "undecided\n";
        else
            os << (c.contained ? "certified (all normal forms zero)" : "FAILS at " + c.offending.value_or("?")) << "\n";
    }
    if (d.non_containment) {
        const auto& e = *d.non_containment;
        os << "non-containment of M_{" << d.n << ",2}: " << (e.established ? "established" : "not established")
           << " via " << (e.path == NonContainmentEvidence::Path::Algebraic ? "algebraic" : "fallback") << " path\n";
        os << "  witness " << format_point(e.witness_a) << ", " << format_point(e.witness_b) << "\n";
        if (e.nonvanishing_generator) os << "  " << *e.nonvanishing_generator << " = " << e.value << " at the witness\n";
        if (e.conditional) os << "  " << e.note << "\n";
    }
    if (d.corollary) os << "corollary: " << *d.corollary << "\n";
    os << "resolved: " << yes_no(d.resolved) << "\n";
    return os.str();
}

std::string case_text(const CaseReport& r) {
    std::ostringstream os;
    os << r.name << ": " << r.derivation.to_string();
    for (const auto& k : r.kernel)
        os << "  D(" << k.label << ") = " << k.image.to_string() << (k.in_kernel() ? "  [invariant]" : "  [NOT invariant]")
           << "\n";
    for (const auto& p : r.plinth)
        os << "  D(" << p.slice.to_string() << ") = " << p.image.to_string()
           << (p.image_matches && p.image_invariant ? "  [plinth element]" : "  [MISMATCH]") << "\n";
    for (const auto& a : r.assumptions) os << "  assumed: " << a.statement << "\n";
    os << "components:\n";
    for (const auto& c : r.components) {
        os << "  " << c.label << ": dimension " << dim_text(c.dimension);
        if (c.linear_dimension) os << " (linear count " << *c.linear_dimension << ")";
        os << "\n";
    }
    for (const auto& n : r.non_containments)
        os << "  " << n.inner << " not inside " << n.outer << ": " << (n.established ? "certified" : "not established")
           << "\n";
    for (const auto& o : r.observations) os << "observation: " << o << "\n";
    os << "resolved: " << yes_no(r.resolved) << "\n";
    return os.str();
}

std::string lemma_text(const LemmaTable& t) {
    std::ostringstream os;
    os << "m  value  expected  result\n";
    for (const auto& r : t.rows)
        os << r.m << "  " << r.value << "  " << r.expected << "  " << (r.holds ? "pass" : "FAIL") << "\n";
    os << "binomial sweep p,r <= " << t.sweep_max << ", q <= p: " << t.checked << " triples, "
       << t.failures_stated.size() << " failures (" << t.failures_used.size() << " with r <= p)\n";
    return os.str();
}

std::string curve_text(const Curve& c, const CurveCheck& check) {
    std::ostringstream os;
    auto vec = [](const std::vector<LaurentPoly>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
        return s + ")";
    };
    os << "x(u) = " << vec(c.x) << "\n";
    os << "y(u) = " << vec(c.y) << "\n";
    os << "polynomial: " << yes_no(check.polynomial) << "\n";
    os << "endpoints: " << yes_no(check.endpoints) << "\n";
    os << "group identity: " << yes_no(check.group_identity) << "\n";
    for (const auto& m : check.mismatches) os << "  " << m << "\n";
    return os.str();
}

}  // namespace sepvar
