#include "sepvar/case_studies.hpp"

#include <chrono>
#include <random>

#include "sepvar/errors.hpp"
#include "sepvar/qmatrix.hpp"

namespace sepvar {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Rational random_value(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

KernelCheck kernel_check(const Derivation& d, std::string label, const std::string& text) {
    Polynomial f = parse_polynomial(text, d.ring());
    Polynomial img = apply(d, f);
    return {std::move(label), std::move(f), std::move(img)};
}

PlinthFact plinth_fact(const Derivation& d, const std::string& slice, const std::string& expected) {
    PlinthFact p{parse_polynomial(slice, d.ring()), Polynomial(d.ring()), parse_polynomial(expected, d.ring())};
    p.image = apply(d, p.slice);
    p.image_matches = p.image == p.expected;
    p.image_invariant = apply(d, p.image).is_zero();
    return p;
}

Ideal product_linear(const RingPtr& prod, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_polynomial(g, prod));
    return Ideal(prod, std::move(ps));
}

CaseComponent linear_component(std::string label, const Ideal& ideal, const Budget& budget) {
    CaseComponent c{std::move(label), ideal, true, linear_dimension(ideal), std::nullopt, {}};
    auto d = dimension(ideal, budget);
    if (d.complete()) {
        c.dimension = d.value->dimension;
        c.independent_set = d.value->independent_set;
    }
    return c;
}

struct Sampler {
    const CaseReport& report;
    std::mt19937_64 rng;

    Point sample(const CaseComponent& c) {
        if (c.linear) return linear_variety_point(c.ideal, rng());
        const Derivation& d = report.derivation;
        Point p;
        for (std::size_t i = 0; i < d.ring()->size(); ++i) p.push_back(random_value(rng));
        Point q = act_on_point(d, random_value(rng), p);
        p.insert(p.end(), q.begin(), q.end());
        return p;
    }
};

void certify_non_containments(CaseReport& r, std::uint64_t seed) {
    Sampler sampler{r, std::mt19937_64(seed)};
    for (const auto& inner : r.components) {
        for (const auto& outer : r.components) {
            if (&inner == &outer) continue;
            NonContainment nc{inner.label, outer.label, false, {}, std::nullopt, Rational(0)};
            for (int attempt = 0; attempt < 32 && !nc.established; ++attempt) {
                const Point p = sampler.sample(inner);
                for (const auto& g : outer.ideal.generators()) {
                    const Rational v = evaluate(g, p);
                    if (!v.is_zero()) {
                        nc.established = true;
                        nc.witness = p;
                        nc.element = g.to_string();
                        nc.value = v;
                        break;
                    }
                }
            }
            r.non_containments.push_back(std::move(nc));
        }
    }
}

CaseReport run_case(std::string name, Derivation d, const std::vector<std::pair<std::string, std::vector<std::string>>>& linear,
                    const std::vector<int>& expected_dims, const CaseOptions& options) {
    if (!d.verify().verified) throw InternalError("case study derivation is not locally nilpotent");
    CaseReport r{std::move(name), d, default_product_names(*d.ring()), {}, {}, {}, false, {}, {}, {}, {}, false, true, {}};
    const RingPtr prod = product_ring(r.names);

    auto start = std::chrono::steady_clock::now();
    GraphIdeal g = graph_ideal(d, r.names, options.budget, options.threads);
    r.timings["graph_ideal"] = seconds_since(start);
    r.graph_complete = g.complete;
    r.graph_stats = g.stats;

    start = std::chrono::steady_clock::now();
    CaseComponent closure{"graph closure", g.ideal, false, std::nullopt, std::nullopt, {}};
    if (g.complete) {
        GbOptions opts;
        opts.threads = options.threads;
        opts.sugar_weights = graph_weights(d);
        opts.sugar_weights.pop_back();
        auto dm = dimension(g.ideal, options.budget, opts);
        if (dm.complete()) {
            closure.dimension = dm.value->dimension;
            closure.independent_set = dm.value->independent_set;
        }
    }
    r.components.push_back(std::move(closure));
    for (const auto& [label, gens] : linear)
        r.components.push_back(linear_component(label, product_linear(prod, gens), options.budget));
    r.timings["dimensions"] = seconds_since(start);

    start = std::chrono::steady_clock::now();
    certify_non_containments(r, options.seed);
    r.timings["non_containment"] = seconds_since(start);

    for (std::size_t i = 0; i < r.components.size(); ++i) {
        const auto& c = r.components[i];
        if (!c.dimension) continue;
        if (*c.dimension != expected_dims[i]) r.consistent = false;
        if (c.linear_dimension && *c.linear_dimension != *c.dimension) r.consistent = false;
    }
    return r;
}

void finish(CaseReport& r) {
    bool all = r.graph_complete;
    for (const auto& k : r.kernel)
        if (!k.in_kernel()) r.consistent = false;
    for (const auto& p : r.plinth)
        if (!p.image_matches || !p.image_invariant) r.consistent = false;
    for (const auto& c : r.components) all = all && c.dimension.has_value();
    for (const auto& nc : r.non_containments) all = all && nc.established;
    r.resolved = all && r.consistent;
}

}  // namespace

Derivation df5_derivation() {
    Derivation d = parse_derivation("ring: x,s,t,u,v\nD(s) = x^3\nD(t) = s\nD(u) = t\nD(v) = x^2\n");
    d.verify();
    return d;
}

Derivation f6_derivation() {
    Derivation d = parse_derivation("ring: x,y,s,t,u,v\nD(s) = x^3\nD(t) = y^3*s\nD(u) = y^3*t\nD(v) = x^2*y^2\n");
    d.verify();
    return d;
}

std::vector<Polynomial> df5_separating_generators() {
    const RingPtr r = df5_derivation().ring();
    std::vector<Polynomial> out;
    for (const char* text : {"x", "2*x^3*t - s^2", "3*x^6*u - 3*x^3*t*s + s^3", "x*v - s",
                             "x^2*t*s - s^2*v + 2*x^3*t*v - 3*x^5*u",
                             "-18*x^3*t*s*u + 9*x^6*u^2 + 8*x^3*t^3 + 6*s^3*u - 3*t^2*s^2"})
        out.push_back(parse_polynomial(text, r));
    return out;
}

CaseReport df5_verify(const CaseOptions& options) {
    CaseReport r = run_case("df5", df5_derivation(), {{"V(x,s) x V(x,s)", {"x_a", "s_a", "x_b", "s_b"}}}, {6, 6},
                            options);
    const auto gens = df5_separating_generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        r.kernel.push_back({"f_" + std::to_string(i + 1), gens[i], apply(r.derivation, gens[i])});
    r.plinth.push_back(plinth_fact(r.derivation, "s", "x^3"));
    r.plinth.push_back(plinth_fact(r.derivation, "3*x^3*u - s*t", "2*x^3*t - s^2"));
    r.assumptions.push_back({"kernel containment", "R^D is contained in k + (x,s)R"});
    finish(r);
    return r;
}

CaseReport f6_verify(const CaseOptions& options) {
    CaseReport r = run_case("f6", f6_derivation(),
                            {{"V(x,y) x V(x,y)", {"x_a", "x_b", "y_a", "y_b"}},
                             {"V(x,s) x V(x,s) with y_a = y_b", {"x_a", "x_b", "s_a", "s_b", "y_a - y_b"}}},
                            {7, 8, 7}, options);
    const Derivation& d = r.derivation;
    r.kernel.push_back(kernel_check(d, "x", "x"));
    r.kernel.push_back(kernel_check(d, "y", "y"));
    r.kernel.push_back(kernel_check(d, "x^3", "x^3"));
    r.kernel.push_back(kernel_check(d, "2x^3y^3t - y^6s^2", "2*x^3*y^3*t - y^6*s^2"));
    r.plinth.push_back(plinth_fact(d, "s", "x^3"));
    r.plinth.push_back(plinth_fact(d, "3*x^3*u - y^3*s*t", "2*x^3*y^3*t - y^6*s^2"));
    r.assumptions.push_back({"kernel containment", "B^D is contained in k + (x,y)B"});
    r.assumptions.push_back({"kernel containment", "B^D is contained in k[y] + (x,s)B"});

    const auto& big = r.components[1].dimension;
    if (big && *big == 8) {
        const int dim_x = static_cast<int>(d.ring()->size());
        r.observations.push_back("the separating variety has a component of dimension 8, while 2 dim X - dim k[X]^D = " +
                                 std::to_string(2 * dim_x) + " - " + std::to_string(dim_x - 1) + " = " +
                                 std::to_string(dim_x + 1));
    }
    finish(r);
    return r;
}

Point linear_variety_point(const Ideal& linear, std::uint64_t seed) {
    for (const auto& g : linear.generators())
        if (g.total_degree() > 1) throw PreconditionError("linear_variety_point: ideal is not linear");
    const RingPtr& ring = linear.ring();
    const auto gb = groebner(linear, ring->order());
    if (gb.basis->is_unit()) throw EmptyVariety();
    std::mt19937_64 rng(seed);
    Point p(ring->size());
    std::vector<bool> pivot(ring->size(), false);
    for (const auto& e : gb.basis->elements())
        for (std::size_t v = 0; v < ring->size(); ++v)
            if (e.leading_monomial().exponent(v)) pivot[v] = true;
    for (std::size_t v = 0; v < ring->size(); ++v)
        if (!pivot[v]) p[v] = random_value(rng);
    // Reduced basis: each pivot occurs only in its own element, with coefficient 1.
    for (const auto& e : gb.basis->elements()) {
        std::size_t lead = 0;
        while (!e.leading_monomial().exponent(lead)) ++lead;
        Rational rest = 0;
        for (const auto& t : e.terms()) {
            if (t.mono == e.leading_monomial()) continue;
            Rational term = t.coeff;
            for (std::size_t v = 0; v < ring->size(); ++v)
                if (t.mono.exponent(v)) term *= p[v];
            rest += term;
        }
        p[lead] = -rest;
    }
    for (const auto& g : linear.generators())
        if (!evaluate(g, p).is_zero()) throw InternalError("linear_variety_point: sample is off the variety");
    return p;
}

int linear_dimension(const Ideal& linear) {
    const RingPtr& ring = linear.ring();
    const auto& gens = linear.generators();
    QMatrix a(gens.size(), ring->size() + 1);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].total_degree() > 1) throw PreconditionError("linear_dimension: ideal is not linear");
        for (const auto& t : gens[i].terms()) {
            std::size_t col = ring->size();
            for (std::size_t v = 0; v < ring->size(); ++v)
                if (t.mono.exponent(v)) col = v;
            a(i, col) = t.coeff;
        }
    }
    QMatrix forms(gens.size(), ring->size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t v = 0; v < ring->size(); ++v) forms(i, v) = a(i, v);
    if (mat_rank(a) != mat_rank(forms)) throw EmptyVariety();
    return static_cast<int>(ring->size() - mat_rank(forms));
}

}  // namespace sepvar
