#include "doctest.h"

#include <random>

#include "sepvar/derivation.hpp"

using namespace sepvar;

namespace {

Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }

// x_k -> x_{k-1}, written out directly.
Derivation weitzenbock_by_hand(int n) {
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
    auto r = Ring::make(names);
    std::vector<Polynomial> images{Polynomial(r)};
    for (int i = 1; i <= n; ++i) images.push_back(Polynomial::variable(r, static_cast<std::size_t>(i - 1)));
    Derivation d(r, images);
    d.verify();
    return d;
}

Derivation df5() {
    return parse_derivation("ring: x,s,t,u,v\nD(s) = x^3\nD(t) = s\nD(u) = t\nD(v) = x^2\n");
}

Point random_point(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> v(-9, 9);
    Point p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(q(v(rng), 1 + std::abs(v(rng)) % 4));
    return p;
}

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r) {
    std::uniform_int_distribution<long> c(-4, 4);
    std::uniform_int_distribution<unsigned> e(0, 2);
    std::vector<Term> ts;
    for (int k = 0; k < 3; ++k) {
        Monomial m;
        for (std::size_t i = 0; i < r->size(); ++i) m.set_exponent(i, e(rng));
        ts.push_back({m, q(c(rng))});
    }
    return Polynomial::from_terms(r, ts);
}

}  // namespace

TEST_CASE("apply examples") {
    const Derivation d2 = weitzenbock_by_hand(2);
    const auto& r = d2.ring();
    CHECK(apply(d2, parse_polynomial("x0*x2 - 1/2*x1^2", r)).is_zero());
    CHECK(apply(d2, Polynomial::constant(r, 1)).is_zero());
    const Derivation d = df5();
    CHECK(apply(d, Polynomial::variable(d.ring(), "s")) == parse_polynomial("x^3", d.ring()));
    CHECK(apply(d, parse_polynomial("3*x^3*u - s*t", d.ring())) == parse_polynomial("2*x^3*t - s^2", d.ring()));
    CHECK_THROWS_AS(apply(d, Polynomial::variable(r, 0)), RingMismatch);
}

TEST_CASE("nilpotency witnesses") {
    for (int n = 1; n <= 8; ++n) {
        Derivation d = weitzenbock_by_hand(n);
        const auto rep = verify_locally_nilpotent(d);
        REQUIRE(rep.verified);
        for (int k = 0; k <= n; ++k) CHECK(rep.steps[static_cast<std::size_t>(k)] == static_cast<unsigned>(k + 1));
    }
    Derivation d = df5();
    const auto rep = d.verify();
    REQUIRE(rep.verified);
    for (unsigned s : rep.steps) CHECK(s <= 4);

    auto r = Ring::make({"a", "b"});
    Derivation zero(r, {Polynomial(r), Polynomial(r)});
    CHECK(zero.verify().steps == std::vector<unsigned>{1, 1});

    Derivation rot(r, {Polynomial::variable(r, "b"), -Polynomial::variable(r, "a")});
    const auto bad = rot.verify(10);
    CHECK_FALSE(bad.verified);
    CHECK(bad.surviving == "a");
    CHECK_FALSE(rot.is_verified());
    CHECK_THROWS_AS(exp_action(rot, Polynomial::variable(r, "a")), PreconditionError);
}

TEST_CASE("exp action examples") {
    const Derivation d2 = weitzenbock_by_hand(2);
    const Polynomial e = exp_action(d2, Polynomial::variable(d2.ring(), "x2"));
    CHECK(e == parse_polynomial("x2 + t*x1 + 1/2*t^2*x0", e.ring()));
    const Polynomial f1 = parse_polynomial("x0*x2 - 1/2*x1^2", d2.ring());
    CHECK(exp_action(d2, f1) == f1.in_ring(e.ring()));
    const Derivation d1 = weitzenbock_by_hand(1);
    const Polynomial e1 = exp_action(d1, Polynomial::variable(d1.ring(), "x1"));
    CHECK(e1 == parse_polynomial("x1 + t*x0", e1.ring()));
    CHECK_THROWS_AS(exp_action(d1, e1), RingMismatch);
    CHECK_THROWS_AS(exp_action(d1, Polynomial::variable(d1.ring(), "x0"), "x0"), PreconditionError);
}

TEST_CASE("exp action is a ring homomorphism") {
    std::mt19937_64 rng(31);
    for (int n = 1; n <= 4; ++n) {
        const Derivation d = weitzenbock_by_hand(n);
        for (int i = 0; i < 25; ++i) {
            const Polynomial f = random_poly(rng, d.ring()), g = random_poly(rng, d.ring());
            CHECK(exp_action(d, f * g) == exp_action(d, f) * exp_action(d, g));
        }
    }
}

TEST_CASE("act on point examples") {
    const Derivation d2 = weitzenbock_by_hand(2);
    CHECK(act_on_point(d2, q(1), Point{q(1), q(0), q(0)}) == Point{q(1), q(1), q(1, 2)});
    const Point p{q(3), q(-1), q(2, 5)};
    CHECK(act_on_point(d2, q(0), p) == p);
    CHECK_THROWS_AS(act_on_point(d2, q(1), Point{q(1)}), PreconditionError);
}

TEST_CASE("action law and invariance over random samples") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> pick(1, 6);
    int samples = 0;
    for (int i = 0; i < 1000; ++i) {
        const int n = pick(rng);
        const Derivation d = weitzenbock_by_hand(n);
        const Point p = random_point(rng, d.ring()->size());
        const Rational t = random_point(rng, 1)[0], s = random_point(rng, 1)[0];
        CHECK(act_on_point(d, t, act_on_point(d, s, p)) == act_on_point(d, t + s, p));
        // x0 and x0*x2 - x1^2/2 are invariants for every n >= 2.
        const Point tp = act_on_point(d, t, p);
        CHECK(tp[0] == p[0]);
        if (n >= 2) {
            const Polynomial f1 = parse_polynomial("x0*x2 - 1/2*x1^2", d.ring());
            CHECK(evaluate(f1, tp) == evaluate(f1, p));
        }
        ++samples;
    }
    const Derivation d = df5();
    Derivation dv = d;
    dv.verify();
    const Polynomial f2 = parse_polynomial("2*x^3*t - s^2", dv.ring());
    for (int i = 0; i < 1000; ++i) {
        const Point p = random_point(rng, 5);
        const Rational t = random_point(rng, 1)[0], s = random_point(rng, 1)[0];
        CHECK(act_on_point(dv, t, act_on_point(dv, s, p)) == act_on_point(dv, t + s, p));
        CHECK(evaluate(f2, act_on_point(dv, t, p)) == evaluate(f2, p));
        ++samples;
    }
    CHECK(samples >= 1000);
}

TEST_CASE("slice localization examples") {
    const Derivation d1 = weitzenbock_by_hand(1);
    const LocalSlice s1 = make_local_slice(d1, Polynomial::variable(d1.ring(), "x1"));
    CHECK(s1.ds == Polynomial::variable(d1.ring(), "x0"));
    CHECK(slice_localize(d1, s1, Polynomial::variable(d1.ring(), "x1")).numerator.is_zero());
    const Localized k = slice_localize(d1, s1, Polynomial::variable(d1.ring(), "x0"));
    CHECK(k.numerator == Polynomial::variable(d1.ring(), "x0"));
    CHECK(k.power == 0);

    const Derivation d2 = weitzenbock_by_hand(2);
    const LocalSlice s2 = make_local_slice(d2, Polynomial::variable(d2.ring(), "x1"));
    const Localized l = slice_localize(d2, s2, Polynomial::variable(d2.ring(), "x2"));
    CHECK(l.numerator == parse_polynomial("x0*x2 - 1/2*x1^2", d2.ring()));
    CHECK(l.power == 1);

    CHECK_THROWS_AS(make_local_slice(d2, Polynomial::variable(d2.ring(), "x0")), PreconditionError);
    CHECK_THROWS_AS(make_local_slice(d2, Polynomial::variable(d2.ring(), "x2")), PreconditionError);
}

TEST_CASE("localized coordinates are invariants") {
    for (int n = 1; n <= 6; ++n) {
        const Derivation d = weitzenbock_by_hand(n);
        const LocalSlice s = make_local_slice(d, Polynomial::variable(d.ring(), "x1"));
        for (std::size_t i = 0; i < d.ring()->size(); ++i) {
            const Localized l = slice_localize(d, s, Polynomial::variable(d.ring(), i));
            CHECK(apply(d, l.numerator).is_zero());
        }
    }
}

TEST_CASE("orbit decision examples") {
    const Derivation d2 = weitzenbock_by_hand(2);
    const LocalSlice s = make_local_slice(d2, Polynomial::variable(d2.ring(), "x1"));
    const Point p{q(1), q(0), q(0)};
    auto same = orbit_decide(d2, s, p, Point{q(1), q(1), q(1, 2)});
    CHECK(same.kind == OrbitDecision::Kind::SameOrbit);
    CHECK(same.t == q(1));

    auto sep = orbit_decide(d2, s, p, Point{q(1), q(0), q(1)});
    CHECK(sep.kind == OrbitDecision::Kind::Separated);
    REQUIRE(sep.witness.has_value());
    CHECK(*sep.witness == parse_polynomial("x0*x2 - 1/2*x1^2", d2.ring()));
    CHECK(sep.value_p == q(0));
    CHECK(sep.value_q == q(1));

    auto und = orbit_decide(d2, s, Point{q(0), q(1), q(2)}, Point{q(0), q(1), q(3)});
    CHECK(und.kind == OrbitDecision::Kind::Undecided);
}

TEST_CASE("orbit decision recovers random translations") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 200; ++i) {
        const Derivation d = weitzenbock_by_hand(2 + i % 5);
        const LocalSlice s = make_local_slice(d, Polynomial::variable(d.ring(), "x1"));
        Point p = random_point(rng, d.ring()->size());
        if (p[0].is_zero()) p[0] = q(1);
        const Rational t = random_point(rng, 1)[0];
        auto r = orbit_decide(d, s, p, act_on_point(d, t, p));
        CHECK(r.kind == OrbitDecision::Kind::SameOrbit);
        CHECK(r.t == t);
        Point other = act_on_point(d, t, p);
        other.back() += q(1);
        CHECK(orbit_decide(d, s, p, other).kind == OrbitDecision::Kind::Separated);
    }
}

TEST_CASE("graph ideal examples") {
    const Derivation d1 = weitzenbock_by_hand(1);
    ProductNames names{{"x0", "x1"}, {"y0", "y1"}, "t"};
    const GraphIdeal g1 = graph_ideal(d1, names);
    REQUIRE(g1.complete);
    REQUIRE(g1.ideal.generators().size() == 1);
    const Polynomial y0x0 = parse_polynomial("y0 - x0", g1.ideal.ring());
    CHECK(g1.ideal.generators()[0] == y0x0);
    CHECK(dimension(g1.ideal).value->dimension == 3);

    const Derivation d2 = weitzenbock_by_hand(2);
    ProductNames n2{{"x0", "x1", "x2"}, {"y0", "y1", "y2"}, "t"};
    const GraphIdeal g2 = graph_ideal(d2, n2);
    REQUIRE(g2.complete);
    CHECK(dimension(g2.ideal).value->dimension == 4);
    const Polynomial df1 = delta(parse_polynomial("x0*x2 - 1/2*x1^2", d2.ring()), n2, g2.ideal.ring());
    auto gb = groebner(g2.ideal, g2.ideal.ring()->order());
    CHECK(normal_form(df1, *gb.basis).is_zero());

    auto r = Ring::make({"a", "b"});
    const Derivation zero(r, {Polynomial(r), Polynomial(r)});
    const GraphIdeal gz = graph_ideal(zero);
    REQUIRE(gz.complete);
    CHECK(gz.ideal.generators().size() == 2);
    CHECK(gz.ideal.generators()[0] == parse_polynomial("a_b - a_a", gz.ideal.ring()));
    CHECK(gz.ideal.generators()[1] == parse_polynomial("b_b - b_a", gz.ideal.ring()));
}

TEST_CASE("graph ideals vanish on sampled graph points") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 4; ++n) {
        const Derivation d = weitzenbock_by_hand(n);
        const GraphIdeal g = graph_ideal(d);
        REQUIRE(g.complete);
        for (int i = 0; i < 30; ++i) {
            const Point p = random_point(rng, d.ring()->size());
            const Point tp = act_on_point(d, random_point(rng, 1)[0], p);
            Point both = p;
            both.insert(both.end(), tp.begin(), tp.end());
            for (const auto& gen : g.ideal.generators()) CHECK(evaluate(gen, both).is_zero());
        }
    }
    const Derivation d = df5();
    const GraphIdeal g = graph_ideal(d);
    REQUIRE(g.complete);
    Derivation dv = d;
    dv.verify();
    for (int i = 0; i < 30; ++i) {
        const Point p = random_point(rng, 5);
        const Point tp = act_on_point(dv, random_point(rng, 1)[0], p);
        Point both = p;
        both.insert(both.end(), tp.begin(), tp.end());
        for (const auto& gen : g.ideal.generators()) CHECK(evaluate(gen, both).is_zero());
    }
}

TEST_CASE("graph weights make the graph ideal homogeneous") {
    const Derivation d = df5();
    // x, s, t, u, v then the same for the right copy, then the parameter.
    CHECK(graph_weights(d) == std::vector<unsigned>{1, 4, 5, 6, 3, 1, 4, 5, 6, 3, 1});
    auto r = Ring::make({"a", "b"});
    const Derivation mixed(r, {Polynomial(r), parse_polynomial("a + 1", r)});
    CHECK(graph_weights(mixed) == std::vector<unsigned>(5, 1));
}

TEST_CASE("exact orbit membership") {
    const Derivation d6 = weitzenbock_by_hand(6);
    Point a(7), b(7);
    a[3] = q(1);
    b[3] = q(1);
    b[4] = q(1);
    const auto no = orbit_membership_exact(d6, a, b);
    CHECK_FALSE(no.in_orbit);
    CHECK(no.gcd == std::vector<Rational>{q(1)});
    CHECK(no.equations[4] == "t - 1");
    CHECK(no.equations[5] == "1/2*t^2");

    std::mt19937_64 rng(8);
    for (int i = 0; i < 50; ++i) {
        const Point p = random_point(rng, 7);
        const Rational t = random_point(rng, 1)[0];
        const auto yes = orbit_membership_exact(d6, p, act_on_point(d6, t, p));
        CHECK(yes.in_orbit);
        if (!p[0].is_zero() || !p[1].is_zero() || !p[2].is_zero() || !p[3].is_zero() || !p[4].is_zero() || !p[5].is_zero())
            CHECK(yes.t == t);
    }
    Point fixed(7);
    fixed[0] = q(0);
    fixed[6] = q(5);
    const auto f = orbit_membership_exact(d6, fixed, fixed);
    CHECK(f.in_orbit);
    CHECK(f.t == q(0));
}

TEST_CASE("derivation file format") {
    const Derivation d = parse_derivation("# F6\nring: x,y,s,t,u,v\nD(s) = x^3\nD(t) = y^3*s\nD(u) = y^3*t\nD(v) = x^2*y^2\n");
    CHECK(d.image(0).is_zero());
    CHECK(d.image(3) == parse_polynomial("y^3*s", d.ring()));
    CHECK(parse_derivation(d.to_string()).images() == d.images());
    CHECK_THROWS_AS(parse_derivation("ring: a\nD(b) = a\n"), ParseError);
    CHECK_THROWS_AS(parse_derivation("ring: a,b\nD(b) = a\nD(b) = a\n"), ParseError);
    CHECK_THROWS_AS(parse_derivation("ring: a,b\nE(b) = a\n"), ParseError);
    CHECK_THROWS_AS(parse_derivation("D(b) = a\n"), ParseError);
    CHECK(parse_point("0, -1/2 ,3") == Point{q(0), q(-1, 2), q(3)});
    CHECK(format_point(Point{q(1), q(-1, 2)}) == "(1, -1/2)");
}
