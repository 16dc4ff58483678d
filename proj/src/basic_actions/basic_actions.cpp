#include "sepvar/basic_actions.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "sepvar/errors.hpp"

namespace sepvar {

namespace {

Rational inv_factorial(int k) { return Rational(mpz_class(1), factorial(static_cast<unsigned>(k))); }

Rational sign_pow(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

void require_n(int n, const char* where) {
    if (n < 1) throw PreconditionError(std::string(where) + ": n must be at least 1");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned deg) {
    std::vector<Monomial> out;
    if (deg == 1) {
        for (std::size_t i = 0; i < nvars; ++i) out.push_back(Monomial::variable(i));
        return out;
    }
    for (std::size_t i = 0; i < nvars; ++i)
        for (std::size_t j = i; j < nvars; ++j) out.push_back(Monomial::variable(i) * Monomial::variable(j));
    return out;
}

Polynomial var(const RingPtr& r, const std::string& name) { return Polynomial::variable(r, name); }

std::string idx_name(const char* base, int i) { return base + std::to_string(i); }

}  // namespace

BasicAction weitzenbock(int n) {
    require_n(n, "weitzenbock");
    const RingPtr r = basic_ring(n);
    std::vector<Polynomial> images;
    images.emplace_back(r);
    for (int k = 1; k <= n; ++k) images.push_back(Polynomial::variable(r, static_cast<std::size_t>(k - 1)));
    BasicAction a{n, n / 2, (n - 1) / 2, 0, Derivation(r, std::move(images))};
    a.delta = a.m - a.m_prime;
    a.derivation.verify();
    return a;
}

RingPtr basic_ring(int n) {
    require_n(n, "basic_ring");
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back(idx_name("x", i));
    return Ring::make(std::move(names));
}

ProductNames basic_product_names(int n) {
    require_n(n, "basic_product_names");
    ProductNames p;
    for (int i = 0; i <= n; ++i) {
        p.left.push_back(idx_name("x", i));
        p.right.push_back(idx_name("y", i));
    }
    p.parameter = "t";
    return p;
}

RingPtr basic_product_ring(int n) { return product_ring(basic_product_names(n)); }

Polynomial invariant_f(int n, int m) {
    require_n(n, "invariant_f");
    if (m < 0 || m > n / 2) throw PreconditionError("invariant_f: m out of range");
    const RingPtr r = basic_ring(n);
    if (m == 0) return Polynomial::variable(r, std::size_t{0});
    Polynomial f(r);
    for (int k = 0; k < m; ++k) {
        f += sign_pow(k) * (Polynomial::variable(r, static_cast<std::size_t>(k)) *
                            Polynomial::variable(r, static_cast<std::size_t>(2 * m - k)));
    }
    const Polynomial xm = Polynomial::variable(r, static_cast<std::size_t>(m));
    f += (sign_pow(m) * Rational(mpz_class(1), mpz_class(2))) * (xm * xm);
    return f;
}

LocalSlice slice_s(int n, int m) {
    require_n(n, "slice_s");
    if (m < 0 || m > (n - 1) / 2) throw PreconditionError("slice_s: m out of range");
    const BasicAction act = weitzenbock(n);
    const RingPtr r = act.derivation.ring();
    const Polynomial f = invariant_f(n, m);

    std::vector<Monomial> cols = monomials_of_degree(r->size(), m == 0 ? 1 : 2);
    std::sort(cols.begin(), cols.end(), [&r](const Monomial& a, const Monomial& b) { return r->compare(a, b) > 0; });

    std::vector<Polynomial> images;
    std::vector<Monomial> rows;
    auto row_of = [&rows](const Monomial& mono) {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i] == mono) return i;
        rows.push_back(mono);
        return rows.size() - 1;
    };
    for (const auto& c : cols) {
        images.push_back(apply(act.derivation, Polynomial::monomial(r, c)));
        for (const auto& t : images.back().terms()) row_of(t.mono);
    }
    for (const auto& t : f.terms()) row_of(t.mono);

    QMatrix a(rows.size(), cols.size());
    std::vector<Rational> rhs(rows.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& t : images[j].terms()) a(row_of(t.mono), j) = t.coeff;
    for (const auto& t : f.terms()) rhs[row_of(t.mono)] = t.coeff;

    const auto sol = solve_particular(a, rhs);
    if (!sol) throw InternalError("slice_s: no solution in the ansatz space");
    Polynomial s(r);
    for (std::size_t j = 0; j < cols.size(); ++j)
        if (!(*sol)[j].is_zero()) s += Polynomial::monomial(r, cols[j], (*sol)[j]);
    if (!(apply(act.derivation, s) == f)) throw InternalError("slice_s: D s != f after solve");
    return make_local_slice(act.derivation, s);
}

Ideal ideal_I(int n) {
    require_n(n, "ideal_I");
    const RingPtr r = basic_ring(n);
    std::vector<Polynomial> gens;
    for (int j = 0; j <= (n - 1) / 2; ++j) gens.push_back(Polynomial::variable(r, static_cast<std::size_t>(j)));
    return Ideal(r, std::move(gens));
}

Outcome<RadicalIdentityCheck> check_ideal_I(int n, const Budget& budget) {
    const Ideal in = ideal_I(n);
    const int mp = (n - 1) / 2;
    std::vector<Polynomial> fs;
    for (int j = 0; j <= mp; ++j) fs.push_back(invariant_f(n, j));
    const Ideal fideal(in.ring(), fs);

    Outcome<RadicalIdentityCheck> out;
    RadicalIdentityCheck check;
    check.holds = true;
    for (const auto& x : in.generators()) {
        auto rc = radical_member(x, fideal, budget);
        out.stats.reduction_steps += rc.stats.reduction_steps;
        if (!rc.complete()) {
            out.stats = rc.stats;
            return out;
        }
        check.holds = check.holds && rc.value->member;
        check.variables_in_radical.push_back(*rc.value);
    }
    const auto gb = groebner(in, in.ring()->order());
    for (const auto& f : fs) {
        const Polynomial nf = normal_form(f, *gb.basis);
        check.holds = check.holds && nf.is_zero();
        check.invariants_in_I.push_back(nf.to_string());
    }
    out.value = std::move(check);
    return out;
}

std::vector<Candidate> sep_presentation(int n) {
    require_n(n, "sep_presentation");
    const RingPtr p = basic_product_ring(n);
    const int m = n / 2;
    const int mp = (n - 1) / 2;
    std::vector<Polynomial> base;
    for (int j = 0; j <= mp; ++j) base.push_back(var(p, idx_name("x", j)));
    for (int j = 0; j <= mp; ++j) base.push_back(var(p, idx_name("y", j)));

    std::vector<Candidate> out;
    out.push_back({"graph closure", std::nullopt});
    if (n % 2 == 1) {
        out.push_back({"V(I_n) x V(I_n)", Ideal(p, base)});
    } else {
        const Polynomial xm = var(p, idx_name("x", m));
        const Polynomial ym = var(p, idx_name("y", m));
        if (m % 2 == 1) {
            base.push_back(xm * xm - ym * ym);
            out.push_back({"V(delta(x_m^2)) in V(I_n) x V(I_n)", Ideal(p, base)});
        } else {
            base.push_back(ym - xm);
            out.push_back({"V(delta(x_m)) in V(I_n) x V(I_n)", Ideal(p, base)});
        }
    }
    return out;
}

Ideal m_set_ideal(int n, int i) {
    require_n(n, "m_set_ideal");
    if (n % 2 != 0) throw PreconditionError("m_set_ideal: n must be even");
    if (i != 1 && i != 2) throw PreconditionError("m_set_ideal: i must be 1 or 2");
    const RingPtr p = basic_product_ring(n);
    const int m = n / 2;
    std::vector<Polynomial> gens;
    for (int j = 0; j < m; ++j) gens.push_back(var(p, idx_name("x", j)));
    for (int j = 0; j < m; ++j) gens.push_back(var(p, idx_name("y", j)));
    gens.push_back(var(p, idx_name("y", m)) - sign_pow(i) * var(p, idx_name("x", m)));
    return Ideal(p, std::move(gens));
}

ContainmentCertificate certify_linear_containment(const std::string& label, const Ideal& candidate,
                                                  const std::vector<Polynomial>& graph_generators) {
    ContainmentCertificate c{label, candidate, true, true, {}, std::nullopt};
    for (const auto& g : candidate.generators())
        if (g.total_degree() > 1) throw PreconditionError("certify_linear_containment: candidate is not linear");
    const auto gb = groebner(candidate, candidate.ring()->order());
    for (const auto& g : graph_generators) {
        const Polynomial nf = normal_form(g.in_ring(candidate.ring()), *gb.basis);
        c.normal_forms.push_back(nf.to_string());
        if (!nf.is_zero() && !c.offending) {
            c.contained = false;
            c.offending = g.to_string();
        }
    }
    return c;
}

Decomposition decompose(int n, const DecomposeOptions& options) {
    require_n(n, "decompose");
    const BasicAction act = weitzenbock(n);
    const ProductNames names = basic_product_names(n);
    const RingPtr prod = product_ring(names);
    const int m = act.m;
    const bool two_components = n % 2 == 0 && m % 2 == 1 && m >= 3;

    Decomposition out{n, Ideal(prod, {}), false, {}, {}, {}, std::nullopt, false, true, std::nullopt, {}};

    auto start = std::chrono::steady_clock::now();
    GraphIdeal g = graph_ideal(act.derivation, names, options.budget, options.threads);
    out.timings["graph_ideal"] = seconds_since(start);
    out.graph_ideal = g.ideal;
    out.graph_complete = g.complete;
    out.graph_stats = g.stats;

    GbOptions dim_opts;
    dim_opts.threads = options.threads;
    {
        auto w = graph_weights(act.derivation);
        w.pop_back();
        dim_opts.sugar_weights = w;
    }

    bool everything = g.complete;
    start = std::chrono::steady_clock::now();
    ComponentReport closure{"graph closure", g.ideal, std::nullopt, {}, ComponentReport::Status::GraphClosure};
    if (g.complete) {
        auto d = dimension(g.ideal, options.budget, dim_opts);
        if (d.complete()) {
            closure.dimension = d.value->dimension;
            closure.independent_set = d.value->independent_set;
            if (d.value->dimension != n + 2) out.consistent = false;
        } else {
            everything = false;
        }
    }
    out.components.push_back(closure);
    out.timings["graph_dimension"] = seconds_since(start);

    // Candidates certified inside the closure.
    start = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, Ideal>> inside;
    if (n % 2 == 1 || m % 2 == 0) {
        for (const auto& c : sep_presentation(n))
            if (c.ideal) inside.emplace_back(c.label, *c.ideal);
    } else {
        inside.emplace_back("M_{" + std::to_string(n) + ",1}", m_set_ideal(n, 1));
        if (!two_components) inside.emplace_back("M_{" + std::to_string(n) + ",2}", m_set_ideal(n, 2));
    }
    for (const auto& [label, ideal] : inside) {
        ContainmentCertificate c = certify_linear_containment(label, ideal, g.ideal.generators());
        if (!g.complete && c.contained) {
            // Partial elements cannot certify containment.
            c.decided = false;
            everything = false;
        }
        if (c.decided && !c.contained) out.consistent = false;
        out.containments.push_back(std::move(c));
    }
    out.timings["containment"] = seconds_since(start);

    if (two_components) {
        start = std::chrono::steady_clock::now();
        const Ideal m2 = m_set_ideal(n, 2);
        ComponentReport genuine{"M_{" + std::to_string(n) + ",2}", m2, std::nullopt, {},
                                ComponentReport::Status::Genuine};
        auto d = dimension(m2, options.budget);
        if (d.complete()) {
            genuine.dimension = d.value->dimension;
            genuine.independent_set = d.value->independent_set;
            if (d.value->dimension != n + 1) out.consistent = false;
        } else {
            everything = false;
        }
        out.components.push_back(genuine);

        NonContainmentEvidence ev;
        ev.witness_a.assign(static_cast<std::size_t>(n + 1), Rational(0));
        ev.witness_b = ev.witness_a;
        ev.witness_a[m] = 1;
        ev.witness_b[m] = 1;
        ev.witness_b[m + 1] = 1;
        Point joint = ev.witness_a;
        joint.insert(joint.end(), ev.witness_b.begin(), ev.witness_b.end());

        if (!options.force_fallback) {
            ev.path = NonContainmentEvidence::Path::Algebraic;
            for (const auto& gen : g.ideal.generators()) {
                const Rational v = evaluate(gen, joint);
                if (!v.is_zero()) {
                    ev.established = true;
                    ev.nonvanishing_generator = gen.to_string();
                    ev.value = v;
                    ev.from_partial_basis = !g.complete;
                    ev.note = g.complete ? "graph-ideal generator nonvanishing at the witness"
                                         : "element of the graph ideal found before the budget ran out, "
                                           "nonvanishing at the witness";
                    break;
                }
            }
            if (!ev.established && g.complete) out.consistent = false;
        }
        if (!ev.established) {
            ev.path = NonContainmentEvidence::Path::Fallback;
            ev.conditional = true;
            ev.orbit = orbit_membership_exact(act.derivation, ev.witness_a, ev.witness_b);
            const Ideal m1 = m_set_ideal(n, 1);
            ev.m1_value = evaluate(m1.generators().back(), joint);
            bool outside_m1 = false;
            for (const auto& gen : m1.generators()) outside_m1 = outside_m1 || !evaluate(gen, joint).is_zero();
            ev.established = !ev.orbit->in_orbit && outside_m1;
            ev.note =
                "conditional on the analytic closure argument: a point of the graph closure that is not on "
                "the graph and lies in M_{n,2} must lie in M_{n,1}; the witness is off the graph "
                "(exact orbit test) and off M_{n,1} (evaluation)";
        }
        if (!ev.established) everything = false;
        out.non_containment = ev;
        out.timings["non_containment"] = seconds_since(start);

        const auto& gd = out.components.back().dimension;
        if (ev.established && gd && *gd == n + 1) {
            std::ostringstream os;
            os << "V_" << n << " admits no polynomial separating algebra: the separating variety has a component "
               << "of dimension " << n + 1 << " < dim V_" << n << " + 1 = " << n + 2;
            if (ev.conditional) os << " (conditional on the analytic closure argument)";
            out.corollary = os.str();
        }
    }
    out.resolved = everything && out.consistent;
    return out;
}

QMatrix matrix_M(int m, int n) {
    if (m < 0 || 2 * m > n) throw PreconditionError("matrix_M: requires 0 <= 2m <= n");
    QMatrix a(static_cast<std::size_t>(m + 1), static_cast<std::size_t>(m + 1));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) a(i, j) = inv_factorial(n - i - j);
    if (mat_det(a).is_zero()) throw InternalError("matrix_M: singular matrix");
    return a;
}

LemmaB lemma_b_value(int m) {
    if (m < 1) throw PreconditionError("lemma_b_value: m must be at least 1");
    const QMatrix a = matrix_M(m - 1, 2 * m);
    std::vector<Rational> v;
    for (int k = m; k >= 1; --k) v.push_back(inv_factorial(k));
    const QMatrix w = mat_solve(a, QMatrix::column(v));
    LemmaB out;
    out.m = m;
    for (int i = 0; i < m; ++i) out.value += v[i] * w(i, 0);
    out.expected = Rational(1) - sign_pow(m);
    out.holds = out.value == out.expected;
    return out;
}

BinomialSum binomial_sum(int p, int q, int r) {
    if (!(p >= q && q >= 0 && r >= 0)) throw PreconditionError("binomial_sum: requires p >= q >= 0 and r >= 0");
    BinomialSum out;
    for (int j = 0; j <= r; ++j) out.lhs += sign_pow(j) * Rational(mpz_class(binomial(r, j) * binomial(p - j, q)));
    out.rhs = Rational(binomial(p - r, p - q));
    return out;
}

LaurentPoly LaurentPoly::constant(const Rational& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
    LaurentPoly p;
    p.set(exponent, c);
    return p;
}

void LaurentPoly::set(int e, Rational c) {
    if (c.is_zero())
        coeffs_.erase(e);
    else
        coeffs_[e] = std::move(c);
}

int LaurentPoly::min_exponent() const noexcept { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

Rational LaurentPoly::coefficient(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::at_zero() const {
    if (!is_polynomial()) throw PreconditionError("LaurentPoly::at_zero: negative powers present");
    return coefficient(0);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) set(e, coefficient(e) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) set(e, coefficient(e) - c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) out.set(ea + eb, out.coefficient(ea + eb) + ca * cb);
    return out;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& a) {
    LaurentPoly out;
    for (const auto& [e, x] : a.coeffs_) out.set(e, c * x);
    return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e + k] = c;
    return out;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c.sign() < 0;
        const Rational mag = c.abs();
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        if (e == 0) {
            s += mag.to_string();
            continue;
        }
        if (!mag.is_one()) s += mag.to_string() + "*";
        s += "u";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

void check_curve_shape(int n, const Point& a, const Point& b) {
    require_n(n, "curve");
    const auto len = static_cast<std::size_t>(n + 1);
    if (a.size() != len || b.size() != len)
        throw PreconditionError("curve: a and b need " + std::to_string(n + 1) + " coordinates");
    const int m = n / 2;
    const int zeros = n % 2 == 1 ? m + 1 : m;
    for (int k = 0; k < zeros; ++k) {
        if (!a[k].is_zero() || !b[k].is_zero())
            throw PreconditionError("curve: shape requires a_0..a_" + std::to_string(zeros - 1) + " = b_0..b_" +
                                    std::to_string(zeros - 1) + " = 0 (coordinate " + std::to_string(k) +
                                    " is nonzero)");
    }
    if (n % 2 == 0 && b[m] != sign_pow(m) * a[m])
        throw PreconditionError("curve: shape requires b_" + std::to_string(m) + " = (-1)^" + std::to_string(m) +
                                " a_" + std::to_string(m));
}

Curve curve_construct(int n, const Point& a, const Point& b) {
    check_curve_shape(n, a, b);
    const int m = n / 2;
    const int mp = (n - 1) / 2;
    const int delta = m - mp;

    Curve c;
    c.n = n;
    c.a = a;
    c.b = b;
    c.A = matrix_M(mp, n);

    for (int j = delta; j <= m; ++j) {
        const int k = j + mp + 1;
        LaurentPoly pj = LaurentPoly::constant(b[k]);
        for (int i = mp + 1; i <= k; ++i) pj -= LaurentPoly::monomial(inv_factorial(k - i) * a[i], -(k - i));
        c.q.push_back(pj.shifted(j));
        c.p.push_back(std::move(pj));
    }

    const QMatrix ainv = mat_inverse(c.A);
    // Row r of the system pairs with q_{m-r}.
    auto q_at = [&c, delta](int j) -> const LaurentPoly& { return c.q[static_cast<std::size_t>(j - delta)]; };
    for (int i = 0; i <= mp; ++i) {
        LaurentPoly s;
        for (int r = 0; r <= mp; ++r) s += ainv(i, r) * q_at(m - r);
        c.x.push_back(s.shifted(1 - delta + m - i));
    }
    for (int i = mp + 1; i <= n; ++i) c.x.push_back(LaurentPoly::constant(a[i]));

    for (int k = 0; k <= m; ++k) {
        LaurentPoly s;
        for (int i = 0; i <= k; ++i) s += inv_factorial(k - i) * c.x[i].shifted(-(k - i));
        c.y.push_back(std::move(s));
    }
    for (int k = m + 1; k <= n; ++k) c.y.push_back(LaurentPoly::constant(b[k]));
    return c;
}

CurveCheck curve_verify(const Curve& c, const BasicAction& action) {
    CurveCheck out;
    const int n = action.n;
    const auto len = static_cast<std::size_t>(n + 1);
    if (c.x.size() != len || c.y.size() != len || c.a.size() != len || c.b.size() != len) {
        out.mismatches.push_back("curve has the wrong number of coordinates for n = " + std::to_string(n));
        return out;
    }

    out.polynomial = true;
    for (std::size_t k = 0; k < len; ++k) {
        if (!c.x[k].is_polynomial()) {
            out.polynomial = false;
            out.mismatches.push_back("x_" + std::to_string(k) + " has negative powers: " + c.x[k].to_string());
        }
        if (!c.y[k].is_polynomial()) {
            out.polynomial = false;
            out.mismatches.push_back("y_" + std::to_string(k) + " has negative powers: " + c.y[k].to_string());
        }
    }

    if (out.polynomial) {
        out.endpoints = true;
        for (std::size_t k = 0; k < len; ++k) {
            if (c.x[k].at_zero() != c.a[k]) {
                out.endpoints = false;
                out.mismatches.push_back("x_" + std::to_string(k) + "(0) = " + c.x[k].at_zero().to_string() +
                                         ", expected " + c.a[k].to_string());
            }
            if (c.y[k].at_zero() != c.b[k]) {
                out.endpoints = false;
                out.mismatches.push_back("y_" + std::to_string(k) + "(0) = " + c.y[k].at_zero().to_string() +
                                         ", expected " + c.b[k].to_string());
            }
        }
    }

    out.group_identity = true;
    for (int k = 0; k <= n; ++k) {
        LaurentPoly r = c.y[k].shifted(k);
        for (int i = 0; i <= k; ++i) r -= inv_factorial(k - i) * c.x[i].shifted(i);
        if (!r.is_zero()) {
            out.group_identity = false;
            out.mismatches.push_back("coordinate " + std::to_string(k) + ": u^k y_k - sum u^i/(k-i)! x_i = " +
                                     r.to_string());
        }
    }
    return out;
}

}  // namespace sepvar
