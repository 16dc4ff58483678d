#include "sepvar/derivation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace sepvar {
namespace {

using UPoly = std::vector<Rational>;  // coefficients, lowest degree first

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly upoly_mod(UPoly a, const UPoly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        const Rational c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return a;
}

UPoly upoly_monic(UPoly p) {
    const Rational lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = upoly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : upoly_monic(a);
}

Rational upoly_eval(const UPoly& p, const Rational& t) {
    Rational v;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
    return v;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

// A rational root via the rational root test, when the coefficients are small
// enough for trial division.
std::optional<Rational> rational_root(const UPoly& p) {
    if (p.size() == 2) return -p[0] / p[1];
    if (p[0].is_zero()) return Rational(0);
    mpz_class den = 1;
    for (const auto& c : p) den = lcm(den, c.denominator());
    std::vector<mpz_class> ints;
    for (const auto& c : p) ints.push_back(c.numerator() * (den / c.denominator()));
    const mpz_class limit("1000000000000");
    if (abs(ints.front()) > limit || abs(ints.back()) > limit) return std::nullopt;
    for (const auto& num : divisors(ints.front()))
        for (const auto& d : divisors(ints.back()))
            for (int sign : {1, -1}) {
                const Rational cand(mpz_class(sign * num), d);
                if (upoly_eval(p, cand).is_zero()) return cand;
            }
    return std::nullopt;
}

std::string trim_ws(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::map<std::string, Polynomial> renaming(const Ring& from, const std::vector<std::string>& to, const RingPtr& target) {
    std::map<std::string, Polynomial> b;
    for (std::size_t i = 0; i < from.size(); ++i) b.emplace(from.name(i), Polynomial::variable(target, to[i]));
    return b;
}

}  // namespace

Point parse_point(std::string_view text) {
    Point p;
    std::istringstream in{std::string(text)};
    std::string item;
    while (std::getline(in, item, ',')) p.push_back(Rational::parse(trim_ws(item)));
    if (p.empty()) throw ParseError("empty point");
    return p;
}

std::string format_point(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].to_string();
    return s + ")";
}

Derivation::Derivation(RingPtr ring, std::vector<Polynomial> images) : ring_(std::move(ring)), images_(std::move(images)) {
    if (images_.size() != ring_->size())
        throw PreconditionError("derivation: expected one image per variable");
    for (const auto& f : images_)
        if (!same_ring(*f.ring(), *ring_)) throw RingMismatch("derivation image lives in another ring");
}

bool Derivation::is_zero() const noexcept {
    return std::all_of(images_.begin(), images_.end(), [](const Polynomial& f) { return f.is_zero(); });
}

unsigned Derivation::default_bound() const noexcept {
    unsigned deg = 0;
    for (const auto& f : images_) deg = std::max(deg, f.total_degree());
    return std::max(1u, static_cast<unsigned>(ring_->size() + 1) * deg);
}

const NilpotencyReport& Derivation::verify(std::optional<unsigned> bound) {
    NilpotencyReport r;
    r.bound = bound.value_or(default_bound());
    if (r.bound < 1) throw PreconditionError("nilpotency bound must be at least 1");
    std::vector<std::vector<Polynomial>> terms(ring_->size());
    for (std::size_t i = 0; i < ring_->size(); ++i) {
        Polynomial f = Polynomial::variable(ring_, i);
        unsigned k = 0;
        while (!f.is_zero() && k < r.bound) {
            terms[i].push_back(f);
            f = apply(*this, f);
            ++k;
        }
        if (!f.is_zero()) {
            r.surviving = ring_->name(i);
            witness_.reset();
            last_ = std::move(r);
            return last_;
        }
        r.steps.push_back(k);
    }
    r.verified = true;
    orbit_terms_ = std::move(terms);
    witness_ = r;
    last_ = std::move(r);
    return last_;
}

const std::vector<Polynomial>& Derivation::orbit_terms(std::size_t i) const {
    if (!witness_) throw PreconditionError("derivation is not verified locally nilpotent");
    return orbit_terms_.at(i);
}

std::string Derivation::to_string() const {
    std::string s = "ring: " + ring_->describe() + "\n";
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (!images_[i].is_zero()) s += "D(" + ring_->name(i) + ") = " + images_[i].to_string() + "\n";
    return s;
}

Derivation parse_derivation(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    RingPtr ring;
    std::vector<Polynomial> images;
    std::vector<bool> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim_ws(line);
        if (line.empty()) continue;
        if (!ring) {
            if (line.rfind("ring:", 0) != 0) throw ParseError("expected 'ring: v1,v2,...' header", lineno);
            std::vector<std::string> names;
            std::istringstream vars(line.substr(5));
            std::string v;
            while (std::getline(vars, v, ','))
                if (!(v = trim_ws(v)).empty()) names.push_back(v);
            try {
                ring = Ring::make(std::move(names));
            } catch (const PreconditionError& e) {
                throw ParseError(e.what(), lineno);
            }
            images.assign(ring->size(), Polynomial(ring));
            seen.assign(ring->size(), false);
            continue;
        }
        const auto open = line.find('(');
        const auto close = line.find(')');
        const auto eq = line.find('=');
        if (line.rfind("D", 0) != 0 || open == std::string::npos || close == std::string::npos || eq == std::string::npos ||
            !(open < close && close < eq) || trim_ws(line.substr(1, open - 1)) != "")
            throw ParseError("expected 'D(v) = <polynomial>'", lineno);
        const std::string var = trim_ws(line.substr(open + 1, close - open - 1));
        if (!ring->contains(var)) throw ParseError("unknown variable '" + var + "'", lineno);
        const std::size_t i = ring->index(var);
        if (seen[i]) throw ParseError("D(" + var + ") given twice", lineno);
        seen[i] = true;
        try {
            images[i] = parse_polynomial(line.substr(eq + 1), ring);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (!ring) throw ParseError("missing 'ring:' header");
    return Derivation(ring, std::move(images));
}

Polynomial apply(const Derivation& d, const Polynomial& f) {
    if (!same_ring(*f.ring(), *d.ring())) throw RingMismatch("apply: polynomial and derivation live in different rings");
    Polynomial out(d.ring());
    const std::uint32_t support = f.support();
    for (std::size_t i = 0; i < d.ring()->size(); ++i) {
        if (!(support >> i & 1u) || d.image(i).is_zero()) continue;
        out += differentiate(f, i) * d.image(i);
    }
    return out;
}

Polynomial apply_power(const Derivation& d, Polynomial f, unsigned k) {
    for (unsigned j = 0; j < k && !f.is_zero(); ++j) f = apply(d, f);
    return f;
}

NilpotencyReport verify_locally_nilpotent(Derivation& d, std::optional<unsigned> bound) { return d.verify(bound); }

Polynomial exp_action(const Derivation& d, const Polynomial& f, const std::string& parameter) {
    if (!d.is_verified()) throw PreconditionError("exp_action: derivation is not verified locally nilpotent");
    if (d.ring()->contains(parameter)) throw PreconditionError("exp_action: parameter name '" + parameter + "' is taken");
    RingPtr ext = d.ring()->extended({parameter});
    const Polynomial t = Polynomial::variable(ext, parameter);
    Polynomial acc(ext);
    Polynomial term = f;
    Polynomial tk = Polynomial::constant(ext, 1);
    for (unsigned k = 0; !term.is_zero(); ++k) {
        acc += Rational(mpz_class(1), factorial(k)) * (tk * term.in_ring(ext));
        term = apply(d, term);
        tk *= t;
    }
    return acc;
}

Point act_on_point(const Derivation& d, const Rational& t, const Point& p) {
    if (p.size() != d.ring()->size()) throw PreconditionError("act_on_point: point has wrong dimension");
    Point out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& terms = d.orbit_terms(i);
        Rational tk = 1;
        for (std::size_t k = 0; k < terms.size(); ++k) {
            out[i] += tk / Rational(factorial(static_cast<unsigned>(k))) * evaluate(terms[k], p);
            tk *= t;
        }
    }
    return out;
}

LocalSlice make_local_slice(const Derivation& d, const Polynomial& s) {
    Polynomial ds = apply(d, s);
    if (ds.is_zero()) throw PreconditionError("local slice: D(s) = 0");
    if (!apply(d, ds).is_zero()) throw PreconditionError("local slice: D^2(s) != 0");
    return {s, std::move(ds)};
}

Localized slice_localize(const Derivation& d, const LocalSlice& slice, const Polynomial& f) {
    if (slice.ds.is_zero() || !apply(d, slice.ds).is_zero()) throw PreconditionError("slice_localize: invalid slice");
    std::vector<Polynomial> powers;
    for (Polynomial g = f; !g.is_zero(); g = apply(d, g)) powers.push_back(g);
    if (powers.empty()) return {Polynomial(f.ring()), 0};
    const auto big_k = static_cast<unsigned>(powers.size() - 1);
    const Polynomial minus_s = -slice.s;
    Polynomial g(f.ring());
    for (unsigned k = 0; k <= big_k; ++k)
        g += Rational(mpz_class(1), factorial(k)) * (minus_s.pow(k) * slice.ds.pow(big_k - k) * powers[k]);
    Localized out{std::move(g), big_k};
    if (out.numerator.is_zero()) out.power = 0;
    while (out.power > 0) {
        auto quo = divide_exact(out.numerator, slice.ds);
        if (!quo) break;
        out.numerator = std::move(*quo);
        --out.power;
    }
    if (!apply(d, out.numerator).is_zero()) throw InternalError("slice_localize: numerator is not D-invariant");
    return out;
}

OrbitDecision orbit_decide(const Derivation& d, const LocalSlice& slice, const Point& p, const Point& q) {
    OrbitDecision out;
    const Rational dp = evaluate(slice.ds, p);
    const Rational dq = evaluate(slice.ds, q);
    if (dp.is_zero() || dq.is_zero()) return out;
    if (dp != dq) {
        out.kind = OrbitDecision::Kind::Separated;
        out.witness = slice.ds;
        out.value_p = dp;
        out.value_q = dq;
        return out;
    }
    for (std::size_t i = 0; i < d.ring()->size(); ++i) {
        Localized g = slice_localize(d, slice, Polynomial::variable(d.ring(), i));
        const Rational gp = evaluate(g.numerator, p);
        const Rational gq = evaluate(g.numerator, q);
        if (gp != gq) {
            out.kind = OrbitDecision::Kind::Separated;
            out.witness = std::move(g.numerator);
            out.witness_power = g.power;
            out.value_p = gp;
            out.value_q = gq;
            return out;
        }
    }
    const Rational t = evaluate(slice.s, q) / dq - evaluate(slice.s, p) / dp;
    if (act_on_point(d, t, p) != q) throw InternalError("orbit_decide: translation failed re-verification");
    out.kind = OrbitDecision::Kind::SameOrbit;
    out.t = t;
    return out;
}

ProductNames default_product_names(const Ring& ring) {
    ProductNames n;
    for (const auto& v : ring.names()) {
        n.left.push_back(v + "_a");
        n.right.push_back(v + "_b");
    }
    n.parameter = "lambda";
    auto clash = [&n](const std::string& s) {
        return std::find(n.left.begin(), n.left.end(), s) != n.left.end() ||
               std::find(n.right.begin(), n.right.end(), s) != n.right.end();
    };
    while (clash(n.parameter)) n.parameter += '_';
    return n;
}

RingPtr product_ring(const ProductNames& names) {
    auto all = names.left;
    all.insert(all.end(), names.right.begin(), names.right.end());
    return Ring::make(std::move(all));
}

Polynomial delta(const Polynomial& f, const ProductNames& names, const RingPtr& product) {
    const Ring& r = *f.ring();
    return substitute(f, renaming(r, names.left, product), product) - substitute(f, renaming(r, names.right, product), product);
}

std::vector<unsigned> graph_weights(const Derivation& d) {
    const std::size_t n = d.ring()->size();
    std::vector<unsigned> w(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (d.image(i).is_zero()) w[i] = 1;
    bool consistent = true;
    for (bool progress = true; progress && consistent;) {
        progress = false;
        for (std::size_t i = 0; i < n && consistent; ++i) {
            if (w[i]) continue;
            std::optional<unsigned> common;
            bool ready = true;
            for (const auto& term : d.image(i).terms()) {
                unsigned wt = 0;
                for (std::size_t v = 0; v < n; ++v) {
                    if (!term.mono.exponent(v)) continue;
                    if (!w[v]) ready = false;
                    wt += w[v] * term.mono.exponent(v);
                }
                if (!ready) break;
                if (common && *common != wt) consistent = false;
                common = wt;
            }
            if (ready && consistent) {
                w[i] = *common + 1;
                progress = true;
            }
        }
    }
    const bool complete = consistent && std::all_of(w.begin(), w.end(), [](unsigned x) { return x > 0; });
    if (!complete) w.assign(n, 1);
    std::vector<unsigned> out = w;
    out.insert(out.end(), w.begin(), w.end());
    out.push_back(1);
    return out;
}

GraphIdeal graph_ideal(const Derivation& d, const ProductNames& names, const Budget& budget, unsigned threads) {
    Derivation dv = d;
    if (!dv.is_verified() && !dv.verify().verified)
        throw PreconditionError("graph_ideal: derivation is not locally nilpotent within the default bound");
    const std::size_t n = dv.ring()->size();
    if (names.left.size() != n || names.right.size() != n) throw PreconditionError("graph_ideal: wrong number of names");

    const RingPtr product = product_ring(names);
    const std::vector<unsigned> all_weights = graph_weights(dv);

    // Work ring: left, moving right coordinates, parameter.
    std::vector<std::string> work_names = names.left;
    std::vector<unsigned> weights(all_weights.begin(), all_weights.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<Polynomial> fixed;
    std::vector<std::size_t> moving;
    for (std::size_t i = 0; i < n; ++i) {
        if (dv.image(i).is_zero()) {
            fixed.push_back(Polynomial::variable(product, names.right[i]) - Polynomial::variable(product, names.left[i]));
        } else {
            moving.push_back(i);
            work_names.push_back(names.right[i]);
            weights.push_back(all_weights[n + i]);
        }
    }
    work_names.push_back(names.parameter);
    weights.push_back(1);
    const RingPtr work = Ring::make(work_names);
    const auto bind = renaming(*dv.ring(), names.left, work);
    const Polynomial t = Polynomial::variable(work, names.parameter);

    std::vector<Polynomial> gens;
    for (std::size_t i : moving) {
        Polynomial g = Polynomial::variable(work, names.right[i]);
        Polynomial tk = Polynomial::constant(work, 1);
        const auto& terms = dv.orbit_terms(i);
        for (std::size_t k = 0; k < terms.size(); ++k) {
            g -= Rational(mpz_class(1), factorial(static_cast<unsigned>(k))) * (tk * substitute(terms[k], bind, work));
            tk *= t;
        }
        gens.push_back(std::move(g));
    }

    GraphIdeal out{Ideal(product, {}), true, names, {}};
    std::vector<Polynomial> result = fixed;
    if (!gens.empty()) {
        GbOptions opts;
        opts.threads = threads;
        opts.sugar_weights = weights;
        EliminationResult e = eliminate(Ideal(work, gens), {names.parameter}, budget, opts);
        out.complete = e.complete;
        out.stats = e.stats;
        for (const auto& g : e.ideal.generators()) result.push_back(g.in_ring(product));
    }
    out.ideal = Ideal(product, std::move(result));
    return out;
}

GraphIdeal graph_ideal(const Derivation& d, const Budget& budget, unsigned threads) {
    return graph_ideal(d, default_product_names(*d.ring()), budget, threads);
}

OrbitMembership orbit_membership_exact(const Derivation& d, const Point& a, const Point& b) {
    const std::size_t n = d.ring()->size();
    if (a.size() != n || b.size() != n) throw PreconditionError("orbit_membership_exact: point has wrong dimension");
    if (!d.is_verified()) throw PreconditionError("orbit_membership_exact: derivation is not verified locally nilpotent");
    const RingPtr tr = Ring::make({"t"});
    OrbitMembership out;
    UPoly g;
    bool any = false;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& terms = d.orbit_terms(k);
        UPoly c(std::max<std::size_t>(terms.size(), 1));
        for (std::size_t j = 0; j < terms.size(); ++j)
            c[j] = evaluate(terms[j], a) / Rational(factorial(static_cast<unsigned>(j)));
        c[0] -= b[k];
        trim(c);
        std::vector<Term> ts;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (!c[j].is_zero()) ts.push_back({Monomial::variable(0, static_cast<unsigned>(j)), c[j]});
        out.equations.push_back(Polynomial::from_terms(tr, ts).to_string());
        if (c.empty()) continue;
        g = any ? upoly_gcd(g, c) : upoly_monic(c);
        any = true;
    }
    out.gcd = g;
    if (!any) {
        out.in_orbit = true;
        out.t = Rational(0);
        return out;
    }
    if (g.size() <= 1) return out;
    out.in_orbit = true;
    out.t = rational_root(g);
    if (out.t && act_on_point(d, *out.t, a) != b) throw InternalError("orbit_membership_exact: root failed re-verification");
    return out;
}

}  // namespace sepvar
