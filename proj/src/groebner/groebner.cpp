#include "sepvar/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <thread>

namespace sepvar {
namespace {

std::atomic<bool> g_verify_bases{false};
std::atomic<std::uint64_t> g_verified_count{0};

struct TimeoutSignal {};

// Monic polynomials that serve as divisors, with cached leading data.
struct ReducerSet {
    std::vector<const Polynomial*> polys;
    std::vector<std::uint32_t> masks;
    std::vector<unsigned> sugars;

    void add(const Polynomial& p, unsigned sugar = 0) {
        polys.push_back(&p);
        masks.push_back(p.leading_monomial().support());
        sugars.push_back(sugar);
    }

    std::ptrdiff_t find_divisor(const Monomial& m, std::uint32_t mask) const {
        for (std::size_t k = 0; k < polys.size(); ++k) {
            if ((masks[k] & ~mask) != 0) continue;
            if (polys[k]->leading_monomial().divides(m)) return static_cast<std::ptrdiff_t>(k);
        }
        return -1;
    }
};

struct WeightedDegree {
    std::vector<unsigned> weights;

    unsigned operator()(const Monomial& m) const {
        unsigned d = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * m.exponent(i);
        return d;
    }
    unsigned of(const Polynomial& p) const {
        unsigned d = 0;
        for (const auto& t : p.terms()) d = std::max(d, (*this)(t.mono));
        return d;
    }
};

// cur[from..] - c * m * g[1..], all lists strictly decreasing. The leading
// terms are assumed to cancel and are skipped.
std::vector<Term> cancel_lead(const Ring& ring, const std::vector<Term>& cur, std::size_t from, const Rational& c,
                              const Monomial& m, const std::vector<Term>& g) {
    std::vector<Term> out;
    out.reserve(cur.size() - from + g.size());
    std::size_t i = from + 1;
    std::size_t j = 1;
    while (i < cur.size() && j < g.size()) {
        Monomial gm = g[j].mono * m;
        const int cmp = ring.compare(cur[i].mono, gm);
        if (cmp > 0) {
            out.push_back(cur[i++]);
        } else if (cmp < 0) {
            out.push_back({gm, -(c * g[j].coeff)});
            ++j;
        } else {
            Rational s = cur[i].coeff - c * g[j].coeff;
            if (!s.is_zero()) out.push_back({gm, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < cur.size(); ++i) out.push_back(cur[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].mono * m, -(c * g[j].coeff)});
    return out;
}

struct ReduceOutput {
    Polynomial poly;
    unsigned sugar;
};

// Full reduction of f by the monic divisors in `rs`. `skip` excludes one
// divisor (used for inter-reduction). Throws TimeoutSignal when the budget expires.
ReduceOutput reduce_full(const Polynomial& f, unsigned sugar, const ReducerSet& rs, const WeightedDegree& wdeg,
                         const Budget* budget, std::uint64_t& steps, std::ptrdiff_t skip = -1) {
    const Ring& ring = *f.ring();
    std::vector<Term> cur = f.terms();
    std::vector<Term> rem;
    std::size_t head = 0;
    while (head < cur.size()) {
        const Term& lt = cur[head];
        std::ptrdiff_t k = -1;
        const std::uint32_t mask = lt.mono.support();
        for (std::size_t q = 0; q < rs.polys.size(); ++q) {
            if (static_cast<std::ptrdiff_t>(q) == skip || (rs.masks[q] & ~mask) != 0) continue;
            if (rs.polys[q]->leading_monomial().divides(lt.mono)) {
                k = static_cast<std::ptrdiff_t>(q);
                break;
            }
        }
        if (k < 0) {
            rem.push_back(lt);
            ++head;
            continue;
        }
        const Polynomial& g = *rs.polys[static_cast<std::size_t>(k)];
        const Monomial m = lt.mono / g.leading_monomial();
        sugar = std::max(sugar, rs.sugars[static_cast<std::size_t>(k)] + wdeg(m));
        const Rational c = lt.coeff;
        cur = cancel_lead(ring, cur, head, c, m, g.terms());
        head = 0;
        if ((++steps & 63u) == 0 && budget && budget->expired(steps)) throw TimeoutSignal{};
    }
    return {Polynomial::from_sorted_terms(f.ring(), std::move(rem)), sugar};
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.scaled(g.leading_coeff(), l / f.leading_monomial());
    a -= g.scaled(f.leading_coeff(), l / g.leading_monomial());
    return a;
}

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    unsigned sugar;
};

class BuchbergerEngine {
public:
    BuchbergerEngine(RingPtr ring, const Budget& budget, const GbOptions& options)
        : ring_(std::move(ring)), budget_(budget), threads_(std::max(1u, options.threads)) {
        wdeg_.weights = options.sugar_weights;
        if (wdeg_.weights.empty()) wdeg_.weights.assign(ring_->size(), 1);
        if (wdeg_.weights.size() != ring_->size())
            throw PreconditionError("sugar weights: expected one weight per variable");
        for (unsigned w : wdeg_.weights)
            if (w == 0) throw PreconditionError("sugar weights must be positive");
    }

    GroebnerResult run(const std::vector<Polynomial>& generators) {
        const auto start = Budget::Clock::now();
        GroebnerResult result;
        try {
            std::vector<Polynomial> input;
            for (const auto& g : generators) input.push_back(g.in_ring(ring_));
            std::sort(input.begin(), input.end(), [this](const Polynomial& a, const Polynomial& b) {
                return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
            });
            for (const auto& g : input) {
                auto [r, sugar] = reduce_full(g, wdeg_.of(g), active_set(), wdeg_, &budget_, stats_.reduction_steps);
                if (r.is_zero()) continue;
                if (r.is_constant()) return finish_unit(start);
                insert(r.monic(), sugar);
            }
            while (!pairs_.empty()) {
                if (budget_.expired(stats_.reduction_steps)) throw TimeoutSignal{};
                process_batch(take_batch());
                if (unit_) return finish_unit(start);
            }
        } catch (const TimeoutSignal&) {
            result.status = GbStatus::Timeout;
            for (std::size_t k = 0; k < store_.size(); ++k)
                if (active_[k]) result.partial.push_back(store_[k]);
            stats_.basis_size = result.partial.size();
            stats_.seconds = std::chrono::duration<double>(Budget::Clock::now() - start).count();
            result.stats = stats_;
            return result;
        }
        result.basis = GroebnerBasis(ring_, interreduce());
        stats_.basis_size = result.basis->size();
        stats_.seconds = std::chrono::duration<double>(Budget::Clock::now() - start).count();
        result.stats = stats_;
        return result;
    }

private:
    ReducerSet active_set() const {
        ReducerSet rs;
        for (std::size_t k = 0; k < store_.size(); ++k)
            if (active_[k]) rs.add(store_[k], sugar_[k]);
        return rs;
    }

    GroebnerResult finish_unit(Budget::Clock::time_point start) {
        GroebnerResult result;
        result.basis = GroebnerBasis(ring_, {Polynomial::constant(ring_, 1)});
        stats_.basis_size = 1;
        stats_.seconds = std::chrono::duration<double>(Budget::Clock::now() - start).count();
        result.stats = stats_;
        return result;
    }

    unsigned pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
        const unsigned a = sugar_[i] + wdeg_(l) - wdeg_(store_[i].leading_monomial());
        const unsigned b = sugar_[j] + wdeg_(l) - wdeg_(store_[j].leading_monomial());
        return std::max(a, b);
    }

    // Gebauer-Möller update for the new element h.
    void insert(Polynomial h, unsigned sugar) {
        const std::size_t hi = store_.size();
        store_.push_back(std::move(h));
        sugar_.push_back(sugar);
        active_.push_back(true);
        const Monomial& lh = store_[hi].leading_monomial();

        std::vector<Pair> c;
        for (std::size_t g = 0; g < hi; ++g) {
            if (!active_[g]) continue;
            Monomial l = lcm(lh, store_[g].leading_monomial());
            c.push_back({g, hi, l, 0});
        }
        std::vector<Pair> d;
        for (std::size_t a = 0; a < c.size(); ++a) {
            const Pair& p = c[a];
            bool keep = lh.coprime(store_[p.i].leading_monomial());
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < c.size() && keep; ++b)
                    if (c[b].lcm.divides(p.lcm)) keep = false;
                for (std::size_t b = 0; b < d.size() && keep; ++b)
                    if (d[b].lcm.divides(p.lcm)) keep = false;
            }
            if (keep) d.push_back(p);
        }
        std::vector<Pair> kept;
        kept.reserve(pairs_.size() + d.size());
        for (auto& p : pairs_) {
            const bool drop = lh.divides(p.lcm) && !(lcm(store_[p.i].leading_monomial(), lh) == p.lcm) &&
                              !(lcm(lh, store_[p.j].leading_monomial()) == p.lcm);
            if (!drop) kept.push_back(std::move(p));
        }
        for (auto& p : d) {
            if (lh.coprime(store_[p.i].leading_monomial())) continue;
            p.sugar = pair_sugar(p.i, p.j, p.lcm);
            kept.push_back(p);
            ++stats_.pairs_created;
        }
        pairs_ = std::move(kept);
        for (std::size_t g = 0; g < hi; ++g)
            if (active_[g] && lh.divides(store_[g].leading_monomial())) active_[g] = false;
    }

    std::vector<Pair> take_batch() {
        unsigned best = std::numeric_limits<unsigned>::max();
        for (const auto& p : pairs_) best = std::min(best, p.sugar);
        std::vector<Pair> batch;
        std::vector<Pair> rest;
        for (auto& p : pairs_) (p.sugar == best ? batch : rest).push_back(std::move(p));
        pairs_ = std::move(rest);
        std::sort(batch.begin(), batch.end(), [this](const Pair& a, const Pair& b) {
            const int c = ring_->compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            return a.i != b.i ? a.i < b.i : a.j < b.j;
        });
        stats_.max_sugar = std::max(stats_.max_sugar, best);
        return batch;
    }

    void process_batch(const std::vector<Pair>& batch) {
        const ReducerSet snapshot = active_set();
        std::vector<std::optional<ReduceOutput>> out(batch.size());
        auto work = [&](std::size_t k, std::uint64_t& steps) {
            const Pair& p = batch[k];
            Polynomial s = spoly(store_[p.i], store_[p.j]);
            out[k] = reduce_full(s, p.sugar, snapshot, wdeg_, &budget_, steps);
        };
        const unsigned nthreads = std::min<unsigned>(threads_, static_cast<unsigned>(batch.size()));
        if (nthreads <= 1) {
            for (std::size_t k = 0; k < batch.size(); ++k) work(k, stats_.reduction_steps);
        } else {
            std::atomic<bool> timed_out{false};
            std::atomic<std::size_t> next{0};
            std::vector<std::uint64_t> steps(nthreads, stats_.reduction_steps);
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < nthreads; ++t) {
                pool.emplace_back([&, t] {
                    try {
                        for (std::size_t k; !timed_out && (k = next++) < batch.size();) work(k, steps[t]);
                    } catch (const TimeoutSignal&) {
                        timed_out = true;
                    }
                });
            }
            for (auto& th : pool) th.join();
            std::uint64_t total = stats_.reduction_steps;
            for (auto s : steps) total += s - stats_.reduction_steps;
            stats_.reduction_steps = total;
            if (timed_out) throw TimeoutSignal{};
        }
        stats_.pairs_reduced += batch.size();
        for (auto& r : out) {
            if (r->poly.is_zero()) {
                ++stats_.zero_reductions;
                continue;
            }
            // Elements inserted earlier in this batch were not in the snapshot.
            auto [h, sugar] = reduce_full(r->poly, r->sugar, active_set(), wdeg_, &budget_, stats_.reduction_steps);
            if (h.is_zero()) {
                ++stats_.zero_reductions;
                continue;
            }
            if (h.is_constant()) {
                unit_ = true;
                return;
            }
            insert(h.monic(), sugar);
        }
    }

    std::vector<Polynomial> interreduce() {
        std::vector<Polynomial> basis;
        for (std::size_t k = 0; k < store_.size(); ++k)
            if (active_[k]) basis.push_back(store_[k]);
        std::sort(basis.begin(), basis.end(), [this](const Polynomial& a, const Polynomial& b) {
            return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        ReducerSet rs;
        for (const auto& b : basis) rs.add(b);
        std::vector<Polynomial> reduced;
        std::uint64_t steps = 0;
        for (std::size_t k = 0; k < basis.size(); ++k)
            reduced.push_back(
                reduce_full(basis[k], 0, rs, wdeg_, nullptr, steps, static_cast<std::ptrdiff_t>(k)).poly.monic());
        return reduced;
    }

    RingPtr ring_;
    Budget budget_;
    unsigned threads_;
    WeightedDegree wdeg_;
    std::vector<Polynomial> store_;
    std::vector<unsigned> sugar_;
    std::vector<bool> active_;
    std::vector<Pair> pairs_;
    GbStats stats_;
    bool unit_ = false;
};

void check_basis(const GroebnerBasis& gb) {
    if (!is_reduced(gb)) throw InternalError("produced basis is not reduced");
    if (!satisfies_buchberger_criterion(gb)) throw InternalError("produced basis fails the S-polynomial check");
    ++g_verified_count;
}

std::string fresh_name(const Ring& ring, std::string base) {
    while (ring.contains(base)) base += '_';
    return base;
}

}  // namespace

Budget Budget::seconds(double s) {
    Budget b;
    b.deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(s));
    return b;
}

Budget Budget::steps(std::uint64_t max_reductions) {
    Budget b;
    b.max_steps_ = max_reductions;
    return b;
}

bool Budget::expired(std::uint64_t steps_done) const noexcept {
    if (max_steps_ && steps_done > *max_steps_) return true;
    return deadline_ && Clock::now() > *deadline_;
}

struct Ideal::Cache {
    std::mutex mutex;
    std::vector<GroebnerBasis> bases;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
        if (!same_ring(*g.ring(), *ring_)) throw RingMismatch("ideal generator '" + g.to_string() + "' is not in the ideal's ring");
        if (!g.is_zero()) generators_.push_back(std::move(g));
    }
}

std::optional<GroebnerBasis> Ideal::cached_basis(const MonomialOrder& order) const {
    std::lock_guard lock(cache_->mutex);
    for (const auto& gb : cache_->bases)
        if (gb.order() == order) return gb;
    return std::nullopt;
}

void Ideal::remember(const GroebnerBasis& gb) const {
    if (gb.ring()->names() != ring_->names()) throw RingMismatch("cached basis lives in a different ring");
    std::lock_guard lock(cache_->mutex);
    for (const auto& b : cache_->bases)
        if (b.order() == gb.order()) return;
    cache_->bases.push_back(gb);
}

std::string Ideal::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < generators_.size(); ++i) s += (i ? ", " : "") + generators_[i].to_string();
    return s + ")";
}

GroebnerResult buchberger(const Ideal& ideal, const MonomialOrder& order, const Budget& budget, const GbOptions& options) {
    RingPtr ring = same_ring(*ideal.ring(), *ideal.ring()->with_order(order)) ? ideal.ring() : ideal.ring()->with_order(order);
    if (ideal.is_zero()) {
        GroebnerResult r;
        r.basis = GroebnerBasis(ring, {});
        return r;
    }
    GroebnerResult result = BuchbergerEngine(ring, budget, options).run(ideal.generators());
    if (result.complete() && verify_bases()) check_basis(*result.basis);
    return result;
}

GroebnerResult groebner(const Ideal& ideal, const MonomialOrder& order, const Budget& budget, const GbOptions& options) {
    if (auto cached = ideal.cached_basis(order)) {
        GroebnerResult r;
        r.basis = std::move(cached);
        r.stats.basis_size = r.basis->size();
        return r;
    }
    GroebnerResult r = buchberger(ideal, order, budget, options);
    if (r.complete()) ideal.remember(*r.basis);
    return r;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.ring()->names() != gb.ring()->names()) throw RingMismatch("normal_form: polynomial and basis live in different rings");
    ReducerSet rs;
    for (const auto& g : gb.elements()) rs.add(g);
    std::uint64_t steps = 0;
    WeightedDegree wdeg{std::vector<unsigned>(gb.ring()->size(), 1)};
    return reduce_full(f.in_ring(gb.ring()), 0, rs, wdeg, nullptr, steps).poly.in_ring(f.ring());
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
    const auto& el = gb.elements();
    ReducerSet rs;
    for (const auto& g : el) rs.add(g);
    WeightedDegree wdeg{std::vector<unsigned>(gb.ring()->size(), 1)};
    std::uint64_t steps = 0;
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = i + 1; j < el.size(); ++j) {
            if (el[i].leading_monomial().coprime(el[j].leading_monomial())) continue;
            if (!reduce_full(spoly(el[i], el[j]), 0, rs, wdeg, nullptr, steps).poly.is_zero()) return false;
        }
    return true;
}

bool is_reduced(const GroebnerBasis& gb) {
    const auto& el = gb.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
        if (el[i].is_zero() || !el[i].leading_coeff().is_one()) return false;
        for (std::size_t j = 0; j < el.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : el[j].terms())
                if (el[i].leading_monomial().divides(t.mono)) return false;
        }
    }
    return true;
}

void set_verify_bases(bool on) { g_verify_bases = on; }
bool verify_bases() { return g_verify_bases; }
std::uint64_t verified_basis_count() { return g_verified_count; }

Outcome<RadicalCertificate> radical_member(const Polynomial& f, const Ideal& ideal, const Budget& budget,
                                           const GbOptions& options) {
    Outcome<RadicalCertificate> out;
    const Polynomial g = f.in_ring(ideal.ring());
    RadicalCertificate cert;
    if (g.is_zero()) {
        cert.member = true;
        cert.normal_form = "0";
        out.value = cert;
        return out;
    }
    GroebnerResult base = groebner(ideal, ideal.ring()->order(), budget, options);
    out.stats = base.stats;
    if (!base.complete()) return out;
    const Polynomial nf = normal_form(g, *base.basis);
    cert.normal_form = nf.to_string();
    if (nf.is_zero()) {
        cert.member = true;
        out.value = cert;
        return out;
    }
    // Rabinowitsch: f ∈ √I iff 1 ∈ I + (1 - z f).
    const std::string z = fresh_name(*ideal.ring(), "z");
    RingPtr ext = ideal.ring()->extended({z});
    std::vector<Polynomial> gens;
    for (const auto& h : ideal.generators()) gens.push_back(h.in_ring(ext));
    gens.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, z) * g.in_ring(ext));
    GbOptions opts = options;
    if (!opts.sugar_weights.empty()) opts.sugar_weights.push_back(1);
    GroebnerResult r = buchberger(Ideal(ext, std::move(gens)), ext->order(), budget, opts);
    out.stats = r.stats;
    if (!r.complete()) return out;
    cert.method = RadicalCertificate::Method::Rabinowitsch;
    cert.extra_variable = z;
    cert.member = r.basis->is_unit();
    out.value = cert;
    return out;
}

Outcome<ContainmentResult> variety_contained(const Ideal& i, const Ideal& j, const Budget& budget,
                                             const GbOptions& options) {
    if (i.ring()->names() != j.ring()->names()) throw RingMismatch("variety_contained: ideals live in different rings");
    Outcome<ContainmentResult> out;
    ContainmentResult res;
    res.contained = true;
    for (const auto& g : j.generators()) {
        auto r = radical_member(g, i, budget, options);
        out.stats = r.stats;
        if (!r.complete()) return out;
        res.certificates.push_back(*r.value);
        if (!r.value->member) {
            res.contained = false;
            res.offending = g;
            break;
        }
    }
    out.value = std::move(res);
    return out;
}

EliminationResult eliminate(const Ideal& ideal, const std::vector<std::string>& drop, const Budget& budget,
                            const GbOptions& options) {
    if (drop.empty()) return {ideal, true, {}};
    const std::uint32_t mask = ideal.ring()->mask_of(drop);
    const MonomialOrder order = MonomialOrder::block(mask, MonomialOrder::Kind::Grevlex);
    RingPtr sub = ideal.ring()->without(mask, order.inner_order());
    GroebnerResult r = groebner(ideal, order, budget, options);
    const std::vector<Polynomial>& source = r.complete() ? r.basis->elements() : r.partial;
    std::vector<Polynomial> kept;
    for (const auto& g : source)
        if ((g.support() & mask) == 0) kept.push_back(g.in_ring(sub));
    Ideal result(sub, kept);
    if (r.complete()) result.remember(GroebnerBasis(sub, kept));
    return {result, r.complete(), r.stats};
}

DimensionResult dimension_from_basis(const GroebnerBasis& gb) {
    if (gb.is_unit()) throw EmptyVariety();
    const std::size_t n = gb.ring()->size();
    std::vector<std::uint32_t> lms;
    for (const auto& g : gb.elements()) lms.push_back(g.leading_monomial().support());

    int best = -1;
    std::uint32_t best_set = 0;
    auto independent = [&lms](std::uint32_t set) {
        return std::none_of(lms.begin(), lms.end(), [set](std::uint32_t m) { return (m & ~set) == 0; });
    };
    auto dfs = [&](auto&& self, std::size_t var, std::uint32_t set, int count) -> void {
        if (count + static_cast<int>(n - var) <= best) return;
        if (var == n) {
            best = count;
            best_set = set;
            return;
        }
        const std::uint32_t with = set | (1u << var);
        if (independent(with)) self(self, var + 1, with, count + 1);
        self(self, var + 1, set, count);
    };
    dfs(dfs, 0, 0, 0);

    DimensionResult res;
    res.dimension = best;
    res.leading_monomials = lms.size();
    for (std::size_t i = 0; i < n; ++i)
        if (best_set >> i & 1u) res.independent_set.push_back(gb.ring()->name(i));
    return res;
}

Outcome<DimensionResult> dimension(const Ideal& ideal, const Budget& budget, const GbOptions& options) {
    Outcome<DimensionResult> out;
    GroebnerResult r = groebner(ideal, ideal.ring()->order(), budget, options);
    out.stats = r.stats;
    if (!r.complete()) return out;
    out.value = dimension_from_basis(*r.basis);
    return out;
}

Ideal parse_ideal(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    RingPtr ring;
    std::vector<Polynomial> gens;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (!ring) {
            if (line.rfind("ring:", 0) != 0) throw ParseError("expected 'ring: v1,v2,...' header", lineno);
            std::vector<std::string> names;
            std::istringstream vars(line.substr(5));
            std::string v;
            while (std::getline(vars, v, ',')) {
                v = trim(v);
                if (!v.empty()) names.push_back(v);
            }
            if (names.empty()) throw ParseError("ring header lists no variables", lineno);
            try {
                ring = Ring::make(std::move(names));
            } catch (const PreconditionError& e) {
                throw ParseError(e.what(), lineno);
            }
            continue;
        }
        try {
            gens.push_back(parse_polynomial(line, ring));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (!ring) throw ParseError("missing 'ring:' header");
    return Ideal(ring, std::move(gens));
}

std::string format_ideal(const RingPtr& ring, const std::vector<Polynomial>& generators) {
    std::string s = "ring: " + ring->describe() + "\n";
    for (const auto& g : generators) s += g.in_ring(ring).to_string() + "\n";
    return s;
}

}  // namespace sepvar
