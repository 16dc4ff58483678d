// Acceptance gate: one line per criterion. Usage: acceptance <1..10|all>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "samples.hpp"
#include "sepvar/basic_actions.hpp"
#include "sepvar/case_studies.hpp"
#include "sepvar/errors.hpp"

using namespace sepvar;

namespace {

// Every comparison below is exact rational equality: zero tolerance.
// Wall-clock limits per criterion, in seconds.
constexpr double kLimitC1 = 1;
constexpr double kLimitC2 = 5;
constexpr double kLimitC3 = 1;
constexpr double kLimitC4 = 5;
constexpr double kBudgetC5PerN = 300;
constexpr double kBudgetC6 = 900;
constexpr double kLimitC7 = 30;
constexpr double kBudgetC8 = 600;
constexpr double kBudgetC9 = 900;
constexpr double kLimitC9Linear = 1;
constexpr int kCurveSamples = 100;
constexpr int kActionSamples = 1200;

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

double since(std::chrono::steady_clock::time_point s) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - s).count();
}

void c1(Verdict& v) {
    int count = 0;
    for (int n = 1; n <= 10; ++n) {
        const BasicAction a = weitzenbock(n);
        for (int m = 0; m <= n / 2; ++m, ++count)
            v.require(apply(a.derivation, invariant_f(n, m)).is_zero(),
                      "D_" + std::to_string(n) + " f_" + std::to_string(m) + " != 0");
    }
    v.detail << count << " kernel identities";
}

void c2(Verdict& v) {
    int count = 0;
    for (int n = 1; n <= 10; ++n) {
        const BasicAction a = weitzenbock(n);
        for (int m = 0; m <= (n - 1) / 2; ++m, ++count)
            v.require(apply(a.derivation, slice_s(n, m).s) == invariant_f(n, m),
                      "D_" + std::to_string(n) + " s_" + std::to_string(m) + " != f_" + std::to_string(m));
    }
    v.detail << count << " slice identities";
}

void c3(Verdict& v) {
    v.require(lemma_b_value(1).value == Rational(2), "m=1 value is not 2");
    v.require(lemma_b_value(2).value == Rational(0), "m=2 value is not 0");
    for (int m = 1; m <= 10; ++m) {
        const LemmaB l = lemma_b_value(m);
        v.require(l.value == Rational(1) - Rational(m % 2 == 0 ? 1 : -1), "m=" + std::to_string(m));
    }
    v.detail << "m = 1..10";
}

void c4(Verdict& v) {
    int checked = 0, failures = 0, failures_r_le_p = 0;
    std::string first;
    for (int p = 0; p <= 12; ++p)
        for (int q = 0; q <= p; ++q)
            for (int r = 0; r <= 12; ++r) {
                ++checked;
                const BinomialSum s = binomial_sum(p, q, r);
                if (s.lhs == s.rhs) continue;
                ++failures;
                if (r <= p) ++failures_r_le_p;
                if (first.empty())
                    first = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " r=" + std::to_string(r) +
                            " lhs=" + s.lhs.to_string() + " rhs=" + s.rhs.to_string();
            }
    v.require(failures == 0, first);
    v.detail << checked << " triples, " << failures << " failures (" << failures_r_le_p << " with r <= p)";
}

void c5(Verdict& v) {
    for (int n = 1; n <= 5; ++n) {
        const auto start = std::chrono::steady_clock::now();
        DecomposeOptions opt;
        opt.budget = Budget::seconds(kBudgetC5PerN);
        const Decomposition d = decompose(n, opt);
        const std::string tag = "n=" + std::to_string(n) + ": ";
        v.require(d.graph_complete, tag + "elimination incomplete");
        v.require(d.components.size() == 1, tag + "expected one component");
        v.require(!d.components.empty() && d.components[0].dimension == n + 2, tag + "graph closure dimension");
        v.require(!d.containments.empty(), tag + "no candidates");
        for (const auto& c : d.containments) {
            bool zero = c.decided && c.contained;
            for (const auto& nf : c.normal_forms) zero = zero && nf == "0";
            v.require(zero, tag + c.label + " not certified");
        }
        v.require(since(start) <= kBudgetC5PerN, tag + "over budget");
    }
    v.detail << "n = 1..5, dim n+2, all candidates certified";
}

void c6(Verdict& v) {
    DecomposeOptions opt;
    opt.budget = Budget::seconds(kBudgetC6);
    const Decomposition d = decompose(6, opt);
    v.require(d.components.size() == 2, "expected two components");
    if (d.components.size() == 2) {
        v.require(d.components[1].dimension == 7, "dim M_{6,2} != 7");
        v.detail << "dims [" << (d.components[0].dimension ? std::to_string(*d.components[0].dimension) : "?")
                 << ", " << (d.components[1].dimension ? std::to_string(*d.components[1].dimension) : "?") << "]; ";
    }
    v.require(d.containments.size() == 1 && d.containments[0].decided && d.containments[0].contained,
              "M_{6,1} inside graph closure not certified");
    v.require(d.non_containment && d.non_containment->established, "M_{6,2} non-containment not established");
    if (d.non_containment) {
        const bool fallback = d.non_containment->path == NonContainmentEvidence::Path::Fallback;
        v.require(!fallback || d.non_containment->conditional, "fallback not labeled conditional");
        v.detail << (fallback ? "fallback path (conditional)" : "algebraic path");
    }
}

void c7(Verdict& v) {
    const Curve hand = curve_construct(2, {Rational(0), Rational(1), Rational(0)}, {Rational(0), Rational(-1), Rational(0)});
    v.require(hand.x[0].to_string() == "-2*u" && hand.x[1].to_string() == "1" && hand.x[2].is_zero(),
              "n=2 hand instance x(u) != (-2u, 1, 0)");
    v.require(curve_verify(hand, weitzenbock(2)).ok(), "n=2 hand instance fails verification");
    std::mt19937_64 rng(20240601);
    int total = 0;
    for (int n = 2; n <= 8; ++n) {
        const BasicAction act = weitzenbock(n);
        for (int s = 0; s < kCurveSamples; ++s, ++total) {
            const auto [a, b] = testing::random_curve_endpoints(n, rng);
            const CurveCheck c = curve_verify(curve_construct(n, a, b), act);
            v.require(c.ok(), "n=" + std::to_string(n) + " a=" + format_point(a) + " b=" + format_point(b));
        }
    }
    v.detail << total << " random curves";
}

void c8(Verdict& v) {
    CaseOptions opt;
    opt.budget = Budget::seconds(kBudgetC8);
    const CaseReport r = df5_verify(opt);
    v.require(r.kernel.size() == 6, "expected six generators");
    for (const auto& k : r.kernel) v.require(k.in_kernel(), k.label + " not in the kernel");
    v.require(r.components.size() == 2, "expected two components");
    for (const auto& c : r.components) v.require(c.dimension == 6, c.label + " dimension != 6");
    v.require(r.non_containments.size() == 2, "expected both directions");
    for (const auto& n : r.non_containments) v.require(n.established, n.inner + " inside " + n.outer + "?");
    v.detail << "dims [6, 6], mutual non-containment";
}

void c9(Verdict& v) {
    const auto lin_start = std::chrono::steady_clock::now();
    const RingPtr prod = product_ring(default_product_names(*f6_derivation().ring()));
    const auto lin = [&prod](std::vector<std::string> g) {
        std::vector<Polynomial> ps;
        for (const auto& s : g) ps.push_back(parse_polynomial(s, prod));
        return Ideal(prod, ps);
    };
    const Ideal l8 = lin({"x_a", "x_b", "y_a", "y_b"});
    const Ideal l7 = lin({"x_a", "x_b", "s_a", "s_b", "y_a - y_b"});
    const auto d8 = dimension(l8), d7 = dimension(l7);
    v.require(linear_dimension(l8) == 8 && d8.complete() && d8.value->dimension == 8, "linear dim 8");
    v.require(linear_dimension(l7) == 7 && d7.complete() && d7.value->dimension == 7, "linear dim 7");
    v.require(since(lin_start) <= kLimitC9Linear, "linear dimensions not instant");

    CaseOptions opt;
    opt.budget = Budget::seconds(kBudgetC9);
    const CaseReport r = f6_verify(opt);
    v.require(r.graph_complete, "graph elimination incomplete (partial report)");
    v.require(r.components.size() == 3, "expected three components");
    if (r.components.size() == 3) {
        v.require(r.components[0].dimension == 7, "graph closure dimension != 7");
        v.require(r.components[1].dimension == 8, "component dim != 8");
        v.require(r.components[2].dimension == 7, "component dim != 7");
    }
    v.require(r.non_containments.size() == 6, "expected six ordered pairs");
    for (const auto& n : r.non_containments) v.require(n.established, n.inner + " inside " + n.outer + "?");
    v.detail << "dims [7, 8, 7], pairwise non-containment";
}

std::string run_cli(const std::string& args, int& status) {
    const std::string cmd = std::string(SEPVAR_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot start " + cmd);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t k = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), k);
    status = pclose(pipe);
    return out;
}

void c10(Verdict& v) {
    // (a) S-polynomial re-check on every produced basis.
    set_verify_bases(true);
    const auto before = verified_basis_count();
    try {
        for (int n = 1; n <= 5; ++n) decompose(n);
        df5_verify();
        f6_verify();
        std::mt19937_64 rng(99);
        const RingPtr r = Ring::make({"a", "b", "c"});
        std::uniform_int_distribution<long> c(-3, 3);
        std::uniform_int_distribution<unsigned> e(0, 2);
        for (int k = 0; k < 20; ++k) {
            std::vector<Polynomial> gens;
            for (int g = 0; g < 3; ++g) {
                std::vector<Term> ts;
                for (int t = 0; t < 3; ++t) {
                    Monomial m;
                    for (std::size_t i = 0; i < 3; ++i) m.set_exponent(i, e(rng));
                    ts.push_back({m, Rational(c(rng))});
                }
                gens.push_back(Polynomial::from_terms(r, ts));
            }
            groebner(Ideal(r, gens), MonomialOrder::grevlex(), Budget::seconds(60));
        }
    } catch (const InternalError& err) {
        v.require(false, std::string("basis re-check: ") + err.what());
    }
    set_verify_bases(false);
    const auto checked = verified_basis_count() - before;
    v.require(checked > 0, "no bases were re-checked");

    // (b) Action law and invariance.
    std::mt19937_64 rng(4242);
    std::vector<std::pair<Derivation, std::vector<Polynomial>>> actions;
    for (int n = 1; n <= 8; ++n) {
        std::vector<Polynomial> inv;
        for (int m = 0; m <= n / 2; ++m) inv.push_back(invariant_f(n, m));
        actions.emplace_back(weitzenbock(n).derivation, inv);
    }
    actions.emplace_back(df5_derivation(), df5_separating_generators());
    {
        const Derivation f6 = f6_derivation();
        actions.emplace_back(f6, std::vector<Polynomial>{parse_polynomial("2*x^3*y^3*t - y^6*s^2", f6.ring()),
                                                         parse_polynomial("x", f6.ring()),
                                                         parse_polynomial("y", f6.ring())});
    }
    int samples = 0;
    for (int s = 0; s < kActionSamples; ++s, ++samples) {
        const auto& [d, inv] = actions[static_cast<std::size_t>(s) % actions.size()];
        Point p;
        for (std::size_t i = 0; i < d.ring()->size(); ++i) p.push_back(testing::small_rational(rng));
        const Rational t1 = testing::small_rational(rng), t2 = testing::small_rational(rng);
        const Point q = act_on_point(d, t2, p);
        v.require(act_on_point(d, t1, q) == act_on_point(d, t1 + t2, p), "action law");
        v.require(act_on_point(d, Rational(0), p) == p, "identity");
        for (const auto& f : inv) v.require(evaluate(f, q) == evaluate(f, p), "invariance of " + f.to_string());
    }

    // (c) Byte-identical JSON for different thread counts.
    int s1 = 0, s4 = 0, c1s = 0, c4s = 0;
    const std::string j1 = run_cli("--format json --no-timings --threads 1 --seed 7 basic 6", s1);
    const std::string j4 = run_cli("--format json --no-timings --threads 4 --seed 7 basic 6", s4);
    const std::string k1 = run_cli("--format json --no-timings --threads 1 --seed 7 case f6", c1s);
    const std::string k4 = run_cli("--format json --no-timings --threads 4 --seed 7 case f6", c4s);
    v.require(s1 == 0 && s4 == 0 && c1s == 0 && c4s == 0, "CLI runs did not succeed");
    v.require(!j1.empty() && j1 == j4, "basic 6 JSON differs across thread counts");
    v.require(!k1.empty() && k1 == k4, "case f6 JSON differs across thread counts");
    v.detail << checked << " bases re-checked, " << samples << " action samples, JSON identical across threads";
}

struct Criterion {
    int id;
    const char* title;
    std::function<void(Verdict&)> run;
    double limit;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all = {
        {1, "kernel identities", c1, kLimitC1},
        {2, "slice identities", c2, kLimitC2},
        {3, "v^T A^-1 v = 1 - (-1)^m", c3, kLimitC3},
        {4, "binomial identity sweep", c4, kLimitC4},
        {5, "single component for n = 1..5", c5, 5 * kBudgetC5PerN},
        {6, "two components for n = 6", c6, kBudgetC6},
        {7, "curve construction", c7, kLimitC7},
        {8, "df5 case study", c8, kBudgetC8},
        {9, "f6 case study", c9, kBudgetC9},
        {10, "property suites and determinism", c10, 0},
    };
    const std::string which = argc > 1 ? argv[1] : "all";
    bool ok = true;
    bool ran = false;
    for (const auto& c : all) {
        if (which != "all" && which != std::to_string(c.id)) continue;
        ran = true;
        Verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double secs = since(start);
        if (c.limit > 0 && secs > c.limit) v.require(false, "time limit exceeded");
        std::printf("criterion %d (%s): %s [%.2f s] %s\n", c.id, c.title, v.pass ? "PASS" : "FAIL", secs,
                    v.detail.str().c_str());
        ok = ok && v.pass;
    }
    if (!ran) {
        std::fprintf(stderr, "usage: acceptance <1..10|all>\n");
        return 2;
    }
    return ok ? 0 : 1;
}
