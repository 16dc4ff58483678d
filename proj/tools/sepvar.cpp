// sepvar: separating varieties of additive group actions from the command line.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sepvar/errors.hpp"
#include "sepvar/report.hpp"

using namespace sepvar;

namespace {

enum Exit { kOk = 0, kUsage = 2, kTimeout = 3, kFailure = 4 };

struct Config {
    double timeout = 900;
    std::string order = "grevlex";
    std::string format = "text";
    std::uint64_t seed = 1;
    int max_n = 8;
    unsigned threads = 1;
    bool timings = true;
    bool verify = false;
};

const char* status_name(int code) {
    switch (code) {
        case kOk: return "ok";
        case kTimeout: return "timeout";
        case kFailure: return "failure";
        default: return "usage";
    }
}

int emit(const Config& cfg, const std::string& command, Json inputs, Json result, const std::string& text, int code,
         Json timings) {
    if (cfg.format == "json") {
        Json j;
        j["command"] = command;
        j["inputs"] = std::move(inputs);
        j["seed"] = cfg.seed;
        j["config"] = {{"timeout", cfg.timeout}, {"order", cfg.order}, {"max_n", cfg.max_n}};
        j["status"] = status_name(code);
        j["exit_code"] = code;
        j["result"] = std::move(result);
        if (cfg.timings) j["timings"] = std::move(timings);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
        if (code == kTimeout) std::cout << "unresolved within budget\n";
    }
    return code;
}

Json timings_json(const std::map<std::string, double>& t, double total) {
    Json j = Json::object();
    for (const auto& [k, v] : t) j[k] = v;
    j["total"] = total;
    return j;
}

double since(std::chrono::steady_clock::time_point s) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - s).count();
}

int cmd_basic(const Config& cfg, int n) {
    if (n < 1 || n > cfg.max_n) {
        std::cerr << "basic: n must be between 1 and " << cfg.max_n << "\n";
        return kUsage;
    }
    const auto start = std::chrono::steady_clock::now();
    DecomposeOptions opt;
    opt.budget = Budget::seconds(cfg.timeout);
    opt.threads = cfg.threads;
    const Decomposition d = decompose(n, opt);
    const int code = !d.consistent ? kFailure : d.resolved ? kOk : kTimeout;
    auto t = timings_json(d.timings, since(start));
    t["graph_gb_seconds"] = d.graph_stats.seconds;
    return emit(cfg, "basic", {{"n", n}}, basic_json(d), basic_text(d), code, t);
}

int cmd_lemma(const Config& cfg, int max_m) {
    if (max_m < 1) {
        std::cerr << "lemma: --max-m must be at least 1\n";
        return kUsage;
    }
    const auto start = std::chrono::steady_clock::now();
    const LemmaTable t = lemma_table(max_m);
    const int code = t.rows_hold() && t.failures_used.empty() ? kOk : kFailure;
    return emit(cfg, "lemma", {{"max_m", max_m}}, lemma_json(t), lemma_text(t), code,
                timings_json({}, since(start)));
}

int cmd_curve(const Config& cfg, int n, const std::string& a, const std::string& b) {
    const auto start = std::chrono::steady_clock::now();
    const Curve c = curve_construct(n, parse_point(a), parse_point(b));
    const CurveCheck check = curve_verify(c, weitzenbock(n));
    return emit(cfg, "curve", {{"n", n}, {"a", a}, {"b", b}}, curve_json(c, check), curve_text(c, check),
                check.ok() ? kOk : kFailure, timings_json({}, since(start)));
}

int cmd_case(const Config& cfg, const std::string& name) {
    const auto start = std::chrono::steady_clock::now();
    CaseOptions opt;
    opt.budget = Budget::seconds(cfg.timeout);
    opt.threads = cfg.threads;
    opt.seed = cfg.seed;
    if (name != "df5" && name != "f6") {
        std::cerr << "case: unknown case '" << name << "' (expected df5 or f6)\n";
        return kUsage;
    }
    const CaseReport r = name == "df5" ? df5_verify(opt) : f6_verify(opt);
    const int code = !r.consistent ? kFailure : r.resolved ? kOk : kTimeout;
    auto t = timings_json(r.timings, since(start));
    t["graph_gb_seconds"] = r.graph_stats.seconds;
    return emit(cfg, "case", {{"name", name}}, case_json(r), case_text(r), code, t);
}

int cmd_gb(const Config& cfg, const std::string& file, const std::string& elim, const std::string& output) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "gb: cannot read " << file << "\n";
        return kUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const auto start = std::chrono::steady_clock::now();
    Ideal ideal = parse_ideal(buf.str());
    const MonomialOrder order = cfg.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
    const Budget budget = Budget::seconds(cfg.timeout);
    GbOptions opts;
    opts.threads = cfg.threads;

    bool complete = true;
    GbStats stats;
    if (!elim.empty()) {
        std::vector<std::string> drop;
        std::stringstream ss(elim);
        for (std::string v; std::getline(ss, v, ',');)
            if (!v.empty()) drop.push_back(v);
        EliminationResult e = eliminate(ideal, drop, budget, opts);
        complete = e.complete;
        stats = e.stats;
        ideal = e.ideal;
    }
    std::vector<Polynomial> basis = ideal.generators();
    RingPtr ring = ideal.ring();
    if (complete) {
        GroebnerResult g = groebner(ideal, order, budget, opts);
        complete = g.complete();
        stats.reduction_steps += g.stats.reduction_steps;
        stats.basis_size = g.stats.basis_size;
        if (complete) {
            ring = g.basis->ring();
            basis = g.basis->elements();
        } else {
            basis = g.partial;
        }
    }
    const std::string file_text = format_ideal(ring, basis);
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "gb: cannot write " << output << "\n";
            return kUsage;
        }
        out << file_text;
    }
    const int code = complete ? kOk : kTimeout;
    Json result{{"complete", complete}, {"ideal", ideal_json(Ideal(ring, basis))}, {"stats", stats_json(stats)}};
    return emit(cfg, "gb", {{"file", file}, {"elim", elim}}, result, output.empty() ? file_text : "", code,
                timings_json({}, since(start)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Separating varieties of additive group actions"};
    Config cfg;
    app.add_option("--timeout", cfg.timeout, "Budget in seconds")->check(CLI::PositiveNumber);
    app.add_option("--order", cfg.order, "Term order")->check(CLI::IsMember({"lex", "grevlex"}));
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "Seed for sampled witnesses");
    app.add_option("--max-n", cfg.max_n, "Largest n accepted by basic");
    app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--no-timings{false}", cfg.timings, "Leave timings out of JSON output");
    app.add_flag("--verify", cfg.verify, "Re-check every Groebner basis");
    app.require_subcommand(1);

    int n = 0;
    auto* basic = app.add_subcommand("basic", "Decompose the separating variety of V_n");
    basic->add_option("n", n)->required();

    int max_m = 6;
    auto* lemma = app.add_subcommand("lemma", "Tabulate v^T A^-1 v and sweep the binomial identity");
    lemma->add_option("--max-m", max_m);

    int curve_n = 0;
    std::string a, b;
    auto* curve = app.add_subcommand("curve", "Build and verify a curve from a to b");
    curve->add_option("n", curve_n)->required();
    curve->add_option("--a", a)->required();
    curve->add_option("--b", b)->required();

    std::string case_name;
    auto* cs = app.add_subcommand("case", "Run a case study (df5 or f6)");
    cs->add_option("name", case_name)->required();

    std::string file, elim, output;
    auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal file");
    gb->add_option("file", file)->required();
    gb->add_option("--elim", elim, "Comma-separated variables to eliminate");
    gb->add_option("--output", output, "Write the basis to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    set_verify_bases(cfg.verify);
    try {
        if (*basic) return cmd_basic(cfg, n);
        if (*lemma) return cmd_lemma(cfg, max_m);
        if (*curve) return cmd_curve(cfg, curve_n, a, b);
        if (*cs) return cmd_case(cfg, case_name);
        if (*gb) return cmd_gb(cfg, file, elim, output);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
