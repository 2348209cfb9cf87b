#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "qgt/applications.hpp"
#include "qgt/bench.hpp"
#include "qgt/bounds.hpp"
#include "qgt/code_builder.hpp"
#include "qgt/decoder.hpp"
#include "qgt/disperser.hpp"
#include "qgt/errors.hpp"
#include "qgt/random_code.hpp"
#include "qgt/serialization.hpp"
#include "qgt/strong_selector.hpp"
#include "qgt/sui.hpp"

namespace {

using namespace qgt;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

/// Verification failed or the feedback could not be decoded.
struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path);
    out << text;
}

GroupTestingCode load_code(const std::string& path) {
    try {
        return parse_code(read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void print_warnings(const GroupTestingCode& code) {
    for (const auto& w : code.warnings()) std::cerr << "warning: " << w << '\n';
}

struct BuildArgs {
    std::uint32_t n = 0, k = 0;
    Count alpha = 0;
    std::string mode = "auto";
    std::uint64_t seed = 1;
    std::string out;
};

struct VerifyArgs {
    std::string code;
    bool uniqueness = false, claim_a = false, sui = false, ssui = false, dispersion = false;
    double budget = kDefaultBudget;
    std::uint32_t ell = 0, kappa = 0;
    double epsilon = 0.25;
    std::optional<Count> alpha;
    std::uint32_t n = 0, ell_star = 1;
    std::optional<std::uint32_t> degree;
    std::optional<double> delta;
    std::uint64_t seed = 0;
};

struct RandomArgs {
    std::uint32_t n = 0, k = 0;
    Count alpha = 0;
    std::uint64_t seed = 1;
    std::string verify;
    unsigned retry = 64;
    std::string out;
};

struct StreamArgs {
    std::string code, ops;
    bool reconstruct = false;
};

struct GraphArgs {
    std::uint32_t nodes = 0, k = 0;
    std::optional<Count> alpha;
    std::optional<std::uint32_t> edge_budget;
    std::string ops;
    bool reconstruct = false;
};

int cmd_build(const BuildArgs& a) {
    Mode mode;
    if (a.mode == "auto") {
        mode = choose_mode(a.n, a.k, a.alpha);
    } else if (auto m = parse_mode(a.mode); m && *m != Mode::random) {
        mode = *m;
    } else {
        throw ConfigError("unknown mode '" + a.mode + "' (plain, large, multiset or auto)");
    }
    BuildOptions opts;
    opts.sui.seed = a.seed;
    const GroupTestingCode code = build_code_mode(mode, a.n, a.k, a.alpha, opts);
    print_warnings(code);
    write_output(a.out, serialize_code(code));
    return kOk;
}

int cmd_encode(const std::string& code_path, const std::string& set, const std::string& out) {
    const GroupTestingCode code = load_code(code_path);
    const HiddenMultiset hidden = parse_multiset_spec(set);
    for (const auto& [v, c] : hidden) {
        if (v > code.params().n) throw FormatError("element " + std::to_string(v) + " outside [1..n]");
    }
    write_output(out, format_feedback(feedback_vector(code.queries(), hidden, code.params().alpha)));
    return kOk;
}

int cmd_decode(const std::string& code_path, const std::string& fv_path) {
    const GroupTestingCode code = load_code(code_path);
    const FeedbackVector fv = parse_feedback(read_file(fv_path));
    std::cout << format_multiset(decode(code, fv));
    return kOk;
}

int cmd_verify(const VerifyArgs& a) {
    bool all = true;
    auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << name << (ok ? " pass" : " fail") << (detail.empty() ? "" : " " + detail) << '\n';
        all = all && ok;
    };

    if (a.dispersion) {
        DisperserParams p;
        p.ell_star = a.ell_star;
        p.epsilon = a.epsilon;
        p.degree = a.degree;
        p.delta = a.delta;
        p.seed = a.seed;
        if (a.n < 2) throw ConfigError("--dispersion needs --n >= 2");
        const BipartiteGraph g = build_disperser(a.n, p);
        const bool ok = verify_dispersion(g, a.ell_star, a.epsilon, DispersionMode::exhaustive_check(), a.budget);
        report("dispersion", ok,
               "left=" + std::to_string(g.left_size()) + " right=" + std::to_string(g.right_size()) +
                   " degree=" + std::to_string(g.degree()));
    }

    if (a.uniqueness || a.claim_a || a.sui || a.ssui) {
        if (a.code.empty()) throw ConfigError("--code is required for code checks");
        const GroupTestingCode code = load_code(a.code);
        const auto& p = code.params();
        if (a.uniqueness) {
            const bool ok = verify_uniqueness(code.queries(), p.n, p.k, p.alpha, a.budget);
            report("uniqueness", ok);
            if (ok) report("counting", counting_bound_holds(code.size(), p.alpha, p.n, p.k));
        }
        if (a.claim_a) {
            const auto w = find_unjammed_violation(code.queries(), p.n, p.k, p.alpha, a.budget);
            std::string detail;
            if (w) {
                std::ostringstream s;
                s << "element=" << w->element << " set=";
                for (std::size_t i = 0; i < w->set.size(); ++i) s << (i ? "," : "") << w->set[i];
                detail = s.str();
            }
            report("claim-a", !w, detail);
        }
        const Count alpha = a.alpha.value_or(p.alpha);
        if (a.sui) {
            if (a.ell < 1) throw ConfigError("--sui needs --ell");
            const SuiReport r = verify_sui(code.queries(), p.n, a.ell, a.epsilon, a.kappa, alpha, a.budget);
            report("sui", r.pass, "max_unselected=" + std::to_string(r.max_unselected));
        }
        if (a.ssui) {
            if (a.ell < 1) throw ConfigError("--ssui needs --ell");
            report("ssui", verify_ssui(code.queries(), p.n, a.ell, a.kappa, alpha, a.budget));
        }
    }
    if (!(a.uniqueness || a.claim_a || a.sui || a.ssui || a.dispersion)) {
        throw ConfigError("choose at least one of --uniqueness, --claim-a, --sui, --ssui, --dispersion");
    }
    return all ? kOk : kFailed;
}

int cmd_random(const RandomArgs& a) {
    if (a.verify.empty()) {
        const RandomCode code = build_random_code(a.n, a.k, a.alpha, a.seed);
        write_output(a.out, serialize_code(to_code(code)));
        return kOk;
    }
    ClaimMode mode;
    if (a.verify == "exhaustive") {
        mode = ClaimMode{};
    } else if (a.verify.rfind("sampled:", 0) == 0) {
        std::size_t used = 0;
        const std::string t = a.verify.substr(8);
        std::size_t trials = 0;
        try {
            trials = std::stoul(t, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used == 0 || used != t.size()) throw ConfigError("--verify sampled:T needs an integer T");
        mode = ClaimMode::sampled(trials, a.seed);
    } else {
        throw ConfigError("--verify takes 'exhaustive' or 'sampled:T'");
    }
    VerifiedRandomCode v;
    try {
        v = build_verified_random_code(a.n, a.k, a.alpha, a.seed, mode, a.retry);
    } catch (const BudgetError&) {
        throw;
    } catch (const Error& e) {
        throw Failure(e.what());
    }
    const std::string text = serialize_code(to_code(v.code));
    std::ostream& info = (a.out.empty() || a.out == "-") ? std::cerr : std::cout;
    write_output(a.out, text);
    info << v.report.to_text() << "seed " << v.seed << "\nattempts " << v.attempts << "\nfallback "
         << (v.code.fallback ? "yes" : "no") << '\n';
    return kOk;
}

int cmd_bench(const std::string& grid, std::uint64_t seed) {
    const auto points = parse_grid(read_file(grid));
    std::cout << kBenchHeader << '\n';
    for (const auto& p : points) std::cout << format_bench_row(run_bench_point(p, seed)) << '\n';
    return kOk;
}

int cmd_stream(const StreamArgs& a) {
    auto code = std::make_shared<const GroupTestingCode>(load_code(a.code));
    StreamSketch sketch(code);
    const auto ops = parse_ops(read_file(a.ops), false);
    for (std::size_t i = 0; i < ops.size(); ++i) {
        try {
            ops[i].insert ? sketch.insert(ops[i].a) : sketch.erase(ops[i].a);
        } catch (const std::logic_error& e) {
            throw FormatError("op " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    if (a.reconstruct) {
        std::cout << format_multiset(sketch.reconstruct());
    } else {
        std::cout << format_feedback(sketch.capped_counters());
    }
    return kOk;
}

int cmd_graph(const GraphArgs& a) {
    GraphSketch graph(a.nodes, a.k, a.alpha, a.edge_budget);
    const auto ops = parse_ops(read_file(a.ops), true);
    for (std::size_t i = 0; i < ops.size(); ++i) {
        try {
            ops[i].insert ? graph.add_edge(ops[i].a, ops[i].b) : graph.remove_edge(ops[i].a, ops[i].b);
        } catch (const std::logic_error& e) {
            throw FormatError("op " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    if (a.reconstruct) {
        for (const auto& [u, v] : graph.reconstruct()) std::cout << u << ' ' << v << '\n';
    } else {
        std::cout << format_feedback(graph.sketch().capped_counters());
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Non-adaptive quantitative group testing with capped feedback"};
    app.require_subcommand(1);

    BuildArgs build;
    auto* b = app.add_subcommand("build", "Build a code and write it in the qgtc text format");
    b->add_option("--n", build.n, "Universe size (power of 2)")->required();
    b->add_option("--k", build.k, "Maximum hidden set size")->required();
    b->add_option("--alpha", build.alpha, "Feedback cap")->required();
    b->add_option("--mode", build.mode, "plain, large, multiset or auto")->capture_default_str();
    b->add_option("--seed", build.seed, "Disperser seed")->capture_default_str();
    b->add_option("--out", build.out, "Output file (default stdout)");

    std::string enc_code, enc_set, enc_out;
    auto* e = app.add_subcommand("encode", "Feedback vector of a hidden multiset");
    e->add_option("--code", enc_code, "Code file")->required();
    e->add_option("--set", enc_set, "Hidden multiset, e.g. 3:2,7")->required();
    e->add_option("--out", enc_out, "Output file (default stdout)");

    std::string dec_code, dec_fv;
    auto* d = app.add_subcommand("decode", "Reconstruct the hidden multiset from a feedback vector");
    d->add_option("--code", dec_code, "Code file")->required();
    d->add_option("--fv", dec_fv, "Feedback vector file")->required();

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Exhaustive checks on a code or a disperser");
    v->add_option("--code", verify.code, "Code file");
    v->add_flag("--uniqueness", verify.uniqueness, "All sets of size <= k have distinct feedback");
    v->add_flag("--claim-a", verify.claim_a, "No element can be jammed by the rest of a k-set");
    v->add_flag("--sui", verify.sui, "The code is an (n, ell, epsilon, kappa, alpha) selector under interference");
    v->add_flag("--ssui", verify.ssui, "The code is an (n, ell, kappa, alpha) strong selector under interference");
    v->add_flag("--dispersion", verify.dispersion, "Build a disperser from --n/--ell-star/... and check it");
    v->add_option("--budget", verify.budget, "Enumeration budget")->capture_default_str();
    v->add_option("--ell", verify.ell, "Selector size");
    v->add_option("--kappa", verify.kappa, "Interfering set size");
    v->add_option("--epsilon", verify.epsilon, "Unselected fraction / dispersion slack")->capture_default_str();
    v->add_option("--alpha", verify.alpha, "Interference cap (default: the code's alpha)");
    v->add_option("--n", verify.n, "Disperser left size");
    v->add_option("--ell-star", verify.ell_star, "Disperser subset size")->capture_default_str();
    v->add_option("--degree", verify.degree, "Disperser left degree");
    v->add_option("--delta", verify.delta, "Disperser entropy loss");
    v->add_option("--seed", verify.seed, "Disperser seed")->capture_default_str();

    RandomArgs random;
    auto* r = app.add_subcommand("random", "Random alpha-Round-Robin code");
    r->add_option("--n", random.n, "Universe size")->required();
    r->add_option("--k", random.k, "Maximum hidden set size")->required();
    r->add_option("--alpha", random.alpha, "Feedback cap")->required();
    r->add_option("--seed", random.seed, "First seed")->capture_default_str();
    r->add_option("--verify", random.verify, "exhaustive or sampled:T; retries seeds until the claims hold");
    r->add_option("--retry", random.retry, "Seed retry cap")->capture_default_str();
    r->add_option("--out", random.out, "Output file (default stdout; the report then goes to stderr)");

    std::string grid;
    std::uint64_t bench_seed = 1;
    auto* be = app.add_subcommand("bench", "Code sizes against the lower bound, as CSV");
    be->add_option("--grid", grid, "Grid file: 'n k alpha [mode]' per line")->required();
    be->add_option("--seed", bench_seed, "Seed of the decoded sample set")->capture_default_str();

    StreamArgs stream;
    auto* s = app.add_subcommand("stream", "Replay an insert/delete log against a code");
    s->add_option("--code", stream.code, "Code file")->required();
    s->add_option("--ops", stream.ops, "Op log: 'I v' / 'D v'")->required();
    s->add_flag("--reconstruct", stream.reconstruct, "Decode the final contents");

    GraphArgs graph;
    auto* g = app.add_subcommand("graph", "Replay an edge log against a graph sketch");
    g->add_option("--nodes", graph.nodes, "Number of nodes")->required();
    g->add_option("--k", graph.k, "Maximum node degree")->required();
    g->add_option("--alpha", graph.alpha, "Feedback cap (default: edge capacity)");
    g->add_option("--edges", graph.edge_budget, "Edge capacity cap");
    g->add_option("--ops", graph.ops, "Op log: 'I u v' / 'D u v'")->required();
    g->add_flag("--reconstruct", graph.reconstruct, "Decode the final edge set");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*b) return cmd_build(build);
        if (*e) return cmd_encode(enc_code, enc_set, enc_out);
        if (*d) return cmd_decode(dec_code, dec_fv);
        if (*v) return cmd_verify(verify);
        if (*r) return cmd_random(random);
        if (*be) return cmd_bench(grid, bench_seed);
        if (*s) return cmd_stream(stream);
        if (*g) return cmd_graph(graph);
    } catch (const Failure& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kFailed;
    } catch (const DecodeError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kFailed;
    } catch (const FormatError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kUsage;
    } catch (const ConfigError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kUsage;
    } catch (const BudgetError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kUsage;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kFailed;
    } catch (const std::logic_error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
