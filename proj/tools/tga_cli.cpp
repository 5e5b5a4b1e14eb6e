// Command-line umbrella for the Tanner-graph analysis toolkit.
//
// Exit codes: 0 = verdict consistent / pass, 1 = violation or failure found,
// 2 = usage, file, or budget error.
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tga/bitflip.hpp"
#include "tga/bounds.hpp"
#include "tga/errors.hpp"
#include "tga/expansion.hpp"
#include "tga/girth.hpp"
#include "tga/gldpc.hpp"
#include "tga/io.hpp"
#include "tga/node_set.hpp"
#include "tga/peg.hpp"
#include "tga/rational.hpp"
#include "tga/subcode.hpp"
#include "tga/sweep.hpp"
#include "tga/tanner_graph.hpp"
#include "tga/transforms.hpp"
#include "tga/trapping.hpp"

using namespace tga;

namespace {

struct GlobalOpts {
    int threads = 1;
    unsigned long long budget = 100000000ULL;
    std::uint64_t seed = 1;
    std::string format = "text";

    bool lines() const { return format == "lines"; }
};

// Key/value output that renders either as aligned text or as one
// machine-readable "name=value" per line.
class Emitter {
  public:
    explicit Emitter(bool lines) : lines_(lines) {}

    void kv(const std::string& name, const std::string& value) {
        if (lines_) {
            std::printf("%s=%s\n", name.c_str(), value.c_str());
        } else {
            std::printf("%-22s %s\n", name.c_str(), value.c_str());
        }
    }
    void kv(const std::string& name, const char* value) { kv(name, std::string(value)); }
    void kv(const std::string& name, long long value) { kv(name, std::to_string(value)); }
    void kv(const std::string& name, unsigned long long value) {
        kv(name, std::to_string(value));
    }
    void kv(const std::string& name, int value) { kv(name, std::to_string(value)); }
    void kv(const std::string& name, bool value) {
        kv(name, std::string(lines_ ? (value ? "1" : "0") : (value ? "yes" : "no")));
    }
    // One row of a per-size/per-weight table; in lines mode the fields join
    // into a single "k=v k=v ..." record.
    void row(const std::vector<std::pair<std::string, std::string>>& fields) {
        if (lines_) {
            std::string out;
            for (const auto& [k, v] : fields) {
                if (!out.empty()) {
                    out += ' ';
                }
                out += k + "=" + v;
            }
            std::printf("%s\n", out.c_str());
        } else {
            for (const auto& [k, v] : fields) {
                std::printf("%s %-10s ", k.c_str(), v.c_str());
            }
            std::printf("\n");
        }
    }

    bool lines() const { return lines_; }

  private:
    bool lines_;
};

std::string join(const std::vector<int>& xs, char sep) {
    std::string out;
    for (int x : xs) {
        if (!out.empty()) {
            out += sep;
        }
        out += std::to_string(x);
    }
    return out;
}

std::string set_text(const Emitter& em, const NodeSet& s) {
    if (s.empty()) {
        return em.lines() ? "" : "(empty)";
    }
    return join(s, em.lines() ? ',' : ' ');
}

std::string girth_text(int g) {
    return g == kInfiniteGirth ? "inf" : std::to_string(g);
}

std::string stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

NodeSet random_pattern(int n, int weight, std::uint64_t seed) {
    if (weight > n) {
        throw std::invalid_argument("pattern weight exceeds the variable count");
    }
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < weight; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(idx[i], idx[pick(rng)]);
    }
    return make_node_set({idx.begin(), idx.begin() + weight});
}

// ---------------------------------------------------------------- girth ----

struct GirthArgs {
    std::string file;
    bool edges = false;
};

int run_girth(const GlobalOpts& g, const GirthArgs& a) {
    Emitter em(g.lines());
    if (a.edges) {
        GeneralGraph graph = load_edge_list(a.file);
        em.kv("nodes", graph.node_count());
        em.kv("edges", graph.edge_count());
        em.kv("girth", girth_text(girth(graph)));
    } else {
        TannerGraph graph = load_alist(a.file);
        em.kv("vars", graph.var_count());
        em.kv("checks", graph.check_count());
        em.kv("edges", graph.edge_count());
        if (auto r = graph.var_regularity()) {
            em.kv("gamma", *r);
        }
        if (auto r = graph.check_regularity()) {
            em.kv("rho", *r);
        }
        em.kv("girth", girth_text(girth(graph)));
    }
    return 0;
}

// --------------------------------------------------------------- bounds ----

struct BoundsArgs {
    int gamma = 0;
    int girth = 0;
    int t = -1;
};

int run_bounds(const GlobalOpts& g, const BoundsArgs& a) {
    Emitter em(g.lines());
    em.kv("gamma", a.gamma);
    em.kv("girth", a.girth);
    if (a.girth % 2 != 0 || a.girth < 6) {
        throw std::invalid_argument("girth must be even and at least 6");
    }
    int g_prime = a.girth / 2;

    try {
        BoundValue n0 = moore_bound(Rational(a.gamma, 2), g_prime);
        em.kv("moore_half", to_string(n0.value));
    } catch (const std::invalid_argument&) {
        em.kv("moore_half", "n/a");
    }

    try {
        BoundValue lg = ldpc_guarantee(a.gamma, a.girth);
        em.kv("ldpc_guarantee", to_string(lg.value));
        em.kv("ldpc_guarantee_floor", lg.floor_int);
    } catch (const std::invalid_argument&) {
        em.kv("ldpc_guarantee", "n/a");
    }

    try {
        CageOrder fb = ldpc_failure_bound(a.gamma, a.girth);
        if (fb.exact) {
            em.kv("ldpc_failure_bound", *fb.exact);
        } else {
            em.kv("ldpc_failure_bound_lower", to_string(fb.lower));
            if (fb.upper) {
                em.kv("ldpc_failure_bound_upper", to_string(*fb.upper));
            }
        }
    } catch (const std::invalid_argument&) {
        em.kv("ldpc_failure_bound", "n/a");
    }

    if (a.t >= 0) {
        em.kv("t", a.t);
        em.kv("beta_threshold", to_string(gldpc_beta_threshold(a.t)));
        try {
            BoundValue gg = gldpc_guarantee(a.gamma, a.t, a.girth);
            em.kv("gldpc_guarantee", to_string(gg.value));
            em.kv("gldpc_guarantee_floor", gg.floor_int);
        } catch (const std::invalid_argument&) {
            em.kv("gldpc_guarantee", "n/a");
        }
    }
    return 0;
}

// --------------------------------------------------------------- decode ----

struct DecodeArgs {
    std::string graph;
    std::string algorithm = "parallel";
    std::string subcode;
    std::vector<int> pattern;
    int weight = -1;
    int max_rounds = 100;
};

int run_decode(const GlobalOpts& g, const DecodeArgs& a) {
    Emitter em(g.lines());
    TannerGraph graph = load_alist(a.graph);

    NodeSet corrupt;
    if (!a.pattern.empty()) {
        corrupt = make_node_set(a.pattern);
        if (!corrupt.empty() &&
            (corrupt.front() < 0 || corrupt.back() >= graph.var_count())) {
            throw std::invalid_argument("pattern index out of range");
        }
    } else if (a.weight >= 0) {
        corrupt = random_pattern(graph.var_count(), a.weight, g.seed);
    } else {
        throw std::invalid_argument("provide --pattern or --weight");
    }
    BitWord x = word_from_support(graph.var_count(), corrupt);
    em.kv("pattern", set_text(em, corrupt));

    DecodeOutcome outcome = [&] {
        if (a.algorithm == "parallel") {
            return parallel_bf_decode(graph, std::move(x), a.max_rounds);
        }
        if (a.algorithm == "serial") {
            return serial_bf_decode(graph, std::move(x), a.max_rounds);
        }
        if (a.subcode.empty()) {
            throw std::invalid_argument("gldpc decoding needs --subcode");
        }
        GldpcCode code = gldpc_assemble(std::move(graph), load_subcode(a.subcode));
        return gldpc_decode(code, std::move(x), a.max_rounds);
    }();

    em.kv("status", to_string(outcome.status));
    em.kv("rounds", outcome.rounds_used);
    em.kv("final_weight", weight(outcome.final_word));
    em.kv("final_support", set_text(em, support(outcome.final_word)));
    bool corrected = outcome.status == DecodeStatus::codeword && is_zero(outcome.final_word);
    em.kv("corrected", corrected);
    return corrected ? 0 : 1;
}

// ------------------------------------------------------------ expansion ----

struct ExpansionArgs {
    std::string graph;
    std::string theorem;  // "", "t1", "t6"
    int k_max = 0;
    std::string delta;
    bool strict = true;
    int t = 1;
};

int run_expansion(const GlobalOpts& g, const ExpansionArgs& a) {
    Emitter em(g.lines());
    TannerGraph graph = load_alist(a.graph);

    ExpansionReport report = [&] {
        if (a.theorem == "t1") {
            return verify_theorem1(graph, g.budget, g.threads);
        }
        if (a.theorem == "t6") {
            return verify_theorem6(graph, a.t, g.budget, g.threads);
        }
        if (a.k_max <= 0 || a.delta.empty()) {
            throw std::invalid_argument("provide --theorem, or both --k-max and --delta");
        }
        return verify_expansion(graph, a.k_max, parse_rational(a.delta), a.strict, g.budget,
                                g.threads);
    }();

    em.kv("k_max", report.k_max);
    em.kv("delta", to_string(report.delta));
    em.kv("strict", report.strict);
    for (const auto& row : report.rows) {
        em.row({{"size", std::to_string(row.size)},
                {"min_neighbors", std::to_string(row.min_neighbors)},
                {"required", to_string(row.required)},
                {"ok", row.ok ? "1" : "0"},
                {"witness", join(row.witness, ',')}});
    }
    em.kv("subsets_examined", report.subsets_examined.str());
    em.kv("pass", report.pass);
    return report.pass ? 0 : 1;
}

// ------------------------------------------------------------- trapping ----

struct TrappingArgs {
    std::string mode;
    std::string graph;
    std::string set;
    std::string out;
    int gamma = 4;
    int g_prime = 4;
    int girth = 8;
    int max_vars = 100;
    std::string pool = "set";
    std::string algorithm = "parallel";
    int max_rounds = 100;
};

void emit_trapping_report(Emitter& em, const TrappingReport& report) {
    em.kv("set", set_text(em, report.set));
    em.kv("a_vars", report.a_vars);
    em.kv("b_checks", report.b_checks);
    em.kv("cond_a", report.cond_a);
    em.kv("cond_b", report.cond_b);
    em.kv("fixed_point_parallel", report.is_fixed_point_parallel);
    em.kv("fixed_point_serial", report.is_fixed_point_serial);
    em.kv("odd_checks", set_text(em, report.odd_checks));
    em.kv("even_checks", set_text(em, report.even_checks));
    em.kv("trapping_set", report.is_trapping_set());
}

int run_trapping(const GlobalOpts& g, const TrappingArgs& a) {
    Emitter em(g.lines());

    if (a.mode == "verify") {
        TannerGraph graph = load_alist(a.graph);
        NodeSet set = load_node_set(a.set);
        TrappingReport report = check_trapping_conditions(graph, set);
        emit_trapping_report(em, report);
        return report.is_trapping_set() ? 0 : 1;
    }

    if (a.mode == "construct") {
        TannerGraph fragment = construct_potential_trapping_set(a.gamma, a.g_prime);
        NodeSet set(fragment.var_count());
        std::iota(set.begin(), set.end(), 0);
        save_alist(fragment, a.out + ".alist");
        save_node_set(set, a.out + ".trapset");
        em.kv("vars", fragment.var_count());
        em.kv("checks", fragment.check_count());
        em.kv("girth", girth_text(girth(fragment)));
        em.kv("alist", a.out + ".alist");
        em.kv("trapset", a.out + ".trapset");
        return 0;
    }

    if (a.mode == "embed") {
        TannerGraph fragment = construct_potential_trapping_set(a.gamma, a.girth / 2);
        EmbeddedTrappingSet emb =
            embed_trapping_set(fragment, a.gamma, a.girth, a.max_vars, g.seed);
        TrappingReport report = check_trapping_conditions(emb.host, emb.set);
        save_alist(emb.host, a.out + ".alist");
        save_node_set(emb.set, a.out + ".trapset");
        em.kv("host_vars", emb.host.var_count());
        em.kv("host_checks", emb.host.check_count());
        em.kv("host_girth", girth_text(girth(emb.host)));
        em.kv("alist", a.out + ".alist");
        em.kv("trapset", a.out + ".trapset");
        emit_trapping_report(em, report);
        return report.is_trapping_set() ? 0 : 1;
    }

    if (a.mode == "critical") {
        TannerGraph graph = load_alist(a.graph);
        NodeSet set = load_node_set(a.set);
        CriticalPool pool = a.pool == "set"            ? CriticalPool::subsets_of_set
                            : a.pool == "neighborhood" ? CriticalPool::set_plus_neighborhood
                                                       : CriticalPool::all_up_to_weight;
        BfAlgorithm algorithm =
            a.algorithm == "serial" ? BfAlgorithm::serial : BfAlgorithm::parallel;
        CriticalNumberResult result =
            critical_number(graph, set, algorithm, pool, a.max_rounds, g.budget);
        em.kv("search_space", result.search_space);
        em.kv("patterns_tried", result.patterns_tried);
        if (result.value) {
            em.kv("critical_number", *result.value);
            em.kv("witness", set_text(em, result.witness));
        } else {
            em.kv("critical_number", "none");
        }
        return 0;
    }

    throw std::invalid_argument("unknown trapping mode: " + a.mode);
}

// ---------------------------------------------------------------- sweep ----

struct SweepArgs {
    std::string graph;
    std::string algorithm = "parallel";
    std::string subcode;
    int w_max = 0;
    unsigned long long samples = 0;
    int max_rounds = 100;
};

int run_sweep(const GlobalOpts& g, const SweepArgs& a) {
    Emitter em(g.lines());
    TannerGraph graph = load_alist(a.graph);

    SweepMode mode;
    if (a.samples > 0) {
        mode.exhaustive = false;
        mode.samples = a.samples;
        mode.seed = g.seed;
    }

    SweepReport report = [&] {
        std::string id = stem(a.graph);
        if (a.algorithm == "gldpc") {
            if (a.subcode.empty()) {
                throw std::invalid_argument("gldpc sweeps need --subcode");
            }
            GldpcCode code = gldpc_assemble(std::move(graph), load_subcode(a.subcode));
            return sweep_guarantee(code, a.w_max, mode, a.max_rounds, g.budget, g.threads, id);
        }
        SweepAlgorithm algorithm =
            a.algorithm == "serial" ? SweepAlgorithm::serial : SweepAlgorithm::parallel;
        if (a.algorithm != "serial" && a.algorithm != "parallel") {
            throw std::invalid_argument("unknown algorithm: " + a.algorithm);
        }
        return sweep_guarantee(graph, algorithm, a.w_max, mode, a.max_rounds, g.budget,
                               g.threads, id);
    }();

    em.kv("code", report.code_id);
    em.kv("algorithm", to_string(report.algorithm));
    em.kv("w_max", report.w_max);
    if (report.guarantee_value) {
        em.kv("guarantee", to_string(*report.guarantee_value));
        em.kv("guarantee_floor", report.guarantee_floor);
    } else {
        em.kv("guarantee", "n/a");
    }
    if (!report.sample_rng.empty()) {
        em.kv("sample_rng", report.sample_rng);
    }
    for (const auto& w : report.per_weight) {
        std::vector<std::pair<std::string, std::string>> fields = {
            {"weight", std::to_string(w.weight)},
            {"tried", std::to_string(w.patterns_tried)},
            {"failures", std::to_string(w.failures)},
        };
        if (w.first_failure) {
            fields.emplace_back("first", join(*w.first_failure, ','));
        }
        em.row(fields);
    }
    em.kv("patterns_total", report.patterns_total);
    em.kv("consistent", report.consistent);
    return report.consistent ? 0 : 1;
}

// ------------------------------------------------------------ construct ----

struct ConstructArgs {
    int vars = 0;
    int gamma = 0;
    int rho = 0;
    int girth = 0;
    std::string out;
};

int run_construct(const GlobalOpts& g, const ConstructArgs& a) {
    Emitter em(g.lines());
    TannerGraph graph = peg_construct(a.vars, a.gamma, a.rho, a.girth, g.seed);
    save_alist(graph, a.out);
    em.kv("vars", graph.var_count());
    em.kv("checks", graph.check_count());
    em.kv("gamma", a.gamma);
    em.kv("rho", a.rho);
    em.kv("girth", girth_text(girth(graph)));
    em.kv("alist", a.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tanner-graph analysis toolkit: girth, correction bounds, bit-flipping "
                 "decoders, expansion certificates, trapping sets, and guarantee sweeps"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts global;
    app.add_option("--threads", global.threads, "Worker threads for sweeps and expansion")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--budget", global.budget,
                   "Maximum patterns/subsets an exhaustive operation may enumerate")
        ->capture_default_str();
    app.add_option("--seed", global.seed, "Seed for sampling, embedding, and construction")
        ->capture_default_str();
    app.add_option("--format", global.format, "Output style")
        ->check(CLI::IsMember({"text", "lines"}))
        ->capture_default_str();

    GirthArgs girth_args;
    auto* girth_cmd = app.add_subcommand("girth", "Exact girth of a graph file");
    girth_cmd->add_option("file", girth_args.file, "alist (default) or edge-list path")
        ->required();
    girth_cmd->add_flag("--edges", girth_args.edges, "Treat the file as a 0-based edge list");

    BoundsArgs bounds_args;
    auto* bounds_cmd =
        app.add_subcommand("bounds", "Correction thresholds for given gamma and girth");
    bounds_cmd->add_option("--gamma", bounds_args.gamma, "Variable degree")->required();
    bounds_cmd->add_option("--girth", bounds_args.girth, "Tanner-graph girth (even)")
        ->required();
    bounds_cmd->add_option("--t", bounds_args.t,
                           "Sub-code correction radius (adds the generalized bounds)");

    DecodeArgs decode_args;
    auto* decode_cmd = app.add_subcommand("decode", "Run one decoding and report the outcome");
    decode_cmd->add_option("--graph", decode_args.graph, "alist path")->required();
    decode_cmd
        ->add_option("--algorithm", decode_args.algorithm, "parallel | serial | gldpc")
        ->check(CLI::IsMember({"parallel", "serial", "gldpc"}))
        ->capture_default_str();
    decode_cmd->add_option("--subcode", decode_args.subcode, "Sub-code spec (gldpc only)");
    decode_cmd
        ->add_option("--pattern", decode_args.pattern,
                     "Comma-separated corrupt variable indices")
        ->delimiter(',');
    decode_cmd->add_option("--weight", decode_args.weight,
                           "Random pattern of this weight (uses --seed)");
    decode_cmd->add_option("--max-rounds", decode_args.max_rounds, "Iteration cap")
        ->capture_default_str();

    ExpansionArgs expansion_args;
    auto* expansion_cmd =
        app.add_subcommand("expansion", "Exhaustive subset-expansion certificate");
    expansion_cmd->add_option("--graph", expansion_args.graph, "alist path")->required();
    expansion_cmd
        ->add_option("--theorem", expansion_args.theorem,
                     "t1 (gamma/2 Moore sizes, 3gamma/4) or t6 (generalized, needs --t)")
        ->check(CLI::IsMember({"t1", "t6"}));
    expansion_cmd->add_option("--k-max", expansion_args.k_max, "Largest subset size");
    expansion_cmd->add_option("--delta", expansion_args.delta,
                              "Required expansion per variable, as p/q or integer");
    expansion_cmd->add_flag("--strict,!--no-strict", expansion_args.strict,
                            "Require strictly more than delta*size neighbors (default)");
    expansion_cmd->add_option("--t", expansion_args.t, "Sub-code correction radius for t6")
        ->capture_default_str();

    TrappingArgs trapping_args;
    auto* trapping_cmd = app.add_subcommand("trapping", "Trapping-set analysis");
    trapping_cmd
        ->add_option("--mode", trapping_args.mode, "verify | construct | embed | critical")
        ->check(CLI::IsMember({"verify", "construct", "embed", "critical"}))
        ->required();
    trapping_cmd->add_option("--graph", trapping_args.graph, "alist path (verify, critical)");
    trapping_cmd->add_option("--set", trapping_args.set,
                             "Sidecar file of variable indices (verify, critical)");
    trapping_cmd->add_option("--out", trapping_args.out,
                             "Output basename for .alist/.trapset (construct, embed)");
    trapping_cmd->add_option("--gamma", trapping_args.gamma, "Variable degree")
        ->capture_default_str();
    trapping_cmd->add_option("--gprime", trapping_args.g_prime, "Half girth (construct)")
        ->capture_default_str();
    trapping_cmd->add_option("--girth", trapping_args.girth, "Host girth (embed)")
        ->capture_default_str();
    trapping_cmd->add_option("--max-vars", trapping_args.max_vars,
                             "Host size budget (embed)")
        ->capture_default_str();
    trapping_cmd->add_option("--pool", trapping_args.pool,
                             "critical search pool: set | neighborhood | all")
        ->check(CLI::IsMember({"set", "neighborhood", "all"}))
        ->capture_default_str();
    trapping_cmd
        ->add_option("--algorithm", trapping_args.algorithm, "parallel | serial (critical)")
        ->check(CLI::IsMember({"parallel", "serial"}))
        ->capture_default_str();
    trapping_cmd->add_option("--max-rounds", trapping_args.max_rounds, "Iteration cap")
        ->capture_default_str();

    SweepArgs sweep_args;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Decode every (or sampled) pattern up to a weight");
    sweep_cmd->add_option("--graph", sweep_args.graph, "alist path")->required();
    sweep_cmd->add_option("--algorithm", sweep_args.algorithm, "parallel | serial | gldpc")
        ->check(CLI::IsMember({"parallel", "serial", "gldpc"}))
        ->capture_default_str();
    sweep_cmd->add_option("--subcode", sweep_args.subcode, "Sub-code spec (gldpc only)");
    sweep_cmd->add_option("--w-max", sweep_args.w_max, "Largest pattern weight")->required();
    sweep_cmd->add_option("--samples", sweep_args.samples,
                          "Sample this many patterns per weight instead of all (uses --seed)");
    sweep_cmd->add_option("--max-rounds", sweep_args.max_rounds, "Iteration cap")
        ->capture_default_str();

    ConstructArgs construct_args;
    auto* construct_cmd =
        app.add_subcommand("construct", "Progressive-edge-growth regular code");
    construct_cmd->add_option("--vars", construct_args.vars, "Variable count")->required();
    construct_cmd->add_option("--gamma", construct_args.gamma, "Variable degree")->required();
    construct_cmd->add_option("--rho", construct_args.rho, "Check degree")->required();
    construct_cmd->add_option("--girth", construct_args.girth, "Girth target (even)")
        ->required();
    construct_cmd->add_option("--out", construct_args.out, "Output alist path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (girth_cmd->parsed()) {
            return run_girth(global, girth_args);
        }
        if (bounds_cmd->parsed()) {
            return run_bounds(global, bounds_args);
        }
        if (decode_cmd->parsed()) {
            return run_decode(global, decode_args);
        }
        if (expansion_cmd->parsed()) {
            return run_expansion(global, expansion_args);
        }
        if (trapping_cmd->parsed()) {
            return run_trapping(global, trapping_args);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep(global, sweep_args);
        }
        if (construct_cmd->parsed()) {
            return run_construct(global, construct_args);
        }
    } catch (const BudgetError& e) {
        std::fprintf(stderr, "budget error: %s\n", e.what());
        return 2;
    } catch (const tga::ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "failed: %s\n", e.what());
        return 1;
    }
    return 2;
}
