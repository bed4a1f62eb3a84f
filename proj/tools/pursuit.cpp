// pursuit: cops-and-robbers laboratory CLI.
// Exit codes: 0 ok, 2 spec error, 3 budget exceeded, 4 I/O failure.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "pursuit/bounds.hpp"
#include "pursuit/experiment.hpp"
#include "pursuit/game.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/hall.hpp"
#include "pursuit/io.hpp"
#include "pursuit/retracts.hpp"
#include "pursuit/rng.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/subdivided.hpp"

using namespace pursuit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSpec = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

std::uint64_t default_retract_budget() {
    if (const char* env = std::getenv("PURSUIT_RETRACT_NODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 2'000'000ULL;
}

void write_or_print(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw IoError("cannot open '" + out + "' for writing");
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
}

std::string csv_witness(const LemmaWitness& w) {
    std::ostringstream os;
    os << "x=" << w.x << ";y=" << w.y << ";k=" << w.k;
    return os.str();
}

struct GenerateArgs {
    std::string spec;
    std::string out;
    std::string structure_out;
};

void run_generate(const GenerateArgs& args) {
    auto colon = args.spec.find(':');
    std::string head = args.spec.substr(0, colon);
    std::ostringstream graph_text;
    if (head == "subdivided" || head == "construct") {
        auto kv = parse_kv(colon == std::string::npos ? "" : args.spec.substr(colon + 1));
        SubdividedHypercube sq;
        if (head == "subdivided") {
            sq = gen_subdivided_hypercube(kv_int(kv, "d", -1), kv_int(kv, "s", -1),
                                          kv_int(kv, "l", -1), kv_u64(kv, "seed", 0));
        } else {
            auto plan = choose_construction_params(kv_int(kv, "n", -1), kv_u64(kv, "seed", 0));
            sq = build_from_plan(plan);
        }
        write_graph(graph_text, sq.graph);
        if (!args.structure_out.empty()) {
            std::ofstream f(args.structure_out);
            if (!f) throw IoError("cannot open '" + args.structure_out + "' for writing");
            write_structure(f, sq);
        }
    } else {
        write_graph(graph_text, resolve_graph_source(args.spec));
    }
    write_or_print(args.out, graph_text.str());
}

struct PlayArgs {
    std::string graph;
    std::string cops = "greedy";
    std::string robber = "random";
    int k = 0;
    long long max_rounds = 0;
    std::uint64_t seed = 0;
    std::string out;
    bool force_cop_move = false;
    bool cops_see_robber = false;
};

void run_play(const PlayArgs& args) {
    Graph g = resolve_graph_source(args.graph);
    auto cop_setup = make_cop_strategy(g, args.cops, args.seed);
    int k = args.k > 0 ? args.k : cop_setup.cop_count.value_or(1);
    auto robber = make_robber_strategy(g, args.robber, args.seed, k);
    PlayOptions options;
    options.max_rounds = args.max_rounds;
    options.rules.force_cop_move = args.force_cop_move;
    options.rules.cops_place_after_robber = args.cops_see_robber;
    options.seed = args.seed;
    Transcript t = play(g, *cop_setup.strategy, k, *robber, options);
    switch (t.outcome.kind) {
        case Outcome::Kind::Caught:
            std::cout << "caught round=" << t.outcome.round << " half="
                      << (t.outcome.half == Side::Cops ? "cops" : "robber")
                      << " cop=" << t.outcome.cop_index << "\n";
            break;
        case Outcome::Kind::Evaded:
            std::cout << "evaded cutoff=" << t.outcome.round << "\n";
            break;
        case Outcome::Kind::IllegalMove:
            std::cout << "illegal-move round=" << t.outcome.round << " detail=" << t.outcome.detail
                      << "\n";
            break;
    }
    if (!args.out.empty()) write_or_print(args.out, to_json(t));
}

struct SolveArgs {
    std::string graph;
    int k_max = 8;
    std::uint64_t budget = 0;
    std::string table_out;
    bool show_placement = false;
};

void run_solve(const SolveArgs& args) {
    Graph g = resolve_graph_source(args.graph);
    SolverBudget budget;
    if (args.budget > 0) budget.max_states = args.budget;
    auto k = cop_number_exact(g, args.k_max, budget);
    if (!k)
        throw BudgetExceeded("no winning cop count up to k_max=" + std::to_string(args.k_max));
    std::cout << *k << "\n";
    if (args.show_placement || !args.table_out.empty()) {
        auto table = make_solver_table(g, *k, budget);
        if (args.show_placement) {
            std::cout << "placement:";
            for (Vertex v : table->winning_placement()) std::cout << " " << v;
            std::cout << "\n";
        }
        if (!args.table_out.empty()) {
            std::ofstream f(args.table_out);
            if (!f) throw IoError("cannot open '" + args.table_out + "' for writing");
            f << "# pursuit solver table: cops | robber side depth (side 0 = cops to move)\n";
            const auto& indexer = table->indexer();
            for (std::uint64_t mc = 0; mc < indexer.count(); ++mc) {
                auto mset = indexer.multiset_of(mc);
                for (Vertex r = 0; r < g.vertex_count(); ++r) {
                    for (int side = 0; side < 2; ++side) {
                        auto d = table->depth(mset, r, side ? Side::Robber : Side::Cops);
                        for (Vertex c : mset) f << c << " ";
                        f << "| " << r << " " << side << " ";
                        if (d == SolverTable::kRobberWin) f << "robber-win";
                        else f << d;
                        f << "\n";
                    }
                }
            }
        }
    }
}

struct BoundsArgs {
    std::string graph;
    int walk_d = 0;
    int walk_r = 0;
    double formula_n = 0;
    double formula_p = 0;
    double formula_eps = 0.5;
    std::string out;
};

void run_bounds(const BoundsArgs& args) {
    nlohmann::json j;
    if (!args.graph.empty()) {
        Graph g = resolve_graph_source(args.graph);
        std::optional<int> wd, wr;
        if (args.walk_d > 0 && args.walk_r > 0) {
            wd = args.walk_d;
            wr = args.walk_r;
        }
        j = nlohmann::json::parse(to_json(make_bound_report(g, wd, wr)));
    }
    if (args.formula_n > 0 && args.formula_p > 0) {
        try {
            auto lower = gnp_lower_formula(args.formula_n, args.formula_p);
            j["gnp_lower"] = {{"value", lower.value},
                              {"exponent", lower.exponent},
                              {"vacuous", lower.vacuous}};
            if (lower.epsilon) j["gnp_lower"]["epsilon"] = *lower.epsilon;
            if (lower.r) j["gnp_lower"]["r"] = *lower.r;
        } catch (const std::invalid_argument& e) {
            j["gnp_lower"] = {{"error", e.what()}};
        }
        try {
            auto upper = gnp_upper_formula(args.formula_n, args.formula_p, args.formula_eps);
            j["gnp_upper"] = {{"value", upper.value}, {"r", upper.r}};
        } catch (const std::invalid_argument& e) {
            j["gnp_upper"] = {{"error", e.what()}};
        }
    }
    write_or_print(args.out, j.dump(2));
}

struct LemmaCheckArgs {
    std::string check = "ball-growth";
    int n = 4096;
    double pn = 4.0;
    double eps = 0.25;
    int seeds = 30;
    int pairs = 100;
    int r_override = 0;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string out;
};

void run_lemma_check(const LemmaCheckArgs& args) {
    if (args.check != "ball-growth" && args.check != "tree-excess" && args.check != "path-count")
        throw std::invalid_argument("unknown check '" + args.check + "'");
    double p = args.pn / args.n;
    std::vector<CheckResult> results(args.seeds);
    std::vector<std::uint64_t> graph_seeds(args.seeds);

    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= args.seeds) return;
            std::uint64_t graph_seed = derive_seed(args.seed, "lemma-graph", i);
            graph_seeds[i] = graph_seed;
            Graph g = gen_gnp({args.n, p, graph_seed});
            std::optional<int> r_over;
            if (args.r_override > 0) r_over = args.r_override;
            if (args.check == "ball-growth") results[i] = check_ball_growth(g, p);
            else if (args.check == "tree-excess")
                results[i] = check_ball_tree_excess(g, p, args.eps, r_over);
            else
                results[i] = check_global_path_count(g, p, args.eps, args.pairs,
                                                     derive_seed(args.seed, "lemma-pairs", i),
                                                     r_over);
        }
    };
    int jobs = std::max(1, args.jobs);
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::ostringstream csv;
    csv << "# pursuit-csv v1 lemma-check\n";
    csv << "n,p,seed,check,value,bound,pass,witness\n";
    int failures = 0;
    for (int i = 0; i < args.seeds; ++i) {
        const CheckResult& r = results[i];
        if (!r.pass) ++failures;
        csv << args.n << "," << p << "," << graph_seeds[i] << "," << r.check << ","
            << r.witness.observed << "," << r.witness.bound << "," << (r.pass ? "1" : "0") << ","
            << csv_witness(r.witness) << "\n";
    }
    if (!args.out.empty()) {
        write_or_print(args.out, csv.str());
        nlohmann::json j;
        j["spec"] = {{"check", args.check},   {"n", args.n},         {"pn", args.pn},
                     {"eps", args.eps},       {"seeds", args.seeds}, {"pairs", args.pairs},
                     {"master_seed", args.seed}};
        j["graph_seeds"] = graph_seeds;
        j["failures"] = failures;
        j["tool_version"] = kToolVersion;
        write_or_print(args.out + ".json", j.dump(2));
    } else {
        std::cout << csv.str();
    }
    std::cout << "check=" << args.check << " seeds=" << args.seeds << " failures=" << failures
              << "\n";
}

struct ExperimentArgs {
    ExperimentSpec spec;
    bool force_cop_move = false;
    bool cops_see_robber = false;
};

void run_experiment_cmd(ExperimentArgs& args) {
    args.spec.rules.force_cop_move = args.force_cop_move;
    args.spec.rules.cops_place_after_robber = args.cops_see_robber;
    auto result = run_experiment(args.spec);
    std::cout << "trials=" << args.spec.trials << " captured=" << result.captured
              << " capture_rate=" << result.capture_rate;
    if (result.median_capture_round)
        std::cout << " median_capture_round=" << *result.median_capture_round;
    std::cout << "\n";
    if (args.spec.out_csv.empty()) std::cout << result.csv;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"cops-and-robbers pursuit laboratory"};
    app.require_subcommand(1);

    GenerateArgs gen_args;
    auto* gen = app.add_subcommand("generate", "emit a graph in the text format");
    gen->add_option("--spec", gen_args.spec, "generator spec, e.g. gnp:n=100,p=0.05,seed=7")
        ->required();
    gen->add_option("--out", gen_args.out, "output file (stdout if omitted)");
    gen->add_option("--structure-out", gen_args.structure_out,
                    "sidecar structure file for subdivided hypercubes");

    PlayArgs play_args;
    auto* playc = app.add_subcommand("play", "run one playout");
    playc->add_option("--graph", play_args.graph, "graph file or generator spec")->required();
    playc->add_option("--cops", play_args.cops, "cop strategy spec");
    playc->add_option("--robber", play_args.robber, "robber strategy spec");
    playc->add_option("-k,--cops-count", play_args.k, "number of cops");
    playc->add_option("--max-rounds", play_args.max_rounds, "cutoff (default n^3)");
    playc->add_option("--seed", play_args.seed, "master seed");
    playc->add_option("--out", play_args.out, "write the transcript JSON here");
    playc->add_flag("--force-cop-move", play_args.force_cop_move,
                    "modified game: cops must move");
    playc->add_flag("--cops-see-robber-placement", play_args.cops_see_robber,
                    "robber places first (area-defense experiments)");

    SolveArgs solve_args;
    auto* solvec = app.add_subcommand("solve", "exact cop number");
    solvec->add_option("--graph", solve_args.graph, "graph file or generator spec")->required();
    solvec->add_option("--k-max", solve_args.k_max, "largest cop count to try");
    solvec->add_option("--budget", solve_args.budget, "state budget override");
    solvec->add_option("--table", solve_args.table_out, "dump the solved state table");
    solvec->add_flag("--placement", solve_args.show_placement, "print the winning placement");

    BoundsArgs bounds_args;
    auto* boundsc = app.add_subcommand("bounds", "evaluate bound formulas for a graph");
    boundsc->add_option("--graph", bounds_args.graph, "graph file or generator spec");
    boundsc->add_option("--walk-d", bounds_args.walk_d, "peel degree for the walk-count bound");
    boundsc->add_option("--walk-r", bounds_args.walk_r, "profile depth for the walk-count bound");
    boundsc->add_option("--n", bounds_args.formula_n, "n for the random-graph formulas");
    boundsc->add_option("--p", bounds_args.formula_p, "p for the random-graph formulas");
    boundsc->add_option("--eps", bounds_args.formula_eps, "eps for the upper formula");
    boundsc->add_option("--out", bounds_args.out, "output file (stdout if omitted)");

    LemmaCheckArgs lemma_args;
    auto* lemmac = app.add_subcommand("lemma-check", "empirical random-graph lemma checks");
    lemmac->add_option("--check", lemma_args.check, "ball-growth | tree-excess | path-count");
    lemmac->add_option("--n", lemma_args.n, "graph size");
    lemmac->add_option("--pn", lemma_args.pn, "expected degree pn");
    lemmac->add_option("--eps", lemma_args.eps, "epsilon parameter");
    lemmac->add_option("--seeds", lemma_args.seeds, "number of seeded graphs");
    lemmac->add_option("--pairs", lemma_args.pairs, "sampled pairs (path-count)");
    lemmac->add_option("--r", lemma_args.r_override, "radius override (0 = formula)");
    lemmac->add_option("--seed", lemma_args.seed, "master seed");
    lemmac->add_option("--jobs", lemma_args.jobs, "parallel workers");
    lemmac->add_option("--out", lemma_args.out, "CSV output file");

    auto* retract = app.add_subcommand("retract", "retraction toolkit");
    retract->require_subcommand(1);

    std::string rv_graph, rv_map;
    auto* rverify = retract->add_subcommand("verify", "check a map file for retraction-ness");
    rverify->add_option("--graph", rv_graph)->required();
    rverify->add_option("--map", rv_map)->required();

    std::string rs_graph, rs_image, rs_out;
    std::uint64_t rs_budget = default_retract_budget();
    auto* rsearch = retract->add_subcommand("search", "find a retraction onto an image set");
    rsearch->add_option("--graph", rs_graph)->required();
    rsearch->add_option("--image", rs_image, "file with one image vertex id per line")->required();
    rsearch->add_option("--budget", rs_budget, "search node budget");
    rsearch->add_option("--out", rs_out, "write the found map here");

    std::int64_t rc_n = 0;
    std::uint64_t rc_seed = 0, rc_budget = default_retract_budget();
    auto* rconstruct = retract->add_subcommand("construct-and-scan",
                                               "build the n-vertex construction and scan it");
    rconstruct->add_option("--n", rc_n)->required();
    rconstruct->add_option("--seed", rc_seed);
    rconstruct->add_option("--budget", rc_budget);

    auto* rconfig = retract->add_subcommand("config-probabilities",
                                            "exact label-configuration probabilities");

    ExperimentArgs exp_args;
    auto* expc = app.add_subcommand("experiment", "seeded multi-trial harness");
    expc->add_option("--graph", exp_args.spec.graph_source)->required();
    expc->add_option("--cops", exp_args.spec.cop_spec);
    expc->add_option("--robber", exp_args.spec.robber_spec);
    expc->add_option("-k,--cops-count", exp_args.spec.cops);
    expc->add_option("--trials", exp_args.spec.trials);
    expc->add_option("--max-rounds", exp_args.spec.max_rounds);
    expc->add_option("--seed", exp_args.spec.master_seed);
    expc->add_option("--jobs", exp_args.spec.jobs);
    expc->add_option("--out-csv", exp_args.spec.out_csv);
    expc->add_option("--out-json", exp_args.spec.out_json);
    expc->add_flag("--force-cop-move", exp_args.force_cop_move);
    expc->add_flag("--cops-see-robber-placement", exp_args.cops_see_robber);

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) run_generate(gen_args);
    if (playc->parsed()) run_play(play_args);
    if (solvec->parsed()) run_solve(solve_args);
    if (boundsc->parsed()) run_bounds(bounds_args);
    if (lemmac->parsed()) run_lemma_check(lemma_args);
    if (expc->parsed()) run_experiment_cmd(exp_args);
    if (retract->parsed()) {
        if (rverify->parsed()) {
            Graph g = resolve_graph_source(rv_graph);
            std::ifstream f(rv_map);
            if (!f) throw IoError("cannot open map file '" + rv_map + "'");
            VertexMap map = read_vertex_map(f, g.vertex_count());
            std::cout << (is_retraction(g, map) ? "retraction" : "not-a-retraction") << "\n";
        }
        if (rsearch->parsed()) {
            Graph g = resolve_graph_source(rs_graph);
            std::ifstream f(rs_image);
            if (!f) throw IoError("cannot open image file '" + rs_image + "'");
            VertexSet image(g.vertex_count());
            long long v;
            while (f >> v) image.insert(static_cast<Vertex>(v));
            auto result = find_retraction_onto(g, image, rs_budget);
            switch (result.status) {
                case RetractSearchResult::Status::Found: {
                    std::cout << "found nodes=" << result.nodes << "\n";
                    if (!rs_out.empty()) {
                        std::ostringstream os;
                        write_vertex_map(os, *result.map);
                        write_or_print(rs_out, os.str());
                    }
                    break;
                }
                case RetractSearchResult::Status::None:
                    std::cout << "none nodes=" << result.nodes << "\n";
                    break;
                case RetractSearchResult::Status::Exceeded:
                    throw BudgetExceeded("retraction search budget exceeded");
            }
        }
        if (rconstruct->parsed()) {
            auto plan = choose_construction_params(rc_n, rc_seed);
            auto sq = build_from_plan(plan);
            auto scan = find_largest_proper_retract(sq, rc_budget);
            std::cout << "d=" << plan.d << " s=" << plan.s << " l=" << plan.l
                      << " n=" << sq.graph.vertex_count() << " cond_strong=" << plan.cond_strong
                      << " cond_weak=" << plan.cond_weak << "\n";
            switch (scan.status) {
                case LargestRetractResult::Status::Found:
                    std::cout << "largest-retract size=" << scan.size
                              << " candidates=" << scan.candidates_tried
                              << " inconclusive_larger=" << scan.inconclusive_larger << "\n";
                    break;
                case LargestRetractResult::Status::None:
                    std::cout << "largest-retract none\n";
                    break;
                case LargestRetractResult::Status::Exceeded:
                    throw BudgetExceeded("retract scan budget exceeded with no witness");
            }
        }
        if (rconfig->parsed()) {
            Rational c1 = config1_probability();
            Rational c2 = config2_probability();
            std::cout << c1.num << "/" << c1.den << " " << c2.num << "/" << c2.den << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kExitSpec;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpec;
    }
}
