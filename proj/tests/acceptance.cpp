// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code 0 iff all criteria pass.
// argv[1] is the path to the pursuit CLI binary.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "pursuit/bounds.hpp"
#include "pursuit/experiment.hpp"
#include "pursuit/game.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/hall.hpp"
#include "pursuit/retracts.hpp"
#include "pursuit/rng.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/strategies.hpp"
#include "support.hpp"

using namespace pursuit;
using namespace pursuit::testing;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli_path;
int g_failures = 0;

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    CommandResult result;
    std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
    auto start = Clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("criterion %2d %-4s %-38s %7.2fs%s%s\n", number, pass ? "PASS" : "FAIL",
                label.c_str(), secs, detail.empty() ? "" : "  -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

template <typename F>
void parallel_for(int begin, int end, F&& f) {
    std::atomic<int> next{begin};
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= end) return;
            f(i);
        }
    };
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------

bool criterion1(std::string& detail) {
    struct Case {
        std::string fixture;
        int expected;
    };
    std::vector<Case> cases;
    for (int n = 2; n <= 15; ++n) cases.push_back({"path:" + std::to_string(n), 1});
    cases.push_back({"star:9", 1});
    cases.push_back({"btree:3", 1});
    cases.push_back({"btree:4", 1});
    for (int n = 4; n <= 10; ++n) cases.push_back({"cycle:" + std::to_string(n), 2});
    cases.push_back({"petersen", 3});
    cases.push_back({"heawood", 3});

    for (const auto& c : cases) {
        auto start = Clock::now();
        auto got = cop_number_exact(gen_fixture(c.fixture), 4);
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (!got || *got != c.expected) {
            detail = c.fixture + " gave " + (got ? std::to_string(*got) : "none");
            return false;
        }
        if (secs >= 60.0) {
            detail = c.fixture + " took " + std::to_string(secs) + "s";
            return false;
        }
    }
    auto cli = run_cli("solve --graph petersen");
    if (cli.exit_code != 0 || cli.output != "3\n") {
        detail = "CLI solve petersen printed '" + cli.output + "'";
        return false;
    }
    return true;
}

bool criterion2(std::string& detail) {
    std::vector<std::string> fixtures = {"petersen", "heawood",   "incidence:3", "cycle:5",
                                         "cycle:6",  "cycle:9",   "cycle:10",    "path:8",
                                         "path:15",  "star:9",    "btree:3",     "btree:4",
                                         "grid:3x3", "hypercube:3"};
    for (const auto& name : fixtures) {
        Graph g = gen_fixture(name);
        auto bound = girth5_lower_bound(g);
        if (!bound) continue;
        auto exact = cop_number_exact(g, 5);
        if (!exact) {
            detail = name + ": solver exhausted k_max";
            return false;
        }
        if (*bound > *exact) {
            detail = name + ": bound " + std::to_string(*bound) + " > c(G) " +
                     std::to_string(*exact);
            return false;
        }
    }
    return true;
}

bool criterion3(std::string& detail) {
    Rational c1 = config1_probability();
    Rational c2 = config2_probability();
    if (!(c1 == Rational{11, 16} && c2 == Rational{163, 256})) {
        detail = "library rationals off";
        return false;
    }
    auto start = Clock::now();
    auto cli = run_cli("retract config-probabilities");
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (cli.exit_code != 0 || cli.output != "11/16 163/256\n") {
        detail = "CLI printed '" + cli.output + "'";
        return false;
    }
    if (secs >= 1.0) {
        detail = "took " + std::to_string(secs) + "s";
        return false;
    }
    return true;
}

bool criterion4(std::string& detail) {
    int successes = 0;
    int playouts_checked = 0;
    int solver_checked = 0;

    // large batch: random and greedy-avoid robbers
    const int large_instances = 130;
    std::atomic<bool> violated{false};
    std::string violation;
    std::mutex violation_mutex;
    std::atomic<int> success_count{0}, playout_count{0};

    parallel_for(0, large_instances, [&](int i) {
        if (violated.load()) return;
        int n = 60 + (440 * i) / (large_instances - 1);
        double p = 12.0 / n;
        Graph g = gen_gnp({n, p, derive_seed(2024, "accept4-graph", i)});
        if (!g.is_connected()) return;
        VertexSet cops = hall_place(g, n / 2, derive_seed(2024, "accept4-cops", i));
        if (cops.empty()) return;
        for (int kind = 0; kind < 2; ++kind) {
            auto make_robber = [&]() -> std::unique_ptr<RobberStrategy> {
                if (kind == 0) return make_random_robber(derive_seed(2024, "accept4-robber", i));
                return make_avoid_robber();
            };
            Position placed;
            placed.cops = cops.to_vector();
            Vertex anchor = make_robber()->place(g, placed);
            auto radius = min_trap_radius(g, cops, anchor);
            if (!radius) continue;
            auto cop_strategy = make_hall_trap_cop(g, cops);
            auto robber = make_robber();
            Transcript t = play(g, *cop_strategy, cops.size(), *robber,
                                {.max_rounds = static_cast<long long>(*radius) + 50});
            success_count.fetch_add(1);
            playout_count.fetch_add(1);
            if (t.outcome.kind != Outcome::Kind::Caught || t.outcome.round > *radius + 1) {
                std::lock_guard<std::mutex> lock(violation_mutex);
                violated.store(true);
                violation = "instance " + std::to_string(i) + " kind " + std::to_string(kind) +
                            " escaped the r+1 bound";
            }
        }
    });
    if (violated.load()) {
        detail = violation;
        return false;
    }
    successes = success_count.load();
    playouts_checked = playout_count.load();

    // small batch: solver-optimal robber (the criterion allows any instances
    // with <= 30 vertices; denser small graphs are the regime where the Hall
    // condition holds against an adversarially placed robber)
    for (int i = 0; i < 40; ++i) {
        int n = 8 + (i * 6) / 39;
        double p = 0.45;
        Graph g = gen_gnp({n, p, derive_seed(2024, "accept4-small", i)});
        if (!g.is_connected()) continue;
        VertexSet cops = hall_place(g, n - 2, derive_seed(2024, "accept4-small-cops", i));
        if (cops.empty() || cops.size() > 4) continue;
        auto table = make_solver_table(g, cops.size());
        auto robber = table_robber_strategy(g, table);
        Position placed;
        placed.cops = cops.to_vector();
        Vertex anchor = robber->place(g, placed);
        auto radius = min_trap_radius(g, cops, anchor);
        if (!radius) continue;
        auto cop_strategy = make_hall_trap_cop(g, cops);
        auto fresh = table_robber_strategy(g, table);
        Transcript t = play(g, *cop_strategy, cops.size(), *fresh,
                            {.max_rounds = static_cast<long long>(*radius) + 50});
        ++successes;
        ++solver_checked;
        if (t.outcome.kind != Outcome::Kind::Caught || t.outcome.round > *radius + 1) {
            detail = "solver-robber instance " + std::to_string(i) + " escaped";
            return false;
        }
    }

    if (successes < 100) {
        detail = "only " + std::to_string(successes) + " successful trap instances";
        return false;
    }
    if (solver_checked < 5) {
        detail = "only " + std::to_string(solver_checked) + " solver-robber instances";
        return false;
    }
    detail = std::to_string(successes) + " trap instances (" + std::to_string(playouts_checked) +
             " baseline playouts, " + std::to_string(solver_checked) + " vs solver robber)";
    return true;
}

bool criterion5(std::string& detail) {
    long long checked = 0;
    // fixtures up to 12 vertices plus seeded random connected graphs
    std::vector<Graph> corpus;
    for (const char* name : {"petersen", "cycle:6", "cycle:9", "cycle:12", "path:7", "path:12",
                             "star:8", "star:12", "grid:3x4", "grid:2x6", "hypercube:3",
                             "complete:6"})
        corpus.push_back(gen_fixture(name));
    Rng rng = make_rng(555, "accept5");
    for (int i = 0; i < 25; ++i)
        corpus.push_back(random_connected_gnp(6 + static_cast<int>(uniform_below(rng, 7)), 0.35, rng));

    for (const Graph& g : corpus) {
        const int n = g.vertex_count();
        for (int cop_set = 0; cop_set < 2; ++cop_set) {
            VertexSet cops(n);
            for (Vertex v = 0; v < n; ++v)
                if (uniform01(rng) < (cop_set == 0 ? 0.25 : 0.6)) cops.insert(v);
            if (cops.empty()) cops.insert(static_cast<Vertex>(uniform_below(rng, n)));
            for (Vertex x = 0; x < n; ++x) {
                for (int r = 0; r <= 2; ++r) {
                    if (hall_condition_holds(g, cops, x, r) != brute_hall_condition(g, cops, x, r)) {
                        detail = "disagreement at n=" + std::to_string(n) +
                                 " x=" + std::to_string(x) + " r=" + std::to_string(r);
                        return false;
                    }
                    ++checked;
                }
            }
        }
    }
    detail = std::to_string(checked) + " checks";
    return true;
}

bool criterion6(std::string& detail) {
    // exhaustive over all labeled connected graphs on <= 6 vertices; graphs
    // on 7 and 8 vertices are covered by large seeded mask samples (the full
    // labeled spaces, 2^21 and 2^28 graphs, are out of desk-scale reach)
    std::atomic<long long> checked{0};
    std::atomic<bool> failed{false};

    auto verify = [&](const Graph& g) {
        const int n = g.vertex_count();
        VertexSet targets(n);
        targets.insert(n - 1);
        if (n >= 3) targets.insert(1);
        std::optional<DirectedEdge> forbid;
        std::optional<std::pair<Vertex, Vertex>> forbid_pair;
        if (g.degree(0) > 0) {
            Vertex first = g.neighbors(0)[0];
            forbid = DirectedEdge{0, first};
            forbid_pair = std::pair{static_cast<Vertex>(0), first};
        }
        for (int len = 0; len <= 6; ++len) {
            if (count_nb_walks(g, 0, targets, len) != brute_nb_walks(g, 0, targets, len))
                return false;
            if (forbid && count_nb_walks(g, 0, targets, len, forbid) !=
                              brute_nb_walks(g, 0, targets, len, forbid_pair))
                return false;
        }
        checked.fetch_add(1);
        return true;
    };

    for (int n = 2; n <= 6 && !failed; ++n) {
        std::uint64_t masks = 1ULL << edge_slots(n);
        parallel_for(0, static_cast<int>(masks), [&](int mask) {
            if (failed.load()) return;
            auto maybe = connected_graph_from_mask(n, static_cast<std::uint64_t>(mask));
            if (!maybe) return;
            if (!verify(*maybe)) failed.store(true);
        });
    }
    for (int n = 7; n <= 8 && !failed; ++n) {
        Rng rng = make_rng(777, "accept6", n);
        std::vector<std::uint64_t> masks(4000);
        for (auto& m : masks) m = rng() & ((1ULL << edge_slots(n)) - 1);
        parallel_for(0, static_cast<int>(masks.size()), [&](int i) {
            if (failed.load()) return;
            auto maybe = connected_graph_from_mask(n, masks[i]);
            if (!maybe) return;
            if (!verify(*maybe)) failed.store(true);
        });
    }
    if (failed.load()) {
        detail = "DP disagreed with brute force";
        return false;
    }
    detail = std::to_string(checked.load()) + " graphs";
    return true;
}

bool criterion7(std::string& detail) {
    for (int n = 1; n <= 30; ++n)
        for (int pi = 1; pi <= 9; ++pi) {
            double p = pi / 10.0;
            for (int k = 0; k <= static_cast<int>(p * n); ++k) {
                long double exact = exact_binomial_tail(n, p, k);
                double bound = chernoff_tail(n, p, k);
                if (static_cast<double>(exact) > bound + 1e-12) {
                    detail = "violation at n=" + std::to_string(n) + " p=" + std::to_string(p) +
                             " k=" + std::to_string(k);
                    return false;
                }
            }
        }
    return true;
}

bool criterion8(std::string& detail) {
    // default seed set
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        {
            Graph g = gen_fixture("heawood");
            auto cfg = make_walk_weight_config(g, 3, 2);
            auto robber = make_walk_weight_robber(g, cfg, 20, derive_seed(seed, "c8-robber"));
            auto cops = make_greedy_cop(derive_seed(seed, "c8-cops"));
            Transcript t = play(g, *cops, 2, *robber, {.max_rounds = 1000, .seed = seed});
            if (t.outcome.kind != Outcome::Kind::Evaded) {
                detail = "heawood seed " + std::to_string(seed) + " caught at round " +
                         std::to_string(t.outcome.round);
                return false;
            }
        }
        {
            Graph g = gen_projective_incidence(3);
            auto cfg = make_walk_weight_config(g, 3, 2);
            auto robber = make_walk_weight_robber(g, cfg, 20, derive_seed(seed, "c8-robber"));
            auto cops = make_greedy_cop(derive_seed(seed, "c8-cops"));
            Transcript t = play(g, *cops, 3, *robber, {.max_rounds = 10000, .seed = seed});
            if (t.outcome.kind != Outcome::Kind::Evaded) {
                detail = "incidence:3 seed " + std::to_string(seed) + " caught at round " +
                         std::to_string(t.outcome.round);
                return false;
            }
        }
    }
    return true;
}

bool criterion9(std::string& detail) {
    struct Job {
        std::string check;
        int n;
        double pn;
        double eps;
        int index;
    };
    std::vector<Job> jobs;
    for (int i = 0; i < 30; ++i) jobs.push_back({"ball-growth", 4096, 4.0, 0.0, i});
    for (int i = 0; i < 30; ++i) jobs.push_back({"ball-growth", 4096, 8.0, 0.0, i});
    for (int i = 0; i < 30; ++i) jobs.push_back({"tree-excess", 4096, 4.0, 0.25, i});
    for (int i = 0; i < 20; ++i) jobs.push_back({"path-count", 2048, 4.0, 0.25, i});

    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;
    std::atomic<int> done{0};

    parallel_for(0, static_cast<int>(jobs.size()), [&](int j) {
        if (failed.load()) return;
        const Job& job = jobs[j];
        double p = job.pn / job.n;
        std::uint64_t seed =
            derive_seed(31337, "accept9-" + job.check + std::to_string(job.pn), job.index);
        Graph g = gen_gnp({job.n, p, seed});
        CheckResult result;
        if (job.check == "ball-growth") result = check_ball_growth(g, p);
        else if (job.check == "tree-excess") result = check_ball_tree_excess(g, p, job.eps);
        else
            result = check_global_path_count(g, p, job.eps, 100,
                                             derive_seed(31337, "accept9-pairs", job.index));
        bool witness_ok = recheck_witness(g, result);
        if (!result.pass || !witness_ok) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            failed.store(true);
            failure = job.check + " seed-index " + std::to_string(job.index) +
                      (result.pass ? " witness recheck failed" : " failed with witness x=" +
                       std::to_string(result.witness.x) + " k=" + std::to_string(result.witness.k));
        }
        done.fetch_add(1);
    });
    if (failed.load()) {
        detail = failure;
        return false;
    }
    detail = std::to_string(done.load()) + " seeded checks, zero failures";
    return true;
}

bool criterion10(std::string& detail) {
    // pinned upper formula value at 1e-6 relative tolerance
    auto upper = gnp_upper_formula(1e4, 0.01, 0.5);
    double expected = 100.0 * std::log(1e4) * 160000.0;
    if (std::abs(upper.value - expected) / expected > 1e-6) {
        detail = "upper formula value off";
        return false;
    }
    // vacuity flag tracks value < 1 across a wide grid
    for (double n : {1e3, 1e4, 1e6, 1e8, 1e12}) {
        for (double pn : {3.0, 10.0, 100.0, 1e4, 1e8}) {
            if (!(pn > std::exp(1.0))) continue;
            auto lower = gnp_lower_formula(n, pn / n);
            if (lower.vacuous != (lower.value < 1.0)) {
                detail = "vacuity flag mismatch";
                return false;
            }
        }
    }
    // upper dominates lower wherever both are defined
    for (double n : {1e4, 1e6, 1e8}) {
        for (double pn : {30.0, 100.0, 1000.0, 10000.0}) {
            double p = pn / n;
            if (!(p > 2.0 * 1.5 * std::log(n) / n)) continue;
            auto u = gnp_upper_formula(n, p, 0.5);
            auto l = gnp_lower_formula(n, p);
            if (u.value < l.value) {
                detail = "upper below lower";
                return false;
            }
        }
    }
    return true;
}

bool criterion11(std::string& detail) {
    // oracle equivalence, exhaustive over every connected graph on <= 6
    // vertices and every connected induced image
    std::atomic<bool> failed{false};
    std::atomic<long long> checked{0};
    for (int n = 2; n <= 6 && !failed; ++n) {
        std::uint64_t masks = 1ULL << edge_slots(n);
        parallel_for(0, static_cast<int>(masks), [&](int mask) {
            if (failed.load()) return;
            auto maybe = connected_graph_from_mask(n, static_cast<std::uint64_t>(mask));
            if (!maybe) return;
            const Graph& g = *maybe;
            for (std::uint64_t h_mask = 1; h_mask < (1ULL << n); ++h_mask) {
                VertexSet h(n);
                for (int v = 0; v < n; ++v)
                    if (h_mask & (1ULL << v)) h.insert(v);
                auto [sub, mapping] = induced_subgraph(g, h);
                if (!sub.is_connected()) continue;
                auto fast = find_retraction_onto(g, h, 2'000'000);
                auto brute = brute_retraction_onto(g, h);
                bool fast_found = fast.status == RetractSearchResult::Status::Found;
                if (fast.status == RetractSearchResult::Status::Exceeded ||
                    fast_found != brute.has_value() ||
                    (fast_found && !is_retraction(g, *fast.map))) {
                    failed.store(true);
                    return;
                }
                checked.fetch_add(1);
            }
        });
    }
    if (failed.load()) {
        detail = "search disagreed with the all-maps oracle";
        return false;
    }

    // area defense: 10^4 seeded trials, zero illegal moves, capture whenever
    // the robber enters the image on his own move
    Graph c6 = gen_fixture("cycle:6");
    auto fold = find_retraction_onto(c6, VertexSet::of(6, {0, 1}));
    const VertexMap f = *fold.map;
    PlayOptions options;
    options.max_rounds = 40;
    options.rules.cops_place_after_robber = true;
    for (int trial = 0; trial < 10000; ++trial) {
        auto cop = area_defense_strategy(c6, f);
        auto robber = make_random_robber(derive_seed(40, "accept11", trial));
        Transcript t = play(c6, *cop, 1, *robber, options);
        if (t.outcome.kind == Outcome::Kind::IllegalMove) {
            detail = "illegal cop move in trial " + std::to_string(trial);
            return false;
        }
        Vertex at = t.robber_placement;
        for (size_t i = 0; i < t.rounds.size(); ++i) {
            at = t.rounds[i].robber;
            if (at < 0) break;
            if (f[at] == at) {
                // the capture lands on the next cop half-move; a cutoff on
                // exactly this round truncates it, which is not a violation
                if (static_cast<long long>(i) + 2 > options.max_rounds) break;
                if (!(t.outcome.kind == Outcome::Kind::Caught &&
                      t.outcome.round <= static_cast<int>(i) + 2)) {
                    detail = "robber entered the image uncaught, trial " + std::to_string(trial);
                    return false;
                }
                break;
            }
        }
    }
    detail = std::to_string(checked.load()) + " oracle pairs, 10000 playouts";
    return true;
}

bool criterion12(std::string& detail) {
    std::atomic<bool> failed{false};
    std::atomic<long long> checked{0};
    for (int n = 1; n <= 7 && !failed; ++n) {
        std::uint64_t masks = 1ULL << edge_slots(n);
        parallel_for(0, static_cast<int>(masks), [&](int mask) {
            if (failed.load()) return;
            auto maybe = connected_graph_from_mask(n, static_cast<std::uint64_t>(mask));
            if (!maybe) return;
            if (is_copwin(*maybe) != k_cops_win(*maybe, 1)) failed.store(true);
            checked.fetch_add(1);
        });
    }
    if (failed.load()) {
        detail = "dismantlability disagreed with the retrograde solver";
        return false;
    }
    detail = std::to_string(checked.load()) + " connected graphs";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-pursuit-cli>\n";
        return 2;
    }
    g_cli_path = argv[1];

    criterion(1, "exact solver ground truth", criterion1);
    criterion(2, "girth-5 bound soundness", criterion2);
    criterion(3, "configuration probabilities", criterion3);
    criterion(4, "hall-trap capture bound", criterion4);
    criterion(5, "hall-check oracle equivalence", criterion5);
    criterion(6, "walk-count oracle equivalence", criterion6);
    criterion(7, "chernoff-form domination", criterion7);
    criterion(8, "walk-weight robber evasion", criterion8);
    criterion(9, "empirical lemma suite", criterion9);
    criterion(10, "formula evaluators", criterion10);
    criterion(11, "retraction machinery", criterion11);
    criterion(12, "dismantlability equivalence", criterion12);

    if (g_failures == 0) {
        std::printf("all 12 criteria PASS\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
