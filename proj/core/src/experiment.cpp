#include "pursuit/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "pursuit/bounds.hpp"
#include "pursuit/hall.hpp"
#include "pursuit/io.hpp"
#include "pursuit/retracts.hpp"
#include "pursuit/rng.hpp"
#include "pursuit/strategies.hpp"

namespace pursuit {

CopSetup make_cop_strategy(const Graph& g, const std::string& spec, std::uint64_t seed,
                           const SolverBudget& budget) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    auto kv = parse_kv(colon == std::string::npos ? "" : spec.substr(colon + 1));

    CopSetup setup;
    if (head == "greedy") {
        setup.strategy = make_greedy_cop(derive_seed(seed, "cops"));
    } else if (head == "optimal") {
        int k = kv_int(kv, "k", 0);
        if (k < 1) throw std::invalid_argument("optimal cop strategy wants k=...");
        setup.strategy = extract_winning_cop_strategy(g, k, budget);
        setup.cop_count = k;
    } else if (head == "hall" || head == "trap") {
        int c = kv_int(kv, "c", 0);
        if (c < 1) throw std::invalid_argument("hall strategy wants c=...");
        VertexSet placement =
            hall_place(g, c, kv_u64(kv, "seed", derive_seed(seed, "hall-placement")));
        if (placement.empty()) throw std::invalid_argument("hall placement came out empty");
        setup.cop_count = placement.size();
        setup.strategy = make_hall_trap_cop(g, placement);
    } else if (head == "area") {
        auto it = kv.find("map");
        if (it == kv.end()) throw std::invalid_argument("area strategy wants map=FILE");
        std::ifstream f(it->second);
        if (!f) throw IoError("cannot open map file '" + it->second + "'");
        VertexMap map = read_vertex_map(f, g.vertex_count());
        setup.strategy = area_defense_strategy(g, map);
        setup.cop_count = 1;
    } else {
        throw std::invalid_argument("unknown cop strategy '" + spec + "'");
    }
    return setup;
}

std::unique_ptr<RobberStrategy> make_robber_strategy(const Graph& g, const std::string& spec,
                                                     std::uint64_t seed, int cop_count,
                                                     const SolverBudget& budget) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    auto kv = parse_kv(colon == std::string::npos ? "" : spec.substr(colon + 1));

    if (head == "random") return make_random_robber(derive_seed(seed, "robber"));
    if (head == "avoid") return make_avoid_robber();
    if (head == "walkweight") {
        int d = kv_int(kv, "d", 3);
        int r = kv_int(kv, "r", 2);
        int trials = kv_int(kv, "trials", 20);
        auto cfg = make_walk_weight_config(g, d, r);
        return make_walk_weight_robber(g, cfg, trials, derive_seed(seed, "robber"));
    }
    if (head == "optimal") {
        int k = kv_int(kv, "k", cop_count);
        if (k < 1) throw std::invalid_argument("optimal robber needs the cop count");
        return extract_optimal_robber_strategy(g, k, budget);
    }
    throw std::invalid_argument("unknown robber strategy '" + spec + "'");
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
    Graph g = resolve_graph_source(spec.graph_source);

    ExperimentResult result;
    result.rows.resize(spec.trials);

    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= spec.trials || failed.load()) return;
            try {
                std::uint64_t trial_seed = derive_seed(spec.master_seed, "trial", i);
                auto cop_setup = make_cop_strategy(g, spec.cop_spec, trial_seed);
                int k = spec.cops > 0 ? spec.cops : cop_setup.cop_count.value_or(1);
                if (cop_setup.cop_count && spec.cops > 0 && spec.cops != *cop_setup.cop_count)
                    throw std::invalid_argument("cop strategy pins a different cop count");
                auto robber = make_robber_strategy(g, spec.robber_spec, trial_seed, k);
                PlayOptions options;
                options.max_rounds = spec.max_rounds;
                options.rules = spec.rules;
                options.seed = trial_seed;
                Transcript t = play(g, *cop_setup.strategy, k, *robber, options);
                ResultRow row;
                row.trial = i;
                row.seed = trial_seed;
                switch (t.outcome.kind) {
                    case Outcome::Kind::Caught:
                        row.outcome = "caught";
                        row.capture_round = t.outcome.round;
                        break;
                    case Outcome::Kind::Evaded: row.outcome = "evaded"; break;
                    case Outcome::Kind::IllegalMove: row.outcome = "illegal"; break;
                }
                result.rows[i] = row;
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                error = e.what();
                failed.store(true);
                return;
            }
        }
    };

    int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) throw std::runtime_error("experiment trial failed: " + error);

    std::vector<int> capture_rounds;
    for (const auto& row : result.rows)
        if (row.outcome == "caught") {
            ++result.captured;
            capture_rounds.push_back(row.capture_round);
        }
    result.capture_rate = static_cast<double>(result.captured) / spec.trials;
    if (!capture_rounds.empty()) {
        std::sort(capture_rounds.begin(), capture_rounds.end());
        size_t mid = capture_rounds.size() / 2;
        result.median_capture_round =
            capture_rounds.size() % 2 ? capture_rounds[mid]
                                      : (capture_rounds[mid - 1] + capture_rounds[mid]) / 2.0;
    }

    // CSV: schema comment, header, one row per trial in trial order.
    auto girth_value = girth(g);
    auto g5 = girth5_lower_bound(g);
    std::ostringstream csv;
    csv << "# pursuit-csv v1 experiment\n";
    csv << "trial,seed,outcome,capture_round,n,m,girth,min_degree,girth5_bound\n";
    for (const auto& row : result.rows) {
        csv << row.trial << "," << row.seed << "," << row.outcome << ","
            << (row.capture_round >= 0 ? std::to_string(row.capture_round) : "") << ","
            << g.vertex_count() << "," << g.edge_count() << ","
            << (girth_value ? std::to_string(*girth_value) : "inf") << "," << g.min_degree()
            << "," << (g5 ? std::to_string(*g5) : "") << "\n";
    }
    result.csv = csv.str();

    nlohmann::json j;
    j["spec"] = {{"graph", spec.graph_source},
                 {"cops", spec.cop_spec},
                 {"robber", spec.robber_spec},
                 {"cop_count", spec.cops},
                 {"trials", spec.trials},
                 {"max_rounds", spec.max_rounds},
                 {"rules",
                  {{"force_cop_move", spec.rules.force_cop_move},
                   {"cops_place_after_robber", spec.rules.cops_place_after_robber}}},
                 {"master_seed", spec.master_seed}};
    j["summary"] = {{"trials", spec.trials},
                    {"captured", result.captured},
                    {"capture_rate", result.capture_rate}};
    if (result.median_capture_round) j["summary"]["median_capture_round"] = *result.median_capture_round;
    j["graph"] = {{"hash", g.hash()},
                  {"n", g.vertex_count()},
                  {"m", g.edge_count()},
                  {"min_degree", g.min_degree()}};
    if (girth_value) j["graph"]["girth"] = *girth_value;
    if (g5) j["graph"]["girth5_bound"] = *g5;
    // timestamps live only here, in the metadata block
    j["metadata"] = {{"tool_version", kToolVersion},
                     {"timestamp", static_cast<std::int64_t>(
                                       std::chrono::duration_cast<std::chrono::seconds>(
                                           std::chrono::system_clock::now().time_since_epoch())
                                           .count())}};
    result.summary_json = j.dump(2);

    if (!spec.out_csv.empty()) {
        std::ofstream f(spec.out_csv);
        if (!f) throw IoError("cannot open '" + spec.out_csv + "' for writing");
        f << result.csv;
    }
    if (!spec.out_json.empty()) {
        std::ofstream f(spec.out_json);
        if (!f) throw IoError("cannot open '" + spec.out_json + "' for writing");
        f << result.summary_json << "\n";
    }
    return result;
}

}  // namespace pursuit
