#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {

inline constexpr const char* kToolVersion = "0.1.0";

/// Builds a cop strategy from its CLI spec string:
///   greedy | optimal[:k=K] | hall:c=C | area:map=FILE | trap:c=C
/// Some specs pin the cop count (hall: |I|, area: 1); that value is returned
/// so the caller can size the game.
struct CopSetup {
    std::unique_ptr<CopStrategy> strategy;
    std::optional<int> cop_count;
};
CopSetup make_cop_strategy(const Graph& g, const std::string& spec, std::uint64_t seed,
                           const SolverBudget& budget = {});

/// Robber spec strings: random | avoid | walkweight[:d=3,r=2,trials=20] | optimal.
std::unique_ptr<RobberStrategy> make_robber_strategy(const Graph& g, const std::string& spec,
                                                     std::uint64_t seed, int cop_count,
                                                     const SolverBudget& budget = {});

struct ExperimentSpec {
    std::string graph_source;
    std::string cop_spec = "greedy";
    std::string robber_spec = "random";
    int cops = 0;             // 0 = strategy-determined, else explicit
    int trials = 1;
    long long max_rounds = 0; // 0 = n^3
    RuleFlags rules;
    std::uint64_t master_seed = 0;
    int jobs = 1;
    std::string out_csv;      // empty = don't write
    std::string out_json;
};

struct ResultRow {
    int trial = 0;
    std::uint64_t seed = 0;
    std::string outcome;
    int capture_round = -1;   // -1 when evaded
};

struct ExperimentResult {
    std::vector<ResultRow> rows;
    int captured = 0;
    double capture_rate = 0.0;
    std::optional<double> median_capture_round;
    std::string csv;          // the exact bytes written to out_csv
    std::string summary_json;
};

/// Runs trials with per-trial derived seeds; CSV bytes depend only on
/// (spec, master seed). Trials run on up to spec.jobs threads with rows
/// buffered in trial order so concurrency never changes the output.
ExperimentResult run_experiment(const ExperimentSpec& spec);

}  // namespace pursuit
