#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/walks.hpp"

namespace pursuit {

/// Configuration of the walk-weight robber. The robber roams the induced
/// subgraph R (minimum degree >= d >= 3) and scores positions by
/// W = sum_i w_i N_i with weights w_i = (d-1)^(-i) e^(i/r), the decaying form
/// whose per-round contraction factor is e^(-1/r). Weights are strictly
/// decreasing, which requires r log(d-1) > 1.
struct WalkWeightConfig {
    VertexSet roam;           // R
    int d = 0;                // minimum degree of R used in the weights
    int r = 0;                // profile depth
    std::vector<double> weights;  // w_0..w_r, w_0 = 1

    static std::vector<double> make_weights(int d, int r);
};

/// Builds and validates a config. roam defaults to min_degree_peel(g, d).
/// Throws std::invalid_argument if d < 3, the peel is empty, the induced
/// minimum degree falls below d, or the weights fail to decrease.
WalkWeightConfig make_walk_weight_config(const Graph& g, int d, int r,
                                         std::optional<VertexSet> roam = {});

/// W evaluated for the robber of pos against the cop multiset of pos, with
/// the first-edge restriction when last_edge is given (the reverse of the
/// robber's previous move). W >= 1 whenever a cop stands on the robber.
/// Throws std::invalid_argument if the robber is outside R.
double robber_potential(const Graph& g, const WalkWeightConfig& cfg, const Position& pos,
                        std::optional<DirectedEdge> last_edge = {});

/// The move chosen by the walk-weight rule from pos: among non-backtracking
/// moves inside R, minimize the weighted mass of walks that survive the move
/// (the length 2i walks of W keep weight w_i as length 2i-1 remnants from the
/// new vertex, with the reversal edge excluded). Evaluating the even-length W
/// at the new vertex instead would be parity-blind on bipartite graphs.
/// Ties broken by max distance to the nearest cop, then lowest vertex id.
/// Fallbacks (backtrack, then stay) are reported through fallback_note.
Vertex robber_walk_weight_move(const Graph& g, const WalkWeightConfig& cfg, const Position& pos,
                               std::optional<Vertex> previous_vertex,
                               std::string* fallback_note = nullptr);

/// Samples `trials` vertices of R uniformly and returns the sample with the
/// smallest surviving-walk mass against the given cops (cops move next, so
/// placements are scored exactly like candidate moves).
Vertex robber_random_placement(const Graph& g, const WalkWeightConfig& cfg,
                               const std::vector<Vertex>& cops, int trials, std::uint64_t seed);

// --- strategy objects -------------------------------------------------------

std::unique_ptr<RobberStrategy> make_walk_weight_robber(const Graph& g, const WalkWeightConfig& cfg,
                                                        int placement_trials, std::uint64_t seed);

/// Cop baseline: every cop walks a shortest path toward the robber.
std::unique_ptr<CopStrategy> make_greedy_cop(std::uint64_t seed);

/// Robber baselines: uniformly random moves; greedy distance maximization.
std::unique_ptr<RobberStrategy> make_random_robber(std::uint64_t seed);
std::unique_ptr<RobberStrategy> make_avoid_robber();

/// The pairing transform: 2k always-moving cops simulating a k-cop strategy.
/// Each pair keeps one cop on the base strategy's position; when the base
/// strategy stays, the pair swaps. Run with rules.force_cop_move = true.
std::unique_ptr<CopStrategy> make_paired_always_move(std::unique_ptr<CopStrategy> base, int base_k);

}  // namespace pursuit
