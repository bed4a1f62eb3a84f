#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

/// Random cop placement: every vertex joins independently with probability
/// min(1, c/(2n)); resamples while |I| > c (Markov step). Throws
/// std::runtime_error when the resample budget runs out.
VertexSet hall_place(const Graph& g, int c, std::uint64_t seed, int resample_budget = 1000);

/// Matching-based Hall verification: true iff a matching saturating B(x,r)
/// exists in the bipartite graph {y in B(x,r)} x {cops in B(y,r+1)}. By
/// Konig-Hall this is equivalent to |I and N(S,r+1)| >= |S| for all
/// S inside B(x,r).
bool hall_condition_holds(const Graph& g, const VertexSet& cops, Vertex x, int r);

/// Smallest r <= diameter for which hall_condition_holds; nullopt if none.
std::optional<int> min_trap_radius(const Graph& g, const VertexSet& cops, Vertex x);

/// Static sealing plan around the robber anchor: every ball vertex gets its
/// own cop within distance r+1, each with a shortest path to walk.
struct TrapPlan {
    Vertex anchor = -1;
    int radius = -1;
    std::vector<Vertex> cops;                 // plan cop order (the set I)
    std::vector<int> assignment;              // ball vertex index -> cop index
    std::vector<Vertex> ball_vertices;        // B(anchor, radius)
    std::vector<std::vector<Vertex>> paths;   // per cop: current..target (empty = hold)
};

/// Builds the plan from the saturating matching at radius r. Throws
/// std::invalid_argument if the Hall condition fails at r.
TrapPlan build_trap_plan(const Graph& g, const VertexSet& cops, Vertex x, int r);

/// Cop strategy executing a fixed plan: assigned cops walk their shortest
/// paths then hold; unassigned cops hold. Captures any robber within
/// radius+1 cop moves of the plan start.
std::unique_ptr<CopStrategy> execute_trap(const Graph& g, const VertexSet& cops,
                                          const TrapPlan& plan);

/// Composed strategy for the CLI: places on a given set I and computes the
/// trap plan lazily from the robber's revealed vertex on the first move.
/// Holds in place when no trap radius exists.
std::unique_ptr<CopStrategy> make_hall_trap_cop(const Graph& g, const VertexSet& cops);

}  // namespace pursuit
