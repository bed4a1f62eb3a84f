#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

/// Directed edge (from -> to); both endpoints must be adjacent in the host graph.
struct DirectedEdge {
    Vertex from = -1;
    Vertex to = -1;
};

constexpr std::uint64_t kWalkCountSaturated = std::numeric_limits<std::uint64_t>::max();

/// Non-backtracking walk counts of even lengths 2i, i = 0..r, from a source
/// vertex into a target set. counts[i] saturates at kWalkCountSaturated; a
/// saturated profile must never feed a silent bound.
struct WalkProfile {
    Vertex source = -1;
    VertexSet targets;
    std::optional<DirectedEdge> forbidden_first;
    std::vector<std::uint64_t> counts;
    bool saturated = false;
};

/// Step-by-step non-backtracking walk DP over directed edges.
/// State after t steps: value per directed edge (u -> v) = number of
/// non-backtracking walks of length t from the source whose last step is
/// u -> v. Transition cost is O(sum of squared degrees).
class WalkDp {
public:
    /// mask, when given, confines walks to vertices inside it (source included).
    WalkDp(const Graph& g, Vertex source, std::optional<DirectedEdge> forbidden_first = {},
           const VertexSet* mask = nullptr);

    void step();                 // advance walk length by one
    int length() const { return length_; }
    bool saturated() const { return saturated_; }

    /// Number of walks of the current length ending at v.
    std::uint64_t ends_at(Vertex v) const;
    /// Sum of ends_at over a target set (saturating).
    std::uint64_t ends_in(const VertexSet& targets) const;
    /// Weighted sum with per-vertex nonnegative integer multiplicities.
    std::uint64_t ends_in_weighted(const std::vector<int>& multiplicity) const;

private:
    const Graph& g_;
    Vertex source_;
    const VertexSet* mask_;
    int length_ = 0;
    bool saturated_ = false;
    bool started_ = false;
    std::optional<DirectedEdge> forbidden_first_;
    std::vector<std::uint64_t> edge_counts_;  // indexed by directed edge id

    bool allowed(Vertex v) const { return mask_ == nullptr || mask_->contains(v); }
};

/// Walks x = v_0, ..., v_len with v_len in targets, consecutive vertices
/// adjacent, no immediate reversal, and (v_0, v_1) != forbidden_first.
/// Length 0 counts the empty walk iff x is in targets.
std::uint64_t count_nb_walks(const Graph& g, Vertex x, const VertexSet& targets, int length,
                             std::optional<DirectedEdge> forbidden_first = {});

/// counts[i] = count_nb_walks(..., length 2i, ...) for i = 0..r in one DP pass.
WalkProfile walk_profile(const Graph& g, Vertex x, const VertexSet& targets, int r,
                         std::optional<DirectedEdge> forbidden_first = {});

/// Exact M_i(1) for i = 0..r: the maximum over x in restrict and y in V(g) of
/// the number of non-backtracking walks of length 2i between y and x.
/// M_i(s) for s > 1 is bounded by s * M_i(1) everywhere downstream.
WalkProfile m_profile_singleton(const Graph& g, const VertexSet& restrict_to, int r);

}  // namespace pursuit
