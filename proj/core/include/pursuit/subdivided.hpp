#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

enum class EdgeLabel : std::uint8_t { Short, Long };

/// Hypercube with every cube edge replaced by a path. A short edge gets
/// s + extra added vertices (extra in {0,1,2}), a long edge l + extra, so the
/// path has s+1+extra resp. l+1+extra edges. Cube edges are indexed in the
/// canonical order (u, u | 1<<i) for u = 0..2^d-1, i = 0..d-1, bit i of u
/// clear.
struct SubdividedHypercube {
    int d = 0;
    int s = 0;
    int l = 0;
    std::uint64_t seed = 0;
    std::vector<EdgeLabel> edge_labels;           // per cube edge
    std::vector<std::uint8_t> edge_extras;        // per cube edge, 0..2
    Graph graph;
    std::vector<Vertex> cube_vertex_map;          // cube vertex -> graph vertex
    std::vector<std::vector<Vertex>> path_map;    // cube edge -> full path incl. endpoints

    int cube_edge_count() const { return d * (1 << (d - 1)); }
    /// Number of edges on the subdivided path of cube edge e.
    int path_length(int e) const {
        return (edge_labels[e] == EdgeLabel::Short ? s : l) + 1 + edge_extras[e];
    }
    static std::vector<std::pair<int, int>> cube_edges(int d);
};

struct SubdividedHypercubeOptions {
    std::optional<EdgeLabel> force_label;         // all edges get this label
    std::optional<int> force_extra;               // all edges get this extra
    std::optional<std::vector<EdgeLabel>> labels; // explicit per-edge labels
    std::optional<std::vector<std::uint8_t>> extras;
};

/// Labels drawn independently uniform over {short, long} from the seed;
/// extras default to 0 unless forced. Requires l > s >= 1.
SubdividedHypercube gen_subdivided_hypercube(int d, int s, int l, std::uint64_t seed,
                                             const SubdividedHypercubeOptions& options = {});

/// Construction plan hitting an exact vertex count: dimension from the
/// 100 d^2 2^(d-1) band, l - s in {9,10}, random edge labels, then a
/// deterministic greedy extras assignment. Both forms of the degree/length
/// condition are evaluated; the stronger 2ds > (2d-1)(l+2) is enforced.
struct ConstructionPlan {
    int d = 0;
    int s = 0;
    int l = 0;
    std::int64_t target_n = 0;
    std::uint64_t seed = 0;
    std::vector<EdgeLabel> labels;
    std::vector<std::uint8_t> extras;
    bool cond_strong = false;  // 2ds > (2d-1)(l+2)
    bool cond_weak = false;    // 2ds > 2(d-1)(l+2)
};

/// Throws std::invalid_argument for infeasible n, reporting the smallest
/// adjustment that would make it feasible. The seed fixes the edge labels the
/// extras are fitted against.
ConstructionPlan choose_construction_params(std::int64_t n, std::uint64_t seed = 0);

SubdividedHypercube build_from_plan(const ConstructionPlan& plan);

/// Sidecar structure file (labels, extras, maps) in a line-oriented
/// key-value format; see README for the schema.
void write_structure(std::ostream& os, const SubdividedHypercube& sq);
SubdividedHypercube read_structure(std::istream& is);

}  // namespace pursuit
