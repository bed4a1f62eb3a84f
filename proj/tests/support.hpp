#pragma once

// Shared test oracles. Everything here is deliberately brute-force and
// independent of the library's fast paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pursuit/graph.hpp"
#include "pursuit/rng.hpp"

namespace pursuit::testing {

/// Exhaustive non-backtracking walk count by DFS over all walks.
inline std::uint64_t brute_nb_walks(const Graph& g, Vertex x, const VertexSet& targets, int length,
                                    std::optional<std::pair<Vertex, Vertex>> forbidden_first = {}) {
    std::uint64_t count = 0;
    std::vector<Vertex> walk{x};
    std::function<void()> rec = [&] {
        if (static_cast<int>(walk.size()) - 1 == length) {
            if (targets.contains(walk.back())) ++count;
            return;
        }
        for (Vertex w : g.neighbors(walk.back())) {
            if (walk.size() >= 2 && w == walk[walk.size() - 2]) continue;
            if (walk.size() == 1 && forbidden_first && forbidden_first->first == x &&
                forbidden_first->second == w)
                continue;
            walk.push_back(w);
            rec();
            walk.pop_back();
        }
    };
    rec();
    return count;
}

/// Exhaustive Hall condition: |I and N(S, r+1)| >= |S| for every S inside
/// B(x,r). Exponential in the ball size; keep graphs small.
inline bool brute_hall_condition(const Graph& g, const VertexSet& cops, Vertex x, int r) {
    auto ball_vertices = ball(g, x, r).to_vector();
    const int b = static_cast<int>(ball_vertices.size());
    for (std::uint64_t mask = 1; mask < (1ULL << b); ++mask) {
        VertexSet s(g.vertex_count());
        int size = 0;
        for (int i = 0; i < b; ++i)
            if (mask & (1ULL << i)) {
                s.insert(ball_vertices[i]);
                ++size;
            }
        VertexSet reach = neighborhood(g, s, r + 1);
        reach &= cops;
        if (reach.size() < size) return false;
    }
    return true;
}

/// All-maps retraction search: tries every map V -> h fixing h pointwise.
inline std::optional<std::vector<Vertex>> brute_retraction_onto(const Graph& g,
                                                                const VertexSet& h) {
    const int n = g.vertex_count();
    std::vector<Vertex> image = h.to_vector();
    std::vector<Vertex> free_vertices;
    for (Vertex v = 0; v < n; ++v)
        if (!h.contains(v)) free_vertices.push_back(v);
    std::vector<Vertex> f(n);
    for (Vertex v = 0; v < n; ++v) f[v] = v;
    auto valid = [&] {
        for (auto [u, v] : g.edges())
            if (f[u] != f[v] && !g.has_edge(f[u], f[v])) return false;
        return true;
    };
    std::uint64_t total = 1;
    for (size_t i = 0; i < free_vertices.size(); ++i) total *= image.size();
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (Vertex v : free_vertices) {
            f[v] = image[c % image.size()];
            c /= image.size();
        }
        if (valid()) return f;
    }
    return std::nullopt;
}

/// Decodes an edge-subset mask into a graph on n vertices (edges in the
/// fixed order (0,1),(0,2),(1,2),(0,3),...). Returns nullopt if disconnected.
inline std::optional<Graph> connected_graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> all_edges;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) all_edges.emplace_back(u, v);
    std::vector<Edge> edges;
    for (size_t i = 0; i < all_edges.size(); ++i)
        if (mask & (1ULL << i)) edges.push_back(all_edges[i]);
    Graph g = Graph::from_edges(n, edges);
    if (!g.is_connected()) return std::nullopt;
    return g;
}

inline int edge_slots(int n) { return n * (n - 1) / 2; }

/// Random connected G(n,p) by rejection.
inline Graph random_connected_gnp(int n, double p, Rng& rng) {
    for (;;) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (uniform01(rng) < p) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        if (g.is_connected()) return g;
    }
}

/// Random tree via a random attachment order.
inline Graph random_tree(int n, Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(static_cast<Vertex>(uniform_below(rng, v)), v);
    return Graph::from_edges(n, edges);
}

/// Min-degree peel with a caller-controlled removal order (confluence oracle).
inline VertexSet peel_in_random_order(const Graph& g, int d, Rng& rng) {
    const int n = g.vertex_count();
    std::vector<bool> removed(n, false);
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (;;) {
        std::vector<Vertex> low;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && deg[v] < d) low.push_back(v);
        if (low.empty()) break;
        Vertex pick = low[uniform_below(rng, low.size())];
        removed[pick] = true;
        for (Vertex w : g.neighbors(pick))
            if (!removed[w]) --deg[w];
    }
    VertexSet out(n);
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v]) out.insert(v);
    return out;
}

/// Exact binomial lower tail in long double.
inline long double exact_binomial_tail(int n, double p, int k) {
    long double total = 0;
    for (int i = 0; i <= k; ++i) {
        long double term = 1;
        for (int j = 0; j < i; ++j) term *= static_cast<long double>(n - j) / (j + 1);
        term *= std::pow(static_cast<long double>(p), i);
        term *= std::pow(static_cast<long double>(1 - p), n - i);
        total += term;
    }
    return total;
}

}  // namespace pursuit::testing
