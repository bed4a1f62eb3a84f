#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pursuit {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;  // normalized u < v

/// Subset of the vertex range 0..n-1 of a host graph, bitset-backed.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<Vertex> vs) {
        VertexSet s(universe);
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    int universe_size() const { return n_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(Vertex v) const {
        return v >= 0 && v < n_ && (bits_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1;
    }
    void insert(Vertex v) {
        std::uint64_t& w = bits_[static_cast<size_t>(v) >> 6];
        std::uint64_t m = 1ULL << (v & 63);
        if (!(w & m)) { w |= m; ++count_; }
    }
    void erase(Vertex v) {
        std::uint64_t& w = bits_[static_cast<size_t>(v) >> 6];
        std::uint64_t m = 1ULL << (v & 63);
        if (w & m) { w &= ~m; --count_; }
    }

    std::vector<Vertex> to_vector() const;
    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;
    bool operator==(const VertexSet& other) const { return n_ == other.n_ && bits_ == other.bits_; }

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet complement() const;

    template <typename F>
    void for_each(F&& f) const {
        for (size_t w = 0; w < bits_.size(); ++w) {
            std::uint64_t word = bits_[w];
            while (word) {
                int b = __builtin_ctzll(word);
                f(static_cast<Vertex>(w * 64 + b));
                word &= word - 1;
            }
        }
    }

private:
    int n_ = 0;
    int count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Immutable simple undirected graph with dense 0-based vertex ids.
/// Adjacency is CSR with sorted neighbor lists; all queries are const and
/// safe to share across threads.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Throws std::invalid_argument on self-loops,
    /// duplicate edges, or out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
    bool has_edge(Vertex u, Vertex v) const;

    int min_degree() const;
    int max_degree() const;
    bool is_connected() const { return connected_; }

    std::vector<Edge> edges() const;

    /// BFS distances from x; unreachable vertices get -1.
    std::vector<int> distances_from(Vertex x) const;
    int distance(Vertex u, Vertex v) const;
    int diameter() const;  // max finite distance; -1 for the empty graph

    /// Deterministic FNV-1a hash of (n, sorted edge list); stable across runs.
    std::uint64_t hash() const;

    void check_vertex(Vertex v) const;

    // Directed-edge CSR view used by the walk-counting DP. The directed edge
    // (u -> v) is identified by the CSR position of v in u's neighbor list.
    int directed_edge_count() const { return 2 * m_; }
    std::size_t edge_offset(Vertex v) const { return offsets_[v]; }
    /// Position of (u -> v) in the CSR array, or -1 if not adjacent.
    std::int64_t directed_edge_id(Vertex u, Vertex v) const;

private:
    int n_ = 0;
    int m_ = 0;
    bool connected_ = false;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
};

/// Vertices at distance <= r from x.
VertexSet ball(const Graph& g, Vertex x, int r);

/// Vertices at distance <= r from the set s. N(s,0) = s.
VertexSet neighborhood(const Graph& g, const VertexSet& s, int r);

/// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Unique maximal vertex set whose induced subgraph has minimum degree >= d
/// (iterated removal of low-degree vertices). May be empty.
VertexSet min_degree_peel(const Graph& g, int d);

/// Minimum degree of the subgraph induced by r (-1 if r is empty).
int induced_min_degree(const Graph& g, const VertexSet& r);

/// Number of edges with both endpoints in s.
std::int64_t induced_edge_count(const Graph& g, const VertexSet& s);

/// Extracts the induced subgraph; mapping[i] is the original id of new vertex i.
std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace pursuit
