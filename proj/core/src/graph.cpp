#include "pursuit/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace pursuit {

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count_);
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    if (n_ != other.n_) return false;
    for (size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~other.bits_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    size_t words = std::min(bits_.size(), other.bits_.size());
    for (size_t i = 0; i < words; ++i)
        if (bits_[i] & other.bits_[i]) return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    count_ = 0;
    for (size_t i = 0; i < bits_.size(); ++i) {
        bits_[i] |= other.bits_[i];
        count_ += __builtin_popcountll(bits_[i]);
    }
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    count_ = 0;
    for (size_t i = 0; i < bits_.size(); ++i) {
        bits_[i] &= other.bits_[i];
        count_ += __builtin_popcountll(bits_[i]);
    }
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet out(n_);
    for (Vertex v = 0; v < n_; ++v)
        if (!contains(v)) out.insert(v);
    return out;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.m_ = static_cast<int>(edges.size());
    std::set<Edge> seen;
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second) throw std::invalid_argument("duplicate edge");
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.targets_.resize(2 * static_cast<size_t>(g.m_));
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.targets_[cursor[u]++] = v;
        g.targets_[cursor[v]++] = u;
    }
    for (int v = 0; v < n; ++v)
        std::sort(g.targets_.begin() + g.offsets_[v], g.targets_.begin() + g.offsets_[v + 1]);

    if (n == 0) {
        g.connected_ = true;
    } else {
        auto dist = g.distances_from(0);
        g.connected_ = std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
    int md = n_ > 0 ? degree(0) : 0;
    for (Vertex v = 1; v < n_; ++v) md = std::min(md, degree(v));
    return md;
}

int Graph::max_degree() const {
    int md = 0;
    for (Vertex v = 0; v < n_; ++v) md = std::max(md, degree(v));
    return md;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::distances_from(Vertex x) const {
    check_vertex(x);
    std::vector<int> dist(n_, -1);
    std::vector<Vertex> queue;
    queue.reserve(n_);
    dist[x] = 0;
    queue.push_back(x);
    for (size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex v : neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

int Graph::distance(Vertex u, Vertex v) const {
    check_vertex(v);
    return distances_from(u)[v];
}

int Graph::diameter() const {
    int diam = -1;
    for (Vertex v = 0; v < n_; ++v) {
        auto dist = distances_from(v);
        for (int d : dist) diam = std::max(diam, d);
    }
    return diam;
}

std::uint64_t Graph::hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (auto [u, v] : edges()) {
        mix(static_cast<std::uint64_t>(u));
        mix(static_cast<std::uint64_t>(v));
    }
    return h;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
}

std::int64_t Graph::directed_edge_id(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return -1;
    return static_cast<std::int64_t>(offsets_[u] + (it - nb.begin()));
}

VertexSet ball(const Graph& g, Vertex x, int r) {
    g.check_vertex(x);
    if (r < 0) throw std::invalid_argument("negative radius");
    VertexSet out(g.vertex_count());
    auto dist = g.distances_from(x);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (dist[v] >= 0 && dist[v] <= r) out.insert(v);
    return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s, int r) {
    if (r < 0) throw std::invalid_argument("negative radius");
    if (s.universe_size() != g.vertex_count())
        throw std::invalid_argument("vertex set universe does not match graph");
    // multi-source BFS
    VertexSet out(g.vertex_count());
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<Vertex> queue;
    s.for_each([&](Vertex v) {
        dist[v] = 0;
        queue.push_back(v);
        out.insert(v);
    });
    for (size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        if (dist[u] == r) continue;
        for (Vertex v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
                out.insert(v);
            }
        }
    }
    return out;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every root; a non-tree edge (u,w) seen from root v closes a
    // cycle of length dist(u)+dist(w)+1. The minimum over all roots is exact.
    int best = -1;
    std::vector<int> dist(g.vertex_count());
    std::vector<Vertex> parent(g.vertex_count());
    std::vector<Vertex> queue;
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[root] = 0;
        parent[root] = -1;
        queue.push_back(root);
        for (size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u] && u < w) {
                    int cyc = dist[u] + dist[w] + 1;
                    if (best < 0 || cyc < best) best = cyc;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

VertexSet min_degree_peel(const Graph& g, int d) {
    if (d < 0) throw std::invalid_argument("negative degree threshold");
    int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < d) {
            removed[v] = true;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.neighbors(u)) {
            if (!removed[v] && --deg[v] < d) {
                removed[v] = true;
                stack.push_back(v);
            }
        }
    }
    VertexSet out(n);
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v]) out.insert(v);
    return out;
}

int induced_min_degree(const Graph& g, const VertexSet& r) {
    if (r.empty()) return -1;
    int md = g.vertex_count();
    r.for_each([&](Vertex v) {
        int d = 0;
        for (Vertex w : g.neighbors(v))
            if (r.contains(w)) ++d;
        md = std::min(md, d);
    });
    return md;
}

std::int64_t induced_edge_count(const Graph& g, const VertexSet& s) {
    std::int64_t count = 0;
    s.for_each([&](Vertex u) {
        for (Vertex v : g.neighbors(u))
            if (u < v && s.contains(v)) ++count;
    });
    return count;
}

std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<Vertex> mapping = s.to_vector();
    std::vector<int> inverse(g.vertex_count(), -1);
    for (size_t i = 0; i < mapping.size(); ++i) inverse[mapping[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (size_t i = 0; i < mapping.size(); ++i)
        for (Vertex w : g.neighbors(mapping[i]))
            if (inverse[w] > static_cast<int>(i)) edges.emplace_back(static_cast<Vertex>(i), inverse[w]);
    return {Graph::from_edges(static_cast<int>(mapping.size()), edges), mapping};
}

}  // namespace pursuit
