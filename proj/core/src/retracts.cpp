#include "pursuit/retracts.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pursuit {

bool is_retraction(const Graph& g, const VertexMap& f) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n) throw std::invalid_argument("map is not total");
    for (Vertex v : f) g.check_vertex(v);
    for (Vertex x = 0; x < n; ++x)
        if (f[f[x]] != f[x]) return false;
    for (auto [u, v] : g.edges())
        if (f[u] != f[v] && !g.has_edge(f[u], f[v])) return false;
    return true;
}

namespace {

bool connected_within(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    std::vector<Vertex> queue{s.to_vector().front()};
    VertexSet seen(g.vertex_count());
    seen.insert(queue.front());
    for (size_t head = 0; head < queue.size(); ++head)
        for (Vertex w : g.neighbors(queue[head]))
            if (s.contains(w) && !seen.contains(w)) {
                seen.insert(w);
                queue.push_back(w);
            }
    return static_cast<int>(queue.size()) == s.size();
}

struct SearchContext {
    const Graph& g;
    std::vector<VertexSet> domain;       // candidate images per vertex
    std::vector<VertexSet> closed_nb;    // N[v] as bitsets
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
    bool exceeded = false;

    SearchContext(const Graph& graph, const VertexSet& h, std::uint64_t node_budget)
        : g(graph), budget(node_budget) {
        const int n = g.vertex_count();
        closed_nb.reserve(n);
        for (Vertex v = 0; v < n; ++v) {
            VertexSet nb(n);
            nb.insert(v);
            for (Vertex w : g.neighbors(v)) nb.insert(w);
            closed_nb.push_back(std::move(nb));
        }
        domain.assign(n, VertexSet(n));
        for (Vertex v = 0; v < n; ++v) {
            if (h.contains(v)) {
                domain[v].insert(v);
            } else {
                domain[v] = h;
            }
        }
    }

    // Arc consistency: a value a survives in D(u) iff every neighbor v can
    // still map into N[a]. Returns false when a domain empties.
    bool propagate() {
        const int n = g.vertex_count();
        std::vector<Vertex> dirty;
        VertexSet queued(n);
        for (Vertex v = 0; v < n; ++v) {
            dirty.push_back(v);
            queued.insert(v);
        }
        while (!dirty.empty()) {
            Vertex v = dirty.back();
            dirty.pop_back();
            queued.erase(v);
            for (Vertex u : g.neighbors(v)) {
                bool changed = false;
                std::vector<Vertex> drop;
                domain[u].for_each([&](Vertex a) {
                    if (!domain[v].intersects(closed_nb[a])) drop.push_back(a);
                });
                for (Vertex a : drop) {
                    domain[u].erase(a);
                    changed = true;
                }
                if (domain[u].empty()) return false;
                if (changed && !queued.contains(u)) {
                    dirty.push_back(u);
                    queued.insert(u);
                }
            }
        }
        return true;
    }

    bool search() {
        if (exceeded) return false;
        int best = -1;
        const int n = g.vertex_count();
        for (Vertex v = 0; v < n; ++v)
            if (domain[v].size() > 1 && (best < 0 || domain[v].size() < domain[best].size()))
                best = v;
        if (best < 0) return true;  // all singleton: propagation keeps this consistent
        for (Vertex a : domain[best].to_vector()) {
            if (++nodes > budget) {
                exceeded = true;
                return false;
            }
            std::vector<VertexSet> saved = domain;
            domain[best] = VertexSet(n);
            domain[best].insert(a);
            if (propagate() && search()) return true;
            if (exceeded) return false;
            domain = std::move(saved);
        }
        return false;
    }
};

}  // namespace

RetractSearchResult find_retraction_onto(const Graph& g, const VertexSet& h,
                                         std::uint64_t node_budget) {
    RetractSearchResult result;
    if (h.empty()) throw std::invalid_argument("empty image set");
    if (h.universe_size() != g.vertex_count())
        throw std::invalid_argument("image set universe mismatch");
    if (!connected_within(g, h))
        throw std::invalid_argument("image must induce a connected subgraph");

    SearchContext ctx(g, h, node_budget);
    if (!ctx.propagate()) {
        result.status = RetractSearchResult::Status::None;
        return result;
    }
    bool found = ctx.search();
    result.nodes = ctx.nodes;
    if (found) {
        VertexMap f(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) f[v] = ctx.domain[v].to_vector().front();
        result.map = std::move(f);
        result.status = RetractSearchResult::Status::Found;
    } else {
        result.status = ctx.exceeded ? RetractSearchResult::Status::Exceeded
                                     : RetractSearchResult::Status::None;
    }
    return result;
}

namespace {

class AreaDefenseCop final : public CopStrategy {
public:
    AreaDefenseCop(const Graph& g, VertexMap f) : f_(std::move(f)) {
        if (!is_retraction(g, f_)) throw std::invalid_argument("map is not a retraction");
    }

    std::string name() const override { return "area"; }

    std::vector<Vertex> place(const Graph&, int k, const Position& pos) override {
        if (k != 1) throw std::invalid_argument("area defense is a single-cop strategy");
        return {pos.robber ? f_[*pos.robber] : f_[0]};
    }

    std::vector<Vertex> step(const Graph& g, const Position& pos) override {
        Vertex shadow = f_[*pos.robber];
        Vertex at = pos.cops[0];
        if (at == shadow) return {at};
        if (g.has_edge(at, shadow)) return {shadow};
        // unsynchronized: close in on the shadow one step at a time
        auto dist = g.distances_from(shadow);
        Vertex best = at;
        for (Vertex w : g.neighbors(at))
            if (dist[w] >= 0 && (dist[w] < dist[best] || (dist[w] == dist[best] && w < best)))
                best = w;
        return {best};
    }

private:
    VertexMap f_;
};

}  // namespace

std::unique_ptr<CopStrategy> area_defense_strategy(const Graph& g, const VertexMap& f) {
    return std::make_unique<AreaDefenseCop>(g, f);
}

VertexSet realize_quarters(int d, const QuarterSet& quarters) {
    const int n = 1 << d;
    VertexSet out(n);
    for (const Quarter& q : quarters) {
        if (q.i < 0 || q.j < 0 || q.i >= d || q.j >= d || q.i == q.j)
            throw std::invalid_argument("bad quarter coordinates");
        for (int x = 0; x < n; ++x)
            if (((x >> q.i) & 1) == q.a && ((x >> q.j) & 1) == q.b) out.insert(x);
    }
    return out;
}

bool union_of_quarters_check(int d, const VertexSet& s) {
    if (d < 2) throw std::invalid_argument("quarters need dimension >= 2");
    const int n = 1 << d;
    if (s.universe_size() != n) throw std::invalid_argument("set universe must be 2^d");
    VertexSet covered(n);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    bool inside = true;
                    for (int x = 0; x < n && inside; ++x)
                        if (((x >> i) & 1) == a && ((x >> j) & 1) == b && !s.contains(x))
                            inside = false;
                    if (!inside) continue;
                    for (int x = 0; x < n; ++x)
                        if (((x >> i) & 1) == a && ((x >> j) & 1) == b) covered.insert(x);
                }
    bool ok = true;
    s.for_each([&](Vertex x) { ok = ok && covered.contains(x); });
    return ok;
}

VertexSet reduce_retract(const SubdividedHypercube& sq, const VertexSet& R) {
    const Graph& g = sq.graph;
    if (R.empty()) throw std::invalid_argument("empty set is not a retract image");
    if (R.universe_size() != g.vertex_count())
        throw std::invalid_argument("set universe mismatch");
    if (!connected_within(g, R))
        throw std::invalid_argument("retract image must induce a connected subgraph");

    VertexSet out(g.vertex_count());
    const int cube_n = 1 << sq.d;
    for (int u = 0; u < cube_n; ++u)
        if (R.contains(sq.cube_vertex_map[u])) out.insert(sq.cube_vertex_map[u]);
    for (const auto& path : sq.path_map) {
        bool whole = true;
        for (Vertex v : path)
            if (!R.contains(v)) {
                whole = false;
                break;
            }
        if (whole)
            for (Vertex v : path) out.insert(v);
    }
    return out;
}

namespace {

/// Side lengths compare the same way for every l > s when extras agree, so
/// the enumeration fixes s=1, l=2, extras 0.
int side_length(bool is_long) { return (is_long ? 2 : 1) + 1; }

}  // namespace

Rational config1_probability() {
    // 4-cycle x1 x2 x3 x4; the retract keeps x2,x3,x4. Event:
    // dist(x2,x3) + dist(x3,x4) <= dist(x2,x1) + dist(x1,x4).
    int hits = 0;
    for (int mask = 0; mask < 16; ++mask) {
        int e12 = side_length(mask & 1);
        int e23 = side_length(mask & 2);
        int e34 = side_length(mask & 4);
        int e41 = side_length(mask & 8);
        if (e23 + e34 <= e12 + e41) ++hits;
    }
    Rational out{hits, 16};
    out.reduce();
    return out;
}

Rational config2_probability() {
    // 3-cube with x-cycle kept and y-cycle excluded. Event: the y-cycle is at
    // least as long as the x-cycle.
    int hits = 0;
    for (int mask = 0; mask < 256; ++mask) {
        int x_sum = 0, y_sum = 0;
        for (int e = 0; e < 4; ++e) x_sum += side_length(mask & (1 << e));
        for (int e = 4; e < 8; ++e) y_sum += side_length(mask & (1 << e));
        if (y_sum >= x_sum) ++hits;
    }
    Rational out{hits, 256};
    out.reduce();
    return out;
}

namespace {

/// Reduced set for a cube-vertex subset: the cube vertices plus every
/// subdivision path with both endpoints selected.
VertexSet reduced_set_for(const SubdividedHypercube& sq, std::uint64_t cube_mask) {
    VertexSet out(sq.graph.vertex_count());
    const int cube_n = 1 << sq.d;
    for (int u = 0; u < cube_n; ++u)
        if (cube_mask & (1ULL << u)) out.insert(sq.cube_vertex_map[u]);
    auto cube_edges = SubdividedHypercube::cube_edges(sq.d);
    for (size_t e = 0; e < cube_edges.size(); ++e) {
        auto [a, b] = cube_edges[e];
        if ((cube_mask & (1ULL << a)) && (cube_mask & (1ULL << b)))
            for (Vertex v : sq.path_map[e]) out.insert(v);
    }
    return out;
}

std::vector<std::uint64_t> quarter_masks(int d) {
    std::vector<std::uint64_t> masks;
    const int n = 1 << d;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    std::uint64_t m = 0;
                    for (int x = 0; x < n; ++x)
                        if (((x >> i) & 1) == a && ((x >> j) & 1) == b) m |= 1ULL << x;
                    masks.push_back(m);
                }
    return masks;
}

bool mask_is_union_of_quarters(std::uint64_t u, const std::vector<std::uint64_t>& quarters) {
    std::uint64_t covered = 0;
    for (std::uint64_t q : quarters)
        if ((u & q) == q) covered |= q;
    return covered == u;
}

}  // namespace

LargestRetractResult find_largest_proper_retract(const SubdividedHypercube& sq,
                                                 std::uint64_t node_budget) {
    if (sq.d < 2 || sq.d > 6)
        throw std::invalid_argument("retract scan supports 2 <= d <= 6");
    const int cube_n = 1 << sq.d;
    const std::uint64_t full = cube_n == 64 ? ~0ULL : (1ULL << cube_n) - 1;
    auto quarters = quarter_masks(sq.d);

    // Candidate cube-vertex sets whose complement is a union of quarters.
    std::vector<std::uint64_t> candidates;
    if (sq.d <= 4) {
        for (std::uint64_t u = 1; u <= full; ++u)
            if (mask_is_union_of_quarters(u, quarters)) {
                std::uint64_t t = full & ~u;
                if (t != 0) candidates.push_back(t);
            }
    } else {
        // heuristic slice: complements that are unions of at most 3 quarters
        std::vector<std::uint64_t> unions;
        for (size_t a = 0; a < quarters.size(); ++a) {
            unions.push_back(quarters[a]);
            for (size_t b = a + 1; b < quarters.size(); ++b) {
                unions.push_back(quarters[a] | quarters[b]);
                for (size_t c = b + 1; c < quarters.size(); ++c)
                    unions.push_back(quarters[a] | quarters[b] | quarters[c]);
            }
        }
        std::sort(unions.begin(), unions.end());
        unions.erase(std::unique(unions.begin(), unions.end()), unions.end());
        for (std::uint64_t u : unions) {
            std::uint64_t t = full & ~u;
            if (t != 0) candidates.push_back(t);
        }
    }

    // Largest first; verify each candidate with the exact search.
    std::vector<std::pair<int, std::uint64_t>> sized;
    sized.reserve(candidates.size());
    for (std::uint64_t t : candidates) {
        VertexSet image = reduced_set_for(sq, t);
        if (image.size() == sq.graph.vertex_count()) continue;  // proper only
        sized.emplace_back(image.size(), t);
    }
    std::sort(sized.begin(), sized.end(), [](const auto& a, const auto& b) {
        return a.first > b.first || (a.first == b.first && a.second < b.second);
    });

    LargestRetractResult result;
    result.image = VertexSet(sq.graph.vertex_count());
    for (auto [size, t] : sized) {
        VertexSet image = reduced_set_for(sq, t);
        if (!connected_within(sq.graph, image)) continue;
        ++result.candidates_tried;
        auto search = find_retraction_onto(sq.graph, image, node_budget);
        if (search.status == RetractSearchResult::Status::Found) {
            result.status = LargestRetractResult::Status::Found;
            result.image = image;
            result.map = search.map;
            result.size = size;
            return result;
        }
        if (search.status == RetractSearchResult::Status::Exceeded) ++result.inconclusive_larger;
    }
    result.status = result.inconclusive_larger > 0 ? LargestRetractResult::Status::Exceeded
                                                   : LargestRetractResult::Status::None;
    return result;
}

bool harper_boundary_check(int d, const VertexSet& s) {
    if (d < 1 || d > 20) throw std::invalid_argument("dimension out of range [1,20]");
    const int n = 1 << d;
    if (s.universe_size() != n) throw std::invalid_argument("set universe must be 2^d");
    if (s.size() == n) return true;  // the argument never invokes the bound for S = Q
    std::int64_t boundary = 0;
    for (int x = 0; x < n; ++x) {
        if (!s.contains(x)) continue;
        for (int i = 0; i < d; ++i)
            if (!s.contains(x ^ (1 << i))) ++boundary;
    }
    std::int64_t need = std::min<std::int64_t>(s.size(), n / 4);
    return boundary >= need;
}

VertexMap read_vertex_map(std::istream& is, int n) {
    VertexMap f(n, -1);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long long x, fx;
        if (!(ls >> x >> fx)) throw std::invalid_argument("bad map line '" + line + "'");
        if (x < 0 || x >= n) throw std::invalid_argument("map vertex out of range");
        f[x] = static_cast<Vertex>(fx);
    }
    for (int x = 0; x < n; ++x)
        if (f[x] < 0) throw std::invalid_argument("map is missing vertex " + std::to_string(x));
    return f;
}

void write_vertex_map(std::ostream& os, const VertexMap& f) {
    for (size_t x = 0; x < f.size(); ++x) os << x << " " << f[x] << "\n";
}

}  // namespace pursuit
