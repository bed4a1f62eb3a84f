#include "pursuit/subdivided.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pursuit/rng.hpp"

namespace pursuit {

std::vector<std::pair<int, int>> SubdividedHypercube::cube_edges(int d) {
    std::vector<std::pair<int, int>> out;
    int n = 1 << d;
    for (int u = 0; u < n; ++u)
        for (int i = 0; i < d; ++i)
            if (!(u & (1 << i))) out.emplace_back(u, u | (1 << i));
    return out;
}

namespace {

SubdividedHypercube assemble(int d, int s, int l, std::uint64_t seed,
                             std::vector<EdgeLabel> labels, std::vector<std::uint8_t> extras) {
    SubdividedHypercube sq;
    sq.d = d;
    sq.s = s;
    sq.l = l;
    sq.seed = seed;
    sq.edge_labels = std::move(labels);
    sq.edge_extras = std::move(extras);

    auto cube_edges = SubdividedHypercube::cube_edges(d);
    const int cube_n = 1 << d;
    sq.cube_vertex_map.resize(cube_n);
    for (int u = 0; u < cube_n; ++u) sq.cube_vertex_map[u] = u;

    Vertex next = cube_n;
    std::vector<Edge> edges;
    sq.path_map.resize(cube_edges.size());
    for (size_t e = 0; e < cube_edges.size(); ++e) {
        auto [a, b] = cube_edges[e];
        int added = (sq.edge_labels[e] == EdgeLabel::Short ? s : l) + sq.edge_extras[e];
        std::vector<Vertex>& path = sq.path_map[e];
        path.push_back(a);
        for (int i = 0; i < added; ++i) path.push_back(next++);
        path.push_back(b);
        for (size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
    }
    sq.graph = Graph::from_edges(next, edges);
    return sq;
}

}  // namespace

SubdividedHypercube gen_subdivided_hypercube(int d, int s, int l, std::uint64_t seed,
                                             const SubdividedHypercubeOptions& options) {
    if (d < 1 || d > 20) throw std::invalid_argument("subdivided hypercube dimension out of range");
    if (!(l > s && s >= 1)) throw std::invalid_argument("subdivision lengths need l > s >= 1");
    const int E = d * (1 << (d - 1));

    std::vector<EdgeLabel> labels;
    if (options.labels) {
        labels = *options.labels;
        if (static_cast<int>(labels.size()) != E)
            throw std::invalid_argument("per-edge label vector has wrong length");
    } else if (options.force_label) {
        labels.assign(E, *options.force_label);
    } else {
        Rng rng = make_rng(seed, "subdivided-labels");
        labels.reserve(E);
        for (int e = 0; e < E; ++e)
            labels.push_back((rng() & 1) ? EdgeLabel::Long : EdgeLabel::Short);
    }

    std::vector<std::uint8_t> extras;
    if (options.extras) {
        extras = *options.extras;
        if (static_cast<int>(extras.size()) != E)
            throw std::invalid_argument("per-edge extras vector has wrong length");
    } else if (options.force_extra) {
        if (*options.force_extra < 0 || *options.force_extra > 2)
            throw std::invalid_argument("extras must be in {0,1,2}");
        extras.assign(E, static_cast<std::uint8_t>(*options.force_extra));
    } else {
        extras.assign(E, 0);
    }
    for (auto x : extras)
        if (x > 2) throw std::invalid_argument("extras must be in {0,1,2}");

    return assemble(d, s, l, seed, std::move(labels), std::move(extras));
}

ConstructionPlan choose_construction_params(std::int64_t n, std::uint64_t seed) {
    // Dimension bands [100 d^2 2^(d-1), 100 (d+1)^2 2^d] tile the integers;
    // pick the band containing n (the smaller d at shared endpoints).
    int d = 0;
    for (int cand = 1; cand <= 40; ++cand) {
        std::int64_t lo = 100LL * cand * cand * (1LL << (cand - 1));
        std::int64_t hi = 100LL * (cand + 1) * (cand + 1) * (1LL << cand);
        if (n >= lo && n <= hi) {
            d = cand;
            break;
        }
    }
    if (d == 0) {
        std::int64_t min_n = 100;  // d = 1 band starts at 100 * 1 * 2^0
        throw std::invalid_argument(
            "no valid construction for n=" + std::to_string(n) +
            "; smallest adjustment: increase n by " + std::to_string(min_n - n));
    }

    const int E = d * (1 << (d - 1));
    const std::int64_t cube_n = 1LL << d;
    Rng rng = make_rng(seed, "subdivided-labels");
    std::vector<EdgeLabel> labels;
    labels.reserve(E);
    int long_count = 0;
    for (int e = 0; e < E; ++e) {
        bool is_long = rng() & 1;
        labels.push_back(is_long ? EdgeLabel::Long : EdgeLabel::Short);
        long_count += is_long;
    }

    // With base total T0(s) = 2^d + E(s+1) + long_count * delta ... actually
    // added vertices: short edge contributes s, long edge s + delta, so
    // T0 = 2^d + E*s + long_count*delta, and extras add up to 2E on top.
    ConstructionPlan best;
    bool found = false;
    for (int delta : {9, 10}) {
        // want T0 <= n <= T0 + 2E, centered: s = floor((n - cube_n - long_count*delta - E) / E)
        std::int64_t numer = n - cube_n - static_cast<std::int64_t>(long_count) * delta;
        std::int64_t s_mid = (numer - E) / E;
        for (std::int64_t s = std::max<std::int64_t>(1, s_mid - 1); s <= s_mid + 1; ++s) {
            std::int64_t t0 = cube_n + E * s + static_cast<std::int64_t>(long_count) * delta;
            std::int64_t need = n - t0;
            if (need < 0 || need > 2LL * E) continue;
            std::int64_t l = s + delta;
            bool strong = 2 * d * s > (2 * d - 1) * (l + 2);
            bool weak = 2 * d * s > 2 * (d - 1) * (l + 2);
            if (!strong) continue;  // enforce the stronger condition
            ConstructionPlan plan;
            plan.d = d;
            plan.s = static_cast<int>(s);
            plan.l = static_cast<int>(l);
            plan.target_n = n;
            plan.seed = seed;
            plan.labels = labels;
            plan.cond_strong = strong;
            plan.cond_weak = weak;
            // deterministic greedy extras: hand out 2s then the remainder, in edge order
            plan.extras.assign(E, 0);
            for (int e = 0; e < E && need > 0; ++e) {
                std::uint8_t take = static_cast<std::uint8_t>(std::min<std::int64_t>(2, need));
                plan.extras[e] = take;
                need -= take;
            }
            best = std::move(plan);
            found = true;
            break;
        }
        if (found) break;
    }
    if (!found) {
        // The s scan failed, so n sits below the feasible floor for this band.
        std::int64_t s_min = 11LL * (2 * d - 1) + 1;
        std::int64_t t_min = cube_n + E * s_min + static_cast<std::int64_t>(long_count) * 9;
        throw std::invalid_argument(
            "no valid construction for n=" + std::to_string(n) +
            " at d=" + std::to_string(d) +
            "; smallest adjustment: increase n by " + std::to_string(t_min - n));
    }
    return best;
}

SubdividedHypercube build_from_plan(const ConstructionPlan& plan) {
    SubdividedHypercubeOptions options;
    options.labels = plan.labels;
    options.extras = plan.extras;
    return gen_subdivided_hypercube(plan.d, plan.s, plan.l, plan.seed, options);
}

void write_structure(std::ostream& os, const SubdividedHypercube& sq) {
    os << "subdivided-hypercube v1\n";
    os << "d " << sq.d << "\n";
    os << "s " << sq.s << "\n";
    os << "l " << sq.l << "\n";
    os << "seed " << sq.seed << "\n";
    for (size_t u = 0; u < sq.cube_vertex_map.size(); ++u)
        os << "cube-vertex " << u << " " << sq.cube_vertex_map[u] << "\n";
    auto cube_edges = SubdividedHypercube::cube_edges(sq.d);
    for (size_t e = 0; e < cube_edges.size(); ++e) {
        os << "edge " << cube_edges[e].first << " " << cube_edges[e].second << " "
           << (sq.edge_labels[e] == EdgeLabel::Short ? "short" : "long") << " "
           << static_cast<int>(sq.edge_extras[e]) << " path";
        for (Vertex v : sq.path_map[e]) os << " " << v;
        os << "\n";
    }
}

SubdividedHypercube read_structure(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "subdivided-hypercube v1")
        throw std::invalid_argument("bad structure file header");
    int d = -1, s = -1, l = -1;
    std::uint64_t seed = 0;
    std::vector<EdgeLabel> labels;
    std::vector<std::uint8_t> extras;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "d") ls >> d;
        else if (key == "s") ls >> s;
        else if (key == "l") ls >> l;
        else if (key == "seed") ls >> seed;
        else if (key == "cube-vertex") continue;  // implied by canonical layout
        else if (key == "edge") {
            int a, b, extra;
            std::string label, path_kw;
            ls >> a >> b >> label >> extra >> path_kw;
            if (ls.fail() || path_kw != "path")
                throw std::invalid_argument("bad edge record in structure file");
            labels.push_back(label == "short" ? EdgeLabel::Short : EdgeLabel::Long);
            extras.push_back(static_cast<std::uint8_t>(extra));
        } else {
            throw std::invalid_argument("unknown key '" + key + "' in structure file");
        }
    }
    if (d < 1 || s < 1 || l <= s)
        throw std::invalid_argument("incomplete structure file");
    SubdividedHypercubeOptions options;
    options.labels = labels;
    options.extras = extras;
    return gen_subdivided_hypercube(d, s, l, seed, options);
}

}  // namespace pursuit
