#include "pursuit/hall.hpp"

#include <algorithm>
#include <stdexcept>

#include "pursuit/matching.hpp"
#include "pursuit/rng.hpp"

namespace pursuit {

VertexSet hall_place(const Graph& g, int c, std::uint64_t seed, int resample_budget) {
    if (c < 1) throw std::invalid_argument("hall_place needs c >= 1");
    const int n = g.vertex_count();
    const double p = std::min(1.0, static_cast<double>(c) / (2.0 * n));
    Rng rng = make_rng(seed, "hall-place");
    for (int attempt = 0; attempt < resample_budget; ++attempt) {
        VertexSet out(n);
        for (Vertex v = 0; v < n; ++v)
            if (uniform01(rng) < p) out.insert(v);
        if (out.size() <= static_cast<int>(c)) return out;
    }
    throw std::runtime_error("hall_place: resample budget exhausted");
}

namespace {

/// Saturating matching of B(x,r) into the cop set, or empty if none exists.
/// cop_dist[j] = BFS distances from the j-th cop.
std::optional<std::vector<int>> saturating_assignment(
    const std::vector<Vertex>& ball_vertices, const std::vector<std::vector<int>>& cop_dist,
    int r) {
    const int L = static_cast<int>(ball_vertices.size());
    const int R = static_cast<int>(cop_dist.size());
    if (L > R) return std::nullopt;
    BipartiteMatcher matcher(L, R);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < R; ++j) {
            int d = cop_dist[j][ball_vertices[i]];
            if (d >= 0 && d <= r + 1) matcher.add_edge(i, j);
        }
    if (matcher.solve() != L) return std::nullopt;
    return matcher.match_left();
}

}  // namespace

bool hall_condition_holds(const Graph& g, const VertexSet& cops, Vertex x, int r) {
    if (cops.empty()) return false;
    if (r < 0) throw std::invalid_argument("negative radius");
    auto ball_set = ball(g, x, r);
    std::vector<Vertex> ball_vertices = ball_set.to_vector();
    std::vector<std::vector<int>> cop_dist;
    cops.for_each([&](Vertex c) { cop_dist.push_back(g.distances_from(c)); });
    return saturating_assignment(ball_vertices, cop_dist, r).has_value();
}

std::optional<int> min_trap_radius(const Graph& g, const VertexSet& cops, Vertex x) {
    if (cops.empty()) throw std::invalid_argument("min_trap_radius needs a nonempty cop set");
    g.check_vertex(x);
    std::vector<std::vector<int>> cop_dist;
    cops.for_each([&](Vertex c) { cop_dist.push_back(g.distances_from(c)); });
    auto dx = g.distances_from(x);
    int diameter = g.diameter();
    for (int r = 0; r <= diameter; ++r) {
        std::vector<Vertex> ball_vertices;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (dx[v] >= 0 && dx[v] <= r) ball_vertices.push_back(v);
        if (saturating_assignment(ball_vertices, cop_dist, r)) return r;
    }
    return std::nullopt;
}

TrapPlan build_trap_plan(const Graph& g, const VertexSet& cops, Vertex x, int r) {
    TrapPlan plan;
    plan.anchor = x;
    plan.radius = r;
    plan.cops = cops.to_vector();
    plan.ball_vertices = ball(g, x, r).to_vector();

    std::vector<std::vector<int>> cop_dist;
    for (Vertex c : plan.cops) cop_dist.push_back(g.distances_from(c));
    auto assignment = saturating_assignment(plan.ball_vertices, cop_dist, r);
    if (!assignment)
        throw std::invalid_argument("Hall condition fails at this radius; no trap plan");
    plan.assignment = *assignment;

    // Shortest path per assigned cop, recovered by walking the BFS distances
    // from the target back toward the cop.
    plan.paths.assign(plan.cops.size(), {});
    for (size_t i = 0; i < plan.ball_vertices.size(); ++i) {
        int j = plan.assignment[i];
        Vertex target = plan.ball_vertices[i];
        auto target_dist = g.distances_from(target);
        std::vector<Vertex> path;
        Vertex at = plan.cops[j];
        path.push_back(at);
        while (at != target) {
            for (Vertex w : g.neighbors(at)) {
                if (target_dist[w] == target_dist[at] - 1) {
                    at = w;
                    break;
                }
            }
            path.push_back(at);
        }
        plan.paths[j] = std::move(path);
    }
    return plan;
}

namespace {

class TrapExecutor final : public CopStrategy {
public:
    TrapExecutor(const VertexSet& cops, TrapPlan plan)
        : initial_(cops.to_vector()), plan_(std::move(plan)) {}

    std::string name() const override { return "trap"; }

    std::vector<Vertex> place(const Graph&, int k, const Position&) override {
        if (k != static_cast<int>(initial_.size()))
            throw std::invalid_argument("trap strategy placed with wrong cop count");
        step_ = 0;
        return initial_;
    }

    std::vector<Vertex> step(const Graph&, const Position& pos) override {
        ++step_;
        std::vector<Vertex> out = pos.cops;
        for (size_t j = 0; j < out.size() && j < plan_.paths.size(); ++j) {
            const auto& path = plan_.paths[j];
            if (path.empty()) continue;  // unassigned cop holds
            size_t idx = std::min<size_t>(step_, path.size() - 1);
            out[j] = path[idx];
        }
        return out;
    }

private:
    std::vector<Vertex> initial_;
    TrapPlan plan_;
    std::size_t step_ = 0;
};

class LazyHallTrap final : public CopStrategy {
public:
    LazyHallTrap(const Graph& g, VertexSet cops) : cops_(std::move(cops)) { (void)g; }

    std::string name() const override { return "hall"; }

    std::vector<Vertex> place(const Graph&, int k, const Position&) override {
        auto vec = cops_.to_vector();
        if (k != static_cast<int>(vec.size()))
            throw std::invalid_argument("hall strategy placed with wrong cop count");
        step_ = 0;
        planned_ = false;
        return vec;
    }

    std::vector<Vertex> step(const Graph& g, const Position& pos) override {
        if (!planned_) {
            planned_ = true;
            auto r = min_trap_radius(g, cops_, *pos.robber);
            if (r) plan_ = build_trap_plan(g, cops_, *pos.robber, *r);
        }
        ++step_;
        std::vector<Vertex> out = pos.cops;
        if (!plan_) return out;  // no sealing radius: hold
        for (size_t j = 0; j < out.size() && j < plan_->paths.size(); ++j) {
            const auto& path = plan_->paths[j];
            if (path.empty()) continue;
            size_t idx = std::min<size_t>(step_, path.size() - 1);
            out[j] = path[idx];
        }
        return out;
    }

private:
    VertexSet cops_;
    std::optional<TrapPlan> plan_;
    bool planned_ = false;
    std::size_t step_ = 0;
};

}  // namespace

std::unique_ptr<CopStrategy> execute_trap(const Graph& g, const VertexSet& cops,
                                          const TrapPlan& plan) {
    for (Vertex c : plan.cops) g.check_vertex(c);
    if (plan.cops != cops.to_vector())
        throw std::invalid_argument("trap plan does not match the cop set");
    return std::make_unique<TrapExecutor>(cops, plan);
}

std::unique_ptr<CopStrategy> make_hall_trap_cop(const Graph& g, const VertexSet& cops) {
    return std::make_unique<LazyHallTrap>(g, cops);
}

}  // namespace pursuit
