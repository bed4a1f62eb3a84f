#include "pursuit/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pursuit/rng.hpp"

namespace pursuit {

std::vector<double> WalkWeightConfig::make_weights(int d, int r) {
    std::vector<double> w(r + 1);
    for (int i = 0; i <= r; ++i)
        w[i] = std::pow(static_cast<double>(d - 1), -i) * std::exp(static_cast<double>(i) / r);
    return w;
}

WalkWeightConfig make_walk_weight_config(const Graph& g, int d, int r,
                                         std::optional<VertexSet> roam) {
    if (d < 3) throw std::invalid_argument("walk-weight robber needs minimum degree d >= 3");
    if (r < 1) throw std::invalid_argument("walk-weight profile depth must be >= 1");
    WalkWeightConfig cfg;
    cfg.roam = roam ? std::move(*roam) : min_degree_peel(g, d);
    cfg.d = d;
    cfg.r = r;
    if (cfg.roam.empty())
        throw std::invalid_argument("roaming subgraph is empty (peel removed everything)");
    if (induced_min_degree(g, cfg.roam) < d)
        throw std::invalid_argument("roaming subgraph has minimum degree below d");
    cfg.weights = WalkWeightConfig::make_weights(d, r);
    for (int i = 0; i + 1 <= r; ++i)
        if (!(cfg.weights[i + 1] < cfg.weights[i]))
            throw std::invalid_argument("weights not strictly decreasing; need r log(d-1) > 1");
    return cfg;
}

namespace {

std::vector<int> cop_multiplicity(const Graph& g, const std::vector<Vertex>& cops) {
    std::vector<int> mult(g.vertex_count(), 0);
    for (Vertex c : cops) {
        g.check_vertex(c);
        ++mult[c];
    }
    return mult;
}

double potential_from(const Graph& g, const WalkWeightConfig& cfg, Vertex robber,
                      const std::vector<int>& cop_mult, std::optional<DirectedEdge> last_edge) {
    WalkDp dp(g, robber, last_edge);
    double w = cfg.weights[0] * static_cast<double>(dp.ends_in_weighted(cop_mult));
    for (int i = 1; i <= cfg.r; ++i) {
        dp.step();
        dp.step();
        std::uint64_t count = dp.ends_in_weighted(cop_mult);
        if (count == kWalkCountSaturated) return std::numeric_limits<double>::infinity();
        w += cfg.weights[i] * static_cast<double>(count);
    }
    return w;
}

// Weighted mass of the walks that survive standing at `candidate` when the
// cops move next: a length 2i-1 remnant walk becomes a length 2(i-1) walk of
// the next W, so it carries weight w_{i-1}; an adjacent cop (one length-1
// walk) scores w_0 = 1, the capture level. Even-length counts evaluated at
// the new vertex would be parity-blind on bipartite graphs (an adjacent cop
// contributes nothing), so candidate ranking uses these odd remnant counts.
double move_score(const Graph& g, const WalkWeightConfig& cfg, Vertex candidate,
                  const std::vector<int>& cop_mult, std::optional<DirectedEdge> forbidden_first) {
    double w = cop_mult[candidate] > 0 ? cfg.weights[0] : 0.0;
    WalkDp dp(g, candidate, forbidden_first);
    for (int i = 1; i <= cfg.r; ++i) {
        while (dp.length() < 2 * i - 1) dp.step();
        std::uint64_t count = dp.ends_in_weighted(cop_mult);
        if (count == kWalkCountSaturated) return std::numeric_limits<double>::infinity();
        w += cfg.weights[i - 1] * static_cast<double>(count);
    }
    return w;
}

}  // namespace

double robber_potential(const Graph& g, const WalkWeightConfig& cfg, const Position& pos,
                        std::optional<DirectedEdge> last_edge) {
    if (!pos.robber) throw std::invalid_argument("robber not placed");
    if (!cfg.roam.contains(*pos.robber))
        throw std::invalid_argument("robber outside the roaming subgraph");
    return potential_from(g, cfg, *pos.robber, cop_multiplicity(g, pos.cops), last_edge);
}

Vertex robber_walk_weight_move(const Graph& g, const WalkWeightConfig& cfg, const Position& pos,
                               std::optional<Vertex> previous_vertex, std::string* fallback_note) {
    const Vertex at = *pos.robber;
    std::vector<Vertex> candidates;
    for (Vertex v : g.neighbors(at)) {
        if (!cfg.roam.contains(v)) continue;
        if (previous_vertex && v == *previous_vertex) continue;
        candidates.push_back(v);
    }
    if (candidates.empty() && previous_vertex && cfg.roam.contains(*previous_vertex) &&
        g.has_edge(at, *previous_vertex)) {
        candidates.push_back(*previous_vertex);
        if (fallback_note) *fallback_note = "walkweight: backtracking fallback";
    }
    if (candidates.empty()) {
        if (fallback_note) *fallback_note = "walkweight: stay fallback";
        return at;
    }

    auto cop_mult = cop_multiplicity(g, pos.cops);
    // distances to the nearest cop, for tie-breaking
    std::vector<int> cop_dist(g.vertex_count(), -1);
    {
        std::vector<Vertex> queue;
        for (Vertex c : pos.cops)
            if (cop_dist[c] != 0) {
                cop_dist[c] = 0;
                queue.push_back(c);
            }
        for (size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex v : g.neighbors(u))
                if (cop_dist[v] < 0) {
                    cop_dist[v] = cop_dist[u] + 1;
                    queue.push_back(v);
                }
        }
    }

    // A candidate with a cop at distance <= 1 is lost on the next half-move;
    // in the proof's W < 1 regime such candidates are exactly the ones the
    // minimization rejects, so rank (lethal, score) lexicographically.
    auto lethal = [&](Vertex v) { return cop_dist[v] >= 0 && cop_dist[v] <= 1; };
    Vertex best = candidates.front();
    double best_w = std::numeric_limits<double>::infinity();
    bool best_lethal = true;
    for (Vertex v : candidates) {
        double w = move_score(g, cfg, v, cop_mult, DirectedEdge{v, at});
        bool v_lethal = lethal(v);
        bool better = false;
        if (v_lethal != best_lethal) {
            better = !v_lethal;
        } else if (w < best_w) {
            better = true;
        } else if (w == best_w) {
            if (cop_dist[v] > cop_dist[best]) better = true;
            else if (cop_dist[v] == cop_dist[best] && v < best) better = true;
        }
        if (better) {
            best_w = w;
            best = v;
            best_lethal = v_lethal;
        }
    }
    return best;
}

Vertex robber_random_placement(const Graph& g, const WalkWeightConfig& cfg,
                               const std::vector<Vertex>& cops, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("placement trials must be >= 1");
    if (cfg.roam.empty()) throw std::invalid_argument("roaming subgraph is empty");
    std::vector<Vertex> roam = cfg.roam.to_vector();
    Rng rng = make_rng(seed, "walkweight-placement");
    auto cop_mult = cop_multiplicity(g, cops);
    auto lethal = [&](Vertex v) {
        if (cop_mult[v] > 0) return true;
        for (Vertex w : g.neighbors(v))
            if (cop_mult[w] > 0) return true;
        return false;
    };
    Vertex best = -1;
    double best_w = std::numeric_limits<double>::infinity();
    bool best_lethal = true;
    for (int t = 0; t < trials; ++t) {
        Vertex v = roam[uniform_below(rng, roam.size())];
        double w = move_score(g, cfg, v, cop_mult, {});
        bool v_lethal = lethal(v);
        bool better = best < 0;
        if (!better && v_lethal != best_lethal) better = !v_lethal;
        else if (!better && v_lethal == best_lethal) better = w < best_w;
        if (better) {
            best = v;
            best_w = w;
            best_lethal = v_lethal;
        }
    }
    return best;
}

namespace {

class WalkWeightRobber final : public RobberStrategy {
public:
    WalkWeightRobber(const Graph& g, WalkWeightConfig cfg, int trials, std::uint64_t seed)
        : g_(g), cfg_(std::move(cfg)), trials_(trials), seed_(seed) {}

    std::string name() const override { return "walkweight"; }

    Vertex place(const Graph& g, const Position& pos) override {
        prev_.reset();
        return robber_random_placement(g, cfg_, pos.cops, trials_, seed_);
    }

    Vertex step(const Graph& g, const Position& pos) override {
        std::string note;
        Vertex next = robber_walk_weight_move(g, cfg_, pos, prev_, &note);
        if (!note.empty()) notes_.push_back(note);
        prev_ = *pos.robber;
        return next;
    }

    std::vector<std::string> take_notes() override {
        std::vector<std::string> out;
        out.swap(notes_);
        return out;
    }

private:
    const Graph& g_;
    WalkWeightConfig cfg_;
    int trials_;
    std::uint64_t seed_;
    std::optional<Vertex> prev_;
    std::vector<std::string> notes_;
};

class GreedyCop final : public CopStrategy {
public:
    explicit GreedyCop(std::uint64_t seed) : seed_(seed) {}

    std::string name() const override { return "greedy"; }

    std::vector<Vertex> place(const Graph& g, int k, const Position&) override {
        Rng rng = make_rng(seed_, "greedy-cop-placement");
        std::vector<Vertex> out(k);
        for (int i = 0; i < k; ++i)
            out[i] = static_cast<Vertex>(uniform_below(rng, g.vertex_count()));
        return out;
    }

    std::vector<Vertex> step(const Graph& g, const Position& pos) override {
        auto dist = g.distances_from(*pos.robber);
        std::vector<Vertex> out;
        out.reserve(pos.cops.size());
        for (Vertex c : pos.cops) {
            Vertex best = c;
            for (Vertex v : g.neighbors(c))
                if (dist[v] >= 0 && (dist[best] < 0 || dist[v] < dist[best] ||
                                     (dist[v] == dist[best] && v < best)))
                    best = v;
            out.push_back(best);
        }
        return out;
    }

private:
    std::uint64_t seed_;
};

class RandomRobber final : public RobberStrategy {
public:
    explicit RandomRobber(std::uint64_t seed) : rng_(make_rng(seed, "random-robber")) {}

    std::string name() const override { return "random"; }

    Vertex place(const Graph& g, const Position&) override {
        return static_cast<Vertex>(uniform_below(rng_, g.vertex_count()));
    }

    Vertex step(const Graph& g, const Position& pos) override {
        auto moves = legal_moves(g, *pos.robber);
        return moves[uniform_below(rng_, moves.size())];
    }

private:
    Rng rng_;
};

class AvoidRobber final : public RobberStrategy {
public:
    std::string name() const override { return "avoid"; }

    Vertex place(const Graph& g, const Position& pos) override {
        auto dist = nearest_cop_distance(g, pos.cops);
        Vertex best = 0;
        for (Vertex v = 1; v < g.vertex_count(); ++v)
            if (dist[v] > dist[best]) best = v;
        return best;
    }

    Vertex step(const Graph& g, const Position& pos) override {
        auto dist = nearest_cop_distance(g, pos.cops);
        Vertex best = *pos.robber;
        for (Vertex v : legal_moves(g, *pos.robber))
            if (dist[v] > dist[best] || (dist[v] == dist[best] && v < best)) best = v;
        return best;
    }

private:
    static std::vector<int> nearest_cop_distance(const Graph& g, const std::vector<Vertex>& cops) {
        std::vector<int> dist(g.vertex_count(), -1);
        std::vector<Vertex> queue;
        for (Vertex c : cops)
            if (dist[c] != 0) {
                dist[c] = 0;
                queue.push_back(c);
            }
        for (size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex v : g.neighbors(u))
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
        }
        return dist;
    }
};

/// 2k always-moving cops simulating k cops: pair i keeps its primary on the
/// base strategy's position with its partner adjacent; a base "stay" becomes
/// a swap along the shared edge.
class PairedAlwaysMoveCop final : public CopStrategy {
public:
    PairedAlwaysMoveCop(std::unique_ptr<CopStrategy> base, int base_k)
        : base_(std::move(base)), base_k_(base_k) {}

    std::string name() const override { return "paired:" + base_->name(); }

    std::vector<Vertex> place(const Graph& g, int k, const Position& pos) override {
        if (k != 2 * base_k_) throw std::invalid_argument("paired transform needs 2k cops");
        std::vector<Vertex> primary = base_->place(g, base_k_, pos);
        role_.assign(base_k_, 0);
        std::vector<Vertex> out;
        for (Vertex p : primary) {
            out.push_back(p);
            auto nb = g.neighbors(p);
            out.push_back(nb.empty() ? p : nb.front());
        }
        return out;
    }

    std::vector<Vertex> step(const Graph& g, const Position& pos) override {
        Position virt = pos;
        virt.cops.clear();
        for (int i = 0; i < base_k_; ++i) virt.cops.push_back(pos.cops[2 * i + role_[i]]);
        std::vector<Vertex> want = base_->step(g, virt);
        std::vector<Vertex> out(pos.cops.size());
        for (int i = 0; i < base_k_; ++i) {
            int pi = 2 * i + role_[i];       // cop holding the strategy position
            int si = 2 * i + (1 - role_[i]);
            Vertex p = pos.cops[pi];
            Vertex s = pos.cops[si];
            if (want[i] != p) {
                out[pi] = want[i];
                out[si] = p;                 // partner takes the vacated spot
            } else {
                out[pi] = s;                 // base stays: swap along the shared edge
                out[si] = p;
                role_[i] = 1 - role_[i];
            }
        }
        return out;
    }

private:
    std::unique_ptr<CopStrategy> base_;
    int base_k_;
    std::vector<int> role_;
};

}  // namespace

std::unique_ptr<RobberStrategy> make_walk_weight_robber(const Graph& g, const WalkWeightConfig& cfg,
                                                        int placement_trials, std::uint64_t seed) {
    return std::make_unique<WalkWeightRobber>(g, cfg, placement_trials, seed);
}

std::unique_ptr<CopStrategy> make_greedy_cop(std::uint64_t seed) {
    return std::make_unique<GreedyCop>(seed);
}

std::unique_ptr<RobberStrategy> make_random_robber(std::uint64_t seed) {
    return std::make_unique<RandomRobber>(seed);
}

std::unique_ptr<RobberStrategy> make_avoid_robber() {
    return std::make_unique<AvoidRobber>();
}

std::unique_ptr<CopStrategy> make_paired_always_move(std::unique_ptr<CopStrategy> base,
                                                     int base_k) {
    return std::make_unique<PairedAlwaysMoveCop>(std::move(base), base_k);
}

}  // namespace pursuit
