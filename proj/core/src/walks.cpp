#include "pursuit/walks.hpp"

#include <algorithm>
#include <stdexcept>

namespace pursuit {

namespace {

using u128 = unsigned __int128;

inline std::uint64_t saturate(u128 x, bool& flag) {
    if (x > static_cast<u128>(kWalkCountSaturated - 1)) {
        flag = true;
        return kWalkCountSaturated;
    }
    return static_cast<std::uint64_t>(x);
}

}  // namespace

WalkDp::WalkDp(const Graph& g, Vertex source, std::optional<DirectedEdge> forbidden_first,
               const VertexSet* mask)
    : g_(g), source_(source), mask_(mask), forbidden_first_(forbidden_first) {
    g.check_vertex(source);
    if (forbidden_first_) {
        g.check_vertex(forbidden_first_->from);
        g.check_vertex(forbidden_first_->to);
        if (g.directed_edge_id(forbidden_first_->from, forbidden_first_->to) < 0)
            throw std::invalid_argument("forbidden first edge is not an edge of the graph");
    }
    if (mask_ && !mask_->contains(source))
        throw std::invalid_argument("walk source outside the vertex mask");
    edge_counts_.assign(g.directed_edge_count(), 0);
}

void WalkDp::step() {
    const int n = g_.vertex_count();
    if (!started_) {
        // length 0 -> 1: one walk per outgoing edge of the source
        for (Vertex v : g_.neighbors(source_)) {
            if (!allowed(v)) continue;
            if (forbidden_first_ && forbidden_first_->from == source_ && forbidden_first_->to == v)
                continue;
            edge_counts_[g_.directed_edge_id(source_, v)] = 1;
        }
        started_ = true;
        length_ = 1;
        return;
    }
    std::vector<std::uint64_t> next(edge_counts_.size(), 0);
    for (Vertex v = 0; v < n; ++v) {
        if (!allowed(v)) continue;
        auto nb = g_.neighbors(v);
        // next(v -> w) = sum over u in N(v), u != w of cur(u -> v)
        for (size_t i = 0; i < nb.size(); ++i) {
            Vertex w = nb[i];
            if (!allowed(w)) continue;
            u128 sum = 0;
            for (Vertex u : nb) {
                if (u == w || !allowed(u)) continue;
                sum += edge_counts_[g_.directed_edge_id(u, v)];
            }
            next[g_.edge_offset(v) + i] = saturate(sum, saturated_);
        }
    }
    edge_counts_.swap(next);
    ++length_;
}

std::uint64_t WalkDp::ends_at(Vertex v) const {
    g_.check_vertex(v);
    if (length_ == 0) return v == source_ ? 1 : 0;
    if (saturated_) return kWalkCountSaturated;
    u128 sum = 0;
    for (Vertex u : g_.neighbors(v)) {
        if (!allowed(u)) continue;
        sum += edge_counts_[g_.directed_edge_id(u, v)];
    }
    bool flag = false;
    return saturate(sum, flag);
}

std::uint64_t WalkDp::ends_in(const VertexSet& targets) const {
    if (saturated_) return kWalkCountSaturated;
    u128 sum = 0;
    targets.for_each([&](Vertex v) { sum += ends_at(v); });
    bool flag = false;
    return saturate(sum, flag);
}

std::uint64_t WalkDp::ends_in_weighted(const std::vector<int>& multiplicity) const {
    if (saturated_) return kWalkCountSaturated;
    u128 sum = 0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
        if (multiplicity[v] > 0) sum += static_cast<u128>(ends_at(v)) * multiplicity[v];
    bool flag = false;
    return saturate(sum, flag);
}

std::uint64_t count_nb_walks(const Graph& g, Vertex x, const VertexSet& targets, int length,
                             std::optional<DirectedEdge> forbidden_first) {
    if (length < 0) throw std::invalid_argument("negative walk length");
    WalkDp dp(g, x, forbidden_first);
    for (int t = 0; t < length; ++t) dp.step();
    return dp.ends_in(targets);
}

WalkProfile walk_profile(const Graph& g, Vertex x, const VertexSet& targets, int r,
                         std::optional<DirectedEdge> forbidden_first) {
    if (r < 0) throw std::invalid_argument("negative profile depth");
    WalkProfile profile;
    profile.source = x;
    profile.targets = targets;
    profile.forbidden_first = forbidden_first;
    WalkDp dp(g, x, forbidden_first);
    profile.counts.push_back(dp.ends_in(targets));
    for (int i = 1; i <= r; ++i) {
        dp.step();
        dp.step();
        profile.counts.push_back(dp.ends_in(targets));
    }
    profile.saturated = dp.saturated() ||
                        std::any_of(profile.counts.begin(), profile.counts.end(),
                                    [](std::uint64_t c) { return c == kWalkCountSaturated; });
    return profile;
}

WalkProfile m_profile_singleton(const Graph& g, const VertexSet& restrict_to, int r) {
    if (restrict_to.empty()) throw std::invalid_argument("empty restriction set");
    if (r < 0) throw std::invalid_argument("negative profile depth");
    WalkProfile profile;
    profile.source = -1;
    profile.targets = VertexSet(g.vertex_count());
    profile.counts.assign(r + 1, 0);
    bool saturated = false;
    // Walk counts between a pair are symmetric under reversal, so running the
    // DP from each x in the restriction and maximizing over end vertices
    // covers all (x, y) pairs.
    restrict_to.for_each([&](Vertex x) {
        WalkDp dp(g, x);
        for (Vertex y = 0; y < g.vertex_count(); ++y)
            profile.counts[0] = std::max(profile.counts[0], dp.ends_at(y));
        for (int i = 1; i <= r; ++i) {
            dp.step();
            dp.step();
            for (Vertex y = 0; y < g.vertex_count(); ++y)
                profile.counts[i] = std::max(profile.counts[i], dp.ends_at(y));
        }
        saturated = saturated || dp.saturated();
    });
    profile.saturated = saturated ||
                        std::any_of(profile.counts.begin(), profile.counts.end(),
                                    [](std::uint64_t c) { return c == kWalkCountSaturated; });
    return profile;
}

}  // namespace pursuit
