#pragma once

#include <vector>

namespace pursuit {

/// Hopcroft-Karp maximum matching on a bipartite graph given as left-side
/// adjacency lists. O(E sqrt(V)).
class BipartiteMatcher {
public:
    BipartiteMatcher(int left, int right) : left_(left), right_(right), adj_(left) {}

    void add_edge(int l, int r) { adj_[l].push_back(r); }

    /// Size of a maximum matching.
    int solve();

    /// After solve(): matched right vertex per left vertex, -1 if unmatched.
    const std::vector<int>& match_left() const { return match_left_; }

private:
    int left_;
    int right_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_left_;
    std::vector<int> match_right_;
    std::vector<int> dist_;

    bool bfs();
    bool dfs(int l);
};

}  // namespace pursuit
