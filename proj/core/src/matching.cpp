#include "pursuit/matching.hpp"

#include <limits>
#include <queue>

namespace pursuit {

namespace {
constexpr int kInf = std::numeric_limits<int>::max();
}

bool BipartiteMatcher::bfs() {
    std::queue<int> q;
    dist_.assign(left_, kInf);
    for (int l = 0; l < left_; ++l)
        if (match_left_[l] < 0) {
            dist_[l] = 0;
            q.push(l);
        }
    bool found = false;
    while (!q.empty()) {
        int l = q.front();
        q.pop();
        for (int r : adj_[l]) {
            int l2 = match_right_[r];
            if (l2 < 0) {
                found = true;
            } else if (dist_[l2] == kInf) {
                dist_[l2] = dist_[l] + 1;
                q.push(l2);
            }
        }
    }
    return found;
}

bool BipartiteMatcher::dfs(int l) {
    for (int r : adj_[l]) {
        int l2 = match_right_[r];
        if (l2 < 0 || (dist_[l2] == dist_[l] + 1 && dfs(l2))) {
            match_left_[l] = r;
            match_right_[r] = l;
            return true;
        }
    }
    dist_[l] = kInf;
    return false;
}

int BipartiteMatcher::solve() {
    match_left_.assign(left_, -1);
    match_right_.assign(right_, -1);
    int matching = 0;
    while (bfs())
        for (int l = 0; l < left_; ++l)
            if (match_left_[l] < 0 && dfs(l)) ++matching;
    return matching;
}

}  // namespace pursuit
