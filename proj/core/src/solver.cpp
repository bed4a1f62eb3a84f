#include "pursuit/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace pursuit {

std::uint64_t default_state_budget() {
    if (const char* env = std::getenv("PURSUIT_SOLVER_STATE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 40'000'000ULL;
}

MultisetIndexer::MultisetIndexer(int n, int k) : n_(n), k_(k) {
    table_.assign(k + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (int j = 0; j <= n; ++j) table_[0][j] = 1;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n; ++j) {
            unsigned __int128 t =
                static_cast<unsigned __int128>(table_[i - 1][j]) + table_[i][j - 1];
            table_[i][j] = t > std::numeric_limits<std::uint64_t>::max()
                               ? std::numeric_limits<std::uint64_t>::max()
                               : static_cast<std::uint64_t>(t);
        }
}

std::uint64_t MultisetIndexer::id_of(std::span<const Vertex> m) const {
    // rank = number of lexicographically smaller sorted multisets
    std::uint64_t rank = 0;
    int lo = 0;
    int k = k_;
    for (Vertex x : m) {
        // multisets of size k over lo..n-1 whose minimum is < x
        rank += table_[k][n_ - lo] - table_[k][n_ - x];
        lo = x;
        --k;
    }
    return rank;
}

std::vector<Vertex> MultisetIndexer::multiset_of(std::uint64_t id) const {
    std::vector<Vertex> out;
    out.reserve(k_);
    int lo = 0;
    for (int k = k_; k > 0; --k) {
        // advance the minimum while the id skips past blocks starting at lo
        int x = lo;
        for (;;) {
            // multisets of size k over x..n-1 that contain x: count(k-1, n-x)
            std::uint64_t with_x = table_[k - 1][n_ - x];
            if (id < with_x) break;
            id -= with_x;
            ++x;
        }
        out.push_back(x);
        lo = x;
    }
    return out;
}

namespace {

/// Distinct successor multisets when every cop moves to a closed neighbor.
void enumerate_cop_moves(const Graph& g, const std::vector<Vertex>& cops,
                         const MultisetIndexer& indexer,
                         std::vector<std::uint32_t>& out_ids) {
    out_ids.clear();
    int k = static_cast<int>(cops.size());
    std::vector<Vertex> tuple(k);
    std::vector<Vertex> sorted(k);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            sorted.assign(tuple.begin(), tuple.end());
            std::sort(sorted.begin(), sorted.end());
            out_ids.push_back(static_cast<std::uint32_t>(indexer.id_of(sorted)));
            return;
        }
        tuple[i] = cops[i];
        self(self, i + 1);
        for (Vertex v : g.neighbors(cops[i])) {
            tuple[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out_ids.begin(), out_ids.end());
    out_ids.erase(std::unique(out_ids.begin(), out_ids.end()), out_ids.end());
}

}  // namespace

SolverTable SolverTable::solve(const Graph& g, int k, const SolverBudget& budget) {
    if (k < 1) throw std::invalid_argument("need at least one cop");
    if (!g.is_connected()) throw std::invalid_argument("solver expects a connected graph");
    const int n = g.vertex_count();

    SolverTable table;
    table.n_ = n;
    table.k_ = k;
    table.indexer_ = std::make_shared<MultisetIndexer>(n, k);
    const MultisetIndexer& indexer = *table.indexer_;

    unsigned __int128 states = static_cast<unsigned __int128>(indexer.count()) * n * 2;
    if (states > budget.max_states)
        throw BudgetExceeded("state space " + std::to_string(static_cast<double>(states)) +
                             " exceeds budget " + std::to_string(budget.max_states));
    const std::uint64_t num_states = static_cast<std::uint64_t>(states);
    const std::uint64_t num_msets = indexer.count();

    table.depth_.assign(num_states, kRobberWin);
    // counters only exist for robber-to-move states (odd ids, index id >> 1)
    std::vector<std::uint16_t> counter(num_states / 2, 0);
    std::vector<std::uint64_t> queue;
    queue.reserve(num_states / 4);

    auto label = [&](std::uint64_t id, std::uint32_t d) {
        table.depth_[id] = d;
        queue.push_back(id);
    };

    // Terminal capture states: robber on a cop, either side to move.
    {
        std::vector<Vertex> mset;
        for (std::uint64_t mc = 0; mc < num_msets; ++mc) {
            mset = indexer.multiset_of(mc);
            Vertex prev = -1;
            for (Vertex c : mset) {
                if (c == prev) continue;
                prev = c;
                label(table.state_id(mc, c, Side::Cops), 0);
                label(table.state_id(mc, c, Side::Robber), 0);
            }
        }
    }

    // Optional cache of Moves(C) per multiset; rebuild-per-use otherwise.
    double branch_estimate = 1.0;
    {
        double avg = 1.0 + 2.0 * g.edge_count() / std::max(1, n);
        for (int i = 0; i < k; ++i) branch_estimate *= avg;
    }
    const bool use_cache = static_cast<double>(num_msets) * branch_estimate < 2.5e7;
    std::vector<std::vector<std::uint32_t>> moves_cache;
    if (use_cache) moves_cache.resize(num_msets);
    std::vector<char> moves_cached(use_cache ? num_msets : 0, 0);
    std::vector<std::uint32_t> scratch_moves;

    auto moves_of = [&](std::uint64_t mc,
                        const std::vector<Vertex>& mset) -> const std::vector<std::uint32_t>& {
        if (use_cache) {
            if (!moves_cached[mc]) {
                enumerate_cop_moves(g, mset, indexer, moves_cache[mc]);
                moves_cached[mc] = 1;
            }
            return moves_cache[mc];
        }
        enumerate_cop_moves(g, mset, indexer, scratch_moves);
        return scratch_moves;
    };

    // FIFO retrograde pass; FIFO order yields exact optimal capture depths.
    for (std::uint64_t head = 0; head < queue.size(); ++head) {
        const std::uint64_t id = queue[head];
        const std::uint32_t d = table.depth_[id];
        const bool robber_to_move = id & 1;
        const Vertex r = static_cast<Vertex>((id >> 1) % n);
        const std::uint64_t mc = (id >> 1) / n;

        if (robber_to_move) {
            // predecessors: cop-to-move states that can reach this multiset
            const std::vector<Vertex> mset = indexer.multiset_of(mc);
            for (std::uint32_t pre_mc : moves_of(mc, mset)) {
                std::uint64_t pre = (static_cast<std::uint64_t>(pre_mc) * n + r) * 2;
                if (table.depth_[pre] == kRobberWin) label(pre, d + 1);
            }
        } else {
            // predecessors: robber-to-move states at a neighbor (or here)
            auto consider = [&](Vertex r0) {
                std::uint64_t pre = (mc * n + r0) * 2 + 1;
                if (table.depth_[pre] != kRobberWin) return;
                std::uint16_t& cnt = counter[pre >> 1];
                if (cnt == 0) cnt = static_cast<std::uint16_t>(g.degree(r0) + 1);
                if (--cnt == 0) label(pre, d + 1);
            };
            consider(r);
            for (Vertex r0 : g.neighbors(r)) consider(r0);
        }
    }

    // Placement quantifier: first multiset winning against every robber reply.
    for (std::uint64_t mc = 0; mc < num_msets; ++mc) {
        bool wins = true;
        for (Vertex r = 0; r < n && wins; ++r)
            wins = table.depth_[(mc * n + r) * 2] != kRobberWin;
        if (wins) {
            table.winning_placement_ = indexer.multiset_of(mc);
            break;
        }
    }
    return table;
}

std::uint32_t SolverTable::depth(std::span<const Vertex> cops_sorted, Vertex robber,
                                 Side to_move) const {
    return depth_[state_id(indexer_->id_of(cops_sorted), robber, to_move)];
}

bool SolverTable::cop_win(std::span<const Vertex> cops_sorted, Vertex robber, Side to_move) const {
    return depth(cops_sorted, robber, to_move) != kRobberWin;
}

bool is_copwin(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("is_copwin expects a connected graph");
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("empty graph");
    // closed neighborhoods as bit masks over the remaining vertices
    const int words = (n + 63) / 64;
    std::vector<std::uint64_t> nb(static_cast<size_t>(n) * words, 0);
    auto set_bit = [&](int row, int v) { nb[row * words + (v >> 6)] |= 1ULL << (v & 63); };
    auto clear_bit = [&](int row, int v) { nb[row * words + (v >> 6)] &= ~(1ULL << (v & 63)); };
    for (Vertex v = 0; v < n; ++v) {
        set_bit(v, v);
        for (Vertex w : g.neighbors(v)) set_bit(v, w);
    }
    std::vector<bool> alive(n, true);
    int remaining = n;
    bool progress = true;
    while (remaining > 1 && progress) {
        progress = false;
        for (Vertex u = 0; u < n && remaining > 1; ++u) {
            if (!alive[u]) continue;
            for (Vertex v = 0; v < n; ++v) {
                if (u == v || !alive[v]) continue;
                bool dominated = true;
                for (int w = 0; w < words && dominated; ++w)
                    dominated = (nb[u * words + w] & ~nb[v * words + w]) == 0;
                if (dominated) {
                    alive[u] = false;
                    --remaining;
                    for (Vertex x = 0; x < n; ++x)
                        if (alive[x]) clear_bit(x, u);
                    progress = true;
                    break;
                }
            }
        }
    }
    return remaining == 1;
}

bool k_cops_win(const Graph& g, int k, const SolverBudget& budget) {
    return SolverTable::solve(g, k, budget).placement_wins();
}

std::optional<int> cop_number_exact(const Graph& g, int k_max, const SolverBudget& budget) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    for (int k = 1; k <= k_max; ++k)
        if (k_cops_win(g, k, budget)) return k;
    return std::nullopt;
}

namespace {

class TableCopStrategy final : public CopStrategy {
public:
    explicit TableCopStrategy(std::shared_ptr<const SolverTable> table)
        : table_(std::move(table)) {}

    std::string name() const override { return "optimal"; }

    std::vector<Vertex> place(const Graph& g, int k, const Position&) override {
        if (k != table_->cop_count()) throw std::invalid_argument("table solved for different k");
        if (!table_->placement_wins())
            throw std::invalid_argument("no winning placement for this cop count");
        (void)g;
        return table_->winning_placement();
    }

    std::vector<Vertex> step(const Graph& g, const Position& pos) override {
        const Vertex r = *pos.robber;
        const int k = static_cast<int>(pos.cops.size());
        std::vector<Vertex> best_tuple = pos.cops;
        std::uint32_t best_depth = SolverTable::kRobberWin;
        std::vector<Vertex> tuple(pos.cops);
        std::vector<Vertex> sorted(k);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == k) {
                sorted.assign(tuple.begin(), tuple.end());
                std::sort(sorted.begin(), sorted.end());
                std::uint32_t d = table_->depth(sorted, r, Side::Robber);
                if (d < best_depth ||
                    (d == best_depth && std::lexicographical_compare(
                                            tuple.begin(), tuple.end(), best_tuple.begin(),
                                            best_tuple.end()))) {
                    best_depth = d;
                    best_tuple = tuple;
                }
                return;
            }
            for (Vertex v : legal_moves(g, pos.cops[i])) {
                tuple[i] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        return best_tuple;
    }

private:
    std::shared_ptr<const SolverTable> table_;
};

class TableRobberStrategy final : public RobberStrategy {
public:
    explicit TableRobberStrategy(std::shared_ptr<const SolverTable> table)
        : table_(std::move(table)) {}

    std::string name() const override { return "optimal"; }

    Vertex place(const Graph& g, const Position& pos) override {
        std::vector<Vertex> cops = pos.cops;
        std::sort(cops.begin(), cops.end());
        Vertex best = 0;
        std::uint32_t best_depth = 0;
        bool have_win = false;
        for (Vertex r = 0; r < g.vertex_count(); ++r) {
            std::uint32_t d = table_->depth(cops, r, Side::Cops);
            if (d == SolverTable::kRobberWin) {
                if (!have_win) {
                    have_win = true;
                    best = r;
                }
            } else if (!have_win && d > best_depth) {
                best_depth = d;
                best = r;
            }
        }
        return best;
    }

    Vertex step(const Graph& g, const Position& pos) override {
        std::vector<Vertex> cops = pos.cops;
        std::sort(cops.begin(), cops.end());
        Vertex best = *pos.robber;
        std::uint32_t best_depth = 0;
        bool have_win = false;
        bool first = true;
        for (Vertex r : legal_moves(g, *pos.robber)) {
            std::uint32_t d = table_->depth(cops, r, Side::Cops);
            if (d == SolverTable::kRobberWin) {
                if (!have_win) {
                    have_win = true;
                    best = r;
                }
            } else if (!have_win && (first || d > best_depth)) {
                best_depth = d;
                best = r;
            }
            first = false;
        }
        return best;
    }

private:
    std::shared_ptr<const SolverTable> table_;
};

}  // namespace

std::shared_ptr<const SolverTable> make_solver_table(const Graph& g, int k,
                                                     const SolverBudget& budget) {
    return std::make_shared<const SolverTable>(SolverTable::solve(g, k, budget));
}

std::unique_ptr<CopStrategy> table_cop_strategy(const Graph&,
                                                std::shared_ptr<const SolverTable> table) {
    return std::make_unique<TableCopStrategy>(std::move(table));
}

std::unique_ptr<RobberStrategy> table_robber_strategy(const Graph&,
                                                      std::shared_ptr<const SolverTable> table) {
    return std::make_unique<TableRobberStrategy>(std::move(table));
}

std::unique_ptr<CopStrategy> extract_winning_cop_strategy(const Graph& g, int k,
                                                          const SolverBudget& budget) {
    auto table = make_solver_table(g, k, budget);
    if (!table->placement_wins())
        throw std::invalid_argument(std::to_string(k) + " cops do not win on this graph");
    return table_cop_strategy(g, std::move(table));
}

std::unique_ptr<RobberStrategy> extract_optimal_robber_strategy(const Graph& g, int k,
                                                                const SolverBudget& budget) {
    return table_robber_strategy(g, make_solver_table(g, k, budget));
}

}  // namespace pursuit
