#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

/// Resource errors carry this type so callers can distinguish "too big"
/// from "no" (CLI exit code 3).
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Default from PURSUIT_SOLVER_STATE_BUDGET when set, else 4e7 states.
std::uint64_t default_state_budget();

struct SolverBudget {
    std::uint64_t max_states = default_state_budget();
};

/// Colex-style indexing of sorted k-multisets over 0..n-1; C(n+k-1, k) ids.
class MultisetIndexer {
public:
    MultisetIndexer(int n, int k);
    std::uint64_t count() const { return table_[k_][n_]; }
    std::uint64_t count(int n, int k) const { return table_[k][n]; }
    std::uint64_t id_of(std::span<const Vertex> sorted_mset) const;
    std::vector<Vertex> multiset_of(std::uint64_t id) const;
    int k() const { return k_; }

private:
    int n_;
    int k_;
    std::vector<std::vector<std::uint64_t>> table_;  // table_[k][n] = #multisets
};

/// Retrograde win/loss table for the game with k interchangeable cops.
/// States are (sorted cop multiset, robber vertex, side to move); capture
/// states have depth 0 and labels propagate backwards until the fixed point.
/// depth = number of half-moves to forced capture under optimal play;
/// kRobberWin marks states the cops cannot win.
class SolverTable {
public:
    static constexpr std::uint32_t kRobberWin = std::numeric_limits<std::uint32_t>::max();

    static SolverTable solve(const Graph& g, int k, const SolverBudget& budget = {});

    int cop_count() const { return k_; }
    std::uint64_t state_count() const { return depth_.size(); }

    std::uint32_t depth(std::span<const Vertex> cops_sorted, Vertex robber, Side to_move) const;
    bool cop_win(std::span<const Vertex> cops_sorted, Vertex robber, Side to_move) const;

    /// Placement quantifier: exists a cop multiset winning against every
    /// robber placement. Computed once during solve.
    bool placement_wins() const { return !winning_placement_.empty(); }
    const std::vector<Vertex>& winning_placement() const { return winning_placement_; }

    const MultisetIndexer& indexer() const { return *indexer_; }

private:
    int n_ = 0;
    int k_ = 0;
    std::shared_ptr<MultisetIndexer> indexer_;
    std::vector<std::uint32_t> depth_;
    std::vector<Vertex> winning_placement_;

    std::uint64_t state_id(std::uint64_t mset_id, Vertex robber, Side to_move) const {
        return (mset_id * n_ + robber) * 2 + (to_move == Side::Robber ? 1 : 0);
    }
};

/// Dismantlability test: true iff one cop wins, by iterated removal of
/// vertices whose closed neighborhood is contained in another's.
/// Throws std::invalid_argument on disconnected input.
bool is_copwin(const Graph& g);

/// Exact decision via retrograde analysis. Throws BudgetExceeded when
/// C(n+k-1,k)*n*2 exceeds the configured budget -- never a wrong answer.
bool k_cops_win(const Graph& g, int k, const SolverBudget& budget = {});

/// Least k <= k_max with k_cops_win; nullopt if k_max cops do not suffice.
std::optional<int> cop_number_exact(const Graph& g, int k_max, const SolverBudget& budget = {});

/// Strategy that plays the winning placement and then always moves to a
/// win-labeled successor of minimum capture depth.
/// Requires k_cops_win(g, k); throws std::invalid_argument otherwise.
std::unique_ptr<CopStrategy> extract_winning_cop_strategy(const Graph& g, int k,
                                                          const SolverBudget& budget = {});

/// Delay-maximizing robber backed by the same table: picks robber-win
/// successors when they exist, else the successor of maximum capture depth.
std::unique_ptr<RobberStrategy> extract_optimal_robber_strategy(const Graph& g, int k,
                                                                const SolverBudget& budget = {});

/// Shared-table variants for harnesses that need both sides at once.
std::shared_ptr<const SolverTable> make_solver_table(const Graph& g, int k,
                                                     const SolverBudget& budget = {});
std::unique_ptr<CopStrategy> table_cop_strategy(const Graph& g,
                                                std::shared_ptr<const SolverTable> table);
std::unique_ptr<RobberStrategy> table_robber_strategy(const Graph& g,
                                                      std::shared_ptr<const SolverTable> table);

}  // namespace pursuit
