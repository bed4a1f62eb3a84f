#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

/// Chernoff-form upper bound e^{-(k-pn)^2/(2pn)} on the binomial lower tail
/// P(Bin(n,p) <= k). Requires 0 <= p <= 1, pn > 0 and k <= pn.
double chernoff_tail(int n, double p, int k);

/// Minimum degree as a cop-number lower bound on graphs of girth >= 5;
/// nullopt when the girth is below 5.
std::optional<int> girth5_lower_bound(const Graph& g);

struct WalkCountBound {
    std::int64_t value = 0;   // certified lower bound on the cop number
    int d = 0;                // peel degree used
    int r = 0;                // profile depth
    std::uint64_t m_r = 0;    // exact M_r(1) on the peeled subgraph
};

/// Lower bound from the walk-count condition: the largest c with
/// 2c M_r(1) (d-1)^{-r} <= 1/(r+1) is floor((d-1)^r / (2(r+1) M_r(1))),
/// so the cop number exceeds it. Throws std::invalid_argument when the peel
/// is empty or d < 3, std::overflow_error when the walk counts saturate.
WalkCountBound walkcount_lower_bound(const Graph& g, int d_target, int r);

struct GnpLowerResult {
    double value = 0;                  // (pn)^{-2} n^{(loglog(pn)-9)/(2 loglog(pn))}
    double exponent = 0;               // the exponent of n
    double loglog_pn = 0;
    std::optional<double> epsilon;     // 4/loglog(pn/4), when defined
    std::optional<int> r;              // radius choice, when epsilon is defined
    bool vacuous = false;              // value < 1: no nontrivial bound claimed
};

/// Random-graph cop-number lower bound formula. Throws std::invalid_argument
/// when pn <= e (loglog undefined or nonpositive).
GnpLowerResult gnp_lower_formula(double n, double p);

struct GnpUpperResult {
    double value = 0;  // sqrt(n) log(n) max(1/eps, 160000)
    int r = 0;         // floor(1000 log(sqrt(n)) / log(pn+2))
};

/// Random-graph cop-number upper bound formula. Requires 0 < eps < 1 and
/// p > 2(1+eps) log(n)/n; throws std::invalid_argument otherwise.
GnpUpperResult gnp_upper_formula(double n, double p, double eps);

/// The radius expression shared by the small-ball lemmas:
/// ((1/2 - eps) log n - loglog n - log 40) / log(pn+1) - 1.
double lemma_radius_expression(double n, double pn, double eps);

struct LemmaWitness {
    Vertex x = -1;
    Vertex y = -1;
    int k = -1;
    double observed = 0;
    double bound = 0;
};

struct CheckResult {
    std::string check;        // "ball-growth" | "tree-excess" | "path-count"
    bool pass = true;
    double worst_ratio = 0;   // observed/bound at the witness
    LemmaWitness witness;
    // parameters echoed so the witness can be re-verified
    double p = 0;
    double eps = 0;
    int r_formula = 0;        // floor of the radius expression (may be negative)
    int r_used = 0;
    bool formula_regime = true;  // false when the expression gives r < 1 at this scale
};

/// Ball-growth check: |B(x,k)| <= 20 log(n) (1+pn)^k for every x and every k
/// until the ball stops growing. Requires pn > 1.
CheckResult check_ball_growth(const Graph& g, double p);

/// Near-tree check: for every x the ball B(x,r) has edge excess <= 3/eps, and
/// non-backtracking walk counts inside the ball are <= (7/eps)^k for all
/// k <= 2r. r defaults to max(1, floor(radius expression)).
CheckResult check_ball_tree_excess(const Graph& g, double p, double eps,
                                   std::optional<int> r_override = {});

/// Global count check: the number of non-backtracking walks of length <= 2r
/// between sampled vertex pairs is <= r (7/eps)^{3r}.
CheckResult check_global_path_count(const Graph& g, double p, double eps, int sample_pairs,
                                    std::uint64_t seed, std::optional<int> r_override = {});

/// Recomputes the witness of a check result from scratch and returns true iff
/// the recorded pass/fail verdict is reproduced.
bool recheck_witness(const Graph& g, const CheckResult& result);

/// Evaluated bounds for one graph, JSON-serializable for the CLI.
struct BoundReport {
    std::uint64_t graph_hash = 0;
    int n = 0;
    int m = 0;
    std::optional<int> girth_value;
    int min_degree = 0;
    std::optional<int> girth5_bound;
    std::optional<WalkCountBound> walkcount;
    std::vector<CheckResult> checks;
};

BoundReport make_bound_report(const Graph& g, std::optional<int> walkcount_d = {},
                              std::optional<int> walkcount_r = {});
std::string to_json(const BoundReport& report);

}  // namespace pursuit
