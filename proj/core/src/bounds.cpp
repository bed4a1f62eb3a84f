#include "pursuit/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "pursuit/rng.hpp"
#include "pursuit/walks.hpp"

namespace pursuit {

double chernoff_tail(int n, double p, int k) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    double pn = p * n;
    if (!(pn > 0)) throw std::invalid_argument("pn must be positive");
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (k > pn) throw std::invalid_argument("chernoff_tail requires k <= pn");
    double diff = k - pn;
    return std::exp(-diff * diff / (2.0 * pn));
}

std::optional<int> girth5_lower_bound(const Graph& g) {
    auto gi = girth(g);
    if (gi && *gi < 5) return std::nullopt;
    return g.min_degree();  // forests have infinite girth and qualify
}

WalkCountBound walkcount_lower_bound(const Graph& g, int d_target, int r) {
    if (d_target < 3) throw std::invalid_argument("walk-count bound needs d >= 3");
    if (r < 1) throw std::invalid_argument("walk-count bound needs r >= 1");
    VertexSet peel = min_degree_peel(g, d_target);
    if (peel.empty()) throw std::invalid_argument("min-degree peel is empty at this d");

    WalkProfile profile = m_profile_singleton(g, peel, r);
    if (profile.saturated)
        throw std::overflow_error("walk counts saturated; refusing to emit a bound");
    std::uint64_t m_r = profile.counts[r];
    if (m_r == 0) m_r = 1;  // cannot happen with d >= 3; guard the division

    unsigned __int128 power = 1;
    for (int i = 0; i < r; ++i) {
        power *= static_cast<unsigned>(d_target - 1);
        if (power > static_cast<unsigned __int128>(1) << 100)
            throw std::overflow_error("(d-1)^r overflow");
    }
    unsigned __int128 denom = static_cast<unsigned __int128>(2) * (r + 1) * m_r;
    WalkCountBound out;
    out.value = static_cast<std::int64_t>(power / denom) + 1;
    out.d = d_target;
    out.r = r;
    out.m_r = m_r;
    return out;
}

GnpLowerResult gnp_lower_formula(double n, double p) {
    double pn = p * n;
    if (!(pn > std::exp(1.0)))
        throw std::invalid_argument("gnp_lower_formula needs pn > e for loglog(pn) > 0");
    GnpLowerResult out;
    out.loglog_pn = std::log(std::log(pn));
    out.exponent = 0.5 * (out.loglog_pn - 9.0) / out.loglog_pn;
    out.value = std::pow(n, out.exponent) / (pn * pn);
    if (pn / 4.0 > std::exp(1.0)) {
        double eps = 4.0 / std::log(std::log(pn / 4.0));
        out.epsilon = eps;
        double expr = lemma_radius_expression(n, pn, eps) + 1.0;  // undo the -1, floor, redo
        out.r = static_cast<int>(std::floor(expr)) - 1;
    }
    out.vacuous = out.value < 1.0;
    return out;
}

GnpUpperResult gnp_upper_formula(double n, double p, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must be in (0,1)");
    if (!(p > 2.0 * (1.0 + eps) * std::log(n) / n))
        throw std::invalid_argument("hypothesis p > 2(1+eps) log(n)/n violated");
    GnpUpperResult out;
    out.value = std::sqrt(n) * std::log(n) * std::max(1.0 / eps, 160000.0);
    out.r = static_cast<int>(std::floor(1000.0 * std::log(std::sqrt(n)) / std::log(p * n + 2.0)));
    return out;
}

double lemma_radius_expression(double n, double pn, double eps) {
    return ((0.5 - eps) * std::log(n) - std::log(std::log(n)) - std::log(40.0)) /
               std::log(pn + 1.0) -
           1.0;
}

namespace {

void track_worst(CheckResult& result, double observed, double bound, Vertex x, Vertex y, int k) {
    double ratio = bound > 0 ? observed / bound : (observed > 0 ? 1e300 : 0.0);
    if (result.witness.x < 0 || ratio > result.worst_ratio) {
        result.worst_ratio = ratio;
        result.witness = {x, y, k, observed, bound};
    }
    if (observed > bound) result.pass = false;
}

int resolve_radius(CheckResult& result, const Graph& g, double p, double eps,
                   std::optional<int> r_override) {
    double expr = lemma_radius_expression(g.vertex_count(), p * g.vertex_count(), eps);
    result.r_formula = static_cast<int>(std::floor(expr));
    result.formula_regime = result.r_formula >= 1;
    result.r_used = r_override.value_or(std::max(1, result.r_formula));
    return result.r_used;
}

}  // namespace

CheckResult check_ball_growth(const Graph& g, double p) {
    const int n = g.vertex_count();
    const double pn = p * n;
    if (!(pn > 1.0)) throw std::invalid_argument("ball growth check needs pn > 1");
    CheckResult result;
    result.check = "ball-growth";
    result.p = p;

    const double logn = std::log(static_cast<double>(n));
    for (Vertex x = 0; x < n; ++x) {
        auto dist = g.distances_from(x);
        int maxd = 0;
        for (int d : dist) maxd = std::max(maxd, d);
        std::vector<std::int64_t> ball_size(maxd + 1, 0);
        for (int d : dist)
            if (d >= 0) ++ball_size[d];
        std::int64_t cumulative = ball_size[0];
        for (int k = 1; k <= maxd; ++k) {
            cumulative += ball_size[k];
            track_worst(result, static_cast<double>(cumulative),
                        20.0 * logn * std::pow(1.0 + pn, k), x, -1, k);
        }
    }
    return result;
}

CheckResult check_ball_tree_excess(const Graph& g, double p, double eps,
                                   std::optional<int> r_override) {
    CheckResult result;
    result.check = "tree-excess";
    result.p = p;
    result.eps = eps;
    const int r = resolve_radius(result, g, p, eps, r_override);
    const int n = g.vertex_count();
    const double excess_bound = 3.0 / eps;

    // Every x gets the excess check; walk counts are probed on a fixed
    // deterministic sample of sources to keep the sweep linear-ish.
    const int stride = std::max(1, n / 64);
    for (Vertex x = 0; x < n; ++x) {
        VertexSet b = ball(g, x, r);
        std::int64_t excess = induced_edge_count(g, b) - (b.size() - 1);
        track_worst(result, static_cast<double>(excess), excess_bound, x, -1, -1);
        if (x % stride != 0) continue;
        WalkDp dp(g, x, {}, &b);
        for (int k = 1; k <= 2 * r; ++k) {
            dp.step();
            double bound = std::pow(7.0 / eps, k);
            b.for_each([&](Vertex y) {
                std::uint64_t c = dp.ends_at(y);
                track_worst(result, static_cast<double>(c), bound, x, y, k);
            });
        }
    }
    return result;
}

CheckResult check_global_path_count(const Graph& g, double p, double eps, int sample_pairs,
                                    std::uint64_t seed, std::optional<int> r_override) {
    CheckResult result;
    result.check = "path-count";
    result.p = p;
    result.eps = eps;
    const int r = resolve_radius(result, g, p, eps, r_override);
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("need at least two vertices");
    const double bound = r * std::pow(7.0 / eps, 3 * r);

    Rng rng = make_rng(seed, "path-count-pairs");
    for (int i = 0; i < sample_pairs; ++i) {
        Vertex x = static_cast<Vertex>(uniform_below(rng, n));
        Vertex y = static_cast<Vertex>(uniform_below(rng, n));
        if (x == y) y = (y + 1) % n;
        WalkDp dp(g, x);
        unsigned __int128 total = 0;
        for (int k = 1; k <= 2 * r; ++k) {
            dp.step();
            total += dp.ends_at(y);
        }
        double observed = dp.saturated() ? 1e300 : static_cast<double>(total);
        track_worst(result, observed, bound, x, y, 2 * r);
    }
    return result;
}

bool recheck_witness(const Graph& g, const CheckResult& result) {
    const LemmaWitness& w = result.witness;
    const int n = g.vertex_count();
    const double pn = result.p * n;
    double observed = 0;
    double bound = w.bound;
    if (result.check == "ball-growth") {
        observed = static_cast<double>(ball(g, w.x, w.k).size());
        bound = 20.0 * std::log(static_cast<double>(n)) * std::pow(1.0 + pn, w.k);
    } else if (result.check == "tree-excess") {
        VertexSet b = ball(g, w.x, result.r_used);
        if (w.k < 0) {
            observed = static_cast<double>(induced_edge_count(g, b) - (b.size() - 1));
            bound = 3.0 / result.eps;
        } else {
            WalkDp dp(g, w.x, {}, &b);
            for (int k = 0; k < w.k; ++k) dp.step();
            observed = static_cast<double>(dp.ends_at(w.y));
            bound = std::pow(7.0 / result.eps, w.k);
        }
    } else if (result.check == "path-count") {
        WalkDp dp(g, w.x);
        unsigned __int128 total = 0;
        for (int k = 1; k <= 2 * result.r_used; ++k) {
            dp.step();
            total += dp.ends_at(w.y);
        }
        observed = static_cast<double>(total);
        bound = result.r_used * std::pow(7.0 / result.eps, 3 * result.r_used);
    } else {
        throw std::invalid_argument("unknown check kind '" + result.check + "'");
    }
    bool violated = observed > bound;
    bool witness_claims_violation = w.observed > w.bound;
    return violated == witness_claims_violation && observed == w.observed && bound == w.bound;
}

BoundReport make_bound_report(const Graph& g, std::optional<int> walkcount_d,
                              std::optional<int> walkcount_r) {
    BoundReport report;
    report.graph_hash = g.hash();
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.girth_value = girth(g);
    report.min_degree = g.min_degree();
    report.girth5_bound = girth5_lower_bound(g);
    if (walkcount_d && walkcount_r)
        report.walkcount = walkcount_lower_bound(g, *walkcount_d, *walkcount_r);
    return report;
}

std::string to_json(const BoundReport& report) {
    nlohmann::json j;
    j["graph"] = {{"hash", report.graph_hash},
                  {"n", report.n},
                  {"m", report.m},
                  {"min_degree", report.min_degree}};
    if (report.girth_value) j["graph"]["girth"] = *report.girth_value;
    else j["graph"]["girth"] = "infinite";
    nlohmann::json bounds = nlohmann::json::array();
    {
        nlohmann::json b;
        b["formula"] = "girth5-min-degree";
        if (report.girth5_bound) b["value"] = *report.girth5_bound;
        else b["value"] = nullptr;
        bounds.push_back(b);
    }
    if (report.walkcount) {
        nlohmann::json b;
        b["formula"] = "walkcount-condition";
        b["value"] = report.walkcount->value;
        b["d"] = report.walkcount->d;
        b["r"] = report.walkcount->r;
        b["m_r"] = report.walkcount->m_r;
        bounds.push_back(b);
    }
    j["bounds"] = bounds;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"check", c.check},
                          {"pass", c.pass},
                          {"worst_ratio", c.worst_ratio},
                          {"r_formula", c.r_formula},
                          {"r_used", c.r_used},
                          {"formula_regime", c.formula_regime},
                          {"witness",
                           {{"x", c.witness.x},
                            {"y", c.witness.y},
                            {"k", c.witness.k},
                            {"observed", c.witness.observed},
                            {"bound", c.witness.bound}}}});
    }
    j["checks"] = checks;
    return j.dump(2);
}

}  // namespace pursuit
