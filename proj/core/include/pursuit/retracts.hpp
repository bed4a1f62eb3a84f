#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/subdivided.hpp"

namespace pursuit {

/// Total map V(G) -> V(G); f[x] is the image of x.
using VertexMap = std::vector<Vertex>;

/// Reflexive-homomorphism test: every edge maps to an edge or a single
/// vertex, and f fixes its image (f(f(x)) = f(x)).
bool is_retraction(const Graph& g, const VertexMap& f);

struct RetractSearchResult {
    enum class Status { Found, None, Exceeded };
    Status status = Status::None;
    std::optional<VertexMap> map;
    std::uint64_t nodes = 0;  // backtracking nodes expanded
};

/// Exact backtracking search (domains + arc-consistency propagation) for a
/// retraction with image exactly h. "Exceeded" is distinct from "None": only
/// an exhausted search may report None. h must induce a connected subgraph.
RetractSearchResult find_retraction_onto(const Graph& g, const VertexSet& h,
                                         std::uint64_t node_budget = 1'000'000);

/// Single-cop area defense: the cop shadows f(robber). When placed on
/// f(robber) (run the engine with rules.cops_place_after_robber), every
/// prescribed move is legal and a robber entering the image is caught on the
/// next cop move. From an unsynchronized start the cop walks toward the
/// shadow instead, without the capture guarantee.
std::unique_ptr<CopStrategy> area_defense_strategy(const Graph& g, const VertexMap& f);

/// Codimension-2 subcube selector: vertices with coordinate i = a and j = b.
struct Quarter {
    int i = 0;
    int j = 1;
    int a = 0;
    int b = 0;
};
using QuarterSet = std::vector<Quarter>;

VertexSet realize_quarters(int d, const QuarterSet& quarters);

/// True iff every member of s lies in some codimension-2 subcube entirely
/// contained in s (the empty set passes vacuously). s ranges over {0,1}^d.
bool union_of_quarters_check(int d, const VertexSet& s);

/// Snaps a retract image of the subdivided hypercube to its reduced form:
/// cube vertices of R are kept, and a subdivision path is kept iff R
/// contained the whole path together with both endpoints; all other interior
/// path vertices collapse to their retained endpoints. Throws
/// std::invalid_argument when R is empty or induces a disconnected subgraph.
VertexSet reduce_retract(const SubdividedHypercube& sq, const VertexSet& R);

struct Rational {
    long long num = 0;
    long long den = 1;
    void reduce() {
        long long g = std::gcd(num, den);
        if (g > 0) { num /= g; den /= g; }
    }
    bool operator==(const Rational&) const = default;
};

/// Exhaustive 2^4-case enumeration of the 4-cycle distance event
/// (one pair of opposite sides not longer than the other): exactly 11/16.
Rational config1_probability();

/// Exhaustive 2^8-case enumeration of the double-4-cycle event on a 3-cube
/// (the excluded cycle at least as long as the retained one): exactly 163/256.
Rational config2_probability();

struct LargestRetractResult {
    enum class Status { Found, Exceeded, None };
    Status status = Status::None;
    VertexSet image;              // the verified reduced retract
    std::optional<VertexMap> map; // the verifying retraction
    int size = 0;
    std::uint64_t candidates_tried = 0;
    std::uint64_t inconclusive_larger = 0;  // larger candidates whose search hit the budget
};

/// Scans candidate reduced retracts whose cube-complement is a union of
/// quarters (exhaustive for d <= 4, unions of up to three quarters for
/// d <= 6) in decreasing size order and returns the first one verified by
/// find_retraction_onto. The §4 claim is used only as a pruner: every
/// candidate is re-verified, so the result is a sound lower-bound witness.
LargestRetractResult find_largest_proper_retract(const SubdividedHypercube& sq,
                                                 std::uint64_t node_budget = 2'000'000);

/// Edge-boundary check used by the counting argument: passes iff
/// |boundary(s)| >= min(|s|, 2^d/4) for proper subsets (s = Q_d is exempt,
/// matching the argument's "unless S = Q" proviso). d <= 20.
bool harper_boundary_check(int d, const VertexSet& s);

/// Map file format: one line per vertex, "x f(x)".
VertexMap read_vertex_map(std::istream& is, int n);
void write_vertex_map(std::ostream& os, const VertexMap& f);

}  // namespace pursuit
