#pragma once

#include <cstdint>
#include <string>

#include "pursuit/graph.hpp"

namespace pursuit {

struct GnpParams {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// Erdos-Renyi G(n,p): each unordered pair is an edge independently with
/// probability p. Identical params give a bit-identical edge set.
Graph gen_gnp(const GnpParams& params);

/// Incidence graph of the projective plane PG(2,q) over the prime field F_q:
/// q^2+q+1 points (ids 0..q^2+q), q^2+q+1 lines (ids q^2+q+1..), a point and
/// a line adjacent iff incident. (q+1)-regular, bipartite, girth 6.
/// Throws std::invalid_argument unless q is prime.
Graph gen_projective_incidence(int q);

/// d-dimensional hypercube on 2^d bit-vector vertices, 1 <= d <= 20.
Graph gen_hypercube(int d);

/// Named test fixtures: "petersen", "heawood", "cycle:N", "path:N",
/// "complete:N", "star:N", "grid:AxB", "hypercube:D", "btree:DEPTH",
/// "incidence:Q". Throws std::invalid_argument for unknown names.
Graph gen_fixture(const std::string& name);

bool is_prime(int q);

}  // namespace pursuit
