#include "pursuit/generators.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

#include "pursuit/rng.hpp"

namespace pursuit {

namespace {

int parse_int_arg(const std::string& name, const std::string& text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("bad integer argument in fixture name '" + name + "'");
    return value;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph star(int n) {
    if (n < 2) throw std::invalid_argument("star needs at least 2 vertices");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(n, edges);
}

Graph grid(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("grid dimensions must be positive");
    auto id = [b](int i, int j) { return i * b + j; };
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            if (i + 1 < a) edges.emplace_back(id(i, j), id(i + 1, j));
            if (j + 1 < b) edges.emplace_back(id(i, j), id(i, j + 1));
        }
    return Graph::from_edges(a * b, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    return Graph::from_edges(10, edges);
}

// Complete binary tree of the given depth (depth 0 = single vertex).
Graph btree(int depth) {
    if (depth < 0 || depth > 20) throw std::invalid_argument("btree depth out of range");
    int n = (1 << (depth + 1)) - 1;
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
    return Graph::from_edges(n, edges);
}

}  // namespace

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

Graph gen_gnp(const GnpParams& params) {
    if (params.n < 1) throw std::invalid_argument("gnp: n must be >= 1");
    if (params.p < 0.0 || params.p > 1.0) throw std::invalid_argument("gnp: p must be in [0,1]");
    Rng rng = make_rng(params.seed, "gnp");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < params.n; ++u)
        for (Vertex v = u + 1; v < params.n; ++v)
            if (uniform01(rng) < params.p) edges.emplace_back(u, v);
    return Graph::from_edges(params.n, edges);
}

Graph gen_projective_incidence(int q) {
    if (!is_prime(q))
        throw std::invalid_argument("projective incidence graph needs a prime order q");
    // Canonical homogeneous coordinates over F_q: (1,a,b), (0,1,a), (0,0,1).
    std::vector<std::array<int, 3>> reps;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) reps.push_back({1, a, b});
    for (int a = 0; a < q; ++a) reps.push_back({0, 1, a});
    reps.push_back({0, 0, 1});
    const int k = static_cast<int>(reps.size());  // q^2 + q + 1

    std::vector<Edge> edges;
    for (int p = 0; p < k; ++p)
        for (int l = 0; l < k; ++l) {
            long long dot = 0;
            for (int i = 0; i < 3; ++i) dot += static_cast<long long>(reps[p][i]) * reps[l][i];
            if (dot % q == 0) edges.emplace_back(p, k + l);
        }
    return Graph::from_edges(2 * k, edges);
}

Graph gen_hypercube(int d) {
    if (d < 1 || d > 20) throw std::invalid_argument("hypercube dimension out of range [1,20]");
    int n = 1 << d;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int i = 0; i < d; ++i)
            if (!(u & (1 << i))) edges.emplace_back(u, u | (1 << i));
    return Graph::from_edges(n, edges);
}

Graph gen_fixture(const std::string& name) {
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);

    if (head == "petersen") return petersen();
    if (head == "heawood") return gen_projective_incidence(2);
    if (head == "cycle") return cycle(parse_int_arg(name, arg));
    if (head == "path") return path(parse_int_arg(name, arg));
    if (head == "complete") return complete(parse_int_arg(name, arg));
    if (head == "star") return star(parse_int_arg(name, arg));
    if (head == "hypercube") return gen_hypercube(parse_int_arg(name, arg));
    if (head == "btree") return btree(parse_int_arg(name, arg));
    if (head == "incidence") return gen_projective_incidence(parse_int_arg(name, arg));
    if (head == "grid") {
        auto x = arg.find('x');
        if (x == std::string::npos)
            throw std::invalid_argument("grid fixture wants 'grid:AxB'");
        return grid(parse_int_arg(name, arg.substr(0, x)), parse_int_arg(name, arg.substr(x + 1)));
    }
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace pursuit
