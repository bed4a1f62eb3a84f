#include "pursuit/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pursuit/generators.hpp"
#include "pursuit/subdivided.hpp"

namespace pursuit {

Graph read_graph(std::istream& is) {
    std::string line;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw std::invalid_argument("graph file: bad header line, want 'n m'");
            edges.reserve(m);
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw std::invalid_argument("graph file: bad edge line '" + line + "'");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (n < 0) throw std::invalid_argument("graph file: missing header line");
    if (static_cast<long long>(edges.size()) != m)
        throw std::invalid_argument("graph file: header announces " + std::to_string(m) +
                                    " edges, found " + std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

void write_graph(std::ostream& os, const Graph& g) {
    os << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
}

Graph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open graph file '" + path + "'");
    return read_graph(f);
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    write_graph(f, g);
    if (!f) throw IoError("write failed for '" + path + "'");
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
    std::map<std::string, std::string> kv;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!item.empty()) {
            size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("bad parameter '" + item + "', want key=value");
            kv[item.substr(0, eq)] = item.substr(eq + 1);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return kv;
}

int kv_int(const std::map<std::string, std::string>& kv, const std::string& key, int fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    return std::stoi(it->second);
}

double kv_double(const std::map<std::string, std::string>& kv, const std::string& key,
                 double fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    return std::stod(it->second);
}

std::uint64_t kv_u64(const std::map<std::string, std::string>& kv, const std::string& key,
                     std::uint64_t fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    return std::stoull(it->second);
}

Graph resolve_graph_source(const std::string& source) {
    if (std::filesystem::exists(source)) return read_graph_file(source);
    auto colon = source.find(':');
    std::string head = source.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : source.substr(colon + 1);
    if (head == "gnp") {
        auto kv = parse_kv(rest);
        GnpParams params;
        params.n = kv_int(kv, "n", -1);
        params.p = kv_double(kv, "p", -1.0);
        params.seed = kv_u64(kv, "seed", 0);
        if (params.n < 1 || params.p < 0) throw std::invalid_argument("gnp spec wants n=..,p=..");
        return gen_gnp(params);
    }
    if (head == "subdivided") {
        auto kv = parse_kv(rest);
        return gen_subdivided_hypercube(kv_int(kv, "d", -1), kv_int(kv, "s", -1),
                                        kv_int(kv, "l", -1), kv_u64(kv, "seed", 0))
            .graph;
    }
    if (head == "construct") {
        auto kv = parse_kv(rest);
        auto plan = choose_construction_params(kv_int(kv, "n", -1), kv_u64(kv, "seed", 0));
        return build_from_plan(plan).graph;
    }
    return gen_fixture(source);
}

}  // namespace pursuit
