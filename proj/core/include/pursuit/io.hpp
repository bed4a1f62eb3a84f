#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "pursuit/graph.hpp"

namespace pursuit {

/// I/O failures that should map to exit code 4 at the CLI.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Graph text format: line 1 "n m", then m lines "u v" with 0-based ids,
/// each undirected edge listed once; lines starting with '#' are ignored.
Graph read_graph(std::istream& is);
void write_graph(std::ostream& os, const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

/// Resolves a --graph argument: an existing file path is parsed as a graph
/// file; otherwise the string is treated as a fixture/generator spec
/// ("petersen", "cycle:7", "gnp:n=100,p=0.05,seed=7",
/// "subdivided:d=3,s=3,l=12,seed=1", "construct:n=3000,seed=1").
Graph resolve_graph_source(const std::string& source);

/// "k1=v1,k2=v2" parameter strings used by strategy and generator specs.
std::map<std::string, std::string> parse_kv(const std::string& text);
int kv_int(const std::map<std::string, std::string>& kv, const std::string& key, int fallback);
double kv_double(const std::map<std::string, std::string>& kv, const std::string& key,
                 double fallback);
std::uint64_t kv_u64(const std::map<std::string, std::string>& kv, const std::string& key,
                     std::uint64_t fallback);

}  // namespace pursuit
