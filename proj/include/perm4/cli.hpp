#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "perm4/count.hpp"
#include "perm4/graph.hpp"
#include "perm4/permutation.hpp"

namespace perm4 {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInput = 2, kExitVerifyFailed = 3 };

enum class C4Route { kBrute, kCodegree, kViaPattern, kViaReductions };

/// 4-cycles by the chosen route. Every route gives the same number.
Count count_c4(const UndirectedGraph& g, C4Route route);
Count count_c4(const DirectedGraph& g, C4Route route);
Count count_c4(const LayeredMultigraph& g, C4Route route);

/// Whitespace-separated values; ParseError positions are line numbers.
Permutation read_permutation(std::istream& in);

struct GraphFile {
  bool layered = false;
  NodeId nodes = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;  // edge-list files
  LayeredMultigraph graph;                       // layered files
};

/// "nodes N" + "u v" lines, or "layers a b c d" + "i u v [mult]" lines.
/// Blank lines and lines starting with '#' are skipped.
GraphFile read_graph(std::istream& in, bool directed);

void write_graph(std::ostream& out, const UndirectedGraph& g);
void write_graph(std::ostream& out, const DirectedGraph& g);
void write_graph(std::ostream& out, const LayeredMultigraph& g);

/// Runs one command line (without the program name) and returns the exit
/// status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace perm4
