#pragma once

#include <string>
#include <vector>

#include "clrp/constraints.hpp"

namespace clrp {

/// A network-coding instance on a directed acyclic multigraph: unit-capacity
/// parallel edges distinguished by color, source nodes emitting message
/// parts, sink nodes each demanding one source message.
struct MultigraphInstance {
  struct Edge {
    std::string tail, head;
    int color = 0;  ///< consecutive per (tail, head) pair, starting at 1
  };

  std::vector<std::string> nodes;  ///< insertion order (a topological order)
  std::vector<Edge> edges;
  /// source node -> the message label whose part it emits (1-based)
  std::vector<std::pair<std::string, int>> source_nodes;
  std::vector<std::string> sink_nodes;
  /// sink name -> demanded source message label (1-based)
  std::vector<std::pair<std::string, int>> demands;
  /// message label (1-based) -> node carrying it
  std::vector<std::pair<int, std::string>> msg2node;
  std::vector<int> rates;  ///< per message label, carried for validation
};

/// Expands a network instance at the given rates into a multigraph: each
/// source message becomes unit-rate source nodes feeding a collector, each
/// encoding relation becomes a two-node gadget with parallel input edges and
/// a rate-wide bridge, and each decoding relation becomes sink nodes with
/// demands. Encoding relations are processed lowest-index first among those
/// whose inputs are all defined; an unresolvable ordering or a doubly-defined
/// message is reported as an error naming the offender.
MultigraphInstance transform(const NetworkInstance& net,
                             const std::vector<int>& rates);

/// Structural report: lists violations (empty = clean) of acyclicity, demand
/// totality on sinks, known endpoints, color uniqueness per parallel bundle,
/// and in-degree of every message node matching its rate.
std::vector<std::string> validate_transform(const MultigraphInstance& g);

}  // namespace clrp
