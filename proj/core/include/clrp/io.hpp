#pragma once

#include <string>
#include <vector>

#include "clrp/constraints.hpp"
#include "clrp/engine.hpp"
#include "clrp/nc_transform.hpp"
#include "clrp/rate_region.hpp"

namespace clrp {

// Line-oriented text formats. Parsers are strict: unknown or malformed lines
// raise clrp::error with the 1-based line number; blank lines and lines
// starting with '#' are ignored.

/// `network k=<k> n=<N>` then `con {i,...} -> {j,...}` per relation
/// (left = inputs, right = inputs plus defined variables).
NetworkInstance parse_network(const std::string& text);
std::string format_network(const NetworkInstance& net);

/// `ss n=<N>` then `auth {...}` per minimal authorized set (dealer is 1).
AccessStructure parse_access_structure(const std::string& text);
std::string format_access_structure(const AccessStructure& acc);

/// Comma-separated integers over all nonempty subsets in binary-counter
/// order (length 2^N - 1).
RankVector parse_rank_vector(const std::string& text);

/// Polyhedral block:
///   H-representation | V-representation
///   begin
///   <rows> <cols> rational
///   0 <coefficients...>
///   end
/// Cone rows carry a leading 0 column. H blocks list equalities first under
/// an optional `linearity <count> <row indices...>` line (1-based), matching
/// common polyhedral tool output.
struct PolyhedralBlock {
  bool is_h = true;
  int cols = 0;  ///< including the leading column
  std::vector<Row> rows;
  std::vector<int> linearity;  ///< 1-based indices into rows
};
PolyhedralBlock parse_polyhedral(const std::string& text);
std::string format_hrep(const HRep& h);
std::string format_vrep(const Cone& c);

/// `node <name>` / `edge <tail> <head> <color>` / `source <name> <msg>` /
/// `sink <name> demands <msg>` lines.
std::string format_edge_list(const MultigraphInstance& g);
MultigraphInstance parse_edge_list(const std::string& text);

/// Witness block: one paragraph per ground element, `i-><image>` followed by
/// the subspace's basis rows (zero rendered as '.', nonzero as the integer).
std::string format_witness(const Witness& w);

/// Certificate rendering: `i->j` lines, 1-based.
std::string format_certificate(const PMap& phi);

/// One representative per line: `<r> <q> [<dim>:<row>,<row>;...]` with each
/// basis row space-separated.
std::string catalog_line(const PolymatroidRep& rep);

/// Per-cell statistics, `r,i,j,candidates,kept,rank_evals,millis` with header.
std::string format_stats_csv(const std::vector<LevelStat>& stats);

/// Deterministic run reports: verdicts, witnesses and work counters, no wall
/// times (identical runs produce identical bytes).
std::string format_report(const ProverResult& res);
std::string format_region_report(const RegionResult& res);

/// Machine-readable result envelopes.
std::string result_json(const ProverResult& res);
std::string region_json(const RegionResult& res);

}  // namespace clrp
