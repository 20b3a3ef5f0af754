#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clrp/constraints.hpp"
#include "clrp/generation.hpp"
#include "clrp/pmap.hpp"

namespace clrp {

/// Three-valued answer: yes carries a verified witness, no means the search
/// space was exhausted, inconclusive means a budget was hit first.
enum class Verdict { yes, no, inconclusive };

const char* verdict_name(Verdict v);

/// One per-cell statistics row (the ambient dimension, the grid cell, and the
/// work done in it). Wall time is reported separately from the deterministic
/// counters so reports can be compared byte-for-byte across runs.
struct LevelStat {
  int r = 0;
  int i = 0;  ///< ground size
  int j = 0;  ///< simple size
  std::uint64_t candidates = 0;
  std::uint64_t kept = 0;
  std::uint64_t rank_evals = 0;
  double millis = 0.0;
};

/// A verified feasible pair: a subspace arrangement plus the p-map assigning
/// ground elements to constraint indices.
struct Witness {
  PolymatroidRep rep;
  PMap pmap;  ///< 0-based images; rendered 1-based
  int simple_size = 0;
  int r = 0;
};

struct ProverResult {
  Verdict verdict = Verdict::inconclusive;
  std::optional<Witness> witness;
  std::vector<LevelStat> stats;
  std::string note;  ///< reason when inconclusive
  double total_ms = 0.0;
  std::uint64_t total_rank_evals = 0;
};

struct EngineOptions {
  std::uint64_t max_level_reps = 0;  ///< 0 = unlimited
  double max_seconds = 0.0;          ///< 0 = unlimited
  int jobs = 1;  ///< worker hint for the ambient sweep; the sweep currently
                 ///< runs on one worker so reports stay byte-for-byte
                 ///< reproducible across runs
};

/// Decides whether some rep in class c over F_q carries a p-map satisfying
/// (I, targets); sweeps ambient dimensions ascending and stops at the first
/// witness, which is re-validated against every constraint before answering.
ProverResult clrp_exists(const ClassTuple& c, int q, const ConstraintSet& I,
                         const TargetTable& targets, const SymmetryGroup& B,
                         const EngineOptions& opt = {});

/// Unfiltered enumeration of the class: every output-cell rep across the
/// ambient window, one per isomorphism class.
struct EnumerateResult {
  Verdict verdict = Verdict::inconclusive;
  std::vector<PolymatroidRep> reps;
  std::vector<int> simple_sizes;  ///< aligned
  std::vector<int> ambients;      ///< aligned
  std::vector<LevelStat> stats;
  std::string note;
};
EnumerateResult clrp_enumerate(const ClassTuple& c, int q,
                               const EngineOptions& opt = {});

/// Is the rate vector (one entry per message, 1-based network order)
/// achievable over F_q? The ambient dimension is the sum of the source rates
/// unless ambient_all is set (then all rates are summed).
ProverResult prove_rate(const NetworkInstance& net, const std::vector<int>& rates,
                        int q, bool ambient_all = false,
                        const EngineOptions& opt = {});

/// Sweeps every code of the network over F_q with singleton ranks at most
/// dmax and ambient dimension at most rmax, harvesting the achievable
/// singleton-rank vectors in label order (sources first), deduplicated and
/// sorted.
struct RegionResult {
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::vector<int>> vectors;
  std::vector<LevelStat> stats;
  std::string note;
  double total_ms = 0.0;
  std::uint64_t total_rank_evals = 0;
};
RegionResult prove_region(const NetworkInstance& net, int q, int dmax, int rmax,
                          const EngineOptions& opt = {});

/// Does a multi-linear scheme over F_q realize the access structure with the
/// given share sizes (sizes[0] is the dealer's secret size)? Ambient sweeps
/// from the largest size to the sum minus one.
ProverResult prove_ss(const AccessStructure& gamma, const std::vector<int>& sizes,
                      int q, const EngineOptions& opt = {});

/// Is the integer rank vector the rank function of a subspace arrangement
/// over F_q? Fixes the ambient to the total rank and pins every subset value.
ProverResult prove_rep(const RankVector& h, int q, const EngineOptions& opt = {});

}  // namespace clrp
