#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "clrp/group.hpp"
#include "clrp/polymatroid.hpp"
#include "clrp/subspace.hpp"

namespace clrp {

/// Thrown when an enumeration exceeds its configured budget; provers report
/// the run as inconclusive instead of answering.
struct enumeration_limit_error : error {
  using error::error;
};

/// Budget for an enumeration step. Zero values mean unlimited.
struct EnumLimits {
  std::uint64_t max_level_reps = 0;  ///< cap on kept reps per level or cell
  std::chrono::steady_clock::time_point deadline{};
  bool has_deadline = false;

  void check_deadline() const;
  void check_reps(std::uint64_t kept) const;
};

/// Orbit tower over subsets of a subspace domain: level i holds one canonical
/// representative per group orbit of i-element subsets (optionally filtered),
/// each with reduced generators of its setwise stabilizer and a link to its
/// parent at level i-1. Built one level at a time by the flag/fusion method:
/// candidates are (representative, point-orbit) pairs, and each candidate
/// subset is located by deleting elements and following fusion records.
class OrbitLevels {
 public:
  using Cert = std::vector<int>;
  /// Decides whether a newly found representative is kept; returns the data
  /// to remember for it (a search certificate) or nothing to discard it and
  /// its entire orbit class. Null filter keeps everything.
  using Filter = std::function<std::optional<Cert>(
      const std::vector<int>& elems, int parent_rep, const Cert& parent_cert)>;

  struct Rep {
    std::vector<int> elems;  ///< parent's order with the new point appended
    std::vector<GroupElement> stab_gens;  ///< reduced setwise stabilizer
    int parent = -1;                      ///< index into the previous level
    Cert cert;                            ///< filter certificate (may be empty)
  };

  /// Result of locating a subset: its class is either discarded (dead) or
  /// kept, with g mapping the queried set onto the representative's set.
  struct Locate {
    bool dead = false;
    int rep = -1;
    GroupElement g;
  };

  /// The tower acts on `domain` with the given group generators. Dimension-0
  /// domain elements are never offered as new points when skip_zero is set
  /// (subsets stay loop-free), though they may still appear in the domain for
  /// handle compatibility with nonsimple extensions.
  OrbitLevels(const GrassmannianIndex& domain, std::vector<GroupElement> gens,
              bool skip_zero = true);

  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const GrassmannianIndex& domain() const { return *domain_; }
  const std::vector<Rep>& reps(int level) const;
  std::uint64_t candidates(int level) const;  ///< flags processed into level

  /// Builds the next level from the current deepest one.
  void extend(const Filter& filter, const EnumLimits& limits = {});

  /// Locates a subset of size <= depth(); handles must be sorted, distinct,
  /// and of nonzero dimension.
  Locate locate(const std::vector<int>& elems_sorted) const;

 private:
  struct Flag {
    int rep;   // parent representative at the previous level
    int root;  // orbit root of the appended point
  };
  struct Fusion {
    bool dead = false;
    int rep = -1;
    GroupElement g;  // maps the flag's candidate set onto the kept rep's set
  };
  struct Level {
    std::vector<Rep> reps;
    std::vector<PointOrbits> orbits;  ///< stabilizer orbits, aligned with reps
    std::vector<Flag> flags;
    std::vector<Fusion> fusion;
    /// per parent rep: orbit root -> flag id (for locating)
    std::vector<std::unordered_map<int, int>> root2fid;
    std::uint64_t flags_processed = 0;
  };

  Locate locate_impl(const std::vector<int>& S, int level) const;
  int image_handle(const GroupElement& g, int h) const;

  const GrassmannianIndex* domain_;
  const GrassmannianIndex* points_;  ///< projective points (perm domain)
  std::vector<GroupElement> gens_;
  bool skip_zero_;
  std::vector<Level> levels_;
};

/// Per-cell enumeration statistics.
struct CellStats {
  std::uint64_t candidates = 0;
  std::uint64_t kept = 0;
  std::uint64_t rank_evals = 0;
  double millis = 0.0;
};

/// One cell of the enumeration grid: reps with i ground elements of which j
/// are nonloop parallel classes.
struct GridCell {
  std::vector<PolymatroidRep> reps;
  std::vector<std::vector<int>> certs;  ///< aligned; empty when unfiltered
  std::vector<int> parents;             ///< index into the predecessor cell
  CellStats stats;
};

struct ClassEnumeration {
  const GrassmannianIndex* gi = nullptr;
  /// keyed by (ground size, simple size)
  std::map<std::pair<int, int>, GridCell> cells;
  bool stopped_early = false;
};

/// Keeps a representative iff it admits a certificate extending its parent's.
using NewRepFilter = std::function<std::optional<std::vector<int>>(
    const PolymatroidRep& candidate, const std::vector<int>& parent_cert)>;

/// Called for every representative of an output cell (ground size N) as the
/// walk produces it; returning true stops the enumeration.
using FinalCallback = std::function<bool(
    const PolymatroidRep& rep, const std::vector<int>& cert, int simple_size)>;

/// One-parallel-copy and one-loop extensions of every parent, deduplicated
/// up to strong isomorphism (degree-vector matching under the automorphisms
/// of the shared underlying simple rep) and then filtered.
struct NseOutput {
  std::vector<PolymatroidRep> reps;
  std::vector<std::vector<int>> certs;
  std::vector<int> parents;
  std::uint64_t candidates = 0;  ///< generated before deduplication
};
NseOutput nonsimple_extensions(const std::vector<PolymatroidRep>& parents,
                               const std::vector<std::vector<int>>& parent_certs,
                               bool allow_loop, const NewRepFilter& filter,
                               const EnumLimits& limits = {});

/// Walks the full grid for one ambient dimension r: diagonal cells come from
/// the orbit tower (simple reps), rows extend them by parallel copies and
/// loops. Cells with ground size N and simple size within the class window
/// are the outputs. The filter may be null (pure catalog enumeration).
ClassEnumeration enumerate_class(const ClassTuple& c, int q, int r,
                                 const NewRepFilter& filter,
                                 const EnumLimits& limits = {},
                                 const FinalCallback& on_final = nullptr);

}  // namespace clrp
