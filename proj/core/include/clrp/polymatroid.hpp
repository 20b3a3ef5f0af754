#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "clrp/group.hpp"
#include "clrp/subspace.hpp"

namespace clrp {

/// Ground subsets are bitmasks: element i (0-based) is bit i. Subset values in
/// text formats are 1-based labels.
using gmask = std::uint32_t;

/// Rank function values over all nonempty ground subsets, in binary-counter
/// order: entries[mask - 1] is the rank of the subset with that bitmask.
struct RankVector {
  int N = 0;
  std::vector<int> entries;  ///< size 2^N - 1

  int at(gmask mask) const { return entries[std::size_t(mask) - 1]; }
  int& at(gmask mask) { return entries[std::size_t(mask) - 1]; }

  bool operator==(const RankVector& o) const { return N == o.N && entries == o.entries; }

  /// Checks normalization, monotonicity and submodularity over the full
  /// subset lattice; on failure explains why in *why.
  bool is_polymatroid(std::string* why = nullptr) const;

  std::string serialize() const;  ///< comma-separated, binary-counter order
};

/// Total number of rank-oracle evaluations performed process-wide (cache
/// misses that ran the linear algebra). Monotone; engines report deltas.
std::atomic<std::uint64_t>& rank_eval_counter();

/// An ordered multiset of subspaces of F_q^r, interned in a Grassmannian
/// index; the ground set is 0..N-1 and the rank of a subset is the dimension
/// of the span of the union of its members.
struct PolymatroidRep {
  const GrassmannianIndex* gi = nullptr;
  std::vector<int> handles;  ///< subspace handle per ground element

  PolymatroidRep() = default;
  PolymatroidRep(const GrassmannianIndex& index, std::vector<int> hs)
      : gi(&index), handles(std::move(hs)) {}

  int ground_size() const { return int(handles.size()); }
  int ambient() const { return gi->r; }
  int q() const { return gi->q; }
  const Subspace& subspace(int i) const { return (*gi)[handles[std::size_t(i)]]; }

  /// Rank of a ground subset; memoized per rep.
  int rank(gmask mask) const;

  mutable std::unordered_map<gmask, int> rank_cache;
};

/// Builds a rep over the interned Grassmannian of exactly the dimensions
/// occurring in the list (convenience for explicitly listed subspaces).
PolymatroidRep make_rep(const std::vector<Subspace>& spaces, int r, int q);

/// Evaluates the rank on every nonempty subset. Rejects N > 16.
RankVector rank_vector(const PolymatroidRep& P);

/// Removes the listed ground elements (0-based), keeping the others in order.
PolymatroidRep delete_elements(const PolymatroidRep& P, const std::vector<int>& S);

/// Loop-and-parallel structure of a rep.
struct SimplePart {
  PolymatroidRep us;        ///< one element per nonzero parallel class, ground order
  std::vector<int> kept;    ///< ground positions kept (ascending)
  std::vector<int> degree;  ///< size |us|+1: parallel-class sizes, then the loop count
};

/// Drops loops (zero subspaces) and all but the first member of each parallel
/// class (equal canonical subspaces). The degree vector records class sizes in
/// kept order with the loop count appended; it sums to the ground size.
SimplePart underlying_simple(const PolymatroidRep& P);

/// Ground bijection preserving the rank function, if one exists. The witness
/// maps P1's element i to P2's element witness[i]. When both reps have the
/// same underlying simple subspace set, the search reduces to matching degree
/// vectors along a rank-automorphism of that simple part; otherwise it falls
/// back to rank-pruned backtracking over bijections.
std::optional<std::vector<int>> strong_isomorphic(const PolymatroidRep& P1,
                                                  const PolymatroidRep& P2);

/// All ground permutations preserving the rank function of P, found by
/// backtracking. Stops and returns only the identity when the ground size
/// exceeds max_ground or the group would exceed max_count elements (callers
/// use the result for pruning only, so a subgroup is always safe).
std::vector<std::vector<int>> rank_automorphisms(const PolymatroidRep& P,
                                                 int max_ground = 10,
                                                 std::size_t max_count = 20000);

/// Group element mapping P1's subspace set onto P2's, if one exists. Both
/// reps must be simple, over the same index, with equal ground size.
/// (Implemented on top of the subset-orbit machinery.)
std::optional<GroupElement> weak_isomorphic(const PolymatroidRep& P1,
                                            const PolymatroidRep& P2);

/// Search class: ground size, ambient-dimension window, admissible singleton
/// ranks, and window on the number of nonloop parallel classes.
struct ClassTuple {
  int N = 0;
  int r_l = 0, r_u = 0;
  std::vector<int> K;  ///< ascending, distinct, nonnegative
  int s_l = 0, s_u = 0;

  void validate() const;  ///< throws clrp::error on an ill-formed tuple
};

}  // namespace clrp
