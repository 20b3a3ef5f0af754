#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clrp/polymatroid.hpp"

namespace clrp {

enum class Layer {
  source_independence,
  encoder,
  decoder,
  recovery,
  secrecy,
  generic,
};

/// One integer-linear equality over subset-rank coordinates:
/// sum of coeff * h(mask) over the terms equals zero.
struct LinearConstraint {
  std::vector<std::pair<gmask, int>> terms;  ///< sorted by mask, coeffs nonzero
  Layer layer = Layer::generic;

  /// Merges duplicate masks, drops zero coefficients, sorts terms by mask and
  /// normalizes the sign so the first coefficient is positive.
  void canonicalize();

  bool operator==(const LinearConstraint& o) const { return terms == o.terms; }
  bool operator<(const LinearConstraint& o) const { return terms < o.terms; }

  /// Union of the term masks.
  gmask support() const;
};

/// A finite system of such equalities over ground set [N].
struct ConstraintSet {
  int N = 0;
  std::vector<LinearConstraint> constraints;
};

/// Fixed-value requirements h(mask) = value, kept separate from the
/// homogeneous system so they can be checked the moment a map covers them.
struct TargetTable {
  std::vector<std::pair<gmask, int>> targets;  ///< sorted by mask, unique masks

  void canonicalize();
  std::optional<int> value_of(gmask mask) const;
};

/// A coding network: k sources among N variables, and relations (In, In|Out)
/// stating that the variables added on the right are functions of the left.
struct NetworkInstance {
  int k = 0;
  int N = 0;
  /// Each relation is (In, In-union-Out) with 1-based labels.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;

  /// A relation decodes when everything it defines is a source variable.
  bool relation_is_decoder(std::size_t idx) const;
  void validate() const;
};

/// Secret-sharing access structure: dealer is label 1, parties are 2..N;
/// minimal authorized sets form an antichain over the parties.
struct AccessStructure {
  int N = 0;
  std::vector<std::vector<int>> minimal_auth;

  void validate() const;
  /// All authorized subsets of {2..N} (monotone closure), as masks.
  std::vector<gmask> closure() const;
};

/// Permutations of [N] (0-based image arrays) preserving a constraint system.
struct SymmetryGroup {
  int N = 0;
  std::vector<std::vector<int>> generators;
  /// Full element list including the identity when the group was enumerated;
  /// empty when only user generators are known.
  std::vector<std::vector<int>> elements;
};

gmask mask_of(const std::vector<int>& labels_1based, int N);
std::vector<int> labels_of(gmask mask);  ///< ascending 1-based labels
gmask apply_perm_mask(const std::vector<int>& perm, gmask mask);

/// Source independence (rank of the source set splits into singletons) plus
/// one functional equality per relation, layered by what the relation defines.
ConstraintSet constraints_from_network(const NetworkInstance& net);

/// Recovery equalities for every authorized set and secrecy equalities for
/// every nonempty unauthorized set, with the dealer adjoined.
ConstraintSet constraints_from_access_structure(const AccessStructure& acc);

/// The rank vector as a pure target table (empty homogeneous part).
std::pair<ConstraintSet, TargetTable> constraints_from_rank_vector(const RankVector& h);

/// Keeps exactly the constraints whose supports lie inside X.
ConstraintSet restrict_constraints(const ConstraintSet& I, gmask X);

/// The setwise stabilizer of the canonicalized constraint system (and of the
/// target table, when given) inside S_N, found by profile-pruned backtracking.
/// Automatic search requires N <= 12 and at most max_elements automorphisms;
/// past either limit an error asks for user-supplied generators, which are
/// validated instead when present.
SymmetryGroup symmetry_group(const ConstraintSet& I,
                             const TargetTable* targets = nullptr,
                             const std::vector<std::vector<int>>* user_gens = nullptr,
                             std::size_t max_elements = 10000);

/// True when the permutation maps the constraint multiset onto itself
/// (and preserves every target, when given).
bool preserves_constraints(const std::vector<int>& perm, const ConstraintSet& I,
                           const TargetTable* targets = nullptr);

}  // namespace clrp
