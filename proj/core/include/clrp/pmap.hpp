#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clrp/constraints.hpp"
#include "clrp/polymatroid.hpp"

namespace clrp {

/// A p-map is an injective tuple of images: element l (0-based) of a rep is
/// assigned constraint index pmap[l] (0-based; printed 1-based). Tuples are
/// ordered lexicographically, with proper prefixes preceding extensions.
using PMap = std::vector<int>;

/// Number of nonempty injective partial tuples over [N]:
/// sum over k of C(N,k) * (N-k)!.
std::uint64_t pmap_count(int N);

/// Checks the constraints and targets that become fully covered when the last
/// entry of phi is assigned: each target h(mask) = v with mask inside the
/// image and containing the new value must match the rank of its preimage,
/// and each homogeneous constraint newly covered must evaluate to zero.
bool check_new_constraints(const PolymatroidRep& P, const PMap& phi,
                           const ConstraintSet& I, const TargetTable& targets);

/// Full re-validation of a complete certificate against every constraint and
/// target whose support lies in the image (all of them when phi is full).
bool validate_pmap(const PolymatroidRep& P, const PMap& phi,
                   const ConstraintSet& I, const TargetTable& targets);

/// Depth-first search for the lexicographically smallest feasible p-map of
/// P_ext among tuples at or after the resumption frontier of the parent
/// certificate (the parent is P_ext minus its last element, and certificates
/// of extensions never precede their parent's certificate). Nodes that are
/// not lexicographically minimal in their orbit under stab(prefix) x B are
/// skipped whenever both groups are small enough to close over the tuple.
/// Returns the certificate, or nothing when the rep is infeasible.
std::optional<PMap> extend_pmap(const PolymatroidRep& P_ext,
                                const PMap& parent_cert,
                                const std::vector<std::vector<int>>& A_elements,
                                const SymmetryGroup& B, const ConstraintSet& I,
                                const TargetTable& targets);

/// Filters reps by certificate existence: keeps exactly those for which
/// extend_pmap succeeds, pairing each with its certificate. A is computed per
/// rep from its rank automorphisms.
struct FilteredReps {
  std::vector<std::size_t> kept;  ///< indices into the input list
  std::vector<PMap> certs;        ///< aligned with kept
};
FilteredReps pmap_filter(const std::vector<PolymatroidRep>& reps,
                         const std::vector<PMap>& parent_certs,
                         const SymmetryGroup& B, const ConstraintSet& I,
                         const TargetTable& targets);

/// All feasible full bijections of a size-N rep, one representative per
/// B-orbit (the lexicographically smallest of each orbit), in ascending
/// order. Used to harvest every achievable assignment from one code.
std::vector<PMap> all_feasible_pmaps(const PolymatroidRep& P,
                                     const ConstraintSet& I,
                                     const TargetTable& targets,
                                     const SymmetryGroup& B);

}  // namespace clrp
