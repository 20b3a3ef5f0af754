#pragma once

// Reference implementations used to cross-check the library: every routine
// here favors the most direct exhaustive method over the algorithms under
// test, and shares as little code with them as possible.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clrp/constraints.hpp"
#include "clrp/group.hpp"
#include "clrp/pmap.hpp"
#include "clrp/polymatroid.hpp"
#include "clrp/rate_region.hpp"
#include "clrp/subspace.hpp"

namespace clrp::testing {

/// Exhaustive normalization/monotonicity/submodularity check over the full
/// subset lattice, written independently of RankVector::is_polymatroid.
bool slow_is_polymatroid(const RankVector& h, std::string* why = nullptr);

/// Shannon entropy (in bits) of the joint random variable obtained by
/// evaluating the basis forms of every subspace in `mask` at a uniformly
/// random ambient vector; counts outcomes over all q^r points.
double slow_entropy_bits(const PolymatroidRep& P, gmask mask);

/// True when phi (an injective tuple over [I.N]) satisfies every constraint
/// and target whose support lies inside its image; direct evaluation.
bool slow_pmap_feasible(const PolymatroidRep& P, const PMap& phi,
                        const ConstraintSet& I, const TargetTable& targets);

/// All feasible injective tuples of length P.ground_size(), in ascending
/// lexicographic order, by plain depth-first search without any pruning.
std::vector<PMap> slow_feasible_pmaps(const PolymatroidRep& P,
                                      const ConstraintSet& I,
                                      const TargetTable& targets);

/// The ascending-lex-least feasible tuple whose first size-1 entries do not
/// precede parent_cert (the resumption frontier), or nothing; no pruning.
std::optional<PMap> slow_extend(const PolymatroidRep& P, const PMap& parent_cert,
                                const ConstraintSet& I, const TargetTable& targets);

/// Every element of the group generated by gens, by breadth-first closure;
/// throws past the cap.
std::vector<GroupElement> slow_group_closure(const std::vector<GroupElement>& gens,
                                             std::size_t cap = 2000000);

/// Orbit partition of the m-element subsets of the domain under the group
/// generated by gens (acting element-wise), by breadth-first search over
/// subsets. Subsets are sorted handle lists; zero-dimensional domain
/// elements are excluded when skip_zero is set. Returns subset -> class id.
std::map<std::vector<int>, int> slow_subset_orbits(
    const GrassmannianIndex& domain, const std::vector<GroupElement>& gens,
    int m, bool skip_zero);

/// Exact rank of an integer matrix (fraction-free elimination).
int slow_int_rank(const std::vector<Row>& rows, int dim);

/// Facets of a full-dimensional cone spanned by the generators: every
/// (dim-1)-subset contributes its generalized cross product when the signs
/// of all generator products agree. Requires slow_int_rank(gens) == dim.
/// Rows are gcd-reduced and sorted, oriented so that a . x >= 0 holds inside.
std::vector<Row> slow_facets_fulldim(const std::vector<Row>& gens, int dim);

}  // namespace clrp::testing
