#pragma once

#include <cstdint>
#include <vector>

#include "clrp/polymatroid.hpp"

namespace clrp {

/// Exact integer vectors; every public row is gcd-reduced.
using Row = std::vector<long long>;

/// A polyhedral cone in V-description: the span of the lineality rows plus
/// nonnegative combinations of the rays. Lineality rows are sign-normalized
/// and sorted; rays are gcd-reduced and sorted (their sign is meaningful).
struct Cone {
  int dim = 0;
  std::vector<Row> lineality;
  std::vector<Row> rays;
};

/// H-description: x satisfies every eq row with equality and every ineq row
/// with >= 0. Rows are canonical (gcd-reduced, eq rows sign-normalized, both
/// lists sorted), and the ineq rows are irredundant facets.
struct HRep {
  int dim = 0;
  std::vector<Row> eq;
  std::vector<Row> ineq;
};

/// Double description: intersects the halfspaces (ineq rows, >= 0) and
/// hyperplanes (eq rows) starting from full space. Exact long long
/// arithmetic with 128-bit intermediates; throws on overflow or dim > 12.
Cone dd_from_halfspaces(const HRep& input);

/// Minimal H-description of the conic hull of the generators, by polar
/// duality (one double-description run on the polar system).
HRep conic_hull_hrep(const std::vector<Row>& generators, int dim);

/// Minimal V-description of the conic hull (double polar).
Cone cone_from_generators(const std::vector<Row>& generators, int dim);

bool satisfies_hrep(const HRep& h, const Row& x);

/// Set equality of conic hulls, by mutual inclusion of generators.
bool cone_equal(const std::vector<Row>& gens1, const std::vector<Row>& gens2,
                int dim);

/// Generators of the achievable region from full rank vectors: keep only the
/// singleton coordinates (label order), deduplicate, and append the free
/// free directions +e_i for edges i > k (capacity can grow); source
/// coordinates stay in the nonnegative orthant.
std::vector<Row> project_and_augment(const std::vector<RankVector>& hvectors,
                                     int k, int N);

/// The same augmentation for rows that are already singleton projections.
std::vector<Row> augment_rate_rows(const std::vector<std::vector<int>>& rows,
                                   int k, int N);

}  // namespace clrp
