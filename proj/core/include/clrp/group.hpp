#pragma once

#include <optional>
#include <vector>

#include "clrp/subspace.hpp"

namespace clrp {

/// An element of the projective semilinear group PGammaL(r, q): an invertible
/// matrix modulo scalars (stored center-normalized: the first nonzero entry in
/// row-major order is scaled to 1) together with a Frobenius power.
struct GroupElement {
  Matrix A;      ///< r x r invertible, center-normalized
  int frob = 0;  ///< Frobenius exponent in 0..t-1

  bool operator==(const GroupElement& o) const {
    return frob == o.frob && A.a == o.A.a;
  }
};

GroupElement group_identity(int r, const FiniteField& f);
bool is_identity(const GroupElement& g);

/// Scales the matrix so its first nonzero row-major entry is 1 (canonical
/// coset representative modulo the scalar center).
void center_normalize(Matrix& A);

/// Composition: apply g1 first, then g2.
GroupElement compose(const GroupElement& g2, const GroupElement& g1);
GroupElement inverse(const GroupElement& g);

/// Image of a subspace: each basis vector is mapped through the Frobenius
/// power entrywise and then by the matrix; the result is canonicalized.
Subspace act(const GroupElement& g, const Subspace& v);

/// Standard generating set of PGammaL(r, q): a primitive-scalar diagonal
/// (omitted when q = 2), an r-cycle permutation matrix and one transvection
/// (both omitted when r = 1), plus the Frobenius map when t > 1.
std::vector<GroupElement> group_generators(int r, int q);

/// |PGammaL(r, q)| = t / (q - 1) * prod_{i=0}^{r-1} (q^r - q^i), exact.
bigint group_order(int r, int q);

// ---------------------------------------------------------------------------
// Permutation image on projective points, and permutation-group algorithms.
// The action of PGammaL(r, q) on the 1-dimensional subspaces is faithful for
// r >= 2, so stabilizer chains run on small permutations instead of matrices.
// ---------------------------------------------------------------------------

using Perm = std::vector<int>;  ///< perm[i] = image of point i

Perm compose_perm(const Perm& p2, const Perm& p1);  ///< apply p1 first
Perm inverse_perm(const Perm& p);
bool is_identity_perm(const Perm& p);

/// A group element together with its permutation image on a fixed point set.
struct PElem {
  Perm perm;
  GroupElement g;
};

PElem compose(const PElem& a, const PElem& b);  ///< apply b first
PElem inverse(const PElem& a);

/// Interned projective points of F_q^r (the dimension-1 Grassmannian).
const GrassmannianIndex& projective_points(int r, int q);

/// Permutation image of g on projective_points(r, q).
Perm point_perm(const GroupElement& g, const GrassmannianIndex& pts);
PElem make_pelem(const GroupElement& g, const GrassmannianIndex& pts);

/// Incremental Schreier-Sims stabilizer chain over a permutation domain.
/// Deterministic: base points are chosen as the smallest point moved by the
/// offending residue, orbits are grown breadth-first in fixed generator order.
class SchreierSims {
 public:
  explicit SchreierSims(int degree) : degree_(degree) {}

  /// Adds g to the generated group. Returns true when the group grew.
  bool insert(const PElem& g);
  bool contains(const PElem& g) const;
  bigint order() const;
  int degree() const { return degree_; }

 private:
  struct Level {
    int base = -1;
    std::vector<PElem> gens;
    std::vector<int> orbit;             // BFS order, orbit[0] == base
    std::vector<std::optional<PElem>> transversal;  // maps base -> point
  };
  int degree_;
  std::vector<Level> levels_;

  /// Generators stabilizing every base point before lev: exactly those
  /// assigned to lev or deeper. Level orbits must use this cumulative set.
  std::vector<PElem> gens_at(std::size_t lev) const;
  /// Sifts g from lev on and stores the residue at the level where the sift
  /// gets stuck (appending a level if it survives the whole chain). Returns
  /// false when g sifts to the identity. Does not re-close the chain.
  bool place(PElem g, std::size_t lev);
  void rebuild_orbit(std::size_t lev);
};

/// Discards generators already contained in the group generated by the kept
/// prefix (insertion-order greedy reduction via a stabilizer chain).
std::vector<PElem> reduce_generators(const std::vector<PElem>& gens, int degree);

/// Exact order of the permutation image of the generated group.
bigint subgroup_order(const std::vector<GroupElement>& gens, int r, int q);

/// Orbit of one subspace under a generator list, with per-member transporters
/// and stabilizer generators (Schreier generators, reduced).
struct OrbitData {
  Subspace base;
  std::vector<Subspace> orbit;              ///< BFS order from base
  std::vector<GroupElement> transporter;    ///< transporter[i] maps base to orbit[i]
  std::vector<GroupElement> stab_gens;      ///< generators of the stabilizer of base
};

OrbitData orbit_with_transporter(const std::vector<GroupElement>& gens,
                                 const Subspace& base);

/// Orbits of a generator list on a whole interned Grassmannian. Orbit
/// representatives are the minimal handles (ascending scan + BFS), and
/// transporters are recovered by walking the BFS forest.
class PointOrbits {
 public:
  PointOrbits(std::vector<GroupElement> gens, const GrassmannianIndex& domain);

  const GrassmannianIndex& domain() const { return *domain_; }
  int rep_of(int h) const { return rep_[std::size_t(h)]; }
  const std::vector<int>& roots() const { return roots_; }
  const std::vector<int>& members_of_root(int root) const;
  const std::vector<GroupElement>& generators() const { return gens_; }
  /// Image of handle h under generator gi.
  int gen_image(int gi, int h) const { return dperm_[std::size_t(gi)][std::size_t(h)]; }

  /// Element mapping rep_of(x) to x.
  GroupElement transporter(int x) const;

  /// Reduced generators of the stabilizer of root p inside the generated
  /// group (Schreier generators over p's orbit, sifted).
  std::vector<GroupElement> point_stabilizer(int p, const GrassmannianIndex& pts) const;

 private:
  std::vector<GroupElement> gens_;
  const GrassmannianIndex* domain_;
  std::vector<std::vector<int>> dperm_;  // per generator, permutation of domain handles
  std::vector<int> rep_, from_, via_;
  std::vector<int> roots_;
  std::vector<std::vector<int>> members_;  // indexed by root order
  std::vector<int> root_index_;            // handle -> index into roots_/members_ (-1 if none)
};

}  // namespace clrp
