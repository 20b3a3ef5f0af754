#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <unordered_map>
#include <vector>

#include "clrp/ff.hpp"

namespace clrp {

using bigint = boost::multiprecision::cpp_int;

/// A subspace of F_q^r in canonical form: the unique reduced-row-echelon basis
/// of its row space. Two Subspace values are equal exactly when they are the
/// same subspace.
struct Subspace {
  int r = 0;     ///< ambient dimension
  int k = 0;     ///< subspace dimension (number of basis rows)
  Matrix basis;  ///< k x r matrix in RREF; zero subspace has k = 0

  bool operator==(const Subspace& o) const {
    return r == o.r && k == o.k && basis.a == o.basis.a;
  }
  /// Orders by dimension, then lexicographically on the flattened basis.
  bool operator<(const Subspace& o) const {
    if (k != o.k) return k < o.k;
    return basis.a < o.basis.a;
  }
  /// Compact byte key for hashing/interning.
  std::string key() const;
};

/// Canonicalizes the span of the given row vectors (each of length r).
Subspace canonicalize(const std::vector<std::vector<felt>>& vectors, int r,
                      const FiniteField& f);
Subspace canonicalize(const Matrix& rows);

/// The zero subspace of F_q^r.
Subspace zero_subspace(int r, const FiniteField& f);

/// Canonical span of the union of the listed subspaces' bases.
Subspace subspace_sum(const std::vector<Subspace>& spaces, const FiniteField& f);
int sum_dim(const std::vector<Subspace>& spaces, const FiniteField& f);

/// Number of k-dimensional subspaces of F_q^r, exact.
bigint gaussian_binomial(int r, int k, int q);

/// Interned, deterministically ordered listing of all subspaces of F_q^r with
/// dimension in K. Order: dimension ascending, then lexicographic on the
/// flattened canonical basis. Handles are list indices.
class GrassmannianIndex {
 public:
  int r = 0;
  int q = 0;
  std::vector<int> K;  ///< sorted ascending
  const FiniteField* f = nullptr;
  std::vector<Subspace> elems;

  int size() const { return int(elems.size()); }
  const Subspace& operator[](int h) const { return elems[std::size_t(h)]; }

  /// Handle of a canonical subspace; throws if it is not in the index.
  int handle_of(const Subspace& s) const;
  /// Handle, or -1 when absent.
  int find(const Subspace& s) const;

 private:
  std::unordered_map<std::string, int> lookup_;
  friend GrassmannianIndex enumerate_grassmannian(int r, std::vector<int> K, int q);
};

/// Enumerates Gr_q(r, K) via RREF pivot patterns: every subspace appears
/// exactly once; the count matches the Gaussian-binomial sum by construction.
GrassmannianIndex enumerate_grassmannian(int r, std::vector<int> K, int q);

/// Shared interned index per (r, K, q).
const GrassmannianIndex& grassmannian_cache(int r, std::vector<int> K, int q);

}  // namespace clrp
