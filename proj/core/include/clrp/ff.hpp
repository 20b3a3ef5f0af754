#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clrp {

/// Domain error for all library-level failures (bad input, unsupported
/// parameters, violated preconditions detected at runtime).
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Field element, encoded as an integer in 0..q-1 whose base-p digits are the
/// coefficients of the representing polynomial (digit i = coefficient of x^i).
using felt = std::uint8_t;

/// Exact arithmetic in GF(q), q = p^t <= 256.
///
/// The reduction polynomial per q is fixed (Conway polynomial for t >= 2,
/// x - g with g the smallest primitive root for t = 1), so the element
/// encoding — and everything downstream that hashes canonical forms — is
/// bit-stable across runs and platforms. x is a primitive element by
/// construction; multiplication runs on log/antilog tables.
class FiniteField {
 public:
  int p = 0;          ///< prime characteristic
  int t = 0;          ///< extension degree
  int q = 0;          ///< order p^t
  std::vector<int> reduction_poly;  ///< ascending-degree coefficients, size t+1, monic

  FiniteField() = default;

  felt add(felt a, felt b) const { return add_tab_[std::size_t(a) * q + b]; }
  felt sub(felt a, felt b) const { return add_tab_[std::size_t(a) * q + neg_tab_[b]]; }
  felt neg(felt a) const { return neg_tab_[a]; }
  felt mul(felt a, felt b) const { return mul_tab_[std::size_t(a) * q + b]; }

  felt inv(felt a) const {
    if (a == 0) throw error("inv: zero has no multiplicative inverse");
    return inv_tab_[a];
  }

  /// a^(p^k), the k-th power of the Frobenius automorphism; k in 0..t-1.
  felt frobenius(felt a, int k) const {
    if (k < 0 || k >= t) throw error("frobenius: power out of range");
    if (a == 0) return 0;
    return frob_tab_[std::size_t(k) * q + a];
  }

  /// Fixed primitive element (the class of x; equals the smallest primitive
  /// root mod p when t = 1).
  felt primitive_element() const { return q == 2 ? felt(1) : antilog_[1]; }

  felt pow(felt a, long long e) const;

  bool operator==(const FiniteField& o) const { return p == o.p && t == o.t; }

  friend FiniteField field_make(int p, int t);

 private:
  std::vector<felt> add_tab_, mul_tab_, neg_tab_, inv_tab_, frob_tab_;
  std::vector<felt> antilog_;   // antilog_[i] = x^i, i in 0..q-2
  std::vector<int> log_;        // inverse of antilog_ on nonzero elements
  void build_tables();
};

/// Constructs GF(p^t) with the fixed reduction polynomial for that order.
/// Throws on non-prime p or unsupported order (p^t > 256).
FiniteField field_make(int p, int t);

/// Shared interned field instance (tables built once per order).
const FiniteField& field_cache(int p, int t);

/// Convenience: interned field looked up by order q (q must be a prime power).
const FiniteField& field_of_order(int q);

/// Dense row-major matrix over a finite field.
struct Matrix {
  int rows = 0;
  int cols = 0;
  const FiniteField* f = nullptr;
  std::vector<felt> a;

  Matrix() = default;
  Matrix(int r, int c, const FiniteField& field)
      : rows(r), cols(c), f(&field), a(std::size_t(r) * c, 0) {}

  felt& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  felt at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  static Matrix identity(int n, const FiniteField& field);
  Matrix transposed() const;
};

struct RrefResult {
  Matrix m;
  int rank = 0;
  std::vector<int> pivot_cols;
};

/// Reduced row echelon form: leftmost pivots, pivots scaled to 1, eliminated
/// above and below. Deterministic, so it doubles as a canonical form for row
/// spaces.
RrefResult rref(const Matrix& m);

int mat_rank(const Matrix& m);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_inverse(const Matrix& a);  ///< throws on non-square or singular input

}  // namespace clrp
