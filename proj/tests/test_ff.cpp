#include <set>

#include "clrp/ff.hpp"
#include "doctest.h"

using namespace clrp;

namespace {

void check_field_axioms(const FiniteField& F) {
  const int q = F.q;
  // additive/multiplicative identities and inverses
  for (int a = 0; a < q; ++a) {
    CHECK(F.add(felt(a), 0) == felt(a));
    CHECK(F.mul(felt(a), 1) == felt(a));
    CHECK(F.add(felt(a), F.neg(felt(a))) == 0);
    if (a != 0) CHECK(F.mul(felt(a), F.inv(felt(a))) == 1);
  }
  // commutativity + distributivity + associativity (exhaustive)
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      CHECK(F.add(felt(a), felt(b)) == F.add(felt(b), felt(a)));
      CHECK(F.mul(felt(a), felt(b)) == F.mul(felt(b), felt(a)));
      for (int c = 0; c < q; ++c) {
        CHECK(F.add(F.add(felt(a), felt(b)), felt(c)) ==
              F.add(felt(a), F.add(felt(b), felt(c))));
        CHECK(F.mul(F.mul(felt(a), felt(b)), felt(c)) ==
              F.mul(felt(a), F.mul(felt(b), felt(c))));
        CHECK(F.mul(felt(a), F.add(felt(b), felt(c))) ==
              F.add(F.mul(felt(a), felt(b)), F.mul(felt(a), felt(c))));
      }
    }
}

}  // namespace

TEST_CASE("field axioms hold exhaustively for small orders") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27})
    check_field_axioms(field_of_order(q));
}

TEST_CASE("large orders: identities, inverses, frobenius") {
  for (int q : {32, 64, 81, 121, 128, 243, 256}) {
    const FiniteField& F = field_of_order(q);
    CHECK(F.q == q);
    for (int a = 1; a < q; ++a) {
      CHECK(F.mul(felt(a), F.inv(felt(a))) == 1);
      CHECK(F.add(felt(a), F.neg(felt(a))) == 0);
    }
    // Frobenius a -> a^p is a field automorphism.
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CHECK(F.frobenius(F.add(felt(a), felt(b)), 1) ==
              F.add(F.frobenius(felt(a), 1), F.frobenius(felt(b), 1)));
        CHECK(F.frobenius(F.mul(felt(a), felt(b)), 1) ==
              F.mul(F.frobenius(felt(a), 1), F.frobenius(felt(b), 1)));
      }
  }
}

TEST_CASE("frobenius equals repeated p-th powers") {
  const FiniteField& F = field_of_order(16);
  for (int a = 0; a < 16; ++a)
    for (int k = 0; k < F.t; ++k) {
      long long e = 1;
      for (int i = 0; i < k; ++i) e *= F.p;
      CHECK(F.frobenius(felt(a), k) == F.pow(felt(a), e));
    }
}

TEST_CASE("primitive element has full multiplicative order") {
  for (int q : {2, 3, 4, 5, 8, 9, 16, 27, 49}) {
    const FiniteField& F = field_of_order(q);
    const felt g = F.primitive_element();
    CHECK(F.pow(g, q - 1) == 1);
    std::set<felt> powers;
    felt x = 1;
    for (int i = 0; i < q - 1; ++i) {
      powers.insert(x);
      x = F.mul(x, g);
    }
    CHECK(int(powers.size()) == q - 1);
  }
}

TEST_CASE("fixed reduction polynomials are pinned") {
  // Ascending coefficients, monic: x^2+x+1, x^3+x+1, x^2+2x+2.
  CHECK(field_of_order(4).reduction_poly == std::vector<int>{1, 1, 1});
  CHECK(field_of_order(8).reduction_poly == std::vector<int>{1, 1, 0, 1});
  CHECK(field_of_order(9).reduction_poly == std::vector<int>{2, 2, 1});
  // Prime fields reduce by x - g with g the least primitive root.
  CHECK(field_of_order(3).reduction_poly == std::vector<int>{-2 + 3, 1});
  CHECK(field_of_order(5).reduction_poly == std::vector<int>{-2 + 5, 1});
  CHECK(field_of_order(7).reduction_poly == std::vector<int>{-3 + 7, 1});
}

TEST_CASE("pinned products in GF(4) and GF(3)") {
  const FiniteField& F4 = field_of_order(4);
  CHECK(F4.mul(2, 2) == 3);  // x * x = x + 1
  CHECK(F4.mul(2, 3) == 1);  // x * (x+1) = 1
  CHECK(F4.add(2, 3) == 1);
  const FiniteField& F3 = field_of_order(3);
  CHECK(F3.mul(2, 2) == 1);
  CHECK(F3.add(2, 2) == 1);
}

TEST_CASE("unsupported orders are rejected") {
  CHECK_THROWS_AS(field_of_order(6), error);
  CHECK_THROWS_AS(field_of_order(1), error);
  CHECK_THROWS_AS(field_of_order(512), error);
  CHECK_THROWS_AS(field_make(4, 1), error);
}

TEST_CASE("rref canonicalizes and is idempotent") {
  const FiniteField& F = field_of_order(2);
  Matrix m(3, 3, F);
  // rows: 110 / 011 / 101 (third = sum of first two)
  m.at(0, 0) = 1; m.at(0, 1) = 1;
  m.at(1, 1) = 1; m.at(1, 2) = 1;
  m.at(2, 0) = 1; m.at(2, 2) = 1;
  RrefResult r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivot_cols == std::vector<int>{0, 1});
  CHECK(r.m.at(0, 0) == 1);
  CHECK(r.m.at(0, 1) == 0);
  CHECK(r.m.at(0, 2) == 1);
  CHECK(r.m.at(1, 0) == 0);
  CHECK(r.m.at(1, 1) == 1);
  CHECK(r.m.at(1, 2) == 1);
  CHECK(rref(r.m).m == r.m);
}

TEST_CASE("rref is invariant under row mixing") {
  const FiniteField& F = field_of_order(5);
  Matrix m(2, 3, F);
  m.at(0, 0) = 2; m.at(0, 1) = 1; m.at(0, 2) = 4;
  m.at(1, 0) = 3; m.at(1, 1) = 3; m.at(1, 2) = 1;
  // the mixing matrix [[3,2],[1,2]] has determinant 4, invertible mod 5
  Matrix mixed(2, 3, F);
  for (int c = 0; c < 3; ++c) {
    mixed.at(0, c) = F.add(F.mul(3, m.at(0, c)), F.mul(2, m.at(1, c)));
    mixed.at(1, c) = F.add(m.at(0, c), F.mul(2, m.at(1, c)));
  }
  CHECK(mat_rank(mixed) == 2);
  CHECK(rref(m).m == rref(mixed).m);
}

TEST_CASE("matrix inverse round-trips") {
  const FiniteField& F = field_of_order(7);
  Matrix m(3, 3, F);
  const int vals[3][3] = {{1, 2, 3}, {0, 1, 4}, {5, 6, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = felt(vals[i][j]);
  REQUIRE(mat_rank(m) == 3);
  const Matrix inv = mat_inverse(m);
  CHECK(mat_mul(m, inv) == Matrix::identity(3, F));
  CHECK(mat_mul(inv, m) == Matrix::identity(3, F));
  Matrix sing(2, 2, F);
  sing.at(0, 0) = 1; sing.at(0, 1) = 2;
  sing.at(1, 0) = 3; sing.at(1, 1) = 6;
  CHECK_THROWS_AS(mat_inverse(sing), error);
}
