#include "clrp/ff.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace clrp {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Fixed reduction polynomials (Conway polynomials) for every extension order
// p^t <= 256 with t >= 2, as ascending-degree coefficient lists.
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> tab = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return tab;
}

// Polynomial arithmetic over F_p on ascending-coefficient vectors, used only
// for the construction-time irreducibility check.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  int dm = int(m.size()) - 1;
  for (int i = int(a.size()) - 1; i >= dm; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    // m is monic: subtract c * x^(i-dm) * m.
    for (int j = 0; j <= dm; ++j) {
      a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
    }
  }
  a.resize(std::max<std::size_t>(1, dm));
  return a;
}

bool poly_is_zero(const std::vector<int>& a) {
  return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool poly_irreducible(const std::vector<int>& m, int p) {
  int deg = int(m.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    // All monic polynomials of degree d: p^d choices of lower coefficients.
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> div(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        div[i] = int(c % p);
        c /= p;
      }
      div[d] = 1;
      // Remainder of m by div via repeated leading-term elimination.
      std::vector<int> rem = m;
      for (int i = int(rem.size()) - 1; i >= d; --i) {
        int lead = rem[i] % p;
        if (lead == 0) continue;
        for (int j = 0; j <= d; ++j)
          rem[i - d + j] = ((rem[i - d + j] - lead * div[j]) % p + p) % p;
      }
      rem.resize(d);
      if (poly_is_zero(rem)) return false;
    }
  }
  return true;
}

int smallest_primitive_root(int p) {
  if (p == 2) return 1;
  // Factor p-1, then test candidates in ascending order.
  std::vector<int> primes;
  int n = p - 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  auto pow_mod = [p](long long b, long long e) {
    long long r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return int(r);
  };
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (int f : primes)
      if (pow_mod(g, (p - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw error("smallest_primitive_root: none found (non-prime modulus?)");
}

}  // namespace

void FiniteField::build_tables() {
  const int Q = q;
  // Digit decomposition helpers for the base-p encoding.
  auto digits = [&](int v) {
    std::vector<int> d(t);
    for (int i = 0; i < t; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int v = 0;
    for (int i = t - 1; i >= 0; --i) v = v * p + d[i];
    return v;
  };

  add_tab_.assign(std::size_t(Q) * Q, 0);
  neg_tab_.assign(Q, 0);
  for (int a = 0; a < Q; ++a) {
    auto da = digits(a);
    std::vector<int> dn(t);
    for (int i = 0; i < t; ++i) dn[i] = (p - da[i]) % p;
    neg_tab_[a] = felt(encode(dn));
    for (int b = 0; b < Q; ++b) {
      auto db = digits(b);
      std::vector<int> ds(t);
      for (int i = 0; i < t; ++i) ds[i] = (da[i] + db[i]) % p;
      add_tab_[std::size_t(a) * Q + b] = felt(encode(ds));
    }
  }

  // Multiply-by-x on the encoding: shift digits, reduce the overflow digit by
  // the (monic) reduction polynomial.
  auto times_x = [&](int v) {
    auto d = digits(v);
    int top = d[t - 1];
    std::vector<int> s(t, 0);
    for (int i = t - 1; i >= 1; --i) s[i] = d[i - 1];
    s[0] = 0;
    if (top != 0)
      for (int i = 0; i < t; ++i)
        s[i] = ((s[i] - top * reduction_poly[i]) % p + p) % p;
    return encode(s);
  };

  antilog_.assign(Q - 1, 0);
  log_.assign(Q, -1);
  int cur = 1;
  for (int i = 0; i < Q - 1; ++i) {
    if (cur == 0 || log_[cur] != -1)
      throw error("field_make: reduction polynomial is not primitive");
    antilog_[i] = felt(cur);
    log_[cur] = i;
    cur = times_x(cur);
  }
  if (cur != 1) throw error("field_make: multiplicative order mismatch");

  mul_tab_.assign(std::size_t(Q) * Q, 0);
  inv_tab_.assign(Q, 0);
  for (int a = 1; a < Q; ++a) {
    inv_tab_[a] = antilog_[(Q - 1 - log_[a]) % (Q - 1)];
    for (int b = 1; b < Q; ++b)
      mul_tab_[std::size_t(a) * Q + b] =
          antilog_[(log_[a] + log_[b]) % (Q - 1)];
  }

  frob_tab_.assign(std::size_t(t) * Q, 0);
  for (int k = 0; k < t; ++k) {
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    for (int a = 1; a < Q; ++a)
      frob_tab_[std::size_t(k) * Q + a] =
          antilog_[int(log_[a] * pk % (Q - 1))];
  }
}

felt FiniteField::pow(felt a, long long e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  long long lg = log_[a] * (e % (q - 1)) % (q - 1);
  return antilog_[lg];
}

FiniteField field_make(int p, int t) {
  if (!is_prime(p)) throw error("field_make: characteristic " + std::to_string(p) + " is not prime");
  if (t < 1) throw error("field_make: extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < t; ++i) {
    q *= p;
    if (q > 256) throw error("field_make: order " + std::to_string(p) + "^" + std::to_string(t) + " exceeds 256");
  }
  FiniteField f;
  f.p = p;
  f.t = t;
  f.q = int(q);
  if (t == 1) {
    int g = smallest_primitive_root(p);
    f.reduction_poly = {(p - g) % p, 1};
  } else {
    auto it = conway_table().find({p, t});
    if (it == conway_table().end())
      throw error("field_make: no reduction polynomial on file for this order");
    f.reduction_poly = it->second;
  }
  if (!poly_irreducible(f.reduction_poly, p))
    throw error("field_make: reduction polynomial is reducible");
  f.build_tables();
  return f;
}

const FiniteField& field_cache(int p, int t) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, FiniteField> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, t);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, field_make(p, t)).first;
  return it->second;
}

const FiniteField& field_of_order(int q) {
  if (q < 2) throw error("field_of_order: order must be >= 2");
  int p = 2;
  while (q % p != 0) {
    ++p;
    if (p > q) throw error("field_of_order: not a prime power");
  }
  int t = 0;
  int v = q;
  while (v > 1) {
    if (v % p != 0) throw error("field_of_order: " + std::to_string(q) + " is not a prime power");
    v /= p;
    ++t;
  }
  return field_cache(p, t);
}

Matrix Matrix::identity(int n, const FiniteField& field) {
  Matrix m(n, n, field);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix m(cols, rows, *f);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(c, r) = at(r, c);
  return m;
}

RrefResult rref(const Matrix& in) {
  RrefResult res;
  res.m = in;
  Matrix& m = res.m;
  const FiniteField& f = *in.f;
  int pr = 0;  // next pivot row
  for (int c = 0; c < m.cols && pr < m.rows; ++c) {
    int sel = -1;
    for (int r = pr; r < m.rows; ++r)
      if (m.at(r, c) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(pr, j));
    felt s = f.inv(m.at(pr, c));
    if (s != 1)
      for (int j = c; j < m.cols; ++j) m.at(pr, j) = f.mul(m.at(pr, j), s);
    for (int r = 0; r < m.rows; ++r) {
      if (r == pr) continue;
      felt v = m.at(r, c);
      if (v == 0) continue;
      for (int j = c; j < m.cols; ++j)
        m.at(r, j) = f.sub(m.at(r, j), f.mul(v, m.at(pr, j)));
    }
    res.pivot_cols.push_back(c);
    ++pr;
  }
  res.rank = pr;
  return res;
}

int mat_rank(const Matrix& m) { return rref(m).rank; }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw error("mat_mul: shape mismatch");
  if (!(*a.f == *b.f)) throw error("mat_mul: field mismatch");
  const FiniteField& f = *a.f;
  Matrix c(a.rows, b.cols, f);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      felt v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        c.at(i, j) = f.add(c.at(i, j), f.mul(v, b.at(k, j)));
    }
  return c;
}

Matrix mat_inverse(const Matrix& a) {
  if (a.rows != a.cols) throw error("mat_inverse: matrix not square");
  const FiniteField& f = *a.f;
  Matrix aug(a.rows, 2 * a.cols, f);
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols + r) = 1;
  }
  RrefResult rr = rref(aug);
  if (rr.rank < a.rows) throw error("mat_inverse: matrix is singular");
  for (int i = 0; i < rr.rank; ++i)
    if (rr.pivot_cols[i] != i) throw error("mat_inverse: matrix is singular");
  Matrix inv(a.rows, a.cols, f);
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c) inv.at(r, c) = rr.m.at(r, a.cols + c);
  return inv;
}

}  // namespace clrp
