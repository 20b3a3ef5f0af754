#include "clrp/subspace.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace clrp {

std::string Subspace::key() const {
  std::string s;
  s.reserve(basis.a.size() + 1);
  s.push_back(char(k));
  for (felt v : basis.a) s.push_back(char(v));
  return s;
}

Subspace canonicalize(const Matrix& rows) {
  RrefResult rr = rref(rows);
  Subspace s;
  s.r = rows.cols;
  s.k = rr.rank;
  s.basis = Matrix(rr.rank, rows.cols, *rows.f);
  for (int i = 0; i < rr.rank; ++i)
    for (int j = 0; j < rows.cols; ++j) s.basis.at(i, j) = rr.m.at(i, j);
  return s;
}

Subspace canonicalize(const std::vector<std::vector<felt>>& vectors, int r,
                      const FiniteField& f) {
  for (const auto& v : vectors)
    if (int(v.size()) != r) throw error("canonicalize: vector length differs from ambient dimension");
  Matrix m(int(vectors.size()), r, f);
  for (int i = 0; i < int(vectors.size()); ++i)
    for (int j = 0; j < r; ++j) m.at(i, j) = vectors[std::size_t(i)][std::size_t(j)];
  return canonicalize(m);
}

Subspace zero_subspace(int r, const FiniteField& f) {
  Subspace s;
  s.r = r;
  s.k = 0;
  s.basis = Matrix(0, r, f);
  return s;
}

Subspace subspace_sum(const std::vector<Subspace>& spaces, const FiniteField& f) {
  if (spaces.empty()) throw error("subspace_sum: empty list has no ambient dimension");
  int r = spaces.front().r;
  int total_rows = 0;
  for (const auto& s : spaces) {
    if (s.r != r) throw error("subspace_sum: mixed ambient dimensions");
    total_rows += s.k;
  }
  Matrix m(total_rows, r, f);
  int row = 0;
  for (const auto& s : spaces)
    for (int i = 0; i < s.k; ++i, ++row)
      for (int j = 0; j < r; ++j) m.at(row, j) = s.basis.at(i, j);
  return canonicalize(m);
}

int sum_dim(const std::vector<Subspace>& spaces, const FiniteField& f) {
  return subspace_sum(spaces, f).k;
}

bigint gaussian_binomial(int r, int k, int q) {
  if (k < 0 || k > r) return 0;
  bigint num = 1, den = 1;
  bigint Q = q;
  for (int i = 0; i < k; ++i) {
    bigint qr = 1, qd = 1;
    for (int e = 0; e < r - i; ++e) qr *= Q;
    for (int e = 0; e < i + 1; ++e) qd *= Q;
    num *= qr - 1;
    den *= qd - 1;
  }
  return num / den;
}

int GrassmannianIndex::find(const Subspace& s) const {
  auto it = lookup_.find(s.key());
  return it == lookup_.end() ? -1 : it->second;
}

int GrassmannianIndex::handle_of(const Subspace& s) const {
  int h = find(s);
  if (h < 0) throw error("GrassmannianIndex: subspace not in index");
  return h;
}

namespace {

// All k-dimensional subspaces of F_q^r, one per RREF pivot pattern/filling.
void enumerate_dim(int r, int k, const FiniteField& f, std::vector<Subspace>& out) {
  if (k == 0) {
    out.push_back(zero_subspace(r, f));
    return;
  }
  if (k > r) return;
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  auto next_combination = [&]() {
    int i = k - 1;
    while (i >= 0 && piv[i] == r - k + i) --i;
    if (i < 0) return false;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    return true;
  };
  do {
    // Free positions: right of the row's pivot and not a pivot column.
    std::vector<bool> is_piv(r, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < k; ++i)
      for (int j = piv[i] + 1; j < r; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);

    std::vector<int> fill(free_pos.size(), 0);
    while (true) {
      Subspace s;
      s.r = r;
      s.k = k;
      s.basis = Matrix(k, r, f);
      for (int i = 0; i < k; ++i) s.basis.at(i, piv[i]) = 1;
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        s.basis.at(free_pos[t].first, free_pos[t].second) = felt(fill[t]);
      out.push_back(std::move(s));
      // Odometer over F_q assignments.
      std::size_t t = 0;
      while (t < fill.size()) {
        if (++fill[t] < f.q) break;
        fill[t] = 0;
        ++t;
      }
      if (t == fill.size()) break;
    }
  } while (next_combination());
}

}  // namespace

GrassmannianIndex enumerate_grassmannian(int r, std::vector<int> K, int q) {
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  for (int k : K)
    if (k < 0 || k > r) throw error("enumerate_grassmannian: dimension " + std::to_string(k) + " outside 0..r");
  const FiniteField& f = field_of_order(q);
  GrassmannianIndex gi;
  gi.r = r;
  gi.q = q;
  gi.K = K;
  gi.f = &f;
  for (int k : K) {
    std::vector<Subspace> layer;
    enumerate_dim(r, k, f, layer);
    std::sort(layer.begin(), layer.end());
    for (auto& s : layer) gi.elems.push_back(std::move(s));
  }
  for (int h = 0; h < int(gi.elems.size()); ++h)
    gi.lookup_.emplace(gi.elems[std::size_t(h)].key(), h);

  bigint expect = 0;
  for (int k : K) expect += gaussian_binomial(r, k, q);
  if (bigint(gi.size()) != expect)
    throw error("enumerate_grassmannian: count mismatch against the product formula");
  return gi;
}

const GrassmannianIndex& grassmannian_cache(int r, std::vector<int> K, int q) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, std::vector<int>>, GrassmannianIndex> cache;
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(r, q, K);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, enumerate_grassmannian(r, K, q)).first;
  return it->second;
}

}  // namespace clrp
