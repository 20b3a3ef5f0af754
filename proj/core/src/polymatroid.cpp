#include "clrp/polymatroid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace clrp {

bool RankVector::is_polymatroid(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (int(entries.size()) != (1 << N) - 1) return fail("entry count is not 2^N - 1");
  for (int v : entries)
    if (v < 0) return fail("negative rank value");
  const gmask full = gmask((1u << N) - 1);
  auto val = [&](gmask m) { return m == 0 ? 0 : at(m); };
  // Monotonicity: adding one element never lowers the rank.
  for (gmask m = 0; m <= full; ++m)
    for (int i = 0; i < N; ++i) {
      if (m & (1u << i)) continue;
      if (val(m | (1u << i)) < val(m))
        return fail("monotonicity fails at subset " + std::to_string(m) +
                    " with element " + std::to_string(i + 1));
    }
  // Submodularity in local form: f(S+a) + f(S+b) >= f(S+a+b) + f(S).
  for (gmask m = 0; m <= full; ++m)
    for (int a = 0; a < N; ++a) {
      if (m & (1u << a)) continue;
      for (int b = a + 1; b < N; ++b) {
        if (m & (1u << b)) continue;
        if (val(m | (1u << a)) + val(m | (1u << b)) <
            val(m | (1u << a) | (1u << b)) + val(m))
          return fail("submodularity fails at subset " + std::to_string(m) +
                      " with elements " + std::to_string(a + 1) + "," +
                      std::to_string(b + 1));
      }
    }
  return true;
}

std::string RankVector::serialize() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ',';
    os << entries[i];
  }
  return os.str();
}

std::atomic<std::uint64_t>& rank_eval_counter() {
  static std::atomic<std::uint64_t> counter{0};
  return counter;
}

int PolymatroidRep::rank(gmask mask) const {
  if (mask == 0) return 0;
  if (mask >= (1u << ground_size()))
    throw error("rank: subset mask out of range");
  auto it = rank_cache.find(mask);
  if (it != rank_cache.end()) return it->second;
  rank_eval_counter().fetch_add(1, std::memory_order_relaxed);
  int total_rows = 0;
  for (int i = 0; i < ground_size(); ++i)
    if (mask & (1u << i)) total_rows += subspace(i).k;
  Matrix m(total_rows, gi->r, *gi->f);
  int row = 0;
  for (int i = 0; i < ground_size(); ++i) {
    if (!(mask & (1u << i))) continue;
    const Subspace& s = subspace(i);
    for (int bi = 0; bi < s.k; ++bi, ++row)
      for (int j = 0; j < gi->r; ++j) m.at(row, j) = s.basis.at(bi, j);
  }
  int rk = mat_rank(m);
  rank_cache.emplace(mask, rk);
  return rk;
}

PolymatroidRep make_rep(const std::vector<Subspace>& spaces, int r, int q) {
  std::vector<int> K;
  for (const Subspace& s : spaces) K.push_back(s.k);
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  const GrassmannianIndex& gi = grassmannian_cache(r, K, q);
  std::vector<int> handles;
  for (const Subspace& s : spaces) handles.push_back(gi.handle_of(s));
  return PolymatroidRep(gi, std::move(handles));
}

RankVector rank_vector(const PolymatroidRep& P) {
  const int N = P.ground_size();
  if (N > 16) throw error("rank_vector: ground size exceeds 16");
  RankVector h;
  h.N = N;
  h.entries.resize((std::size_t(1) << N) - 1);
  for (gmask m = 1; m < (1u << N); ++m) h.at(m) = P.rank(m);
  return h;
}

PolymatroidRep delete_elements(const PolymatroidRep& P, const std::vector<int>& S) {
  std::vector<bool> drop(std::size_t(P.ground_size()), false);
  for (int i : S) {
    if (i < 0 || i >= P.ground_size()) throw error("delete_elements: index out of range");
    drop[std::size_t(i)] = true;
  }
  std::vector<int> handles;
  for (int i = 0; i < P.ground_size(); ++i)
    if (!drop[std::size_t(i)]) handles.push_back(P.handles[std::size_t(i)]);
  return PolymatroidRep(*P.gi, std::move(handles));
}

SimplePart underlying_simple(const PolymatroidRep& P) {
  SimplePart sp;
  int loops = 0;
  std::vector<int> kept_handles;
  std::vector<int> class_of(std::size_t(P.ground_size()), -1);
  for (int i = 0; i < P.ground_size(); ++i) {
    if (P.subspace(i).k == 0) {
      ++loops;
      continue;
    }
    int h = P.handles[std::size_t(i)];
    int cls = -1;
    for (std::size_t c = 0; c < kept_handles.size(); ++c)
      if (kept_handles[c] == h) {
        cls = int(c);
        break;
      }
    if (cls < 0) {
      cls = int(kept_handles.size());
      kept_handles.push_back(h);
      sp.kept.push_back(i);
      sp.degree.push_back(0);
    }
    class_of[std::size_t(i)] = cls;
    ++sp.degree[std::size_t(cls)];
  }
  sp.degree.push_back(loops);
  sp.us = PolymatroidRep(*P.gi, kept_handles);
  return sp;
}

namespace {

// Searches for a bijection sigma on [s] that preserves the rank function of
// `us` and carries deg1 onto deg2 (deg2[sigma[j]] == deg1[j]); returns it if
// one exists. Used both for the degree-matching test and, with deg1 == deg2,
// for automorphisms.
std::optional<std::vector<int>> degree_matching_automorphism(
    const PolymatroidRep& us, const std::vector<int>& deg1,
    const std::vector<int>& deg2) {
  const int s = us.ground_size();
  std::vector<int> sigma(std::size_t(s), -1);
  std::vector<bool> used(std::size_t(s), false);
  // Incremental rank check: subsets of the assigned prefix must keep rank.
  std::function<bool(int)> go = [&](int d) -> bool {
    if (d == s) return true;
    for (int img = 0; img < s; ++img) {
      if (used[std::size_t(img)]) continue;
      if (deg2[std::size_t(img)] != deg1[std::size_t(d)]) continue;
      sigma[std::size_t(d)] = img;
      used[std::size_t(img)] = true;
      bool ok = true;
      for (gmask m = 0; ok && m < (1u << d); ++m) {
        gmask s1 = m | (1u << d);
        gmask s2 = 0;
        for (int j = 0; j <= d; ++j)
          if (s1 & (1u << j)) s2 |= (1u << sigma[std::size_t(j)]);
        if (us.rank(s1) != us.rank(s2)) ok = false;
      }
      if (ok && go(d + 1)) return true;
      used[std::size_t(img)] = false;
      sigma[std::size_t(d)] = -1;
    }
    return false;
  };
  if (go(0)) return sigma;
  return std::nullopt;
}

std::vector<std::string> sorted_keys(const PolymatroidRep& P) {
  std::vector<std::string> keys;
  for (int i = 0; i < P.ground_size(); ++i) keys.push_back(P.subspace(i).key());
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

std::optional<std::vector<int>> strong_isomorphic(const PolymatroidRep& P1,
                                                  const PolymatroidRep& P2) {
  const int N = P1.ground_size();
  if (N != P2.ground_size()) return std::nullopt;
  if (N == 0) return std::vector<int>{};
  // Invariant prechecks.
  {
    std::vector<int> s1, s2;
    for (int i = 0; i < N; ++i) {
      s1.push_back(P1.rank(gmask(1) << i));
      s2.push_back(P2.rank(gmask(1) << i));
    }
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
    if (P1.rank(gmask((1u << N) - 1)) != P2.rank(gmask((1u << N) - 1)))
      return std::nullopt;
  }
  SimplePart u1 = underlying_simple(P1);
  SimplePart u2 = underlying_simple(P2);
  if (u1.us.ground_size() != u2.us.ground_size()) return std::nullopt;
  if (u1.degree.back() != u2.degree.back()) return std::nullopt;
  {
    std::vector<int> d1 = u1.degree, d2 = u2.degree;
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2) return std::nullopt;
  }

  const bool same_universe =
      P1.q() == P2.q() && P1.ambient() == P2.ambient() &&
      sorted_keys(u1.us) == sorted_keys(u2.us);
  if (same_universe) {
    // Align both simple parts on the sorted handle order, then look for a
    // rank-automorphism of the common simple part matching the degree
    // vectors classwise.
    const int s = u1.us.ground_size();
    std::vector<int> ord1(std::size_t(s), 0), ord2(std::size_t(s), 0);
    for (int i = 0; i < s; ++i) ord1[std::size_t(i)] = ord2[std::size_t(i)] = i;
    auto by_key = [](const PolymatroidRep& us) {
      return [&us](int a, int b) { return us.subspace(a).key() < us.subspace(b).key(); };
    };
    std::sort(ord1.begin(), ord1.end(), by_key(u1.us));
    std::sort(ord2.begin(), ord2.end(), by_key(u2.us));
    std::vector<int> sorted_handles;
    for (int j = 0; j < s; ++j)
      sorted_handles.push_back(u1.us.handles[std::size_t(ord1[std::size_t(j)])]);
    PolymatroidRep usS(*P1.gi, sorted_handles);
    std::vector<int> deg1(std::size_t(s), 0), deg2(std::size_t(s), 0);
    for (int j = 0; j < s; ++j) {
      deg1[std::size_t(j)] = u1.degree[std::size_t(ord1[std::size_t(j)])];
      deg2[std::size_t(j)] = u2.degree[std::size_t(ord2[std::size_t(j)])];
    }
    auto sigma = degree_matching_automorphism(usS, deg1, deg2);
    if (!sigma) return std::nullopt;
    // Expand the class map into a ground bijection: the members of P1's j-th
    // sorted class map, in ground order, onto the members of P2's
    // sigma[j]-th sorted class; loops map to loops in ground order.
    std::vector<std::vector<int>> members1(std::size_t(s), std::vector<int>{}), members2(std::size_t(s), std::vector<int>{});
    std::vector<int> loops1, loops2;
    auto fill = [&](const PolymatroidRep& P, const std::vector<int>& ord,
                    const PolymatroidRep& us_ref,
                    std::vector<std::vector<int>>& members, std::vector<int>& loops) {
      std::map<int, int> class_by_handle;  // handle -> sorted class position
      for (int j = 0; j < s; ++j)
        class_by_handle[us_ref.handles[std::size_t(ord[std::size_t(j)])]] = j;
      for (int i = 0; i < P.ground_size(); ++i) {
        if (P.subspace(i).k == 0)
          loops.push_back(i);
        else
          members[std::size_t(class_by_handle.at(P.handles[std::size_t(i)]))].push_back(i);
      }
    };
    fill(P1, ord1, u1.us, members1, loops1);
    fill(P2, ord2, u2.us, members2, loops2);
    std::vector<int> witness(std::size_t(N), -1);
    for (int j = 0; j < s; ++j) {
      const auto& a = members1[std::size_t(j)];
      const auto& b = members2[std::size_t((*sigma)[std::size_t(j)])];
      if (a.size() != b.size()) return std::nullopt;
      for (std::size_t t = 0; t < a.size(); ++t)
        witness[std::size_t(a[t])] = b[t];
    }
    for (std::size_t t = 0; t < loops1.size(); ++t)
      witness[std::size_t(loops1[t])] = loops2[t];
    return witness;
  }

  // Generic fallback: rank-pruned backtracking over ground bijections.
  std::vector<int> sigma(std::size_t(N), -1);
  std::vector<bool> used(std::size_t(N), false);
  std::function<bool(int)> go = [&](int d) -> bool {
    if (d == N) return true;
    for (int img = 0; img < N; ++img) {
      if (used[std::size_t(img)]) continue;
      if (P1.rank(gmask(1) << d) != P2.rank(gmask(1) << img)) continue;
      sigma[std::size_t(d)] = img;
      used[std::size_t(img)] = true;
      bool ok = true;
      for (gmask m = 0; ok && m < (1u << d); ++m) {
        gmask s1 = m | (1u << d);
        gmask s2 = 0;
        for (int j = 0; j <= d; ++j)
          if (s1 & (1u << j)) s2 |= (1u << sigma[std::size_t(j)]);
        if (P1.rank(s1) != P2.rank(s2)) ok = false;
      }
      if (ok && go(d + 1)) return true;
      used[std::size_t(img)] = false;
      sigma[std::size_t(d)] = -1;
    }
    return false;
  };
  if (go(0)) return sigma;
  return std::nullopt;
}

std::vector<std::vector<int>> rank_automorphisms(const PolymatroidRep& P,
                                                 int max_ground,
                                                 std::size_t max_count) {
  const int N = P.ground_size();
  std::vector<std::vector<int>> out;
  std::vector<int> identity(std::size_t(N), 0);
  for (int i = 0; i < N; ++i) identity[std::size_t(i)] = i;
  if (N > max_ground) return {identity};
  std::vector<int> sigma(std::size_t(N), -1);
  std::vector<bool> used(std::size_t(N), false);
  bool overflow = false;
  std::function<void(int)> go = [&](int d) {
    if (overflow) return;
    if (d == N) {
      out.push_back(sigma);
      if (out.size() > max_count) overflow = true;
      return;
    }
    for (int img = 0; img < N && !overflow; ++img) {
      if (used[std::size_t(img)]) continue;
      sigma[std::size_t(d)] = img;
      used[std::size_t(img)] = true;
      bool ok = true;
      for (gmask m = 0; ok && m < (1u << d); ++m) {
        gmask s1 = m | (1u << d);
        gmask s2 = 0;
        for (int j = 0; j <= d; ++j)
          if (s1 & (1u << j)) s2 |= (1u << sigma[std::size_t(j)]);
        if (P.rank(s1) != P.rank(s2)) ok = false;
      }
      if (ok) go(d + 1);
      used[std::size_t(img)] = false;
      sigma[std::size_t(d)] = -1;
    }
  };
  go(0);
  if (overflow || out.empty()) return {identity};
  return out;
}

void ClassTuple::validate() const {
  if (N < 1 || N > 16) throw error("class tuple: ground size out of range");
  if (r_l < 0 || r_l > r_u) throw error("class tuple: bad ambient window");
  if (K.empty()) throw error("class tuple: empty rank set");
  for (std::size_t i = 0; i < K.size(); ++i) {
    if (K[i] < 0) throw error("class tuple: negative singleton rank");
    if (i > 0 && K[i] <= K[i - 1])
      throw error("class tuple: ranks must be ascending and distinct");
  }
  if (s_l > s_u || s_u > N || s_l < 0)
    throw error("class tuple: bad parallel-class window");
}

}  // namespace clrp
