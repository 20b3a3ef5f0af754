#include "oracles.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace clrp::testing {

namespace {
using boost::multiprecision::cpp_int;
}

bool slow_is_polymatroid(const RankVector& h, std::string* why) {
  const gmask full = (gmask(1) << h.N) - 1;
  auto f = [&](gmask m) -> long long { return m == 0 ? 0 : h.at(m); };
  for (gmask s = 0; s <= full; ++s) {
    if (f(s) < 0) {
      if (why) *why = "negative value";
      return false;
    }
    for (int i = 0; i < h.N; ++i) {
      const gmask up = s | (gmask(1) << i);
      if (f(s) > f(up)) {
        if (why) *why = "not monotone";
        return false;
      }
    }
  }
  for (gmask s = 0; s <= full; ++s)
    for (gmask t = 0; t <= full; ++t)
      if (f(s) + f(t) < f(s | t) + f(s & t)) {
        if (why) *why = "not submodular";
        return false;
      }
  return true;
}

double slow_entropy_bits(const PolymatroidRep& P, gmask mask) {
  const FiniteField& F = *P.gi->f;
  const int r = P.ambient();
  const int q = F.q;
  long long points = 1;
  for (int i = 0; i < r; ++i) points *= q;

  std::map<std::string, long long> counts;
  std::vector<felt> u(std::size_t(r), 0);
  for (long long it = 0; it < points; ++it) {
    // odometer over base-q digits
    long long v = it;
    for (int i = 0; i < r; ++i) {
      u[std::size_t(i)] = felt(v % q);
      v /= q;
    }
    std::string key;
    for (int e = 0; e < P.ground_size(); ++e) {
      if (!(mask & (gmask(1) << e))) continue;
      const Subspace& V = P.subspace(e);
      for (int row = 0; row < V.k; ++row) {
        felt acc = 0;
        for (int col = 0; col < r; ++col)
          acc = F.add(acc, F.mul(V.basis.at(row, col), u[std::size_t(col)]));
        key += char('0' + acc);
      }
      key += '|';
    }
    ++counts[key];
  }
  double bits = 0.0;
  for (const auto& [key, c] : counts) {
    const double p = double(c) / double(points);
    bits -= p * std::log2(p);
  }
  return bits;
}

bool slow_pmap_feasible(const PolymatroidRep& P, const PMap& phi,
                        const ConstraintSet& I, const TargetTable& targets) {
  gmask image = 0;
  for (int v : phi) image |= gmask(1) << v;
  auto preimage_rank = [&](gmask mask) {
    gmask pre = 0;
    for (std::size_t l = 0; l < phi.size(); ++l)
      if (mask & (gmask(1) << phi[l])) pre |= gmask(1) << l;
    return P.rank(pre);
  };
  for (const LinearConstraint& c : I.constraints) {
    if ((c.support() & image) != c.support()) continue;
    long long acc = 0;
    for (const auto& [mask, coeff] : c.terms) acc += coeff * preimage_rank(mask);
    if (acc != 0) return false;
  }
  for (const auto& [mask, value] : targets.targets) {
    if ((mask & image) != mask) continue;
    if (preimage_rank(mask) != value) return false;
  }
  return true;
}

namespace {

void slow_pmap_dfs(const PolymatroidRep& P, const ConstraintSet& I,
                   const TargetTable& targets, PMap& phi,
                   std::vector<bool>& used, std::vector<PMap>& out) {
  if (static_cast<int>(phi.size()) == P.ground_size()) {
    out.push_back(phi);
    return;
  }
  for (int v = 0; v < I.N; ++v) {
    if (used[std::size_t(v)]) continue;
    phi.push_back(v);
    used[std::size_t(v)] = true;
    if (slow_pmap_feasible(P, phi, I, targets))
      slow_pmap_dfs(P, I, targets, phi, used, out);
    used[std::size_t(v)] = false;
    phi.pop_back();
  }
}

}  // namespace

std::vector<PMap> slow_feasible_pmaps(const PolymatroidRep& P,
                                      const ConstraintSet& I,
                                      const TargetTable& targets) {
  // Prefix feasibility prunes nothing incorrectly: feasibility only ever
  // inspects fully covered constraints, so it is monotone along extensions.
  PMap phi;
  std::vector<bool> used(std::size_t(I.N), false);
  std::vector<PMap> out;
  slow_pmap_dfs(P, I, targets, phi, used, out);
  return out;
}

std::optional<PMap> slow_extend(const PolymatroidRep& P, const PMap& parent_cert,
                                const ConstraintSet& I,
                                const TargetTable& targets) {
  for (const PMap& phi : slow_feasible_pmaps(P, I, targets)) {
    const std::size_t m = parent_cert.size();
    if (phi.size() < m) continue;
    const PMap prefix(phi.begin(), phi.begin() + long(m));
    if (prefix >= parent_cert) return phi;
  }
  return std::nullopt;
}

std::vector<GroupElement> slow_group_closure(const std::vector<GroupElement>& gens,
                                             std::size_t cap) {
  auto key_of = [](const GroupElement& g) {
    std::string k(g.A.a.begin(), g.A.a.end());
    k += char('0' + g.frob);
    return k;
  };
  if (gens.empty()) return {};
  std::vector<GroupElement> elems = {
      group_identity(gens.front().A.rows, *gens.front().A.f)};
  std::set<std::string> seen = {key_of(elems.front())};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const GroupElement& g : gens) {
      GroupElement h = compose(g, elems[i]);
      if (seen.insert(key_of(h)).second) {
        elems.push_back(std::move(h));
        if (elems.size() > cap) throw error("slow_group_closure: cap exceeded");
      }
    }
  }
  return elems;
}

std::map<std::vector<int>, int> slow_subset_orbits(
    const GrassmannianIndex& domain, const std::vector<GroupElement>& gens,
    int m, bool skip_zero) {
  // Domain permutation per generator, via the subspace action.
  std::vector<std::vector<int>> perm;
  for (const GroupElement& g : gens) {
    std::vector<int> p(std::size_t(domain.size()), -1);
    for (int h = 0; h < domain.size(); ++h)
      p[std::size_t(h)] = domain.handle_of(act(g, domain[h]));
    perm.push_back(std::move(p));
  }

  std::vector<int> pool;
  for (int h = 0; h < domain.size(); ++h)
    if (!skip_zero || domain[h].k > 0) pool.push_back(h);

  // All m-subsets of the pool.
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  const std::function<void(std::size_t)> pick = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == m) {
      subsets.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      pick(i + 1);
      cur.pop_back();
    }
  };
  pick(0);

  std::map<std::vector<int>, int> cls;
  int next = 0;
  for (const auto& s0 : subsets) {
    if (cls.count(s0)) continue;
    const int id = next++;
    std::vector<std::vector<int>> queue = {s0};
    cls[s0] = id;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::vector<int> s = queue[qi];
      for (const auto& p : perm) {
        std::vector<int> img;
        img.reserve(s.size());
        for (int h : s) img.push_back(p[std::size_t(h)]);
        std::sort(img.begin(), img.end());
        if (!cls.count(img)) {
          cls[img] = id;
          queue.push_back(img);
        }
      }
    }
  }
  return cls;
}

namespace {

/// Fraction-free Gaussian elimination rank over exact integers.
int rank_cpp_int(std::vector<std::vector<cpp_int>> a) {
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[row], a[piv]);
    for (std::size_t i = row + 1; i < a.size(); ++i) {
      if (a[i][col] == 0) continue;
      const cpp_int f1 = a[row][col], f2 = a[i][col];
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] = a[i][j] * f1 - a[row][j] * f2;
    }
    ++row;
  }
  return int(row);
}

}  // namespace

int slow_int_rank(const std::vector<Row>& rows, int dim) {
  std::vector<std::vector<cpp_int>> a;
  for (const Row& r : rows) {
    std::vector<cpp_int> v;
    for (int j = 0; j < dim; ++j) v.emplace_back(r[std::size_t(j)]);
    a.push_back(std::move(v));
  }
  return rank_cpp_int(std::move(a));
}

namespace {

/// det of an integer matrix by cofactor expansion (n <= 4 in practice).
cpp_int det_cofactor(const std::vector<std::vector<cpp_int>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  cpp_int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<cpp_int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<cpp_int> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[i][c]);
      minor.push_back(std::move(row));
    }
    const cpp_int term = a[0][j] * det_cofactor(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

long long to_ll(const cpp_int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw error("slow_facets_fulldim: coefficient overflow");
  return v.convert_to<long long>();
}

Row gcd_reduce(Row r) {
  long long g = 0;
  for (long long x : r) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (long long& x : r) x /= g;
  return r;
}

}  // namespace

std::vector<Row> slow_facets_fulldim(const std::vector<Row>& gens, int dim) {
  if (slow_int_rank(gens, dim) != dim)
    throw error("slow_facets_fulldim: generators do not span the space");
  std::set<Row> facets;
  const int n = int(gens.size());
  std::vector<int> idx(std::size_t(dim - 1), 0);
  const std::function<void(int, int)> choose = [&](int from, int need) {
    if (need == 0) {
      // generalized cross product of the chosen rows
      Row a(std::size_t(dim), 0);
      bool nonzero = false;
      for (int j = 0; j < dim; ++j) {
        std::vector<std::vector<cpp_int>> minor;
        for (int t = 0; t < dim - 1; ++t) {
          std::vector<cpp_int> row;
          for (int c = 0; c < dim; ++c)
            if (c != j) row.emplace_back(gens[std::size_t(idx[std::size_t(t)])][std::size_t(c)]);
          minor.push_back(std::move(row));
        }
        const cpp_int m = det_cofactor(minor);
        a[std::size_t(j)] = to_ll(j % 2 == 0 ? m : -m);
        nonzero = nonzero || a[std::size_t(j)] != 0;
      }
      if (!nonzero) return;
      long long pos = 0, neg = 0;
      for (const Row& g : gens) {
        long long dot = 0;
        for (int j = 0; j < dim; ++j) dot += a[std::size_t(j)] * g[std::size_t(j)];
        if (dot > 0) ++pos;
        if (dot < 0) ++neg;
      }
      if (pos > 0 && neg > 0) return;
      if (neg > 0)
        for (long long& x : a) x = -x;
      facets.insert(gcd_reduce(std::move(a)));
      return;
    }
    for (int i = from; i + need <= n; ++i) {
      idx[std::size_t(dim - 1 - need)] = i;
      choose(i + 1, need - 1);
    }
  };
  if (dim >= 2)
    choose(0, dim - 1);
  return std::vector<Row>(facets.begin(), facets.end());
}

}  // namespace clrp::testing
