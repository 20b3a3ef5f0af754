#include "clrp/rate_region.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace clrp {

namespace {

using i128 = __int128;

constexpr long long kMagnitudeCap = (1LL << 62);

long long checked_ll(i128 v) {
  if (v > i128(kMagnitudeCap) || v < -i128(kMagnitudeCap))
    throw error("cone arithmetic overflow");
  return static_cast<long long>(v);
}

i128 dot(const Row& a, const Row& b) {
  i128 acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += i128(a[i]) * i128(b[i]);
  return acc;
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void gcd_reduce(std::vector<i128>& v) {
  i128 g = 0;
  for (i128 x : v) g = gcd128(g, x);
  if (g > 1)
    for (i128& x : v) x /= g;
}

Row reduce_to_row(std::vector<i128> v) {
  gcd_reduce(v);
  Row out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = checked_ll(v[i]);
  return out;
}

void gcd_reduce_row(Row& r) {
  long long g = 0;
  for (long long x : r) g = static_cast<long long>(gcd128(g, x));
  if (g > 1)
    for (long long& x : r) x /= g;
}

void sign_normalize_row(Row& r) {
  for (long long x : r) {
    if (x > 0) return;
    if (x < 0) {
      for (long long& y : r) y = -y;
      return;
    }
  }
}

bool is_zero_row(const Row& r) {
  for (long long x : r)
    if (x != 0) return false;
  return true;
}

/// linear combination reduce(c1 * a + c2 * b), exact
Row combine_rows(i128 c1, const Row& a, i128 c2, const Row& b) {
  std::vector<i128> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    v[i] = c1 * i128(a[i]) + c2 * i128(b[i]);
  return reduce_to_row(std::move(v));
}

using TightSet = std::vector<std::uint64_t>;

bool tight_subset(const TightSet& a, const TightSet& b) {  // a subseteq b
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

struct RayRec {
  Row v;
  TightSet tight;
};

/// Rank of an integer row set, by incremental reduction against an i128
/// basis (gcd-reduced after every elimination to keep entries small).
class IntRankAcc {
 public:
  bool add(const Row& r) {
    std::vector<i128> v(r.begin(), r.end());
    for (const auto& b : basis_) {
      std::size_t lead = lead_of(b);
      if (v[lead] == 0) continue;
      i128 c = v[lead];
      i128 p = b[lead];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = p * v[i] - c * b[i];
      gcd_reduce(v);
    }
    for (i128 x : v)
      if (x != 0) {
        basis_.push_back(std::move(v));
        return true;
      }
    return false;
  }
  int rank() const { return static_cast<int>(basis_.size()); }

 private:
  static std::size_t lead_of(const std::vector<i128>& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] != 0) return i;
    return b.size();
  }
  std::vector<std::vector<i128>> basis_;
};

struct DDState {
  int dim = 0;
  std::size_t blocks = 0;
  std::vector<Row> lin;
  std::vector<RayRec> rays;
  std::vector<Row> row_log;  // every input row, index-aligned with tight bits
  TightSet processed;  // rows handled so far (lineality is tight on all)

  void mark(TightSet& t, int row) const { t[std::size_t(row) >> 6] |= 1ull << (row & 63); }

  /// Drops duplicate and non-extreme rays. The adjacency test below is only
  /// exact on a minimal ray list, and the lineality pivot can make projected
  /// rays coplanar, so minimality has to be restored after every insertion.
  /// A ray is extreme iff its tight rows span a (dim - |lin| - 1)-dim space;
  /// the stored tight sets are exact, so the test is a plain rank check.
  void prune_rays() {
    std::sort(rays.begin(), rays.end(),
              [](const RayRec& x, const RayRec& y) { return x.v < y.v; });
    rays.erase(std::unique(rays.begin(), rays.end(),
                           [](const RayRec& x, const RayRec& y) {
                             return x.v == y.v;
                           }),
               rays.end());
    const int need = dim - static_cast<int>(lin.size()) - 1;
    std::vector<RayRec> kept;
    kept.reserve(rays.size());
    for (RayRec& r : rays) {
      IntRankAcc acc;
      for (std::size_t i = 0; i < row_log.size(); ++i) {
        if ((r.tight[i >> 6] >> (i & 63)) & 1) acc.add(row_log[i]);
        if (acc.rank() == need) break;
      }
      if (acc.rank() == need) kept.push_back(std::move(r));
    }
    rays = std::move(kept);
  }

  void insert(const Row& a, bool equality, int row_idx) {
    // Pivot a lineality vector when one leaves the hyperplane of a.
    std::size_t pivot = lin.size();
    i128 alpha0 = 0;
    for (std::size_t i = 0; i < lin.size(); ++i) {
      i128 d = dot(a, lin[i]);
      if (d != 0) {
        pivot = i;
        alpha0 = d;
        break;
      }
    }
    if (pivot != lin.size()) {
      Row l0 = lin[pivot];
      lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(pivot));
      for (Row& l : lin) {
        i128 d = dot(a, l);
        if (d != 0) l = combine_rows(alpha0, l, -d, l0);
        sign_normalize_row(l);
      }
      for (RayRec& r : rays) {
        i128 d = dot(a, r.v);
        if (d != 0) {
          i128 mag = alpha0 < 0 ? -alpha0 : alpha0;
          i128 sgn = alpha0 < 0 ? -1 : 1;
          r.v = combine_rows(mag, r.v, -sgn * d, l0);
        }
        mark(r.tight, row_idx);
      }
      if (!equality) {
        RayRec r0;
        r0.v = l0;
        if (alpha0 < 0)
          for (long long& x : r0.v) x = -x;
        r0.tight = processed;  // lineality was tight on every earlier row
        rays.push_back(std::move(r0));
      }
      mark(processed, row_idx);
      prune_rays();
      return;
    }

    // a vanishes on the lineality: split the rays by sign.
    std::vector<i128> sigma(rays.size());
    bool any_neg = false, any_pos = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      sigma[i] = dot(a, rays[i].v);
      if (sigma[i] < 0) any_neg = true;
      if (sigma[i] > 0) any_pos = true;
      if (sigma[i] == 0) mark(rays[i].tight, row_idx);
    }
    mark(processed, row_idx);
    if (!any_neg && (!equality || !any_pos)) return;  // nothing cut away

    std::vector<RayRec> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (sigma[i] == 0 || (!equality && sigma[i] > 0))
        next.push_back(rays[i]);
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (sigma[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (sigma[n] >= 0) continue;
        // combinatorial adjacency: no third ray is tight wherever both are
        TightSet common(blocks);
        for (std::size_t b = 0; b < blocks; ++b)
          common[b] = rays[p].tight[b] & rays[n].tight[b];
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
          if (t != p && t != n && tight_subset(common, rays[t].tight))
            adjacent = false;
        if (!adjacent) continue;
        RayRec nr;
        nr.v = combine_rows(sigma[p], rays[n].v, -sigma[n], rays[p].v);
        nr.tight = std::move(common);
        mark(nr.tight, row_idx);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
    prune_rays();
  }
};

std::vector<Row> clean_rows(std::vector<Row> rows, bool signed_rays) {
  for (Row& r : rows) {
    gcd_reduce_row(r);
    if (!signed_rays) sign_normalize_row(r);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

Cone run_dd(const std::vector<Row>& eq, const std::vector<Row>& ineq, int dim) {
  if (dim < 1 || dim > 12) throw error("cone dimension out of supported range");
  DDState S;
  S.dim = dim;
  const std::size_t m = eq.size() + ineq.size();
  S.blocks = (m + 63) / 64 + 1;
  S.processed.assign(S.blocks, 0);
  for (int i = 0; i < dim; ++i) {
    Row e(std::size_t(dim), 0);
    e[std::size_t(i)] = 1;
    S.lin.push_back(std::move(e));
  }
  int row_idx = 0;
  for (const Row& a : eq) {
    if (static_cast<int>(a.size()) != dim) throw error("cone row width mismatch");
    S.row_log.push_back(a);
    if (!is_zero_row(a)) S.insert(a, true, row_idx);
    ++row_idx;
  }
  for (const Row& a : ineq) {
    if (static_cast<int>(a.size()) != dim) throw error("cone row width mismatch");
    S.row_log.push_back(a);
    if (!is_zero_row(a)) S.insert(a, false, row_idx);
    ++row_idx;
  }
  Cone out;
  out.dim = dim;
  out.lineality = clean_rows(S.lin, /*signed_rays=*/false);
  std::vector<Row> rays;
  rays.reserve(S.rays.size());
  for (RayRec& r : S.rays) rays.push_back(std::move(r.v));
  out.rays = clean_rows(std::move(rays), /*signed_rays=*/true);
  return out;
}

}  // namespace

Cone dd_from_halfspaces(const HRep& input) {
  return run_dd(input.eq, input.ineq, input.dim);
}

HRep conic_hull_hrep(const std::vector<Row>& generators, int dim) {
  // Polar: {a : g . a >= 0 for all g}; its lineality rows are equalities of
  // the hull and its extreme rays are the irredundant facets.
  std::vector<Row> rows;
  for (const Row& g : generators)
    if (!is_zero_row(g)) rows.push_back(g);
  Cone polar = run_dd({}, rows, dim);
  HRep out;
  out.dim = dim;
  out.eq = polar.lineality;
  out.ineq = polar.rays;
  return out;
}

Cone cone_from_generators(const std::vector<Row>& generators, int dim) {
  HRep h = conic_hull_hrep(generators, dim);
  return dd_from_halfspaces(h);
}

bool satisfies_hrep(const HRep& h, const Row& x) {
  for (const Row& a : h.eq)
    if (dot(a, x) != 0) return false;
  for (const Row& a : h.ineq)
    if (dot(a, x) < 0) return false;
  return true;
}

bool cone_equal(const std::vector<Row>& gens1, const std::vector<Row>& gens2,
                int dim) {
  const HRep h1 = conic_hull_hrep(gens1, dim);
  const HRep h2 = conic_hull_hrep(gens2, dim);
  for (const Row& g : gens1)
    if (!satisfies_hrep(h2, g)) return false;
  for (const Row& g : gens2)
    if (!satisfies_hrep(h1, g)) return false;
  return true;
}

std::vector<Row> augment_rate_rows(const std::vector<std::vector<int>>& rows,
                                   int k, int N) {
  if (k < 0 || k > N) throw error("augment_rate_rows: bad source count");
  std::vector<Row> out;
  for (const auto& v : rows) {
    if (static_cast<int>(v.size()) != N)
      throw error("augment_rate_rows: vector width mismatch");
    out.emplace_back(v.begin(), v.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  // Edge capacities are free to grow, so +e_i rays are appended for i > k.
  // Source demands shrink inside the nonnegative orthant instead of along
  // -e_i rays: appending those would erase the omega_i >= 0 facets that the
  // computed regions carry, and every harvested set is already closed under
  // lowering a source rate while staying achievable.
  for (int i = k; i < N; ++i) {
    Row e(std::size_t(N), 0);
    e[std::size_t(i)] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Row> project_and_augment(const std::vector<RankVector>& hvectors,
                                     int k, int N) {
  std::vector<std::vector<int>> rows;
  for (const RankVector& h : hvectors) {
    if (h.N != N) throw error("project_and_augment: rank vector width mismatch");
    std::vector<int> v(std::size_t(N), 0);
    for (int i = 0; i < N; ++i) v[std::size_t(i)] = h.at(gmask(1) << i);
    rows.push_back(std::move(v));
  }
  return augment_rate_rows(rows, k, N);
}

}  // namespace clrp
