#include "clrp/pmap.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>

namespace clrp {

namespace {

constexpr std::uint64_t kOrbitProductCap = 1000000;  // skip pruning above this
constexpr std::size_t kOrbitExpansionCap = 200000;   // abandon closure above this

gmask image_mask(const PMap& phi) {
  gmask m = 0;
  for (int v : phi) m |= gmask(1) << v;
  return m;
}

gmask preimage_mask(const PMap& phi, gmask mask) {
  gmask pre = 0;
  for (std::size_t l = 0; l < phi.size(); ++l)
    if ((mask >> phi[l]) & 1u) pre |= gmask(1) << l;
  return pre;
}

bool constraint_holds(const PolymatroidRep& P, const PMap& phi,
                      const LinearConstraint& c) {
  long long acc = 0;
  for (const auto& [mask, coeff] : c.terms)
    acc += static_cast<long long>(coeff) * P.rank(preimage_mask(phi, mask));
  return acc == 0;
}

bool target_holds(const PolymatroidRep& P, const PMap& phi, gmask mask,
                  int value) {
  return P.rank(preimage_mask(phi, mask)) == value;
}

/// Per-depth state shared by the two searches.
struct SearchContext {
  const PolymatroidRep* P;
  const ConstraintSet* I;
  const TargetTable* targets;
  std::vector<const std::vector<int>*> A_by_depth;  // stabilizer elements, or empty
  const std::vector<std::vector<int>>* A_elements = nullptr;
  std::vector<std::vector<int>> A_filtered;  // A_filtered[m]: indices into A
  const std::vector<Perm>* bperms = nullptr;  // element list, or generators
  std::uint64_t b_order = 1;  // 0 when unknown (generator-only group)
};

/// True when `t` is lexicographically minimal in its orbit under the maps
/// psi[l] = b[phi[a[l]]] with a ranging over `stab` (full subgroup element
/// list) and b over the closure of B's generators. Gives up (returns true)
/// when the closure grows past the expansion cap.
bool orbit_minimal(const PMap& t, const std::vector<const std::vector<int>*>& stab,
                   const std::vector<Perm>& b_gens) {
  if (stab.size() <= 1 && b_gens.empty()) return true;
  std::set<PMap> seen;
  std::deque<PMap> queue;
  seen.insert(t);
  queue.push_back(t);
  const std::size_t m = t.size();
  PMap next(m);
  while (!queue.empty()) {
    PMap cur = queue.front();
    queue.pop_front();
    for (const std::vector<int>* a : stab) {
      for (std::size_t l = 0; l < m; ++l) next[l] = cur[(*a)[l]];
      if (next < t) return false;
      if (seen.insert(next).second) queue.push_back(next);
    }
    for (const Perm& b : b_gens) {
      for (std::size_t l = 0; l < m; ++l) next[l] = b[cur[l]];
      if (next < t) return false;
      if (seen.insert(next).second) queue.push_back(next);
    }
    if (seen.size() > kOrbitExpansionCap) return true;
  }
  return true;
}

struct ExtendSearch {
  SearchContext ctx;
  const PMap* frontier;  // parent certificate, or nullptr
  int n = 0;             // ground size = full depth
  int N = 0;
  PMap phi;
  std::vector<char> used;
  bool prune_enabled = false;

  bool dfs(int d, bool on_frontier) {
    if (d == n) return true;
    const int lo =
        (on_frontier && frontier && d < static_cast<int>(frontier->size()))
            ? (*frontier)[d]
            : 0;
    for (int v = lo; v < N; ++v) {
      if (used[v]) continue;
      const bool child_frontier =
          on_frontier && frontier && d < static_cast<int>(frontier->size()) &&
          v == (*frontier)[d];
      phi.push_back(v);
      used[v] = 1;
      if (check_new_constraints(*ctx.P, phi, *ctx.I, *ctx.targets) &&
          (!prune_enabled || minimal_here(d + 1)) &&
          dfs(d + 1, child_frontier))
        return true;
      used[v] = 0;
      phi.pop_back();
    }
    return false;
  }

  bool minimal_here(int m) {
    if (ctx.b_order == 0) return true;  // order unknown: pruning skipped
    std::vector<const std::vector<int>*> stab;
    if (ctx.A_elements)
      for (int idx : ctx.A_filtered[m]) stab.push_back(&(*ctx.A_elements)[idx]);
    if (stab.size() * std::max<std::uint64_t>(ctx.b_order, 1) >
        kOrbitProductCap)
      return true;
    static const std::vector<Perm> kNoGens;
    return orbit_minimal(phi, stab, ctx.bperms ? *ctx.bperms : kNoGens);
  }
};

}  // namespace

std::uint64_t pmap_count(int N) {
  if (N < 1 || N > 16) throw error("pmap_count: N out of range");
  // C(N,k) * (N-k)! summed over k = 0..N-1
  std::uint64_t total = 0;
  for (int k = 0; k < N; ++k) {
    std::uint64_t binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (N - i) / (i + 1);
    std::uint64_t fact = 1;
    for (int i = 2; i <= N - k; ++i) fact *= i;
    total += binom * fact;
  }
  return total;
}

bool check_new_constraints(const PolymatroidRep& P, const PMap& phi,
                           const ConstraintSet& I, const TargetTable& targets) {
  if (phi.empty()) return true;
  const gmask img = image_mask(phi);
  const gmask vbit = gmask(1) << phi.back();
  for (const auto& [mask, value] : targets.targets) {
    if ((mask & vbit) == 0) continue;
    if ((mask & img) != mask) continue;
    if (!target_holds(P, phi, mask, value)) return false;
  }
  for (const auto& c : I.constraints) {
    const gmask sup = c.support();
    if ((sup & vbit) == 0) continue;
    if ((sup & img) != sup) continue;
    if (!constraint_holds(P, phi, c)) return false;
  }
  return true;
}

bool validate_pmap(const PolymatroidRep& P, const PMap& phi,
                   const ConstraintSet& I, const TargetTable& targets) {
  const gmask img = image_mask(phi);
  for (const auto& [mask, value] : targets.targets) {
    if ((mask & img) != mask) continue;
    if (!target_holds(P, phi, mask, value)) return false;
  }
  for (const auto& c : I.constraints) {
    const gmask sup = c.support();
    if ((sup & img) != sup) continue;
    if (!constraint_holds(P, phi, c)) return false;
  }
  return true;
}

std::optional<PMap> extend_pmap(const PolymatroidRep& P_ext,
                                const PMap& parent_cert,
                                const std::vector<std::vector<int>>& A_elements,
                                const SymmetryGroup& B, const ConstraintSet& I,
                                const TargetTable& targets) {
  const int n = P_ext.ground_size();
  const int N = I.N;
  if (n > N) return std::nullopt;  // no injective map exists
  if (static_cast<int>(parent_cert.size()) > n)
    throw error("extend_pmap: parent certificate longer than the ground set");

  ExtendSearch s;
  s.ctx.P = &P_ext;
  s.ctx.I = &I;
  s.ctx.targets = &targets;
  s.ctx.A_elements = &A_elements;
  s.ctx.bperms = B.generators.empty() ? &B.elements : &B.generators;
  s.frontier = parent_cert.empty() ? nullptr : &parent_cert;
  s.n = n;
  s.N = N;
  s.used.assign(N, 0);
  s.phi.reserve(n);

  // Stabilizer element lists per prefix length: a fixes {0..m-1} setwise.
  s.ctx.A_filtered.assign(n + 1, {});
  for (std::size_t idx = 0; idx < A_elements.size(); ++idx) {
    const auto& a = A_elements[idx];
    for (int m = 1; m <= n; ++m) {
      bool stable = true;
      for (int l = 0; l < m && stable; ++l) stable = a[l] < m;
      if (stable) s.ctx.A_filtered[m].push_back(static_cast<int>(idx));
    }
  }
  if (!B.elements.empty())
    s.ctx.b_order = B.elements.size();
  else if (B.generators.empty())
    s.ctx.b_order = 1;
  else
    s.ctx.b_order = 0;  // generators only, order unknown: disable pruning
  s.prune_enabled =
      s.ctx.b_order != 0 && (A_elements.size() > 1 || !s.ctx.bperms->empty());

  if (s.dfs(0, true)) return s.phi;
  return std::nullopt;
}

FilteredReps pmap_filter(const std::vector<PolymatroidRep>& reps,
                         const std::vector<PMap>& parent_certs,
                         const SymmetryGroup& B, const ConstraintSet& I,
                         const TargetTable& targets) {
  if (reps.size() != parent_certs.size())
    throw error("pmap_filter: reps and parent certificates misaligned");
  FilteredReps out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto A = rank_automorphisms(reps[i]);
    if (auto cert = extend_pmap(reps[i], parent_certs[i], A, B, I, targets)) {
      out.kept.push_back(i);
      out.certs.push_back(std::move(*cert));
    }
  }
  return out;
}

std::vector<PMap> all_feasible_pmaps(const PolymatroidRep& P,
                                     const ConstraintSet& I,
                                     const TargetTable& targets,
                                     const SymmetryGroup& B) {
  const int n = P.ground_size();
  if (n != I.N)
    throw error("all_feasible_pmaps: rep size differs from the system size");
  std::vector<PMap> found;
  PMap phi;
  std::vector<char> used(n, 0);
  static const std::vector<const std::vector<int>*> kNoStab;
  // generators keep the per-node orbit walk short; the element list is only
  // needed when the group arrived without generators
  const std::vector<Perm>& bperms =
      B.generators.empty() ? B.elements : B.generators;

  std::function<void(int)> dfs = [&](int d) {
    if (d == n) {
      found.push_back(phi);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      phi.push_back(v);
      used[v] = 1;
      if (check_new_constraints(P, phi, I, targets) &&
          (bperms.empty() || orbit_minimal(phi, kNoStab, bperms)))
        dfs(d + 1);
      used[v] = 0;
      phi.pop_back();
    }
  };
  dfs(0);
  return found;
}

}  // namespace clrp
