#include "clrp/generation.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <tuple>

namespace clrp {

void EnumLimits::check_deadline() const {
  if (has_deadline && std::chrono::steady_clock::now() > deadline)
    throw enumeration_limit_error("time budget exceeded");
}

void EnumLimits::check_reps(std::uint64_t kept) const {
  if (max_level_reps != 0 && kept > max_level_reps)
    throw enumeration_limit_error("representative budget exceeded");
}

namespace {

/// Drops generators dependent on the kept prefix, via a stabilizer chain on
/// the projective-point permutation image.
std::vector<GroupElement> reduce_group_gens(const std::vector<GroupElement>& gens,
                                            const GrassmannianIndex& pts) {
  std::vector<PElem> pel;
  for (const GroupElement& g : gens)
    if (!is_identity(g)) pel.push_back(make_pelem(g, pts));
  std::vector<GroupElement> out;
  for (const PElem& e : reduce_generators(pel, pts.size())) out.push_back(e.g);
  return out;
}

}  // namespace

OrbitLevels::OrbitLevels(const GrassmannianIndex& domain,
                         std::vector<GroupElement> gens, bool skip_zero)
    : domain_(&domain),
      points_(&projective_points(domain.r, domain.q)),
      gens_(std::move(gens)),
      skip_zero_(skip_zero) {
  Level l0;
  Rep r0;
  r0.stab_gens = gens_;
  l0.reps.push_back(std::move(r0));
  l0.orbits.emplace_back(gens_, *domain_);
  levels_.push_back(std::move(l0));
}

const std::vector<OrbitLevels::Rep>& OrbitLevels::reps(int level) const {
  if (level < 0 || level > depth()) throw error("OrbitLevels: level out of range");
  return levels_[std::size_t(level)].reps;
}

std::uint64_t OrbitLevels::candidates(int level) const {
  if (level < 0 || level > depth()) throw error("OrbitLevels: level out of range");
  return levels_[std::size_t(level)].flags_processed;
}

int OrbitLevels::image_handle(const GroupElement& g, int h) const {
  return domain_->handle_of(act(g, (*domain_)[h]));
}

OrbitLevels::Locate OrbitLevels::locate(const std::vector<int>& elems_sorted) const {
  if (static_cast<int>(elems_sorted.size()) > depth())
    throw error("OrbitLevels: subset larger than the built depth");
  for (std::size_t i = 0; i + 1 < elems_sorted.size(); ++i)
    if (elems_sorted[i] >= elems_sorted[i + 1])
      throw error("OrbitLevels: subset handles must be sorted and distinct");
  return locate_impl(elems_sorted, static_cast<int>(elems_sorted.size()));
}

OrbitLevels::Locate OrbitLevels::locate_impl(const std::vector<int>& S,
                                             int level) const {
  if (level == 0) return {false, 0, group_identity(domain_->r, *domain_->f)};
  std::vector<int> rest(S.begin() + 1, S.end());
  Locate L = locate_impl(rest, level - 1);
  if (L.dead) return L;
  const Level& lev = levels_[std::size_t(level)];
  const PointOrbits& O = levels_[std::size_t(level - 1)].orbits[std::size_t(L.rep)];
  const int y = image_handle(L.g, S[0]);
  const int root = O.rep_of(y);
  const auto& r2f = lev.root2fid[std::size_t(L.rep)];
  auto it = r2f.find(root);
  if (it == r2f.end())
    throw error("OrbitLevels: subset leaves the admissible domain");
  const Fusion& rec = lev.fusion[std::size_t(it->second)];
  if (rec.dead) {
    Locate d;
    d.dead = true;
    return d;
  }
  GroupElement to_flag = compose(inverse(O.transporter(y)), L.g);
  return {false, rec.rep, compose(rec.g, to_flag)};
}

void OrbitLevels::extend(const Filter& filter, const EnumLimits& limits) {
  const int lev_no = depth() + 1;
  const Level& PL = levels_.back();
  Level NL;
  NL.root2fid.resize(PL.reps.size());

  for (int j = 0; j < static_cast<int>(PL.reps.size()); ++j) {
    const PointOrbits& O = PL.orbits[std::size_t(j)];
    const std::set<int> in_set(PL.reps[std::size_t(j)].elems.begin(),
                               PL.reps[std::size_t(j)].elems.end());
    for (int root : O.roots()) {
      if (in_set.count(root)) continue;
      if (skip_zero_ && (*domain_)[root].k == 0) continue;
      NL.root2fid[std::size_t(j)].emplace(root, static_cast<int>(NL.flags.size()));
      NL.flags.push_back({j, root});
    }
  }

  NL.fusion.reserve(NL.flags.size());
  for (std::size_t fid = 0; fid < NL.flags.size(); ++fid) {
    if ((fid & 63u) == 0) limits.check_deadline();
    ++NL.flags_processed;
    const Flag fl = NL.flags[fid];
    const Rep& parent = PL.reps[std::size_t(fl.rep)];
    std::vector<int> T = parent.elems;
    T.push_back(fl.root);
    std::vector<int> Ts = T;
    std::sort(Ts.begin(), Ts.end());

    // Locate every one-element deletion: any dead deletion kills the class;
    // otherwise the deletions hit every flag of the class, so the smallest
    // one decides whether this flag is the class's first appearance.
    bool dead = false;
    long min_fid = -1;
    GroupElement min_g;
    std::vector<GroupElement> own_maps;
    for (std::size_t xi = 0; xi < Ts.size(); ++xi) {
      std::vector<int> sub;
      sub.reserve(Ts.size() - 1);
      for (std::size_t t = 0; t < Ts.size(); ++t)
        if (t != xi) sub.push_back(Ts[t]);
      Locate L = locate_impl(sub, lev_no - 1);
      if (L.dead) {
        dead = true;
        break;
      }
      const PointOrbits& O = levels_[std::size_t(lev_no - 1)].orbits[std::size_t(L.rep)];
      const int y = image_handle(L.g, Ts[xi]);
      const int root2 = O.rep_of(y);
      const long f_x = NL.root2fid[std::size_t(L.rep)].at(root2);
      GroupElement g_x = compose(inverse(O.transporter(y)), L.g);
      if (min_fid < 0 || f_x < min_fid) {
        min_fid = f_x;
        min_g = g_x;
      }
      if (f_x == static_cast<long>(fid)) own_maps.push_back(std::move(g_x));
    }

    Fusion rec;
    if (dead) {
      rec.dead = true;
    } else if (min_fid < static_cast<long>(fid)) {
      const Fusion& prev = NL.fusion[std::size_t(min_fid)];
      if (prev.dead) {
        rec.dead = true;
      } else {
        rec.rep = prev.rep;
        rec.g = compose(prev.g, min_g);
      }
    } else {
      std::optional<Cert> cert;
      if (filter)
        cert = filter(T, fl.rep, parent.cert);
      else
        cert = Cert{};
      if (!cert) {
        rec.dead = true;
      } else {
        // Setwise stabilizer: the stabilizer of the new point inside the
        // parent's stabilizer, plus the self-maps found among the deletions.
        std::vector<GroupElement> stab =
            PL.orbits[std::size_t(fl.rep)].point_stabilizer(fl.root, *points_);
        for (GroupElement& u : own_maps) stab.push_back(std::move(u));
        std::vector<GroupElement> reduced = reduce_group_gens(stab, *points_);
        rec.rep = static_cast<int>(NL.reps.size());
        rec.g = group_identity(domain_->r, *domain_->f);
        Rep nr;
        nr.elems = std::move(T);
        nr.stab_gens = reduced;
        nr.parent = fl.rep;
        nr.cert = std::move(*cert);
        NL.reps.push_back(std::move(nr));
        NL.orbits.emplace_back(std::move(reduced), *domain_);
        limits.check_reps(NL.reps.size());
      }
    }
    NL.fusion.push_back(std::move(rec));
  }
  levels_.push_back(std::move(NL));
}

NseOutput nonsimple_extensions(const std::vector<PolymatroidRep>& parents,
                               const std::vector<std::vector<int>>& parent_certs,
                               bool allow_loop, const NewRepFilter& filter,
                               const EnumLimits& limits) {
  NseOutput out;
  if (parents.empty()) return out;
  if (parents.size() != parent_certs.size())
    throw error("nonsimple_extensions: parents and certificates misaligned");
  const GrassmannianIndex& gi = *parents.front().gi;
  int loop_handle = -1;
  if (allow_loop) {
    loop_handle = gi.find(zero_subspace(gi.r, *gi.f));
    if (loop_handle < 0)
      throw error("nonsimple_extensions: loops requested but rank 0 is not admissible");
  }

  // Deduplication buckets keyed by the literal underlying simple part (all
  // descendants of one simple rep share it, handles and order included).
  struct Bucket {
    std::vector<Perm> aut;  // rank automorphisms of the shared simple part
    std::vector<std::vector<int>> seen_degrees;
  };
  std::map<std::string, Bucket> buckets;

  auto same_class = [](const std::vector<int>& d1, const std::vector<int>& d2,
                       const std::vector<Perm>& aut) {
    if (d1.back() != d2.back()) return false;  // loop counts differ
    const int s = static_cast<int>(d1.size()) - 1;
    for (const Perm& sigma : aut) {
      bool match = true;
      for (int j = 0; j < s && match; ++j)
        match = d2[std::size_t(sigma[std::size_t(j)])] == d1[std::size_t(j)];
      if (match) return true;
    }
    return false;
  };

  for (std::size_t pi = 0; pi < parents.size(); ++pi) {
    limits.check_deadline();
    const PolymatroidRep& parent = parents[pi];
    const SimplePart sp = underlying_simple(parent);
    std::string key;
    for (int h : sp.us.handles) {
      key += std::to_string(h);
      key += ',';
    }
    auto [bit, inserted] = buckets.try_emplace(key);
    Bucket& bucket = bit->second;
    if (inserted) bucket.aut = rank_automorphisms(sp.us);

    const int s = sp.us.ground_size();
    for (int cand_i = 0; cand_i < s + (allow_loop ? 1 : 0); ++cand_i) {
      ++out.candidates;
      std::vector<int> handles = parent.handles;
      handles.push_back(cand_i < s ? sp.us.handles[std::size_t(cand_i)]
                                   : loop_handle);
      PolymatroidRep cand(gi, std::move(handles));
      std::vector<int> deg = underlying_simple(cand).degree;
      bool dup = false;
      for (const auto& seen : bucket.seen_degrees)
        if (same_class(deg, seen, bucket.aut)) {
          dup = true;
          break;
        }
      if (dup) continue;
      bucket.seen_degrees.push_back(std::move(deg));
      if (filter) {
        auto cert = filter(cand, parent_certs[pi]);
        if (!cert) continue;
        out.certs.push_back(std::move(*cert));
      } else {
        out.certs.emplace_back();
      }
      out.reps.push_back(std::move(cand));
      out.parents.push_back(static_cast<int>(pi));
      limits.check_reps(out.reps.size());
    }
  }
  return out;
}

ClassEnumeration enumerate_class(const ClassTuple& c, int q, int r,
                                 const NewRepFilter& filter,
                                 const EnumLimits& limits,
                                 const FinalCallback& on_final) {
  c.validate();
  std::vector<int> K;
  for (int k : c.K)
    if (k <= r) K.push_back(k);
  if (K.empty()) return {};  // no singleton rank fits this ambient: empty class
  const bool allow_loop = K.front() == 0;
  const GrassmannianIndex& gi = grassmannian_cache(r, K, q);

  ClassEnumeration out;
  out.gi = &gi;

  OrbitLevels tower(gi, group_generators(r, q), /*skip_zero=*/true);
  OrbitLevels::Filter tower_filter;
  if (filter)
    tower_filter = [&](const std::vector<int>& elems, int /*parent*/,
                       const OrbitLevels::Cert& pcert) {
      return filter(PolymatroidRep(gi, elems), pcert);
    };

  const int jmax = std::min(c.s_u, c.N);
  const int jmin = std::max(c.s_l, 0);

  {
    GridCell base;
    base.reps.emplace_back(gi, std::vector<int>{});
    base.certs.emplace_back();
    base.parents.push_back(-1);
    out.cells[{0, 0}] = std::move(base);
  }

  auto fire_final = [&](int i, int j) {
    if (i != c.N || j < c.s_l || j > c.s_u || !on_final) return false;
    const GridCell& cell = out.cells[{i, j}];
    for (std::size_t t = 0; t < cell.reps.size(); ++t)
      if (on_final(cell.reps[t], cell.certs[t], j)) return true;
    return false;
  };

  const auto& evals = rank_eval_counter();
  for (int i = 1; i <= c.N; ++i) {
    if (i <= jmax) {
      const auto t0 = std::chrono::steady_clock::now();
      const std::uint64_t e0 = evals.load();
      tower.extend(tower_filter, limits);
      GridCell cell;
      for (const OrbitLevels::Rep& rep : tower.reps(i)) {
        cell.reps.emplace_back(gi, rep.elems);
        cell.certs.push_back(rep.cert);
        cell.parents.push_back(rep.parent);
      }
      cell.stats.candidates = tower.candidates(i);
      cell.stats.kept = cell.reps.size();
      cell.stats.rank_evals = evals.load() - e0;
      cell.stats.millis =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - t0)
              .count();
      out.cells[{i, i}] = std::move(cell);
      if (fire_final(i, i)) {
        out.stopped_early = true;
        return out;
      }
    }
    const int row_lo = (allow_loop && jmin == 0) ? 0 : std::max(jmin, 1);
    for (int j = row_lo; j < i && j <= jmax; ++j) {
      auto src = out.cells.find({i - 1, j});
      if (src == out.cells.end()) continue;
      const auto t0 = std::chrono::steady_clock::now();
      const std::uint64_t e0 = evals.load();
      GridCell cell;
      if (!src->second.reps.empty()) {
        NseOutput nse = nonsimple_extensions(src->second.reps, src->second.certs,
                                             allow_loop, filter, limits);
        cell.reps = std::move(nse.reps);
        cell.certs = std::move(nse.certs);
        cell.parents = std::move(nse.parents);
        cell.stats.candidates = nse.candidates;
      }
      cell.stats.kept = cell.reps.size();
      cell.stats.rank_evals = evals.load() - e0;
      cell.stats.millis =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - t0)
              .count();
      out.cells[{i, j}] = std::move(cell);
      if (fire_final(i, j)) {
        out.stopped_early = true;
        return out;
      }
    }
  }
  return out;
}

std::optional<GroupElement> weak_isomorphic(const PolymatroidRep& P1,
                                            const PolymatroidRep& P2) {
  if (!P1.gi || !P2.gi) throw error("weak_isomorphic: reps without a domain");
  if (P1.gi->r != P2.gi->r || P1.gi->q != P2.gi->q || P1.gi->K != P2.gi->K)
    throw error("weak_isomorphic: reps over different domains");
  for (const PolymatroidRep* P : {&P1, &P2}) {
    const SimplePart sp = underlying_simple(*P);
    if (sp.us.ground_size() != P->ground_size())
      throw error("weak_isomorphic: reps must be simple");
  }
  if (P1.ground_size() != P2.ground_size()) return std::nullopt;

  static std::mutex mu;
  static std::map<std::tuple<int, int, std::vector<int>>,
                  std::unique_ptr<OrbitLevels>>
      towers;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(P1.gi->r, P1.gi->q, P1.gi->K);
  auto it = towers.find(key);
  if (it == towers.end())
    it = towers
             .emplace(key, std::make_unique<OrbitLevels>(
                               *P1.gi, group_generators(P1.gi->r, P1.gi->q)))
             .first;
  OrbitLevels& tower = *it->second;
  while (tower.depth() < P1.ground_size()) tower.extend(nullptr);

  std::vector<int> s1 = P1.handles, s2 = P2.handles;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  OrbitLevels::Locate L1 = tower.locate(s1);
  OrbitLevels::Locate L2 = tower.locate(s2);
  if (L1.rep != L2.rep) return std::nullopt;
  return compose(inverse(L2.g), L1.g);
}

}  // namespace clrp
