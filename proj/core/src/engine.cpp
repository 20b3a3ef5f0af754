#include "clrp/engine.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace clrp {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    default:
      return "inconclusive";
  }
}

namespace {

using clock_t_ = std::chrono::steady_clock;

EnumLimits make_limits(const EngineOptions& opt) {
  EnumLimits lim;
  lim.max_level_reps = opt.max_level_reps;
  if (opt.max_seconds > 0.0) {
    lim.deadline = clock_t_::now() + std::chrono::duration_cast<clock_t_::duration>(
                                         std::chrono::duration<double>(opt.max_seconds));
    lim.has_deadline = true;
  }
  return lim;
}

/// Automatic symmetry search may refuse (too large a universe or group);
/// pruning is optional, so fall back to the trivial group.
SymmetryGroup safe_symmetry_group(const ConstraintSet& I,
                                  const TargetTable* targets) {
  try {
    return symmetry_group(I, targets);
  } catch (const error&) {
    SymmetryGroup g;
    g.N = I.N;
    return g;
  }
}

void append_stats(std::vector<LevelStat>& rows, int r,
                  const ClassEnumeration& run) {
  for (const auto& [key, cell] : run.cells) {
    if (key.first == 0) continue;  // seed cell does no work
    LevelStat s;
    s.r = r;
    s.i = key.first;
    s.j = key.second;
    s.candidates = cell.stats.candidates;
    s.kept = cell.stats.kept;
    s.rank_evals = cell.stats.rank_evals;
    s.millis = cell.stats.millis;
    rows.push_back(s);
  }
}

NewRepFilter make_filter(const ConstraintSet& I, const TargetTable& targets,
                         const SymmetryGroup& B) {
  return [&I, &targets, &B](const PolymatroidRep& cand,
                            const std::vector<int>& pcert) {
    const auto A = rank_automorphisms(cand);
    return extend_pmap(cand, pcert, A, B, I, targets);
  };
}

std::vector<int> unique_sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

ProverResult clrp_exists(const ClassTuple& c, int q, const ConstraintSet& I,
                         const TargetTable& targets, const SymmetryGroup& B,
                         const EngineOptions& opt) {
  c.validate();
  if (I.N != c.N)
    throw error("clrp_exists: constraint universe differs from the class ground size");
  ProverResult res;
  const auto t0 = clock_t_::now();
  const std::uint64_t e0 = rank_eval_counter().load();
  const EnumLimits lim = make_limits(opt);
  const NewRepFilter filter = make_filter(I, targets, B);

  std::optional<Witness> witness;
  try {
    for (int r = c.r_l; r <= c.r_u && !witness; ++r) {
      const FinalCallback on_final = [&](const PolymatroidRep& rep,
                                         const std::vector<int>& cert, int j) {
        if (static_cast<int>(cert.size()) != c.N ||
            !validate_pmap(rep, cert, I, targets))
          throw error("internal: witness failed re-validation");
        Witness w;
        w.rep = rep;
        w.pmap = cert;
        w.simple_size = j;
        w.r = r;
        witness = std::move(w);
        return true;
      };
      ClassEnumeration run = enumerate_class(c, q, r, filter, lim, on_final);
      append_stats(res.stats, r, run);
    }
    res.verdict = witness ? Verdict::yes : Verdict::no;
    res.witness = std::move(witness);
  } catch (const enumeration_limit_error& e) {
    res.verdict = Verdict::inconclusive;
    res.note = e.what();
  }
  res.total_ms =
      std::chrono::duration<double, std::milli>(clock_t_::now() - t0).count();
  res.total_rank_evals = rank_eval_counter().load() - e0;
  return res;
}

EnumerateResult clrp_enumerate(const ClassTuple& c, int q,
                               const EngineOptions& opt) {
  c.validate();
  EnumerateResult res;
  const EnumLimits lim = make_limits(opt);
  try {
    for (int r = c.r_l; r <= c.r_u; ++r) {
      ClassEnumeration run = enumerate_class(c, q, r, nullptr, lim, nullptr);
      append_stats(res.stats, r, run);
      for (int j = c.s_l; j <= std::min(c.s_u, c.N); ++j) {
        auto it = run.cells.find({c.N, j});
        if (it == run.cells.end()) continue;
        for (const PolymatroidRep& rep : it->second.reps) {
          res.reps.push_back(rep);
          res.simple_sizes.push_back(j);
          res.ambients.push_back(r);
        }
      }
    }
    res.verdict = Verdict::yes;
  } catch (const enumeration_limit_error& e) {
    res.verdict = Verdict::inconclusive;
    res.note = e.what();
  }
  return res;
}

ProverResult prove_rate(const NetworkInstance& net, const std::vector<int>& rates,
                        int q, bool ambient_all, const EngineOptions& opt) {
  net.validate();
  if (static_cast<int>(rates.size()) != net.N)
    throw error("prove_rate: need one rate per network variable");
  for (int x : rates)
    if (x < 0) throw error("prove_rate: rates must be nonnegative");

  const ConstraintSet I = constraints_from_network(net);
  TargetTable targets;
  for (int i = 0; i < net.N; ++i)
    targets.targets.emplace_back(gmask(1) << i, rates[std::size_t(i)]);
  targets.canonicalize();

  int r = 0;
  const int upto = ambient_all ? net.N : net.k;
  for (int i = 0; i < upto; ++i) r += rates[std::size_t(i)];

  ClassTuple c;
  c.N = net.N;
  c.r_l = c.r_u = r;
  c.K = unique_sorted(rates);
  c.s_l = net.k;
  c.s_u = net.N;

  const SymmetryGroup B = safe_symmetry_group(I, &targets);
  return clrp_exists(c, q, I, targets, B, opt);
}

RegionResult prove_region(const NetworkInstance& net, int q, int dmax, int rmax,
                          const EngineOptions& opt) {
  net.validate();
  if (dmax < 0 || rmax < 1)
    throw error("prove_region: need dmax >= 0 and rmax >= 1");
  RegionResult res;
  const auto t0 = clock_t_::now();
  const std::uint64_t e0 = rank_eval_counter().load();
  const EnumLimits lim = make_limits(opt);

  const ConstraintSet I = constraints_from_network(net);
  const TargetTable no_targets;
  const SymmetryGroup B = safe_symmetry_group(I, nullptr);
  const NewRepFilter filter = make_filter(I, no_targets, B);

  std::set<std::vector<int>> seen;
  const auto harvest = [&](const PolymatroidRep& rep, const std::vector<int>&,
                           int) {
    for (const PMap& phi : all_feasible_pmaps(rep, I, no_targets, B)) {
      std::vector<int> inv(std::size_t(net.N), -1);
      for (std::size_t l = 0; l < phi.size(); ++l)
        inv[std::size_t(phi[l])] = static_cast<int>(l);
      std::vector<int> v(std::size_t(net.N));
      for (int i = 0; i < net.N; ++i)
        v[std::size_t(i)] = rep.subspace(inv[std::size_t(i)]).k;
      if (B.elements.empty()) {
        seen.insert(v);
      } else {
        std::vector<int> w(std::size_t(net.N));
        for (const auto& b : B.elements) {
          for (int i = 0; i < net.N; ++i)
            w[std::size_t(b[std::size_t(i)])] = v[std::size_t(i)];
          seen.insert(w);
        }
      }
    }
    return false;  // keep enumerating: the whole class is harvested
  };

  try {
    for (int r = 1; r <= rmax; ++r) {
      ClassTuple c;
      c.N = net.N;
      c.r_l = c.r_u = r;
      for (int d = 0; d <= dmax; ++d) c.K.push_back(d);
      c.s_l = 1;
      c.s_u = net.N;
      ClassEnumeration run = enumerate_class(c, q, r, filter, lim, harvest);
      append_stats(res.stats, r, run);
    }
    res.verdict = Verdict::yes;
    res.vectors.assign(seen.begin(), seen.end());
  } catch (const enumeration_limit_error& e) {
    res.verdict = Verdict::inconclusive;
    res.note = e.what();
  }
  res.total_ms =
      std::chrono::duration<double, std::milli>(clock_t_::now() - t0).count();
  res.total_rank_evals = rank_eval_counter().load() - e0;
  return res;
}

ProverResult prove_ss(const AccessStructure& gamma, const std::vector<int>& sizes,
                      int q, const EngineOptions& opt) {
  gamma.validate();
  if (static_cast<int>(sizes.size()) != gamma.N)
    throw error("prove_ss: need one size per participant (dealer first)");
  int sum = 0, mx = 0;
  for (int s : sizes) {
    if (s < 1) throw error("prove_ss: sizes must be positive");
    sum += s;
    mx = std::max(mx, s);
  }

  const ConstraintSet I = constraints_from_access_structure(gamma);
  TargetTable targets;
  for (int i = 0; i < gamma.N; ++i)
    targets.targets.emplace_back(gmask(1) << i, sizes[std::size_t(i)]);
  targets.canonicalize();

  ClassTuple c;
  c.N = gamma.N;
  c.r_l = mx;
  c.r_u = sum - 1;
  c.K = unique_sorted(sizes);
  c.s_l = 2;
  c.s_u = gamma.N;

  const SymmetryGroup B = safe_symmetry_group(I, &targets);
  return clrp_exists(c, q, I, targets, B, opt);
}

ProverResult prove_rep(const RankVector& h, int q, const EngineOptions& opt) {
  const auto [I, targets] = constraints_from_rank_vector(h);
  const int N = h.N;
  const gmask full = (gmask(1) << N) - 1;

  std::vector<int> singles(std::size_t(N), 0);
  for (int i = 0; i < N; ++i) singles[std::size_t(i)] = h.at(gmask(1) << i);

  // Count the nonloop parallel classes the rank values force.
  std::vector<char> assigned(std::size_t(N), 0);
  int s = 0;
  for (int i = 0; i < N; ++i) {
    if (assigned[std::size_t(i)] || singles[std::size_t(i)] == 0) continue;
    ++s;
    assigned[std::size_t(i)] = 1;
    for (int j = i + 1; j < N; ++j) {
      if (assigned[std::size_t(j)]) continue;
      if (singles[std::size_t(j)] == singles[std::size_t(i)] &&
          h.at((gmask(1) << i) | (gmask(1) << j)) == singles[std::size_t(i)])
        assigned[std::size_t(j)] = 1;
    }
  }

  ClassTuple c;
  c.N = N;
  c.r_l = c.r_u = h.at(full);
  c.K = unique_sorted(singles);
  c.s_l = c.s_u = s;

  const SymmetryGroup B = safe_symmetry_group(I, &targets);
  return clrp_exists(c, q, I, targets, B, opt);
}

}  // namespace clrp
