#include "clrp/constraints.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>

namespace clrp {

void LinearConstraint::canonicalize() {
  std::map<gmask, int> acc;
  for (const auto& [m, c] : terms) acc[m] += c;
  terms.clear();
  for (const auto& [m, c] : acc)
    if (c != 0) terms.emplace_back(m, c);
  if (!terms.empty() && terms.front().second < 0)
    for (auto& [m, c] : terms) c = -c;
}

gmask LinearConstraint::support() const {
  gmask s = 0;
  for (const auto& [m, c] : terms) s |= m;
  return s;
}

void TargetTable::canonicalize() {
  std::sort(targets.begin(), targets.end());
  for (std::size_t i = 1; i < targets.size(); ++i)
    if (targets[i].first == targets[i - 1].first &&
        targets[i].second != targets[i - 1].second)
      throw error("TargetTable: conflicting values for one subset");
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
}

std::optional<int> TargetTable::value_of(gmask mask) const {
  auto it = std::lower_bound(targets.begin(), targets.end(),
                             std::make_pair(mask, INT_MIN));
  if (it != targets.end() && it->first == mask) return it->second;
  return std::nullopt;
}

gmask mask_of(const std::vector<int>& labels_1based, int N) {
  gmask m = 0;
  for (int l : labels_1based) {
    if (l < 1 || l > N)
      throw error("label " + std::to_string(l) + " outside 1.." + std::to_string(N));
    const gmask bit = gmask(1) << (l - 1);
    if (m & bit) throw error("label " + std::to_string(l) + " listed twice");
    m |= bit;
  }
  return m;
}

std::vector<int> labels_of(gmask mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i + 1);
  return out;
}

gmask apply_perm_mask(const std::vector<int>& perm, gmask mask) {
  gmask out = 0;
  for (int i = 0; mask >> i; ++i)
    if (mask & (gmask(1) << i)) out |= gmask(1) << perm[std::size_t(i)];
  return out;
}

bool NetworkInstance::relation_is_decoder(std::size_t idx) const {
  gmask in = mask_of(relations[idx].first, N);
  gmask inout = mask_of(relations[idx].second, N);
  gmask out = inout & ~in;
  gmask sources = gmask((1u << k) - 1);
  return (out & ~sources) == 0;
}

void NetworkInstance::validate() const {
  if (k < 1 || k > N) throw error("network: source count outside 1..N");
  if (N > 16) throw error("network: more than 16 variables unsupported");
  for (std::size_t i = 0; i < relations.size(); ++i) {
    gmask in = mask_of(relations[i].first, N);
    gmask inout = mask_of(relations[i].second, N);
    if ((in & ~inout) != 0)
      throw error("network: relation " + std::to_string(i + 1) +
                  " input set is not contained in its right-hand set");
    if (in == inout)
      throw error("network: relation " + std::to_string(i + 1) + " defines nothing");
    if (in == 0)
      throw error("network: relation " + std::to_string(i + 1) + " has empty input set");
  }
}

void AccessStructure::validate() const {
  if (N < 2) throw error("access structure: need a dealer and at least one party");
  if (N > 16) throw error("access structure: more than 16 participants unsupported");
  for (const auto& s : minimal_auth) {
    if (s.empty()) throw error("access structure: empty authorized set");
    for (int l : s)
      if (l == 1) throw error("access structure: dealer label 1 inside an authorized set");
    (void)mask_of(s, N);
  }
  for (std::size_t i = 0; i < minimal_auth.size(); ++i)
    for (std::size_t j = 0; j < minimal_auth.size(); ++j) {
      if (i == j) continue;
      gmask a = mask_of(minimal_auth[i], N), b = mask_of(minimal_auth[j], N);
      if ((a & b) == a)
        throw error("access structure: minimal sets are not an antichain");
    }
}

std::vector<gmask> AccessStructure::closure() const {
  std::vector<gmask> out;
  gmask parties = gmask(((1u << N) - 1) & ~1u);  // labels 2..N
  std::vector<gmask> mins;
  for (const auto& s : minimal_auth) mins.push_back(mask_of(s, N));
  for (gmask m = 0; m <= parties; ++m) {
    if (m & 1u) continue;  // dealer never participates
    if ((m & parties) != m) continue;
    for (gmask a : mins)
      if ((m & a) == a) {
        out.push_back(m);
        break;
      }
  }
  return out;
}

ConstraintSet constraints_from_network(const NetworkInstance& net) {
  net.validate();
  ConstraintSet I;
  I.N = net.N;
  LinearConstraint indep;
  indep.layer = Layer::source_independence;
  gmask sources = gmask((1u << net.k) - 1);
  indep.terms.emplace_back(sources, 1);
  for (int i = 0; i < net.k; ++i) indep.terms.emplace_back(gmask(1) << i, -1);
  indep.canonicalize();
  I.constraints.push_back(indep);
  for (std::size_t idx = 0; idx < net.relations.size(); ++idx) {
    LinearConstraint c;
    c.layer = net.relation_is_decoder(idx) ? Layer::decoder : Layer::encoder;
    c.terms.emplace_back(mask_of(net.relations[idx].first, net.N), 1);
    c.terms.emplace_back(mask_of(net.relations[idx].second, net.N), -1);
    c.canonicalize();
    I.constraints.push_back(c);
  }
  return I;
}

ConstraintSet constraints_from_access_structure(const AccessStructure& acc) {
  acc.validate();
  ConstraintSet I;
  I.N = acc.N;
  std::vector<gmask> authorized = acc.closure();
  std::vector<bool> is_auth(std::size_t(1) << acc.N, false);
  for (gmask a : authorized) is_auth[a] = true;
  for (gmask a : authorized) {
    LinearConstraint c;
    c.layer = Layer::recovery;
    c.terms.emplace_back(a, 1);
    c.terms.emplace_back(a | 1u, -1);
    c.canonicalize();
    I.constraints.push_back(c);
  }
  gmask parties = gmask(((1u << acc.N) - 1) & ~1u);
  for (gmask m = 1; m <= parties; ++m) {
    if ((m & parties) != m || (m & 1u)) continue;
    if (m == 0 || is_auth[m]) continue;
    LinearConstraint c;
    c.layer = Layer::secrecy;
    c.terms.emplace_back(gmask(1), 1);
    c.terms.emplace_back(m, 1);
    c.terms.emplace_back(m | 1u, -1);
    c.canonicalize();
    I.constraints.push_back(c);
  }
  return I;
}

std::pair<ConstraintSet, TargetTable> constraints_from_rank_vector(const RankVector& h) {
  std::string why;
  if (!h.is_polymatroid(&why))
    throw error("rank vector is not polymatroidal: " + why);
  ConstraintSet I;
  I.N = h.N;
  TargetTable T;
  for (gmask m = 1; m < (1u << h.N); ++m) T.targets.emplace_back(m, h.at(m));
  T.canonicalize();
  return {I, T};
}

ConstraintSet restrict_constraints(const ConstraintSet& I, gmask X) {
  ConstraintSet out;
  out.N = I.N;
  for (const auto& c : I.constraints)
    if ((c.support() & ~X) == 0) out.constraints.push_back(c);
  return out;
}

namespace {

std::vector<LinearConstraint> canonical_system(const ConstraintSet& I) {
  std::vector<LinearConstraint> cs = I.constraints;
  for (auto& c : cs) c.canonicalize();
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

}  // namespace

bool preserves_constraints(const std::vector<int>& perm, const ConstraintSet& I,
                           const TargetTable* targets) {
  std::vector<LinearConstraint> cs = canonical_system(I);
  std::vector<LinearConstraint> imgs;
  for (const auto& c : cs) {
    LinearConstraint ic;
    for (const auto& [m, co] : c.terms) ic.terms.emplace_back(apply_perm_mask(perm, m), co);
    ic.canonicalize();
    imgs.push_back(ic);
  }
  std::sort(imgs.begin(), imgs.end());
  if (imgs != cs) return false;
  if (targets) {
    for (const auto& [m, v] : targets->targets) {
      auto w = targets->value_of(apply_perm_mask(perm, m));
      if (!w || *w != v) return false;
    }
  }
  return true;
}

SymmetryGroup symmetry_group(const ConstraintSet& I, const TargetTable* targets,
                             const std::vector<std::vector<int>>* user_gens,
                             std::size_t max_elements) {
  const int N = I.N;
  SymmetryGroup G;
  G.N = N;
  if (user_gens) {
    for (const auto& g : *user_gens) {
      if (int(g.size()) != N) throw error("symmetry_group: generator of wrong degree");
      if (!preserves_constraints(g, I, targets))
        throw error("symmetry_group: supplied generator does not preserve the system");
      G.generators.push_back(g);
    }
    return G;
  }
  if (N > 12)
    throw error("symmetry_group: automatic search limited to N <= 12; supply generators");

  std::vector<LinearConstraint> cs = canonical_system(I);

  // Per-element profile: the multiset of shapes of constraints through the
  // element plus the element's singleton target, pruning candidate images.
  auto shape = [](const LinearConstraint& c) {
    std::vector<std::pair<int, int>> s;  // (coeff, popcount)
    for (const auto& [m, co] : c.terms) s.emplace_back(co, __builtin_popcount(m));
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::string> profile(std::size_t(N), std::string{});
  for (int i = 0; i < N; ++i) {
    std::vector<std::string> parts;
    for (const auto& c : cs) {
      if (!(c.support() & (gmask(1) << i))) continue;
      std::string p;
      for (auto [co, pc] : shape(c)) p += std::to_string(co) + ":" + std::to_string(pc) + ";";
      parts.push_back(p);
    }
    std::sort(parts.begin(), parts.end());
    std::string pr;
    for (const auto& p : parts) pr += p + "|";
    if (targets) {
      auto v = targets->value_of(gmask(1) << i);
      pr += "T" + (v ? std::to_string(*v) : std::string("-"));
    }
    profile[std::size_t(i)] = pr;
  }

  std::vector<int> sigma(std::size_t(N), -1);
  std::vector<bool> used(std::size_t(N), false);
  bool overflow = false;
  std::function<void(int)> go = [&](int d) {
    if (overflow) return;
    if (d == N) {
      if (preserves_constraints(sigma, I, targets)) {
        G.elements.push_back(sigma);
        if (G.elements.size() > max_elements) overflow = true;
      }
      return;
    }
    for (int img = 0; img < N && !overflow; ++img) {
      if (used[std::size_t(img)]) continue;
      if (profile[std::size_t(d)] != profile[std::size_t(img)]) continue;
      sigma[std::size_t(d)] = img;
      used[std::size_t(img)] = true;
      // Constraints fully covered by the assigned prefix must map into the
      // system (membership check; multiplicity is settled by the final pass).
      bool ok = true;
      gmask assigned = gmask((d + 1 >= 32) ? ~gmask(0) : (gmask(1) << (d + 1)) - 1);
      for (const auto& c : cs) {
        if (!ok) break;
        gmask sup = c.support();
        if ((sup & ~assigned) != 0) continue;
        if (!(sup & (gmask(1) << d))) continue;  // newly covered only
        LinearConstraint ic;
        for (const auto& [m, co] : c.terms) {
          gmask im = 0;
          for (int b = 0; m >> b; ++b)
            if (m & (gmask(1) << b)) im |= gmask(1) << sigma[std::size_t(b)];
          ic.terms.emplace_back(im, co);
        }
        ic.canonicalize();
        if (!std::binary_search(cs.begin(), cs.end(), ic)) ok = false;
      }
      if (ok && targets) {
        for (const auto& [m, v] : targets->targets) {
          if ((m & ~assigned) != 0 || !(m & (gmask(1) << d))) continue;
          gmask im = 0;
          for (int b = 0; m >> b; ++b)
            if (m & (gmask(1) << b)) im |= gmask(1) << sigma[std::size_t(b)];
          auto w = targets->value_of(im);
          if (!w || *w != v) {
            ok = false;
            break;
          }
        }
      }
      if (ok) go(d + 1);
      used[std::size_t(img)] = false;
      sigma[std::size_t(d)] = -1;
    }
  };
  go(0);
  if (overflow)
    throw error("symmetry_group: more than " + std::to_string(max_elements) +
                " automorphisms; supply generators");
  G.generators = G.elements;
  return G;
}

}  // namespace clrp
