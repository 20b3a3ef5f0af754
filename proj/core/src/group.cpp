#include "clrp/group.hpp"

#include <algorithm>
#include <deque>

namespace clrp {

GroupElement group_identity(int r, const FiniteField& f) {
  GroupElement g;
  g.A = Matrix::identity(r, f);
  g.frob = 0;
  return g;
}

bool is_identity(const GroupElement& g) {
  if (g.frob != 0) return false;
  for (int i = 0; i < g.A.rows; ++i)
    for (int j = 0; j < g.A.cols; ++j)
      if (g.A.at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

void center_normalize(Matrix& A) {
  const FiniteField& f = *A.f;
  for (felt v : A.a) {
    if (v != 0) {
      if (v == 1) return;
      felt s = f.inv(v);
      for (felt& e : A.a) e = f.mul(e, s);
      return;
    }
  }
}

static Matrix frob_matrix(const Matrix& A, int k) {
  if (k == 0) return A;
  Matrix out = A;
  for (felt& v : out.a) v = A.f->frobenius(v, k);
  return out;
}

GroupElement compose(const GroupElement& g2, const GroupElement& g1) {
  const FiniteField& f = *g2.A.f;
  GroupElement out;
  out.A = mat_mul(g2.A, frob_matrix(g1.A, g2.frob));
  out.frob = (g2.frob + g1.frob) % f.t;
  center_normalize(out.A);
  return out;
}

GroupElement inverse(const GroupElement& g) {
  const FiniteField& f = *g.A.f;
  int inv_frob = (f.t - g.frob) % f.t;
  GroupElement out;
  out.A = mat_inverse(frob_matrix(g.A, inv_frob));
  out.frob = inv_frob;
  center_normalize(out.A);
  return out;
}

Subspace act(const GroupElement& g, const Subspace& v) {
  Matrix rows = frob_matrix(v.basis, g.frob);
  return canonicalize(mat_mul(rows, g.A.transposed()));
}

std::vector<GroupElement> group_generators(int r, int q) {
  const FiniteField& f = field_of_order(q);
  std::vector<GroupElement> gens;
  if (q > 2) {
    GroupElement d = group_identity(r, f);
    d.A.at(0, 0) = f.primitive_element();
    center_normalize(d.A);
    gens.push_back(d);
  }
  if (r > 1) {
    GroupElement c;
    c.A = Matrix(r, r, f);
    for (int i = 0; i < r; ++i) c.A.at((i + 1) % r, i) = 1;
    gens.push_back(c);

    GroupElement t = group_identity(r, f);
    t.A.at(0, 1) = 1;
    gens.push_back(t);
  }
  if (f.t > 1) {
    GroupElement fr = group_identity(r, f);
    fr.frob = 1;
    gens.push_back(fr);
  }
  return gens;
}

bigint group_order(int r, int q) {
  const FiniteField& f = field_of_order(q);
  bigint qr = 1;
  for (int i = 0; i < r; ++i) qr *= q;
  bigint ord = 1;
  bigint qi = 1;
  for (int i = 0; i < r; ++i) {
    ord *= qr - qi;
    qi *= q;
  }
  ord /= q - 1;
  ord *= f.t;
  return ord;
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

Perm compose_perm(const Perm& p2, const Perm& p1) {
  Perm out(p1.size());
  for (std::size_t i = 0; i < p1.size(); ++i) out[i] = p2[std::size_t(p1[i])];
  return out;
}

Perm inverse_perm(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[std::size_t(p[i])] = int(i);
  return out;
}

bool is_identity_perm(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != int(i)) return false;
  return true;
}

PElem compose(const PElem& a, const PElem& b) {
  return PElem{compose_perm(a.perm, b.perm), compose(a.g, b.g)};
}

PElem inverse(const PElem& a) { return PElem{inverse_perm(a.perm), inverse(a.g)}; }

const GrassmannianIndex& projective_points(int r, int q) {
  return grassmannian_cache(r, {1}, q);
}

Perm point_perm(const GroupElement& g, const GrassmannianIndex& pts) {
  Perm p(std::size_t(pts.size()));
  for (int i = 0; i < pts.size(); ++i) p[std::size_t(i)] = pts.handle_of(act(g, pts[i]));
  return p;
}

PElem make_pelem(const GroupElement& g, const GrassmannianIndex& pts) {
  return PElem{point_perm(g, pts), g};
}

// ---------------------------------------------------------------------------
// Schreier-Sims
// ---------------------------------------------------------------------------

bool SchreierSims::contains(const PElem& g) const {
  PElem cur = g;
  for (const Level& L : levels_) {
    int x = cur.perm[std::size_t(L.base)];
    if (!L.transversal[std::size_t(x)]) return false;
    cur = compose(inverse(*L.transversal[std::size_t(x)]), cur);
  }
  return is_identity_perm(cur.perm);
}

bigint SchreierSims::order() const {
  bigint o = 1;
  for (const Level& L : levels_) o *= int(L.orbit.size());
  return o;
}

std::vector<PElem> SchreierSims::gens_at(std::size_t lev) const {
  std::vector<PElem> out;
  for (std::size_t m = lev; m < levels_.size(); ++m)
    out.insert(out.end(), levels_[m].gens.begin(), levels_[m].gens.end());
  return out;
}

bool SchreierSims::place(PElem g, std::size_t lev) {
  for (std::size_t l = lev; l < levels_.size(); ++l) {
    Level& L = levels_[l];
    int x = g.perm[std::size_t(L.base)];
    if (!L.transversal[std::size_t(x)]) {
      L.gens.push_back(std::move(g));
      return true;
    }
    g = compose(inverse(*L.transversal[std::size_t(x)]), g);
  }
  if (is_identity_perm(g.perm)) return false;
  int base = -1;
  for (std::size_t i = 0; i < g.perm.size(); ++i)
    if (g.perm[i] != int(i)) {
      base = int(i);
      break;
    }
  Level L;
  L.base = base;
  L.transversal.assign(std::size_t(degree_), std::nullopt);
  L.gens.push_back(std::move(g));
  levels_.push_back(std::move(L));
  rebuild_orbit(levels_.size() - 1);
  return true;
}

void SchreierSims::rebuild_orbit(std::size_t lev) {
  Level& L = levels_[lev];
  const std::vector<PElem> gens = gens_at(lev);
  L.orbit.clear();
  std::fill(L.transversal.begin(), L.transversal.end(), std::nullopt);
  Perm id_perm(std::size_t(degree_), 0);
  for (std::size_t i = 0; i < id_perm.size(); ++i) id_perm[i] = int(i);
  PElem id;
  id.perm = id_perm;
  id.g = group_identity(gens.front().g.A.rows, *gens.front().g.A.f);
  L.transversal[std::size_t(L.base)] = id;
  L.orbit.push_back(L.base);
  for (std::size_t qi = 0; qi < L.orbit.size(); ++qi) {
    int x = L.orbit[qi];
    for (const PElem& s : gens) {
      int y = s.perm[std::size_t(x)];
      if (!L.transversal[std::size_t(y)]) {
        L.transversal[std::size_t(y)] = compose(s, *L.transversal[std::size_t(x)]);
        L.orbit.push_back(y);
      }
    }
  }
}

bool SchreierSims::insert(const PElem& g) {
  if (is_identity_perm(g.perm)) return false;
  if (contains(g)) return false;
  place(g, 0);
  // Close the chain: rebuild every fundamental orbit under the cumulative
  // generator sets, then sift each Schreier generator through the deeper
  // levels, storing a surviving residue where it got stuck. All orbits must
  // be rebuilt before each scan pass -- a residue stored at a deep level is
  // only absorbed once that level's transversal covers its new point, and
  // skipping the rebuild would re-derive and re-store the same residue
  // forever. With fresh transversals each placement covers a point that was
  // uncovered at its level, so placements number at most degree * levels and
  // the loop terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_orbit(l);
    for (std::size_t l = 0; l < levels_.size() && !changed; ++l) {
      const std::vector<PElem> gens = gens_at(l);
      Level& L = levels_[l];
      for (std::size_t xi = 0; xi < L.orbit.size() && !changed; ++xi) {
        int x = L.orbit[xi];
        for (const PElem& s : gens) {
          PElem sx = compose(s, *L.transversal[std::size_t(x)]);
          int y = sx.perm[std::size_t(L.base)];
          PElem schreier = compose(inverse(*L.transversal[std::size_t(y)]), sx);
          if (is_identity_perm(schreier.perm)) continue;
          if (place(std::move(schreier), l + 1)) {
            changed = true;
            break;
          }
        }
      }
    }
  }
  return true;
}

std::vector<PElem> reduce_generators(const std::vector<PElem>& gens, int degree) {
  SchreierSims ss(degree);
  std::vector<PElem> kept;
  for (const PElem& g : gens) {
    if (is_identity_perm(g.perm)) continue;
    if (ss.insert(g)) kept.push_back(g);
  }
  return kept;
}

bigint subgroup_order(const std::vector<GroupElement>& gens, int r, int q) {
  const GrassmannianIndex& pts = projective_points(r, q);
  SchreierSims ss(pts.size());
  for (const GroupElement& g : gens) ss.insert(make_pelem(g, pts));
  return ss.order();
}

// ---------------------------------------------------------------------------
// Orbits
// ---------------------------------------------------------------------------

OrbitData orbit_with_transporter(const std::vector<GroupElement>& gens,
                                 const Subspace& base) {
  OrbitData od;
  od.base = base;
  od.orbit.push_back(base);
  std::unordered_map<std::string, int> index;
  index.emplace(base.key(), 0);
  const FiniteField& f = *base.basis.f;
  od.transporter.push_back(group_identity(base.r, f));
  if (gens.empty()) return od;
  const GrassmannianIndex& pts = projective_points(base.r, f.q);

  std::vector<PElem> schreier;
  for (std::size_t qi = 0; qi < od.orbit.size(); ++qi) {
    for (const GroupElement& g : gens) {
      Subspace img = act(g, od.orbit[qi]);
      auto it = index.find(img.key());
      if (it == index.end()) {
        index.emplace(img.key(), int(od.orbit.size()));
        od.orbit.push_back(img);
        od.transporter.push_back(compose(g, od.transporter[qi]));
      } else {
        // Schreier generator: u_y^{-1} * g * u_x stabilizes the base.
        GroupElement s = compose(inverse(od.transporter[std::size_t(it->second)]),
                                 compose(g, od.transporter[qi]));
        if (!is_identity(s)) schreier.push_back(make_pelem(s, pts));
      }
    }
  }
  for (const PElem& p : reduce_generators(schreier, pts.size()))
    od.stab_gens.push_back(p.g);
  return od;
}

PointOrbits::PointOrbits(std::vector<GroupElement> gens,
                         const GrassmannianIndex& domain)
    : gens_(std::move(gens)), domain_(&domain) {
  const int n = domain.size();
  dperm_.assign(gens_.size(), {});
  for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
    dperm_[gi].resize(std::size_t(n));
    for (int h = 0; h < n; ++h)
      dperm_[gi][std::size_t(h)] = domain.handle_of(act(gens_[gi], domain[h]));
  }
  rep_.assign(std::size_t(n), -1);
  from_.assign(std::size_t(n), -1);
  via_.assign(std::size_t(n), -1);
  root_index_.assign(std::size_t(n), -1);
  for (int h = 0; h < n; ++h) {
    if (rep_[std::size_t(h)] != -1) continue;
    roots_.push_back(h);
    members_.emplace_back();
    std::vector<int>& mem = members_.back();
    root_index_[std::size_t(h)] = int(roots_.size()) - 1;
    rep_[std::size_t(h)] = h;
    mem.push_back(h);
    std::deque<int> bfs{h};
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop_front();
      for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
        int y = dperm_[gi][std::size_t(x)];
        if (rep_[std::size_t(y)] == -1) {
          rep_[std::size_t(y)] = h;
          from_[std::size_t(y)] = x;
          via_[std::size_t(y)] = int(gi);
          mem.push_back(y);
          bfs.push_back(y);
        }
      }
    }
  }
}

const std::vector<int>& PointOrbits::members_of_root(int root) const {
  int idx = root_index_[std::size_t(root)];
  if (idx < 0) throw error("PointOrbits: not an orbit root");
  return members_[std::size_t(idx)];
}

GroupElement PointOrbits::transporter(int x) const {
  std::vector<int> vias;
  while (from_[std::size_t(x)] != -1) {
    vias.push_back(via_[std::size_t(x)]);
    x = from_[std::size_t(x)];
  }
  GroupElement g = group_identity(domain_->r, *domain_->f);
  for (auto it = vias.rbegin(); it != vias.rend(); ++it)
    g = compose(gens_[std::size_t(*it)], g);
  return g;
}

std::vector<GroupElement> PointOrbits::point_stabilizer(
    int p, const GrassmannianIndex& pts) const {
  if (rep_[std::size_t(p)] != p) throw error("point_stabilizer: p must be an orbit root");
  std::vector<PElem> schreier;
  for (int x : members_of_root(p)) {
    GroupElement ux = transporter(x);
    for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
      int y = dperm_[gi][std::size_t(x)];
      GroupElement s =
          compose(inverse(transporter(y)), compose(gens_[gi], ux));
      if (!is_identity(s)) schreier.push_back(make_pelem(s, pts));
    }
  }
  std::vector<GroupElement> out;
  for (const PElem& e : reduce_generators(schreier, pts.size())) out.push_back(e.g);
  return out;
}

}  // namespace clrp
