#include <set>

#include "clrp/group.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace clrp;

TEST_CASE("group orders pinned") {
  CHECK(group_order(1, 2) == 1);
  CHECK(group_order(2, 2) == 6);
  CHECK(group_order(3, 2) == 168);
  CHECK(group_order(4, 2) == 20160);
  CHECK(group_order(2, 3) == 24);
  CHECK(group_order(2, 4) == 120);  // PGL doubled by the Frobenius
  CHECK(group_order(3, 3) == 5616);
  CHECK(group_order(2, 5) == 120);
}

TEST_CASE("generator counts follow the construction") {
  CHECK(group_generators(1, 2).empty());
  CHECK(group_generators(2, 2).size() == 2);  // cycle + transvection
  CHECK(group_generators(2, 3).size() == 3);  // + diagonal
  CHECK(group_generators(2, 4).size() == 4);  // + frobenius
  CHECK(group_generators(1, 4).size() == 2);  // diagonal + frobenius
}

TEST_CASE("generated group matches the closed-form order") {
  for (auto [r, q] : std::vector<std::pair<int, int>>{
           {2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 4}, {2, 5}}) {
    CHECK(subgroup_order(group_generators(r, q), r, q) == group_order(r, q));
  }
}

TEST_CASE("brute-force closure agrees for small groups") {
  for (auto [r, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {2, 4}}) {
    const auto elems = testing::slow_group_closure(group_generators(r, q));
    CHECK(bigint(elems.size()) == group_order(r, q));
  }
}

TEST_CASE("composition acts right-to-left and inverses cancel") {
  const auto gens = group_generators(3, 2);
  const GrassmannianIndex gi = enumerate_grassmannian(3, {1, 2}, 2);
  const GroupElement id = group_identity(3, field_of_order(2));
  for (const auto& g1 : gens)
    for (const auto& g2 : gens) {
      const GroupElement c = compose(g2, g1);
      for (int h = 0; h < gi.size(); ++h)
        CHECK(act(c, gi[h]) == act(g2, act(g1, gi[h])));
    }
  for (const auto& g : gens) {
    CHECK(compose(g, inverse(g)) == id);
    CHECK(compose(inverse(g), g) == id);
    CHECK(is_identity(compose(g, inverse(g))));
  }
  for (int h = 0; h < gi.size(); ++h) CHECK(act(id, gi[h]) == gi[h]);
}

TEST_CASE("frobenius component acts semilinearly") {
  const auto gens = group_generators(2, 4);
  const GrassmannianIndex gi = enumerate_grassmannian(2, {1}, 4);
  // the full group permutes the 5 lines; closure through act stays inside
  for (const auto& g : gens)
    for (int h = 0; h < gi.size(); ++h) CHECK(gi.find(act(g, gi[h])) >= 0);
}

TEST_CASE("point orbits: transitive action with transporters") {
  const auto gens = group_generators(3, 2);
  const GrassmannianIndex& pts = projective_points(3, 2);
  PointOrbits po(gens, pts);
  REQUIRE(po.roots().size() == 1);
  CHECK(po.roots().front() == 0);
  CHECK(int(po.members_of_root(0).size()) == 7);
  for (int h = 0; h < pts.size(); ++h) {
    CHECK(po.rep_of(h) == 0);
    CHECK(act(po.transporter(h), pts[0]) == pts[h]);
  }
  // stabilizer of a point in PGL(3,2) has order 168/7 = 24
  const auto stab = po.point_stabilizer(0, pts);
  CHECK(subgroup_order(stab, 3, 2) == 24);
  for (const auto& s : stab) CHECK(act(s, pts[0]) == pts[0]);
}

TEST_CASE("point orbits handle an empty generator list") {
  const GrassmannianIndex& pts = projective_points(2, 2);
  PointOrbits po({}, pts);
  CHECK(int(po.roots().size()) == pts.size());
  for (int h = 0; h < pts.size(); ++h) {
    CHECK(po.rep_of(h) == h);
    CHECK(is_identity(po.transporter(h)));
  }
  CHECK(po.point_stabilizer(0, pts).empty());
}

TEST_CASE("point orbits split under a proper subgroup") {
  // Only the transvection: fixes some lines of F_2^2.
  const auto gens = group_generators(2, 2);
  const GrassmannianIndex& pts = projective_points(2, 2);
  PointOrbits po({gens[1]}, pts);
  CHECK(po.roots().size() >= 2);
  std::size_t total = 0;
  for (int r : po.roots()) total += po.members_of_root(r).size();
  CHECK(int(total) == pts.size());
}

TEST_CASE("schreier-sims membership and order") {
  const GrassmannianIndex& pts = projective_points(3, 2);
  SchreierSims chain(pts.size());
  const auto gens = group_generators(3, 2);
  std::vector<PElem> pgens;
  for (const auto& g : gens) pgens.push_back(make_pelem(g, pts));
  CHECK(chain.order() == 1);
  CHECK(chain.contains(make_pelem(group_identity(3, field_of_order(2)), pts)));
  for (const auto& pe : pgens) chain.insert(pe);
  CHECK(chain.order() == 168);
  for (const auto& pe : pgens) {
    CHECK(chain.contains(pe));
    CHECK(!chain.insert(pe));
  }
}

TEST_CASE("generator reduction drops dependent generators") {
  const GrassmannianIndex& pts = projective_points(3, 2);
  const auto gens = group_generators(3, 2);
  std::vector<PElem> doubled;
  for (const auto& g : gens) {
    doubled.push_back(make_pelem(g, pts));
    doubled.push_back(make_pelem(g, pts));  // duplicates are redundant
  }
  const auto reduced = reduce_generators(doubled, pts.size());
  CHECK(reduced.size() <= gens.size());
  CHECK(subgroup_order([&] {
          std::vector<GroupElement> gs;
          for (const auto& pe : reduced) gs.push_back(pe.g);
          return gs;
        }(),
        3, 2) == 168);
}

TEST_CASE("orbit of one subspace with transporters and stabilizer") {
  const auto gens = group_generators(3, 2);
  const GrassmannianIndex planes = enumerate_grassmannian(3, {2}, 2);
  OrbitData od = orbit_with_transporter(gens, planes[0]);
  CHECK(od.orbit.size() == 7);
  for (std::size_t i = 0; i < od.orbit.size(); ++i)
    CHECK(act(od.transporter[i], od.base) == od.orbit[i]);
  for (const auto& s : od.stab_gens) CHECK(act(s, od.base) == od.base);
  CHECK(subgroup_order(od.stab_gens, 3, 2) == 24);
}
