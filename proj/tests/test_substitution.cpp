#include <doctest.h>

#include <cmath>
#include <set>
#include <unordered_set>

#include "aptile/ab.hpp"
#include "aptile/cutproject.hpp"

using namespace aptile;

TEST_CASE("frozen decoration bits equal the derived ones") {
  CHECK(derive_ab_bits() == ab_frozen_bits());
}

TEST_CASE("census counts follow the substitution matrix") {
  const SystemDef& def = ab_system();
  Patch p = ab_square_seed();
  Census c0 = tile_census(def, p);
  CHECK(c0.triangles == 2);
  CHECK(c0.rhombi == 0);
  CHECK(c0.squares == 1);

  p = inflate_patch(def, p);
  Census c1 = tile_census(def, p);
  CHECK(c1.triangles == 6);
  CHECK(c1.rhombi == 4);

  p = inflate_patch(def, p);
  Census c2 = tile_census(def, p);
  CHECK(c2.triangles == 34);
  CHECK(c2.rhombi == 24);
  CHECK(c2.unpaired_tris == 0);
  CHECK(c2.squares == 17);
}

TEST_CASE("exact area identity is enforced (zero tolerance)") {
  const SystemDef& def = ab_system();
  Patch p = ab_square_seed();
  // patch_area8 of the unit square = 8
  CHECK(patch_area8(def, p) == QuadInt(8, 0));
  Patch q = inflate_patch(def, p);
  CHECK(patch_area8(def, q) == QuadInt(8, 0) * QuadInt(3, 2));
}

TEST_CASE("empty census") {
  Patch p;
  p.system = TileSystem::AB;
  Census c = tile_census(ab_system(), p);
  CHECK(c.triangles == 0);
  CHECK(c.rhombi == 0);
  CHECK(c.squares == 0);
}

TEST_CASE("square:rhombus ratio approaches 1:sqrt2") {
  const SystemDef& def = ab_system();
  Patch p = ab_square_seed();
  for (int i = 0; i < 6; ++i) p = inflate_patch(def, p);
  Census c = tile_census(def, p);
  CHECK(c.unpaired_tris == 0);
  double ratio = double(c.squares) / double(c.rhombi);
  CHECK(std::abs(ratio - 1 / std::sqrt(2.0)) < 1e-2);
}

TEST_CASE("matching verifier passes on inflations, both modes") {
  const SystemDef& def = ab_system();
  Patch p = ab_square_seed();
  for (int n = 1; n <= 5; ++n) {
    p = inflate_patch(def, p);
    CHECK(verify_matching(def, p, MatchMode::EdgesOnly).ok);
    CHECK(verify_matching(def, p, MatchMode::EdgesAndCorners).ok);
  }
}

TEST_CASE("all-squares arrangement: edges legal, corners illegal") {
  const SystemDef& def = ab_system();
  Patch p = ab_all_squares(4);
  CHECK(verify_matching(def, p, MatchMode::EdgesOnly).ok);
  auto rep = verify_matching(def, p, MatchMode::EdgesAndCorners);
  CHECK_FALSE(rep.ok);
  for (auto& v : rep.violations) CHECK(v.what == "corner marks do not assemble a house");
}

TEST_CASE("constructed arrow defect is caught") {
  const SystemDef& def = ab_system();
  // two rhombi sharing an edge with clashing arrows: RH rot0 @ 0 has the
  // edge [a2, 0] with an inward arrow; place a second rhombus using that
  // segment with the opposite arrow by picking the wrong rotation.
  Patch p;
  p.system = TileSystem::AB;
  p.tiles.push_back({AbRhomb, 0, OctaCoord{}});
  // rhombus with acute corner at a2 going to 0: edges a2->0 dir 5: rot 5
  p.tiles.push_back({AbRhomb, 5, octa_dir(1)});
  auto rep = verify_matching(def, p, MatchMode::EdgesOnly);
  CHECK_FALSE(rep.ok);
}

TEST_CASE("undecorated patch is rejected by the verifier") {
  const SystemDef& def = ab_system();
  Patch p = ab_square_seed();
  p.decorated = false;
  CHECK_THROWS_AS(verify_matching(def, p, MatchMode::EdgesOnly), std::invalid_argument);
}

TEST_CASE("mixed-system patch is rejected by inflate") {
  const SystemDef& def = ab_system();
  Patch p;
  p.system = TileSystem::AB;
  p.tiles.push_back({7, 0, OctaCoord{}});  // kind out of range
  CHECK_THROWS_AS(inflate_patch(def, p), std::invalid_argument);
}

TEST_CASE("fixed-point nesting: star patch recurs under two inflations") {
  const SystemDef& def = ab_system();
  Patch s = ab_star_seed();
  std::vector<Patch> gen = {s};
  for (int i = 1; i <= 4; ++i) gen.push_back(inflate_patch(def, gen.back()));
  auto geom_key = [](const PlacedTile& t) {
    return std::tuple<int, int, std::array<int64_t, 4>>(t.kind, t.rot, t.anchor.u);
  };
  for (int n = 0; n + 2 <= 4; ++n) {
    std::set<std::tuple<int, int, std::array<int64_t, 4>>> big;
    for (auto& t : gen[n + 2].tiles) big.insert(geom_key(t));
    for (auto& t : gen[n].tiles) CHECK(big.count(geom_key(t)) == 1);
  }
}

TEST_CASE("window containment of inflation vertices") {
  const SystemDef& def = ab_system();
  for (Patch p : {ab_square_seed(), ab_star_seed()}) {
    for (int n = 0; n <= 4; ++n) {
      if (n) p = inflate_patch(def, p);
      for (auto& t : p.tiles)
        for (auto& v : placed_verts(def, t))
          CHECK(OctagonWindow::contains2(star2(v)));
    }
  }
}

TEST_CASE("repetitivity probe") {
  const SystemDef& def = ab_system();
  Patch p = ab_square_seed();
  for (int i = 0; i < 5; ++i) p = inflate_patch(def, p);

  // r = 0: every vertex pattern is the trivial one; bound <= max nn spacing
  auto rep0 = repetitivity_probe(def, p, 0.01);
  CHECK_FALSE(rep0.censored);
  CHECK(rep0.bound <= 1.0 + 1e-9);

  auto rep1 = repetitivity_probe(def, p, 1.0);
  CHECK_FALSE(rep1.censored);
  CHECK(rep1.bound < 1e6);
  CHECK(rep1.patterns > 1);

  // periodic all-squares patch: recurrence at the lattice constant
  Patch grid = ab_all_squares(8);
  auto repg = repetitivity_probe(def, grid, 0.9);
  CHECK_FALSE(repg.censored);
  CHECK(repg.bound == doctest::Approx(1.0).epsilon(1e-9));

  // r beyond the usable interior
  CHECK_THROWS_AS(repetitivity_probe(def, ab_square_seed(), 5.0),
                  std::invalid_argument);
}
