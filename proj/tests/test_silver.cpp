#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "aptile/silver.hpp"

using namespace aptile;

TEST_CASE("inflate_1d basic substitutions") {
  Word1D b = {{Kind1D::B, QuadInt::zero()}};
  Word1D ib = inflate_1d(b);
  REQUIRE(ib.size() == 1);
  CHECK(ib[0].kind == Kind1D::R);
  CHECK(ib[0].left == QuadInt::zero());

  Word1D r = {{Kind1D::R, QuadInt::zero()}};
  Word1D ir = inflate_1d(r);
  REQUIRE(ir.size() == 3);
  CHECK(ir[0].kind == Kind1D::R);
  CHECK(ir[0].left == QuadInt::zero());
  CHECK(ir[1].kind == Kind1D::B);
  CHECK(ir[1].left == QuadInt::alpha());
  CHECK(ir[2].kind == Kind1D::R);
  CHECK(ir[2].left == QuadInt::alpha() + QuadInt::one());
  // endpoints 0, alpha, alpha+1, 2 alpha + 1
  CHECK(ir[2].right() == QuadInt(1, 0) + QuadInt(2, 2));
}

TEST_CASE("inflate_1d rejects non-abutting words") {
  Word1D w = {{Kind1D::B, QuadInt::zero()}, {Kind1D::B, QuadInt(5, 0)}};
  CHECK_THROWS_AS(inflate_1d(w), std::invalid_argument);
}

TEST_CASE("fixed point seed and first step") {
  Word1D w0 = fixed_point_1d(0);
  REQUIRE(w0.size() == 2);
  CHECK(w0[0].left == -QuadInt::alpha());
  CHECK(w0[1].left == QuadInt::zero());

  // left endpoints at n=1: {-2a-1, -a-1, -a, 0, a, a+1}
  Word1D w1 = fixed_point_1d(1);
  std::vector<QuadInt> expect = {QuadInt(-3, -2), QuadInt(-2, -1), QuadInt(-1, -1),
                                 QuadInt(0, 0),   QuadInt(1, 1),   QuadInt(2, 1)};
  REQUIRE(w1.size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i) CHECK(w1[i].left == expect[i]);
}

TEST_CASE("two inflations of the seed contain the seed") {
  Word1D w0 = fixed_point_1d(0);
  Word1D w2 = fixed_point_1d(2);
  for (const Tile1D& t : w0) {
    bool found = false;
    for (const Tile1D& s : w2)
      if (s.kind == t.kind && s.left == t.left) found = true;
    CHECK(found);
  }
}

TEST_CASE("nesting: result(n) subset of result(n+1)") {
  for (int n = 0; n <= 5; ++n) {
    Word1D a = fixed_point_1d(n);
    Word1D b = fixed_point_1d(n + 1);
    std::set<std::pair<std::string, int>> bb;
    for (const Tile1D& t : b) bb.insert({t.left.str(), (int)t.kind});
    for (const Tile1D& t : a) CHECK(bb.count({t.left.str(), (int)t.kind}) == 1);
  }
}

TEST_CASE("letter count recurrence and n=3 counts") {
  Word1D w = fixed_point_1d(0);
  long nb = 0, nr = 2;
  for (int i = 0; i < 6; ++i) {
    w = inflate_1d(w);
    long nb2 = nr, nr2 = nb + 2 * nr;
    Census1D c = census_1d(w);
    CHECK(c.n_b == nb2);
    CHECK(c.n_r == nr2);
    nb = nb2;
    nr = nr2;
  }
  Census1D c3 = census_1d(fixed_point_1d(3));
  CHECK(c3.n_b == 10);
  CHECK(c3.n_r == 24);
}

TEST_CASE("silver frequency after 12 inflations of a single R") {
  Word1D w = {{Kind1D::R, QuadInt::zero()}};
  for (int i = 0; i < 12; ++i) w = inflate_1d(w);
  Census1D c = census_1d(w);
  double ratio = double(c.n_b) / double(c.n_r);
  CHECK(std::abs(ratio - (std::sqrt(2.0) - 1.0)) < 1e-6);
}

TEST_CASE("word covers [-alpha^(n+1), alpha^(n+1)]") {
  for (int n = 0; n <= 4; ++n) {
    Word1D w = fixed_point_1d(n);
    QuadInt bound = QuadInt::one();
    for (int i = 0; i <= n; ++i) bound = bound * QuadInt::alpha();
    CHECK(w.front().left == -bound);
    CHECK(w.back().right() == bound);
  }
}

TEST_CASE("aperiodicity: no nonzero period maps the central half into the set") {
  Word1D w = fixed_point_1d(8);
  std::unordered_set<QuadInt> pts;
  for (const Tile1D& t : w) pts.insert(t.left);

  // central half: |x| < alpha^9 / 2 (span endpoint is alpha^9)
  QuadInt span = QuadInt::one();
  for (int i = 0; i <= 8; ++i) span = span * QuadInt::alpha();
  QuadInt span2 = span + span;

  std::vector<QuadInt> central;
  for (const Tile1D& t : w) {
    QuadInt four_x(4 * t.left.a, 4 * t.left.b);
    if (qsign(four_x + span2) > 0 && qsign(span2 - four_x) > 0)
      central.push_back(t.left);
  }
  REQUIRE(central.size() > 100);

  std::unordered_set<QuadInt> cands;
  for (size_t i = 0; i < central.size(); i += 5)
    for (size_t j = 0; j < central.size(); j += 5)
      if (i != j) cands.insert(central[i] - central[j]);

  long periods = 0, tried = 0;
  for (const QuadInt& t : cands) {
    if (t.is_zero()) continue;
    // keep |t| <= span/2 so that shifted points stay within coverage
    QuadInt four_t(4 * t.a, 4 * t.b);
    if (qsign(span2 - four_t) < 0 || qsign(span2 + four_t) < 0) continue;
    tried++;
    bool period = true;
    for (const QuadInt& x : central)
      if (!pts.count(x + t)) {
        period = false;
        break;
      }
    if (period) periods++;
  }
  CHECK(tried > 50);
  CHECK(periods == 0);
}
