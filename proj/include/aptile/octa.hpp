#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "aptile/quad.hpp"

namespace aptile {

// Exact point of the plane with both coordinates in (1/2) Z[sqrt(2)].
// Stored doubled so that components stay in Z[sqrt(2)] proper.
struct Vec2Q {
  QuadInt x2, y2;  // doubled coordinates

  Vec2Q() = default;
  Vec2Q(QuadInt px2, QuadInt py2) : x2(std::move(px2)), y2(std::move(py2)) {}

  Vec2Q operator+(const Vec2Q& o) const { return {x2 + o.x2, y2 + o.y2}; }
  Vec2Q operator-(const Vec2Q& o) const { return {x2 - o.x2, y2 - o.y2}; }
  bool operator==(const Vec2Q& o) const { return x2 == o.x2 && y2 == o.y2; }

  QuadHalf x() const { return QuadHalf(x2); }
  QuadHalf y() const { return QuadHalf(y2); }
  double xd() const { return to_double(x2) / 2.0; }
  double yd() const { return to_double(y2) / 2.0; }

  // 4 * |v|^2, exact
  QuadInt norm2_x4() const { return x2 * x2 + y2 * y2; }
};

// Point of the octagonal module M = Z a1 + Z a2 + Z a3 + Z a4, where a_i is
// the unit vector at angle (i-1)*45 deg.  Doubles as the coefficient vector
// of the 4D lattice {(phys(x), star(x))}.
struct OctaCoord {
  std::array<int64_t, 4> u{0, 0, 0, 0};

  OctaCoord() = default;
  OctaCoord(int64_t u1, int64_t u2, int64_t u3, int64_t u4) : u{u1, u2, u3, u4} {}

  int64_t operator[](int i) const { return u[i]; }
  int64_t& operator[](int i) { return u[i]; }

  OctaCoord operator+(const OctaCoord& o) const {
    return {u[0] + o.u[0], u[1] + o.u[1], u[2] + o.u[2], u[3] + o.u[3]};
  }
  OctaCoord operator-(const OctaCoord& o) const {
    return {u[0] - o.u[0], u[1] - o.u[1], u[2] - o.u[2], u[3] - o.u[3]};
  }
  OctaCoord operator-() const { return {-u[0], -u[1], -u[2], -u[3]}; }
  bool operator==(const OctaCoord& o) const { return u == o.u; }
  bool operator!=(const OctaCoord& o) const { return u != o.u; }
  bool operator<(const OctaCoord& o) const { return u < o.u; }
  bool is_zero() const { return u[0] == 0 && u[1] == 0 && u[2] == 0 && u[3] == 0; }
};

// Unit step in direction k*45 deg, k = 0..7.
inline OctaCoord octa_dir(int k) {
  k = ((k % 8) + 8) % 8;
  OctaCoord d;
  if (k < 4)
    d[k] = 1;
  else
    d[k - 4] = -1;
  return d;
}

// Physical embedding, doubled: 2 * phys(x).
inline Vec2Q phys2(const OctaCoord& c) {
  return {QuadInt(2 * c[0], c[1] - c[3]), QuadInt(2 * c[2], c[1] + c[3])};
}

// Internal (star) embedding, doubled: 2 * star(x).  a_i at angle (i-1)*45
// maps to a_i* at angle (i-1)*135.
inline Vec2Q star2(const OctaCoord& c) {
  return {QuadInt(2 * c[0], c[3] - c[1]), QuadInt(-2 * c[2], c[1] + c[3])};
}

// Public embedding per the library contract: exact halves.
inline std::array<QuadHalf, 2> embed_phys(const OctaCoord& c) {
  Vec2Q v = phys2(c);
  return {QuadHalf(v.x2), QuadHalf(v.y2)};
}
inline std::array<QuadHalf, 2> embed_star(const OctaCoord& c) {
  Vec2Q v = star2(c);
  return {QuadHalf(v.x2), QuadHalf(v.y2)};
}

// Coefficient shift realizing the 45 deg physical rotation
// (and 135 deg internal rotation).
inline OctaCoord octa_sigma(const OctaCoord& c) {
  return {-c[3], c[0], c[1], c[2]};
}

// Multiplication of the physical point by alpha = 1 + sqrt(2); exact on M.
inline OctaCoord octa_mul_alpha(const OctaCoord& c) {
  return {c[0] + c[1] - c[3], c[0] + c[1] + c[2], c[1] + c[2] + c[3],
          -c[0] + c[2] + c[3]};
}

// Rotation by r*45 deg about the origin (coefficient action).
inline OctaCoord octa_rot(const OctaCoord& c, int r) {
  OctaCoord v = c;
  r = ((r % 8) + 8) % 8;
  for (int i = 0; i < r; ++i) v = octa_sigma(v);
  return v;
}

inline double phys_xd(const OctaCoord& c) { return phys2(c).xd(); }
inline double phys_yd(const OctaCoord& c) { return phys2(c).yd(); }

}  // namespace aptile

template <>
struct std::hash<aptile::OctaCoord> {
  size_t operator()(const aptile::OctaCoord& c) const {
    size_t h = 0xcbf29ce484222325ULL;
    for (int i = 0; i < 4; ++i) {
      h ^= static_cast<size_t>(c.u[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
