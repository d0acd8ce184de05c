#pragma once

#include <cmath>

#include "aptile/octa.hpp"

namespace aptile {

// Integer coordinates over the fifth roots of unity zeta..zeta^4 (same
// storage as OctaCoord; the embedding differs).  Rotation steps are 36
// degrees, realized by multiplication with mu = -zeta^3 = exp(i pi/5).
using PentaCoord = OctaCoord;

// mu^j for j = 0..9 as module elements
inline PentaCoord penta_dir(int j) {
  j = ((j % 10) + 10) % 10;
  static const int64_t tab[10][4] = {
      {-1, -1, -1, -1},  // mu^0 = 1
      {0, 0, -1, 0},     // mu^1 = -zeta^3
      {1, 0, 0, 0},      // mu^2 = zeta
      {0, 0, 0, -1},     // mu^3 = -zeta^4
      {0, 1, 0, 0},      // mu^4 = zeta^2
      {1, 1, 1, 1},      // mu^5 = -1
      {0, 0, 1, 0},      // mu^6
      {-1, 0, 0, 0},     // mu^7
      {0, 0, 0, 1},      // mu^8
      {0, -1, 0, 0},     // mu^9
  };
  return {tab[j][0], tab[j][1], tab[j][2], tab[j][3]};
}

// multiply by mu (rotation by 36 degrees)
inline PentaCoord penta_rot1(const PentaCoord& c) {
  return {c[1] - c[2], c[1] - c[3], c[1], c[1] - c[0]};
}

inline PentaCoord penta_rot(const PentaCoord& c, int r) {
  PentaCoord v = c;
  r = ((r % 10) + 10) % 10;
  for (int i = 0; i < r; ++i) v = penta_rot1(v);
  return v;
}

// multiply by tau = golden ratio = -zeta^2 - zeta^3; exact on the module
inline PentaCoord penta_mul_tau(const PentaCoord& c) {
  return {c[1] - c[3], c[1] + c[2] - c[3], -c[0] + c[1] + c[2], -c[0] + c[2]};
}

// mirror across the x axis: zeta^k -> zeta^(5-k)
inline PentaCoord penta_mirror(const PentaCoord& c) {
  return {c[3], c[2], c[1], c[0]};
}

inline double penta_xd(const PentaCoord& c) {
  static const double cs[5] = {std::cos(2 * M_PI / 5), std::cos(4 * M_PI / 5),
                               std::cos(6 * M_PI / 5), std::cos(8 * M_PI / 5)};
  return c[0] * cs[0] + c[1] * cs[1] + c[2] * cs[2] + c[3] * cs[3];
}
inline double penta_yd(const PentaCoord& c) {
  static const double sn[5] = {std::sin(2 * M_PI / 5), std::sin(4 * M_PI / 5),
                               std::sin(6 * M_PI / 5), std::sin(8 * M_PI / 5)};
  return c[0] * sn[0] + c[1] * sn[1] + c[2] * sn[2] + c[3] * sn[3];
}

// Golden integer a + b*tau; carries the exact Penrose area bookkeeping.
struct GoldenInt {
  int64_t a = 0, b = 0;
  GoldenInt operator+(const GoldenInt& o) const { return {a + o.a, b + o.b}; }
  GoldenInt operator*(const GoldenInt& o) const {
    // tau^2 = tau + 1
    return {a * o.a + b * o.b, a * o.b + b * o.a + b * o.b};
  }
  bool operator==(const GoldenInt& o) const { return a == o.a && b == o.b; }
};

}  // namespace aptile
