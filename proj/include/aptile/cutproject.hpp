#pragma once

#include <vector>

#include "aptile/octa.hpp"
#include "aptile/silver.hpp"

namespace aptile {

// 1D acceptance strip: window (-1/sqrt2, 1/sqrt2); B points come from the
// bottom portion up to 1/sqrt2 - 1, R points from the rest.  The bounds are
// never attained by module points (2u = (2v+-1) sqrt2 has no integer
// solution), so open/closed is immaterial.
struct Strip1D {
  static QuadInt lo2() { return QuadInt(0, -1); }     // 2 * (-1/sqrt2)
  static QuadInt hi2() { return QuadInt(0, 1); }      // 2 * (+1/sqrt2)
  static QuadInt split2() { return QuadInt(-2, 1); }  // 2 * (1/sqrt2 - 1)
};

struct CpPoint1D {
  QuadInt x;
  Kind1D colour;
};

// All points u + v sqrt2 of [xmin, xmax] whose conjugate lies in the strip,
// sorted.  Real endpoints are rounded outward by 1e-9 and then handled
// exactly, so boundary semantics stay auditable.
std::vector<CpPoint1D> cp_points_1d(double xmin, double xmax);

// Regular octagon of unit edge length centred at the origin, edges normal
// to the eight half-axis directions.  Exact membership of internal points
// given in doubled coordinates.
struct OctagonWindow {
  // apothem = (1+sqrt2)/2; test y . D_k <= apothem for all k
  static bool contains2(const Vec2Q& s2);
  static bool boundary2(const Vec2Q& s2);
  static double area() { return 2.0 * (1.0 + 1.4142135623730951); }
  static double circumradius() { return 1.3065629648763766; }  // 1/(2 sin pi/8)
  // vertices, doubled coordinates, counterclockwise from angle 22.5 deg
  static std::vector<Vec2Q> vertices2();
};

struct CpPoint2D {
  OctaCoord c;
  bool singular = false;  // star image exactly on the window boundary
};

// All module points with |phys| <= radius and star image in the closed
// octagon window; complete by construction (coefficient bounds from the
// inverse embedding), sorted lexicographically.
std::vector<CpPoint2D> cp_points_octa(double radius);

struct FillStats {
  double inside_fraction = 0;
  double chi_square = 0;
  int dof = 0;
  double quantile_999 = 0;  // Wilson-Hilferty approximation
  bool degenerate = false;
};

// Fraction of star images inside the closed window plus a chi-square
// uniformity statistic over the bins x bins grid cells fully interior to
// the octagon.
FillStats star_fill_stats(const std::vector<OctaCoord>& pts, int bins);

}  // namespace aptile
