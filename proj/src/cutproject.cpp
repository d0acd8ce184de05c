#include "aptile/cutproject.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aptile {

namespace {

// x * sqrt(2)
QuadInt mul_sqrt2(const QuadInt& x) { return {2 * x.b, x.a}; }

// qsign(lhs - rhs_int) where rhs is a plain integer
int cmp_int(const QuadInt& x, const mpz_class& n) { return qsign({x.a - n, x.b}); }

}  // namespace

std::vector<CpPoint1D> cp_points_1d(double xmin, double xmax) {
  if (!(xmin < xmax)) throw std::invalid_argument("cp_points_1d: empty range");
  // outward rational guard at 1e-9
  const mpz_class kScale = 1000000000;
  mpz_class lo9(static_cast<long>(std::floor(xmin * 1e9)) - 1);
  mpz_class hi9(static_cast<long>(std::ceil(xmax * 1e9)) + 1);

  const double s = std::sqrt(0.5);
  long u_lo = static_cast<long>(std::floor((xmin - s) / 2)) - 1;
  long u_hi = static_cast<long>(std::ceil((xmax + s) / 2)) + 1;

  std::vector<CpPoint1D> out;
  const double r2 = std::sqrt(2.0);
  for (long u = u_lo; u <= u_hi; ++u) {
    double vmin = std::max((xmin - u) / r2, (u - s) / r2) - 1;
    double vmax = std::min((xmax - u) / r2, (u + s) / r2) + 1;
    for (long v = static_cast<long>(std::floor(vmin)); v <= static_cast<long>(std::ceil(vmax));
         ++v) {
      QuadInt x(u, v);
      QuadInt xs = star1d(x);
      QuadInt xs2 = xs + xs;  // doubled conjugate
      if (qsign(xs2 - Strip1D::lo2()) <= 0) continue;
      if (qsign(xs2 - Strip1D::hi2()) >= 0) continue;
      // range test against the rational guards: x * 1e9 vs lo9/hi9
      QuadInt x9(x.a * kScale, x.b * kScale);
      if (cmp_int(x9, lo9) < 0 || cmp_int(x9, hi9) > 0) continue;
      Kind1D colour =
          qsign(xs2 - Strip1D::split2()) < 0 ? Kind1D::B : Kind1D::R;
      out.push_back({x, colour});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CpPoint1D& a, const CpPoint1D& b) { return a.x < b.x; });
  return out;
}

bool OctagonWindow::contains2(const Vec2Q& s2) {
  // 2 (y . D_k) <= 2 * apothem = 1 + sqrt2, evaluated at doubled y:
  // compare t_k = 2 * (s2 . D_k) with 2 + 2 sqrt2
  const QuadInt bound(2, 2);
  const QuadInt& x = s2.x2;
  const QuadInt& y = s2.y2;
  const QuadInt tx = x + x;
  const QuadInt ty = y + y;
  const QuadInt diag1 = mul_sqrt2(x + y);  // 2 (s2 . D_1)
  const QuadInt diag2 = mul_sqrt2(y - x);  // 2 (s2 . D_3)
  for (const QuadInt* t : {&tx, &ty, &diag1, &diag2}) {
    if (qsign(bound - *t) < 0) return false;
    QuadInt neg = -*t;
    if (qsign(bound - neg) < 0) return false;
  }
  return true;
}

bool OctagonWindow::boundary2(const Vec2Q& s2) {
  if (!contains2(s2)) return false;
  const QuadInt bound(2, 2);
  const QuadInt& x = s2.x2;
  const QuadInt& y = s2.y2;
  const QuadInt tx = x + x;
  const QuadInt ty = y + y;
  const QuadInt diag1 = mul_sqrt2(x + y);
  const QuadInt diag2 = mul_sqrt2(y - x);
  for (const QuadInt* t : {&tx, &ty, &diag1, &diag2}) {
    if (qsign(bound - *t) == 0) return true;
    if (qsign(bound + *t) == 0) return true;
  }
  return false;
}

std::vector<Vec2Q> OctagonWindow::vertices2() {
  // first vertex at ((1+sqrt2)/2, 1/2); doubled: (1+sqrt2, 1)
  std::vector<Vec2Q> vs;
  Vec2Q v(QuadInt(1, 1), QuadInt(1, 0));
  for (int k = 0; k < 8; ++k) {
    vs.push_back(v);
    // exact 45 deg rotation: (x,y) -> ((x-y)/sqrt2, (x+y)/sqrt2); the
    // halving stays integral on this vertex orbit
    QuadInt nx = mul_sqrt2(v.x2 - v.y2);
    QuadInt ny = mul_sqrt2(v.x2 + v.y2);
    v = Vec2Q(QuadInt(nx.a / 2, nx.b / 2), QuadInt(ny.a / 2, ny.b / 2));
  }
  return vs;
}

std::vector<CpPoint2D> cp_points_octa(double radius) {
  if (!(radius > 0)) throw std::invalid_argument("cp_points_octa: radius must be > 0");
  const double rc = OctagonWindow::circumradius();
  const double r = radius;
  const double r2d = std::sqrt(2.0);

  const mpz_class kScale = 1000000000;
  mpz_class r9(static_cast<long>(std::ceil(radius * 1e9)) + 1);
  mpz_class rr4 = 4 * r9 * r9;  // 4 r^2 * 1e18
  mpz_class scale2 = kScale * kScale;

  long b1 = static_cast<long>(std::ceil((r + rc) / 2)) + 1;
  long b2 = static_cast<long>(std::ceil((r + rc) / r2d)) + 1;

  std::vector<CpPoint2D> out;
  for (long u1 = -b1; u1 <= b1; ++u1) {
    for (long u2 = -b2; u2 <= b2; ++u2) {
      for (long u3 = -b1; u3 <= b1; ++u3) {
        // x = u1 + (u2-u4)/sqrt2 in [-r, r] bounds u4
        double lo = u2 - (r - u1) * r2d - 1;
        double hi = u2 + (r + u1) * r2d + 1;
        if (lo > hi) std::swap(lo, hi);
        for (long u4 = static_cast<long>(std::floor(lo));
             u4 <= static_cast<long>(std::ceil(hi)); ++u4) {
          OctaCoord c{u1, u2, u3, u4};
          Vec2Q s2 = star2(c);
          if (!OctagonWindow::contains2(s2)) continue;
          // |phys|^2 <= r^2 exactly: norm2_x4 * 1e18 <= 4 r9^2
          QuadInt n4 = phys2(c).norm2_x4();
          QuadInt scaled(n4.a * scale2, n4.b * scale2);
          if (cmp_int(scaled, rr4) > 0) continue;
          out.push_back({c, OctagonWindow::boundary2(s2)});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CpPoint2D& a, const CpPoint2D& b) { return a.c < b.c; });
  return out;
}

FillStats star_fill_stats(const std::vector<OctaCoord>& pts, int bins) {
  if (pts.empty()) throw std::invalid_argument("star_fill_stats: empty input");
  FillStats st;

  const double rc = OctagonWindow::circumradius();
  const double cell = 2 * rc / bins;
  auto inside_d = [](double x, double y) {
    const double h = (1 + std::sqrt(2.0)) / 2;
    const double s = std::sqrt(0.5);
    return std::abs(x) <= h && std::abs(y) <= h && std::abs((x + y) * s) <= h &&
           std::abs((x - y) * s) <= h;
  };

  // bins entirely inside the octagon
  std::vector<int> interior;
  for (int i = 0; i < bins; ++i)
    for (int j = 0; j < bins; ++j) {
      double x0 = -rc + i * cell, y0 = -rc + j * cell;
      bool in = inside_d(x0, y0) && inside_d(x0 + cell, y0) &&
                inside_d(x0, y0 + cell) && inside_d(x0 + cell, y0 + cell);
      if (in) interior.push_back(i * bins + j);
    }

  std::vector<long> occ(bins * bins, 0);
  long n_inside = 0;
  for (const OctaCoord& c : pts) {
    Vec2Q s2 = star2(c);
    if (OctagonWindow::contains2(s2)) n_inside++;
    double x = s2.xd(), y = s2.yd();
    int i = static_cast<int>(std::floor((x + rc) / cell));
    int j = static_cast<int>(std::floor((y + rc) / cell));
    if (i >= 0 && i < bins && j >= 0 && j < bins) occ[i * bins + j]++;
  }
  st.inside_fraction = double(n_inside) / pts.size();

  long n_interior = 0;
  for (int idx : interior) n_interior += occ[idx];
  st.dof = static_cast<int>(interior.size()) - 1;
  st.degenerate = interior.empty() ||
                  n_interior < 5 * static_cast<long>(interior.size());
  if (!interior.empty() && n_interior > 0) {
    double e = double(n_interior) / interior.size();
    double chi = 0;
    for (int idx : interior) {
      double d = occ[idx] - e;
      chi += d * d / e;
    }
    st.chi_square = chi;
  }
  if (st.dof > 0) {
    // Wilson-Hilferty approximation of the 0.999 quantile
    double k = st.dof, z = 3.090232306167814;
    double t = 1 - 2 / (9 * k) + z * std::sqrt(2 / (9 * k));
    st.quantile_999 = k * t * t * t;
  }
  return st;
}

}  // namespace aptile
