#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>

namespace aptile {

// Element a + b*sqrt(2) of the ring Z[sqrt(2)].  Coefficients are
// arbitrary-precision integers so that products of products never wrap;
// everything that decides membership or equality goes through this type.
struct QuadInt {
  mpz_class a;  // rational part
  mpz_class b;  // coefficient of sqrt(2)

  QuadInt() : a(0), b(0) {}
  QuadInt(long ra, long rb) : a(ra), b(rb) {}
  QuadInt(mpz_class ra, mpz_class rb) : a(std::move(ra)), b(std::move(rb)) {}

  static QuadInt zero() { return QuadInt(); }
  static QuadInt one() { return QuadInt(1, 0); }
  static QuadInt sqrt2() { return QuadInt(0, 1); }
  // alpha = 1 + sqrt(2), the silver mean
  static QuadInt alpha() { return QuadInt(1, 1); }

  bool is_zero() const { return a == 0 && b == 0; }

  QuadInt operator+(const QuadInt& o) const { return {a + o.a, b + o.b}; }
  QuadInt operator-(const QuadInt& o) const { return {a - o.a, b - o.b}; }
  QuadInt operator-() const { return {-a, -b}; }
  QuadInt operator*(const QuadInt& o) const {
    return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
  }
  QuadInt& operator+=(const QuadInt& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  QuadInt& operator-=(const QuadInt& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  QuadInt& operator*=(const QuadInt& o) { return *this = *this * o; }

  bool operator==(const QuadInt& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QuadInt& o) const { return !(*this == o); }

  std::string str() const {
    return a.get_str() + (sgn(b) < 0 ? "" : "+") + b.get_str() + "r2";
  }
};

// Sign of a + b*sqrt(2) without floating point: when the terms disagree in
// sign, compare a^2 against 2 b^2.
inline int qsign(const QuadInt& x) {
  int sa = sgn(x.a), sb = sgn(x.b);
  if (sa == 0 && sb == 0) return 0;
  if (sa >= 0 && sb >= 0) return 1;
  if (sa <= 0 && sb <= 0) return -1;
  mpz_class lhs = x.a * x.a, rhs = 2 * x.b * x.b;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // cannot happen for integer a,b != 0 (sqrt2 irrational)
  // terms disagree: result carries the sign of the dominant term
  return (c > 0) ? sa : sb;
}

// Star map on Z[sqrt(2)]: sqrt(2) -> -sqrt(2).  Ring involution.
inline QuadInt star1d(const QuadInt& x) { return {x.a, -x.b}; }

inline bool operator<(const QuadInt& x, const QuadInt& y) {
  return qsign(x - y) < 0;
}
inline bool operator<=(const QuadInt& x, const QuadInt& y) {
  return qsign(x - y) <= 0;
}
inline bool operator>(const QuadInt& x, const QuadInt& y) {
  return qsign(x - y) > 0;
}
inline bool operator>=(const QuadInt& x, const QuadInt& y) {
  return qsign(x - y) >= 0;
}

// Floating view.  Evaluated in 256-bit precision before the final rounding,
// so the absolute error stays within a couple ulp of the result.
inline double to_double(const QuadInt& x) {
  static const mpf_class root2 = sqrt(mpf_class(2, 256));
  mpf_class v(x.a, 256);
  v += mpf_class(x.b, 256) * root2;
  return v.get_d();
}

// Value with an implicit denominator of 2: (a + b*sqrt(2)) / 2.  Closed
// under addition and under multiplication by QuadInt; this is all the
// embeddings of the octagonal module need.
struct QuadHalf {
  QuadInt num;

  QuadHalf() = default;
  explicit QuadHalf(QuadInt n) : num(std::move(n)) {}
  static QuadHalf of(const QuadInt& whole) { return QuadHalf(QuadInt(2 * whole.a, 2 * whole.b)); }

  QuadHalf operator+(const QuadHalf& o) const { return QuadHalf(num + o.num); }
  QuadHalf operator-(const QuadHalf& o) const { return QuadHalf(num - o.num); }
  QuadHalf operator-() const { return QuadHalf(-num); }
  QuadHalf operator*(const QuadInt& s) const { return QuadHalf(num * s); }
  bool operator==(const QuadHalf& o) const { return num == o.num; }
  bool operator!=(const QuadHalf& o) const { return num != o.num; }
};

inline int qsign(const QuadHalf& x) { return qsign(x.num); }
inline double to_double(const QuadHalf& x) { return to_double(x.num) / 2.0; }

}  // namespace aptile

template <>
struct std::hash<aptile::QuadInt> {
  size_t operator()(const aptile::QuadInt& q) const {
    auto lo = [](const mpz_class& z) -> size_t {
      size_t v = mpz_size(z.get_mpz_t()) ? mpz_getlimbn(z.get_mpz_t(), 0) : 0;
      return v * 2 + (sgn(z) < 0 ? 1 : 0);
    };
    return lo(q.a) * 0x9e3779b97f4a7c15ULL ^ lo(q.b);
  }
};
