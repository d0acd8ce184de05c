#pragma once

#include <stdexcept>
#include <vector>

#include "aptile/quad.hpp"

namespace aptile {

enum class Kind1D : uint8_t { B, R };  // lengths 1 and alpha = 1 + sqrt(2)

struct Tile1D {
  Kind1D kind;
  QuadInt left;  // left endpoint

  QuadInt length() const {
    return kind == Kind1D::B ? QuadInt::one() : QuadInt::alpha();
  }
  QuadInt right() const { return left + length(); }
};

using Word1D = std::vector<Tile1D>;

// Tiles must abut left to right.
inline void check_abutting(const Word1D& w) {
  for (size_t i = 1; i < w.size(); ++i) {
    if (w[i].left != w[i - 1].right())
      throw std::invalid_argument("inflate_1d: word is not abutting");
  }
}

// One inflation step: stretch by alpha, then subdivide.
// B -> R, R -> R B R (consistent with alpha*1 = alpha, alpha^2 = 2 alpha + 1).
inline Word1D inflate_1d(const Word1D& word) {
  check_abutting(word);
  Word1D out;
  out.reserve(word.size() * 3);
  const QuadInt alpha = QuadInt::alpha();
  for (const Tile1D& t : word) {
    QuadInt x = t.left * alpha;
    if (t.kind == Kind1D::B) {
      out.push_back({Kind1D::R, x});
    } else {
      out.push_back({Kind1D::R, x});
      out.push_back({Kind1D::B, x + alpha});
      out.push_back({Kind1D::R, x + alpha + QuadInt::one()});
    }
  }
  return out;
}

// n-fold inflation of the seed pair of R tiles centred at the origin.
// Covers [-alpha^(n+1), alpha^(n+1)]; each word extends the previous one.
inline Word1D fixed_point_1d(int n) {
  if (n < 0) throw std::invalid_argument("fixed_point_1d: n must be >= 0");
  Word1D w = {{Kind1D::R, -QuadInt::alpha()}, {Kind1D::R, QuadInt::zero()}};
  for (int i = 0; i < n; ++i) w = inflate_1d(w);
  return w;
}

struct Census1D {
  long n_b = 0;
  long n_r = 0;
};

inline Census1D census_1d(const Word1D& w) {
  Census1D c;
  for (const Tile1D& t : w) (t.kind == Kind1D::B ? c.n_b : c.n_r)++;
  return c;
}

}  // namespace aptile
