#pragma once

// Brute-force reference computations over F_p with plain integers and no
// library code: matrices are int arrays, the algebra is spanned by explicit
// word images, and rank is computed directly.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using M = std::array<std::int64_t, 4>;  // row-major a11 a12 a21 a22

inline std::int64_t md(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

inline M mul(const M& x, const M& y, std::int64_t p) {
  return {md(x[0] * y[0] + x[1] * y[2], p), md(x[0] * y[1] + x[1] * y[3], p), md(x[2] * y[0] + x[3] * y[2], p),
          md(x[2] * y[1] + x[3] * y[3], p)};
}

inline std::int64_t pw(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b = md(b, p);
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline int rank(std::vector<M> rows, std::int64_t p) {
  int r = 0;
  for (int c = 0; c < 4; ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c] % p) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    const std::int64_t inv = pw(rows[r][c], p - 2, p);
    for (auto& x : rows[r]) x = x * inv % p;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::int64_t f = rows[i][c];
      for (int k = 0; k < 4; ++k) rows[i][k] = md(rows[i][k] - f * rows[r][k], p);
    }
    ++r;
  }
  return r;
}

/// Images of all words of length <= 3 in the generators.
inline std::vector<M> word_images(const std::vector<M>& gens, std::int64_t p) {
  std::vector<M> out{{1, 0, 0, 1}};
  std::vector<M> frontier = out;
  for (int len = 0; len < 3; ++len) {
    std::vector<M> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) next.push_back(mul(w, g, p));
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

/// Label by span dimension and the m-test on every word image.
inline std::string label(const std::vector<M>& gens, std::int64_t p) {
  const auto ws = word_images(gens, p);
  const int d = rank(ws, p);
  if (d == 4) return "air";
  if (d == 3) return "borel";
  if (d == 1) return "scalar";
  for (const auto& w : ws) {
    const std::int64_t tr = w[0] + w[3], dt = w[0] * w[3] - w[1] * w[2];
    if (md(tr * tr - 4 * dt, p)) return "semisimple";
  }
  return p == 2 ? "unipotent_f2" : "unipotent";
}

}  // namespace oracle
