#pragma once

#include <utility>
#include <vector>

#include "moldkit/rep.hpp"

namespace moldkit {

/// Delta(A, B) = tr(A)^2 det(B) + tr(B)^2 det(A) + tr(AB)^2 - tr(A) tr(B) tr(AB)
///               - 4 det(A) det(B).
/// Vanishes exactly when A and B generate a proper subalgebra.
template <ExactField F>
F delta2(const Mat2<F>& a, const Mat2<F>& b) {
  const F ta = trace(a), tb = trace(b), tab = trace(a * b);
  const F da = det(a), db = det(b);
  return ta * ta * db + tb * tb * da + tab * tab - ta * tb * tab - F::from_int(4, a.spec()) * da * db;
}

/// tau(A, B, C) = tr(ABC) - tr(ACB).
template <ExactField F>
F tau3(const Mat2<F>& a, const Mat2<F>& b, const Mat2<F>& c) {
  return trace(a * b * c) - trace(a * c * b);
}

/// Determinant of the 4x4 matrix whose rows are the row-major entries
/// (a11, a12, a21, a22) of the arguments, in argument order.
template <ExactField F>
F delta4(const Mat2<F>& a1, const Mat2<F>& a2, const Mat2<F>& a3, const Mat2<F>& a4) {
  DenseMatrix<F> m(4, 4, a1.spec());
  const std::array<const Mat2<F>*, 4> rows{&a1, &a2, &a3, &a4};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto v = rows[i]->vec();
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = v[j];
  }
  return determinant(m);
}

template <ExactField F>
F trace_word(const RepTuple<F>& t, const Word& w) {
  return trace(t.image(w));
}

/// Generator determinants plus traces of every strictly increasing product.
/// Trace keys are words over the (possibly augmented) generator list.
template <ExactField F>
struct InvariantVector {
  std::vector<F> dets;
  std::vector<std::pair<Word, F>> traces;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

/// Generator list used for invariants: (A_1..A_m) in monoid mode,
/// (A_1..A_m, A_1^{-1}..A_m^{-1}) in group mode, as letters.
inline std::vector<int> invariant_letters(std::size_t rank, Mode mode) {
  std::vector<int> letters;
  for (std::size_t i = 1; i <= rank; ++i) letters.push_back(static_cast<int>(i));
  if (mode == Mode::Group) {
    for (std::size_t i = 1; i <= rank; ++i) letters.push_back(-static_cast<int>(i));
  }
  return letters;
}

template <ExactField F>
InvariantVector<F> invariant_vector(const RepTuple<F>& t) {
  const auto letters = invariant_letters(t.size(), t.mode());
  const std::size_t n = letters.size();
  std::vector<Mat2<F>> images;
  for (int l : letters) images.push_back(t.letter_image(l));

  InvariantVector<F> iv;
  for (const auto& x : images) iv.dets.push_back(det(x));

  // Depth-first over increasing index sequences gives lexicographic order
  // on position lists: (1), (1,2), (1,2,3), (1,3), (2), ...
  std::vector<std::size_t> stack;
  auto visit = [&](auto&& self, std::size_t start, const Mat2<F>& prefix) -> void {
    for (std::size_t i = start; i < n; ++i) {
      stack.push_back(i);
      const Mat2<F> prod = prefix * images[i];
      Word key;
      for (auto k : stack) key.letters.push_back(letters[k]);
      iv.traces.emplace_back(std::move(key), trace(prod));
      self(self, i + 1, prod);
      stack.pop_back();
    }
  };
  visit(visit, 0, Mat2<F>::identity(t.spec()));
  return iv;
}

/// det from (tr g, tr g^2, tr g^3) when m(g) = 2 tr(g^2) - tr(g)^2 is nonzero.
template <ExactField F>
F det_from_traces(const F& t1, const F& t2, const F& t3) {
  const F m = F::from_int(2, t1.spec()) * t2 - t1 * t1;
  if (m.is_zero()) throw Error(ErrorCode::VanishingM, "2 tr(g^2) - tr(g)^2 vanishes");
  return (t1 * t3 - t2 * t2) / m;
}

/// The X in span{I, A} with prescribed tr X and tr AX. The trace pairing on
/// span{I, A} has Gram matrix [[2, tr A], [tr A, tr A^2]] of determinant m(A).
template <ExactField F>
Mat2<F> reconstruct_from_traces(const Mat2<F>& a, const F& tr_x, const F& tr_ax) {
  const F m = disc(a);
  if (m.is_zero()) throw Error(ErrorCode::VanishingM, "trace pairing on span{I, A} is degenerate");
  const F t = trace(a);
  const F t2 = trace(a * a);
  const F two = F::from_int(2, a.spec());
  const F minv = m.inv();
  const F lambda = (t2 * tr_x - t * tr_ax) * minv;
  const F mu = (two * tr_ax - t * tr_x) * minv;
  return Mat2<F>::scalar(lambda) + a * mu;
}

/// Power traces tr(A^k), k = 0..n, from tr A and det A alone.
template <ExactField F>
std::vector<F> power_traces(const F& tr, const F& dt, unsigned n) {
  std::vector<F> t{F::from_int(2, tr.spec()), tr};
  for (unsigned k = 2; k <= n; ++k) t.push_back(tr * t[k - 1] - dt * t[k - 2]);
  t.resize(n + 1, tr);
  return t;
}

/// m(A^n) = m(A) * S^2 where S = sum_k det(A)^k tr(A^{n-2k-1}), plus the
/// middle term det(A)^{(n-1)/2} when n is odd.
template <ExactField F>
F m_power_closed(const Mat2<F>& a, unsigned n) {
  if (n == 0) throw Error(ErrorCode::ValidationError, "exponent must be positive");
  const F tr = trace(a), dt = det(a);
  const auto t = power_traces(tr, dt, n);
  F s = F::from_int(0, a.spec());
  F dpow = F::from_int(1, a.spec());
  const unsigned terms = n / 2;  // k = 0 .. (n-3)/2 for odd n, 0 .. (n-2)/2 for even n
  for (unsigned k = 0; k < terms; ++k) {
    s += dpow * t[n - 2 * k - 1];
    dpow *= dt;
  }
  if (n % 2 == 1) s += dpow;
  return disc(a) * s * s;
}

}  // namespace moldkit
