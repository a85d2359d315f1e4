#pragma once

#include <array>
#include <string>
#include <vector>

#include "moldkit/field.hpp"
#include "moldkit/linalg.hpp"

namespace moldkit {

/// 2x2 matrix [[a11, a12], [a21, a22]] over an exact field.
template <ExactField F>
struct Mat2 {
  F a11, a12, a21, a22;

  static Mat2 identity(const FieldSpec& s) { return scalar(F::from_int(1, s)); }
  static Mat2 zero(const FieldSpec& s) { return scalar(F::from_int(0, s)); }
  static Mat2 scalar(const F& c) {
    const F z = c - c;
    return {c, z, z, c};
  }
  static Mat2 from_ints(const FieldSpec& s, std::int64_t a, std::int64_t b, std::int64_t c,
                        std::int64_t d) {
    return {F::from_int(a, s), F::from_int(b, s), F::from_int(c, s), F::from_int(d, s)};
  }
  /// Row-major entries (a11, a12, a21, a22).
  static Mat2 from_vec(const std::array<F, 4>& v) { return {v[0], v[1], v[2], v[3]}; }

  FieldSpec spec() const { return a11.spec(); }
  std::array<F, 4> vec() const { return {a11, a12, a21, a22}; }

  Mat2& operator+=(const Mat2& o) {
    a11 += o.a11; a12 += o.a12; a21 += o.a21; a22 += o.a22;
    return *this;
  }
  Mat2& operator-=(const Mat2& o) {
    a11 -= o.a11; a12 -= o.a12; a21 -= o.a21; a22 -= o.a22;
    return *this;
  }
  Mat2& operator*=(const F& c) {
    a11 *= c; a12 *= c; a21 *= c; a22 *= c;
    return *this;
  }

  friend Mat2 operator+(Mat2 x, const Mat2& y) { return x += y; }
  friend Mat2 operator-(Mat2 x, const Mat2& y) { return x -= y; }
  friend Mat2 operator-(const Mat2& x) { return {-x.a11, -x.a12, -x.a21, -x.a22}; }
  friend Mat2 operator*(Mat2 x, const F& c) { return x *= c; }
  friend Mat2 operator*(const F& c, Mat2 x) { return x *= c; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

template <ExactField F>
F trace(const Mat2<F>& x) { return x.a11 + x.a22; }

template <ExactField F>
F det(const Mat2<F>& x) { return x.a11 * x.a22 - x.a12 * x.a21; }

/// m(X) = tr(X)^2 - 4 det(X), the discriminant of the characteristic polynomial.
template <ExactField F>
F disc(const Mat2<F>& x) {
  const F t = trace(x);
  return t * t - F::from_int(4, x.spec()) * det(x);
}

template <ExactField F>
bool is_scalar(const Mat2<F>& x) {
  return x.a12.is_zero() && x.a21.is_zero() && x.a11 == x.a22;
}

template <ExactField F>
Mat2<F> adjugate(const Mat2<F>& x) { return {x.a22, -x.a12, -x.a21, x.a11}; }

/// Throws SingularP when det(x) = 0.
template <ExactField F>
Mat2<F> inverse(const Mat2<F>& x) {
  const F d = det(x);
  if (d.is_zero()) throw Error(ErrorCode::SingularP, "matrix is not invertible");
  return adjugate(x) * d.inv();
}

template <ExactField F>
Mat2<F> power(const Mat2<F>& x, unsigned n) {
  Mat2<F> acc = Mat2<F>::identity(x.spec());
  for (unsigned i = 0; i < n; ++i) acc = acc * x;
  return acc;
}

template <ExactField F>
std::string to_string(const Mat2<F>& x) {
  return "[[" + x.a11.to_string() + "," + x.a12.to_string() + "],[" + x.a21.to_string() + "," +
         x.a22.to_string() + "]]";
}

template <ExactField F>
struct CharData {
  F trace, det, m;
};

template <ExactField F>
CharData<F> char_data(const Mat2<F>& x) {
  return {trace(x), det(x), disc(x)};
}

/// Trace-free part X - (tr X / 2) I. Undefined in characteristic 2.
template <ExactField F>
Mat2<F> eta(const Mat2<F>& x) {
  if (x.spec().characteristic() == 2) throw Error(ErrorCode::CharTwo, "eta needs 2 to be invertible");
  const F half_trace = trace(x) * F::from_int(2, x.spec()).inv();
  return x - Mat2<F>::scalar(half_trace);
}

/// P^{-1} A P.
template <ExactField F>
Mat2<F> conjugate(const Mat2<F>& p, const Mat2<F>& a) {
  return inverse(p) * a * p;
}

enum class CompanionBranch { B, C, AMinusD };

inline std::string to_string(CompanionBranch b) {
  switch (b) {
    case CompanionBranch::B: return "b";
    case CompanionBranch::C: return "c";
    case CompanionBranch::AMinusD: return "a-d";
  }
  return "?";
}

template <ExactField F>
struct CompanionCert {
  Mat2<F> P;
  Mat2<F> companion;  // [[0, -det], [1, tr]]
  CompanionBranch branch;
};

/// Finds P with P^{-1} A P = [[0, -det A], [1, tr A]] using a cyclic vector v:
/// P has columns v and A v. The vector is e2 when a12 != 0, e1 when a21 != 0,
/// and e1 + e2 when A is diagonal with distinct entries.
template <ExactField F>
CompanionCert<F> companion_normalize(const Mat2<F>& a) {
  if (is_scalar(a)) throw Error(ErrorCode::ScalarInput, "scalar matrix has no cyclic vector");
  const FieldSpec s = a.spec();
  const F zero = F::from_int(0, s), one = F::from_int(1, s);

  CompanionCert<F> cert{Mat2<F>::identity(s), {zero, -det(a), one, trace(a)}, CompanionBranch::B};
  if (!a.a12.is_zero()) {
    cert.P = {zero, a.a12, one, a.a22};
    cert.branch = CompanionBranch::B;
  } else if (!a.a21.is_zero()) {
    cert.P = {one, a.a11, zero, a.a21};
    cert.branch = CompanionBranch::C;
  } else {
    cert.P = {one, a.a11, one, a.a22};
    cert.branch = CompanionBranch::AMinusD;
  }
  return cert;
}

/// Matrix of X -> A X - X A acting on row-major vectorizations.
template <ExactField F>
DenseMatrix<F> commutator_map(const Mat2<F>& a) {
  const FieldSpec s = a.spec();
  DenseMatrix<F> m(4, 4, s);
  for (std::size_t k = 0; k < 4; ++k) {
    std::array<F, 4> e{F::from_int(0, s), F::from_int(0, s), F::from_int(0, s), F::from_int(0, s)};
    e[k] = F::from_int(1, s);
    const Mat2<F> x = Mat2<F>::from_vec(e);
    const auto col = (a * x - x * a).vec();
    for (std::size_t i = 0; i < 4; ++i) m(i, k) = col[i];
  }
  return m;
}

/// Basis of the centralizer {Q : AQ = QA} obtained by solving the linear system.
template <ExactField F>
std::vector<Mat2<F>> centralizer_by_solving(const Mat2<F>& a) {
  std::vector<Mat2<F>> out;
  for (const auto& v : kernel(commutator_map(a))) out.push_back(Mat2<F>::from_vec({v[0], v[1], v[2], v[3]}));
  return out;
}

/// {I, A}: for non-scalar A every matrix commuting with A is a combination of these.
template <ExactField F>
std::vector<Mat2<F>> commutant_basis(const Mat2<F>& a) {
  if (is_scalar(a)) throw Error(ErrorCode::ScalarInput, "commutant of a scalar is everything");
  return {Mat2<F>::identity(a.spec()), a};
}

/// Whether Y = AX - XA has a solution X, decided by a rank comparison on the
/// commutator map. Agrees with tr(Y) = tr(AY) = 0 for non-scalar A.
template <ExactField F>
bool commutator_image_test(const Mat2<F>& a, const Mat2<F>& y) {
  if (is_scalar(a)) throw Error(ErrorCode::ScalarInput, "commutator with a scalar is zero");
  const DenseMatrix<F> m = commutator_map(a);
  DenseMatrix<F> aug(4, 5, a.spec());
  const auto yv = y.vec();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) aug(i, j) = m(i, j);
    aug(i, 4) = yv[i];
  }
  return rank(m) == rank(aug);
}

}  // namespace moldkit
