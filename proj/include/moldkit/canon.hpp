#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "moldkit/mold.hpp"

namespace moldkit {

/// Verifies P^{-1} t1_i P = t2_i for every generator.
template <ExactField F>
bool is_conjugator(const Mat2<F>& p, const RepTuple<F>& t1, const RepTuple<F>& t2) {
  if (det(p).is_zero() || t1.size() != t2.size()) return false;
  const Mat2<F> pinv = inverse(p);
  for (std::size_t i = 0; i < t1.size(); ++i) {
    if (pinv * t1.gen(i) * p != t2.gen(i)) return false;
  }
  return true;
}

/// Basis of the intertwiner space {P : P t2_i = t1_i P for all i}.
template <ExactField F>
std::vector<Mat2<F>> intertwiners(const RepTuple<F>& t1, const RepTuple<F>& t2) {
  const FieldSpec s = t1.spec();
  DenseMatrix<F> sys(4 * t1.size(), 4, s);
  for (std::size_t k = 0; k < 4; ++k) {
    std::array<F, 4> e{F::from_int(0, s), F::from_int(0, s), F::from_int(0, s), F::from_int(0, s)};
    e[k] = F::from_int(1, s);
    const Mat2<F> p = Mat2<F>::from_vec(e);
    for (std::size_t i = 0; i < t1.size(); ++i) {
      const auto col = (p * t2.gen(i) - t1.gen(i) * p).vec();
      for (std::size_t r = 0; r < 4; ++r) sys(4 * i + r, k) = col[r];
    }
  }
  std::vector<Mat2<F>> out;
  for (const auto& v : kernel(sys)) out.push_back(Mat2<F>::from_vec({v[0], v[1], v[2], v[3]}));
  return out;
}

/// Invertible P with P^{-1} t1 P = t2, or nothing. det restricted to the
/// intertwiner space is a quadratic form Q; Q vanishes identically iff it
/// vanishes on every basis vector and every pairwise sum, in any
/// characteristic, so those candidates decide the question.
template <ExactField F>
std::optional<Mat2<F>> general_conjugator(const RepTuple<F>& t1, const RepTuple<F>& t2) {
  if (t1.size() != t2.size() || t1.mode() != t2.mode()) return std::nullopt;
  const auto basis = intertwiners(t1, t2);
  std::vector<Mat2<F>> candidates = basis;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) candidates.push_back(basis[i] + basis[j]);
  }
  for (const auto& p : candidates) {
    if (det(p).is_zero()) continue;
    if (!is_conjugator(p, t1, t2)) throw Error(ErrorCode::Inconsistent, "intertwiner failed verification");
    return p;
  }
  return std::nullopt;
}

template <ExactField F>
void require_semisimple(const RepTuple<F>& t, const char* which) {
  if (classify(t) != Mold::SemiSimple) {
    throw Error(ErrorCode::NotSemiSimple, std::string(which) + " tuple is not semi-simple");
  }
}

/// Trace criterion: semi-simple tuples are conjugate iff their invariant
/// vectors coincide.
template <ExactField F>
bool ss_equivalent(const RepTuple<F>& t1, const RepTuple<F>& t2) {
  require_semisimple(t1, "first");
  require_semisimple(t2, "second");
  if (t1.size() != t2.size() || t1.mode() != t2.mode()) return false;
  return invariant_vector(t1) == invariant_vector(t2);
}

/// First word with m != 0 among single generators, then among strictly
/// increasing generator products.
template <ExactField F>
std::optional<Word> split_witness(const RepTuple<F>& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!disc(t.gen(i)).is_zero()) return Word::letter(static_cast<int>(i + 1));
  }
  const std::size_t n = t.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Word w;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) w.letters.push_back(static_cast<int>(i + 1));
    }
    if (w.size() > 1 && !disc(t.image(w)).is_zero()) return w;
  }
  return std::nullopt;
}

/// Conjugator built from companion normal forms of a split element of each
/// tuple: if Q1^{-1} A Q1 = Q2^{-1} B Q2 then P = Q1 Q2^{-1} sends A to B,
/// and the rest of each tuple lies in span{I, A} resp. span{I, B}.
template <ExactField F>
std::optional<Mat2<F>> ss_conjugator(const RepTuple<F>& t1, const RepTuple<F>& t2) {
  require_semisimple(t1, "first");
  require_semisimple(t2, "second");
  if (t1.size() != t2.size() || t1.mode() != t2.mode()) return std::nullopt;
  if (invariant_vector(t1) != invariant_vector(t2)) return std::nullopt;
  const auto w = split_witness(t1);
  if (!w) throw Error(ErrorCode::NoSplitGenerator, "no increasing product with m != 0");
  const auto c1 = companion_normalize(t1.image(*w));
  const auto c2 = companion_normalize(t2.image(*w));
  if (c1.companion != c2.companion) return std::nullopt;
  const Mat2<F> p = c1.P * inverse(c2.P);
  if (!is_conjugator(p, t1, t2)) {
    throw Error(ErrorCode::Inconsistent, "companion conjugator failed verification");
  }
  return p;
}

namespace detail {

/// (a, b) with x = a I + b z for non-scalar z; NotInMold otherwise.
template <ExactField F>
std::pair<F, F> coefficients_in(const Mat2<F>& x, const Mat2<F>& z) {
  F b = x.a11 - x.a11;
  if (!z.a12.is_zero()) {
    b = x.a12 / z.a12;
  } else if (!z.a21.is_zero()) {
    b = x.a21 / z.a21;
  } else if (!(z.a11 - z.a22).is_zero()) {
    b = (x.a11 - x.a22) / (z.a11 - z.a22);
  } else {
    throw Error(ErrorCode::ScalarInput, "basis element is scalar");
  }
  const F a = x.a11 - b * z.a11;
  if (Mat2<F>::scalar(a) + z * b != x) throw Error(ErrorCode::NotInMold, "matrix not in span{I, Z}");
  return {a, b};
}

}  // namespace detail

/// Character r = tr/2 and derivation d of a unipotent-mold representation:
/// rho(w) = r(w) I + d(w) eta(A_alpha). Values on words come from the
/// multiplication law r(xy) = r(x) r(y), d(xy) = r(x) d(y) + d(x) r(y).
template <ExactField F>
class CharDeriv {
 public:
  CharDeriv(std::size_t alpha, Mat2<F> eta_mat, std::vector<F> gen_r, std::vector<F> gen_d, Mode mode)
      : alpha_(alpha), eta_(std::move(eta_mat)), r_(std::move(gen_r)), d_(std::move(gen_d)), mode_(mode) {}

  /// 1-based generator index used as base point.
  std::size_t alpha_index() const { return alpha_; }
  const Mat2<F>& eta_mat() const { return eta_; }
  Mode mode() const { return mode_; }
  std::size_t rank() const { return r_.size(); }

  F r(const Word& w) const { return eval(w).first; }
  F d(const Word& w) const { return eval(w).second; }

  std::pair<F, F> eval(const Word& w) const {
    const FieldSpec s = eta_.spec();
    std::pair<F, F> acc{F::from_int(1, s), F::from_int(0, s)};
    for (int l : w.letters) {
      const auto [r2, d2] = letter(l);
      acc = {acc.first * r2, acc.first * d2 + acc.second * r2};
    }
    return acc;
  }

 private:
  std::pair<F, F> letter(int l) const {
    const auto idx = static_cast<std::size_t>(l < 0 ? -l : l);
    if (l == 0 || idx > r_.size() || (l < 0 && mode_ != Mode::Group)) {
      throw Error(ErrorCode::InvalidWord, "letter " + std::to_string(l) + " out of range");
    }
    const F& r = r_[idx - 1];
    const F& d = d_[idx - 1];
    if (l > 0) return {r, d};
    const F rinv = r.inv();
    return {rinv, -d * rinv * rinv};
  }

  std::size_t alpha_;
  Mat2<F> eta_;
  std::vector<F> r_, d_;
  Mode mode_;
};

template <ExactField F>
CharDeriv<F> unipotent_decompose(const RepTuple<F>& t) {
  if (t.spec().characteristic() == 2) throw Error(ErrorCode::CharTwo, "use the (a, b)-chart in characteristic 2");
  if (classify(t) != Mold::Unipotent) throw Error(ErrorCode::NotUnipotent, "tuple is not unipotent");
  std::size_t alpha = 0;
  while (alpha < t.size() && is_scalar(t.gen(alpha))) ++alpha;
  const Mat2<F> e = eta(t.gen(alpha));
  const F half = F::from_int(2, t.spec()).inv();
  std::vector<F> rs, ds;
  for (const auto& g : t.gens()) {
    rs.push_back(trace(g) * half);
    ds.push_back(detail::coefficients_in(eta(g), e).second);
  }
  return CharDeriv<F>(alpha + 1, e, std::move(rs), std::move(ds), t.mode());
}

template <ExactField F>
Mat2<F> unipotent_reconstruct(const CharDeriv<F>& cd, const Word& w) {
  const auto [r, d] = cd.eval(w);
  return Mat2<F>::scalar(r) + cd.eta_mat() * d;
}

/// (a, b)-coefficients of a characteristic-2 unipotent representation with
/// respect to Z = rho(base): rho(w) = a(w) I + b(w) Z, d(w) = det rho(w).
template <ExactField F>
class ABChart {
 public:
  ABChart(Word base, Mat2<F> z, std::vector<F> gen_a, std::vector<F> gen_b, std::vector<F> gen_d, Mode mode)
      : base_(std::move(base)), z_(std::move(z)), a_(std::move(gen_a)), b_(std::move(gen_b)),
        d_(std::move(gen_d)), mode_(mode) {}

  const Word& base() const { return base_; }
  const Mat2<F>& z() const { return z_; }
  Mode mode() const { return mode_; }
  std::size_t rank() const { return a_.size(); }
  const std::vector<F>& gen_a() const { return a_; }
  const std::vector<F>& gen_b() const { return b_; }

  F a(const Word& w) const { return eval(w).a; }
  F b(const Word& w) const { return eval(w).b; }
  F d(const Word& w) const { return eval(w).d; }

  struct Value {
    F a, b, d;
  };

  Value eval(const Word& w) const {
    const FieldSpec s = z_.spec();
    const F dz = det(z_);
    Value acc{F::from_int(1, s), F::from_int(0, s), F::from_int(1, s)};
    for (int l : w.letters) {
      const Value x = letter(l);
      acc = {acc.a * x.a + acc.b * x.b * dz, acc.a * x.b + acc.b * x.a, acc.d * x.d};
    }
    return acc;
  }

  friend bool operator==(const ABChart&, const ABChart&) = default;

 private:
  Value letter(int l) const {
    const auto idx = static_cast<std::size_t>(l < 0 ? -l : l);
    if (l == 0 || idx > a_.size() || (l < 0 && mode_ != Mode::Group)) {
      throw Error(ErrorCode::InvalidWord, "letter " + std::to_string(l) + " out of range");
    }
    const F& a = a_[idx - 1];
    const F& b = b_[idx - 1];
    const F& d = d_[idx - 1];
    if (l > 0) return {a, b, d};
    // (aI + bZ)^{-1} = (aI - bZ) / d since Z^2 = det(Z) I.
    const F dinv = d.inv();
    return {a * dinv, -b * dinv, dinv};
  }

  Word base_;
  Mat2<F> z_;
  std::vector<F> a_, b_, d_;
  Mode mode_;
};

template <ExactField F>
ABChart<F> uf2_decompose(const RepTuple<F>& t) {
  if (t.spec().characteristic() != 2) throw Error(ErrorCode::CharNotTwo, "(a, b)-charts live in characteristic 2");
  if (classify(t) != Mold::UnipotentF2) throw Error(ErrorCode::NotUnipotentF2, "tuple is not unipotent over F_2");
  std::size_t alpha = 0;
  while (alpha < t.size() && is_scalar(t.gen(alpha))) ++alpha;
  const Mat2<F>& z = t.gen(alpha);
  std::vector<F> as, bs, ds;
  for (const auto& g : t.gens()) {
    const auto [a, b] = detail::coefficients_in(g, z);
    as.push_back(a);
    bs.push_back(b);
    ds.push_back(det(g));
  }
  return ABChart<F>(Word::letter(static_cast<int>(alpha + 1)), z, std::move(as), std::move(bs), std::move(ds),
                    t.mode());
}

template <ExactField F>
Mat2<F> uf2_reconstruct(const ABChart<F>& ch, const Word& w) {
  const auto v = ch.eval(w);
  return Mat2<F>::scalar(v.a) + ch.z() * v.b;
}

/// Re-bases a chart at beta on the overlap b_alpha(beta) != 0:
///   b_beta(g) = b_alpha(g) b_beta(alpha),  b_beta(alpha) = b_alpha(beta)^{-1}
///   a_beta(g) = a_alpha(g) + a_beta(alpha) b_alpha(g)
/// with (a_beta(alpha), b_beta(alpha)) read off by expressing the old Z in
/// the basis {I, rho(beta)}.
template <ExactField F>
ABChart<F> uf2_transition(const ABChart<F>& ch, const Word& beta) {
  const auto at_beta = ch.eval(beta);
  if (at_beta.b.is_zero()) throw Error(ErrorCode::ChartOverlapEmpty, "b(beta) = 0");
  const Mat2<F> z_beta = uf2_reconstruct(ch, beta);
  const auto [a_beta_alpha, b_beta_alpha] = detail::coefficients_in(ch.z(), z_beta);
  if (b_beta_alpha * at_beta.b != F::from_int(1, z_beta.spec())) {
    throw Error(ErrorCode::Inconsistent, "b_beta(alpha) is not the inverse of b_alpha(beta)");
  }
  std::vector<F> as, bs, ds;
  for (std::size_t i = 0; i < ch.rank(); ++i) {
    const F& a = ch.gen_a()[i];
    const F& b = ch.gen_b()[i];
    as.push_back(a + a_beta_alpha * b);
    bs.push_back(b * b_beta_alpha);
    ds.push_back(ch.d(Word::letter(static_cast<int>(i + 1))));
  }
  return ABChart<F>(beta, z_beta, std::move(as), std::move(bs), std::move(ds), ch.mode());
}

/// The scalars c_i with A_i = c_i I.
template <ExactField F>
std::vector<F> scalar_decompose(const RepTuple<F>& t) {
  if (classify(t) != Mold::Scalar) throw Error(ErrorCode::NotScalar, "tuple is not scalar");
  std::vector<F> out;
  for (const auto& g : t.gens()) out.push_back(g.a11);
  return out;
}

}  // namespace moldkit
