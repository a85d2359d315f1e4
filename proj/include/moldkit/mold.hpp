#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moldkit/invariants.hpp"

namespace moldkit {

enum class Mold { Air, Borel, SemiSimple, Unipotent, UnipotentF2, Scalar };

inline constexpr std::array<Mold, 6> kAllMolds{Mold::Air,       Mold::Borel,       Mold::SemiSimple,
                                               Mold::Unipotent, Mold::UnipotentF2, Mold::Scalar};

inline std::string to_string(Mold m) {
  switch (m) {
    case Mold::Air: return "air";
    case Mold::Borel: return "borel";
    case Mold::SemiSimple: return "semisimple";
    case Mold::Unipotent: return "unipotent";
    case Mold::UnipotentF2: return "unipotent_f2";
    case Mold::Scalar: return "scalar";
  }
  return "?";
}

/// Echelonized basis of a unital subalgebra of 2x2 matrices.
template <ExactField F>
struct SubalgebraBasis {
  std::vector<Mat2<F>> basis;
  std::size_t dim() const { return basis.size(); }
};

namespace detail {

/// Reduced echelon basis of the span of the given matrices.
template <ExactField F>
std::vector<Mat2<F>> echelon_span(const std::vector<Mat2<F>>& mats, const FieldSpec& s) {
  DenseMatrix<F> m(mats.size(), 4, s);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const auto v = mats[i].vec();
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = v[j];
  }
  const auto pivots = rref(m);
  std::vector<Mat2<F>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back({m(r, 0), m(r, 1), m(r, 2), m(r, 3)});
  return out;
}

}  // namespace detail

/// Unital algebra generated by the generator images: iterate
/// span <- span + span * span from {I} + gens until the dimension is stable.
template <ExactField F>
SubalgebraBasis<F> span_closure(const RepTuple<F>& t) {
  const FieldSpec s = t.spec();
  std::vector<Mat2<F>> seed{Mat2<F>::identity(s)};
  seed.insert(seed.end(), t.gens().begin(), t.gens().end());
  auto basis = detail::echelon_span(seed, s);
  while (basis.size() < 4) {
    std::vector<Mat2<F>> grown = basis;
    for (const auto& x : basis) {
      for (const auto& y : basis) grown.push_back(x * y);
    }
    auto next = detail::echelon_span(grown, s);
    if (next.size() == basis.size()) break;
    basis = std::move(next);
  }
  return {std::move(basis)};
}

template <ExactField F>
bool rank_le2_test(const RepTuple<F>& t) {
  return span_closure(t).dim() <= 2;
}

/// The defining minor condition: every 3x3 minor of the 4x3 matrix
/// [vec g1 | vec g2 | vec g3] vanishes for every triple of word images.
/// Words of length <= 3 already span the generated algebra.
template <ExactField F>
bool rank_le2_by_minors(const RepTuple<F>& t) {
  std::vector<std::array<F, 4>> images;
  for (const auto& w : words_up_to(t.size(), Mode::Monoid, 3)) {
    auto v = t.image(w).vec();
    bool seen = false;
    for (const auto& u : images) seen = seen || u == v;
    if (!seen) images.push_back(v);
  }
  const FieldSpec s = t.spec();
  const std::size_t n = images.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t drop = 0; drop < 4; ++drop) {
          DenseMatrix<F> m(3, 3, s);
          std::size_t r = 0;
          for (std::size_t row = 0; row < 4; ++row) {
            if (row == drop) continue;
            m(r, 0) = images[i][row];
            m(r, 1) = images[j][row];
            m(r, 2) = images[k][row];
            ++r;
          }
          if (!determinant(m).is_zero()) return false;
        }
      }
    }
  }
  return true;
}

/// Why a tuple is absolutely irreducible: a pair with Delta != 0, a triple
/// with tau != 0, or (group criterion) a triple with Delta(A_i A_j, A_k) != 0.
struct AirWitness {
  enum class Kind { Delta, Tau, DeltaProduct };
  Kind kind;
  std::vector<std::size_t> indices;  // 1-based generator indices
};

inline std::string to_string(AirWitness::Kind k) {
  switch (k) {
    case AirWitness::Kind::Delta: return "delta";
    case AirWitness::Kind::Tau: return "tau";
    case AirWitness::Kind::DeltaProduct: return "delta_product";
  }
  return "?";
}

/// First pair i<j with Delta != 0, else first triple i<j<k with tau != 0.
template <ExactField F>
std::optional<AirWitness> air_witness_tau(const RepTuple<F>& t) {
  const auto& g = t.gens();
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!delta2(g[i], g[j]).is_zero()) return AirWitness{AirWitness::Kind::Delta, {i + 1, j + 1}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!tau3(g[i], g[j], g[k]).is_zero()) return AirWitness{AirWitness::Kind::Tau, {i + 1, j + 1, k + 1}};
      }
    }
  }
  return std::nullopt;
}

/// Group-only variant: pairs with Delta != 0, else triples with
/// Delta(A_i A_j, A_k) != 0.
template <ExactField F>
std::optional<AirWitness> air_witness_product(const RepTuple<F>& t) {
  const auto& g = t.gens();
  const std::size_t n = g.size();
  for (const auto& x : g) {
    if (det(x).is_zero()) throw Error(ErrorCode::NonInvertibleGenerator, "product criterion needs invertible generators");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!delta2(g[i], g[j]).is_zero()) return AirWitness{AirWitness::Kind::Delta, {i + 1, j + 1}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!delta2(g[i] * g[j], g[k]).is_zero()) {
          return AirWitness{AirWitness::Kind::DeltaProduct, {i + 1, j + 1, k + 1}};
        }
      }
    }
  }
  return std::nullopt;
}

/// Discriminant test for absolute irreducibility. In group mode both
/// criteria are evaluated and must agree.
template <ExactField F>
bool air_by_discriminants(const RepTuple<F>& t) {
  const bool by_tau = air_witness_tau(t).has_value();
  if (t.mode() == Mode::Group) {
    const bool by_product = air_witness_product(t).has_value();
    if (by_tau != by_product) throw Error(ErrorCode::Inconsistent, "tau and Delta(AB, C) air criteria disagree");
  }
  return by_tau;
}

struct Classification {
  Mold label;
  std::size_t dim;
  std::optional<AirWitness> witness;  // set for Air
};

template <ExactField F>
Mold label_from_basis(const SubalgebraBasis<F>& alg, const FieldSpec& s) {
  switch (alg.dim()) {
    case 4: return Mold::Air;
    case 3: return Mold::Borel;
    case 1: return Mold::Scalar;
    default: break;
  }
  // dim 2: the algebra is span{I, X}; m(aI + bX) = b^2 m(X), so some basis
  // element has m != 0 unless m vanishes on the whole algebra. In
  // characteristic 2, m = tr^2.
  for (const auto& x : alg.basis) {
    if (!disc(x).is_zero()) return Mold::SemiSimple;
  }
  return s.characteristic() == 2 ? Mold::UnipotentF2 : Mold::Unipotent;
}

template <ExactField F>
Mold classify(const RepTuple<F>& t) {
  return label_from_basis(span_closure(t), t.spec());
}

template <ExactField F>
Classification classify_with_witness(const RepTuple<F>& t) {
  const auto alg = span_closure(t);
  Classification c{label_from_basis(alg, t.spec()), alg.dim(), std::nullopt};
  if (c.label == Mold::Air) c.witness = air_witness_tau(t);
  return c;
}

/// For a tuple whose algebra is proper and non-commutative (dim 3), a
/// nonzero vector spanning a common invariant line. The line is the kernel
/// of the radical of the trace form, which is a nonzero nilpotent there.
template <ExactField F>
std::optional<std::array<F, 2>> invariant_line(const RepTuple<F>& t) {
  const auto alg = span_closure(t);
  if (alg.dim() != 3) return std::nullopt;
  const FieldSpec s = t.spec();
  DenseMatrix<F> gram(3, 3, s);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) gram(i, j) = trace(alg.basis[i] * alg.basis[j]);
  }
  const auto rad = kernel(gram);
  if (rad.empty()) return std::nullopt;
  Mat2<F> n = Mat2<F>::zero(s);
  for (std::size_t i = 0; i < 3; ++i) n += alg.basis[i] * rad.front()[i];
  // n is nilpotent of rank 1; its kernel is spanned by (-a12, a11) or (-a22, a21).
  std::array<F, 2> v{-n.a12, n.a11};
  if (v[0].is_zero() && v[1].is_zero()) v = {-n.a22, n.a21};
  if (v[0].is_zero() && v[1].is_zero()) return std::nullopt;
  for (const auto& g : t.gens()) {
    const F x = g.a11 * v[0] + g.a12 * v[1];
    const F y = g.a21 * v[0] + g.a22 * v[1];
    if (!(x * v[1] - y * v[0]).is_zero()) return std::nullopt;
  }
  return v;
}

}  // namespace moldkit
