#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "moldkit/error.hpp"

namespace moldkit {

/// Which exact field a value lives in: a prime field F_p or the rationals.
class FieldSpec {
 public:
  enum class Kind { Prime, Rationals };

  /// Throws InvalidPrime unless 2 <= p < 2^31 and p is prime.
  static FieldSpec prime(std::int64_t p);
  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  std::uint32_t modulus() const { return p_; }
  /// p for F_p, 0 for Q.
  std::uint32_t characteristic() const { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Fp;

  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::int64_t n);

/// Element of F_p. Canonical representative in [0, p).
class Fp {
 public:
  Fp(std::int64_t n, std::uint32_t p) : v_(reduce(n, p)), p_(p) {}

  static Fp from_int(std::int64_t n, const FieldSpec& spec) { return Fp(n, spec.modulus()); }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  FieldSpec spec() const { return FieldSpec(FieldSpec::Kind::Prime, p_); }
  std::uint32_t characteristic() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp inv() const;
  std::string to_string() const { return std::to_string(v_); }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, raw_tag{}); }
  Fp& operator+=(const Fp& o) {
    check(o);
    std::uint32_t s = v_ + o.v_;
    v_ = s >= p_ ? s - p_ : s;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    check(o);
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

  friend bool operator==(const Fp&, const Fp&) = default;
  friend auto operator<=>(const Fp&, const Fp&) = default;

 private:
  struct raw_tag {};
  Fp(std::uint32_t v, std::uint32_t p, raw_tag) : v_(v), p_(p) {}

  static std::uint32_t reduce(std::int64_t n, std::uint32_t p) {
    std::int64_t r = n % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
  void check(const Fp& o) const {
    if (o.p_ != p_) {
      throw Error(ErrorCode::FieldMismatch,
                  "F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
    }
  }

  std::uint32_t v_;
  std::uint32_t p_;
};

/// Element of Q, always kept in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(std::int64_t num, std::int64_t den);

  static Rational from_int(std::int64_t n, const FieldSpec& spec);
  /// Accepts "a" or "a/b" with arbitrary-size integers; b must be nonzero.
  static Rational parse(const std::string& text);

  const mpq_class& value() const { return v_; }
  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::uint32_t characteristic() const { return 0; }
  bool is_zero() const { return sgn(v_) == 0; }

  Rational inv() const;
  /// Always "a/b" with b > 0 and gcd(a, b) = 1.
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this *= o.inv(); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

/// Canonical image of an integer in the field described by spec.
template <class F>
F embed_int(std::int64_t n, const FieldSpec& spec) {
  return F::from_int(n, spec);
}

template <class F>
F inv(const F& x) {
  return x.inv();
}

/// Scalar types usable as matrix entries.
template <class F>
concept ExactField = requires(const F& x, std::int64_t n, const FieldSpec& s) {
  { F::from_int(n, s) } -> std::same_as<F>;
  { x.spec() } -> std::same_as<FieldSpec>;
  { x.is_zero() } -> std::same_as<bool>;
  { x.inv() } -> std::same_as<F>;
  { x + x } -> std::same_as<F>;
  { x * x } -> std::same_as<F>;
  { x.to_string() } -> std::same_as<std::string>;
};

}  // namespace moldkit
