#include "moldkit/field.hpp"

#include <cctype>

namespace moldkit {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !moldkit::is_prime(p)) {
    throw Error(ErrorCode::InvalidPrime, std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec(Kind::Prime, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  return is_prime() ? "F_" + std::to_string(p_) : std::string("Q");
}

Fp Fp::inv() const {
  if (v_ == 0) throw Error(ErrorCode::ZeroInverse, "0 has no inverse in F_" + std::to_string(p_));
  // Extended Euclid on (v, p).
  std::int64_t r0 = p_, r1 = v_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return Fp(s0, p_);
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::ZeroInverse, "zero denominator");
  mpz_class n, d;
  n = static_cast<long>(num);
  d = static_cast<long>(den);
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::from_int(std::int64_t n, const FieldSpec& spec) {
  if (spec.is_prime()) throw Error(ErrorCode::FieldMismatch, "rational element requested for " + spec.to_string());
  return Rational(n, 1);
}

Rational Rational::parse(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto strip_plus = [](const std::string& s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };

  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
  }
  mpz_class n(strip_plus(num), 10), d(strip_plus(den), 10);
  if (d == 0) throw Error(ErrorCode::ZeroInverse, "zero denominator in '" + text + "'");
  return Rational(mpq_class(n, d));
}

Rational Rational::inv() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInverse, "0 has no inverse in Q");
  return Rational(mpq_class(1 / v_));
}

std::string Rational::to_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace moldkit
