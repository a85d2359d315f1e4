#include "test_support.hpp"

using namespace moldkit;
using namespace moldkit::testing;

TEST_CASE("inverse") {
  CHECK(inv(fp(5, 2)) == fp(5, 3));
  CHECK(inv(rq(2)) == rq(1, 2));
  require_code(ErrorCode::ZeroInverse, [] { (void)inv(fp(3, 0)); });
  require_code(ErrorCode::ZeroInverse, [] { (void)inv(rq(0)); });
  for (std::int64_t p : {2, 3, 5, 7, 65521}) {
    for (std::int64_t x = 1; x < std::min<std::int64_t>(p, 200); ++x) CHECK(inv(fp(p, x)) * fp(p, x) == fp(p, 1));
  }
}

TEST_CASE("embed_int") {
  CHECK(embed_int<Fp>(7, Fq(5)).value() == 2);
  CHECK(embed_int<Fp>(-1, Fq(2)).value() == 1);
  CHECK(embed_int<Fp>(5, Fq(5)).is_zero());
  CHECK(embed_int<Rational>(3, QQ()).to_string() == "3/1");
  CHECK(embed_int<Fp>(-7, Fq(5)).value() == 3);
}

TEST_CASE("field spec") {
  CHECK(Fq(2).characteristic() == 2);
  CHECK(QQ().characteristic() == 0);
  CHECK(Fq(2147483647).modulus() == 2147483647u);
  require_code(ErrorCode::InvalidPrime, [] { (void)FieldSpec::prime(4); });
  require_code(ErrorCode::InvalidPrime, [] { (void)FieldSpec::prime(1); });
  require_code(ErrorCode::InvalidPrime, [] { (void)FieldSpec::prime(std::int64_t{1} << 31); });
  CHECK(Fq(7).to_string() == "F_7");
  CHECK(QQ().to_string() == "Q");
}

TEST_CASE("specs never mix silently") {
  require_code(ErrorCode::FieldMismatch, [] { (void)(fp(3, 1) + fp(5, 1)); });
  require_code(ErrorCode::FieldMismatch, [] { (void)(fp(3, 1) * fp(5, 1)); });
  require_code(ErrorCode::FieldMismatch, [] { (void)embed_int<Rational>(1, Fq(3)); });
}

TEST_CASE("rational canonical form and text encoding") {
  CHECK(Rational::parse("6/-4").to_string() == "-3/2");
  CHECK(Rational::parse("-6/4") == Rational::parse("3/-2"));
  CHECK(Rational::parse("0/7").to_string() == "0/1");
  CHECK(Rational::parse("123456789012345678901234567890/10").to_string() == "12345678901234567890123456789/1");
  require_code(ErrorCode::ParseError, [] { (void)Rational::parse("1.5"); });
  require_code(ErrorCode::ParseError, [] { (void)Rational::parse("1/"); });
  require_code(ErrorCode::ZeroInverse, [] { (void)Rational::parse("1/0"); });
}

TEST_CASE("field axioms on random triples") {
  Rng rng;
  auto axioms = [](const auto& a, const auto& b, const auto& c) {
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a + b == b);
    if (!a.is_zero()) CHECK(a * a.inv() * b == b);
  };
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int i = 0; i < 300; ++i) axioms(rng.fp_elem(p), rng.fp_elem(p), rng.fp_elem(p));
  }
  for (int i = 0; i < 300; ++i) axioms(rng.q_elem(), rng.q_elem(), rng.q_elem());
}

TEST_CASE("equal elements have identical representations") {
  Rng rng;
  for (int i = 0; i < 200; ++i) {
    const Rational a = rng.q_elem();
    const Rational b = Rational::parse(a.to_string());
    CHECK(a == b);
    CHECK(a.to_string() == b.to_string());
    const auto k = rng.uniform(-1000, 1000);
    CHECK(Fp(k, 7).value() == Fp(k + 7 * 13, 7).value());
  }
}
