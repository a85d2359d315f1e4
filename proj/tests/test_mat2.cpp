#include "test_support.hpp"

using namespace moldkit;
using namespace moldkit::testing;

TEST_CASE("char_data") {
  const auto cd = char_data(mp(7, 0, -3, 1, 5));  // [[0,-D],[1,T]] with D=3, T=5
  CHECK(cd.trace == fp(7, 5));
  CHECK(cd.det == fp(7, 3));
  CHECK(cd.m == fp(7, 25 - 12));

  const auto j = char_data(mq(1, 1, 0, 1));
  CHECK(j.trace == rq(2));
  CHECK(j.det == rq(1));
  CHECK(j.m == rq(0));

  const auto d = char_data(mq(1, 0, 0, 2));
  CHECK(d.trace == rq(3));
  CHECK(d.det == rq(2));
  CHECK(d.m == rq(1));
}

TEST_CASE("m = 2 tr(A^2) - tr(A)^2") {
  for (std::int64_t p : {2, 3}) {
    for (const auto& a : all_matrices(p)) {
      CHECK(disc(a) == fp(p, 2) * trace(a * a) - trace(a) * trace(a));
    }
  }
  Rng rng;
  for (int i = 0; i < 200; ++i) {
    const auto a = rng.q_mat();
    CHECK(disc(a) == rq(2) * trace(a * a) - trace(a) * trace(a));
  }
}

TEST_CASE("eta") {
  CHECK(eta(mq(1, 1, 0, 1)) == mq(0, 1, 0, 0));
  CHECK(eta(Mat2<Rational>::scalar(rq(7, 3))) == Mat2<Rational>::zero(QQ()));
  require_code(ErrorCode::CharTwo, [] { (void)eta(mp(2, 1, 1, 0, 1)); });

  for (const auto& a : all_matrices(3)) {
    const auto e = eta(a);
    CHECK(trace(e).is_zero());
    if (disc(a).is_zero()) CHECK(e * e == Mat2<Fp>::zero(Fq(3)));
  }
}

TEST_CASE("companion_normalize") {
  const auto c1 = companion_normalize(mq(1, 1, 0, 1));
  CHECK(c1.P == mq(0, 1, 1, 1));
  CHECK(c1.companion == mq(0, -1, 1, 2));
  CHECK(c1.branch == CompanionBranch::B);

  const auto c2 = companion_normalize(mq(0, 0, 1, 3));
  CHECK(c2.branch == CompanionBranch::C);
  CHECK(c2.P == Mat2<Rational>::identity(QQ()));
  CHECK(c2.companion == mq(0, 0, 1, 3));

  const auto c3 = companion_normalize(mq(1, 0, 0, 2));
  CHECK(c3.branch == CompanionBranch::AMinusD);

  require_code(ErrorCode::ScalarInput, [] { (void)companion_normalize(Mat2<Rational>::scalar(rq(2))); });
}

TEST_CASE("companion round trip, exhaustive over F_2 and F_3, random over Q") {
  auto round_trip = [](const auto& a) {
    const auto c = companion_normalize(a);
    REQUIRE_FALSE(det(c.P).is_zero());
    CHECK(conjugate(c.P, a) == c.companion);
    CHECK(c.P * c.companion * inverse(c.P) == a);
    CHECK(c.companion.a11.is_zero());
    CHECK(c.companion.a12 == -det(a));
    CHECK(c.companion.a22 == trace(a));
  };
  for (std::int64_t p : {2, 3}) {
    for (const auto& a : all_matrices(p)) {
      if (!is_scalar(a)) round_trip(a);
    }
  }
  Rng rng;
  for (int i = 0; i < 1000; ++i) {
    const auto a = rng.q_mat();
    if (!is_scalar(a)) round_trip(a);
  }
}

TEST_CASE("commutant_basis") {
  const auto a = mq(0, -1, 1, 2);
  const auto basis = commutant_basis(a);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == Mat2<Rational>::identity(QQ()));
  CHECK(basis[1] == a);
  CHECK(centralizer_by_solving(a).size() == 2);

  // diag(5,7) commutes with diag(1,2) and is 3 I + 2 diag(1,2).
  CHECK(Mat2<Rational>::scalar(rq(3)) + mq(1, 0, 0, 2) * rq(2) == mq(5, 0, 0, 7));
  require_code(ErrorCode::ScalarInput, [] { (void)commutant_basis(Mat2<Rational>::identity(QQ())); });

  // Every solution of AQ = QA lies in span{I, A}.
  for (std::int64_t p : {2, 3}) {
    for (const auto& x : all_matrices(p)) {
      if (is_scalar(x)) continue;
      const auto sol = centralizer_by_solving(x);
      CHECK(sol.size() == 2);
      std::vector<Mat2<Fp>> span{Mat2<Fp>::identity(Fq(p)), x};
      for (const auto& q : sol) {
        DenseMatrix<Fp> m(3, 4, Fq(p));
        for (std::size_t r = 0; r < 3; ++r) {
          const auto v = (r < 2 ? span[r] : q).vec();
          for (std::size_t k = 0; k < 4; ++k) m(r, k) = v[k];
        }
        CHECK(rank(m) == 2);
      }
    }
  }
}

TEST_CASE("commutator_image_test") {
  const auto a = mp(3, 0, -1, 1, 0);
  CHECK(commutator_image_test(a, mp(3, 1, 0, 0, -1)));
  CHECK_FALSE(commutator_image_test(a, Mat2<Fp>::identity(Fq(3))));
  CHECK(commutator_image_test(a, Mat2<Fp>::zero(Fq(3))));
  require_code(ErrorCode::ScalarInput, [] { (void)commutator_image_test(mp(3, 1, 0, 0, 1), mp(3, 0, 0, 0, 0)); });

  // Explicit X with AX - XA = diag(1,-1) over F_3.
  const auto y = mp(3, 1, 0, 0, -1);
  bool found = false;
  for (const auto& x : all_matrices(3)) found = found || a * x - x * a == y;
  CHECK(found);
}

TEST_CASE("image of [A,-] is {tr Y = tr AY = 0} for every non-scalar A over F_2, F_3") {
  for (std::int64_t p : {2, 3}) {
    const auto mats = all_matrices(p);
    for (const auto& a : mats) {
      if (is_scalar(a)) continue;
      CHECK(rank(commutator_map(a)) == 2);
      for (const auto& y : mats) {
        const bool predicate = trace(y).is_zero() && trace(a * y).is_zero();
        CHECK(commutator_image_test(a, y) == predicate);
      }
    }
  }
}

TEST_CASE("conjugate") {
  const auto a = mq(1, 2, 3, 4);
  CHECK(conjugate(Mat2<Rational>::identity(QQ()), a) == a);
  CHECK(conjugate(mq(0, 1, 1, 0), mq(1, 0, 0, 2)) == mq(2, 0, 0, 1));
  require_code(ErrorCode::SingularP, [&] { (void)conjugate(mq(1, 2, 2, 4), a); });

  Rng rng;
  for (int i = 0; i < 300; ++i) {
    const auto p = rng.q_mat();
    if (det(p).is_zero()) continue;
    const auto x = rng.q_mat();
    const auto y = conjugate(p, x);
    CHECK(trace(y) == trace(x));
    CHECK(det(y) == det(x));
    CHECK(disc(y) == disc(x));
  }
}

TEST_CASE("det(aX + bY) = a^2 det X + b^2 det Y + ab (tr X tr Y - tr XY)") {
  auto identity_holds = [](const auto& a, const auto& b, const auto& x, const auto& y) {
    const auto lhs = det(x * a + y * b);
    const auto rhs = a * a * det(x) + b * b * det(y) + a * b * (trace(x) * trace(y) - trace(x * y));
    return lhs == rhs;
  };
  const auto f2 = all_matrices(2);
  for (const auto& x : f2)
    for (const auto& y : f2)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(identity_holds(fp(2, a), fp(2, b), x, y));
  Rng rng;
  for (int i = 0; i < 1000; ++i) {
    CHECK(identity_holds(rng.fp_elem(5), rng.fp_elem(5), rng.fp_mat(5), rng.fp_mat(5)));
    CHECK(identity_holds(rng.q_elem(), rng.q_elem(), rng.q_mat(), rng.q_mat()));
  }
}
