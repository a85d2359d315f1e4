#include "test_support.hpp"

using namespace moldkit;
using namespace moldkit::testing;

TEST_CASE("delta2 examples") {
  CHECK(delta2(mq(1, 1, 0, 1), mq(1, 0, 1, 1)) == rq(1));
  CHECK(delta2(mq(1, 0, 0, 2), mq(0, 1, 1, 0)) == rq(-1));
  CHECK(delta2(mq(1, 0, 0, 2), mq(3, 0, 0, 5)).is_zero());
  CHECK(delta2(mq(1, 1, 0, 1), mq(2, 5, 0, 7)).is_zero());
  const auto a = mq(4, -1, 3, 2);
  CHECK(delta2(a, a).is_zero());
  CHECK(delta2(a, Mat2<Rational>::identity(QQ())).is_zero());
}

TEST_CASE("tau3 examples") {
  const auto a = mq(1, 0, 0, 2), b = mq(1, 0, 1, 2), c = mq(2, 1, 0, 1);
  CHECK(trace(a * b * c) == rq(8));
  CHECK(trace(a * c * b) == rq(7));
  CHECK(tau3(a, b, c) == rq(1));
  CHECK(delta2(a, b).is_zero());
  CHECK(delta2(b, c).is_zero());
  CHECK(delta2(c, a).is_zero());
  CHECK(tau3(a, b, b).is_zero());
  CHECK(tau3(Mat2<Rational>::identity(QQ()), b, c).is_zero());
}

TEST_CASE("delta4 examples") {
  const auto i = Mat2<Rational>::identity(QQ());
  CHECK(delta4(i, mq(0, 1, 0, 0), mq(0, 0, 1, 0), mq(0, 0, 0, 1)) == rq(1));
  const auto a = mq(1, 1, 0, 1), b = mq(1, 0, 1, 1);
  CHECK(delta4(i, a, b, a * b) == rq(-1));
  CHECK(delta4(a, a, b, i).is_zero());
}

TEST_CASE("delta2 = -delta4(I,A,B,AB) and tau3 = delta4(A,B,C,I)") {
  for (std::int64_t p : {2, 3}) {
    const auto mats = all_matrices(p);
    const auto i = Mat2<Fp>::identity(Fq(p));
    for (const auto& a : mats)
      for (const auto& b : mats) CHECK(delta2(a, b) == -delta4(i, a, b, a * b));
  }
  Rng rng;
  const auto i = Mat2<Rational>::identity(QQ());
  for (int n = 0; n < 2000; ++n) {
    const auto a = rng.q_mat(), b = rng.q_mat(), c = rng.q_mat();
    CHECK(delta2(a, b) == -delta4(i, a, b, a * b));
    CHECK(tau3(a, b, c) == delta4(a, b, c, i));
    const auto x = rng.fp_mat(7), y = rng.fp_mat(7), z = rng.fp_mat(7);
    CHECK(tau3(x, y, z) == delta4(x, y, z, Mat2<Fp>::identity(Fq(7))));
  }
}

TEST_CASE("delta2 is symmetric and conjugation invariant") {
  Rng rng;
  for (int n = 0; n < 500; ++n) {
    const auto a = rng.q_mat(), b = rng.q_mat(), p = rng.q_mat();
    CHECK(delta2(a, b) == delta2(b, a));
    if (det(p).is_zero()) continue;
    CHECK(delta2(conjugate(p, a), conjugate(p, b)) == delta2(a, b));
  }
}

TEST_CASE("m(A^n) closed form against direct powers") {
  CHECK(m_power_closed(mq(1, 1, 0, 2), 2) == rq(9));
  CHECK(disc(power(mq(1, 1, 0, 2), 2)) == rq(9));
  CHECK(m_power_closed(mq(1, 1, 0, 1), 5).is_zero());
  for (std::int64_t p : {2, 3, 5}) {
    for (const auto& a : all_matrices(p)) {
      for (unsigned n = 1; n <= 7; ++n) CHECK(m_power_closed(a, n) == disc(power(a, n)));
    }
  }
  Rng rng;
  for (int k = 0; k < 200; ++k) {
    const auto a = rng.q_mat();
    for (unsigned n = 1; n <= 9; ++n) CHECK(m_power_closed(a, n) == disc(power(a, n)));
  }
  require_code(ErrorCode::ValidationError, [] { (void)m_power_closed(mq(1, 0, 0, 1), 0); });
}

TEST_CASE("power_traces follows Cayley-Hamilton") {
  Rng rng;
  for (int k = 0; k < 100; ++k) {
    const auto a = rng.q_mat();
    const auto t = power_traces(trace(a), det(a), 6);
    for (unsigned n = 0; n <= 6; ++n) CHECK(t[n] == trace(power(a, n)));
  }
}

TEST_CASE("det_from_traces") {
  const auto a = mq(1, 0, 0, 2);
  CHECK(det_from_traces(trace(a), trace(a * a), trace(a * a * a)) == rq(2));
  const auto u = mq(1, 1, 0, 1);
  require_code(ErrorCode::VanishingM, [&] { (void)det_from_traces(trace(u), trace(u * u), trace(u * u * u)); });
  for (std::int64_t p : {3, 5}) {
    for (const auto& g : all_matrices(p)) {
      if (disc(g).is_zero()) continue;
      CHECK(det_from_traces(trace(g), trace(g * g), trace(g * g * g)) == det(g));
    }
  }
}

TEST_CASE("reconstruct_from_traces") {
  const auto a = mq(1, 0, 0, 2);
  const auto x = mq(5, 0, 0, 7);
  CHECK(reconstruct_from_traces(a, trace(x), trace(a * x)) == x);
  require_code(ErrorCode::VanishingM, [] { (void)reconstruct_from_traces(mq(1, 1, 0, 1), rq(0), rq(0)); });
  for (std::int64_t p : {3, 5}) {
    const auto mats = all_matrices(p);
    for (const auto& g : mats) {
      if (disc(g).is_zero()) continue;
      for (std::int64_t l = 0; l < p; ++l)
        for (std::int64_t m = 0; m < p; ++m) {
          const auto y = Mat2<Fp>::scalar(fp(p, l)) + g * fp(p, m);
          CHECK(reconstruct_from_traces(g, trace(y), trace(g * y)) == y);
        }
    }
  }
}

TEST_CASE("invariant vector layout") {
  const RepTuple<Rational> t({mq(1, 0, 0, 2), mq(0, 1, 1, 0), mq(1, 1, 0, 1)}, Mode::Monoid);
  const auto iv = invariant_vector(t);
  CHECK(iv.dets.size() == 3);
  std::vector<std::string> keys;
  for (const auto& [w, v] : iv.traces) keys.push_back(w.to_string());
  CHECK(keys == std::vector<std::string>{"1", "1,2", "1,2,3", "1,3", "2", "2,3", "3"});
  CHECK(iv.traces[1].second == trace(t.gen(0) * t.gen(1)));

  const RepTuple<Rational> g({mq(1, 0, 0, 2)}, Mode::Group);
  const auto ig = invariant_vector(g);
  CHECK(ig.dets == std::vector<Rational>{rq(2), rq(1, 2)});
  CHECK(ig.traces.size() == 3);
  CHECK(ig.traces[1].first.to_string() == "1,-1");
  CHECK(ig.traces[1].second == rq(2));
  CHECK(ig.traces[2].second == rq(3, 2));
}

TEST_CASE("invariant vector is constant on conjugacy classes") {
  Rng rng;
  for (int k = 0; k < 200; ++k) {
    const RepTuple<Fp> t({rng.fp_mat(5), rng.fp_mat(5)}, Mode::Monoid);
    const auto p = rng.fp_mat(5);
    if (det(p).is_zero()) continue;
    CHECK(invariant_vector(t.conjugated(p)) == invariant_vector(t));
  }
}

TEST_CASE("trace identities") {
  Rng rng;
  for (int k = 0; k < 500; ++k) {
    const auto x = rng.q_mat(), y = rng.q_mat(), z = rng.q_mat();
    CHECK(trace(x * x * y) == trace(x) * trace(x * y) - det(x) * trace(y));
    CHECK(trace(x * y * z) == -trace(x * z * y) + trace(x) * trace(y * z) + trace(y) * trace(z * x) +
                                  trace(z) * trace(y * x) - trace(x) * trace(y) * trace(z));
    if (det(x).is_zero() || det(y).is_zero()) continue;
    const auto i = Mat2<Rational>::identity(QQ());
    CHECK(delta2(x, y) == det(x) * det(y) * trace(x * y * inverse(x) * inverse(y) - i));
    CHECK(disc(inverse(x)) == disc(x) / (det(x) * det(x)));
  }
}
