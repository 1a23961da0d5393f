#include <doctest.h>

#include <random>

#include "gensched/adversary.hpp"
#include "gensched/experiment.hpp"
#include "gensched/ratio.hpp"
#include "gensched/segments.hpp"
#include "support/oracles.hpp"

using namespace gensched;

namespace {

SystemParams example() {
  SystemParams p;
  p.beta = 100;
  p.c_m = 10;
  p.c_o = 1;
  p.L = 100;
  p.eta = 1;
  p.c_g = 0.5;
  p.p_min = 0;
  p.p_max = 2;
  return p;
}

}  // namespace

TEST_CASE("alpha and the CHASE bound") {
  const auto p = example();
  CHECK(alpha(p) == doctest::Approx(0.44));
  CHECK(cr_chase(p) == doctest::Approx(2.12));
  auto q = p;
  q.c_m = 0;
  q.c_o = 2.5;
  q.c_g = 0.5;
  q.eta = 1;
  q.p_max = 2;
  CHECK(alpha(q) == doctest::Approx(1.0));
}

TEST_CASE("f of the lookahead bound") {
  const auto p = example();
  CHECK(f_chaselk(p, 0) == alpha(p));
  double prev = alpha(p);
  for (double w : {1.0, 2.0, 5.0, 20.0, 100.0, 1e4}) {
    const double f = f_chaselk(p, w);
    CHECK(f >= prev);
    prev = f;
  }
  CHECK(prev > 0.99);
  auto q = p;
  q.c_m = 0;
  q.c_o = 2.5;
  CHECK(f_chaselk(q, 5) == doctest::Approx(1.0));
}

TEST_CASE("r_on and r_off examples") {
  const auto p = example();
  CHECK(r_on(0, 0, p) == doctest::Approx(3 - 2 * alpha(p)));
  CHECK(r_off(0, 3, p) == 1.0);
  CHECK(r_off(0, 0, p) == 1.0);
  CHECK(r_off(50, 1, p) == doctest::Approx(2.0));
  CHECK_THROWS_AS(r_off(1, 0, p), DegenerateWindow);

  auto q = p;
  q.c_m = 0;
  q.c_o = 2.5;
  CHECK(r_on(10, 2, q) == 1.0);
}

TEST_CASE("r_on nonincreasing and r_off nondecreasing in lambda") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const auto p = oracle::random_params(rng);
    for (double w : {1.0, 3.0, 10.0}) {
      double on = r_on(0, w, p), off = r_off(0, w, p);
      for (int i = 1; i <= 200; ++i) {
        const double lam = p.beta * i / 200.0;
        const double on2 = r_on(lam, w, p), off2 = r_off(lam, w, p);
        CHECK(on2 <= on + 1e-12);
        CHECK(off2 >= off - 1e-12);
        on = on2;
        off = off2;
      }
    }
  }
}

TEST_CASE("optimal threshold") {
  const auto p = example();
  const auto t0 = optimal_threshold(0, p);
  CHECK(t0.lambda_star == 0.0);
  CHECK(t0.cr == doctest::Approx(3 - 2 * alpha(p)));

  double prev = 0.0;
  for (int w = 0; w <= 400; w += 5) {
    const auto t = optimal_threshold(w, p);
    CHECK(t.lambda_star >= prev - 1e-9 * p.beta);
    CHECK(t.lambda_star <= p.beta);
    CHECK(t.r_on_at >= t.r_off_at - 1e-9);
    prev = t.lambda_star;
  }
  CHECK(prev / p.beta > 0.9);

  // Intersection beyond the box: lambda* is the cap w*max_delta.
  auto q = default_economics();
  q.L = 1000;
  const auto t1 = optimal_threshold(1, q);
  CHECK(r_off(max_delta(q), 1, q) <= r_on(max_delta(q), 1, q));
  CHECK(t1.lambda_star == doctest::Approx(max_delta(q)));
}

TEST_CASE("CHASEpp bound structure") {
  const auto p = example();
  CHECK(cr_chasepp(0, p) == doctest::Approx(3 - 2 * alpha(p)).epsilon(1e-12));
  CHECK(g_chasepp(0, p) == doctest::Approx(alpha(p)).epsilon(1e-12));
  double prev_g = alpha(p);
  for (int w = 1; w <= 50; ++w) {
    const double g = g_chasepp(w, p);
    CHECK(g >= prev_g - 1e-12);
    CHECK(g >= f_chaselk(p, w) - 1e-12);
    CHECK(g <= 1.0);
    prev_g = g;
  }
}

TEST_CASE("g-form and r_on form agree on random parameters") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 200; ++k) {
    const auto p = oracle::random_params(rng);
    for (double w : {0.0, 1.0, 2.0, 7.0, 30.0}) {
      double cr = 0;
      CHECK_NOTHROW(cr = cr_chasepp(w, p));
      CHECK(cr >= 1.0 - 1e-12);
      CHECK(cr <= cr_chaselk(w, p) + 1e-9);
      CHECK(cr_chasepp_plus(w, p) == doctest::Approx(std::min(cr, 1.0 / alpha(p))));
      CHECK(cr_chaselk_plus(w, p) == doctest::Approx(std::min(cr_chaselk(w, p), 1.0 / alpha(p))));
    }
  }
}

TEST_CASE("CHASEpp+ bound examples") {
  const auto p = example();
  // alpha = 0.44: the plus variant caps at 1/alpha.
  CHECK(cr_chasepp_plus(0, p) == doctest::Approx(std::min(2.12, 1 / 0.44)));
  auto q = p;
  q.c_m = 0;
  q.c_o = 2.5;
  CHECK(cr_chasepp_plus(3, q) == doctest::Approx(1.0));
}

TEST_CASE("ratio report surfaces both off-limit values") {
  const auto p = example();
  const auto r = ratio_report(2, p, false);
  CHECK(r.inv_alpha == doctest::Approx(1 / 0.44));
  CHECK(r.r_off_limit == doctest::Approx(2.5));
  CHECK(r.p_max == 2);
  CHECK_FALSE(r.cr_lower.has_value());
  CHECK(ratio_report(2, p, true).cr_lower.has_value());
}

TEST_CASE("realize_delta inverts delta") {
  const auto p = example();
  const auto low = realize_delta(-p.c_m, p);
  CHECK(low.a == doctest::Approx(0));
  CHECK(low.h == doctest::Approx(0));
  CHECK(realize_delta(max_delta(p), p).a == doctest::Approx(p.L));
  CHECK_THROWS_AS(realize_delta(-p.c_m - 1, p), RangeError);
  CHECK_THROWS_AS(realize_delta(max_delta(p) + 1, p), RangeError);

  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    const auto q = oracle::random_params(rng);
    std::uniform_real_distribution<double> d(-q.c_m, max_delta(q));
    std::vector<double> ds(5);
    for (auto& x : ds) x = d(rng);
    const auto t = realize_delta_trace(ds, q);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      CHECK(std::abs(delta(t.slots[i], q) - ds[i]) <= 1e-9 * (1 + std::abs(ds[i]) + q.L));
    }
  }
}

TEST_CASE("chase adversary against simple rules") {
  const auto p = example();
  const auto off = adversary_chase([](const PolicyState&, const PredictionWindow&) { return false; },
                                   p, 5);
  for (const auto& s : off.slots) {
    CHECK(s.a == p.L);
    CHECK(s.h == p.eta * p.L);
    CHECK(s.p == p.p_max);
  }
  const auto on = adversary_chase([](const PolicyState&, const PredictionWindow&) { return true; },
                                  p, 5);
  CHECK(on.slots[0].a == p.L);
  for (std::size_t i = 1; i < on.size(); ++i) CHECK(on.slots[i].a == 0);
}
