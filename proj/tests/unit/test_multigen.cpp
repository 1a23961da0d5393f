#include <doctest.h>

#include <random>

#include "gensched/multigen.hpp"
#include "gensched/ratio.hpp"
#include "gensched/segments.hpp"
#include "support/oracles.hpp"

using namespace gensched;

namespace {

SystemParams shared() {
  SystemParams p;
  p.beta = 30;
  p.c_m = 2;
  p.c_o = 1;
  p.L = 1;
  p.eta = 1;
  p.c_g = 0.5;
  p.p_min = 0.2;
  p.p_max = 4;
  return p;
}

}  // namespace

TEST_CASE("fleet sorts by capacity and rejects empty input") {
  const auto f = GeneratorFleet::make(shared(), {3, 5, 1, 5});
  REQUIRE(f.size() == 4);
  CHECK(f.unit(0).L == 5);
  CHECK(f.unit(1).L == 5);
  CHECK(f.unit(2).L == 3);
  CHECK(f.unit(3).L == 1);
  CHECK(f.total_capacity() == 14);
  CHECK_THROWS_AS(GeneratorFleet::make(shared(), {}), EmptyFleet);
  CHECK_THROWS_AS(GeneratorFleet::make(shared(), {0.0}), AssumptionViolated);
}

TEST_CASE("layering examples") {
  const auto f = GeneratorFleet::make(shared(), {5, 3, 1});
  Trace t{{{7, 0, 1}, {9.5, 0, 1}, {0, 0, 1}}};
  const auto l = layer_demand(t, f);
  CHECK(l.layers[0].slots[0].a == 5);
  CHECK(l.layers[1].slots[0].a == 2);
  CHECK(l.layers[2].slots[0].a == 0);
  CHECK(l.top.slots[0].a == 0);
  CHECK(l.layers[0].slots[1].a == 5);
  CHECK(l.layers[1].slots[1].a == 3);
  CHECK(l.layers[2].slots[1].a == 1);
  CHECK(l.top.slots[1].a == doctest::Approx(0.5));
  for (std::size_t n = 0; n < 3; ++n) CHECK(l.layers[n].slots[2].a == 0);
}

TEST_CASE("layers rebuild the demand and respect their caps") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    auto p = shared();
    p.eta = 2 * u(rng);
    p.c_g = p.eta > 0 ? u(rng) * p.c_o / p.eta : 0.3;
    const auto f = GeneratorFleet::make(p, {1 + 9 * u(rng), 1 + 9 * u(rng), 1 + 9 * u(rng)});
    Trace t;
    for (int i = 0; i < 30; ++i) t.slots.push_back({30 * u(rng), 40 * u(rng), 1.0});
    const auto l = layer_demand(t, f);
    for (std::size_t i = 0; i < t.size(); ++i) {
      double a = l.top.slots[i].a, h = l.top.slots[i].h;
      for (std::size_t n = 0; n < f.size(); ++n) {
        const auto& s = l.layers[n].slots[i];
        CHECK(s.a <= f.unit(n).L + 1e-12);
        CHECK(s.h <= p.eta * f.unit(n).L + 1e-12);
        if (n > 0 && s.a > 0) CHECK(l.layers[n - 1].slots[i].a == doctest::Approx(f.unit(n - 1).L));
        a += s.a;
        h += s.h;
      }
      CHECK(std::abs(a - t.slots[i].a) <= 1e-9);
      CHECK(std::abs(h - t.slots[i].h) <= 1e-9);
    }
  }
}

TEST_CASE("single-unit fleet equals the single-generator pipeline") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    const auto p = oracle::random_params(rng);
    const auto t = oracle::blocky_trace(p, 40, rng);
    auto base = p;
    const auto f = GeneratorFleet::make(base, {p.L});
    const double ext_over = [&] {
      double c = 0;
      for (const auto& s : t.slots) {
        const double a = std::max(0.0, s.a - p.L), h = std::max(0.0, s.h - p.eta * p.L);
        c += s.p * a + p.c_g * h;
      }
      return c;
    }();
    const auto layer = layer_demand(t, f).layers[0];
    CHECK(schedule_fleet(t, f, std::nullopt, 0).total_cost ==
          doctest::Approx(offline_optimal(layer, f.unit(0)).total_cost + ext_over));
    CHECK(schedule_fleet(t, f, Algorithm::chasepp, 3).total_cost ==
          doctest::Approx(run_online(Algorithm::chasepp, layer, 3, {}, f.unit(0)).total_cost +
                          ext_over));
  }
}

TEST_CASE("layered offline equals the joint two-unit optimum") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 40; ++k) {
    auto p = shared();
    p.beta = 2 + 20 * u(rng);
    p.c_m = 0.5 * u(rng);
    p.p_min = 0.5;
    p.p_max = 1.5 + 2 * u(rng);
    const double L1 = k % 2 ? 2.0 : 1.0 + u(rng), L2 = k % 2 ? 1.0 : 1.0 + u(rng);
    const auto f = GeneratorFleet::make(p, {L1, L2});
    const std::size_t T = 3 + k % 4;
    Trace t;
    for (std::size_t i = 0; i < T; ++i) {
      const double a = 3.5 * u(rng);
      t.slots.push_back({a, p.eta * 3.5 * u(rng), p.p_min + (p.p_max - p.p_min) * u(rng)});
    }
    const double joint = oracle::joint_fleet_optimum(t, p, L1, L2);
    CHECK(schedule_fleet(t, f, std::nullopt, 0).total_cost == doctest::Approx(joint).epsilon(1e-9));
  }
}

TEST_CASE("serial and parallel fleet scheduling agree") {
  std::mt19937_64 rng(9);
  const auto p = shared();
  const auto f = GeneratorFleet::make(p, {5, 3, 3, 1});
  Trace t;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) t.slots.push_back({14 * u(rng), 14 * u(rng), 0.2 + 3.8 * u(rng)});
  NoiseModel n;
  n.kind = NoiseKind::gaussian;
  n.wind_std_frac = n.heat_std_frac = 0.2;
  n.seed = 3;
  for (auto a : {Algorithm::chase, Algorithm::chasepp_plus, Algorithm::rhc}) {
    const auto s = schedule_fleet(t, f, a, 4, n, Execution::serial);
    const auto q = schedule_fleet(t, f, a, 4, n, Execution::parallel);
    CHECK(s.total_cost == q.total_cost);
    CHECK(s.startup_count == q.startup_count);
  }
}

TEST_CASE("fleet bound is set by the largest unit") {
  auto p = shared();
  p.c_m = 20;
  p.p_max = 4;
  const auto same = GeneratorFleet::make(p, {1000, 1000});
  auto single = p;
  single.L = 1000;
  CHECK(cr_fleet(same, 3) == doctest::Approx(cr_chasepp(3, single)));
  const auto mixed = GeneratorFleet::make(p, {100, 1000});
  CHECK(cr_fleet(mixed, 3) == doctest::Approx(cr_chasepp(3, mixed.unit(0))));
  CHECK(cr_chasepp(3, mixed.unit(0)) >= cr_chasepp(3, mixed.unit(1)));
}
