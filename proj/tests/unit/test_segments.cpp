#include <doctest.h>

#include <random>

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

Trace repeat(InputSlot s, std::size_t n) { return Trace{std::vector<InputSlot>(n, s)}; }

// Trace whose delta sequence is exactly `ds` (p = p_max, h = eta*a).
Trace from_deltas(const std::vector<double>& ds, const SystemParams& p) {
  Trace t;
  const double margin = p.peak_external_price() - p.c_o;
  for (double d : ds) {
    const double a = (d + p.c_m) / margin;
    t.slots.push_back({a, p.eta * a, p.p_max});
  }
  return t;
}

}  // namespace

TEST_CASE("delta examples") {
  const auto p = example();
  CHECK(delta({50, 50, 2}, p) == doctest::Approx(65));
  CHECK(delta({0, 0, 2}, p) == doctest::Approx(-10));
  CHECK(delta({p.L, p.eta * p.L, p.p_max}, p) ==
        doctest::Approx(p.L * (p.p_max + p.eta * p.c_g - p.c_o) - p.c_m));
}

TEST_CASE("capped series clips at both boundaries") {
  const auto p = example();
  const auto s = capped_series(repeat({50, 50, 2}, 2), p);
  REQUIRE(s.capped.size() == 3);
  CHECK(s.capped[0] == -100);
  CHECK(s.capped[1] == doctest::Approx(-35));
  CHECK(s.capped[2] == 0);

  // From 0, idle slots lower Delta by c_m until it sticks at -beta.
  Trace t = repeat({100, 100, 2}, 2);
  for (int i = 0; i < 15; ++i) t.slots.push_back({0, 0, 2});
  const auto s2 = capped_series(t, p);
  CHECK(s2.capped[2] == 0);
  CHECK(s2.capped[3] == doctest::Approx(-10));
  CHECK(s2.capped[11] == doctest::Approx(-90));
  CHECK(s2.capped[12] == -100);
  CHECK(s2.capped.back() == -100);

  const auto s3 = capped_series(repeat({0, 0, 2}, 10), p);
  for (double v : s3.capped) CHECK(v == -100);
}

TEST_CASE("decompose: single rise is one type1 segment") {
  const auto p = example();
  const auto d = decompose(capped_series(repeat({50, 50, 2}, 3), p));
  REQUIRE(d.segments.size() == 1);
  CHECK(d.segments[0].start == 1);
  CHECK(d.segments[0].end == 3);
  CHECK(d.segments[0].kind == SegmentKind::type1);
  CHECK(d.segments[0].transit_end == 2);
  CHECK(d.final_boundary == Boundary::upper);
}

TEST_CASE("decompose: flat at -beta has no transit") {
  const auto p = example();
  const auto d = decompose(capped_series(repeat({0, 0, 2}, 6), p));
  REQUIRE(d.segments.size() == 1);
  CHECK(d.segments[0].kind == SegmentKind::type_start);
  CHECK(d.count(SegmentKind::type1) == 0);
  CHECK(d.count(SegmentKind::type2) == 0);
}

TEST_CASE("decompose: up then down gives type1 then type2") {
  const auto p = example();
  Trace t = repeat({0, 0, 2}, 2);
  for (int i = 0; i < 3; ++i) t.slots.push_back({100, 100, 2});
  for (int i = 0; i < 12; ++i) t.slots.push_back({0, 0, 2});
  const auto d = decompose(capped_series(t, p));
  CHECK(d.count(SegmentKind::type1) == 1);
  CHECK(d.count(SegmentKind::type2) == 1);
  const std::size_t upper_final = d.final_boundary == Boundary::upper ? 1 : 0;
  CHECK(d.count(SegmentKind::type1) == d.count(SegmentKind::type2) + upper_final);
}

TEST_CASE("excursions returning to the same boundary stay in the dwell") {
  const auto p = example();
  // -100 -> -60 -> ... -> -100 (lower dwell continues) -> -40 -> 0 -> -5
  const auto t = from_deltas({40, -10, -10, -10, -10, 60, 60, -5}, p);
  const auto s = capped_series(t, p);
  const auto d = decompose(s);
  REQUIRE(!d.segments.empty());
  CHECK(d.segments[0].kind == SegmentKind::type_start);
  CHECK(d.segments[0].end == 5);
  CHECK(d.segments[1].kind == SegmentKind::type1);
  CHECK(d.segments[1].start == 6);
  CHECK(d.segments[1].end == 7);
  CHECK(d.segments[1].transit_end == 7);
  CHECK(d.segments[2].kind == SegmentKind::type_end);
}

TEST_CASE("offline examples") {
  const auto p = example();
  const auto s = offline_optimal(repeat({50, 50, 2}, 4), p);
  CHECK(s.statuses() == std::vector<bool>{true, true, true, true});
  CHECK(s.total_cost == doctest::Approx(340));
  CHECK(brute_force_optimal(repeat({50, 50, 2}, 4), p).total_cost == doctest::Approx(340));

  CHECK(offline_optimal(repeat({0, 0, 2}, 5), p).total_cost == 0);
  CHECK(brute_force_optimal(repeat({0, 0, 2}, 5), p).total_cost == 0);

  const auto one = offline_optimal(repeat({50, 50, 2}, 1), p);
  CHECK(one.statuses() == std::vector<bool>{false});
  CHECK(one.total_cost == doctest::Approx(125));
}

TEST_CASE("enumeration guard") {
  const auto p = example();
  CHECK_THROWS_AS(brute_force_optimal(repeat({1, 1, 1}, 21), p), HorizonTooLarge);
}

TEST_CASE("cumulative cost is additive") {
  std::mt19937_64 rng(5);
  const auto p = oracle::random_params(rng);
  const auto s = capped_series(oracle::random_trace(p, 30, rng), p);
  for (std::size_t a = 1; a <= 30; a += 3) {
    for (std::size_t m = a; m < 30; m += 4) {
      CHECK(cumulative_cost(s, a, 30) ==
            doctest::Approx(cumulative_cost(s, a, m) + cumulative_cost(s, m + 1, 30)));
    }
  }
  CHECK(cumulative_cost(s, 5, 4) == 0);
  CHECK_THROWS_AS(cumulative_cost(s, 0, 3), DomainError);
  CHECK_THROWS_AS(cumulative_cost(s, 1, 31), DomainError);
}

TEST_CASE("random instances: structure, offline = enumeration = DP") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 250; ++k) {
    const auto p = oracle::random_params(rng);
    const std::size_t T = 1 + k % 12;
    const auto t = k % 2 ? oracle::random_trace(p, T, rng) : oracle::blocky_trace(p, T, rng);
    const auto s = capped_series(t, p);

    for (std::size_t i = 0; i <= T; ++i) {
      CHECK(s.capped[i] <= 0.0);
      CHECK(s.capped[i] >= -p.beta);
    }

    const auto d = decompose(s);
    std::size_t next = 1;
    SegmentKind last = SegmentKind::type_start;
    bool seen_transit = false;
    for (const auto& seg : d.segments) {
      CHECK(seg.start == next);
      CHECK(seg.end >= seg.start);
      next = seg.end + 1;
      if (seg.kind == SegmentKind::type1 || seg.kind == SegmentKind::type2) {
        if (seen_transit) CHECK(seg.kind != last);
        seen_transit = true;
        last = seg.kind;
        if (p.beta > 0) {
          const double before = s.capped[seg.start - 1];
          const double after = s.capped[seg.end];
          if (seg.kind == SegmentKind::type1) {
            CHECK(before == -p.beta);
            CHECK(after == 0.0);
          } else {
            CHECK(before == 0.0);
            CHECK(after == -p.beta);
          }
        }
      }
    }
    CHECK(next == T + 1);
    const std::size_t upper_final = d.final_boundary == Boundary::upper ? 1 : 0;
    CHECK(d.count(SegmentKind::type1) == d.count(SegmentKind::type2) + upper_final);

    const double ref = oracle::enumerate_optimum(t, p);
    const double tol = 1e-9 * std::max(1.0, std::abs(ref));
    CHECK(std::abs(offline_optimal(t, p).total_cost - ref) <= tol);
    CHECK(std::abs(brute_force_optimal(t, p, Execution::serial).total_cost - ref) <= tol);
    CHECK(std::abs(brute_force_optimal(t, p, Execution::parallel).total_cost - ref) <= tol);
    CHECK(std::abs(dp_optimal_schedule(t, p).total_cost - ref) <= tol);
    CHECK(dp_optimal(t.slots, p).cost == doctest::Approx(ref).epsilon(1e-9));
  }
}

TEST_CASE("serial and parallel enumeration pick the same schedule") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 20; ++k) {
    const auto p = oracle::random_params(rng);
    const auto t = oracle::blocky_trace(p, 14, rng);
    CHECK(brute_force_optimal(t, p, Execution::serial).statuses() ==
          brute_force_optimal(t, p, Execution::parallel).statuses());
  }
}

TEST_CASE("dp from an on state saves the startup") {
  const auto p = example();
  const auto t = repeat({50, 50, 2}, 1);
  CHECK(dp_optimal(t.slots, p, false).y.front() == false);
  CHECK(dp_optimal(t.slots, p, true).y.front() == true);
  CHECK(dp_optimal(t.slots, p, true).cost == doctest::Approx(60));
}
