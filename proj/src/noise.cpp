#include "gensched/noise.hpp"

#include <algorithm>
#include <cmath>

namespace gensched {

std::string_view to_string(NoiseKind kind) noexcept {
  switch (kind) {
    case NoiseKind::none: return "none";
    case NoiseKind::gaussian: return "gaussian";
    case NoiseKind::hyperbolic: return "hyperbolic";
  }
  return "none";
}

std::optional<NoiseKind> parse_noise_kind(std::string_view text) noexcept {
  if (text == "none") return NoiseKind::none;
  if (text == "gaussian" || text == "normal") return NoiseKind::gaussian;
  if (text == "hyperbolic") return NoiseKind::hyperbolic;
  return std::nullopt;
}

NoiseModel NoiseModel::resolved(const Trace& trace) const {
  NoiseModel out = *this;
  if (out.wind_capacity <= 0.0) {
    out.wind_capacity = 0.0;
    for (const auto& s : trace.slots) out.wind_capacity = std::max(out.wind_capacity, s.a);
  }
  if (out.heat_peak <= 0.0) {
    out.heat_peak = 0.0;
    for (const auto& s : trace.slots) out.heat_peak = std::max(out.heat_peak, s.h);
  }
  return out;
}

void NoiseModel::validate() const {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(wind_std_frac) || !in_unit(heat_std_frac)) {
    throw DomainError("noise std fractions must lie in [0, 1]");
  }
  if (!(hyperbolic_tail > 0.0)) throw DomainError("hyperbolic tail parameter must be > 0");
}

SymmetricHyperbolic::SymmetricHyperbolic(double alpha, double delta, double mu)
    : alpha_(alpha), delta_(delta), mu_(mu) {
  if (alpha < 0.0 || delta < 0.0) throw DomainError("hyperbolic alpha and delta must be >= 0");
  if (alpha == 0.0 && delta != 0.0) throw DomainError("hyperbolic alpha must be > 0");
}

SymmetricHyperbolic SymmetricHyperbolic::from_std(double stddev, double zeta, double mu) {
  if (stddev < 0.0 || !(zeta > 0.0)) throw DomainError("hyperbolic: need stddev >= 0, zeta > 0");
  if (stddev == 0.0) return SymmetricHyperbolic(0.0, 0.0, mu);
  // Var = delta^2 K2(zeta) / (zeta K1(zeta))
  const double delta =
      stddev * std::sqrt(zeta * std::cyl_bessel_k(1.0, zeta) / std::cyl_bessel_k(2.0, zeta));
  return SymmetricHyperbolic(zeta / delta, delta, mu);
}

double SymmetricHyperbolic::variance() const {
  if (alpha_ == 0.0) return 0.0;
  const double zeta = alpha_ * delta_;
  return delta_ * std::cyl_bessel_k(2.0, zeta) / (alpha_ * std::cyl_bessel_k(1.0, zeta));
}

std::mt19937_64 forecast_engine(std::uint64_t seed, std::size_t t) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(
                                                       static_cast<std::uint64_t>(t) >> 32)};
  return std::mt19937_64(seq);
}

double draw_error(NoiseKind kind, double stddev, const NoiseModel& noise, std::mt19937_64& eng) {
  if (stddev <= 0.0) return 0.0;
  switch (kind) {
    case NoiseKind::none: return 0.0;
    case NoiseKind::gaussian: return std::normal_distribution<double>(0.0, stddev)(eng);
    case NoiseKind::hyperbolic:
      return SymmetricHyperbolic::from_std(stddev, noise.hyperbolic_tail,
                                           noise.hyperbolic_location)(eng);
  }
  return 0.0;
}

std::vector<InputSlot> forecast_slots(const Trace& trace, std::size_t t, std::size_t w,
                                      const NoiseModel& noise) {
  const std::size_t T = trace.size();
  if (t >= T) throw DomainError("forecast_slots: slot index beyond horizon");
  const std::size_t last = std::min(t + w, T - 1);
  std::vector<InputSlot> out(trace.slots.begin() + static_cast<std::ptrdiff_t>(t),
                             trace.slots.begin() + static_cast<std::ptrdiff_t>(last + 1));
  if (noise.is_exact() || out.size() == 1) return out;

  const NoiseModel n = (noise.wind_capacity > 0.0 && noise.heat_peak > 0.0) ? noise
                                                                            : noise.resolved(trace);
  const double sd_a = n.wind_std_frac * n.wind_capacity;
  const double sd_h = n.heat_std_frac * n.heat_peak;
  auto eng = forecast_engine(n.seed, t);
  for (std::size_t i = 1; i < out.size(); ++i) {
    out[i].a = std::max(0.0, out[i].a + draw_error(n.kind, sd_a, n, eng));
    out[i].h = std::max(0.0, out[i].h + draw_error(n.kind, sd_h, n, eng));
  }
  return out;
}

}  // namespace gensched
