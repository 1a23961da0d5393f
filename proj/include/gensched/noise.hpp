#ifndef GENSCHED_NOISE_HPP
#define GENSCHED_NOISE_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "gensched/model.hpp"

namespace gensched {

enum class NoiseKind { none, gaussian, hyperbolic };

std::string_view to_string(NoiseKind kind) noexcept;
std::optional<NoiseKind> parse_noise_kind(std::string_view text) noexcept;

/// Forecast error applied to predicted slots (never the current one).
///
/// Electricity error has standard deviation `wind_std_frac * wind_capacity`
/// and heat error `heat_std_frac * heat_peak`. A non-positive capacity or
/// peak is resolved from the trace (peak net demand, peak heat demand).
/// Prices are never perturbed.
struct NoiseModel {
  NoiseKind kind = NoiseKind::none;
  double wind_std_frac = 0.0;
  double heat_std_frac = 0.0;
  double wind_capacity = 0.0;
  double heat_peak = 0.0;
  double hyperbolic_location = 0.0;
  double hyperbolic_tail = 1.0;  // zeta = alpha * delta of the hyperbolic law
  std::uint64_t seed = 0;

  bool is_exact() const noexcept {
    return kind == NoiseKind::none || (wind_std_frac == 0.0 && heat_std_frac == 0.0);
  }

  /// Copy with wind_capacity and heat_peak filled in from `trace`.
  NoiseModel resolved(const Trace& trace) const;

  /// Throws DomainError for fractions outside [0, 1] or a non-positive tail.
  void validate() const;
};

/// Symmetric hyperbolic distribution, density proportional to
/// exp(-alpha * sqrt(delta^2 + (x - mu)^2)). Sampled by rejection from a
/// Laplace envelope with acceptance probability at least exp(-zeta).
class SymmetricHyperbolic {
public:
  SymmetricHyperbolic(double alpha, double delta, double mu = 0.0);

  /// Distribution with the given standard deviation and shape zeta = alpha * delta.
  static SymmetricHyperbolic from_std(double stddev, double zeta, double mu = 0.0);

  double alpha() const noexcept { return alpha_; }
  double delta() const noexcept { return delta_; }
  double mean() const noexcept { return mu_; }
  double variance() const;

  template <class Engine>
  double operator()(Engine& eng) const {
    if (delta_ == 0.0 && alpha_ == 0.0) return mu_;
    std::exponential_distribution<double> expo(alpha_);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (;;) {
      const double mag = expo(eng);
      const double x = unit(eng) < 0.5 ? -mag : mag;
      const double accept = std::exp(-alpha_ * (std::sqrt(delta_ * delta_ + x * x) - mag));
      if (unit(eng) < accept) return mu_ + x;
    }
  }

private:
  double alpha_;
  double delta_;
  double mu_;
};

/// Engine for the forecast issued at slot `t` (0-based). Pure in (seed, t).
std::mt19937_64 forecast_engine(std::uint64_t seed, std::size_t t);

/// Draws one error sample of the given standard deviation.
double draw_error(NoiseKind kind, double stddev, const NoiseModel& noise, std::mt19937_64& eng);

/// Predicted inputs for slots t..min(t+w, T-1) (0-based). Slot t is exact;
/// later slots get a(tau) + e_a and h(tau) + e_h clamped at 0.
std::vector<InputSlot> forecast_slots(const Trace& trace, std::size_t t, std::size_t w,
                                      const NoiseModel& noise);

}  // namespace gensched

#endif
