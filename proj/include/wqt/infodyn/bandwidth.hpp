#pragma once

// Bandwidth-duration uncertainty of a sampled signal: the duration is the
// standard deviation of |s(t)|^2 as a distribution over the grid, the
// bandwidth is the standard deviation of |s^(omega)|^2 over the discrete
// Fourier frequencies of the grid. For any finite-energy signal the product
// is at least 1/2, with equality for a Gaussian pulse.

#include "wqt/infodyn/grid.hpp"

#include <unsupported/Eigen/FFT>

namespace wqt::infodyn {

struct BandwidthDuration {
  double d_omega = 0.0;
  double d_t = 0.0;
  double product = 0.0;
};

inline BandwidthDuration bandwidth_duration_product(const TimeDensity& signal) {
  const int n = signal.grid.n;
  const double dt = signal.grid.dt;

  double energy = 0.0;
  for (const Complex& v : signal.values) energy += std::norm(v);
  if (energy <= 0.0) throw std::invalid_argument("signal carries no energy");

  double mean_t = 0.0;
  for (int j = 0; j < n; ++j) mean_t += signal.grid.t(j) * std::norm(signal.values[j]);
  mean_t /= energy;
  double var_t = 0.0;
  for (int j = 0; j < n; ++j) {
    const double d = signal.grid.t(j) - mean_t;
    var_t += d * d * std::norm(signal.values[j]);
  }
  var_t /= energy;

  Eigen::FFT<double> fft;
  std::vector<Complex> spectrum;
  fft.fwd(spectrum, signal.values);

  const double d_omega_bin = 2.0 * M_PI / (n * dt);
  double spec_energy = 0.0, mean_w = 0.0;
  std::vector<double> omegas(n), weights(n);
  for (int k = 0; k < n; ++k) {
    const int wrapped = k <= n / 2 ? k : k - n;
    omegas[k] = wrapped * d_omega_bin;
    weights[k] = std::norm(spectrum[k]);
    spec_energy += weights[k];
    mean_w += omegas[k] * weights[k];
  }
  mean_w /= spec_energy;
  double var_w = 0.0;
  for (int k = 0; k < n; ++k) {
    const double d = omegas[k] - mean_w;
    var_w += d * d * weights[k];
  }
  var_w /= spec_energy;

  BandwidthDuration out;
  out.d_t = std::sqrt(var_t);
  out.d_omega = std::sqrt(var_w);
  out.product = out.d_t * out.d_omega;
  return out;
}

// Test-signal builders.
inline TimeDensity gaussian_pulse(const TimeGrid& grid, double sigma, double center) {
  return TimeDensity::sampled(grid, [=](double t) {
    const double u = (t - center) / sigma;
    return Complex(std::exp(-0.25 * u * u), 0.0);  // |s|^2 has std sigma
  });
}

inline TimeDensity rectangular_pulse(const TimeGrid& grid, double lo, double hi) {
  return TimeDensity::sampled(grid, [=](double t) {
    return Complex(t >= lo && t < hi ? 1.0 : 0.0, 0.0);
  });
}

inline TimeDensity chirped_gaussian(const TimeGrid& grid, double sigma, double center,
                                    double chirp_rate) {
  return TimeDensity::sampled(grid, [=](double t) {
    const double u = (t - center) / sigma;
    const double phase = chirp_rate * (t - center) * (t - center);
    return std::polar(std::exp(-0.25 * u * u), phase);
  });
}

}  // namespace wqt::infodyn
