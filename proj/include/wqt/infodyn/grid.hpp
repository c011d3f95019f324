#pragma once

// Sampled densities on a uniform time grid and the three operators acting on
// them: the evolution operator L rho = i d/dt rho (second-order finite
// differences), the information operator M rho = (I0 + K t) rho, and the time
// operator T rho = t rho.
//
// The commutator checks evaluate [L,M] rho - i K rho (and [L,T] rho - i rho)
// on interior points. Note the sign: with L = i d/dt the product rule gives
// [L,M] = i K, i.e. i [L,M] = -K under this derivative convention; the
// residual is measured against [L,M] rho = i K rho.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace wqt::infodyn {

using Complex = std::complex<double>;

struct TimeGrid {
  double t0 = 0.0;
  double dt = 0.0;
  int n = 0;

  TimeGrid(double t0, double dt, int n) : t0(t0), dt(dt), n(n) {
    if (dt <= 0.0) throw std::invalid_argument("grid step must be positive");
    if (n < 5) throw std::invalid_argument("grid needs at least 5 samples");
  }
  double t(int j) const { return t0 + j * dt; }
};

struct TimeDensity {
  TimeGrid grid;
  std::vector<Complex> values;

  TimeDensity(TimeGrid grid, std::vector<Complex> values)
      : grid(grid), values(std::move(values)) {
    if (static_cast<int>(this->values.size()) != grid.n) {
      throw std::invalid_argument("sample count does not match the grid");
    }
    for (const Complex& v : this->values) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw std::invalid_argument("density has non-finite samples");
      }
    }
  }

  static TimeDensity sampled(const TimeGrid& grid,
                             const std::function<Complex(double)>& f) {
    std::vector<Complex> v(grid.n);
    for (int j = 0; j < grid.n; ++j) v[j] = f(grid.t(j));
    return TimeDensity(grid, std::move(v));
  }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& v : values) m = std::max(m, std::abs(v));
    return m;
  }
};

struct InfoParams {
  double i0 = 0.0;  // information at t = 0
  double k = 0.0;   // information generation rate (entropy), nats per unit time

  InfoParams(double i0, double k) : i0(i0), k(k) {
    if (k < 0.0) throw std::invalid_argument("entropy rate must be nonnegative");
  }
};

// i d/dt with central differences inside and one-sided second-order stencils
// at the two boundary points.
inline TimeDensity liouville_apply(const TimeDensity& rho) {
  const int n = rho.grid.n;
  const double dt = rho.grid.dt;
  const Complex i_unit(0.0, 1.0);
  std::vector<Complex> out(n);
  const auto& v = rho.values;
  out[0] = i_unit * (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dt);
  for (int j = 1; j + 1 < n; ++j) {
    out[j] = i_unit * (v[j + 1] - v[j - 1]) / (2.0 * dt);
  }
  out[n - 1] = i_unit * (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * dt);
  return TimeDensity(rho.grid, std::move(out));
}

// Pointwise multiplication by I(t) = I0 + K t.
inline TimeDensity info_apply(const TimeDensity& rho, const InfoParams& params) {
  std::vector<Complex> out(rho.grid.n);
  for (int j = 0; j < rho.grid.n; ++j) {
    out[j] = (params.i0 + params.k * rho.grid.t(j)) * rho.values[j];
  }
  return TimeDensity(rho.grid, std::move(out));
}

// Pointwise multiplication by t.
inline TimeDensity time_apply(const TimeDensity& rho) {
  std::vector<Complex> out(rho.grid.n);
  for (int j = 0; j < rho.grid.n; ++j) out[j] = rho.grid.t(j) * rho.values[j];
  return TimeDensity(rho.grid, std::move(out));
}

struct CommutatorCheck {
  double residual = 0.0;         // max |[L,M] rho - i K rho| / max |rho|, interior points
  double residual_coarse = 0.0;  // same on the every-other-sample grid (step 2 dt)
  std::optional<double> order;   // log2(residual_coarse / residual); empty if degenerate
};

namespace detail {

template <typename ApplyM>
CommutatorCheck commutator_check(const TimeDensity& rho, const ApplyM& apply_m,
                                 double k_target) {
  if (rho.grid.n < 9) {
    throw std::invalid_argument("commutator check needs at least 9 samples");
  }
  const Complex i_unit(0.0, 1.0);
  auto residual_on = [&](const TimeDensity& r) {
    const TimeDensity lm = liouville_apply(apply_m(r));
    const TimeDensity ml = apply_m(liouville_apply(r));
    double worst = 0.0;
    for (int j = 1; j + 1 < r.grid.n; ++j) {
      const Complex res =
          lm.values[j] - ml.values[j] - i_unit * k_target * r.values[j];
      worst = std::max(worst, std::abs(res));
    }
    const double scale = r.max_abs();
    return scale > 0.0 ? worst / scale : worst;
  };

  CommutatorCheck out;
  out.residual = residual_on(rho);

  std::vector<Complex> coarse;
  for (int j = 0; j < rho.grid.n; j += 2) coarse.push_back(rho.values[j]);
  const TimeDensity rho2(
      TimeGrid(rho.grid.t0, 2.0 * rho.grid.dt, static_cast<int>(coarse.size())),
      std::move(coarse));
  out.residual_coarse = residual_on(rho2);

  if (out.residual > 0.0 && out.residual_coarse > 0.0) {
    out.order = std::log2(out.residual_coarse / out.residual);
  }
  return out;
}

}  // namespace detail

inline CommutatorCheck commutator_lm_check(const TimeDensity& rho,
                                           const InfoParams& params) {
  return detail::commutator_check(
      rho, [&params](const TimeDensity& r) { return info_apply(r, params); },
      params.k);
}

inline CommutatorCheck commutator_lt_check(const TimeDensity& rho) {
  return detail::commutator_check(
      rho, [](const TimeDensity& r) { return time_apply(r); }, 1.0);
}

}  // namespace wqt::infodyn
