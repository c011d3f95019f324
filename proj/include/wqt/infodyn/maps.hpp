#pragma once

// One-dimensional interval maps on [0,1]: the chaotic fixtures (doubling,
// tent, logistic), an irrational rotation, and the period-two flip.
//
// Orbits of the doubling and tent maps collapse in native floating point
// (both maps shift binary digits, so any double hits a fixed cycle within
// ~60 steps). Their orbits are therefore iterated in 64-bit fixed point with
// the trailing digit drawn from a seeded generator: this lazily extends the
// binary expansion of the initial point, which is exactly the action of the
// map on an initial condition whose unspecified digits are fair coin flips.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace wqt::infodyn {

enum class MapKind { Doubling, Tent, Logistic, Rotation, Flip };

struct MapSystem {
  MapKind kind = MapKind::Doubling;
  double param = 0.0;  // r for the logistic map, the angle for the rotation

  static MapSystem doubling() { return {MapKind::Doubling, 0.0}; }
  static MapSystem tent() { return {MapKind::Tent, 0.0}; }
  static MapSystem logistic(double r) {
    if (r <= 0.0 || r > 4.0) throw std::invalid_argument("logistic parameter must be in (0,4]");
    return {MapKind::Logistic, r};
  }
  static MapSystem rotation(double alpha) { return {MapKind::Rotation, alpha}; }
  static MapSystem flip() { return {MapKind::Flip, 0.0}; }

  const char* name() const {
    switch (kind) {
      case MapKind::Doubling: return "doubling";
      case MapKind::Tent: return "tent";
      case MapKind::Logistic: return "logistic";
      case MapKind::Rotation: return "rotation";
      default: return "flip";
    }
  }
};

inline double map_apply(const MapSystem& sys, double x) {
  switch (sys.kind) {
    case MapKind::Doubling: {
      const double y = 2.0 * x;
      return y - std::floor(y);
    }
    case MapKind::Tent:
      return x < 0.5 ? 2.0 * x : 2.0 * (1.0 - x);
    case MapKind::Logistic:
      return sys.param * x * (1.0 - x);
    case MapKind::Rotation: {
      const double y = x + sys.param;
      return y - std::floor(y);
    }
    default:
      return 1.0 - x;
  }
}

// Derivative of the piece containing x (pieces are half-open from the left).
inline double map_derivative(const MapSystem& sys, double x) {
  switch (sys.kind) {
    case MapKind::Doubling: return 2.0;
    case MapKind::Tent: return x < 0.5 ? 2.0 : -2.0;
    case MapKind::Logistic: return sys.param * (1.0 - 2.0 * x);
    case MapKind::Rotation: return 1.0;
    default: return -1.0;
  }
}

// A point where left and right derivatives of the map differ.
inline bool at_kink(const MapSystem& sys, double x) {
  return sys.kind == MapKind::Tent && x == 0.5;
}

// Deterministic orbit iterator; the sequence depends only on (map, x0, seed).
class Orbit {
 public:
  Orbit(const MapSystem& sys, double x0, std::uint64_t seed = 0)
      : sys_(sys), bits_(mix(x0, seed)) {
    if (x0 < 0.0 || x0 >= 1.0) throw std::invalid_argument("initial point must lie in [0,1)");
    fixed_point_ = sys.kind == MapKind::Doubling || sys.kind == MapKind::Tent;
    if (fixed_point_) {
      fx_ = static_cast<std::uint64_t>(std::ldexp(x0, 64 - 11)) << 11;
      // Fill the digits below double precision from the generator.
      fx_ |= bits_() & ((std::uint64_t{1} << 11) - 1);
    } else {
      xd_ = x0;
    }
  }

  double x() const {
    return fixed_point_ ? std::ldexp(static_cast<double>(fx_ >> 11), -(64 - 11)) : xd_;
  }

  void advance() {
    if (!fixed_point_) {
      xd_ = map_apply(sys_, xd_);
      return;
    }
    const std::uint64_t digit = bits_() & 1u;
    if (sys_.kind == MapKind::Doubling) {
      fx_ = (fx_ << 1) | digit;
    } else {
      // 1 - x flips every binary digit (up to one trailing unit).
      fx_ = fx_ >> 63 ? ((~fx_) << 1) | digit : (fx_ << 1) | digit;
    }
  }

  // Nudge off a kink by one representable step.
  void perturb() {
    if (fixed_point_) {
      fx_ += 1;
    } else {
      xd_ = std::nextafter(xd_, 1.0);
    }
  }

 private:
  static std::uint64_t mix(double x0, std::uint64_t seed) {
    std::uint64_t h = seed * 0x9e3779b97f4a7c15ULL;
    std::uint64_t bits;
    static_assert(sizeof bits == sizeof x0);
    __builtin_memcpy(&bits, &x0, sizeof bits);
    return h ^ (bits + 0xbf58476d1ce4e5b9ULL);
  }

  MapSystem sys_;
  bool fixed_point_ = false;
  std::uint64_t fx_ = 0;
  double xd_ = 0.0;
  std::mt19937_64 bits_;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;  // half-open [lo, hi)
  double length() const { return hi - lo; }
};

namespace detail {

inline void push_clipped(std::vector<Interval>& out, double lo, double hi) {
  lo = std::max(lo, 0.0);
  hi = std::min(hi, 1.0);
  if (hi - lo > 1e-12) out.push_back({lo, hi});
}

}  // namespace detail

// Preimage of a target interval under one application of the map, as a union
// of intervals in [0,1).
inline std::vector<Interval> preimage(const MapSystem& sys, const Interval& target) {
  std::vector<Interval> out;
  const double lo = target.lo;
  const double hi = target.hi;
  switch (sys.kind) {
    case MapKind::Doubling:
      detail::push_clipped(out, lo / 2.0, hi / 2.0);
      detail::push_clipped(out, 0.5 + lo / 2.0, 0.5 + hi / 2.0);
      break;
    case MapKind::Tent:
      detail::push_clipped(out, lo / 2.0, hi / 2.0);
      detail::push_clipped(out, 1.0 - hi / 2.0, 1.0 - lo / 2.0);
      break;
    case MapKind::Logistic: {
      // Branch inverses x = (1 -+ sqrt(1 - 4 y / r)) / 2 on [0, r/4].
      const double r = sys.param;
      const double ylo = std::min(lo, r / 4.0);
      const double yhi = std::min(hi, r / 4.0);
      if (yhi > ylo) {
        const double s_lo = std::sqrt(std::max(0.0, 1.0 - 4.0 * yhi / r));
        const double s_hi = std::sqrt(std::max(0.0, 1.0 - 4.0 * ylo / r));
        detail::push_clipped(out, (1.0 - s_hi) / 2.0, (1.0 - s_lo) / 2.0);
        detail::push_clipped(out, (1.0 + s_lo) / 2.0, (1.0 + s_hi) / 2.0);
      }
      break;
    }
    case MapKind::Rotation: {
      double a = lo - sys.param;
      double b = hi - sys.param;
      a -= std::floor(a);
      b = a + (hi - lo);
      if (b <= 1.0) {
        detail::push_clipped(out, a, b);
      } else {
        detail::push_clipped(out, a, 1.0);
        detail::push_clipped(out, 0.0, b - 1.0);
      }
      break;
    }
    default:  // flip
      detail::push_clipped(out, 1.0 - hi, 1.0 - lo);
      break;
  }
  return out;
}

}  // namespace wqt::infodyn
