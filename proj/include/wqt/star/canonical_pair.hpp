#pragma once

// Truncated position/momentum pair built from ladder operators. In the N-level
// truncation [Q,P] = i hbar (1 - N |N-1><N-1|): the canonical commutator holds
// exactly on the first N-1 diagonal entries while the last corner entry
// carries the truncation artifact -i hbar (N-1).

#include "wqt/star/algebra.hpp"

#include <random>

namespace wqt::star {

struct CanonicalPair {
  CMat q;
  CMat p;
  double hbar = 1.0;
};

inline CanonicalPair truncated_canonical_pair(int n, double hbar = 1.0) {
  if (n < 2) throw std::invalid_argument("truncated canonical pair needs dimension >= 2");
  CMat lower = CMat::Zero(n, n);  // annihilation: a |k> = sqrt(k) |k-1>
  for (int k = 1; k < n; ++k) lower(k - 1, k) = std::sqrt(static_cast<double>(k));
  const CMat raise = lower.adjoint();
  const double s = std::sqrt(hbar / 2.0);
  CanonicalPair out;
  out.q = s * (lower + raise);
  out.p = Complex(0.0, 1.0) * s * (raise - lower);
  out.hbar = hbar;
  return out;
}

// Gaussian ground state of the truncated oscillator: |0><0|.
inline StateFunctional oscillator_ground_state(int n) {
  CVec psi = CVec::Zero(n);
  psi(0) = 1.0;
  return StateFunctional::pure(psi);
}

// Random state supported on the lowest `levels` basis states.
inline StateFunctional random_low_level_state(int n, int levels, std::uint64_t seed) {
  if (levels < 1 || levels > n) throw std::invalid_argument("bad level count");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVec psi = CVec::Zero(n);
  for (int k = 0; k < levels; ++k) psi(k) = Complex(gauss(rng), gauss(rng));
  psi /= psi.norm();
  return StateFunctional::pure(psi);
}

}  // namespace wqt::star
