#pragma once

// Two estimators for the entropy rate of a 1-D map, in nats per iteration:
//
//   ks_entropy_lyapunov  orbit average of ln |f'(x_k)| (the Lyapunov exponent,
//                        which equals the entropy for these fixtures)
//   ks_entropy_symbolic  block-entropy difference H(depth) - H(depth-1) of the
//                        symbol sequence over a partition; an independent
//                        brute-force estimate used to cross-check the first
//
// Both iterate deterministically for a given (map, x0, seed) and accept an
// optional progress callback for long orbits.

#include "wqt/infodyn/maps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace wqt::infodyn {

using ProgressFn = std::function<void(double)>;

struct LyapunovEstimate {
  double value = 0.0;            // nats per iteration
  long long kink_hits = 0;       // orbit points that landed exactly on a kink
};

inline LyapunovEstimate ks_entropy_lyapunov(const MapSystem& sys, long long n_iter,
                                            long long burn_in, double x0,
                                            const ProgressFn& progress = {}) {
  if (n_iter < 1) throw std::invalid_argument("need at least one iteration");
  Orbit orbit(sys, x0);
  LyapunovEstimate out;
  for (long long i = 0; i < burn_in; ++i) orbit.advance();
  // Neumaier-compensated sum: the averages feed tight tolerances.
  double sum = 0.0, comp = 0.0;
  for (long long i = 0; i < n_iter; ++i) {
    if (at_kink(sys, orbit.x())) {
      ++out.kink_hits;
      orbit.perturb();
    }
    const double term = std::log(std::abs(map_derivative(sys, orbit.x())));
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    orbit.advance();
    if (progress && (i & 0xfffff) == 0) progress(static_cast<double>(i) / n_iter);
  }
  out.value = (sum + comp) / static_cast<double>(n_iter);
  return out;
}

struct SymbolicEstimate {
  double value = 0.0;      // H(depth) - H(depth-1), nats per iteration
  std::size_t blocks = 0;  // distinct depth-blocks observed
  std::size_t blocks_prev = 0;
  double coverage = 0.0;   // fraction of depth-blocks seen at least 10 times
  bool undersampled = false;
};

namespace detail {

// Partition boundaries b0 < b1 < ... < bm covering [0,1]; cell of x is the
// index of the half-open interval [b_i, b_{i+1}) containing it.
inline int symbol_of(const std::vector<double>& partition, double x) {
  const int cells = static_cast<int>(partition.size()) - 1;
  for (int c = 0; c < cells; ++c) {
    if (x < partition[c + 1]) return c;
  }
  return cells - 1;
}

inline double block_entropy(const std::map<std::uint64_t, long long>& counts,
                            long long total) {
  double h = 0.0, comp = 0.0;
  for (const auto& [code, count] : counts) {
    const double p = static_cast<double>(count) / static_cast<double>(total);
    const double term = -p * std::log(p);
    const double t = h + term;
    comp += std::abs(h) >= std::abs(term) ? (h - t) + term : (term - t) + h;
    h = t;
  }
  return h + comp;
}

}  // namespace detail

inline void validate_partition(const std::vector<double>& partition) {
  if (partition.size() < 2) throw std::invalid_argument("partition needs two boundaries");
  if (partition.front() != 0.0 || partition.back() != 1.0) {
    throw std::invalid_argument("partition must cover [0,1]");
  }
  for (std::size_t i = 1; i < partition.size(); ++i) {
    if (partition[i] <= partition[i - 1]) {
      throw std::invalid_argument("partition boundaries must increase");
    }
  }
}

inline SymbolicEstimate ks_entropy_symbolic(const MapSystem& sys,
                                            const std::vector<double>& partition,
                                            int depth, long long n_iter,
                                            double x0 = 0.6180339887498949,
                                            const ProgressFn& progress = {}) {
  validate_partition(partition);
  if (depth < 1 || depth > 24) throw std::invalid_argument("depth must lie in 1..24");
  if (n_iter < depth + 1) throw std::invalid_argument("orbit shorter than one block");
  const int cells = static_cast<int>(partition.size()) - 1;
  const std::uint64_t base = static_cast<std::uint64_t>(cells);
  std::uint64_t window_mod = 1;  // base^(depth-1)
  for (int i = 1; i < depth; ++i) window_mod *= base;

  Orbit orbit(sys, x0);
  std::map<std::uint64_t, long long> deep, prev;
  std::uint64_t code = 0;
  int filled = 0;
  long long windows = 0;
  for (long long i = 0; i < n_iter; ++i) {
    const int s = detail::symbol_of(partition, orbit.x());
    orbit.advance();
    if (filled < depth) {
      code = code * base + s;
      if (++filled < depth) continue;
    } else {
      code = (code % window_mod) * base + s;
    }
    ++deep[code];
    ++prev[code / base];  // leading depth-1 sub-block
    ++windows;
    if (progress && (i & 0xfffff) == 0) progress(static_cast<double>(i) / n_iter);
  }

  SymbolicEstimate out;
  out.blocks = deep.size();
  out.blocks_prev = prev.size();
  const double h_deep = detail::block_entropy(deep, windows);
  const double h_prev = depth > 1 ? detail::block_entropy(prev, windows) : 0.0;
  out.value = h_deep - h_prev;
  long long well_sampled = 0;
  for (const auto& [code_, count] : deep) {
    if (count >= 10) ++well_sampled;
  }
  out.coverage = static_cast<double>(well_sampled) / static_cast<double>(deep.size());
  out.undersampled = out.coverage < 0.9;
  return out;
}

}  // namespace wqt::infodyn
