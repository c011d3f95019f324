#pragma once

// Projector calculus: lattice meet as the limit of (P1 P2)^n, join by
// De Morgan, the absorption identities, and spectral decomposition of
// self-adjoint elements into eigenprojectors.

#include "wqt/star/algebra.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace wqt::star {

struct MeetConvergenceError : std::runtime_error {
  MeetConvergenceError(double residual, int iterations)
      : std::runtime_error("projector meet did not converge within " +
                           std::to_string(iterations) +
                           " iterations (residual " + std::to_string(residual) + ")"),
        residual(residual),
        iterations(iterations) {}
  double residual;
  int iterations;
};

namespace detail {

// Snap a nearly idempotent self-adjoint matrix onto an exact projector by
// rounding its eigenvalues to {0,1}.
inline CMat round_to_projector(const CMat& x) {
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (x + x.adjoint().eval()));
  CMat out = CMat::Zero(x.rows(), x.cols());
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) >= 0.5) {
      out += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
    }
  }
  return out;
}

}  // namespace detail

// Meet P1 ^ P2 = lim_n (P1 P2)^n. Compatible pairs short-circuit to the exact
// product P1 P2. The iterated limit is symmetrized and re-idempotentized by
// eigenvalue rounding before validation.
inline Projector projector_meet(const Projector& p1, const Projector& p2,
                                double tol = kLimitTol, int max_iter = 200) {
  if (p1.dim() != p2.dim()) throw std::invalid_argument("projector dimensions differ");
  const CMat& a = p1.matrix();
  const CMat& b = p2.matrix();
  if (commute(a, b)) {
    // P1 ^ P2 = P1 P2 for a compatible pair; the product is already a projector.
    CMat prod = a * b;
    return Projector(0.5 * (prod + prod.adjoint().eval()));
  }
  const CMat step = a * b;
  CMat x = step;
  double diff = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    CMat next = step * x;
    diff = max_abs(next - x);
    x = std::move(next);
    if (diff < tol) {
      return Projector(detail::round_to_projector(x));
    }
  }
  throw MeetConvergenceError(diff, max_iter);
}

// Join P1 v P2 = 1 - (1 - P1) ^ (1 - P2).
inline Projector projector_join(const Projector& p1, const Projector& p2,
                                double tol = kLimitTol, int max_iter = 200) {
  Projector m = projector_meet(p1.complement(), p2.complement(), tol, max_iter);
  return Projector(identity(p1.dim()) - m.matrix());
}

// Both absorption identities:
//   P_i (P1 ^ P2) = (P1 ^ P2) P_i = P1 ^ P2
//   P_i (P1 v P2) = (P1 v P2) P_i = P_i
inline bool absorption_check(const Projector& p1, const Projector& p2,
                             double tol = kLimitTol, int max_iter = 200,
                             double check_tol = kIdentityTol) {
  const CMat meet = projector_meet(p1, p2, tol, max_iter).matrix();
  const CMat join = projector_join(p1, p2, tol, max_iter).matrix();
  for (const CMat* p : {&p1.matrix(), &p2.matrix()}) {
    if (!approx_equal(*p * meet, meet, check_tol)) return false;
    if (!approx_equal(meet * *p, meet, check_tol)) return false;
    if (!approx_equal(*p * join, *p, check_tol)) return false;
    if (!approx_equal(join * *p, *p, check_tol)) return false;
  }
  return true;
}

// Eigenvalue / eigenprojector resolution of a self-adjoint element.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;   // distinct, ascending
  std::vector<Projector> projectors; // mutually orthogonal, sum to 1

  CMat reconstruct() const {
    CMat out = CMat::Zero(projectors.front().dim(), projectors.front().dim());
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
      out += eigenvalues[i] * projectors[i].matrix();
    }
    return out;
  }
};

inline SpectralDecomposition spectral_decomposition(const CMat& a,
                                                    double tol = kIdentityTol) {
  const double scale = std::max(1.0, max_abs(a));
  if (!is_self_adjoint(a, tol * scale)) {
    throw std::invalid_argument("spectral decomposition requires a self-adjoint element");
  }
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (a + a.adjoint().eval()));
  const auto& vals = es.eigenvalues();
  const double cluster_tol = 1e-8 * std::max(1.0, std::abs(vals(vals.size() - 1)) +
                                                      std::abs(vals(0)));
  SpectralDecomposition out;
  int i = 0;
  const int n = static_cast<int>(vals.size());
  while (i < n) {
    int j = i;
    while (j + 1 < n && vals(j + 1) - vals(j) <= cluster_tol) ++j;
    CMat proj = CMat::Zero(n, n);
    double mean = 0.0;
    for (int k = i; k <= j; ++k) {
      proj += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
      mean += vals(k);
    }
    out.eigenvalues.push_back(mean / (j - i + 1));
    out.projectors.emplace_back(std::move(proj));
    i = j + 1;
  }
  return out;
}

}  // namespace wqt::star
