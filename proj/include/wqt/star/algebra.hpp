#pragma once

// Finite-dimensional complex matrix *-algebras: elements, positive linear
// functionals (states), projectors, and the operator norm.
//
// Elements of an algebra are plain dense complex matrices; a concrete algebra
// is described by a basis (see ladder.hpp and gns.hpp). States are represented
// by positive semidefinite density matrices, not necessarily trace-normalized;
// the zero matrix is the admissible "impossible" state.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace wqt::star {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Default tolerance for algebraic identity checks.
inline constexpr double kIdentityTol = 1e-9;
// Default tolerance for iterated limits (projector meets).
inline constexpr double kLimitTol = 1e-6;

inline double max_abs(const CMat& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline bool approx_equal(const CMat& a, const CMat& b, double tol = kIdentityTol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol;
}

inline bool is_self_adjoint(const CMat& a, double tol = kIdentityTol) {
  return approx_equal(a, a.adjoint(), tol);
}

// Largest singular value. This is the C*-norm of a matrix algebra.
inline double operator_norm(const CMat& a) {
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<CMat>(a).singularValues()(0);
}

inline double frobenius_norm(const CMat& a) { return a.norm(); }

inline CMat identity(int dim) { return CMat::Identity(dim, dim); }

inline CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }

inline bool commute(const CMat& a, const CMat& b, double tol = kIdentityTol) {
  return max_abs(commutator(a, b)) <= tol;
}

// Positive linear functional z(A) = tr(density * A) represented by a positive
// semidefinite matrix. The zero matrix is allowed and models the zero state.
class StateFunctional {
 public:
  explicit StateFunctional(CMat density, double tol = kIdentityTol)
      : density_(std::move(density)) {
    if (density_.rows() != density_.cols()) {
      throw std::invalid_argument("state density must be square");
    }
    if (!density_.allFinite()) {
      throw std::invalid_argument("state density has non-finite entries");
    }
    const double scale = std::max(1.0, max_abs(density_));
    if (!is_self_adjoint(density_, tol * scale)) {
      throw std::invalid_argument("state density must be self-adjoint");
    }
    // Work with the exactly Hermitian part so eigenvalues are real.
    density_ = 0.5 * (density_ + density_.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<CMat> es(density_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol * scale) {
      throw std::invalid_argument("state density must be positive semidefinite");
    }
  }

  const CMat& density() const { return density_; }
  int dim() const { return static_cast<int>(density_.rows()); }
  double trace() const { return density_.trace().real(); }
  bool is_zero(double tol = kIdentityTol) const { return max_abs(density_) <= tol; }

  // z(A) = tr(density * A)
  Complex operator()(const CMat& a) const {
    if (a.rows() != density_.rows() || a.cols() != density_.cols()) {
      throw std::invalid_argument("element dimension does not match state");
    }
    return (density_ * a).trace();
  }

  StateFunctional normalized() const {
    if (is_zero()) throw std::invalid_argument("cannot normalize the zero state");
    return StateFunctional(density_ / trace());
  }

  // Convex combination of states.
  static StateFunctional mix(double alpha, const StateFunctional& z1,
                             const StateFunctional& z2) {
    if (alpha < 0.0 || alpha > 1.0) {
      throw std::invalid_argument("mixing weight must lie in [0,1]");
    }
    return StateFunctional(alpha * z1.density() + (1.0 - alpha) * z2.density());
  }

  static StateFunctional pure(const CVec& psi) {
    return StateFunctional(psi * psi.adjoint());
  }

 private:
  CMat density_;
};

// E_z(A) = z(A) / z(1)
inline Complex expectation(const StateFunctional& z, const CMat& a) {
  if (z.is_zero()) throw std::invalid_argument("expectation undefined for the zero state");
  return z(a) / z.trace();
}

// Dispersion sqrt(E_z((A - E_z(A))^2)) of a self-adjoint element.
inline double uncertainty(const StateFunctional& z, const CMat& a,
                          double tol = kIdentityTol) {
  if (z.is_zero()) throw std::invalid_argument("uncertainty undefined for the zero state");
  const double scale = std::max(1.0, max_abs(a));
  if (!is_self_adjoint(a, tol * scale)) {
    throw std::invalid_argument("uncertainty requires a self-adjoint element");
  }
  const double mean = expectation(z, a).real();
  const double second = expectation(z, (a * a).eval()).real();
  return std::sqrt(std::max(0.0, second - mean * mean));
}

struct UncertaintyCheck {
  double lhs = 0.0;  // sigma_A * sigma_B
  double rhs = 0.0;  // |E_z([A,B])| / 2
  bool holds = false;
};

// sigma_A sigma_B >= |E_z(AB - BA)| / 2
inline UncertaintyCheck check_uncertainty_relation(const StateFunctional& z,
                                                   const CMat& a, const CMat& b,
                                                   double tol = kIdentityTol) {
  UncertaintyCheck out;
  out.lhs = uncertainty(z, a, tol) * uncertainty(z, b, tol);
  out.rhs = 0.5 * std::abs(expectation(z, commutator(a, b)));
  out.holds = out.lhs >= out.rhs - tol;
  return out;
}

// Self-adjoint idempotent element.
class Projector {
 public:
  explicit Projector(CMat p, double tol = kIdentityTol) : p_(std::move(p)) {
    if (p_.rows() != p_.cols()) throw std::invalid_argument("projector must be square");
    const double scale = std::max(1.0, max_abs(p_));
    if (!is_self_adjoint(p_, tol * scale)) {
      throw std::invalid_argument("projector must be self-adjoint");
    }
    if (!approx_equal(p_ * p_, p_, tol * scale)) {
      throw std::invalid_argument("projector must be idempotent");
    }
  }

  const CMat& matrix() const { return p_; }
  int dim() const { return static_cast<int>(p_.rows()); }
  Projector complement() const { return Projector(identity(dim()) - p_); }

  static Projector zero(int dim) { return Projector(CMat::Zero(dim, dim)); }
  static Projector unit(int dim) { return Projector(identity(dim)); }
  static Projector onto(const CVec& v) {
    const double n2 = v.squaredNorm();
    if (n2 <= 0.0) throw std::invalid_argument("cannot project onto the zero vector");
    return Projector(CMat(v * v.adjoint() / n2));
  }

 private:
  CMat p_;
};

// Observable action on states: density -> A density A*, so that the
// transformed functional is B -> z(A* B A). The zero state is allowed and
// stays zero; the composition law act(A1 A2, z) = act(A1, act(A2, z)) holds.
inline StateFunctional act(const CMat& a, const StateFunctional& z) {
  if (a.rows() != z.dim() || a.cols() != z.dim()) {
    throw std::invalid_argument("element dimension does not match state");
  }
  return StateFunctional(a * z.density() * a.adjoint());
}

}  // namespace wqt::star
