#pragma once

// Composite systems in the matrix setting: Kronecker products of elements and
// states, two-qubit entanglement detection via the partial transpose (exact in
// 2 x 2), Schmidt rank for pure states, and CHSH correlation scans.

#include "wqt/star/algebra.hpp"

#include <array>
#include <optional>

namespace wqt::star {

inline CMat tensor_composite(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline StateFunctional tensor_composite(const StateFunctional& z1,
                                        const StateFunctional& z2) {
  return StateFunctional(tensor_composite(z1.density(), z2.density()));
}

namespace pauli {
inline CMat x() { CMat m(2, 2); m << 0, 1, 1, 0; return m; }
inline CMat y() { CMat m(2, 2); m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0); return m; }
inline CMat z() { CMat m(2, 2); m << 1, 0, 0, -1; return m; }
}  // namespace pauli

// Transpose of the second tensor factor of a two-qubit density matrix.
inline CMat partial_transpose(const CMat& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw std::invalid_argument("partial transpose implemented for 4x4 matrices");
  }
  CMat out(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          out(2 * i + j, 2 * k + l) = rho(2 * i + l, 2 * k + j);
        }
      }
    }
  }
  return out;
}

struct EntanglementVerdict {
  bool entangled = false;
  double min_pt_eigenvalue = 0.0;       // smallest eigenvalue of the partial transpose
  std::optional<int> schmidt_rank;      // set for pure states only
};

inline int schmidt_rank(const CVec& psi, double tol = 1e-9) {
  if (psi.size() != 4) throw std::invalid_argument("Schmidt rank implemented for two qubits");
  CMat amp(2, 2);
  amp << psi(0), psi(1), psi(2), psi(3);
  const auto sv = Eigen::JacobiSVD<CMat>(amp).singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol * std::max(1.0, sv(0))) ++rank;
  }
  return rank;
}

// Exact two-qubit entanglement test: the state is entangled iff its partial
// transpose has a negative eigenvalue. Pure states also get a Schmidt-rank
// verdict, which must agree.
inline EntanglementVerdict is_entangled(const StateFunctional& z, double tol = 1e-9) {
  if (z.dim() != 4) throw std::invalid_argument("entanglement test requires a 4x4 state");
  if (std::abs(z.trace() - 1.0) > 1e-6) {
    throw std::invalid_argument("entanglement test requires a trace-normalized state");
  }
  EntanglementVerdict out;
  Eigen::SelfAdjointEigenSolver<CMat> pt(partial_transpose(z.density()));
  out.min_pt_eigenvalue = pt.eigenvalues().minCoeff();
  out.entangled = out.min_pt_eigenvalue < -tol;

  Eigen::SelfAdjointEigenSolver<CMat> es(z.density());
  const auto& ev = es.eigenvalues();
  if (std::abs(ev(ev.size() - 1) - 1.0) <= 1e-9) {  // pure state
    out.schmidt_rank = schmidt_rank(es.eigenvectors().col(ev.size() - 1));
  }
  return out;
}

inline StateFunctional singlet_state() {
  CVec psi(4);
  psi << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
  return StateFunctional::pure(psi);
}

// Spin observable along the direction at angle theta in the x-z plane.
inline CMat spin_direction(double theta) {
  return std::cos(theta) * pauli::z() + std::sin(theta) * pauli::x();
}

struct ChshAngles {
  double a = 0.0;
  double a_prime = 0.0;
  double b = 0.0;
  double b_prime = 0.0;
};

inline double spin_correlation(const StateFunctional& z, double theta_a, double theta_b) {
  return expectation(z, tensor_composite(spin_direction(theta_a), spin_direction(theta_b)))
      .real();
}

// S = E(a,b) - E(a,b') + E(a',b) + E(a',b')
inline double chsh_value(const StateFunctional& z, const ChshAngles& ang) {
  if (z.dim() != 4) throw std::invalid_argument("CHSH requires a two-qubit state");
  return spin_correlation(z, ang.a, ang.b) - spin_correlation(z, ang.a, ang.b_prime) +
         spin_correlation(z, ang.a_prime, ang.b) +
         spin_correlation(z, ang.a_prime, ang.b_prime);
}

// Grid scan of S over all four directions in the x-z plane with the given
// angular step (radians). Uses the bilinearity of the correlator: with
// u(t) = (sin t, cos t) and T_ij the Pauli correlation matrix,
// E(s,t) = u(s)^T T u(t), so the two detector angles decouple for fixed a, a'.
inline double chsh_maximize(const StateFunctional& z, double grid_step) {
  if (z.dim() != 4) throw std::invalid_argument("CHSH requires a two-qubit state");
  if (grid_step <= 0.0) throw std::invalid_argument("grid step must be positive");
  const double two_pi = 2.0 * M_PI;
  const int g = std::max(4, static_cast<int>(std::floor(two_pi / grid_step)));

  // T over the (x, z) components used by spin_direction.
  Eigen::Matrix2d t;
  const std::array<CMat, 2> ops = {pauli::x(), pauli::z()};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      t(i, j) = expectation(z, tensor_composite(ops[i], ops[j])).real();
    }
  }

  std::vector<Eigen::Vector2d> u(g), tu(g);
  for (int i = 0; i < g; ++i) {
    const double theta = i * two_pi / g;
    u[i] = Eigen::Vector2d(std::sin(theta), std::cos(theta));
    tu[i] = t * u[i];
  }
  double best = -std::numeric_limits<double>::infinity();
  for (int ia = 0; ia < g; ++ia) {
    for (int ja = 0; ja < g; ++ja) {
      const Eigen::Vector2d sum = u[ia] + u[ja];
      const Eigen::Vector2d diff = u[ja] - u[ia];
      double best_b = -std::numeric_limits<double>::infinity();
      double best_bp = -std::numeric_limits<double>::infinity();
      for (int ib = 0; ib < g; ++ib) {
        best_b = std::max(best_b, sum.dot(tu[ib]));
        best_bp = std::max(best_bp, diff.dot(tu[ib]));
      }
      best = std::max(best, best_b + best_bp);
    }
  }
  return best;
}

}  // namespace wqt::star
