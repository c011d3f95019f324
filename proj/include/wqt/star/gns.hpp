#pragma once

// GNS construction for a state on a finite-dimensional matrix *-algebra.
//
// Given a basis B_1..B_k of the algebra and a nonzero state z, the Gram form
// G_jl = z(B_j* B_l) is Hermitian positive semidefinite. Its kernel spans the
// vanishing ideal I_z = { C : z(C*C) = 0 }; the quotient carries the inner
// product <[A],[B]> = z(A*B) and the left-multiplication representation
// A[B] = [AB].

#include "wqt/star/algebra.hpp"
#include "wqt/star/ladder.hpp"

namespace wqt::star {

class GnsResult {
 public:
  GnsResult(std::vector<CMat> basis, CMat u_pos, Eigen::VectorXd lambda_pos,
            std::vector<CMat> ideal_basis)
      : basis_(std::move(basis)),
        u_pos_(std::move(u_pos)),
        lambda_pos_(std::move(lambda_pos)),
        ideal_basis_(std::move(ideal_basis)),
        solver_(basis_) {}

  int algebra_dim() const { return static_cast<int>(basis_.size()); }
  int hilbert_dim() const { return static_cast<int>(lambda_pos_.size()); }
  int ideal_dim() const { return static_cast<int>(ideal_basis_.size()); }
  const std::vector<CMat>& ideal_basis() const { return ideal_basis_; }

  // Coordinates of the class [c] in the orthonormal quotient basis.
  CVec class_coords(const CMat& c) const {
    auto [v, resid] = solver_.coordinates(c);
    if (resid > 1e-8 * std::max(1.0, max_abs(c))) {
      throw std::invalid_argument("element does not lie in the algebra span");
    }
    return lambda_pos_.cwiseSqrt().cast<Complex>().asDiagonal() *
           (u_pos_.adjoint() * v);
  }

  // Matrix of the representation A[B] = [AB] on the quotient.
  CMat rep_of(const CMat& a) const {
    CMat left(algebra_dim(), algebra_dim());
    for (int j = 0; j < algebra_dim(); ++j) {
      auto [c, resid] = solver_.coordinates(a * basis_[j]);
      if (resid > 1e-8 * std::max(1.0, max_abs(a))) {
        throw std::invalid_argument("representation requires a product-closed basis");
      }
      left.col(j) = c;
    }
    const CVec sqrt_l = lambda_pos_.cwiseSqrt().cast<Complex>();
    return CMat(sqrt_l.asDiagonal() * (u_pos_.adjoint() * left * u_pos_) *
                sqrt_l.cwiseInverse().asDiagonal());
  }

  // Action on a single orthonormal quotient basis vector.
  CVec act(const CMat& a, int class_index) const {
    if (class_index < 0 || class_index >= hilbert_dim()) {
      throw std::invalid_argument("class index out of range");
    }
    return rep_of(a).col(class_index);
  }

  // Algebra element representing the i-th orthonormal quotient basis vector.
  CMat representative(int i) const {
    if (i < 0 || i >= hilbert_dim()) throw std::invalid_argument("index out of range");
    CMat out = CMat::Zero(basis_.front().rows(), basis_.front().cols());
    const double scale = 1.0 / std::sqrt(lambda_pos_(i));
    for (int j = 0; j < algebra_dim(); ++j) out += u_pos_(j, i) * scale * basis_[j];
    return out;
  }

  // Gram matrix of the chosen representatives; identity up to round-off.
  CMat quotient_gram(const StateFunctional& z) const {
    CMat g(hilbert_dim(), hilbert_dim());
    for (int i = 0; i < hilbert_dim(); ++i) {
      const CMat ri = representative(i);
      for (int j = 0; j < hilbert_dim(); ++j) {
        g(i, j) = z(CMat(ri.adjoint() * representative(j)));
      }
    }
    return g;
  }

  // Largest deviation of rep(B_i B_j) from rep(B_i) rep(B_j) over basis pairs.
  double multiplicativity_residual() const {
    double worst = 0.0;
    std::vector<CMat> reps;
    reps.reserve(basis_.size());
    for (const auto& b : basis_) reps.push_back(rep_of(b));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        const CMat lhs = rep_of(basis_[i] * basis_[j]);
        worst = std::max(worst, max_abs(lhs - reps[i] * reps[j]));
      }
    }
    return worst;
  }

 private:
  std::vector<CMat> basis_;
  CMat u_pos_;               // eigenvectors of the Gram form with positive eigenvalue
  Eigen::VectorXd lambda_pos_;  // the corresponding eigenvalues
  std::vector<CMat> ideal_basis_;
  detail::SpanSolver solver_;
};

inline GnsResult gns(const StateFunctional& z, const std::vector<CMat>& basis,
                     double tol = kIdentityTol) {
  if (z.is_zero()) throw std::invalid_argument("GNS construction requires a nonzero state");
  if (basis.empty()) throw std::invalid_argument("empty algebra basis");
  const int k = static_cast<int>(basis.size());
  CMat gram(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) gram(i, j) = z(CMat(basis[i].adjoint() * basis[j]));
  }
  gram = 0.5 * (gram + gram.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<CMat> es(gram);
  const double cutoff = tol * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());

  std::vector<CMat> ideal;
  std::vector<int> positive;
  for (int i = 0; i < k; ++i) {
    if (es.eigenvalues()(i) <= cutoff) {
      CMat elem = CMat::Zero(basis.front().rows(), basis.front().cols());
      for (int j = 0; j < k; ++j) elem += es.eigenvectors()(j, i) * basis[j];
      ideal.push_back(std::move(elem));
    } else {
      positive.push_back(i);
    }
  }
  CMat u_pos(k, static_cast<int>(positive.size()));
  Eigen::VectorXd lambda_pos(static_cast<int>(positive.size()));
  for (std::size_t c = 0; c < positive.size(); ++c) {
    u_pos.col(static_cast<int>(c)) = es.eigenvectors().col(positive[c]);
    lambda_pos(static_cast<int>(c)) = es.eigenvalues()(positive[c]);
  }
  return GnsResult(basis, std::move(u_pos), std::move(lambda_pos), std::move(ideal));
}

// Matrix-unit basis of the full n x n algebra, row-major.
inline std::vector<CMat> matrix_unit_basis(int n) {
  std::vector<CMat> out;
  out.reserve(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      CMat e = CMat::Zero(n, n);
      e(i, j) = 1.0;
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace wqt::star
