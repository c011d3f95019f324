#pragma once

// Axiom-group verification for a finite-dimensional matrix *-algebra given by
// a spanning basis. Groups:
//   A1-A12  complex algebra laws (with unit) and internal multiplication
//   S1-S3   star involution laws and *-closure of the span
//   B1-B5   Banach norm laws (operator norm by default)
//   C1      ||A*A|| = ||A||^2
//   Z1-Z2   states as positive linear functionals
//
// Multilinear identities are evaluated on seeded random linear combinations of
// the basis, so a fixed seed makes the whole report reproducible. Closure
// failures are attributed to the axiom whose statement they invalidate:
// a basis product leaving the span is reported under A9 (multiplication is not
// internal), a basis adjoint leaving the span under S1 (the involution is not
// defined on the algebra).

#include "wqt/star/algebra.hpp"

#include <random>
#include <sstream>

namespace wqt::star {

enum class NormKind { Operator, Frobenius };

enum class LadderVerdict { Pass, Fail };

struct LadderEntry {
  std::string axiom;
  LadderVerdict verdict = LadderVerdict::Pass;
  std::string witness;  // empty on pass
};

struct LadderReport {
  std::vector<LadderEntry> entries;

  bool passed() const {
    for (const auto& e : entries) {
      if (e.verdict == LadderVerdict::Fail) return false;
    }
    return true;
  }

  const LadderEntry* find(const std::string& axiom) const {
    for (const auto& e : entries) {
      if (e.axiom == axiom) return &e;
    }
    return nullptr;
  }

  // All failing entries whose name starts with the given group prefix.
  std::vector<std::string> failing() const {
    std::vector<std::string> out;
    for (const auto& e : entries) {
      if (e.verdict == LadderVerdict::Fail) out.push_back(e.axiom);
    }
    return out;
  }
};

namespace detail {

class SpanSolver {
 public:
  explicit SpanSolver(const std::vector<CMat>& basis) : basis_(basis) {
    const int dim = static_cast<int>(basis.front().rows());
    CMat stacked(dim * dim, static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      stacked.col(static_cast<int>(j)) =
          Eigen::Map<const CVec>(basis[j].data(), dim * dim);
    }
    qr_.compute(stacked);
    stacked_ = std::move(stacked);
  }

  // Least-squares coordinates of m in the basis plus the reconstruction residual.
  std::pair<CVec, double> coordinates(const CMat& m) const {
    const int dim = static_cast<int>(m.rows());
    CVec v = Eigen::Map<const CVec>(m.data(), dim * dim);
    CVec c = qr_.solve(v);
    double resid = (stacked_ * c - v).cwiseAbs().maxCoeff();
    return {std::move(c), resid};
  }

  double span_residual(const CMat& m) const { return coordinates(m).second; }

 private:
  const std::vector<CMat>& basis_;
  CMat stacked_;
  Eigen::ColPivHouseholderQR<CMat> qr_;
};

inline CMat random_element(const std::vector<CMat>& basis, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat out = CMat::Zero(basis.front().rows(), basis.front().cols());
  for (const auto& b : basis) out += Complex(gauss(rng), gauss(rng)) * b;
  return out;
}

inline CMat random_density(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  return g * g.adjoint();
}

}  // namespace detail

inline LadderReport check_ladder(const std::vector<CMat>& basis, int samples,
                                 std::uint64_t seed,
                                 NormKind norm_kind = NormKind::Operator,
                                 double tol = kIdentityTol) {
  if (basis.empty()) throw std::invalid_argument("empty algebra basis");
  const int dim = static_cast<int>(basis.front().rows());
  for (const auto& b : basis) {
    if (b.rows() != dim || b.cols() != dim) {
      throw std::invalid_argument("basis elements must share one square dimension");
    }
  }
  if (samples < 3) samples = 3;

  LadderReport report;
  auto entry = [&report](const std::string& axiom) -> LadderEntry& {
    report.entries.push_back({axiom, LadderVerdict::Pass, ""});
    return report.entries.back();
  };
  auto fail = [](LadderEntry& e, const std::string& witness) {
    if (e.verdict == LadderVerdict::Pass) {
      e.verdict = LadderVerdict::Fail;
      e.witness = witness;
    }
  };

  const auto norm = [norm_kind](const CMat& m) {
    return norm_kind == NormKind::Operator ? operator_norm(m) : frobenius_norm(m);
  };

  detail::SpanSolver solver(basis);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  std::vector<CMat> pool;
  pool.reserve(samples);
  for (int i = 0; i < samples; ++i) pool.push_back(detail::random_element(basis, rng));
  std::vector<Complex> scalars;
  for (int i = 0; i < samples; ++i) scalars.emplace_back(unit(rng), unit(rng));

  auto rel_tol = [&](std::initializer_list<const CMat*> ms) {
    double scale = 1.0;
    for (const CMat* m : ms) scale = std::max(scale, max_abs(*m));
    return tol * scale * scale;
  };
  auto describe = [](int i) {
    std::ostringstream os;
    os << "sample #" << i;
    return os.str();
  };

  // --- A group -------------------------------------------------------------
  auto& a1 = entry("A1");
  auto& a2 = entry("A2");
  auto& a3 = entry("A3");
  auto& a4 = entry("A4");
  auto& a5 = entry("A5");
  auto& a6 = entry("A6");
  auto& a7 = entry("A7");
  auto& a8 = entry("A8");
  auto& a9 = entry("A9");
  auto& a10 = entry("A10");
  auto& a11 = entry("A11");
  auto& a12 = entry("A12");

  // Internal multiplication: every basis product must stay in the span.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const CMat prod = basis[i] * basis[j];
      const double resid = solver.span_residual(prod);
      if (resid > tol * std::max(1.0, max_abs(prod))) {
        std::ostringstream os;
        os << "product of basis elements (" << i << "," << j
           << ") leaves the span (residual " << resid << ")";
        fail(a9, os.str());
      }
    }
  }
  // Unit element: the identity matrix must lie in the span.
  {
    const double resid = solver.span_residual(identity(dim));
    if (resid > tol) fail(a10, "identity matrix is not in the span (residual " +
                                   std::to_string(resid) + ")");
  }

  for (int i = 0; i < samples; ++i) {
    const CMat& x = pool[i];
    const CMat& y = pool[(i + 1) % samples];
    const CMat& w = pool[(i + 2) % samples];
    const Complex alpha = scalars[i];
    const Complex beta = scalars[(i + 1) % samples];

    if (!approx_equal(x + (y + w), (x + y) + w, rel_tol({&x, &y, &w})))
      fail(a1, describe(i));
    if (!approx_equal(CMat(CMat::Zero(dim, dim) + x), x, rel_tol({&x})))
      fail(a2, describe(i));
    if (!approx_equal(CMat(x + (-x)), CMat(CMat::Zero(dim, dim)), rel_tol({&x})))
      fail(a3, describe(i));
    if (!approx_equal(x + y, y + x, rel_tol({&x, &y}))) fail(a4, describe(i));
    if (!approx_equal(CMat(1.0 * x), x, rel_tol({&x}))) fail(a5, describe(i));
    if (!approx_equal(CMat(alpha * (beta * x)), CMat((alpha * beta) * x), rel_tol({&x})))
      fail(a6, describe(i));
    if (!approx_equal(CMat((alpha + beta) * x), CMat(alpha * x + beta * x), rel_tol({&x})))
      fail(a7, describe(i));
    if (!approx_equal(CMat(alpha * (x + y)), CMat(alpha * x + alpha * y), rel_tol({&x, &y})))
      fail(a8, describe(i));
    if (!approx_equal(x * (y * w), (x * y) * w, rel_tol({&x, &y, &w})))
      fail(a9, describe(i));
    if (!approx_equal(identity(dim) * x, x, rel_tol({&x})) ||
        !approx_equal(x * identity(dim), x, rel_tol({&x})))
      fail(a10, describe(i));
    if (!approx_equal(CMat((alpha * x) * y), CMat(alpha * (x * y)), rel_tol({&x, &y})) ||
        !approx_equal(CMat(x * (alpha * y)), CMat(alpha * (x * y)), rel_tol({&x, &y})))
      fail(a11, describe(i));
    if (!approx_equal(x * (y + w), x * y + x * w, rel_tol({&x, &y, &w})) ||
        !approx_equal((y + w) * x, y * x + w * x, rel_tol({&x, &y, &w})))
      fail(a12, describe(i));
  }

  // --- S group -------------------------------------------------------------
  auto& s1 = entry("S1");
  auto& s2 = entry("S2");
  auto& s3 = entry("S3");

  for (std::size_t i = 0; i < basis.size(); ++i) {
    const CMat adj = basis[i].adjoint();
    const double resid = solver.span_residual(adj);
    if (resid > tol * std::max(1.0, max_abs(adj))) {
      std::ostringstream os;
      os << "adjoint of basis element " << i << " leaves the span (residual "
         << resid << "); the involution is not internal";
      fail(s1, os.str());
    }
  }
  for (int i = 0; i < samples; ++i) {
    const CMat& x = pool[i];
    const CMat& y = pool[(i + 1) % samples];
    const Complex alpha = scalars[i];
    const Complex beta = scalars[(i + 1) % samples];
    if (!approx_equal(CMat((alpha * x + beta * y).adjoint()),
                      CMat(std::conj(alpha) * x.adjoint() + std::conj(beta) * y.adjoint()),
                      rel_tol({&x, &y})))
      fail(s1, describe(i));
    if (!approx_equal(CMat((x * y).adjoint()), CMat(y.adjoint() * x.adjoint()),
                      rel_tol({&x, &y})))
      fail(s2, describe(i));
    if (!approx_equal(CMat(x.adjoint().adjoint()), x, rel_tol({&x})))
      fail(s3, describe(i));
  }

  // --- B group -------------------------------------------------------------
  auto& b1 = entry("B1");
  auto& b2 = entry("B2");
  auto& b3 = entry("B3");
  auto& b4 = entry("B4");
  auto& b5 = entry("B5");

  if (norm(CMat::Zero(dim, dim)) != 0.0) fail(b1, "norm of the zero element is nonzero");
  for (int i = 0; i < samples; ++i) {
    const CMat& x = pool[i];
    const CMat& y = pool[(i + 1) % samples];
    const Complex alpha = scalars[i];
    const double nx = norm(x);
    const double ny = norm(y);
    if (nx < 0.0 || (max_abs(x) > tol && nx == 0.0)) fail(b1, describe(i));
    if (std::abs(norm(CMat(alpha * x)) - std::abs(alpha) * nx) >
        tol * std::max(1.0, nx))
      fail(b1, describe(i));
    if (norm(x + y) > nx + ny + tol * std::max(1.0, nx + ny)) fail(b2, describe(i));
    if (norm(x * y) > nx * ny + tol * std::max(1.0, nx * ny)) fail(b3, describe(i));
    if (std::abs(norm(CMat(x.adjoint())) - nx) > tol * std::max(1.0, nx))
      fail(b4, describe(i));
  }
  // Completeness holds structurally: the span is a finite-dimensional subspace
  // of a complete matrix space.
  (void)b5;

  // --- C1 ------------------------------------------------------------------
  auto& c1 = entry("C1");
  for (int i = 0; i < samples; ++i) {
    const CMat& x = pool[i];
    const double lhs = norm(x.adjoint() * x);
    const double rhs = norm(x) * norm(x);
    if (std::abs(lhs - rhs) > tol * std::max(1.0, rhs)) {
      std::ostringstream os;
      os << describe(i) << ": ||A*A|| = " << lhs << " vs ||A||^2 = " << rhs;
      fail(c1, os.str());
    }
  }

  // --- Z group -------------------------------------------------------------
  auto& z1 = entry("Z1");
  auto& z2 = entry("Z2");
  for (int i = 0; i < samples; ++i) {
    const CMat rho = detail::random_density(dim, rng);
    const StateFunctional z{rho};
    const CMat& x = pool[i];
    const CMat& y = pool[(i + 1) % samples];
    const Complex alpha = scalars[i];
    const Complex beta = scalars[(i + 1) % samples];
    const double scale = std::max(1.0, max_abs(rho) * (max_abs(x) + max_abs(y)));
    if (std::abs(z(CMat(alpha * x + beta * y)) - (alpha * z(x) + beta * z(y))) >
        tol * scale * dim)
      fail(z1, describe(i));
    if (std::abs(z(CMat(x.adjoint())) - std::conj(z(x))) > tol * scale * dim)
      fail(z1, describe(i));
    const double positive = z(CMat(x.adjoint() * x)).real();
    if (positive < -tol * scale * dim) fail(z2, describe(i));
    if (std::abs(z(CMat(x.adjoint() * x)).imag()) > tol * scale * dim)
      fail(z2, describe(i));
  }

  return report;
}

}  // namespace wqt::star
