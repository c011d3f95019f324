#pragma once

// A finite family of matrix projectors, closed under complement and
// containing 0 and 1, viewed as a finite ortholattice. The order is
// P <= Q iff QP = P; meets are computed with the iterated-product limit from
// the projector calculus and must land back inside the family.

#include "wqt/lattice/lattice.hpp"
#include "wqt/star/projectors.hpp"

namespace wqt::lattice {

inline FiniteLattice projector_family_lattice(
    const std::vector<std::pair<std::string, star::Projector>>& family,
    double tol = star::kLimitTol, int max_iter = 200) {
  const int n = static_cast<int>(family.size());
  if (n == 0) throw std::invalid_argument("empty projector family");
  const int dim = family.front().second.dim();

  auto find = [&family, n](const star::CMat& m) {
    for (int i = 0; i < n; ++i) {
      if (star::approx_equal(family[i].second.matrix(), m, 1e-7)) return i;
    }
    return -1;
  };
  const int bottom = find(star::CMat::Zero(dim, dim));
  const int top = find(star::identity(dim));
  if (bottom < 0 || top < 0) {
    throw std::invalid_argument("projector family must contain 0 and the identity");
  }

  std::vector<std::string> names;
  for (const auto& [name, p] : family) names.push_back(name);

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::int16_t> meet(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::int16_t> join(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::int16_t> ortho(n, -1);
  for (int i = 0; i < n; ++i) {
    ortho[i] = static_cast<std::int16_t>(find(family[i].second.complement().matrix()));
    if (ortho[i] < 0) {
      throw std::invalid_argument("projector family is not closed under complement: '" +
                                  family[i].first + "'");
    }
    for (int j = 0; j < n; ++j) {
      const auto m =
          star::projector_meet(family[i].second, family[j].second, tol, max_iter);
      const auto v =
          star::projector_join(family[i].second, family[j].second, tol, max_iter);
      const int mi = find(m.matrix());
      const int vi = find(v.matrix());
      if (mi < 0 || vi < 0) {
        throw std::invalid_argument("projector family is not closed under meet/join: '" +
                                    family[i].first + "', '" + family[j].first + "'");
      }
      meet[static_cast<std::size_t>(i) * n + j] = static_cast<std::int16_t>(mi);
      join[static_cast<std::size_t>(i) * n + j] = static_cast<std::int16_t>(vi);
      leq[static_cast<std::size_t>(i) * n + j] = mi == i;
    }
  }
  return FiniteLattice::from_tables(std::move(names), std::move(leq), std::move(meet),
                                    std::move(join), bottom, top, std::move(ortho));
}

// The rank-1 qubit family {0, 1, |0><0|, |1><1|, |+><+|, |-><-|}.
inline std::vector<std::pair<std::string, star::Projector>> qubit_projector_family() {
  using star::CVec;
  CVec e0(2), e1(2), plus(2), minus(2);
  e0 << 1, 0;
  e1 << 0, 1;
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  return {
      {"0", star::Projector::zero(2)},
      {"1", star::Projector::unit(2)},
      {"z+", star::Projector::onto(e0)},
      {"z-", star::Projector::onto(e1)},
      {"x+", star::Projector::onto(plus)},
      {"x-", star::Projector::onto(minus)},
  };
}

}  // namespace wqt::lattice
