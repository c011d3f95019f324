#pragma once

// Lattice generated by a set of mutually compatible propositions of a weak
// system: close the set (together with the zero and unit propositions) under
// conjunction and adjunction, order by P <= Q iff P ^ Q = P, and let the
// registered negations provide the orthocomplementation.

#include "wqt/lattice/lattice.hpp"
#include "wqt/weak/system.hpp"

namespace wqt::lattice {

inline constexpr int kLatticeBudget = 4096;

inline FiniteLattice from_propositions(const weak::WeakSystem& system,
                                       std::vector<weak::Proposition> props) {
  const auto& space = system.space();
  // Closure must contain the bounds.
  props.push_back(weak::Proposition::zero(space));
  props.push_back(weak::Proposition::unit(space));

  std::vector<weak::Proposition> elements;
  auto find_table = [&elements](const std::vector<int>& table) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i].obs().table() == table) return static_cast<int>(i);
    }
    return -1;
  };
  for (const auto& p : props) {
    if (find_table(p.obs().table()) < 0) elements.push_back(p);
  }
  // Closed under negation?
  for (const auto& p : elements) {
    if (find_table(p.neg().table()) < 0) {
      throw std::invalid_argument("proposition set is not closed under negation: '" +
                                  p.name() + "'");
    }
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!weak::compatible(elements[i].obs(), elements[j].obs())) {
        throw weak::IncompatibleError("propositions '" + elements[i].name() +
                                      "' and '" + elements[j].name() +
                                      "' are incompatible");
      }
    }
  }

  // Close under conjunction and adjunction.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (const auto& derived :
           {weak::conjunction(elements[i], elements[j]),
            weak::adjunction(elements[i], elements[j])}) {
        if (find_table(derived.obs().table()) < 0) {
          if (static_cast<int>(elements.size()) >= kLatticeBudget) {
            throw std::runtime_error("proposition closure exceeds the lattice budget");
          }
          elements.push_back(derived);
        }
      }
    }
  }

  const int n = static_cast<int>(elements.size());
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : elements) {
    if (p.obs().is_filter()) {
      std::string name = "{";
      bool first = true;
      for (int s : p.obs().true_set()) {
        if (!first) name += ",";
        name += space->labels[s];
        first = false;
      }
      names.push_back(name + "}");
    } else {
      names.push_back(p.name());
    }
  }

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::int16_t> meet(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::int16_t> join(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto m = weak::conjunction(elements[i], elements[j]);
      const auto v = weak::adjunction(elements[i], elements[j]);
      const int mi = find_table(m.obs().table());
      const int vi = find_table(v.obs().table());
      if (mi < 0 || vi < 0) {
        throw std::logic_error("proposition closure is not operation-closed");
      }
      meet[static_cast<std::size_t>(i) * n + j] = static_cast<std::int16_t>(mi);
      join[static_cast<std::size_t>(i) * n + j] = static_cast<std::int16_t>(vi);
      leq[static_cast<std::size_t>(i) * n + j] = mi == i;
    }
  }
  int bottom = find_table(weak::Proposition::zero(space).obs().table());
  int top = find_table(weak::Proposition::unit(space).obs().table());
  std::vector<std::int16_t> ortho(n);
  for (int i = 0; i < n; ++i) {
    ortho[i] = static_cast<std::int16_t>(find_table(elements[i].neg().table()));
  }
  // from_tables re-validates meet/join against the order, so the map products
  // are cross-checked against the order-theoretic infima/suprema.
  return FiniteLattice::from_tables(std::move(names), std::move(leq), std::move(meet),
                                    std::move(join), bottom, top, std::move(ortho));
}

}  // namespace wqt::lattice
