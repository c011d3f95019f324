#pragma once

// Exhaustive enumeration of ortholattices with at most eight elements.
//
// An orthocomplementation pairs up the elements strictly between the bounds
// (no element can be its own complement), so such a lattice has 2k+2 elements
// with k <= 3 complement pairs. The middle order is enumerated as a strictly
// upper-triangular transitive relation (every poset admits such a labeling),
// the pairing as a perfect matching; each candidate is kept when the bounded
// order is a lattice and the matching is an order-reversing complementation.
// Results are deduplicated up to isomorphism.

#include "wqt/lattice/lattice.hpp"

namespace wqt::lattice {

inline std::vector<FiniteLattice> enumerate_ortholattices(int max_elements) {
  if (max_elements < 2 || max_elements > 8) {
    throw std::invalid_argument("ortholattice search supports 2..8 elements");
  }
  std::vector<FiniteLattice> found;

  auto matchings = [](int m) {
    std::vector<std::vector<int>> out;  // partner index per middle element
    std::vector<int> partner(m, -1);
    auto rec = [&](auto&& self) -> void {
      int first = -1;
      for (int i = 0; i < m; ++i) {
        if (partner[i] < 0) {
          first = i;
          break;
        }
      }
      if (first < 0) {
        out.push_back(partner);
        return;
      }
      for (int j = first + 1; j < m; ++j) {
        if (partner[j] >= 0) continue;
        partner[first] = j;
        partner[j] = first;
        self(self);
        partner[first] = -1;
        partner[j] = -1;
      }
    };
    rec(rec);
    return out;
  };

  for (int k = 0; 2 * k + 2 <= max_elements; ++k) {
    const int m = 2 * k;
    const int n = m + 2;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) slots.emplace_back(i, j);
    }
    const auto pairings = matchings(m);
    for (std::uint32_t bits = 0; bits < (1u << slots.size()); ++bits) {
      std::vector<std::uint8_t> rel(m * m, 0);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (bits >> s & 1) rel[slots[s].first * m + slots[s].second] = 1;
      }
      bool transitive = true;
      for (int i = 0; i < m && transitive; ++i) {
        for (int j = 0; j < m && transitive; ++j) {
          if (!rel[i * m + j]) continue;
          for (int l = 0; l < m; ++l) {
            if (rel[j * m + l] && !rel[i * m + l]) {
              transitive = false;
              break;
            }
          }
        }
      }
      if (!transitive) continue;

      // Bounded extension: indices 0..m-1 middle, m bottom, m+1 top.
      std::vector<std::pair<int, int>> less_pairs;
      for (int i = 0; i < m; ++i) {
        less_pairs.emplace_back(m, i);
        less_pairs.emplace_back(i, m + 1);
        for (int j = 0; j < m; ++j) {
          if (rel[i * m + j]) less_pairs.emplace_back(i, j);
        }
      }
      less_pairs.emplace_back(m, m + 1);

      std::vector<std::string> names;
      for (int i = 0; i < m; ++i) names.push_back("x" + std::to_string(i));
      names.push_back("0");
      names.push_back("1");

      for (const auto& partner : pairings) {
        std::vector<std::pair<int, int>> ortho_pairs;
        for (int i = 0; i < m; ++i) {
          if (partner[i] > i) ortho_pairs.emplace_back(i, partner[i]);
        }
        ortho_pairs.emplace_back(m, m + 1);
        FiniteLattice lat;
        try {
          lat = FiniteLattice::from_order(names, less_pairs, ortho_pairs);
        } catch (const std::invalid_argument&) {
          continue;  // not a lattice or not an orthocomplementation
        }
        bool duplicate = false;
        for (const auto& seen : found) {
          if (is_isomorphic(seen, lat)) {
            duplicate = true;
            break;
          }
        }
        if (!duplicate) found.push_back(std::move(lat));
      }
    }
  }
  return found;
}

}  // namespace wqt::lattice
