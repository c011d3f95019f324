#pragma once

// Prediction propositions of a symbolic dynamical system: "the orbit sits in
// cell c at step k" for k below a horizon. The admissible length-`horizon`
// itineraries are computed exactly by backward interval preimages; the
// propositions generate the field of all subsets of the admissible words, so
// the resulting lattice is the powerset with set complement as the
// orthocomplementation.

#include "wqt/infodyn/entropy.hpp"
#include "wqt/lattice/lattice.hpp"

#include <string>

namespace wqt::infodyn {

// Words over the partition alphabet whose cylinder sets have positive length.
inline std::vector<std::string> admissible_words(const MapSystem& sys,
                                                 const std::vector<double>& partition,
                                                 int horizon) {
  validate_partition(partition);
  if (horizon < 1 || horizon > 6) throw std::invalid_argument("horizon must lie in 1..6");
  const int cells = static_cast<int>(partition.size()) - 1;

  struct Suffix {
    std::string word;
    std::vector<Interval> set;
  };
  std::vector<Suffix> suffixes;
  for (int c = 0; c < cells; ++c) {
    suffixes.push_back({std::string(1, static_cast<char>('0' + c)),
                        {{partition[c], partition[c + 1]}}});
  }
  for (int step = 1; step < horizon; ++step) {
    std::vector<Suffix> extended;
    for (int c = 0; c < cells; ++c) {
      const Interval cell{partition[c], partition[c + 1]};
      for (const auto& suffix : suffixes) {
        std::vector<Interval> set;
        for (const auto& target : suffix.set) {
          for (const auto& pre : preimage(sys, target)) {
            const double lo = std::max(pre.lo, cell.lo);
            const double hi = std::min(pre.hi, cell.hi);
            if (hi - lo > 1e-12) set.push_back({lo, hi});
          }
        }
        if (!set.empty()) {
          extended.push_back({std::string(1, static_cast<char>('0' + c)) + suffix.word,
                              std::move(set)});
        }
      }
    }
    suffixes = std::move(extended);
  }
  std::vector<std::string> words;
  words.reserve(suffixes.size());
  for (const auto& s : suffixes) words.push_back(s.word);
  std::sort(words.begin(), words.end());
  return words;
}

inline lattice::FiniteLattice build_prediction_lattice(
    const MapSystem& sys, const std::vector<double>& partition, int horizon) {
  if (static_cast<int>(partition.size()) != 3) {
    throw std::invalid_argument("prediction lattice expects a binary partition");
  }
  const auto words = admissible_words(sys, partition, horizon);
  if (words.size() > 12) {
    throw std::runtime_error("prediction lattice budget exceeded: " +
                             std::to_string(words.size()) + " admissible words");
  }
  return lattice::FiniteLattice::powerset(words);
}

// Index of the element representing "cell c at step k" in the lattice
// returned by build_prediction_lattice.
inline int prediction_proposition(const lattice::FiniteLattice& lat,
                                  const std::vector<std::string>& words, int step,
                                  int cell) {
  int mask = 0;
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (words[w][step] == static_cast<char>('0' + cell)) mask |= 1 << w;
  }
  return mask;  // powerset elements are indexed by their member bitmask
}

}  // namespace wqt::infodyn
