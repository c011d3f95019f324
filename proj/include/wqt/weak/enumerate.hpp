#pragma once

// Exhaustive enumeration of weak systems: all composition-closed sets of
// zero-fixing maps on n states + zero that contain the unit and the zero
// observable, up to relabeling of the non-zero states. Each emitted system
// carries its commutativity profile.
//
// The search walks closure-generated submonoids breadth-first, deduplicating
// by canonical form under state relabeling, so the output is deterministic:
// sorted by size, then by canonical encoding.

#include "wqt/weak/system.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace wqt::weak {

struct ModelProfile {
  int size = 0;
  int incompatible_pairs = 0;
  bool commutative() const { return incompatible_pairs == 0; }
};

struct EnumeratedModel {
  WeakSystem system;
  ModelProfile profile;
};

namespace detail {

// Maps on {0..n-1, o=n} fixing o, identified by their images on the non-zero
// states (base n+1 encoding).
class MapUniverse {
 public:
  explicit MapUniverse(int n) : n_(n) {
    std::vector<int> images(n, 0);
    while (true) {
      codes_.push_back(code_of(images));
      index_of_code_[codes_.back()] = static_cast<int>(images_.size());
      images_.push_back(images);
      int pos = n - 1;
      while (pos >= 0 && images[pos] == n) images[pos--] = 0;
      if (pos < 0) break;
      ++images[pos];
    }
  }

  int size() const { return static_cast<int>(images_.size()); }
  int n_states() const { return n_; }
  const std::vector<int>& images(int m) const { return images_[m]; }

  std::uint64_t code_of(const std::vector<int>& images) const {
    std::uint64_t code = 0;
    for (int i = 0; i < n_; ++i) code = code * (n_ + 1) + images[i];
    return code;
  }

  int compose(int a, int b) const {  // a after b
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) {
      const int mid = images_[b][i];
      out[i] = mid == n_ ? n_ : images_[a][mid];
    }
    return index_of_code_.at(code_of(out));
  }

  // Conjugation by a permutation of the non-zero states. `perm[i]` is the new
  // name of state i; the zero state stays put.
  int relabel(int m, const std::vector<int>& perm,
              const std::vector<int>& perm_inv) const {
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) {
      const int v = images_[m][perm_inv[i]];
      out[i] = v == n_ ? n_ : perm[v];
    }
    return index_of_code_.at(code_of(out));
  }

  int identity_index() const {
    std::vector<int> images(n_);
    for (int i = 0; i < n_; ++i) images[i] = i;
    return index_of_code_.at(code_of(images));
  }

  int zero_index() const {
    return index_of_code_.at(code_of(std::vector<int>(n_, n_)));
  }

 private:
  int n_;
  std::vector<std::vector<int>> images_;
  std::vector<std::uint64_t> codes_;
  std::map<std::uint64_t, int> index_of_code_;
};

inline std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Smallest relabeled image of the monoid, as a sorted vector of map indices.
inline std::vector<int> canonical_form(const MapUniverse& uni,
                                       const std::vector<int>& monoid,
                                       const std::vector<std::vector<int>>& perms) {
  std::vector<int> best;
  for (const auto& perm : perms) {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    std::vector<int> image;
    image.reserve(monoid.size());
    for (int m : monoid) image.push_back(uni.relabel(m, perm, inv));
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = std::move(image);
  }
  return best;
}

// Closure under composition; empty result signals the budget was exceeded.
inline std::vector<int> close_monoid(const MapUniverse& uni, std::vector<int> seed,
                                     int max_obs) {
  std::set<int> members(seed.begin(), seed.end());
  std::vector<int> worklist(members.begin(), members.end());
  while (!worklist.empty()) {
    const int a = worklist.back();
    worklist.pop_back();
    std::vector<int> snapshot(members.begin(), members.end());
    for (int b : snapshot) {
      for (int c : {uni.compose(a, b), uni.compose(b, a)}) {
        if (members.insert(c).second) {
          if (static_cast<int>(members.size()) > max_obs) return {};
          worklist.push_back(c);
        }
      }
    }
  }
  return {members.begin(), members.end()};
}

}  // namespace detail

inline std::vector<EnumeratedModel> enumerate_models(int n_states, int max_obs) {
  if (n_states < 1 || n_states > 5) {
    throw std::invalid_argument("enumerate_models supports 1..5 states");
  }
  if (max_obs < 2 || max_obs > 64) {
    throw std::invalid_argument("enumerate_models supports observable budgets 2..64");
  }
  constexpr int kResultBudget = 100000;

  const detail::MapUniverse uni(n_states);
  const auto perms = detail::permutations_of(n_states);
  const int id = uni.identity_index();
  const int zero = uni.zero_index();

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  {
    auto base = detail::close_monoid(uni, {id, zero}, max_obs);
    if (base.empty()) throw std::runtime_error("observable budget too small for {unit, zero}");
    seen.insert(detail::canonical_form(uni, base, perms));
    frontier.push_back(std::move(base));
  }
  std::size_t cursor = 0;
  while (cursor < frontier.size()) {
    const std::vector<int> current = frontier[cursor++];
    for (int m = 0; m < uni.size(); ++m) {
      if (std::binary_search(current.begin(), current.end(), m)) continue;
      std::vector<int> seeded = current;
      seeded.push_back(m);
      auto closed = detail::close_monoid(uni, std::move(seeded), max_obs);
      if (closed.empty()) continue;
      auto canon = detail::canonical_form(uni, closed, perms);
      if (seen.insert(std::move(canon)).second) {
        if (seen.size() > kResultBudget) {
          throw std::runtime_error("model enumeration budget exceeded");
        }
        frontier.push_back(std::move(closed));
      }
    }
  }

  // Deterministic output order: size, then canonical encoding.
  std::vector<std::vector<int>> canon(seen.begin(), seen.end());
  std::sort(canon.begin(), canon.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<std::string> labels;
  for (int i = 0; i < n_states; ++i) labels.push_back("z" + std::to_string(i + 1));
  labels.push_back("o");
  SpacePtr space = StateSpace::create(labels, "o");

  std::vector<EnumeratedModel> out;
  for (const auto& monoid : canon) {
    std::vector<Observable> observables;
    for (int m : monoid) {
      const auto& table = uni.images(m);
      std::vector<int> full(table.begin(), table.end());
      full.push_back(n_states);
      if (m == id) {
        observables.push_back(
            Observable("1l", space, std::move(full), Spectrum::of({"true"})));
      } else if (m == zero) {
        observables.push_back(
            Observable("0", space, std::move(full), Spectrum::of({"false"})));
      } else {
        std::string name = "f";
        for (int v : table) name += v == n_states ? "o" : std::to_string(v + 1);
        observables.push_back(
            Observable(std::move(name), space, std::move(full), Spectrum::unlabeled()));
      }
    }
    ModelProfile profile;
    profile.size = static_cast<int>(monoid.size());
    for (std::size_t i = 0; i < monoid.size(); ++i) {
      for (std::size_t j = i + 1; j < monoid.size(); ++j) {
        if (uni.compose(monoid[i], monoid[j]) != uni.compose(monoid[j], monoid[i])) {
          ++profile.incompatible_pairs;
        }
      }
    }
    out.push_back({WeakSystem(space, std::move(observables)), profile});
  }
  return out;
}

}  // namespace wqt::weak
