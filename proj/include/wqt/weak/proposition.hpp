#pragma once

// Proposition calculus: idempotent two-outcome observables paired with an
// explicit negation. Conjunction of a compatible pair is the map product;
// adjunction goes through De Morgan on the negations.
//
// The negation partner of a derived proposition is computed for filter
// propositions (complement of the true-set); for non-filter maps no general
// rule derives a partner, so the calculus refuses rather than guessing.

#include "wqt/weak/observable.hpp"

namespace wqt::weak {

struct IncompatibleError : std::invalid_argument {
  explicit IncompatibleError(const std::string& what) : std::invalid_argument(what) {}
};

// Weak regime: conjunction/adjunction only for compatible pairs. Enriched
// regime: incompatible pairs are meaningful but live in a lattice completion,
// not in the map calculus; see lattice/from_propositions.hpp.
enum class Regime { Weak, Enriched };

class Proposition {
 public:
  Proposition(Observable obs, Observable neg)
      : obs_(std::move(obs)), neg_(std::move(neg)) {
    if (!same_space(obs_.space(), neg_.space())) {
      throw std::invalid_argument("proposition and negation need one state space");
    }
  }

  const Observable& obs() const { return obs_; }
  const Observable& neg() const { return neg_; }
  const std::string& name() const { return obs_.name(); }

  Proposition negation() const { return Proposition(neg_, obs_); }

  static Proposition filter(const SpacePtr& space, std::string name,
                            const std::vector<std::string>& true_labels) {
    std::vector<std::string> rest;
    for (const auto& l : space->labels) {
      if (l == space->labels[space->zero]) continue;
      if (std::find(true_labels.begin(), true_labels.end(), l) == true_labels.end()) {
        rest.push_back(l);
      }
    }
    return Proposition(Observable::filter(space, name, true_labels),
                       Observable::filter(space, "not-" + name, rest));
  }

  static Proposition unit(const SpacePtr& space) {
    return Proposition(Observable::unit(space), Observable::zero(space));
  }

  static Proposition zero(const SpacePtr& space) {
    return Proposition(Observable::zero(space), Observable::unit(space));
  }

 private:
  Observable obs_;
  Observable neg_;
};

namespace detail {

inline Observable filter_from_true_set(const SpacePtr& space, std::string name,
                                       const std::vector<int>& trues) {
  std::vector<std::string> labels;
  for (int i : trues) labels.push_back(space->labels[i]);
  return Observable::filter(space, std::move(name), labels);
}

}  // namespace detail

inline Proposition conjunction(const Proposition& p1, const Proposition& p2,
                               Regime regime = Regime::Weak) {
  if (!compatible(p1.obs(), p2.obs())) {
    if (regime == Regime::Enriched) {
      throw IncompatibleError(
          "conjunction of incompatible propositions '" + p1.name() + "', '" +
          p2.name() +
          "' is not a map; the enriched meet lives in the proposition lattice");
    }
    throw IncompatibleError("propositions '" + p1.name() + "' and '" + p2.name() +
                            "' are incompatible");
  }
  Observable prod = compose(p1.obs(), p2.obs());
  if (prod.table() == p1.obs().table()) {
    return Proposition(p1.obs(), p1.neg());
  }
  if (prod.table() == p2.obs().table()) {
    return Proposition(p2.obs(), p2.neg());
  }
  if (p1.obs().is_filter() && p2.obs().is_filter()) {
    const auto& space = p1.obs().space();
    Observable meet = detail::filter_from_true_set(
        space, "(" + p1.name() + "&" + p2.name() + ")", prod.true_set());
    std::vector<int> complement;
    for (int i = 0; i < space->size(); ++i) {
      if (i != space->zero && prod.table()[i] != i) complement.push_back(i);
    }
    Observable neg = detail::filter_from_true_set(
        space, "not(" + p1.name() + "&" + p2.name() + ")", complement);
    return Proposition(std::move(meet), std::move(neg));
  }
  throw std::invalid_argument(
      "no rule derives the negation of a conjunction of non-filter propositions");
}

inline Proposition adjunction(const Proposition& p1, const Proposition& p2,
                              Regime regime = Regime::Weak) {
  Proposition meet = conjunction(p1.negation(), p2.negation(), regime);
  return meet.negation();
}

}  // namespace wqt::weak
