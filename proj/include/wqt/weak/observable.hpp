#pragma once

// Weak quantum systems: a finite state set with a designated zero state, acted
// on by observables that are plain maps on the states. Every observable
// carries an outcome set; propositions are two-outcome idempotents with an
// explicit negation partner.
//
// Maps may be partial (an entry can be left undefined); totality is what the
// mapping axiom demands and the checker reports a violation rather than the
// constructor rejecting it.

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wqt::weak {

inline constexpr int kUndefined = -1;

struct StateSpace {
  std::vector<std::string> labels;
  int zero = -1;

  static std::shared_ptr<const StateSpace> create(std::vector<std::string> labels,
                                                  std::string_view zero_label) {
    StateSpace s;
    s.labels = std::move(labels);
    for (std::size_t i = 0; i < s.labels.size(); ++i) {
      for (std::size_t j = i + 1; j < s.labels.size(); ++j) {
        if (s.labels[i] == s.labels[j]) {
          throw std::invalid_argument("duplicate state label: " + s.labels[i]);
        }
      }
    }
    s.zero = s.index_of(zero_label);
    if (s.zero < 0) {
      throw std::invalid_argument("zero state '" + std::string(zero_label) +
                                  "' is not among the states");
    }
    return std::make_shared<const StateSpace>(std::move(s));
  }

  int index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) return static_cast<int>(i);
    }
    return -1;
  }

  int size() const { return static_cast<int>(labels.size()); }

  bool same_as(const StateSpace& other) const {
    return zero == other.zero && labels == other.labels;
  }
};

using SpacePtr = std::shared_ptr<const StateSpace>;

inline bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

// Outcome set of an observable. `labeled == false` marks a composite whose
// outcome set exists but has not been named (no rule assigns outcomes to an
// unlisted product).
struct Spectrum {
  std::vector<std::string> outcomes;  // kept sorted and unique
  bool labeled = true;

  static Spectrum of(std::vector<std::string> outcomes) {
    Spectrum s;
    s.outcomes = std::move(outcomes);
    std::sort(s.outcomes.begin(), s.outcomes.end());
    s.outcomes.erase(std::unique(s.outcomes.begin(), s.outcomes.end()),
                     s.outcomes.end());
    return s;
  }
  static Spectrum unlabeled() {
    Spectrum s;
    s.labeled = false;
    return s;
  }
  bool boolean() const {
    return labeled && outcomes.size() == 2 && outcomes[0] == "false" &&
           outcomes[1] == "true";
  }
};

class Observable {
 public:
  Observable(std::string name, SpacePtr space, std::vector<int> table,
             Spectrum spectrum)
      : name_(std::move(name)),
        space_(std::move(space)),
        table_(std::move(table)),
        spectrum_(std::move(spectrum)) {
    if (!space_) throw std::invalid_argument("observable needs a state space");
    if (static_cast<int>(table_.size()) != space_->size()) {
      throw std::invalid_argument("observable '" + name_ +
                                  "': map table size does not match the state space");
    }
    for (int v : table_) {
      if (v != kUndefined && (v < 0 || v >= space_->size())) {
        throw std::invalid_argument("observable '" + name_ +
                                    "': map target outside the state space");
      }
    }
  }

  const std::string& name() const { return name_; }
  const SpacePtr& space() const { return space_; }
  const std::vector<int>& table() const { return table_; }
  const Spectrum& spectrum() const { return spectrum_; }

  int apply(int state) const {
    if (state == kUndefined) return kUndefined;
    return table_.at(static_cast<std::size_t>(state));
  }

  bool total() const {
    return std::find(table_.begin(), table_.end(), kUndefined) == table_.end();
  }

  bool same_map(const Observable& other) const { return table_ == other.table_; }

  bool is_identity() const {
    for (int i = 0; i < space_->size(); ++i) {
      if (table_[i] != i) return false;
    }
    return true;
  }

  bool is_zero_map() const {
    for (int v : table_) {
      if (v != space_->zero) return false;
    }
    return true;
  }

  bool fixes_zero() const { return table_[space_->zero] == space_->zero; }

  // A filter acts as the identity on its true-set and kills everything else.
  bool is_filter() const {
    for (int i = 0; i < space_->size(); ++i) {
      if (table_[i] != i && table_[i] != space_->zero) return false;
    }
    return true;
  }

  // Non-zero states on which a filter acts as the identity.
  std::vector<int> true_set() const {
    std::vector<int> out;
    for (int i = 0; i < space_->size(); ++i) {
      if (i != space_->zero && table_[i] == i) out.push_back(i);
    }
    return out;
  }

  Observable renamed(std::string name) const {
    return Observable(std::move(name), space_, table_, spectrum_);
  }

  static Observable unit(const SpacePtr& space, std::string name = "1l") {
    std::vector<int> t(space->size());
    for (int i = 0; i < space->size(); ++i) t[i] = i;
    return Observable(std::move(name), space, std::move(t), Spectrum::of({"true"}));
  }

  static Observable zero(const SpacePtr& space, std::string name = "0") {
    std::vector<int> t(space->size(), space->zero);
    return Observable(std::move(name), space, std::move(t), Spectrum::of({"false"}));
  }

  // Filter observable: identity on `true_labels`, zero elsewhere.
  static Observable filter(const SpacePtr& space, std::string name,
                           const std::vector<std::string>& true_labels) {
    std::vector<int> t(space->size(), space->zero);
    for (const auto& label : true_labels) {
      const int idx = space->index_of(label);
      if (idx < 0) throw std::invalid_argument("unknown state label: " + label);
      t[idx] = idx;
    }
    return Observable(std::move(name), space, std::move(t),
                      Spectrum::of({"true", "false"}));
  }

 private:
  std::string name_;
  SpacePtr space_;
  std::vector<int> table_;
  Spectrum spectrum_;
};

// Map composition: (a after b)(z) = a(b(z)). Undefined entries propagate.
// The outcome set of an anonymous composite stays unlabeled.
inline Observable compose(const Observable& a, const Observable& b) {
  if (!same_space(a.space(), b.space())) {
    throw std::invalid_argument("cannot compose observables on different state spaces");
  }
  std::vector<int> t(a.space()->size());
  for (int i = 0; i < a.space()->size(); ++i) t[i] = a.apply(b.apply(i));
  return Observable("(" + a.name() + "*" + b.name() + ")", a.space(), std::move(t),
                    Spectrum::unlabeled());
}

inline bool compatible(const Observable& a, const Observable& b) {
  if (!same_space(a.space(), b.space())) {
    throw std::invalid_argument("compatibility needs a common state space");
  }
  return compose(a, b).table() == compose(b, a).table();
}

inline bool complementary(const Observable& a, const Observable& b) {
  return !compatible(a, b);
}

}  // namespace wqt::weak
