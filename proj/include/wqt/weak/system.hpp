#pragma once

// The observable monoid of a weak quantum system and the axiom checker.
//
// Verdicts cover:
//   I    every listed observable has an outcome set
//   II   observables are total maps on the states
//   III  the listed set is closed under composition
//   IV   a unit observable is listed
//   V    a zero observable is listed and every observable fixes the zero state
//   VIa  registered propositions are idempotent, negation is involutive and
//        orthogonal, the negation of the unit is the zero observable
//   VIb  after verification the proposition holds: P(z) != o implies
//        P(P(z)) = P(z) and notP(P(z)) = o
//   VIc  registered outcome families are orthogonal resolutions of the unit
//        commuting with their parent, and two observables with families are
//        compatible exactly when all their family members are
//
// Failures carry replayable witnesses (observable and state labels).

#include "wqt/weak/proposition.hpp"

#include <sstream>

namespace wqt::weak {

enum class Verdict { Pass, Fail, NotApplicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "not-applicable";
  }
}

struct AxiomEntry {
  std::string axiom;  // "I".."V", "VIa", "VIb", "VIc"
  Verdict verdict = Verdict::Pass;
  std::string witness;                       // human-readable description
  std::vector<std::string> witness_labels;   // observable / state labels to replay
};

struct AxiomReport {
  std::vector<AxiomEntry> entries;

  bool passed() const {
    for (const auto& e : entries) {
      if (e.verdict == Verdict::Fail) return false;
    }
    return true;
  }

  const AxiomEntry* find(std::string_view axiom) const {
    for (const auto& e : entries) {
      if (e.axiom == axiom) return &e;
    }
    return nullptr;
  }

  Verdict verdict_for(std::string_view axiom) const {
    const AxiomEntry* e = find(axiom);
    return e ? e->verdict : Verdict::NotApplicable;
  }

  // Aggregate verdict for the proposition axiom group.
  Verdict axiom_vi() const {
    bool any_fail = false;
    bool any_pass = false;
    for (const char* part : {"VIa", "VIb", "VIc"}) {
      switch (verdict_for(part)) {
        case Verdict::Fail: any_fail = true; break;
        case Verdict::Pass: any_pass = true; break;
        default: break;
      }
    }
    if (any_fail) return Verdict::Fail;
    return any_pass ? Verdict::Pass : Verdict::NotApplicable;
  }

  // Names of the failing axioms, VI parts collapsed to "VI".
  std::vector<std::string> failing_axioms() const {
    std::vector<std::string> out;
    for (const auto& e : entries) {
      if (e.verdict != Verdict::Fail) continue;
      std::string name = e.axiom.substr(0, 2) == "VI" ? "VI" : e.axiom;
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    }
    return out;
  }
};

struct PropositionPair {
  int prop = -1;
  int negation = -1;
};

// Outcome family of an observable: one proposition index per outcome label.
struct SpectralFamilyDecl {
  int parent = -1;
  std::vector<std::pair<std::string, int>> members;  // outcome -> proposition index
};

class WeakSystem {
 public:
  WeakSystem(SpacePtr space, std::vector<Observable> observables,
             std::vector<PropositionPair> propositions = {},
             std::vector<SpectralFamilyDecl> families = {})
      : space_(std::move(space)),
        observables_(std::move(observables)),
        propositions_(std::move(propositions)),
        families_(std::move(families)) {
    if (!space_) throw std::invalid_argument("weak system needs a state space");
    for (const auto& o : observables_) {
      if (!same_space(o.space(), space_)) {
        throw std::invalid_argument("observable '" + o.name() +
                                    "' lives on a different state space");
      }
    }
    for (std::size_t i = 0; i < observables_.size(); ++i) {
      for (std::size_t j = i + 1; j < observables_.size(); ++j) {
        if (observables_[i].name() == observables_[j].name()) {
          throw std::invalid_argument("duplicate observable name: " +
                                      observables_[i].name());
        }
        if (observables_[i].same_map(observables_[j])) {
          throw std::invalid_argument("observables '" + observables_[i].name() +
                                      "' and '" + observables_[j].name() +
                                      "' define the same map; observables are maps");
        }
      }
    }
    auto check_index = [this](int idx, const char* what) {
      if (idx < 0 || idx >= static_cast<int>(observables_.size())) {
        throw std::invalid_argument(std::string("bad ") + what + " index");
      }
    };
    for (const auto& p : propositions_) {
      check_index(p.prop, "proposition");
      check_index(p.negation, "negation");
    }
    for (const auto& f : families_) {
      check_index(f.parent, "family parent");
      for (const auto& [outcome, idx] : f.members) {
        check_index(idx, "family member");
        if (!negation_of(idx)) {
          throw std::invalid_argument(
              "family member '" + observables_[idx].name() +
              "' has no registered negation; members must be propositions");
        }
      }
    }
  }

  const SpacePtr& space() const { return space_; }
  const std::vector<Observable>& observables() const { return observables_; }
  const std::vector<PropositionPair>& propositions() const { return propositions_; }
  const std::vector<SpectralFamilyDecl>& families() const { return families_; }

  int size() const { return static_cast<int>(observables_.size()); }
  const Observable& obs(int i) const { return observables_.at(i); }

  int index_of(std::string_view name) const {
    for (std::size_t i = 0; i < observables_.size(); ++i) {
      if (observables_[i].name() == name) return static_cast<int>(i);
    }
    return -1;
  }

  std::optional<int> find_map(const std::vector<int>& table) const {
    for (std::size_t i = 0; i < observables_.size(); ++i) {
      if (observables_[i].table() == table) return static_cast<int>(i);
    }
    return std::nullopt;
  }

  int unit_index() const {
    for (std::size_t i = 0; i < observables_.size(); ++i) {
      if (observables_[i].is_identity()) return static_cast<int>(i);
    }
    return -1;
  }

  int zero_index() const {
    for (std::size_t i = 0; i < observables_.size(); ++i) {
      if (observables_[i].is_zero_map()) return static_cast<int>(i);
    }
    return -1;
  }

  // Composition with the outcome set resolved from the listed table when the
  // composite is listed; otherwise the result stays unlabeled.
  Observable compose(int i, int j) const {
    Observable raw = weak::compose(obs(i), obs(j));
    if (auto found = find_map(raw.table())) {
      return observables_[*found];
    }
    return raw;
  }

  std::optional<int> negation_of(int idx) const {
    for (const auto& p : propositions_) {
      if (p.prop == idx) return p.negation;
      if (p.negation == idx) return p.prop;
    }
    return std::nullopt;
  }

  Proposition proposition(int idx) const {
    auto neg = negation_of(idx);
    if (!neg) {
      throw std::invalid_argument("observable '" + obs(idx).name() +
                                  "' has no registered negation");
    }
    return Proposition(obs(idx), obs(*neg));
  }

 private:
  SpacePtr space_;
  std::vector<Observable> observables_;
  std::vector<PropositionPair> propositions_;
  std::vector<SpectralFamilyDecl> families_;
};

namespace detail {

inline std::string label_of(const WeakSystem& sys, int state) {
  return state == kUndefined ? std::string("<undefined>")
                             : sys.space()->labels[state];
}

inline void fail(AxiomEntry& e, const std::string& witness,
                 std::vector<std::string> labels) {
  if (e.verdict == Verdict::Fail) return;
  e.verdict = Verdict::Fail;
  e.witness = witness;
  e.witness_labels = std::move(labels);
}

}  // namespace detail

// Checks one registered outcome family; entries are named "VIc".
inline AxiomReport verify_spectral_family(const WeakSystem& sys,
                                          const SpectralFamilyDecl& fam) {
  AxiomReport report;
  AxiomEntry& e = report.entries.emplace_back();
  e.axiom = "VIc";
  const Observable& parent = sys.obs(fam.parent);

  // Pairwise orthogonality (and hence mutual compatibility).
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    for (std::size_t j = 0; j < fam.members.size(); ++j) {
      if (i == j) continue;
      const Observable& a = sys.obs(fam.members[i].second);
      const Observable& b = sys.obs(fam.members[j].second);
      if (!compose(a, b).is_zero_map()) {
        detail::fail(e,
                     "family of '" + parent.name() + "': members '" + a.name() +
                         "' and '" + b.name() + "' are not orthogonal",
                     {parent.name(), a.name(), b.name()});
      }
    }
  }
  // Commutation with the parent.
  for (const auto& [outcome, idx] : fam.members) {
    const Observable& member = sys.obs(idx);
    if (!compatible(parent, member)) {
      detail::fail(e,
                   "family member '" + member.name() +
                       "' does not commute with its parent '" + parent.name() + "'",
                   {parent.name(), member.name()});
    }
  }
  // The adjunction of all members is the unit. By De Morgan this is
  // equivalent to the product of all member negations being the zero map.
  if (!fam.members.empty() && e.verdict != Verdict::Fail) {
    Observable prod = Observable::unit(sys.space());
    bool defined = true;
    for (const auto& [outcome, idx] : fam.members) {
      auto neg = sys.negation_of(idx);
      if (!neg) { defined = false; break; }
      prod = compose(prod, sys.obs(*neg));
    }
    if (defined && !prod.is_zero_map()) {
      detail::fail(e,
                   "family of '" + parent.name() +
                       "': the adjunction of the members is not the unit",
                   {parent.name()});
    }
  }
  // Every declared outcome of the parent should have a member.
  if (parent.spectrum().labeled) {
    for (const auto& outcome : parent.spectrum().outcomes) {
      bool found = false;
      for (const auto& [label, idx] : fam.members) {
        if (label == outcome) found = true;
      }
      if (!found) {
        detail::fail(e,
                     "family of '" + parent.name() + "' has no member for outcome '" +
                         outcome + "'",
                     {parent.name(), outcome});
      }
    }
  }
  return report;
}

inline AxiomReport check_axioms(const WeakSystem& sys) {
  AxiomReport report;
  auto entry = [&report](const char* axiom) -> AxiomEntry& {
    AxiomEntry& e = report.entries.emplace_back();
    e.axiom = axiom;
    return e;
  };

  const int n_states = sys.space()->size();
  const int zero_state = sys.space()->zero;

  // I: outcome sets exist and are nonempty when declared.
  AxiomEntry& ax1 = entry("I");
  for (int i = 0; i < sys.size(); ++i) {
    const auto& spec = sys.obs(i).spectrum();
    if (spec.labeled && spec.outcomes.empty()) {
      detail::fail(ax1, "observable '" + sys.obs(i).name() + "' declares an empty outcome set",
                   {sys.obs(i).name()});
    }
  }

  // II: total maps.
  AxiomEntry& ax2 = entry("II");
  for (int i = 0; i < sys.size(); ++i) {
    for (int s = 0; s < n_states; ++s) {
      if (sys.obs(i).table()[s] == kUndefined) {
        detail::fail(ax2,
                     "observable '" + sys.obs(i).name() + "' is undefined on state '" +
                         sys.space()->labels[s] + "'",
                     {sys.obs(i).name(), sys.space()->labels[s]});
      }
    }
  }

  // III: closure under composition. Pairs whose composite inherits an
  // undefined entry are already covered by II and are skipped here.
  AxiomEntry& ax3 = entry("III");
  for (int i = 0; i < sys.size(); ++i) {
    for (int j = 0; j < sys.size(); ++j) {
      Observable comp = compose(sys.obs(i), sys.obs(j));
      if (!comp.total()) continue;
      if (!sys.find_map(comp.table())) {
        detail::fail(ax3,
                     "composite of '" + sys.obs(i).name() + "' after '" +
                         sys.obs(j).name() + "' is not listed",
                     {sys.obs(i).name(), sys.obs(j).name()});
      }
    }
  }

  // IV: a unit observable exists (its unit laws then hold as map identities).
  AxiomEntry& ax4 = entry("IV");
  if (sys.unit_index() < 0) {
    detail::fail(ax4, "no unit observable is listed", {});
  }

  // V: a zero observable exists and every observable fixes the zero state;
  // the absorption laws A0 = 0A = 0 then hold as map identities.
  AxiomEntry& ax5 = entry("V");
  if (sys.zero_index() < 0) {
    detail::fail(ax5, "no zero observable is listed", {});
  }
  for (int i = 0; i < sys.size(); ++i) {
    const int image = sys.obs(i).table()[zero_state];
    if (image != kUndefined && image != zero_state) {
      detail::fail(ax5,
                   "observable '" + sys.obs(i).name() +
                       "' moves the zero state to '" + detail::label_of(sys, image) + "'",
                   {sys.obs(i).name()});
    }
  }

  // VI: proposition structure, when registered.
  const bool have_props = !sys.propositions().empty();
  AxiomEntry& ax6a = entry("VIa");
  AxiomEntry& ax6b = entry("VIb");
  if (!have_props) {
    ax6a.verdict = Verdict::NotApplicable;
    ax6b.verdict = Verdict::NotApplicable;
  }
  std::vector<std::pair<int, int>> oriented;
  for (const auto& pair : sys.propositions()) {
    oriented.emplace_back(pair.prop, pair.negation);
    oriented.emplace_back(pair.negation, pair.prop);
  }
  for (const auto& [prop_idx, neg_idx] : oriented) {
    const Observable& p = sys.obs(prop_idx);
    const Observable& q = sys.obs(neg_idx);

    // Outcome sets: a proposition other than the unit/zero is {true,false};
    // the negation of the unit must be the zero observable.
    if (p.is_identity()) {
      if (!q.is_zero_map()) {
        detail::fail(ax6a, "the negation of the unit observable must be the zero observable",
                     {p.name(), q.name()});
      }
    } else if (!p.is_zero_map() && p.spectrum().labeled && !p.spectrum().boolean()) {
      detail::fail(ax6a,
                   "proposition '" + p.name() + "' must have outcomes {true,false}",
                   {p.name()});
    }

    for (int s = 0; s < n_states; ++s) {
      const int ps = p.apply(s);
      if (ps == kUndefined) continue;
      if (p.apply(ps) != ps) {
        detail::fail(ax6a,
                     "proposition '" + p.name() + "' is not idempotent at state '" +
                         sys.space()->labels[s] + "'",
                     {p.name(), sys.space()->labels[s]});
      }
      if (q.apply(ps) != kUndefined && ps != zero_state && q.apply(ps) != zero_state) {
        detail::fail(ax6a,
                     "'" + q.name() + "' does not annihilate the range of '" + p.name() +
                         "' at state '" + sys.space()->labels[s] + "'",
                     {p.name(), q.name(), sys.space()->labels[s]});
      }
      if (q.apply(s) != kUndefined && p.apply(q.apply(s)) != zero_state) {
        detail::fail(ax6a,
                     "'" + p.name() + "' composed with '" + q.name() +
                         "' is not the zero observable at state '" +
                         sys.space()->labels[s] + "'",
                     {p.name(), q.name(), sys.space()->labels[s]});
      }
    }

    // VIb, operationally: a state passing verification satisfies the
    // proposition with certainty.
    for (int s = 0; s < n_states; ++s) {
      const int ps = p.apply(s);
      if (ps == kUndefined || ps == zero_state) continue;
      const bool stable = p.apply(ps) == ps;
      const bool excluded = q.apply(ps) == zero_state;
      if (!stable || !excluded) {
        detail::fail(ax6b,
                     "after verifying '" + p.name() + "' in state '" +
                         sys.space()->labels[s] + "' the proposition is not certain",
                     {p.name(), sys.space()->labels[s]});
      }
    }
  }

  // VIc: registered outcome families.
  AxiomEntry& ax6c = entry("VIc");
  if (sys.families().empty()) {
    ax6c.verdict = Verdict::NotApplicable;
  }
  for (const auto& fam : sys.families()) {
    AxiomReport sub = verify_spectral_family(sys, fam);
    for (const auto& e : sub.entries) {
      if (e.verdict == Verdict::Fail && ax6c.verdict != Verdict::Fail) {
        ax6c.verdict = Verdict::Fail;
        ax6c.witness = e.witness;
        ax6c.witness_labels = e.witness_labels;
      }
    }
  }
  // Cross-family criterion: parents are compatible exactly when all their
  // family members are pairwise compatible.
  for (std::size_t i = 0; i < sys.families().size() && ax6c.verdict != Verdict::Fail;
       ++i) {
    for (std::size_t j = i + 1; j < sys.families().size(); ++j) {
      const auto& fa = sys.families()[i];
      const auto& fb = sys.families()[j];
      const bool parents = compatible(sys.obs(fa.parent), sys.obs(fb.parent));
      bool members = true;
      for (const auto& [oa, ia] : fa.members) {
        for (const auto& [ob, ib] : fb.members) {
          if (!compatible(sys.obs(ia), sys.obs(ib))) members = false;
        }
      }
      if (parents != members) {
        detail::fail(ax6c,
                     "observables '" + sys.obs(fa.parent).name() + "' and '" +
                         sys.obs(fb.parent).name() +
                         "' violate the family compatibility criterion",
                     {sys.obs(fa.parent).name(), sys.obs(fb.parent).name()});
      }
    }
  }

  return report;
}

}  // namespace wqt::weak
