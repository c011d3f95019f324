#pragma once

// Composite weak systems. The product state space consists of pairs of
// non-zero factor states plus a single zero state; any pair containing a
// factor zero collapses to it. Observables of the composite include every
// product A(x)B of factor observables acting factor-wise, so the containments
// of the product monoid hold by construction. Additional whole-system
// observables and non-product states can be registered afterwards.

#include "wqt/weak/system.hpp"

namespace wqt::weak {

struct CompositeInfo {
  std::vector<std::string> left_labels;   // non-zero states of the first factor
  std::vector<std::string> right_labels;  // non-zero states of the second factor
  // Pair decomposition per composite state; the zero state decomposes as
  // (zero,zero) and registered extra states have no decomposition.
  std::vector<std::optional<std::pair<std::string, std::string>>> decomposition;
};

class CompositeSystem {
 public:
  CompositeSystem(WeakSystem system, CompositeInfo info)
      : system_(std::move(system)), info_(std::move(info)) {}

  const WeakSystem& system() const { return system_; }
  const CompositeInfo& info() const { return info_; }

  // Registers a whole-system observable and closes the table under
  // composition. Generated composites are named "(a*b)".
  CompositeSystem with_observable(const Observable& extra, int budget = 512) const;

  // Adds a state that is not a pair of factor states. Every observable maps it
  // to the zero state except the unit, which fixes it; overrides may redirect
  // individual observables.
  CompositeSystem with_state(
      const std::string& label,
      const std::vector<std::pair<std::string, std::string>>& overrides = {}) const;

 private:
  WeakSystem system_;
  CompositeInfo info_;
};

namespace detail {

inline std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace detail

inline CompositeSystem composite(const WeakSystem& s1, const WeakSystem& s2,
                                 const std::string& zero_label = "o") {
  const auto& sp1 = *s1.space();
  const auto& sp2 = *s2.space();

  CompositeInfo info;
  for (int i = 0; i < sp1.size(); ++i) {
    if (i != sp1.zero) info.left_labels.push_back(sp1.labels[i]);
  }
  for (int i = 0; i < sp2.size(); ++i) {
    if (i != sp2.zero) info.right_labels.push_back(sp2.labels[i]);
  }

  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pair_of;  // factor indices per product state
  for (int a = 0; a < sp1.size(); ++a) {
    if (a == sp1.zero) continue;
    for (int b = 0; b < sp2.size(); ++b) {
      if (b == sp2.zero) continue;
      labels.push_back(detail::pair_label(sp1.labels[a], sp2.labels[b]));
      pair_of.emplace_back(a, b);
      info.decomposition.push_back(std::make_pair(sp1.labels[a], sp2.labels[b]));
    }
  }
  labels.push_back(zero_label);
  info.decomposition.push_back(
      std::make_pair(sp1.labels[sp1.zero], sp2.labels[sp2.zero]));
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    if (labels[i] == zero_label) {
      throw std::invalid_argument("composite zero label collides with a pair label");
    }
  }
  SpacePtr space = StateSpace::create(labels, zero_label);
  const int zero_idx = space->zero;

  std::vector<Observable> observables;
  auto already_listed = [&observables](const std::vector<int>& table) {
    for (const auto& o : observables) {
      if (o.table() == table) return true;
    }
    return false;
  };
  for (const auto& a : s1.observables()) {
    for (const auto& b : s2.observables()) {
      std::vector<int> table(space->size(), zero_idx);
      for (std::size_t s = 0; s + 1 < static_cast<std::size_t>(space->size()); ++s) {
        const auto [fa, fb] = pair_of[s];
        const int ia = a.apply(fa);
        const int ib = b.apply(fb);
        if (ia == kUndefined || ib == kUndefined) {
          table[s] = kUndefined;
          continue;
        }
        if (ia == sp1.zero || ib == sp2.zero) {
          table[s] = zero_idx;
          continue;
        }
        const int target =
            space->index_of(detail::pair_label(sp1.labels[ia], sp2.labels[ib]));
        table[s] = target;
      }
      table[zero_idx] = zero_idx;
      if (already_listed(table)) continue;
      Spectrum spec = Spectrum::unlabeled();
      if (a.spectrum().labeled && b.spectrum().labeled) {
        std::vector<std::string> outcomes;
        for (const auto& oa : a.spectrum().outcomes) {
          for (const auto& ob : b.spectrum().outcomes) {
            outcomes.push_back("(" + oa + "," + ob + ")");
          }
        }
        spec = Spectrum::of(std::move(outcomes));
      }
      observables.emplace_back(a.name() + "(x)" + b.name(), space, std::move(table),
                               std::move(spec));
    }
  }

  // The zero and unit maps may have been reached first by a mixed pair; give
  // them the names of the canonical factor pairs.
  const int z1_idx = s1.zero_index();
  const int z2_idx = s2.zero_index();
  const int u1 = s1.unit_index();
  const int u2 = s2.unit_index();
  for (auto& o : observables) {
    if (z1_idx >= 0 && z2_idx >= 0 && o.is_zero_map()) {
      o = o.renamed(s1.obs(z1_idx).name() + "(x)" + s2.obs(z2_idx).name());
    } else if (u1 >= 0 && u2 >= 0 && o.is_identity()) {
      o = o.renamed(s1.obs(u1).name() + "(x)" + s2.obs(u2).name());
    }
  }

  // Lift registered proposition pairs of each factor through the unit of the
  // other factor.
  std::vector<PropositionPair> props;
  auto find_name = [&observables](const std::string& name) {
    for (std::size_t i = 0; i < observables.size(); ++i) {
      if (observables[i].name() == name) return static_cast<int>(i);
    }
    return -1;
  };
  if (u2 >= 0) {
    for (const auto& p : s1.propositions()) {
      const int lp = find_name(s1.obs(p.prop).name() + "(x)" + s2.obs(u2).name());
      const int ln = find_name(s1.obs(p.negation).name() + "(x)" + s2.obs(u2).name());
      if (lp >= 0 && ln >= 0) props.push_back({lp, ln});
    }
  }
  if (u1 >= 0) {
    for (const auto& p : s2.propositions()) {
      const int lp = find_name(s1.obs(u1).name() + "(x)" + s2.obs(p.prop).name());
      const int ln = find_name(s1.obs(u1).name() + "(x)" + s2.obs(p.negation).name());
      if (lp >= 0 && ln >= 0) props.push_back({lp, ln});
    }
  }

  return CompositeSystem(WeakSystem(space, std::move(observables), std::move(props)),
                         std::move(info));
}

namespace detail {

// Extends the observable list with all missing composites.
inline void close_under_composition(std::vector<Observable>& obs, int budget) {
  auto find_table = [&obs](const std::vector<int>& table) {
    for (std::size_t i = 0; i < obs.size(); ++i) {
      if (obs[i].table() == table) return static_cast<int>(i);
    }
    return -1;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = obs.size();
    for (std::size_t i = 0; i < count && !grew; ++i) {
      for (std::size_t j = 0; j < count && !grew; ++j) {
        Observable comp = weak::compose(obs[i], obs[j]);
        if (!comp.total()) continue;
        if (find_table(comp.table()) >= 0) continue;
        if (static_cast<int>(obs.size()) >= budget) {
          throw std::runtime_error("composite closure exceeds the observable budget");
        }
        obs.push_back(comp);
        grew = true;
      }
    }
  }
}

}  // namespace detail

inline CompositeSystem CompositeSystem::with_observable(const Observable& extra,
                                                        int budget) const {
  if (!same_space(extra.space(), system_.space())) {
    throw std::invalid_argument("extra observable lives on a different state space");
  }
  std::vector<Observable> obs(system_.observables());
  for (const auto& o : obs) {
    if (o.same_map(extra)) {
      throw std::invalid_argument("observable '" + extra.name() + "' is already listed");
    }
  }
  obs.push_back(extra);
  detail::close_under_composition(obs, budget);
  return CompositeSystem(
      WeakSystem(system_.space(), std::move(obs), system_.propositions(),
                 system_.families()),
      info_);
}

inline CompositeSystem CompositeSystem::with_state(
    const std::string& label,
    const std::vector<std::pair<std::string, std::string>>& overrides) const {
  std::vector<std::string> labels = system_.space()->labels;
  labels.push_back(label);
  SpacePtr space =
      StateSpace::create(labels, system_.space()->labels[system_.space()->zero]);
  const int new_idx = space->size() - 1;

  std::vector<Observable> obs;
  for (const auto& o : system_.observables()) {
    std::vector<int> table = o.table();
    int image = o.is_identity() ? new_idx : space->zero;
    for (const auto& [name, target] : overrides) {
      if (name == o.name()) {
        image = space->index_of(target);
        if (image < 0) throw std::invalid_argument("unknown override target: " + target);
      }
    }
    table.push_back(image);
    obs.emplace_back(o.name(), space, std::move(table), o.spectrum());
  }
  // Extensions need not compose to listed extensions (an involution squared
  // now fixes everything except the new state); re-close the monoid.
  detail::close_under_composition(obs, 512);
  CompositeInfo info = info_;
  info.decomposition.push_back(std::nullopt);
  return CompositeSystem(
      WeakSystem(space, std::move(obs), system_.propositions(), system_.families()),
      info);
}

// Tries to factor an observable of a composite as a product map acting on the
// two coordinates independently (with the zero-collapse convention).
inline bool is_product_map(const CompositeSystem& cs, const Observable& w) {
  const auto& info = cs.info();
  const auto& space = *cs.system().space();
  const int zero = space.zero;
  const int nl = static_cast<int>(info.left_labels.size());
  const int nr = static_cast<int>(info.right_labels.size());

  auto state_index = [&](int a, int b) {
    if (a == nl || b == nr) return zero;  // factor zero collapses
    return space.index_of(
        detail::pair_label(info.left_labels[a], info.right_labels[b]));
  };

  // Candidate factor actions; nl / nr stand for the factor zero states.
  std::vector<int> f(nl, -2), g(nr, -2);
  for (int a = 0; a < nl; ++a) {
    for (int b = 0; b < nr; ++b) {
      const int s = state_index(a, b);
      if (s < 0) return false;
      const int t = w.apply(s);
      if (t == kUndefined) return false;
      if (t == zero) continue;
      const auto& dec = info.decomposition[t];
      if (!dec) return false;
      int ta = -1, tb = -1;
      for (int i = 0; i < nl; ++i) {
        if (info.left_labels[i] == dec->first) ta = i;
      }
      for (int i = 0; i < nr; ++i) {
        if (info.right_labels[i] == dec->second) tb = i;
      }
      if (ta < 0 || tb < 0) return false;
      if (f[a] == -2) f[a] = ta;
      else if (f[a] != ta) return false;
      if (g[b] == -2) g[b] = tb;
      else if (g[b] != tb) return false;
    }
  }
  // Unconstrained coordinates may act as anything; try zero first, then
  // verify the candidate reproduces the table everywhere.
  for (int a = 0; a < nl; ++a) {
    if (f[a] == -2) f[a] = nl;
  }
  for (int b = 0; b < nr; ++b) {
    if (g[b] == -2) g[b] = nr;
  }
  for (int a = 0; a < nl; ++a) {
    for (int b = 0; b < nr; ++b) {
      if (w.apply(state_index(a, b)) != state_index(f[a], g[b])) return false;
    }
  }
  // Extra registered states are outside every product map's reach unless they
  // map to the zero state.
  for (std::size_t s = 0; s < info.decomposition.size(); ++s) {
    if (!info.decomposition[s] && w.apply(static_cast<int>(s)) != zero &&
        w.apply(static_cast<int>(s)) != static_cast<int>(s)) {
      return false;
    }
  }
  return true;
}

struct EntanglementReport {
  // Whole-system (non-product) observables incompatible with a part member.
  std::vector<std::pair<std::string, std::string>> incompatible_globals;
  // Composite states that are not pairs of factor states.
  std::vector<std::string> nonproduct_states;
  bool weak_entanglement = false;
};

// part1 / part2 are names of listed observables forming sub-monoids that act
// within their own factor.
inline EntanglementReport detect_entanglement(const CompositeSystem& cs,
                                              const std::vector<std::string>& part1,
                                              const std::vector<std::string>& part2) {
  const WeakSystem& sys = cs.system();
  auto resolve = [&sys](const std::vector<std::string>& names) {
    std::vector<int> out;
    for (const auto& n : names) {
      const int idx = sys.index_of(n);
      if (idx < 0) throw std::invalid_argument("unknown observable: " + n);
      out.push_back(idx);
    }
    return out;
  };
  const std::vector<int> p1 = resolve(part1);
  const std::vector<int> p2 = resolve(part2);
  for (const std::vector<int>* part : {&p1, &p2}) {
    for (int i : *part) {
      for (int j : *part) {
        Observable comp = compose(sys.obs(i), sys.obs(j));
        if (!comp.total()) continue;
        auto found = sys.find_map(comp.table());
        bool inside = false;
        if (found) {
          for (int k : *part) inside = inside || k == *found;
        }
        if (!inside) {
          throw std::invalid_argument("part containing '" + sys.obs(i).name() +
                                      "' is not closed under composition");
        }
      }
    }
  }

  EntanglementReport report;
  std::vector<int> members = p1;
  members.insert(members.end(), p2.begin(), p2.end());
  for (int w = 0; w < sys.size(); ++w) {
    if (is_product_map(cs, sys.obs(w))) continue;
    for (int m : members) {
      if (!compatible(sys.obs(w), sys.obs(m))) {
        report.incompatible_globals.emplace_back(sys.obs(w).name(), sys.obs(m).name());
      }
    }
  }
  for (std::size_t s = 0; s < cs.info().decomposition.size(); ++s) {
    if (!cs.info().decomposition[s]) {
      report.nonproduct_states.push_back(sys.space()->labels[s]);
    }
  }
  report.weak_entanglement = !report.incompatible_globals.empty();
  return report;
}

}  // namespace wqt::weak
