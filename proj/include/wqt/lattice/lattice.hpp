#pragma once

// Finite bounded lattices with optional orthocomplementation, given by
// explicit order and operation tables. Construction cross-checks that the
// meet/join tables are the infimum/supremum of the order, so a FiniteLattice
// in hand is always a genuine lattice; the law checkers then classify it.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wqt::lattice {

class FiniteLattice {
 public:
  std::vector<std::string> names;
  int n = 0;
  std::vector<std::uint8_t> leq;   // row-major n*n, leq[a*n+b] == (a <= b)
  std::vector<std::int16_t> meet;  // row-major n*n
  std::vector<std::int16_t> join;
  int bottom = -1;
  int top = -1;
  std::optional<std::vector<std::int16_t>> ortho;

  bool less_eq(int a, int b) const { return leq[a * n + b] != 0; }
  bool strictly_less(int a, int b) const { return a != b && less_eq(a, b); }
  int meet_of(int a, int b) const { return meet[a * n + b]; }
  int join_of(int a, int b) const { return join[a * n + b]; }
  int ortho_of(int a) const {
    if (!ortho) throw std::logic_error("lattice has no orthocomplementation");
    return (*ortho)[a];
  }
  int index_of(std::string_view name) const {
    for (int i = 0; i < n; ++i) {
      if (names[i] == name) return i;
    }
    return -1;
  }

  // Builds the lattice from an order relation (any generating set of pairs;
  // the reflexive-transitive closure is taken). Meets and joins are computed
  // as infima/suprema and their existence is checked.
  static FiniteLattice from_order(std::vector<std::string> names,
                                  const std::vector<std::pair<int, int>>& less_pairs,
                                  std::vector<std::pair<int, int>> ortho_pairs = {});

  // Builds from explicit tables, validating everything.
  static FiniteLattice from_tables(std::vector<std::string> names,
                                   std::vector<std::uint8_t> leq,
                                   std::vector<std::int16_t> meet,
                                   std::vector<std::int16_t> join, int bottom, int top,
                                   std::optional<std::vector<std::int16_t>> ortho);

  // Powerset of an m-element universe ordered by inclusion, complement as
  // orthocomplementation. Element names render the member sets.
  static FiniteLattice powerset(const std::vector<std::string>& universe);

  // Full invariant check: order axioms, meet/join = inf/sup, absorption,
  // bounds, and the orthocomplementation laws when present.
  void validate() const;
};

struct PairWitness {
  int a = -1;
  int b = -1;
};

struct TripleWitness {
  int a = -1;
  int b = -1;
  int c = -1;
};

struct LatticeVerdict {
  bool distributive = true;
  std::optional<TripleWitness> distributivity_witness;
  bool absorption = true;  // the enriched absorption identities over all pairs
  std::optional<PairWitness> absorption_witness;
  bool boolean_local = true;  // sublattices generated by comparable ortho pairs are Boolean
  std::optional<PairWitness> boolean_local_witness;
  std::vector<PairWitness> meet_form_witnesses;  // a > (a^b) v (a^b') and same for b
  std::vector<PairWitness> join_form_witnesses;  // a < (a v b) ^ (a v b') or same for b
};

namespace detail {

inline void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace detail

inline void FiniteLattice::validate() const {
  detail::require(n >= 1, "lattice must be nonempty");
  detail::require(static_cast<int>(names.size()) == n, "name count mismatch");
  detail::require(static_cast<int>(leq.size()) == n * n, "order table size mismatch");
  detail::require(static_cast<int>(meet.size()) == n * n, "meet table size mismatch");
  detail::require(static_cast<int>(join.size()) == n * n, "join table size mismatch");
  for (int a = 0; a < n; ++a) {
    detail::require(less_eq(a, a), "order must be reflexive");
    for (int b = 0; b < n; ++b) {
      if (a != b) {
        detail::require(!(less_eq(a, b) && less_eq(b, a)), "order must be antisymmetric");
      }
      for (int c = 0; c < n; ++c) {
        if (less_eq(a, b) && less_eq(b, c)) {
          detail::require(less_eq(a, c), "order must be transitive");
        }
      }
    }
  }
  detail::require(bottom >= 0 && top >= 0, "bottom/top must be designated");
  for (int a = 0; a < n; ++a) {
    detail::require(less_eq(bottom, a), "bottom must lie below every element");
    detail::require(less_eq(a, top), "top must lie above every element");
  }
  // Cross-check: the meet/join tables agree with infimum/supremum of leq.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int m = meet_of(a, b);
      detail::require(m >= 0 && m < n, "meet table entry out of range");
      detail::require(less_eq(m, a) && less_eq(m, b), "meet must be a lower bound");
      const int j = join_of(a, b);
      detail::require(j >= 0 && j < n, "join table entry out of range");
      detail::require(less_eq(a, j) && less_eq(b, j), "join must be an upper bound");
      for (int c = 0; c < n; ++c) {
        if (less_eq(c, a) && less_eq(c, b)) {
          detail::require(less_eq(c, m),
                          "meet of '" + names[a] + "' and '" + names[b] +
                              "' is not the greatest lower bound");
        }
        if (less_eq(a, c) && less_eq(b, c)) {
          detail::require(less_eq(j, c),
                          "join of '" + names[a] + "' and '" + names[b] +
                              "' is not the least upper bound");
        }
      }
    }
  }
  if (ortho) {
    detail::require(static_cast<int>(ortho->size()) == n, "ortho table size mismatch");
    for (int a = 0; a < n; ++a) {
      const int ap = ortho_of(a);
      detail::require(ap >= 0 && ap < n, "ortho entry out of range");
      detail::require(ortho_of(ap) == a, "orthocomplementation must be involutive");
      detail::require(meet_of(a, ap) == bottom,
                      "'" + names[a] + "' must meet its complement in bottom");
      detail::require(join_of(a, ap) == top,
                      "'" + names[a] + "' must join its complement in top");
      for (int b = 0; b < n; ++b) {
        if (less_eq(a, b)) {
          detail::require(less_eq(ortho_of(b), ap),
                          "orthocomplementation must reverse the order");
        }
      }
    }
  }
}

inline FiniteLattice FiniteLattice::from_order(
    std::vector<std::string> names, const std::vector<std::pair<int, int>>& less_pairs,
    std::vector<std::pair<int, int>> ortho_pairs) {
  FiniteLattice lat;
  lat.names = std::move(names);
  lat.n = static_cast<int>(lat.names.size());
  const int n = lat.n;
  lat.leq.assign(n * n, 0);
  for (int a = 0; a < n; ++a) lat.leq[a * n + a] = 1;
  for (const auto& [a, b] : less_pairs) {
    detail::require(a >= 0 && a < n && b >= 0 && b < n, "order pair out of range");
    lat.leq[a * n + b] = 1;
  }
  // Reflexive-transitive closure (Warshall).
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a) {
      if (!lat.leq[a * n + k]) continue;
      for (int b = 0; b < n; ++b) {
        if (lat.leq[k * n + b]) lat.leq[a * n + b] = 1;
      }
    }
  }
  // Meets and joins as infima/suprema: the bound set must contain a greatest
  // (least) element.
  lat.meet.assign(n * n, -1);
  lat.join.assign(n * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> lower, upper;
      for (int c = 0; c < n; ++c) {
        if (lat.leq[c * n + a] && lat.leq[c * n + b]) lower.push_back(c);
        if (lat.leq[a * n + c] && lat.leq[b * n + c]) upper.push_back(c);
      }
      int m = -1;
      for (int c : lower) {
        bool greatest = true;
        for (int d : lower) greatest = greatest && lat.leq[d * n + c];
        if (greatest) m = c;
      }
      detail::require(m >= 0, "elements '" + lat.names[a] + "' and '" + lat.names[b] +
                                  "' have no meet");
      lat.meet[a * n + b] = static_cast<std::int16_t>(m);
      int j = -1;
      for (int c : upper) {
        bool least = true;
        for (int d : upper) least = least && lat.leq[c * n + d];
        if (least) j = c;
      }
      detail::require(j >= 0, "elements '" + lat.names[a] + "' and '" + lat.names[b] +
                                  "' have no join");
      lat.join[a * n + b] = static_cast<std::int16_t>(j);
    }
  }
  // Bottom and top.
  for (int a = 0; a < n; ++a) {
    bool is_bottom = true, is_top = true;
    for (int b = 0; b < n; ++b) {
      is_bottom = is_bottom && lat.leq[a * n + b];
      is_top = is_top && lat.leq[b * n + a];
    }
    if (is_bottom) lat.bottom = a;
    if (is_top) lat.top = a;
  }
  detail::require(lat.bottom >= 0, "order has no bottom element");
  detail::require(lat.top >= 0, "order has no top element");

  if (!ortho_pairs.empty()) {
    std::vector<std::int16_t> ortho(n, -1);
    for (const auto& [a, b] : ortho_pairs) {
      detail::require(a >= 0 && a < n && b >= 0 && b < n, "ortho pair out of range");
      ortho[a] = static_cast<std::int16_t>(b);
      ortho[b] = static_cast<std::int16_t>(a);
    }
    if (ortho[lat.bottom] == -1) ortho[lat.bottom] = static_cast<std::int16_t>(lat.top);
    if (ortho[lat.top] == -1) ortho[lat.top] = static_cast<std::int16_t>(lat.bottom);
    for (int a = 0; a < n; ++a) {
      detail::require(ortho[a] >= 0,
                      "element '" + lat.names[a] + "' has no orthocomplement");
    }
    lat.ortho = std::move(ortho);
  }
  lat.validate();
  return lat;
}

inline FiniteLattice FiniteLattice::from_tables(
    std::vector<std::string> names, std::vector<std::uint8_t> leq,
    std::vector<std::int16_t> meet, std::vector<std::int16_t> join, int bottom, int top,
    std::optional<std::vector<std::int16_t>> ortho) {
  FiniteLattice lat;
  lat.names = std::move(names);
  lat.n = static_cast<int>(lat.names.size());
  lat.leq = std::move(leq);
  lat.meet = std::move(meet);
  lat.join = std::move(join);
  lat.bottom = bottom;
  lat.top = top;
  lat.ortho = std::move(ortho);
  lat.validate();
  return lat;
}

inline FiniteLattice FiniteLattice::powerset(const std::vector<std::string>& universe) {
  const int m = static_cast<int>(universe.size());
  detail::require(m <= 12, "powerset lattice budget exceeded (more than 4096 elements)");
  const int n = 1 << m;
  FiniteLattice lat;
  lat.n = n;
  lat.names.reserve(n);
  for (int s = 0; s < n; ++s) {
    std::string name = "{";
    bool first = true;
    for (int b = 0; b < m; ++b) {
      if (s >> b & 1) {
        if (!first) name += ",";
        name += universe[b];
        first = false;
      }
    }
    name += "}";
    lat.names.push_back(std::move(name));
  }
  lat.leq.assign(static_cast<std::size_t>(n) * n, 0);
  lat.meet.resize(static_cast<std::size_t>(n) * n);
  lat.join.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      lat.leq[static_cast<std::size_t>(a) * n + b] = (a & b) == a;
      lat.meet[static_cast<std::size_t>(a) * n + b] = static_cast<std::int16_t>(a & b);
      lat.join[static_cast<std::size_t>(a) * n + b] = static_cast<std::int16_t>(a | b);
    }
  }
  lat.bottom = 0;
  lat.top = n - 1;
  std::vector<std::int16_t> ortho(n);
  for (int a = 0; a < n; ++a) ortho[a] = static_cast<std::int16_t>((n - 1) & ~a);
  lat.ortho = std::move(ortho);
  return lat;
}

// a > (a ^ b) v (a ^ b'), strictly.
inline bool strict_meet_relation(const FiniteLattice& lat, int a, int b) {
  const int rhs = lat.join_of(lat.meet_of(a, b), lat.meet_of(a, lat.ortho_of(b)));
  return lat.strictly_less(rhs, a);
}

// a < (a v b) ^ (a v b'), strictly.
inline bool strict_join_relation(const FiniteLattice& lat, int a, int b) {
  const int rhs = lat.meet_of(lat.join_of(a, b), lat.join_of(a, lat.ortho_of(b)));
  return lat.strictly_less(a, rhs);
}

namespace detail {

// Meet/join closure of a seed set inside the lattice.
inline std::vector<int> sublattice_closure(const FiniteLattice& lat,
                                           std::vector<int> seed) {
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  std::vector<std::uint8_t> in(lat.n, 0);
  for (int s : seed) in[s] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> members;
    for (int i = 0; i < lat.n; ++i) {
      if (in[i]) members.push_back(i);
    }
    for (int a : members) {
      for (int b : members) {
        for (int c : {lat.meet_of(a, b), lat.join_of(a, b)}) {
          if (!in[c]) {
            in[c] = 1;
            grew = true;
          }
        }
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < lat.n; ++i) {
    if (in[i]) out.push_back(i);
  }
  return out;
}

inline bool distributive_on(const FiniteLattice& lat, const std::vector<int>& members,
                            TripleWitness* witness) {
  for (int a : members) {
    for (int b : members) {
      for (int c : members) {
        const bool law1 =
            lat.meet_of(a, lat.join_of(b, c)) ==
            lat.join_of(lat.meet_of(a, b), lat.meet_of(a, c));
        const bool law2 =
            lat.join_of(a, lat.meet_of(b, c)) ==
            lat.meet_of(lat.join_of(a, b), lat.join_of(a, c));
        if (!law1 || !law2) {
          if (witness) *witness = {a, b, c};
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

// Exhaustive law tests: the enriched absorption identities over all pairs,
// distributivity over all triples, and the local Boolean condition (the
// sublattice generated by a comparable pair and its orthocomplements is
// Boolean) over all comparable pairs.
inline LatticeVerdict check_laws(const FiniteLattice& lat) {
  LatticeVerdict verdict;
  for (int a = 0; a < lat.n && verdict.absorption; ++a) {
    for (int b = 0; b < lat.n; ++b) {
      if (lat.meet_of(a, lat.join_of(a, b)) != a ||
          lat.meet_of(lat.join_of(a, b), a) != a ||
          lat.join_of(a, lat.meet_of(a, b)) != a ||
          lat.join_of(lat.meet_of(a, b), a) != a) {
        verdict.absorption = false;
        verdict.absorption_witness = PairWitness{a, b};
        break;
      }
    }
  }
  std::vector<int> all(lat.n);
  for (int i = 0; i < lat.n; ++i) all[i] = i;
  TripleWitness triple;
  if (!detail::distributive_on(lat, all, &triple)) {
    verdict.distributive = false;
    verdict.distributivity_witness = triple;
  }
  if (lat.ortho) {
    for (int a = 0; a < lat.n && verdict.boolean_local; ++a) {
      for (int b = 0; b < lat.n; ++b) {
        if (a == b || !lat.less_eq(a, b)) continue;
        auto sub = detail::sublattice_closure(
            lat, {a, b, lat.ortho_of(a), lat.ortho_of(b)});
        bool closed_under_ortho = true;
        for (int s : sub) {
          if (std::find(sub.begin(), sub.end(), lat.ortho_of(s)) == sub.end()) {
            closed_under_ortho = false;
          }
        }
        if (!closed_under_ortho || !detail::distributive_on(lat, sub, nullptr)) {
          verdict.boolean_local = false;
          verdict.boolean_local_witness = PairWitness{a, b};
          break;
        }
      }
    }
  }
  return verdict;
}

// Witness scan for the two non-distributivity patterns: the meet form needs
// both strict inequalities of a pair, the join form needs at least one.
// Witnesses are unordered pairs listed lexicographically.
inline LatticeVerdict classify_nondistributivity(const FiniteLattice& lat) {
  if (!lat.ortho) {
    throw std::invalid_argument("classification requires an orthocomplementation");
  }
  LatticeVerdict verdict = check_laws(lat);
  for (int a = 0; a < lat.n; ++a) {
    for (int b = a + 1; b < lat.n; ++b) {
      if (strict_meet_relation(lat, a, b) && strict_meet_relation(lat, b, a)) {
        verdict.meet_form_witnesses.push_back({a, b});
      }
      if (strict_join_relation(lat, a, b) || strict_join_relation(lat, b, a)) {
        verdict.join_form_witnesses.push_back({a, b});
      }
    }
  }
  return verdict;
}

// Order-reversed lattice: meets and joins exchanged, bounds swapped, the same
// orthocomplementation. Involutive by construction.
inline FiniteLattice dualize(const FiniteLattice& lat) {
  FiniteLattice dual;
  dual.names = lat.names;
  dual.n = lat.n;
  dual.leq.assign(static_cast<std::size_t>(lat.n) * lat.n, 0);
  for (int a = 0; a < lat.n; ++a) {
    for (int b = 0; b < lat.n; ++b) {
      dual.leq[static_cast<std::size_t>(a) * lat.n + b] = lat.less_eq(b, a);
    }
  }
  dual.meet = lat.join;
  dual.join = lat.meet;
  dual.bottom = lat.top;
  dual.top = lat.bottom;
  dual.ortho = lat.ortho;
  dual.validate();
  return dual;
}

// Lattice isomorphism (ortho-preserving when both carry one), by backtracking
// over degree-compatible assignments. Intended for small lattices.
inline bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.n != b.n || a.ortho.has_value() != b.ortho.has_value()) return false;
  const int n = a.n;
  auto degree = [](const FiniteLattice& l, int x) {
    int below = 0, above = 0;
    for (int y = 0; y < l.n; ++y) {
      below += l.less_eq(y, x);
      above += l.less_eq(x, y);
    }
    return std::pair{below, above};
  };
  std::vector<int> assign(n, -1), used(n, 0);
  auto compatible_pairwise = [&](int x, int y) {
    if (degree(a, x) != degree(b, y)) return false;
    for (int x2 = 0; x2 < n; ++x2) {
      if (assign[x2] < 0) continue;
      if (a.less_eq(x, x2) != b.less_eq(y, assign[x2])) return false;
      if (a.less_eq(x2, x) != b.less_eq(assign[x2], y)) return false;
      if (a.ortho && a.ortho_of(x) == x2 && b.ortho_of(y) != assign[x2]) return false;
      if (a.ortho && a.ortho_of(x) != x2 && b.ortho_of(y) == assign[x2]) return false;
    }
    return true;
  };
  auto backtrack = [&](auto&& self, int x) -> bool {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || !compatible_pairwise(x, y)) continue;
      assign[x] = y;
      used[y] = 1;
      if (self(self, x + 1)) return true;
      assign[x] = -1;
      used[y] = 0;
    }
    return false;
  };
  return backtrack(backtrack, 0);
}

}  // namespace wqt::lattice
