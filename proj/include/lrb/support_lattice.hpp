#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "lrb/error.hpp"
#include "lrb/semigroup.hpp"

namespace lrb {

// Principal left ideals are densely indexed in order of first occurrence
// scanning elements by index.
using IdealId = int;

// The lattice L of principal left ideals Ss, ordered by inclusion, with the
// support map sigma(s) = Ss. Meet is intersection; the top is sigma of the
// identity (all of S) and the bottom is the minimal ideal.
struct SupportLattice {
  int m = 0;
  std::vector<std::vector<ElementId>> members;  // sorted element sets
  std::vector<std::vector<char>> leq;           // leq[x][y]: members[x] subset of members[y]
  std::vector<std::vector<IdealId>> meet;
  std::vector<IdealId> sigma;                   // per element
  IdealId top = -1;
  IdealId bottom = -1;
  // Linear extension for the induction of the annihilation lemma: bottom
  // first, top last, every ideal after everything strictly below it.
  std::vector<IdealId> descending;

  bool less_equal(IdealId x, IdealId y) const {
    return leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] != 0;
  }
  bool strictly_less(IdealId x, IdealId y) const { return x != y && less_equal(x, y); }
};

// Ss = { x*s : x in S }, sorted. Always contains s itself.
inline std::vector<ElementId> principal_left_ideal(const MultiplicationTable& t,
                                                   ElementId s) {
  std::vector<char> seen(static_cast<std::size_t>(t.n), 0);
  for (int x = 0; x < t.n; ++x) seen[static_cast<std::size_t>(t.product(x, s))] = 1;
  std::vector<ElementId> ideal;
  for (int i = 0; i < t.n; ++i)
    if (seen[static_cast<std::size_t>(i)]) ideal.push_back(i);
  return ideal;
}

// Bottom-first linear extension: stable sort by (cardinality, IdealId).
// Inclusion implies smaller cardinality, so this respects the order.
inline std::vector<IdealId> descending_order(const SupportLattice& lattice) {
  std::vector<IdealId> order(static_cast<std::size_t>(lattice.m));
  for (int i = 0; i < lattice.m; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](IdealId a, IdealId b) {
    const auto ca = lattice.members[static_cast<std::size_t>(a)].size();
    const auto cb = lattice.members[static_cast<std::size_t>(b)].size();
    return ca != cb ? ca < cb : a < b;
  });
  return order;
}

inline SupportLattice build_support_lattice(const MultiplicationTable& t) {
  SupportLattice lattice;
  lattice.sigma.resize(static_cast<std::size_t>(t.n), -1);

  std::map<std::vector<ElementId>, IdealId> ideal_of;
  for (int s = 0; s < t.n; ++s) {
    auto ideal = principal_left_ideal(t, s);
    const auto [it, inserted] =
        ideal_of.try_emplace(std::move(ideal), static_cast<IdealId>(lattice.members.size()));
    if (inserted) lattice.members.push_back(it->first);
    lattice.sigma[static_cast<std::size_t>(s)] = it->second;
  }
  lattice.m = static_cast<int>(lattice.members.size());
  const int m = lattice.m;

  lattice.leq.assign(static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(m), 0));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      lattice.leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          std::includes(lattice.members[static_cast<std::size_t>(y)].begin(),
                        lattice.members[static_cast<std::size_t>(y)].end(),
                        lattice.members[static_cast<std::size_t>(x)].begin(),
                        lattice.members[static_cast<std::size_t>(x)].end())
              ? 1
              : 0;

  // Meet by intersection; every intersection must itself be principal, or
  // the input was not a left regular band.
  lattice.meet.assign(static_cast<std::size_t>(m), std::vector<IdealId>(static_cast<std::size_t>(m), -1));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      std::vector<ElementId> common;
      std::set_intersection(lattice.members[static_cast<std::size_t>(x)].begin(),
                            lattice.members[static_cast<std::size_t>(x)].end(),
                            lattice.members[static_cast<std::size_t>(y)].begin(),
                            lattice.members[static_cast<std::size_t>(y)].end(),
                            std::back_inserter(common));
      const auto it = ideal_of.find(common);
      if (it == ideal_of.end())
        throw Error("intersection of principal left ideals " + std::to_string(x) + " and " +
                    std::to_string(y) + " is not principal; input is not a left regular band");
      lattice.meet[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = it->second;
    }

  lattice.top = lattice.sigma[static_cast<std::size_t>(t.identity)];
  for (int x = 0; x < m; ++x) {
    bool minimum = true;
    for (int y = 0; y < m && minimum; ++y) minimum = lattice.less_equal(x, y);
    if (minimum) {
      lattice.bottom = x;
      break;
    }
  }
  if (lattice.bottom < 0)
    throw Error("no unique minimal principal left ideal; input is not a left regular band");

  lattice.descending = descending_order(lattice);
  return lattice;
}

// First counterexample (lexicographic element pair) of a pairwise check.
struct PairCheck {
  bool ok = true;
  ElementId s = -1;
  ElementId t = -1;
};

// sigma(s) <= sigma(t) exactly when st = s.
inline PairCheck verify_key_fact(const MultiplicationTable& table,
                                 const SupportLattice& lattice) {
  for (int s = 0; s < table.n; ++s)
    for (int t = 0; t < table.n; ++t) {
      const bool below = lattice.less_equal(lattice.sigma[static_cast<std::size_t>(s)],
                                            lattice.sigma[static_cast<std::size_t>(t)]);
      if (below != (table.product(s, t) == s)) return {false, s, t};
    }
  return {};
}

// sigma is a homomorphism onto (L, meet).
inline PairCheck verify_sigma_homomorphism(const MultiplicationTable& table,
                                           const SupportLattice& lattice) {
  for (int s = 0; s < table.n; ++s)
    for (int t = 0; t < table.n; ++t) {
      const IdealId product_support =
          lattice.sigma[static_cast<std::size_t>(table.product(s, t))];
      const IdealId meet =
          lattice.meet[static_cast<std::size_t>(lattice.sigma[static_cast<std::size_t>(s)])]
                      [static_cast<std::size_t>(lattice.sigma[static_cast<std::size_t>(t)])];
      if (product_support != meet) return {false, s, t};
    }
  return {};
}

// Covering pairs (upper, lower) of the Hasse diagram, lexicographic.
inline std::vector<std::pair<IdealId, IdealId>> covering_pairs(const SupportLattice& lattice) {
  std::vector<std::pair<IdealId, IdealId>> covers;
  for (int upper = 0; upper < lattice.m; ++upper)
    for (int lower = 0; lower < lattice.m; ++lower) {
      if (!lattice.strictly_less(lower, upper)) continue;
      bool covering = true;
      for (int mid = 0; mid < lattice.m && covering; ++mid)
        covering = !(lattice.strictly_less(lower, mid) && lattice.strictly_less(mid, upper));
      if (covering) covers.emplace_back(upper, lower);
    }
  return covers;
}

}  // namespace lrb
