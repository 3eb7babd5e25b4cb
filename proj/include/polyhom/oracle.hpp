#pragma once

// Independent brute-force reference implementations.  These are test support:
// they are only ever linked into the verification batteries and the unit
// tests, never into the core library, and they deliberately avoid calling the
// operations they are used to check.

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "polyhom/polyhom.hpp"

namespace polyhom::oracle {

// fixed-point iteration over pairwise products and inverses
inline std::vector<int> naive_closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> have{g.identity()};
  for (int e : gens) have.insert(e);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(have.begin(), have.end());
    for (int a : cur) {
      if (have.insert(g.inverse(a)).second) grew = true;
      for (int b : cur)
        if (have.insert(g.op(a, b)).second) grew = true;
    }
  }
  return std::vector<int>(have.begin(), have.end());
}

// literal triple loop over (g, h, k)
inline std::vector<std::pair<int, int>> naive_rel_compose(
    const std::vector<std::pair<int, int>>& r_pairs,
    const std::vector<std::pair<int, int>>& t_pairs) {
  std::set<std::pair<int, int>> out;
  for (auto [g, h] : r_pairs)
    for (auto [h2, k] : t_pairs)
      if (h == h2) out.emplace(g, k);
  return std::vector<std::pair<int, int>>(out.begin(), out.end());
}

// sums the carrier weight over fibres; index 0 = domain side, 1 = image side
inline std::vector<Rational> naive_marginal_measure(const Polyhom& p, int side) {
  int n = side == 0 ? p.source().group->order() : p.target().group->order();
  std::vector<Rational> out(n, Rational(0));
  if (p.is_zero()) return out;
  for (auto [g, h] : p.relation().pairs()) out[side == 0 ? g : h] += p.weight();
  return out;
}

// composition of linear relations by enumerating shared middle vectors
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> naive_fp_compose(
    const std::vector<std::vector<int>>& r_points,
    const std::vector<std::vector<int>>& t_points, int dim) {
  std::map<std::vector<int>, std::vector<std::vector<int>>> by_middle;
  for (const auto& pt : t_points) {
    std::vector<int> v(pt.begin(), pt.begin() + dim);
    std::vector<int> w(pt.begin() + dim, pt.end());
    by_middle[v].push_back(w);
  }
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& pt : r_points) {
    std::vector<int> u(pt.begin(), pt.begin() + dim);
    std::vector<int> v(pt.begin() + dim, pt.end());
    auto it = by_middle.find(v);
    if (it == by_middle.end()) continue;
    for (const auto& w : it->second) out.emplace(u, w);
  }
  return std::vector<std::pair<std::vector<int>, std::vector<int>>>(out.begin(), out.end());
}

}  // namespace polyhom::oracle
