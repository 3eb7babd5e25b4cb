#include "polyhom/relation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polyhom {

MultRelation::MultRelation(GroupPtr source, GroupPtr target, GroupPtr product,
                           Subgroup carrier)
    : source_(std::move(source)),
      target_(std::move(target)),
      product_(std::move(product)),
      carrier_(std::move(carrier)) {
  std::set<int> dom_set, im_set;
  std::vector<int> ker_set, indef_set;
  int eg = source_->identity(), eh = target_->identity();
  for (int x : carrier_.elements()) {
    auto [g, h] = product_->pair_decode(x);
    pairs_.emplace_back(g, h);
    dom_set.insert(g);
    im_set.insert(h);
    if (h == eh) ker_set.push_back(g);
    if (g == eg) indef_set.push_back(h);
  }
  dom_ = Subgroup::from_elements(source_, std::vector<int>(dom_set.begin(), dom_set.end()));
  im_ = Subgroup::from_elements(target_, std::vector<int>(im_set.begin(), im_set.end()));
  ker_ = Subgroup::from_elements(source_, std::move(ker_set));
  indef_ = Subgroup::from_elements(target_, std::move(indef_set));
  if (!is_normal_in(*ker_, *dom_) || !is_normal_in(*indef_, *im_))
    throw Error("internal: marginal normality failed (corrupt carrier)");
}

MultRelation MultRelation::from_pairs(GroupPtr source, GroupPtr target,
                                      const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.empty()) throw EmptyRelation();
  auto product = FiniteGroup::direct_product(source, target);
  std::vector<int> encoded;
  encoded.reserve(pairs.size());
  for (auto [g, h] : pairs) encoded.push_back(product->pair_encode(g, h));
  Subgroup carrier = Subgroup::from_elements(product, std::move(encoded));
  return MultRelation(std::move(source), std::move(target), std::move(product),
                      std::move(carrier));
}

MultRelation MultRelation::generate(GroupPtr source, GroupPtr target,
                                    const std::vector<std::pair<int, int>>& gens) {
  auto product = FiniteGroup::direct_product(source, target);
  std::vector<int> encoded;
  for (auto [g, h] : gens) encoded.push_back(product->pair_encode(g, h));
  Subgroup carrier = Subgroup::generate(product, encoded);
  return MultRelation(std::move(source), std::move(target), std::move(product),
                      std::move(carrier));
}

MultRelation MultRelation::graph(GroupPtr source, GroupPtr target,
                                 const std::vector<int>& f) {
  if ((int)f.size() != source->order()) throw Error("image list does not match the order");
  for (int v : f)
    if (v < 0 || v >= target->order()) throw ElementOutOfRange(v);
  for (int x = 0; x < source->order(); ++x)
    for (int y = 0; y < source->order(); ++y)
      if (f[source->op(x, y)] != target->op(f[x], f[y])) throw NotAHomomorphism(x, y);
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < source->order(); ++x) pairs.emplace_back(x, f[x]);
  return from_pairs(std::move(source), std::move(target), pairs);
}

MultRelation MultRelation::identity(const GroupPtr& g) {
  std::vector<int> f(g->order());
  for (int i = 0; i < g->order(); ++i) f[i] = i;
  return graph(g, g, f);
}

MultRelation MultRelation::full(GroupPtr source, GroupPtr target) {
  std::vector<std::pair<int, int>> pairs;
  for (int g = 0; g < source->order(); ++g)
    for (int h = 0; h < target->order(); ++h) pairs.emplace_back(g, h);
  return from_pairs(std::move(source), std::move(target), pairs);
}

MultRelation MultRelation::diagonal(const Subgroup& omega) {
  std::vector<std::pair<int, int>> pairs;
  for (int w : omega.elements()) pairs.emplace_back(w, w);
  return from_pairs(omega.parent(), omega.parent(), pairs);
}

bool MultRelation::contains(int g, int h) const {
  return carrier_.contains(product_->pair_encode(g, h));
}

bool MultRelation::operator==(const MultRelation& o) const {
  return FiniteGroup::same_structure(*source_, *o.source_) &&
         FiniteGroup::same_structure(*target_, *o.target_) && pairs_ == o.pairs_;
}

MultRelation rel_compose(const MultRelation& t, const MultRelation& r) {
  if (!FiniteGroup::same_structure(*r.target(), *t.source())) throw MiddleGroupMismatch();
  std::map<int, std::vector<int>> by_middle;
  for (auto [h, k] : t.pairs()) by_middle[h].push_back(k);
  std::set<std::pair<int, int>> out;
  for (auto [g, h] : r.pairs()) {
    auto it = by_middle.find(h);
    if (it == by_middle.end()) continue;
    for (int k : it->second) out.emplace(g, k);
  }
  // from_pairs re-validates that the composite is a subgroup; guaranteed by
  // the algebra, the check guards encoding bugs
  return MultRelation::from_pairs(r.source(), t.target(),
                                  std::vector<std::pair<int, int>>(out.begin(), out.end()));
}

MultRelation pseudoinverse(const MultRelation& r) {
  std::vector<std::pair<int, int>> flipped;
  flipped.reserve(r.pairs().size());
  for (auto [g, h] : r.pairs()) flipped.emplace_back(h, g);
  return MultRelation::from_pairs(r.target(), r.source(), flipped);
}

std::vector<int> image_of_set(const MultRelation& r, const std::vector<int>& a) {
  std::vector<bool> in(r.source()->order(), false);
  for (int x : a) {
    if (x < 0 || x >= r.source()->order()) throw ElementOutOfRange(x);
    in[x] = true;
  }
  std::set<int> out;
  for (auto [g, h] : r.pairs())
    if (in[g]) out.insert(h);
  return std::vector<int>(out.begin(), out.end());
}

CanonicalIso canonical_iso(const MultRelation& r) {
  QuotientMap src_q = quotient(r.dom(), r.ker());
  QuotientMap tgt_q = quotient(r.im(), r.indef());
  int n = src_q.quotient->order();
  std::vector<int> map(n, -1);
  for (auto [g, h] : r.pairs()) {
    int a = src_q.project(g), b = tgt_q.project(h);
    if (map[a] < 0)
      map[a] = b;
    else if (map[a] != b)
      throw Error("internal: canonical isomorphism is not well defined");
  }
  std::vector<bool> hit(tgt_q.quotient->order(), false);
  for (int a = 0; a < n; ++a) {
    if (map[a] < 0) throw Error("internal: canonical isomorphism is not total");
    if (hit[map[a]]) throw Error("internal: canonical isomorphism is not injective");
    hit[map[a]] = true;
  }
  if (n != tgt_q.quotient->order())
    throw Error("internal: canonical isomorphism is not bijective");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (map[src_q.quotient->op(a, b)] != tgt_q.quotient->op(map[a], map[b]))
        throw Error("internal: canonical isomorphism does not preserve products");
  return CanonicalIso{std::move(src_q), std::move(tgt_q), std::move(map)};
}

}  // namespace polyhom
