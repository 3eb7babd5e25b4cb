#include "polyhom/polyhom.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polyhom {

MeasuredGroup measured(GroupPtr group, Rational point_mass) {
  if (point_mass <= 0) throw Error("point mass must be positive");
  return MeasuredGroup{std::move(group), std::move(point_mass)};
}

bool same_measured(const MeasuredGroup& a, const MeasuredGroup& b) {
  return a.point_mass == b.point_mass && FiniteGroup::same_structure(*a.group, *b.group);
}

const MultRelation& Polyhom::relation() const {
  if (is_zero()) throw ZeroPolyhom();
  return *relation_;
}

const Rational& Polyhom::weight() const {
  if (is_zero()) throw ZeroPolyhom();
  return weight_;
}

Polyhom Polyhom::zero(MeasuredGroup source, MeasuredGroup target) {
  return Polyhom(std::move(source), std::move(target));
}

Polyhom Polyhom::make(MultRelation relation, Rational weight, MeasuredGroup source,
                      MeasuredGroup target) {
  if (weight <= 0) throw Error("weight must be positive");
  if (!FiniteGroup::same_structure(*relation.source(), *source.group) ||
      !FiniteGroup::same_structure(*relation.target(), *target.group))
    throw Error("relation does not match the measured groups");
  Polyhom p(std::move(source), std::move(target));
  p.alpha_ = weight * relation.indef().size() / p.source_.point_mass;
  p.beta_ = weight * relation.ker().size() / p.target_.point_mass;
  if (p.alpha_ > 1) throw DominationViolated("alpha", p.alpha_);
  if (p.beta_ > 1) throw DominationViolated("beta", p.beta_);
  p.relation_ = std::move(relation);
  p.weight_ = std::move(weight);
  return p;
}

Polyhom Polyhom::identity(const MeasuredGroup& g) {
  return make(MultRelation::identity(g.group), g.point_mass, g, g);
}

bool Polyhom::operator==(const Polyhom& o) const {
  if (!same_measured(source_, o.source_) || !same_measured(target_, o.target_)) return false;
  if (is_zero() != o.is_zero()) return false;
  if (is_zero()) return true;
  return weight_ == o.weight_ && *relation_ == *o.relation_;
}

Polyhom ph_compose(const Polyhom& t, const Polyhom& r) {
  if (!same_measured(r.target(), t.source())) throw MiddleGroupMismatch();
  if (r.is_zero() || t.is_zero()) return Polyhom::zero(r.source(), t.target());

  MultRelation s = rel_compose(t.relation(), r.relation());

  // both index denominators live in the middle group
  int denom_a = subgroup_index(r.relation().indef(),
                               intersect(r.relation().indef(), t.relation().dom()));
  int denom_b = subgroup_index(t.relation().ker(),
                               intersect(t.relation().ker(), r.relation().im()));
  Rational alpha = r.alpha() * t.alpha() / denom_a;
  Rational beta = r.beta() * t.beta() / denom_b;

  Rational weight_from_alpha = alpha * r.source().point_mass / s.indef().size();
  Rational weight_from_beta = beta * t.target().point_mass / s.ker().size();
  if (weight_from_alpha != weight_from_beta)
    throw InternalInconsistency("alpha- and beta-derived weights disagree: " +
                                to_fraction(weight_from_alpha) + " vs " +
                                to_fraction(weight_from_beta));
  return Polyhom::make(std::move(s), weight_from_alpha, r.source(), t.target());
}

Polyhom involution(const Polyhom& p) {
  if (p.is_zero()) return Polyhom::zero(p.target(), p.source());
  return Polyhom::make(pseudoinverse(p.relation()), p.weight(), p.target(), p.source());
}

DiagonalQuotient mu_phi_delta(const MeasuredGroup& g, const Subgroup& phi,
                              const Subgroup& delta) {
  QuotientMap qm = quotient(phi, delta);
  MeasuredGroup target = measured(qm.quotient, g.point_mass * delta.size());
  std::vector<std::pair<int, int>> pairs;
  for (int x : phi.elements()) pairs.emplace_back(x, qm.project(x));
  MultRelation rel = MultRelation::from_pairs(g.group, qm.quotient, pairs);
  Polyhom poly = Polyhom::make(std::move(rel), g.point_mass, g, target);
  return DiagonalQuotient{std::move(poly), std::move(target), std::move(qm)};
}

Decomposition decompose(const Polyhom& p) {
  if (p.is_zero()) throw ZeroPolyhom();
  const MultRelation& rel = p.relation();

  DiagonalQuotient q = mu_phi_delta(p.source(), rel.dom(), rel.ker());
  DiagonalQuotient t0 = mu_phi_delta(p.target(), rel.im(), rel.indef());
  Polyhom t = involution(t0.poly);

  // graph of the canonical isomorphism, carrying the image of the carrier
  // measure: each graph point collects a ker x indef coset
  std::vector<int> sigma(q.quotient.group->order(), -1);
  for (auto [gg, hh] : rel.pairs()) {
    int a = q.map.project(gg), b = t0.map.project(hh);
    if (sigma[a] < 0)
      sigma[a] = b;
    else if (sigma[a] != b)
      throw InternalInconsistency("canonical isomorphism not well defined");
  }
  MultRelation graph = MultRelation::graph(q.quotient.group, t0.quotient.group, sigma);
  Rational s_weight = p.weight() * rel.ker().size() * rel.indef().size();
  Polyhom s = Polyhom::make(std::move(graph), s_weight, q.quotient, t0.quotient);

  return Decomposition{q.poly, std::move(s), std::move(t)};
}

namespace {

bool reachable_as_product(const BigInt& n, const std::vector<int>& gens,
                          std::map<BigInt, bool>& memo) {
  if (n == 1) return true;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (int d : gens)
    if (n % d == 0 && reachable_as_product(n / d, gens, memo)) { ok = true; break; }
  memo[n] = ok;
  return ok;
}

}  // namespace

bool lambda_membership(const MeasuredGroup& g, const Rational& q) {
  if (q <= 0) throw Error("lambda membership is defined for positive rationals");
  Rational inv = Rational(1) / q;
  if (!is_integer(inv)) return false;
  BigInt n = as_integer(inv);

  std::vector<Subgroup> subs = all_subgroups(g.group);
  std::set<int> gen_set;
  for (const auto& k1 : subs)
    for (const auto& k2 : subs)
      if (is_subset(k2, k1)) {
        int idx = subgroup_index(k1, k2);
        if (idx > 1) gen_set.insert(idx);
      }
  std::vector<int> gens(gen_set.begin(), gen_set.end());
  std::map<BigInt, bool> memo;
  return reachable_as_product(n, gens, memo);
}

Rational box_measure(const Polyhom& p, const std::vector<int>& a, const std::vector<int>& b) {
  if (p.is_zero()) return 0;
  std::vector<bool> in_a(p.source().group->order(), false);
  std::vector<bool> in_b(p.target().group->order(), false);
  for (int x : a) {
    if (x < 0 || x >= (int)in_a.size()) throw ElementOutOfRange(x);
    in_a[x] = true;
  }
  for (int y : b) {
    if (y < 0 || y >= (int)in_b.size()) throw ElementOutOfRange(y);
    in_b[y] = true;
  }
  long count = 0;
  for (auto [g, h] : p.relation().pairs())
    if (in_a[g] && in_b[h]) ++count;
  return p.weight() * count;
}

}  // namespace polyhom
