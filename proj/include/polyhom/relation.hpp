#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyhom/group.hpp"

namespace polyhom {

struct MiddleGroupMismatch : Error {
  MiddleGroupMismatch() : Error("middle groups do not match") {}
};
struct EmptyRelation : Error {
  EmptyRelation() : Error("a multiplicative relation cannot have an empty carrier") {}
};

// A multiplicative relation G =? H: a subgroup of G x H together with its four
// marginal subgroups.  Values are immutable; marginals are computed once at
// construction and the normality of ker in dom and indef in im is asserted.
class MultRelation {
 public:
  // Explicit carrier; the pair set must be a subgroup of the product.
  static MultRelation from_pairs(GroupPtr source, GroupPtr target,
                                 const std::vector<std::pair<int, int>>& pairs);
  // Subgroup of G x H generated by the given pairs.
  static MultRelation generate(GroupPtr source, GroupPtr target,
                               const std::vector<std::pair<int, int>>& gens);
  // Graph of a homomorphism given as an image list; the map is verified.
  static MultRelation graph(GroupPtr source, GroupPtr target, const std::vector<int>& f);
  static MultRelation identity(const GroupPtr& g);
  static MultRelation full(GroupPtr source, GroupPtr target);
  // {(w, w) : w in Omega} inside G x G.
  static MultRelation diagonal(const Subgroup& omega);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const GroupPtr& product() const { return product_; }
  const Subgroup& carrier() const { return carrier_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  bool contains(int g, int h) const;

  const Subgroup& dom() const { return *dom_; }
  const Subgroup& im() const { return *im_; }
  const Subgroup& ker() const { return *ker_; }
  const Subgroup& indef() const { return *indef_; }

  bool operator==(const MultRelation& o) const;

 private:
  MultRelation(GroupPtr source, GroupPtr target, GroupPtr product, Subgroup carrier);

  GroupPtr source_, target_, product_;
  Subgroup carrier_;
  std::vector<std::pair<int, int>> pairs_;
  std::optional<Subgroup> dom_, im_, ker_, indef_;
};

// {(g,k) : exists h with (g,h) in R and (h,k) in T}.
MultRelation rel_compose(const MultRelation& t, const MultRelation& r);
// Same pair set read backwards.
MultRelation pseudoinverse(const MultRelation& r);
// {b : exists a in A with (a,b) in R}.
std::vector<int> image_of_set(const MultRelation& r, const std::vector<int>& a);

// The induced isomorphism dom R/ker R -> im R/indef R.
struct CanonicalIso {
  QuotientMap source_quotient;  // dom R / ker R
  QuotientMap target_quotient;  // im R / indef R
  std::vector<int> map;         // source coset index -> target coset index
};
CanonicalIso canonical_iso(const MultRelation& r);

}  // namespace polyhom
