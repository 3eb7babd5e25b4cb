#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "polyhom/rational.hpp"

namespace polyhom {

struct NotAssociative : Error {
  int a, b, c;
  NotAssociative(int a_, int b_, int c_)
      : Error("table is not associative at (" + std::to_string(a_) + "," +
              std::to_string(b_) + "," + std::to_string(c_) + ")"),
        a(a_), b(b_), c(c_) {}
};
struct NoIdentity : Error {
  NoIdentity() : Error("table has no two-sided identity") {}
};
struct NoInverse : Error {
  int element;
  explicit NoInverse(int e)
      : Error("element " + std::to_string(e) + " has no two-sided inverse"), element(e) {}
};
struct ElementOutOfRange : Error {
  int element;
  explicit ElementOutOfRange(int e)
      : Error("element index " + std::to_string(e) + " out of range"), element(e) {}
};
struct NotASubgroup : Error {
  explicit NotASubgroup(const std::string& what) : Error("not a subgroup: " + what) {}
};
struct NotASubgroupChain : Error {
  NotASubgroupChain() : Error("second subgroup is not contained in the first") {}
};
struct NotNormal : Error {
  NotNormal() : Error("subgroup is not normal") {}
};
struct GroupTooLarge : Error {
  GroupTooLarge(int order, int bound)
      : Error("group of order " + std::to_string(order) +
              " exceeds the subgroup-sweep bound " + std::to_string(bound)) {}
};
struct NotAHomomorphism : Error {
  int x, y;
  NotAHomomorphism(int x_, int y_)
      : Error("map is not a homomorphism at (" + std::to_string(x_) + "," +
              std::to_string(y_) + ")"),
        x(x_), y(y_) {}
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group stored as a full Cayley table over element indices 0..n-1.
// Immutable after construction; freely shareable across threads.
class FiniteGroup {
 public:
  // Validates closure, identity, inverses and associativity of the table.
  static GroupPtr from_cayley_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels = {});
  static GroupPtr cyclic(int n);
  // Symmetric group on n letters (n <= 5), table built from permutation
  // composition.  Plumbing for test pools; not a permutation-group engine.
  static GroupPtr symmetric(int n);
  static GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);
  // (Z/p)^dim with digitwise addition; element index = sum v_i * p^i.
  static GroupPtr elementary_abelian(int p, int dim);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int op(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverses_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  bool is_abelian() const;

  // Direct products remember the factor sizes so pairs can be encoded and
  // decoded: encode(g, h) = g * #H + h.
  bool is_product() const { return right_order_ > 0; }
  int pair_encode(int g, int h) const;
  std::pair<int, int> pair_decode(int x) const;
  int left_order() const { return left_order_; }
  int right_order() const { return right_order_; }

  static bool same_structure(const FiniteGroup& a, const FiniteGroup& b);

 private:
  FiniteGroup() = default;
  void finish(bool validate_associativity);

  int order_ = 0;
  int identity_ = -1;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverses_;
  std::vector<std::string> labels_;
  int left_order_ = 0, right_order_ = 0;
};

// Sorted element indices plus a bitset mirror; canonical form, so equality is
// structural.
class Subgroup {
 public:
  // Validates that the listed elements really form a subgroup.
  static Subgroup from_elements(GroupPtr parent, std::vector<int> elements);
  // Smallest subgroup containing gens, by closure iteration.
  static Subgroup generate(const GroupPtr& parent, const std::vector<int>& gens);
  static Subgroup trivial(const GroupPtr& parent);
  static Subgroup full(const GroupPtr& parent);

  const GroupPtr& parent() const { return parent_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(int e) const { return e >= 0 && e < (int)member_.size() && member_[e]; }
  const std::vector<int>& elements() const { return elements_; }
  bool operator==(const Subgroup& o) const;

 private:
  Subgroup(GroupPtr parent, std::vector<int> sorted_elements);
  GroupPtr parent_;
  std::vector<int> elements_;
  std::vector<bool> member_;
};

bool is_subset(const Subgroup& inner, const Subgroup& outer);
// [K : L]; exact integer by Lagrange.  Throws NotASubgroupChain if L is not
// contained in K.
int subgroup_index(const Subgroup& k, const Subgroup& l);
// True iff k n k^-1 = n for all k in K.  Pre: N <= K.
bool is_normal_in(const Subgroup& n, const Subgroup& k);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
// {ab : a in A, b in B}; a subgroup only when one factor normalizes the other,
// which is not assumed — the raw element set is returned.
std::vector<int> set_product(const Subgroup& a, const Subgroup& b);

// Complete duplicate-free subgroup list by closure over one-element
// extensions.  The bound defaults to POLYHOM_SUBGROUP_BOUND or 24.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, int bound = 0);
int subgroup_sweep_bound();

struct QuotientMap {
  GroupPtr parent;             // ambient group of K
  Subgroup source;             // K
  GroupPtr quotient;           // K/N, cosets labelled by minimal representatives
  std::vector<int> projection; // parent element -> coset index, -1 outside K
  std::vector<int> reps;       // coset index -> minimal parent representative

  int project(int parent_element) const;
};

// Coset group K/N with canonical minimal-index representatives.
QuotientMap quotient(const Subgroup& k, const Subgroup& n);

}  // namespace polyhom
