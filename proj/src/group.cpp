#include "polyhom/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace polyhom {

void FiniteGroup::finish(bool validate_associativity) {
  order_ = static_cast<int>(table_.size());
  if (order_ == 0) throw Error("empty Cayley table");
  for (int i = 0; i < order_; ++i) {
    if ((int)table_[i].size() != order_) throw Error("Cayley table is not square");
    for (int j = 0; j < order_; ++j)
      if (table_[i][j] < 0 || table_[i][j] >= order_) throw ElementOutOfRange(table_[i][j]);
  }

  identity_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int x = 0; x < order_ && ok; ++x)
      ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) { identity_ = e; break; }
  }
  if (identity_ < 0) throw NoIdentity();

  if (validate_associativity) {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (table_[a][table_[b][c]] != table_[table_[a][b]][c])
            throw NotAssociative(a, b, c);
  }

  inverses_.assign(order_, -1);
  for (int x = 0; x < order_; ++x) {
    for (int y = 0; y < order_; ++y)
      if (table_[x][y] == identity_ && table_[y][x] == identity_) { inverses_[x] = y; break; }
    if (inverses_[x] < 0) throw NoInverse(x);
  }

  if (labels_.empty()) {
    labels_.resize(order_);
    for (int i = 0; i < order_; ++i) labels_[i] = std::to_string(i);
  }
  if ((int)labels_.size() != order_) throw Error("label list does not match the order");
}

GroupPtr FiniteGroup::from_cayley_table(std::vector<std::vector<int>> table,
                                        std::vector<std::string> labels) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->table_ = std::move(table);
  g->labels_ = std::move(labels);
  g->finish(/*validate_associativity=*/true);
  return g;
}

GroupPtr FiniteGroup::cyclic(int n) {
  if (n <= 0) throw Error("cyclic group order must be positive");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->table_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g->table_[a][b] = (a + b) % n;
  g->finish(false);
  return g;
}

GroupPtr FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 5) throw Error("symmetric(n) supports 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    std::string s;
    for (int i = 0; i < n; ++i) s += std::to_string(perms[a][i]);
    labels[a] = s;
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->table_ = std::move(table);
  g->labels_ = std::move(labels);
  g->finish(false);
  return g;
}

GroupPtr FiniteGroup::direct_product(const GroupPtr& g, const GroupPtr& h) {
  int n = g->order(), m = h->order();
  auto prod = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  prod->table_.assign(n * m, std::vector<int>(n * m));
  for (int a = 0; a < n * m; ++a)
    for (int b = 0; b < n * m; ++b) {
      int ga = a / m, ha = a % m, gb = b / m, hb = b % m;
      prod->table_[a][b] = g->op(ga, gb) * m + h->op(ha, hb);
    }
  prod->labels_.resize(n * m);
  for (int a = 0; a < n * m; ++a)
    prod->labels_[a] = "(" + g->label(a / m) + "," + h->label(a % m) + ")";
  prod->left_order_ = n;
  prod->right_order_ = m;
  prod->finish(false);
  return prod;
}

GroupPtr FiniteGroup::elementary_abelian(int p, int dim) {
  if (p < 2 || dim < 0) throw Error("bad elementary abelian parameters");
  long long n = 1;
  for (int i = 0; i < dim; ++i) {
    n *= p;
    if (n > 4096) throw GroupTooLarge(static_cast<int>(n), 4096);
  }
  int order = static_cast<int>(n);
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->table_.assign(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int x = a, y = b, pw = 1, s = 0;
      for (int i = 0; i < dim; ++i) {
        s += ((x % p) + (y % p)) % p * pw;
        x /= p; y /= p; pw *= p;
      }
      g->table_[a][b] = s;
    }
  g->finish(false);
  return g;
}

int FiniteGroup::pair_encode(int g, int h) const {
  if (!is_product()) throw Error("pair_encode on a non-product group");
  if (g < 0 || g >= left_order_) throw ElementOutOfRange(g);
  if (h < 0 || h >= right_order_) throw ElementOutOfRange(h);
  return g * right_order_ + h;
}

std::pair<int, int> FiniteGroup::pair_decode(int x) const {
  if (!is_product()) throw Error("pair_decode on a non-product group");
  if (x < 0 || x >= order_) throw ElementOutOfRange(x);
  return {x / right_order_, x % right_order_};
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

bool FiniteGroup::same_structure(const FiniteGroup& a, const FiniteGroup& b) {
  return a.order_ == b.order_ && a.table_ == b.table_;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> sorted_elements)
    : parent_(std::move(parent)), elements_(std::move(sorted_elements)) {
  member_.assign(parent_->order(), false);
  for (int e : elements_) member_[e] = true;
}

Subgroup Subgroup::from_elements(GroupPtr parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int e : elements)
    if (e < 0 || e >= parent->order()) throw ElementOutOfRange(e);
  std::vector<bool> in(parent->order(), false);
  for (int e : elements) in[e] = true;
  if (elements.empty() || !in[parent->identity()]) throw NotASubgroup("missing identity");
  for (int a : elements) {
    if (!in[parent->inverse(a)]) throw NotASubgroup("not closed under inverses");
    for (int b : elements)
      if (!in[parent->op(a, b)]) throw NotASubgroup("not closed under products");
  }
  return Subgroup(std::move(parent), std::move(elements));
}

Subgroup Subgroup::generate(const GroupPtr& parent, const std::vector<int>& gens) {
  for (int e : gens)
    if (e < 0 || e >= parent->order()) throw ElementOutOfRange(e);
  std::vector<bool> in(parent->order(), false);
  std::vector<int> work{parent->identity()};
  in[parent->identity()] = true;
  for (int e : gens)
    if (!in[e]) { in[e] = true; work.push_back(e); }
  // closure iteration over products and inverses
  for (size_t i = 0; i < work.size(); ++i) {
    int a = work[i];
    int ia = parent->inverse(a);
    if (!in[ia]) { in[ia] = true; work.push_back(ia); }
    for (size_t j = 0; j <= i; ++j) {
      int b = work[j];
      for (int c : {parent->op(a, b), parent->op(b, a)})
        if (!in[c]) { in[c] = true; work.push_back(c); }
    }
  }
  std::sort(work.begin(), work.end());
  return Subgroup(parent, std::move(work));
}

Subgroup Subgroup::trivial(const GroupPtr& parent) {
  return Subgroup(parent, {parent->identity()});
}

Subgroup Subgroup::full(const GroupPtr& parent) {
  std::vector<int> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(parent, std::move(all));
}

bool Subgroup::operator==(const Subgroup& o) const {
  return FiniteGroup::same_structure(*parent_, *o.parent_) && elements_ == o.elements_;
}

bool is_subset(const Subgroup& inner, const Subgroup& outer) {
  for (int e : inner.elements())
    if (!outer.contains(e)) return false;
  return true;
}

int subgroup_index(const Subgroup& k, const Subgroup& l) {
  if (!is_subset(l, k)) throw NotASubgroupChain();
  if (k.size() % l.size() != 0) throw Error("Lagrange violation (corrupt subgroup)");
  return k.size() / l.size();
}

bool is_normal_in(const Subgroup& n, const Subgroup& k) {
  if (!is_subset(n, k)) throw NotASubgroupChain();
  const auto& g = *k.parent();
  for (int x : k.elements()) {
    int xi = g.inverse(x);
    for (int h : n.elements())
      if (!n.contains(g.op(g.op(x, h), xi))) return false;
  }
  return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> elems;
  for (int e : a.elements())
    if (b.contains(e)) elems.push_back(e);
  return Subgroup::from_elements(a.parent(), std::move(elems));
}

std::vector<int> set_product(const Subgroup& a, const Subgroup& b) {
  const auto& g = *a.parent();
  std::set<int> out;
  for (int x : a.elements())
    for (int y : b.elements()) out.insert(g.op(x, y));
  return std::vector<int>(out.begin(), out.end());
}

int subgroup_sweep_bound() {
  if (const char* env = std::getenv("POLYHOM_SUBGROUP_BOUND")) {
    int b = std::atoi(env);
    if (b > 0) return b;
  }
  return 24;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, int bound) {
  if (bound <= 0) bound = subgroup_sweep_bound();
  if (g->order() > bound) throw GroupTooLarge(g->order(), bound);
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  std::set<std::vector<int>> seen{found[0].elements()};
  // every subgroup arises from a smaller one by adjoining one element
  for (size_t i = 0; i < found.size(); ++i) {
    Subgroup base = found[i];
    for (int e = 0; e < g->order(); ++e) {
      if (base.contains(e)) continue;
      std::vector<int> gens = base.elements();
      gens.push_back(e);
      Subgroup ext = Subgroup::generate(g, gens);
      if (seen.insert(ext.elements()).second) found.push_back(ext);
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return found;
}

int QuotientMap::project(int parent_element) const {
  if (parent_element < 0 || parent_element >= (int)projection.size())
    throw ElementOutOfRange(parent_element);
  int q = projection[parent_element];
  if (q < 0) throw Error("element lies outside the quotiented subgroup");
  return q;
}

QuotientMap quotient(const Subgroup& k, const Subgroup& n) {
  if (!is_normal_in(n, k)) throw NotNormal();
  const auto& g = *k.parent();
  std::vector<int> proj(g.order(), -1);
  std::vector<int> reps;
  for (int x : k.elements()) {
    if (proj[x] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    int rep = x;  // elements() is sorted, so x is minimal in its coset
    for (int h : n.elements()) proj[g.op(x, h)] = idx;
    reps.push_back(rep);
  }
  int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a][b] = proj[g.op(reps[a], reps[b])];
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) labels[a] = "[" + g.label(reps[a]) + "]";
  auto q = FiniteGroup::from_cayley_table(std::move(table), std::move(labels));
  // surjectivity and equal fibre sizes are guaranteed by the construction;
  // the homomorphism law is re-checked by the table validation above
  return QuotientMap{k.parent(), k, q, std::move(proj), std::move(reps)};
}

}  // namespace polyhom
