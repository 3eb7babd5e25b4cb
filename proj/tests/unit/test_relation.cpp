#include <doctest.h>

#include <random>

#include "polyhom/oracle.hpp"
#include "polyhom/relation.hpp"

using namespace polyhom;

namespace {

// the doubling relation x |-> 2x inside C4 x C4
MultRelation doubling() {
  auto c4 = FiniteGroup::cyclic(4);
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < 4; ++x) pairs.emplace_back(x, (2 * x) % 4);
  return MultRelation::from_pairs(c4, c4, pairs);
}

MultRelation random_relation(std::mt19937_64& rng, const GroupPtr& g, const GroupPtr& h) {
  std::vector<std::pair<int, int>> gens;
  int k = 1 + (int)(rng() % 3);
  for (int i = 0; i < k; ++i)
    gens.emplace_back((int)(rng() % g->order()), (int)(rng() % h->order()));
  return MultRelation::generate(g, h, gens);
}

}  // namespace

TEST_CASE("composition basics") {
  auto c4 = FiniteGroup::cyclic(4);
  MultRelation id = MultRelation::identity(c4);
  MultRelation r = doubling();
  CHECK(rel_compose(r, id) == r);
  CHECK(rel_compose(id, r) == r);

  Subgroup a = Subgroup::generate(c4, {2});
  Subgroup b = Subgroup::generate(c4, {1});
  MultRelation da = MultRelation::diagonal(a);
  MultRelation db = MultRelation::diagonal(b);
  CHECK(rel_compose(da, db) == MultRelation::diagonal(intersect(a, b)));

  MultRelation t = MultRelation::diagonal(a);
  MultRelation tr = rel_compose(t, r);
  CHECK(tr == r);  // the image {0,2} is absorbed by the diagonal of {0,2}

  auto c2 = FiniteGroup::cyclic(2);
  CHECK_THROWS_AS(rel_compose(MultRelation::identity(c2), r), MiddleGroupMismatch);
  CHECK_THROWS_AS(MultRelation::from_pairs(c4, c4, {}), EmptyRelation);
}

TEST_CASE("composition agrees with the triple loop oracle") {
  std::mt19937_64 rng(7);
  std::vector<GroupPtr> groups = {FiniteGroup::cyclic(4), FiniteGroup::cyclic(6),
                                  FiniteGroup::symmetric(3),
                                  FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                              FiniteGroup::cyclic(2))};
  for (int i = 0; i < 60; ++i) {
    const auto& g = groups[rng() % groups.size()];
    const auto& h = groups[rng() % groups.size()];
    const auto& k = groups[rng() % groups.size()];
    MultRelation r = random_relation(rng, g, h);
    MultRelation t = random_relation(rng, h, k);
    CHECK(rel_compose(t, r).pairs() == oracle::naive_rel_compose(r.pairs(), t.pairs()));
  }
  // associativity on sampled triples
  for (int i = 0; i < 30; ++i) {
    const auto& g = groups[rng() % groups.size()];
    const auto& h = groups[rng() % groups.size()];
    const auto& k = groups[rng() % groups.size()];
    const auto& l = groups[rng() % groups.size()];
    MultRelation r = random_relation(rng, g, h);
    MultRelation t = random_relation(rng, h, k);
    MultRelation s = random_relation(rng, k, l);
    CHECK(rel_compose(rel_compose(s, t), r) == rel_compose(s, rel_compose(t, r)));
  }
}

TEST_CASE("pseudoinverse") {
  MultRelation r = doubling();
  CHECK(pseudoinverse(pseudoinverse(r)) == r);
  CHECK(pseudoinverse(r).dom() == r.im());
  CHECK(pseudoinverse(r).im() == r.dom());
  CHECK(pseudoinverse(r).contains(2, 1));

  auto c4 = FiniteGroup::cyclic(4);
  MultRelation f = MultRelation::graph(c4, c4, {0, 3, 2, 1});  // x -> -x, an isomorphism
  MultRelation finv = pseudoinverse(f);
  for (int x = 0; x < 4; ++x) CHECK(finv.contains((4 - x) % 4, x));

  std::mt19937_64 rng(11);
  auto c6 = FiniteGroup::cyclic(6);
  for (int i = 0; i < 25; ++i) {
    MultRelation a = random_relation(rng, c4, c6);
    MultRelation b = random_relation(rng, c6, c4);
    CHECK(pseudoinverse(rel_compose(b, a)) ==
          rel_compose(pseudoinverse(a), pseudoinverse(b)));
  }
}

TEST_CASE("marginals") {
  auto c4 = FiniteGroup::cyclic(4);
  auto c2 = FiniteGroup::cyclic(2);
  MultRelation f = MultRelation::graph(c4, c2, {0, 1, 0, 1});  // surjective reduction
  CHECK(f.dom().size() == 4);
  CHECK(f.im().size() == 2);
  CHECK(f.ker().elements() == std::vector<int>{0, 2});
  CHECK(f.indef().elements() == std::vector<int>{0});

  MultRelation full = MultRelation::full(c4, c2);
  CHECK(full.ker().size() == 4);
  CHECK(full.indef().size() == 2);

  MultRelation r = doubling();
  CHECK(r.dom().size() == 4);
  CHECK(r.im().elements() == std::vector<int>{0, 2});
  CHECK(r.ker().elements() == std::vector<int>{0, 2});
  CHECK(r.indef().elements() == std::vector<int>{0});
}

TEST_CASE("canonical isomorphism") {
  MultRelation r = doubling();
  CanonicalIso iso = canonical_iso(r);
  CHECK(iso.source_quotient.quotient->order() == 2);
  CHECK(iso.target_quotient.quotient->order() == 2);
  // the class of 1 goes to the class of 2
  CHECK(iso.map[iso.source_quotient.project(1)] == iso.target_quotient.project(2));

  auto c4 = FiniteGroup::cyclic(4);
  CanonicalIso triv = canonical_iso(MultRelation::full(c4, c4));
  CHECK(triv.source_quotient.quotient->order() == 1);

  // product preservation on the quotients
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(iso.map[iso.source_quotient.quotient->op(a, b)] ==
            iso.target_quotient.quotient->op(iso.map[a], iso.map[b]));
}

TEST_CASE("set images and graphs") {
  MultRelation r = doubling();
  CHECK(image_of_set(r, {}).empty());
  CHECK(image_of_set(r, {1, 3}) == std::vector<int>{2});
  auto c4 = FiniteGroup::cyclic(4);
  auto c2 = FiniteGroup::cyclic(2);
  CHECK(image_of_set(MultRelation::graph(c4, c2, {0, 1, 0, 1}), {3}) == std::vector<int>{1});
  CHECK_THROWS_AS(MultRelation::graph(c4, c2, {0, 1, 1, 0}), NotAHomomorphism);
}
