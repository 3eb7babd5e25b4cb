#include <doctest.h>

#include <random>

#include "polyhom/operators.hpp"
#include "polyhom/oracle.hpp"
#include "polyhom/verify.hpp"

using namespace polyhom;

namespace {

MeasuredGroup mc4() { return measured(FiniteGroup::cyclic(4)); }

Polyhom doubling_polyhom(Rational w = Rational(1, 2)) {
  MeasuredGroup g = mc4();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < 4; ++x) pairs.emplace_back(x, (2 * x) % 4);
  return Polyhom::make(MultRelation::from_pairs(g.group, g.group, pairs), w, g, g);
}

}  // namespace

TEST_CASE("weights and domination") {
  MeasuredGroup g = mc4();
  Polyhom id = Polyhom::identity(g);
  CHECK(id.alpha() == 1);
  CHECK(id.beta() == 1);

  Polyhom d = doubling_polyhom();
  CHECK(d.alpha() == Rational(1, 2));
  CHECK(d.beta() == 1);
  CHECK_THROWS_AS(doubling_polyhom(Rational(1)), DominationViolated);

  // the marginal of the carrier measure is alpha times the source measure
  auto marg = oracle::naive_marginal_measure(d, 0);
  for (int x : d.relation().dom().elements())
    CHECK(marg[x] == d.alpha() * d.source().point_mass);
  auto marg_im = oracle::naive_marginal_measure(d, 1);
  for (int y : d.relation().im().elements())
    CHECK(marg_im[y] == d.beta() * d.target().point_mass);

  Polyhom z = Polyhom::zero(g, g);
  CHECK(z.alpha() == 0);
  CHECK(z.beta() == 0);

  MeasuredGroup c2 = measured(FiniteGroup::cyclic(2));
  Polyhom full = Polyhom::make(MultRelation::full(c2.group, c2.group), Rational(1, 2), c2, c2);
  CHECK(full.alpha() == 1);
  CHECK(full.beta() == 1);

  Subgroup omega = Subgroup::generate(g.group, {2});
  Polyhom diag = Polyhom::make(MultRelation::diagonal(omega), Rational(1), g, g);
  CHECK(diag.alpha() == 1);
  CHECK(diag.beta() == 1);
}

TEST_CASE("composition with the index normalization") {
  MeasuredGroup g = mc4();
  Polyhom d = doubling_polyhom();
  Polyhom id = Polyhom::identity(g);
  CHECK(ph_compose(id, d) == d);
  CHECK(ph_compose(d, id) == d);

  Polyhom z = Polyhom::zero(g, g);
  CHECK(ph_compose(z, d).is_zero());
  CHECK(ph_compose(d, z).is_zero());

  Polyhom s = ph_compose(d, d);
  CHECK(s.alpha() == Rational(1, 4));
  CHECK(s.beta() == 1);
  CHECK(s.weight() == Rational(1, 4));
  for (int x = 0; x < 4; ++x) CHECK(s.relation().contains(x, 0));
  CHECK(s.relation().size() == 4);
  // operator cross-check
  CHECK(mat_mul(pi(d), pi(d)) == pi(s));
}

TEST_CASE("involution swaps the marginal densities") {
  Polyhom d = doubling_polyhom();
  CHECK(involution(involution(d)) == d);
  CHECK(involution(d).alpha() == d.beta());
  CHECK(involution(d).beta() == d.alpha());
  MeasuredGroup g = mc4();
  CHECK(involution(Polyhom::zero(g, g)).is_zero());

  std::mt19937_64 rng(3);
  auto pool = group_pool();
  for (int i = 0; i < 20; ++i) {
    // (t r)^op = r^op t^op including weights
    const auto& a = pool[rng() % 6];
    const auto& b = pool[rng() % 6];
    const auto& c = pool[rng() % 6];
    std::vector<std::pair<int, int>> gr{{(int)(rng() % a.group->order()),
                                         (int)(rng() % b.group->order())}};
    std::vector<std::pair<int, int>> gt{{(int)(rng() % b.group->order()),
                                         (int)(rng() % c.group->order())}};
    MultRelation mr = MultRelation::generate(a.group, b.group, gr);
    MultRelation mt = MultRelation::generate(b.group, c.group, gt);
    Rational wr = (a.point_mass / mr.indef().size() < b.point_mass / mr.ker().size()
                       ? a.point_mass / mr.indef().size()
                       : b.point_mass / mr.ker().size());
    Rational wt = (b.point_mass / mt.indef().size() < c.point_mass / mt.ker().size()
                       ? b.point_mass / mt.indef().size()
                       : c.point_mass / mt.ker().size());
    Polyhom r = Polyhom::make(mr, wr, a, b);
    Polyhom t = Polyhom::make(mt, wt, b, c);
    CHECK(involution(ph_compose(t, r)) == ph_compose(involution(r), involution(t)));
  }
}

TEST_CASE("diagonal quotient polyhomomorphisms") {
  MeasuredGroup g = mc4();
  Subgroup whole = Subgroup::full(g.group);
  Subgroup trivial = Subgroup::trivial(g.group);

  DiagonalQuotient a = mu_phi_delta(g, whole, trivial);
  CHECK(a.poly.alpha() == 1);
  CHECK(a.poly.beta() == 1);
  CHECK(a.quotient.group->order() == 4);
  CHECK(a.quotient.point_mass == 1);

  DiagonalQuotient b = mu_phi_delta(g, whole, whole);
  CHECK(b.quotient.group->order() == 1);
  CHECK(b.quotient.point_mass == 4);

  Subgroup half = Subgroup::generate(g.group, {2});
  DiagonalQuotient c = mu_phi_delta(g, half, half);
  CHECK(c.poly.relation().size() == 2);
  CHECK(c.quotient.group->order() == 1);
  CHECK(c.quotient.point_mass == 2);
  CHECK(c.poly.alpha() == 1);
  CHECK(c.poly.beta() == 1);
}

TEST_CASE("three-factor decomposition recomposes exactly") {
  MeasuredGroup g = mc4();
  Polyhom id = Polyhom::identity(g);
  Decomposition di = decompose(id);
  CHECK(ph_compose(di.t, ph_compose(di.s, di.q)) == id);

  Polyhom d = doubling_polyhom();
  Decomposition dd = decompose(d);
  CHECK(dd.q.target().group->order() == 2);
  CHECK(dd.s.source().group->order() == 2);
  CHECK(ph_compose(dd.t, ph_compose(dd.s, dd.q)) == d);
  CHECK(dd.s.alpha() == d.alpha());
  CHECK(dd.s.beta() == d.beta());

  CHECK_THROWS_AS(decompose(Polyhom::zero(g, g)), ZeroPolyhom);
}

TEST_CASE("index semigroup membership") {
  MeasuredGroup c4 = mc4();
  CHECK(lambda_membership(c4, Rational(1)));
  CHECK(lambda_membership(c4, Rational(1, 8)));  // 8 = 2 * 4
  CHECK_FALSE(lambda_membership(c4, Rational(1, 3)));
  MeasuredGroup c3 = measured(FiniteGroup::cyclic(3));
  CHECK_FALSE(lambda_membership(c3, Rational(1, 2)));
  CHECK(lambda_membership(c3, Rational(1, 9)));
  CHECK_FALSE(lambda_membership(c3, Rational(2, 3)));
}

TEST_CASE("box measures") {
  Polyhom d = doubling_polyhom();
  CHECK(box_measure(d, {}, {0, 2}) == 0);
  CHECK(box_measure(d, {1, 3}, {2}) == 1);
  MeasuredGroup g = mc4();
  CHECK(box_measure(Polyhom::identity(g), {0, 1, 2, 3}, {0, 1, 2, 3}) == 4);
  CHECK(box_measure(Polyhom::zero(g, g), {0}, {0}) == 0);
}
