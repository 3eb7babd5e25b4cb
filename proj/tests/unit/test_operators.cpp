#include <doctest.h>

#include "polyhom/operators.hpp"
#include "polyhom/verify.hpp"

using namespace polyhom;

namespace {

MeasuredGroup mc4() { return measured(FiniteGroup::cyclic(4)); }

Polyhom doubling_polyhom() {
  MeasuredGroup g = mc4();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < 4; ++x) pairs.emplace_back(x, (2 * x) % 4);
  return Polyhom::make(MultRelation::from_pairs(g.group, g.group, pairs), Rational(1, 2), g, g);
}

}  // namespace

TEST_CASE("summation matrices") {
  auto c4 = FiniteGroup::cyclic(4);
  CHECK(pi_star(MultRelation::identity(c4)) == RationalMatrix::identity(4));
  RationalMatrix full = pi_star(MultRelation::full(c4, c4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(full.at(i, j) == 1);

  MeasuredGroup g = mc4();
  CHECK(pi(Polyhom::identity(g)) == RationalMatrix::identity(4));
  RationalMatrix z = pi(Polyhom::zero(g, g));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(z.at(i, j) == 0);
}

TEST_CASE("matrix utilities") {
  RationalMatrix a = pi(doubling_polyhom());
  CHECK(mat_mul(a, RationalMatrix::identity(4)) == a);
  RationalMatrix astar = adjoint(a, 1, 1);
  CHECK(adjoint(astar, 1, 1) == a);
  CHECK_THROWS_AS(mat_mul(a, RationalMatrix(3, 3)), DimensionMismatch);

  // the adjoint of the operator is the operator of the reversed value, also
  // with unequal point masses
  Polyhom d = doubling_polyhom();
  CHECK(adjoint(pi(d), d.source().point_mass, d.target().point_mass) == pi(involution(d)));
  DiagonalQuotient mu = mu_phi_delta(mc4(), Subgroup::full(mc4().group),
                                     Subgroup::generate(mc4().group, {2}));
  CHECK(adjoint(pi(mu.poly), mu.poly.source().point_mass, mu.poly.target().point_mass) ==
        pi(involution(mu.poly)));
}

TEST_CASE("projections") {
  MeasuredGroup g = mc4();
  Subgroup whole = Subgroup::full(g.group);
  Subgroup trivial = Subgroup::trivial(g.group);
  CHECK(projection(g, whole, trivial) == RationalMatrix::identity(4));

  RationalMatrix avg = projection(g, whole, whole);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(avg.at(i, j) == Rational(1, 4));

  Subgroup half = Subgroup::generate(g.group, {2});
  RationalMatrix p = projection(g, half, half);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      bool on = (i == 0 || i == 2) && (j == 0 || j == 2);
      CHECK(p.at(i, j) == (on ? Rational(1, 2) : Rational(0)));
    }
  CHECK(mat_mul(p, p) == p);

  auto s3 = FiniteGroup::symmetric(3);
  CHECK_THROWS_AS(projection(measured(s3), Subgroup::full(s3), Subgroup::generate(s3, {1})),
                  NotNormal);
}

TEST_CASE("partial isometries") {
  MeasuredGroup g = mc4();
  PartialIsometryReport id_rep = verify_partial_isometry(Polyhom::identity(g));
  CHECK(id_rep.scale_sq == 1);
  CHECK(id_rep.initial == RationalMatrix::identity(4));
  CHECK(id_rep.final_ == RationalMatrix::identity(4));

  // the diagonal quotient value embeds L2 of the quotient isometrically:
  // Pi* Pi is the identity there
  DiagonalQuotient mu = mu_phi_delta(g, Subgroup::full(g.group),
                                     Subgroup::generate(g.group, {2}));
  PartialIsometryReport r = verify_partial_isometry(mu.poly);
  CHECK(r.scale_sq == 1);
  RationalMatrix prod = mat_mul(adjoint(pi(mu.poly), mu.poly.source().point_mass,
                                        mu.poly.target().point_mass),
                                pi(mu.poly));
  CHECK(prod == RationalMatrix::identity(2));

  Polyhom d = doubling_polyhom();
  PartialIsometryReport rd = verify_partial_isometry(d);
  CHECK(rd.scale_sq == Rational(1, 2));
  CHECK(rd.initial == projection(g, d.relation().im(), d.relation().indef()));
  CHECK(rd.final_ == projection(g, d.relation().dom(), d.relation().ker()));

  CHECK_THROWS_AS(verify_partial_isometry(Polyhom::zero(g, g)), ZeroPolyhom);
}

TEST_CASE("angles between projection pairs") {
  auto klein = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  MeasuredGroup g = measured(klein);
  Subgroup phi = Subgroup::generate(klein, {1});
  Subgroup psi = Subgroup::generate(klein, {2});
  Subgroup trivial = Subgroup::trivial(klein);
  CHECK(angle_check(g, phi, trivial, psi, trivial) == 1);
  CHECK(angle_check(g, phi, phi, psi, psi) == Rational(1, 4));
  CHECK_THROWS_AS(angle_check(g, phi, phi, phi, phi), SamePair);
}

TEST_CASE("indicator transport") {
  MeasuredGroup g = mc4();
  Polyhom id = Polyhom::identity(g);
  std::vector<Rational> v = apply_indicator(id, {1, 3});
  CHECK(v == std::vector<Rational>{0, 1, 0, 1});

  Polyhom d = doubling_polyhom();
  // {1,3} misses im = {0,2} entirely
  std::vector<Rational> zero = apply_indicator(d, {1, 3});
  CHECK(zero == std::vector<Rational>(4, Rational(0)));
  // the invariant set {0,2} pulls back to alpha on all of C4
  std::vector<Rational> half = apply_indicator(d, {0, 2});
  CHECK(half == std::vector<Rational>(4, Rational(1, 2)));
}

TEST_CASE("operators are sub-Markov") {
  Polyhom d = doubling_polyhom();
  RationalMatrix a = pi(d);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) CHECK(a.at(i, j) >= 0);
  // contraction on the spanning indicator vectors, squared and weighted
  for (int h = 0; h < 4; ++h) {
    std::vector<Rational> e(4, Rational(0));
    e[h] = 1;
    std::vector<Rational> img = mat_vec(a, e);
    CHECK(weighted_dot(d.source(), img, img) <= weighted_dot(d.target(), e, e));
  }
}
