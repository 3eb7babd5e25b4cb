#include "polyhom/operators.hpp"

#include <algorithm>
#include <set>

namespace polyhom {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch();
  RationalMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (bkj == 0) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

RationalMatrix scalar_mul(const Rational& c, const RationalMatrix& a) {
  RationalMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = c * a.at(i, j);
  return out;
}

std::vector<Rational> mat_vec(const RationalMatrix& a, const std::vector<Rational>& v) {
  if ((int)v.size() != a.cols()) throw DimensionMismatch();
  std::vector<Rational> out(a.rows(), Rational(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0 && v[j] != 0) out[i] += a.at(i, j) * v[j];
  return out;
}

RationalMatrix adjoint(const RationalMatrix& a, const Rational& row_pm, const Rational& col_pm) {
  RationalMatrix out(a.cols(), a.rows());
  Rational scale = row_pm / col_pm;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j) * scale;
  return out;
}

Rational weighted_dot(const MeasuredGroup& g, const std::vector<Rational>& u,
                      const std::vector<Rational>& v) {
  if (u.size() != v.size() || (int)u.size() != g.group->order()) throw DimensionMismatch();
  Rational s = 0;
  for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return g.point_mass * s;
}

RationalMatrix pi_star(const MultRelation& r) {
  RationalMatrix m(r.source()->order(), r.target()->order());
  for (auto [g, h] : r.pairs()) m.at(g, h) = 1;
  return m;
}

RationalMatrix pi(const Polyhom& p) {
  RationalMatrix m(p.source().group->order(), p.target().group->order());
  if (p.is_zero()) return m;
  Rational entry = p.weight() / p.source().point_mass;
  for (auto [g, h] : p.relation().pairs()) m.at(g, h) = entry;
  return m;
}

RationalMatrix projection(const MeasuredGroup& g, const Subgroup& phi, const Subgroup& delta) {
  if (!is_normal_in(delta, phi)) throw NotNormal();
  int n = g.group->order();
  RationalMatrix m(n, n);
  Rational inv(1, delta.size());
  for (int x : phi.elements())
    for (int d : delta.elements()) m.at(x, g.group->op(x, d)) = inv;
  return m;
}

PartialIsometryReport verify_partial_isometry(const Polyhom& p) {
  if (p.is_zero()) throw ZeroPolyhom();
  const MultRelation& r = p.relation();
  RationalMatrix a = pi(p);
  RationalMatrix a_star = adjoint(a, p.source().point_mass, p.target().point_mass);
  Rational scale_sq = p.alpha() * p.beta();

  RationalMatrix initial = projection(p.target(), r.im(), r.indef());
  RationalMatrix final_ = projection(p.source(), r.dom(), r.ker());

  if (mat_mul(a_star, a) != scalar_mul(scale_sq, initial))
    throw PartialIsometryViolated("Pi* Pi != alpha beta P_{im|indef}");
  if (mat_mul(a, a_star) != scalar_mul(scale_sq, final_))
    throw PartialIsometryViolated("Pi Pi* != alpha beta P_{dom|ker}");
  return PartialIsometryReport{std::move(scale_sq), std::move(initial), std::move(final_)};
}

Rational angle_check(const MeasuredGroup& g, const Subgroup& phi, const Subgroup& delta,
                     const Subgroup& psi, const Subgroup& gamma) {
  if (phi == psi && delta == gamma) throw SamePair();
  RationalMatrix p = projection(g, phi, delta);
  RationalMatrix q = projection(g, psi, gamma);

  int ia = subgroup_index(delta, intersect(delta, psi));
  int ib = subgroup_index(gamma, intersect(gamma, phi));
  Rational sigma(1, (long long)ia * ib);

  RationalMatrix m = mat_mul(mat_mul(p, q), p);
  if (mat_mul(m, m) != scalar_mul(sigma, m))
    throw InternalInconsistency("angle spectrum identity M^2 = sigma M failed");
  return sigma;
}

std::vector<Rational> apply_indicator(const Polyhom& p, const std::vector<int>& b) {
  int n = p.source().group->order();
  std::vector<Rational> out(n, Rational(0));
  if (p.is_zero()) return out;
  const MultRelation& r = p.relation();
  std::vector<bool> in_b(p.target().group->order(), false);
  for (int y : b) {
    if (y < 0 || y >= (int)in_b.size()) throw ElementOutOfRange(y);
    in_b[y] = true;
  }
  Rational entry = p.weight() / p.source().point_mass;
  for (auto [g, h] : r.pairs())
    if (in_b[h]) out[g] += entry;

  // When B is an indef-invariant subset of im R the lemma value is forced;
  // cross-check it.
  bool invariant = true;
  for (int y : b)
    if (!r.im().contains(y)) { invariant = false; break; }
  if (invariant) {
    const auto& h_group = *p.target().group;
    for (int q : r.indef().elements()) {
      for (int y : b)
        if (!in_b[h_group.op(q, y)]) { invariant = false; break; }
      if (!invariant) break;
    }
  }
  if (invariant) {
    std::set<int> preimage;
    for (auto [g, h] : r.pairs())
      if (in_b[h]) preimage.insert(g);
    for (int g = 0; g < n; ++g) {
      Rational expect = preimage.count(g) ? p.alpha() : Rational(0);
      if (out[g] != expect)
        throw InternalInconsistency("indicator lemma value mismatch");
    }
  }
  return out;
}

}  // namespace polyhom
