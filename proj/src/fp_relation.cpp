#include "polyhom/fp_relation.hpp"

#include <algorithm>
#include <numeric>

namespace polyhom {

namespace {

std::vector<int> iota_coords(int from, int to) {
  std::vector<int> c(to - from);
  std::iota(c.begin(), c.end(), from);
  return c;
}

}  // namespace

gf::Subspace w_subspace(const FpWindow& win, int m) {
  if (m < -win.radius || m > win.radius)
    throw OutOfWindow("W^" + std::to_string(m) + " at radius " + std::to_string(win.radius));
  // coordinates l <= -m-1, i.e. positions 0 .. radius-m-1
  return gf::coordinate_subspace(win.p, 2 * win.radius, iota_coords(0, win.radius - m));
}

const gf::Subspace& FpPolyhom::carrier() const {
  if (zero_) throw ZeroPolyhom();
  return carrier_;
}
const Rational& FpPolyhom::weight() const {
  if (zero_) throw ZeroPolyhom();
  return weight_;
}
const gf::Subspace& FpPolyhom::dom() const {
  if (zero_) throw ZeroPolyhom();
  return dom_;
}
const gf::Subspace& FpPolyhom::im() const {
  if (zero_) throw ZeroPolyhom();
  return im_;
}
const gf::Subspace& FpPolyhom::ker() const {
  if (zero_) throw ZeroPolyhom();
  return ker_;
}
const gf::Subspace& FpPolyhom::indef() const {
  if (zero_) throw ZeroPolyhom();
  return indef_;
}

FpPolyhom::MarginalDims FpPolyhom::marginal_dims() const {
  if (zero_) throw ZeroPolyhom();
  return MarginalDims{dom_.dim(), im_.dim(), ker_.dim(), indef_.dim()};
}

bool FpPolyhom::operator==(const FpPolyhom& o) const {
  if (!(space_ == o.space_) || zero_ != o.zero_) return false;
  if (zero_) return true;
  return weight_ == o.weight_ && carrier_ == o.carrier_;
}

FpPolyhom FpPolyhom::zero(FpSpace space) { return FpPolyhom(space); }

FpPolyhom FpPolyhom::make(FpSpace space, gf::Subspace carrier, Rational weight) {
  if (carrier.ambient != 2 * space.dim)
    throw Error("carrier ambient does not match the space");
  if (carrier.p != space.p) throw Error("carrier field does not match the space");
  if (weight <= 0) throw Error("weight must be positive");
  power_exponent(weight, space.p);  // weights are p powers; throws otherwise

  FpPolyhom r(space);
  r.zero_ = false;
  int n = space.dim;
  auto first = iota_coords(0, n);
  auto second = iota_coords(n, 2 * n);
  r.dom_ = gf::project(carrier, first);
  r.im_ = gf::project(carrier, second);
  gf::Subspace left = gf::coordinate_subspace(space.p, 2 * n, first);
  gf::Subspace right = gf::coordinate_subspace(space.p, 2 * n, second);
  r.ker_ = gf::project(gf::intersect(carrier, left), first);
  r.indef_ = gf::project(gf::intersect(carrier, right), second);

  r.alpha_ = weight * rational_pow(space.p, r.indef_.dim() + space.pm_exp);
  r.beta_ = weight * rational_pow(space.p, r.ker_.dim() + space.pm_exp);
  if (r.alpha_ > 1) throw DominationViolated("alpha", r.alpha_);
  if (r.beta_ > 1) throw DominationViolated("beta", r.beta_);
  r.carrier_ = std::move(carrier);
  r.weight_ = std::move(weight);
  return r;
}

FpPolyhom FpPolyhom::identity(FpSpace space) {
  int n = space.dim;
  gf::Matrix rows(space.p, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    rows.at(i, i) = 1;
    rows.at(i, n + i) = 1;
  }
  return make(space, gf::make_subspace(space.p, 2 * n, rows), space.point_mass());
}

FpPolyhom FpPolyhom::graph(FpSpace space, const gf::Matrix& g, std::optional<Rational> weight) {
  if (g.rows != space.dim || g.cols != space.dim)
    throw Error("matrix does not match the space dimension");
  int n = space.dim;
  gf::Matrix rows(space.p, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    rows.at(i, i) = 1;
    for (int j = 0; j < n; ++j) rows.at(i, n + j) = g.at(i, j);
  }
  gf::Subspace carrier = gf::make_subspace(space.p, 2 * n, rows);
  if (!weight) {
    // ker of the row action versus indef (empty for a graph); scale so the
    // larger marginal density is exactly one
    FpPolyhom probe = make(space, carrier, rational_pow(space.p, -2 * n - space.pm_exp));
    int top = std::max(probe.ker_.dim(), probe.indef_.dim());
    weight = rational_pow(space.p, -top - space.pm_exp);
  }
  return make(space, std::move(carrier), *weight);
}

FpPolyhom fp_involution(const FpPolyhom& r) {
  if (r.is_zero()) return FpPolyhom::zero(r.space());
  int n = r.space().dim;
  const gf::Matrix& b = r.carrier().basis;
  gf::Matrix rows(r.space().p, b.rows, 2 * n);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < n; ++j) {
      rows.at(i, j) = b.at(i, n + j);
      rows.at(i, n + j) = b.at(i, j);
    }
  return FpPolyhom::make(r.space(), gf::make_subspace(r.space().p, 2 * n, rows), r.weight());
}

FpPolyhom fp_compose(const FpPolyhom& t, const FpPolyhom& r) {
  if (!(t.space() == r.space())) throw WindowMismatch();
  if (t.is_zero() || r.is_zero()) return FpPolyhom::zero(r.space());
  int n = r.space().dim;
  int p = r.space().p;

  // triples (u, v, w) with (u,v) in R and (v,w) in T
  gf::Matrix left(p, r.carrier().dim() + n, 3 * n);
  for (int i = 0; i < r.carrier().dim(); ++i)
    for (int j = 0; j < 2 * n; ++j) left.at(i, j) = r.carrier().basis.at(i, j);
  for (int i = 0; i < n; ++i) left.at(r.carrier().dim() + i, 2 * n + i) = 1;
  gf::Matrix right(p, t.carrier().dim() + n, 3 * n);
  for (int i = 0; i < t.carrier().dim(); ++i)
    for (int j = 0; j < 2 * n; ++j) right.at(i, n + j) = t.carrier().basis.at(i, j);
  for (int i = 0; i < n; ++i) right.at(t.carrier().dim() + i, i) = 1;
  gf::Subspace triples = gf::intersect(gf::make_subspace(p, 3 * n, left),
                                       gf::make_subspace(p, 3 * n, right));
  std::vector<int> uw = iota_coords(0, n);
  for (int i = 2 * n; i < 3 * n; ++i) uw.push_back(i);
  gf::Subspace carrier = gf::project(triples, uw);

  int denom_a = r.indef().dim() - gf::intersect(r.indef(), t.dom()).dim();
  int denom_b = t.ker().dim() - gf::intersect(t.ker(), r.im()).dim();
  Rational alpha = r.alpha() * t.alpha() * rational_pow(p, -denom_a);
  Rational beta = r.beta() * t.beta() * rational_pow(p, -denom_b);

  // recover the weight from alpha, cross-check against beta
  auto first = iota_coords(0, n);
  auto second = iota_coords(n, 2 * n);
  gf::Subspace left_axis = gf::coordinate_subspace(p, 2 * n, first);
  gf::Subspace right_axis = gf::coordinate_subspace(p, 2 * n, second);
  int dim_indef = gf::intersect(carrier, right_axis).dim();
  int dim_ker = gf::intersect(carrier, left_axis).dim();
  Rational w_alpha = alpha * rational_pow(p, -dim_indef - r.space().pm_exp);
  Rational w_beta = beta * rational_pow(p, -dim_ker - r.space().pm_exp);
  if (w_alpha != w_beta)
    throw InternalInconsistency("fp alpha- and beta-derived weights disagree");
  return FpPolyhom::make(r.space(), std::move(carrier), w_alpha);
}

FpPolyhom theta(const FpWindow& win, int m) {
  if (m < 1 || m > win.radius) throw OutOfWindow("theta_" + std::to_string(m));
  int n = 2 * win.radius, p = win.p;
  int deep = win.radius - m;  // dim W^m
  gf::Matrix rows(p, 2 * deep + 2 * m, 2 * n);
  int rrow = 0;
  for (int q = 0; q < deep; ++q) {  // W^m free on both sides
    rows.at(rrow++, q) = 1;
    rows.at(rrow++, n + q) = 1;
  }
  for (int q = deep; q < deep + 2 * m; ++q) {  // middle diagonal
    rows.at(rrow, q) = 1;
    rows.at(rrow, n + q) = 1;
    ++rrow;
  }
  Rational weight = rational_pow(p, -win.radius - deep);
  return FpPolyhom::make(win.space(), gf::make_subspace(p, 2 * n, rows), weight);
}

FpPolyhom sandwich(const FpPolyhom& r, const FpWindow& win, int m) {
  if (!(r.space() == win.space())) throw WindowMismatch();
  FpPolyhom th = theta(win, m);
  return fp_compose(th, fp_compose(r, th));
}

FpPolyhom middle_quotient(const FpPolyhom& s, const FpWindow& win, int m) {
  if (!(s.space() == win.space())) throw WindowMismatch();
  if (s.is_zero()) return FpPolyhom::zero(FpSpace{win.p, 2 * m, m});
  gf::Subspace wm = w_subspace(win, m);
  gf::Subspace wneg = w_subspace(win, -m);
  if (!gf::subspace_leq(s.dom(), wneg) || !gf::subspace_leq(s.im(), wneg) ||
      !gf::subspace_leq(wm, s.ker()) || !gf::subspace_leq(wm, s.indef()))
    throw Error("polyhomomorphism is not sandwich-shaped at level " + std::to_string(m));

  int n = 2 * win.radius;
  int deep = win.radius - m;
  std::vector<int> mid;
  for (int q = deep; q < deep + 2 * m; ++q) mid.push_back(q);
  for (int q = n + deep; q < n + deep + 2 * m; ++q) mid.push_back(q);
  gf::Subspace carrier = gf::project(s.carrier(), mid);
  Rational weight = s.weight() * rational_pow(win.p, 2 * deep);
  FpPolyhom q = FpPolyhom::make(FpSpace{win.p, 2 * m, m}, std::move(carrier), weight);
  if (q.alpha() != s.alpha() || q.beta() != s.beta())
    throw InternalInconsistency("middle quotient changed alpha or beta");
  return q;
}

int chi_alpha_exponent(const gf::Matrix& g, int s, int d) {
  return gf::rank(gf::submatrix(g, 0, s, s + d, 2 * s + d));
}

FpPolyhom chi(const gf::Matrix& g, int s, int d) {
  int n = 2 * s + d;
  if (s < 0 || d <= 0) throw SplitMismatch("block sizes must be positive");
  if (g.rows != n || g.cols != n)
    throw SplitMismatch("matrix size " + std::to_string(g.rows) + " != " + std::to_string(n));
  if (!gf::is_invertible(g)) throw gf::NotInvertible();
  int p = g.p;

  // graph of the row action restricted to inputs (x, u, 0)
  gf::Matrix rows(p, s + d, 2 * n);
  for (int i = 0; i < s + d; ++i) {
    rows.at(i, i) = 1;
    for (int j = 0; j < n; ++j) rows.at(i, n + j) = g.at(i, j);
  }
  gf::Subspace graph = gf::make_subspace(p, 2 * n, rows);
  // outputs must land in (y, v, 0)
  std::vector<int> allowed = iota_coords(0, n + s + d);
  gf::Subspace constrained = gf::intersect(graph, gf::coordinate_subspace(p, 2 * n, allowed));
  // keep (u, v)
  std::vector<int> uv = iota_coords(s, s + d);
  for (int j = n + s; j < n + s + d; ++j) uv.push_back(j);
  gf::Subspace carrier = gf::project(constrained, uv);

  int a = chi_alpha_exponent(g, s, d);
  int mu = (d + 1) / 2;
  FpSpace space{p, d, mu};
  gf::Subspace right_axis = gf::coordinate_subspace(p, 2 * d, iota_coords(d, 2 * d));
  int dim_indef = gf::intersect(carrier, right_axis).dim();
  Rational weight = rational_pow(p, -a - mu - dim_indef);
  return FpPolyhom::make(space, std::move(carrier), weight);
}

namespace {

gf::Matrix swap_permutation(int p, int n, int lo, int len) {
  // swaps coordinate blocks [lo, lo+len) and [lo+len, lo+2len)
  gf::Matrix g(p, n, n);
  for (int i = 0; i < n; ++i) {
    int j = i;
    if (i >= lo && i < lo + len) j = i + len;
    else if (i >= lo + len && i < lo + 2 * len) j = i - len;
    g.at(i, j) = 1;
  }
  return g;
}

}  // namespace

FpPolyhom s_plus(const FpWindow& win, int m, int j) {
  if (m < 1 || m > win.radius || j < 0 || m + 2 * j > win.radius)
    throw OutOfWindow("s_plus block " + std::to_string(j) + " at level " + std::to_string(m));
  int n = 2 * win.radius;
  return FpPolyhom::graph(win.space(), swap_permutation(win.p, n, win.pos(m), j));
}

FpPolyhom s_minus(const FpWindow& win, int m, int j) {
  if (m < 1 || m > win.radius || j < 0 || m + 2 * j > win.radius)
    throw OutOfWindow("s_minus block " + std::to_string(j) + " at level " + std::to_string(m));
  int n = 2 * win.radius;
  // swaps [-m-2j, -m-j-1] and [-m-j, -m-1]
  return FpPolyhom::graph(win.space(),
                          swap_permutation(win.p, n, win.pos(-m - 2 * j), j));
}

Rational fp_box_measure(const FpPolyhom& r, const gf::Subspace& wk,
                        const std::vector<int>& va, const std::vector<int>& vb) {
  if (r.is_zero()) return 0;
  int n = r.space().dim, p = r.space().p;
  if ((int)va.size() != n || (int)vb.size() != n) throw Error("shift dimension mismatch");
  // W^k x W^k inside the pair space
  gf::Matrix rows(p, 2 * wk.dim(), 2 * n);
  for (int i = 0; i < wk.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      rows.at(i, j) = wk.basis.at(i, j);
      rows.at(wk.dim() + i, n + j) = wk.basis.at(i, j);
    }
  gf::Subspace box = gf::make_subspace(p, 2 * n, rows);
  std::vector<int> shift(2 * n);
  for (int j = 0; j < n; ++j) {
    shift[j] = va[j] % p;
    shift[n + j] = vb[j] % p;
  }
  if (!gf::sum(r.carrier(), box).contains(shift)) return 0;
  return r.weight() * rational_pow(p, gf::intersect(r.carrier(), box).dim());
}

std::vector<std::vector<int>> box_family_shifts(const FpWindow& win, int k, int l) {
  if (k < -win.radius || k > win.radius || l < -win.radius || l > win.radius)
    throw OutOfWindow("box family (" + std::to_string(k) + "," + std::to_string(l) + ")");
  int n = 2 * win.radius;
  // representatives of W^(-l)/W^k: free coordinates -k .. l-1
  std::vector<int> free_pos;
  for (int c = -k; c <= l - 1; ++c) free_pos.push_back(win.pos(c));
  long count = 1;
  for (size_t i = 0; i < free_pos.size(); ++i) {
    count *= win.p;
    if (count > 4096) throw gf::TooLarge("box family");
  }
  std::vector<std::vector<int>> shifts;
  shifts.reserve(count);
  std::vector<int> digits(free_pos.size(), 0);
  for (long it = 0; it < count; ++it) {
    std::vector<int> v(n, 0);
    for (size_t i = 0; i < free_pos.size(); ++i) v[free_pos[i]] = digits[i];
    shifts.push_back(std::move(v));
    for (size_t i = 0; i < free_pos.size(); ++i) {
      digits[i] = (digits[i] + 1) % win.p;
      if (digits[i] != 0) break;
    }
  }
  return shifts;
}

Rational box_discrepancy(const FpPolyhom& a, const FpPolyhom& b, const FpWindow& win,
                         int k, int l) {
  if (!(a.space() == win.space()) || !(b.space() == win.space())) throw WindowMismatch();
  gf::Subspace wk = w_subspace(win, k);
  auto shifts = box_family_shifts(win, k, l);
  Rational worst = 0;
  for (const auto& va : shifts)
    for (const auto& vb : shifts) {
      Rational d = fp_box_measure(a, wk, va, vb) - fp_box_measure(b, wk, va, vb);
      if (d < 0) d = -d;
      if (d > worst) worst = d;
    }
  return worst;
}

namespace {

int encode_vec(const std::vector<int>& v, int p) {
  int x = 0;
  for (int i = (int)v.size() - 1; i >= 0; --i) x = x * p + v[i];
  return x;
}

std::vector<int> decode_vec(int x, int p, int dim) {
  std::vector<int> v(dim);
  for (int i = 0; i < dim; ++i) {
    v[i] = x % p;
    x /= p;
  }
  return v;
}

}  // namespace

Polyhom lower_to_group(const FpPolyhom& r) {
  const FpSpace& sp = r.space();
  MeasuredGroup g = measured(FiniteGroup::elementary_abelian(sp.p, sp.dim), sp.point_mass());
  if (r.is_zero()) return Polyhom::zero(g, g);
  auto pts = gf::points(r.carrier(), 1 << 14);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(pts.size());
  for (const auto& pt : pts) {
    std::vector<int> u(pt.begin(), pt.begin() + sp.dim);
    std::vector<int> w(pt.begin() + sp.dim, pt.end());
    pairs.emplace_back(encode_vec(u, sp.p), encode_vec(w, sp.p));
  }
  return Polyhom::make(MultRelation::from_pairs(g.group, g.group, pairs), r.weight(), g, g);
}

FpPolyhom raise_from_group(const Polyhom& p, const FpSpace& space) {
  if (p.is_zero()) return FpPolyhom::zero(space);
  const auto& pairs = p.relation().pairs();
  gf::Matrix rows(space.p, (int)pairs.size(), 2 * space.dim);
  for (int i = 0; i < (int)pairs.size(); ++i) {
    auto u = decode_vec(pairs[i].first, space.p, space.dim);
    auto w = decode_vec(pairs[i].second, space.p, space.dim);
    for (int j = 0; j < space.dim; ++j) {
      rows.at(i, j) = u[j];
      rows.at(i, space.dim + j) = w[j];
    }
  }
  gf::Subspace carrier = gf::make_subspace(space.p, 2 * space.dim, rows);
  // a subgroup of an elementary abelian group is automatically a subspace;
  // confirm the sizes agree
  long expect = 1;
  for (int i = 0; i < carrier.dim(); ++i) expect *= space.p;
  if (expect != (long)pairs.size())
    throw Error("carrier is not a linear subspace of the window");
  return FpPolyhom::make(space, std::move(carrier), p.weight());
}

// ---------------------------------------------------------------------------
// chi realization

namespace {

// extends `base` (rows in F^dim) to the span of `goal`, picking rows of goal
// greedily; returns the picked rows
std::vector<std::vector<int>> greedy_extend(const gf::Subspace& base, const gf::Matrix& goal_rows,
                                            int p, int dim) {
  std::vector<std::vector<int>> picked;
  gf::Matrix acc = base.basis;
  gf::Subspace cur = base;
  for (int i = 0; i < goal_rows.rows; ++i) {
    std::vector<int> row(dim);
    for (int j = 0; j < dim; ++j) row[j] = goal_rows.at(i, j);
    if (cur.contains(row)) continue;
    picked.push_back(row);
    gf::Matrix next(p, cur.dim() + 1, dim);
    for (int r = 0; r < cur.dim(); ++r)
      for (int j = 0; j < dim; ++j) next.at(r, j) = cur.basis.at(r, j);
    for (int j = 0; j < dim; ++j) next.at(cur.dim(), j) = row[j];
    cur = gf::make_subspace(p, dim, next);
  }
  return picked;
}

gf::Matrix stack_rows(int p, int cols, const std::vector<std::vector<int>>& rows) {
  gf::Matrix m(p, (int)rows.size(), cols);
  for (int i = 0; i < (int)rows.size(); ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

int realize_min_outer_block(const FpPolyhom& target) {
  if (target.is_zero()) return -1;
  int p = target.space().p, d = target.space().dim;
  int a = -power_exponent(target.alpha(), p);
  int kl = target.ker().dim(), jl = target.indef().dim(), dl = target.dom().dim();
  if (a < kl - jl) return -1;  // beta would exceed one
  return std::max(0, a + std::max(jl, d - dl));
}

std::optional<ChiRealization> realize_chi(const FpPolyhom& target, long budget, int forced_s) {
  if (target.is_zero()) return std::nullopt;
  int p = target.space().p, d = target.space().dim;
  int a = -power_exponent(target.alpha(), p);
  if (a < 0) return std::nullopt;  // alpha > 1 cannot happen for a valid value
  int kl = target.ker().dim(), jl = target.indef().dim(), dl = target.dom().dim();
  int min_s = realize_min_outer_block(target);
  if (min_s < 0) return std::nullopt;
  if (forced_s >= 0 && forced_s < min_s) return std::nullopt;
  const int s_pick = forced_s >= 0 ? forced_s : min_s;

  // small-support search first: candidates near the identity in increasing
  // support order
  {
    int s = s_pick;
    int n = 2 * s + d;
    long tried = 0;
    gf::Matrix id = gf::Matrix::identity(p, n);
    auto try_candidate = [&](const gf::Matrix& g) -> bool {
      if (!gf::is_invertible(g)) return false;
      FpPolyhom c = chi(g, s, d);
      return c == target;
    };
    if (tried++ < budget && try_candidate(id)) return ChiRealization{id, s};
    for (int r = 0; r < n && tried < budget; ++r)
      for (int c = 0; c < n && tried < budget; ++c) {
        if (r == c) continue;
        for (int val = 1; val < p && tried < budget; ++val) {
          gf::Matrix g = id;
          g.at(r, c) = val;
          ++tried;
          if (try_candidate(g)) return ChiRealization{g, s};
        }
      }
  }

  // direct construction
  int s = s_pick;
  int n = 2 * s + d;
  int q = dl - kl;

  // adapted basis of the u side: ker rows, then coset representatives of
  // dom/ker taken from the carrier basis together with their partners, then a
  // complement of dom
  std::vector<std::vector<int>> k_rows;
  for (int i = 0; i < kl; ++i) {
    std::vector<int> row(d);
    for (int j = 0; j < d; ++j) row[j] = target.ker().basis.at(i, j);
    k_rows.push_back(row);
  }
  std::vector<std::vector<int>> d_rows, partners;
  {
    gf::Subspace cur = target.ker();
    for (int i = 0; i < target.carrier().dim(); ++i) {
      std::vector<int> u(d), v(d);
      for (int j = 0; j < d; ++j) {
        u[j] = target.carrier().basis.at(i, j);
        v[j] = target.carrier().basis.at(i, d + j);
      }
      if (cur.contains(u)) continue;
      d_rows.push_back(u);
      partners.push_back(v);
      gf::Matrix next(p, cur.dim() + 1, d);
      for (int r = 0; r < cur.dim(); ++r)
        for (int j = 0; j < d; ++j) next.at(r, j) = cur.basis.at(r, j);
      for (int j = 0; j < d; ++j) next.at(cur.dim(), j) = u[j];
      cur = gf::make_subspace(p, d, next);
    }
  }
  if ((int)d_rows.size() != q)
    throw InternalInconsistency("dom/ker representative count mismatch");
  std::vector<std::vector<int>> c_rows =
      greedy_extend(target.dom(), gf::Matrix::identity(p, d), p, d);

  // assemble the adapted input basis (rows in F^n) and the image rows
  std::vector<std::vector<int>> in_rows, out_rows;
  auto embed = [&](const std::vector<int>& v, int offset) {
    std::vector<int> row(n, 0);
    for (int j = 0; j < (int)v.size(); ++j) row[offset + j] = v[j];
    return row;
  };
  auto unit = [&](int pos) {
    std::vector<int> row(n, 0);
    row[pos] = 1;
    return row;
  };

  // x block
  for (int i = 0; i < jl; ++i) {
    in_rows.push_back(unit(i));
    std::vector<int> jrow(d);
    for (int j = 0; j < d; ++j) jrow[j] = target.indef().basis.at(i, j);
    out_rows.push_back(embed(jrow, s));
  }
  for (int i = 0; i < a; ++i) {
    in_rows.push_back(unit(jl + i));
    out_rows.push_back(unit(s + d + (int)c_rows.size() + i));
  }
  for (int i = jl + a; i < s; ++i) {
    in_rows.push_back(unit(i));
    out_rows.push_back(unit(kl + (i - jl - a)));
  }
  // u block
  for (int i = 0; i < kl; ++i) {
    in_rows.push_back(embed(k_rows[i], s));
    out_rows.push_back(unit(i));
  }
  for (int i = 0; i < q; ++i) {
    in_rows.push_back(embed(d_rows[i], s));
    out_rows.push_back(embed(partners[i], s));
  }
  for (int i = 0; i < (int)c_rows.size(); ++i) {
    in_rows.push_back(embed(c_rows[i], s));
    out_rows.push_back(unit(s + d + i));
  }
  // z block: images fill a complement of the span so far
  {
    gf::Subspace span = gf::make_subspace(p, n, stack_rows(p, n, out_rows));
    auto fill = greedy_extend(span, gf::Matrix::identity(p, n), p, n);
    if ((int)fill.size() != s)
      throw InternalInconsistency("complement fill size mismatch in chi realization");
    for (int i = 0; i < s; ++i) {
      in_rows.push_back(unit(s + d + i));
      out_rows.push_back(fill[i]);
    }
  }

  gf::Matrix in_mat = stack_rows(p, n, in_rows);
  gf::Matrix out_mat = stack_rows(p, n, out_rows);
  gf::Matrix g = gf::mul(gf::inverse(in_mat), out_mat);
  if (!gf::is_invertible(g)) return std::nullopt;
  FpPolyhom check = chi(g, s, d);
  if (!(check == target)) return std::nullopt;
  return ChiRealization{std::move(g), s};
}

std::optional<gf::Matrix> realize_finitary(const FpPolyhom& r, const FpWindow& win, int m,
                                           long budget) {
  if (!(r.space() == win.space())) throw WindowMismatch();
  if (m < 1 || m > win.radius) throw OutOfWindow("realize at level " + std::to_string(m));
  if (r.is_zero()) return std::nullopt;
  FpPolyhom sand = sandwich(r, win, m);
  FpPolyhom target = middle_quotient(sand, win, m);
  int p = win.p, n = 2 * win.radius, deep = win.radius - m;

  auto window_matches = [&](const gf::Matrix& g) {
    if (!gf::is_invertible(g)) return false;
    return sandwich(FpPolyhom::graph(win.space(), g), win, m) == sand;
  };

  // search near the identity first
  long tried = 0;
  gf::Matrix id = gf::Matrix::identity(p, n);
  if (tried++ < budget && window_matches(id)) return id;
  for (int rr = 0; rr < n && tried < budget; ++rr)
    for (int cc = 0; cc < n && tried < budget; ++cc) {
      if (rr == cc) continue;
      for (int val = 1; val < p && tried < budget; ++val) {
        gf::Matrix g = id;
        g.at(rr, cc) = val;
        ++tried;
        if (window_matches(g)) return g;
      }
    }

  // a window witness must use the window's own outer block size
  int need = realize_min_outer_block(target);
  if (need < 0 || need > deep) return std::nullopt;
  auto mid = realize_chi(target, budget, deep);
  if (!mid) return std::nullopt;
  if (!window_matches(mid->g)) return std::nullopt;
  return mid->g;
}

}  // namespace polyhom
