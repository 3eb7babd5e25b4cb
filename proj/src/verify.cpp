#include "polyhom/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "polyhom/fp_relation.hpp"
#include "polyhom/operators.hpp"
#include "polyhom/oracle.hpp"

namespace polyhom {

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int n) { return static_cast<int>(rng() % n); }

struct Check {
  SuiteResult res;
  explicit Check(std::string name) { res.name = std::move(name); }
  void run(bool ok, const std::string& why) {
    ++res.checked;
    if (!ok) {
      ++res.failed;
      if (res.detail.empty()) res.detail = why;
    }
  }
  template <class F>
  void guard(F&& f, const std::string& what) {
    try {
      std::forward<F>(f)();
      run(true, "");
    } catch (const std::exception& e) {
      run(false, what + ": " + e.what());
    }
  }
};

// ---------------------------------------------------------------------------
// pools and sample streams

Polyhom random_polyhom(Rng& rng, const MeasuredGroup& src, const MeasuredGroup& tgt) {
  int k = 1 + pick(rng, 3);
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i < k; ++i)
    gens.emplace_back(pick(rng, src.group->order()), pick(rng, tgt.group->order()));
  MultRelation rel = MultRelation::generate(src.group, tgt.group, gens);
  bool endo = same_measured(src, tgt);
  Rational w;
  if (endo && rng() % 4 != 0) {
    // index-quantized weight: alpha^-1 and beta^-1 are subgroup indices
    w = Rational(1, src.group->order());
  } else {
    Rational wa = src.point_mass / rel.indef().size();
    Rational wb = tgt.point_mass / rel.ker().size();
    w = (wa < wb ? wa : wb) / (1 + pick(rng, 4));
  }
  return Polyhom::make(std::move(rel), w, src, tgt);
}

struct PairSample {
  Polyhom r, t;
};

std::vector<PairSample> pair_stream(const VerifyOptions& opt) {
  Rng rng(opt.seed);
  auto pool = group_pool();
  std::vector<PairSample> out;
  out.reserve(opt.pair_samples);
  for (int i = 0; i < opt.pair_samples; ++i) {
    const auto& g = pool[pick(rng, (int)pool.size())];
    // a third of the stream is endomorphism-shaped so that index-quantized
    // weights appear often enough for the semigroup-closure sweep
    bool endo = pick(rng, 3) == 0;
    const auto& h = endo ? g : pool[pick(rng, (int)pool.size())];
    const auto& k = endo ? g : pool[pick(rng, (int)pool.size())];
    out.push_back(PairSample{random_polyhom(rng, g, h), random_polyhom(rng, h, k)});
  }
  return out;
}

// deterministic polyhomomorphism pool: identities, subgroup diagonals, full
// relations, diagonal quotients and their involutions, plus seeded random ones
std::vector<Polyhom> polyhom_pool(const VerifyOptions& opt, int max_order, int max_count) {
  Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<Polyhom> out;
  auto add = [&](Polyhom p) {
    for (const auto& q : out)
      if (q == p) return;
    if ((int)out.size() < max_count) out.push_back(std::move(p));
  };
  for (const auto& mg : group_pool()) {
    if (mg.group->order() > max_order) continue;
    add(Polyhom::identity(mg));
    Rational w_full = mg.point_mass / mg.group->order();
    add(Polyhom::make(MultRelation::full(mg.group, mg.group), w_full, mg, mg));
    auto subs = all_subgroups(mg.group);
    for (const auto& s : subs) {
      add(Polyhom::make(MultRelation::diagonal(s), mg.point_mass, mg, mg));
      for (const auto& n : subs) {
        if (!is_subset(n, s) || !is_normal_in(n, s)) continue;
        DiagonalQuotient dq = mu_phi_delta(mg, s, n);
        add(dq.poly);
        add(involution(dq.poly));
      }
    }
    for (int i = 0; i < 3; ++i) add(random_polyhom(rng, mg, mg));
  }
  auto pool = group_pool();
  for (int i = 0; i < 40; ++i) {
    const auto& g = pool[pick(rng, (int)pool.size())];
    const auto& h = pool[pick(rng, (int)pool.size())];
    if (g.group->order() > max_order || h.group->order() > max_order) continue;
    add(random_polyhom(rng, g, h));
  }
  return out;
}

gf::Matrix random_invertible(Rng& rng, int p, int n) {
  while (true) {
    gf::Matrix g(p, n, n);
    for (int& v : g.a) v = pick(rng, p);
    if (gf::is_invertible(g)) return g;
  }
}

FpPolyhom fp_make_max_weight(const FpSpace& space, const gf::Subspace& carrier) {
  FpPolyhom probe =
      FpPolyhom::make(space, carrier, rational_pow(space.p, -2 * space.dim - space.pm_exp));
  auto d = probe.marginal_dims();
  int top = std::max(d.ker, d.indef);
  return FpPolyhom::make(space, carrier, rational_pow(space.p, -top - space.pm_exp));
}

std::vector<FpPolyhom> fp_pool(const FpWindow& win, unsigned long long seed, int n_graphs,
                               int n_carriers) {
  Rng rng(seed);
  int n = 2 * win.radius;
  std::vector<FpPolyhom> pool;
  pool.push_back(FpPolyhom::identity(win.space()));
  for (int m = 1; m <= win.radius; ++m) pool.push_back(theta(win, m));
  for (int j = 1; 1 + 2 * j <= win.radius; ++j) {
    pool.push_back(s_plus(win, 1, j));
    pool.push_back(s_minus(win, 1, j));
  }
  for (int i = 0; i < n_graphs; ++i)
    pool.push_back(FpPolyhom::graph(win.space(), random_invertible(rng, win.p, n)));
  for (int i = 0; i < n_carriers; ++i) {
    int rows = 1 + pick(rng, 4);
    gf::Matrix m(win.p, rows, 2 * n);
    for (int& v : m.a) v = pick(rng, win.p);
    gf::Subspace carrier = gf::make_subspace(win.p, 2 * n, m);
    pool.push_back(fp_make_max_weight(win.space(), carrier));
  }
  // a few composites to vary the marginal shapes
  for (int i = 0; i + 1 < (int)pool.size() && i < 4; ++i)
    pool.push_back(fp_compose(pool[i], pool[i + 1]));
  return pool;
}

// all subspaces of F_p^n by reduced-row-echelon shape
std::vector<gf::Subspace> enumerate_subspaces(int p, int n) {
  std::vector<gf::Subspace> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> pivots;
    for (int c = 0; c < n; ++c)
      if (mask & (1 << c)) pivots.push_back(c);
    int k = (int)pivots.size();
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_cells;  // (row, col)
    for (int i = 0; i < k; ++i)
      for (int c = pivots[i] + 1; c < n; ++c)
        if (!is_pivot[c]) free_cells.emplace_back(i, c);
    long combos = 1;
    for (size_t i = 0; i < free_cells.size(); ++i) combos *= p;
    for (long it = 0; it < combos; ++it) {
      gf::Matrix m(p, k, n);
      for (int i = 0; i < k; ++i) m.at(i, pivots[i]) = 1;
      long t = it;
      for (auto [r, c] : free_cells) {
        m.at(r, c) = t % p;
        t /= p;
      }
      out.push_back(gf::Subspace{p, n, std::move(m)});
    }
  }
  return out;
}

std::vector<int> lambda_generators(const MeasuredGroup& g) {
  auto subs = all_subgroups(g.group);
  std::set<int> gens;
  for (const auto& k1 : subs)
    for (const auto& k2 : subs)
      if (is_subset(k2, k1)) {
        int idx = subgroup_index(k1, k2);
        if (idx > 1) gens.insert(idx);
      }
  return std::vector<int>(gens.begin(), gens.end());
}

bool in_lambda(const std::vector<int>& gens, Rational q) {
  Rational inv = Rational(1) / q;
  if (!is_integer(inv)) return false;
  std::function<bool(BigInt)> go = [&](BigInt m) {
    if (m == 1) return true;
    for (int d : gens)
      if (m % d == 0 && go(m / d)) return true;
    return false;
  };
  return go(as_integer(inv));
}

// ---------------------------------------------------------------------------
// criteria

SuiteResult check_functoriality(const VerifyOptions& opt) {
  Check c("functoriality");
  for (const auto& [r, t] : pair_stream(opt)) {
    Polyhom s = ph_compose(t, r);
    bool ok = mat_mul(pi(r), pi(t)) == pi(s);
    c.run(ok, "matrix of the composite differs from the operator product");
  }
  return c.res;
}

SuiteResult check_weight_consistency(const VerifyOptions& opt) {
  Check c("weight-consistency");
  for (const auto& [r, t] : pair_stream(opt)) {
    Polyhom s = ph_compose(t, r);
    int denom_a = subgroup_index(r.relation().indef(),
                                 intersect(r.relation().indef(), t.relation().dom()));
    int denom_b = subgroup_index(t.relation().ker(),
                                 intersect(t.relation().ker(), r.relation().im()));
    Rational alpha = r.alpha() * t.alpha() / denom_a;
    Rational beta = r.beta() * t.beta() / denom_b;
    Rational w_a = alpha * r.source().point_mass / s.relation().indef().size();
    Rational w_b = beta * t.target().point_mass / s.relation().ker().size();
    bool ok = w_a == w_b && w_a == s.weight() && alpha == s.alpha() && beta == s.beta();
    c.run(ok, "normalizations from the two marginals disagree");
  }
  return c.res;
}

SuiteResult check_associativity(const VerifyOptions& opt) {
  Check c("associativity");
  Rng rng(opt.seed ^ 0xa5a5a5a5ull);
  auto pool = group_pool();
  for (int i = 0; i < opt.triple_samples; ++i) {
    const auto& g = pool[pick(rng, (int)pool.size())];
    const auto& h = pool[pick(rng, (int)pool.size())];
    const auto& k = pool[pick(rng, (int)pool.size())];
    const auto& l = pool[pick(rng, (int)pool.size())];
    Polyhom r = random_polyhom(rng, g, h);
    Polyhom t = random_polyhom(rng, h, k);
    Polyhom s = random_polyhom(rng, k, l);
    Polyhom left = ph_compose(ph_compose(s, t), r);
    Polyhom right = ph_compose(s, ph_compose(t, r));
    c.run(left == right, "weighted composition is not associative on a sampled triple");
  }
  return c.res;
}

SuiteResult check_scalar_identity(const VerifyOptions& opt) {
  Check c("scalar-identity");
  Rng rng(opt.seed ^ 0x5c5c5c5cull);
  auto pool = group_pool();
  for (int i = 0; i < opt.scalar_samples; ++i) {
    const auto& g = pool[pick(rng, (int)pool.size())];
    const auto& h = pool[pick(rng, (int)pool.size())];
    const auto& k = pool[pick(rng, (int)pool.size())];
    MultRelation r = random_polyhom(rng, g, h).relation();
    MultRelation t = random_polyhom(rng, h, k).relation();
    MultRelation tr = rel_compose(t, r);
    long factor = intersect(t.ker(), r.indef()).size();
    bool ok = mat_mul(pi_star(r), pi_star(t)) == scalar_mul(Rational(factor), pi_star(tr));
    // the two alternative index expressions for the same factor
    long alt1_num = (long)t.indef().size() * intersect(r.indef(), t.dom()).size();
    long alt2_num = (long)r.ker().size() * intersect(t.ker(), r.im()).size();
    ok = ok && alt1_num == factor * tr.indef().size() && alt2_num == factor * tr.ker().size();
    c.run(ok, "bare summation operators break the counting identity");
  }
  return c.res;
}

SuiteResult check_partial_isometry(const VerifyOptions& opt) {
  Check c("partial-isometry");
  for (const auto& p : polyhom_pool(opt, 16, 420))
    c.guard([&] { verify_partial_isometry(p); }, "partial isometry");
  int used = 0;
  for (const auto& [r, t] : pair_stream(opt)) {
    if (used++ >= 150) break;
    c.guard([&] { verify_partial_isometry(ph_compose(t, r)); }, "partial isometry (composite)");
  }
  return c.res;
}

SuiteResult check_angles(const VerifyOptions&) {
  Check c("angles");
  for (const auto& mg : group_pool()) {
    auto subs = all_subgroups(mg.group);
    std::vector<std::pair<int, int>> normal_pairs;
    for (int i = 0; i < (int)subs.size(); ++i)
      for (int j = 0; j < (int)subs.size(); ++j)
        if (is_subset(subs[j], subs[i]) && is_normal_in(subs[j], subs[i]))
          normal_pairs.emplace_back(i, j);
    for (auto [phi, delta] : normal_pairs)
      for (auto [psi, gamma] : normal_pairs) {
        if (phi == psi && delta == gamma) continue;
        c.guard([&] { angle_check(mg, subs[phi], subs[delta], subs[psi], subs[gamma]); },
                "angle identity");
      }
  }
  return c.res;
}

SuiteResult check_decomposition(const VerifyOptions& opt) {
  Check c("decomposition");
  for (const auto& p : polyhom_pool(opt, 16, 420)) {
    try {
      Decomposition d = decompose(p);
      bool ok = ph_compose(d.t, ph_compose(d.s, d.q)) == p;
      ok = ok && mat_mul(mat_mul(pi(d.q), pi(d.s)), pi(d.t)) == pi(p);
      c.run(ok, "three-factor decomposition does not recompose exactly");
    } catch (const std::exception& e) {
      c.run(false, std::string("decomposition threw: ") + e.what());
    }
  }
  return c.res;
}

SuiteResult check_indicator(const VerifyOptions& opt) {
  Check c("indicator");
  for (const auto& p : polyhom_pool(opt, 12, 160)) {
    const auto& r = p.relation();
    const auto& h = *p.target().group;
    // indicator of every indef-invariant union of cosets inside im
    QuotientMap qm = quotient(r.im(), r.indef());
    int ncosets = qm.quotient->order();
    if (ncosets > 10) continue;  // bounded sweep; still exhaustive where it runs
    for (long mask = 0; mask < (1L << ncosets); ++mask) {
      std::vector<int> b;
      for (int y : r.im().elements())
        if (mask & (1L << qm.project(y))) b.push_back(y);
      std::vector<Rational> got = apply_indicator(p, b);
      std::set<int> pre;
      for (auto [g, y] : r.pairs())
        if (std::binary_search(b.begin(), b.end(), y)) pre.insert(g);
      bool ok = true;
      for (int g = 0; g < p.source().group->order() && ok; ++g)
        ok = got[g] == (pre.count(g) ? p.alpha() : Rational(0));
      c.run(ok, "invariant indicator is not alpha times the preimage indicator");
    }
    // subgroup of finite index inside indef: single-coset sets scale by 1/N
    auto subs = all_subgroups(p.target().group);
    for (const auto& z : subs) {
      if (!is_subset(z, r.indef()) || z.size() == r.indef().size()) continue;
      int n_idx = subgroup_index(r.indef(), z);
      std::set<std::vector<int>> seen;
      for (int d : r.im().elements()) {
        std::vector<int> coset;
        for (int zz : z.elements()) coset.push_back(h.op(zz, d));
        std::sort(coset.begin(), coset.end());
        if (!seen.insert(coset).second) continue;
        std::vector<Rational> got = apply_indicator(p, coset);
        std::set<int> pre;
        for (auto [g, y] : r.pairs())
          if (std::binary_search(coset.begin(), coset.end(), y)) pre.insert(g);
        Rational scaled = p.alpha() / n_idx;
        bool ok = true;
        for (int g = 0; g < p.source().group->order() && ok; ++g)
          ok = got[g] == (pre.count(g) ? scaled : Rational(0));
        c.run(ok, "coset indicator is not alpha/N times the preimage indicator");
      }
    }
  }
  return c.res;
}

void fp_compare_with_oracle(Check& c, const FpPolyhom& t, const FpPolyhom& r, bool lower) {
  FpPolyhom s = fp_compose(t, r);
  auto r_pts = gf::points(r.carrier(), 1 << 14);
  auto t_pts = gf::points(t.carrier(), 1 << 14);
  auto expect = oracle::naive_fp_compose(r_pts, t_pts, r.space().dim);
  auto got_pts = gf::points(s.carrier(), 1 << 15);
  std::set<std::pair<std::vector<int>, std::vector<int>>> got;
  int dim = r.space().dim;
  for (const auto& pt : got_pts)
    got.emplace(std::vector<int>(pt.begin(), pt.begin() + dim),
                std::vector<int>(pt.begin() + dim, pt.end()));
  bool ok = got.size() == expect.size();
  for (const auto& e : expect)
    if (ok && !got.count(e)) ok = false;
  c.run(ok, "fp composition carrier differs from the middle-vector enumeration");
  if (lower) {
    bool fok = mat_mul(pi(lower_to_group(r)), pi(lower_to_group(t))) == pi(lower_to_group(s));
    c.run(fok, "lowered operators do not multiply to the lowered composite");
  }
}

SuiteResult check_fp_oracle(const VerifyOptions& opt) {
  Check c("fp-oracle");
  // exhaustive at radius 1: every subspace of F_2^4 as a carrier
  {
    FpWindow win{2, 1};
    std::vector<FpPolyhom> all;
    for (const auto& sub : enumerate_subspaces(2, 4))
      all.push_back(fp_make_max_weight(win.space(), sub));
    for (const auto& r : all)
      for (const auto& t : all) fp_compare_with_oracle(c, t, r, /*lower=*/true);
  }
  // structured pools at radius 2 and 3
  for (int radius : {2, 3}) {
    FpWindow win{2, radius};
    auto pool = fp_pool(win, opt.seed ^ (0xf00dull + radius), 4, radius == 2 ? 8 : 6);
    for (const auto& r : pool)
      for (const auto& t : pool) fp_compare_with_oracle(c, t, r, radius == 2);
  }
  // random pairs at p = 3
  {
    FpWindow win{3, 3};
    Rng rng(opt.seed ^ 0x31ull);
    for (int i = 0; i < opt.fp_random_pairs; ++i) {
      auto make_small = [&]() {
        int rows = 1 + pick(rng, 4);
        gf::Matrix m(3, rows, 4 * win.radius);
        for (int& v : m.a) v = pick(rng, 3);
        return fp_make_max_weight(win.space(), gf::make_subspace(3, 4 * win.radius, m));
      };
      fp_compare_with_oracle(c, make_small(), make_small(), false);
    }
  }
  return c.res;
}

SuiteResult check_theta(const VerifyOptions&) {
  Check c("theta");
  for (int p : {2, 3})
    for (int radius = 1; radius <= 4; ++radius) {
      FpWindow win{p, radius};
      for (int m = 1; m <= radius; ++m) {
        FpPolyhom th = theta(win, m);
        gf::Subspace wm = w_subspace(win, m);
        gf::Subspace wneg = w_subspace(win, -m);
        bool ok = th.dom() == wneg && th.im() == wneg && th.ker() == wm && th.indef() == wm;
        ok = ok && th.alpha() == 1 && th.beta() == 1;
        ok = ok && fp_compose(th, th) == th;
        c.run(ok, "theta marginals or weights are off at level " + std::to_string(m));
      }
    }
  return c.res;
}

SuiteResult check_sandwich(const VerifyOptions& opt) {
  Check c("sandwich");
  FpWindow win{2, 3};
  auto pool = fp_pool(win, opt.seed ^ 0x5a4dull, 6, 10);
  for (const auto& r : pool)
    for (int k = 1; k <= win.radius; ++k)
      for (int l = 1; l <= win.radius; ++l)
        for (int m = std::max(k, l); m <= win.radius; ++m) {
          Rational d = box_discrepancy(sandwich(r, win, m), r, win, k, l);
          c.run(d == 0, "sandwich changed a coarse box measure at m = " + std::to_string(m));
        }
  return c.res;
}

void check_chi_one(Check& c, const gf::Matrix& g, int s, int d) {
  FpWindow win{g.p, s + d / 2};
  FpPolyhom direct = chi(g, s, d);
  FpPolyhom embedded =
      middle_quotient(sandwich(FpPolyhom::graph(win.space(), g), win, d / 2), win, d / 2);
  bool ok = direct == embedded;
  ok = ok && direct.alpha() == rational_pow(g.p, -chi_alpha_exponent(g, s, d));
  c.run(ok, "characteristic relation disagrees with the sandwich embedding");
}

SuiteResult check_chi(const VerifyOptions& opt) {
  Check c("chi");
  // exhaustive over GL(4, 2) with split (1, 2, 1)
  for (int bits = 0; bits < (1 << 16); ++bits) {
    gf::Matrix g(2, 4, 4);
    for (int i = 0; i < 16; ++i) g.a[i] = (bits >> i) & 1;
    if (!gf::is_invertible(g)) continue;
    check_chi_one(c, g, 1, 2);
  }
  // sampled over GL(6, 2) with split (2, 2, 2)
  Rng rng(opt.seed ^ 0xc41ull);
  for (int i = 0; i < opt.chi_samples; ++i)
    check_chi_one(c, random_invertible(rng, 2, 6), 2, 2);
  return c.res;
}

SuiteResult check_realize(const VerifyOptions& opt) {
  Check c("realize");
  // every weighted linear relation of F_2^3, weights down to the documented
  // exponent bound, must be realized as a characteristic relation
  FpSpace mid{2, 3, 2};
  for (const auto& sub : enumerate_subspaces(2, 6)) {
    FpPolyhom probe = FpPolyhom::make(mid, sub, rational_pow(2, -2 * 3 - mid.pm_exp));
    auto dims = probe.marginal_dims();
    int a_min = std::max(0, dims.ker - dims.indef);
    for (int a = a_min; a <= a_min + opt.realize_extra_exponents; ++a) {
      FpPolyhom target =
          FpPolyhom::make(mid, sub, rational_pow(2, -a - mid.pm_exp - dims.indef));
      auto got = realize_chi(target, opt.realize_budget);
      bool ok = got.has_value();
      if (ok) ok = chi(got->g, got->s, 3) == target;
      c.run(ok, "no witness for a weighted relation of F_2^3");
    }
  }
  // windowed realizations: a witness exists exactly when the outer block of
  // the quotient fits the window
  for (int radius : {2, 3}) {
    FpWindow win{2, radius};
    auto pool = fp_pool(win, opt.seed ^ (0x4ea1ull + radius), 3, 5);
    for (const auto& r : pool) {
      FpPolyhom target = middle_quotient(sandwich(r, win, 1), win, 1);
      int need = realize_min_outer_block(target);
      auto g = realize_finitary(r, win, 1, opt.realize_budget);
      bool fits = need >= 0 && need <= radius - 1;
      bool ok = fits == g.has_value();
      if (g)
        ok = ok && sandwich(FpPolyhom::graph(win.space(), *g), win, 1) == sandwich(r, win, 1);
      c.run(ok, "window realization disagrees with the solvability bound");
    }
  }
  return c.res;
}

SuiteResult check_lambda(const VerifyOptions& opt) {
  Check c("lambda");
  std::map<const FiniteGroup*, std::vector<int>> gen_cache;
  auto gens_for = [&](const MeasuredGroup& mg) -> const std::vector<int>& {
    auto it = gen_cache.find(mg.group.get());
    if (it == gen_cache.end()) it = gen_cache.emplace(mg.group.get(), lambda_generators(mg)).first;
    return it->second;
  };
  for (const auto& [r, t] : pair_stream(opt)) {
    if (!same_measured(r.source(), r.target()) || !same_measured(t.source(), t.target()) ||
        !same_measured(r.source(), t.source()))
      continue;
    const auto& gens = gens_for(r.source());
    if (!in_lambda(gens, r.alpha()) || !in_lambda(gens, r.beta()) ||
        !in_lambda(gens, t.alpha()) || !in_lambda(gens, t.beta()))
      continue;
    Polyhom s = ph_compose(t, r);
    bool ok = in_lambda(gens, s.alpha()) && in_lambda(gens, s.beta());
    c.run(ok, "composite of index-quantized weights left the semigroup");
  }
  if (c.res.checked < 50) c.run(false, "too few quantized samples in the stream");
  return c.res;
}

}  // namespace

std::vector<MeasuredGroup> group_pool() {
  std::vector<MeasuredGroup> pool;
  auto c2 = FiniteGroup::cyclic(2);
  auto c3 = FiniteGroup::cyclic(3);
  auto c4 = FiniteGroup::cyclic(4);
  auto klein = FiniteGroup::direct_product(c2, c2);
  pool.push_back(measured(c2));
  pool.push_back(measured(c3));
  pool.push_back(measured(c4));
  pool.push_back(measured(FiniteGroup::cyclic(6)));
  pool.push_back(measured(FiniteGroup::cyclic(8)));
  pool.push_back(measured(klein));
  pool.push_back(measured(FiniteGroup::symmetric(3)));
  pool.push_back(measured(FiniteGroup::direct_product(c2, c4)));
  pool.push_back(measured(FiniteGroup::direct_product(c2, klein)));
  pool.push_back(measured(FiniteGroup::direct_product(c3, c3)));
  pool.push_back(measured(FiniteGroup::direct_product(c2, FiniteGroup::cyclic(6))));
  pool.push_back(measured(FiniteGroup::direct_product(FiniteGroup::symmetric(3), c2)));
  pool.push_back(measured(FiniteGroup::direct_product(c4, c4)));
  pool.push_back(measured(FiniteGroup::direct_product(c2, FiniteGroup::cyclic(8))));
  pool.push_back(measured(FiniteGroup::direct_product(klein, c4)));
  return pool;
}

std::vector<std::string> suite_names() {
  return {"functoriality", "weight-consistency", "associativity", "scalar-identity",
          "partial-isometry", "angles",          "decomposition", "indicator",
          "fp-oracle",      "theta",             "sandwich",      "chi",
          "realize",        "lambda"};
}

std::vector<SuiteResult> run_suites(const std::string& name, const VerifyOptions& opt) {
  using Runner = SuiteResult (*)(const VerifyOptions&);
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"functoriality", check_functoriality},
      {"weight-consistency", check_weight_consistency},
      {"associativity", check_associativity},
      {"scalar-identity", check_scalar_identity},
      {"partial-isometry", check_partial_isometry},
      {"angles", check_angles},
      {"decomposition", check_decomposition},
      {"indicator", check_indicator},
      {"fp-oracle", check_fp_oracle},
      {"theta", check_theta},
      {"sandwich", check_sandwich},
      {"chi", check_chi},
      {"realize", check_realize},
      {"lambda", check_lambda},
  };
  std::vector<SuiteResult> out;
  bool found = false;
  for (const auto& [n, f] : table) {
    if (name == "all" || name == n) {
      out.push_back(f(opt));
      found = true;
    }
  }
  if (!found) throw Error("unknown suite '" + name + "'");
  return out;
}

}  // namespace polyhom
