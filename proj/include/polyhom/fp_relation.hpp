#pragma once

#include <optional>
#include <vector>

#include "polyhom/gf.hpp"
#include "polyhom/polyhom.hpp"

namespace polyhom {

struct OutOfWindow : Error {
  explicit OutOfWindow(const std::string& what) : Error("out of window: " + what) {}
};
struct WindowMismatch : Error {
  WindowMismatch() : Error("operands live in different windows") {}
};
struct SplitMismatch : Error {
  explicit SplitMismatch(const std::string& what) : Error("bad block split: " + what) {}
};

// A finite-dimensional F_p space with a uniform point mass p^(-pm_exp).
struct FpSpace {
  int p = 2;
  int dim = 0;
  int pm_exp = 0;

  Rational point_mass() const { return rational_pow(p, -pm_exp); }
  bool operator==(const FpSpace& o) const {
    return p == o.p && dim == o.dim && pm_exp == o.pm_exp;
  }
};

// A symmetric coordinate window: coordinates -radius .. radius-1, dimension
// 2*radius, point mass p^(-radius).  The compact filtration subspace W^m is
// spanned by the coordinates l <= -m-1, so W^0 has measure one.
struct FpWindow {
  int p = 2;
  int radius = 0;

  FpSpace space() const { return FpSpace{p, 2 * radius, radius}; }
  int pos(int coord) const {
    if (coord < -radius || coord >= radius)
      throw OutOfWindow("coordinate " + std::to_string(coord));
    return coord + radius;
  }
};

// W^m truncated to the window; dimension radius - m for -radius <= m <= radius.
gf::Subspace w_subspace(const FpWindow& win, int m);

// A linear relation on an F_p space carrying a uniform weight, or zero.
// Weights are restricted to powers of p (so alpha and beta inverses stay in
// the p-power semigroup).
class FpPolyhom {
 public:
  static FpPolyhom zero(FpSpace space);
  static FpPolyhom make(FpSpace space, gf::Subspace carrier, Rational weight);
  static FpPolyhom identity(FpSpace space);
  // Graph of the row action w -> w g.  Default weight makes max(alpha, beta) = 1.
  static FpPolyhom graph(FpSpace space, const gf::Matrix& g,
                         std::optional<Rational> weight = std::nullopt);

  bool is_zero() const { return zero_; }
  const FpSpace& space() const { return space_; }
  const gf::Subspace& carrier() const;
  const Rational& weight() const;
  Rational alpha() const { return alpha_; }
  Rational beta() const { return beta_; }
  const gf::Subspace& dom() const;
  const gf::Subspace& im() const;
  const gf::Subspace& ker() const;
  const gf::Subspace& indef() const;

  struct MarginalDims {
    int dom, im, ker, indef;
  };
  MarginalDims marginal_dims() const;

  bool operator==(const FpPolyhom& o) const;

 private:
  explicit FpPolyhom(FpSpace space) : space_(space) {}
  FpSpace space_;
  bool zero_ = true;
  gf::Subspace carrier_;
  Rational weight_ = 0;
  Rational alpha_ = 0, beta_ = 0;
  gf::Subspace dom_, im_, ker_, indef_;
};

// Linear-relation composition with the index-normalized weights; indices are
// p powers of dimension differences.
FpPolyhom fp_compose(const FpPolyhom& t, const FpPolyhom& r);
FpPolyhom fp_involution(const FpPolyhom& r);

// The truncation relation: pairs of W^(-m) vectors agreeing on the middle
// coordinates -m..m-1; ker = indef = W^m, dom = im = W^(-m), alpha = beta = 1.
FpPolyhom theta(const FpWindow& win, int m);

// theta_m o R o theta_m.
FpPolyhom sandwich(const FpPolyhom& r, const FpWindow& win, int m);

// The relation a sandwiched value induces on the middle block W^(-m)/W^m,
// itself a window of radius m.
FpPolyhom middle_quotient(const FpPolyhom& sandwiched, const FpWindow& win, int m);

// Characteristic relation of an invertible block matrix g acting on row
// vectors, blocks (s, d, s): pairs (u, v) of middle vectors such that
// (x, u, 0) g = (y, v, 0) for some x, y.  alpha = p^(-rank g13).
FpPolyhom chi(const gf::Matrix& g, int s, int d);
int chi_alpha_exponent(const gf::Matrix& g, int s, int d);  // rank of g13

// Coordinate-swap involutions from the approximation argument: s_plus swaps
// the two depth-j blocks just outside the middle on the positive side,
// s_minus on the negative side; alpha = beta = 1.
FpPolyhom s_plus(const FpWindow& win, int m, int j);
FpPolyhom s_minus(const FpWindow& win, int m, int j);

// weight * #(carrier n (va + W^k) x (vb + W^k)) for shift vectors in window
// coordinates.
Rational fp_box_measure(const FpPolyhom& r, const gf::Subspace& wk,
                        const std::vector<int>& va, const std::vector<int>& vb);

// All coset pairs of W^k inside W^(-l): the standard test family.
std::vector<std::vector<int>> box_family_shifts(const FpWindow& win, int k, int l);
Rational box_discrepancy(const FpPolyhom& a, const FpPolyhom& b, const FpWindow& win,
                         int k, int l);

// Faithful lowering to the elementary abelian group with digitwise addition;
// vector v maps to sum v_i p^i.
Polyhom lower_to_group(const FpPolyhom& r);
FpPolyhom raise_from_group(const Polyhom& p, const FpSpace& space);

struct ChiRealization {
  gf::Matrix g;
  int s;  // outer block size; the matrix has size 2s + d
};
// Smallest outer block size any witness for this middle polyhomomorphism can
// have, or -1 when no witness exists at any size (beta would exceed one).
int realize_min_outer_block(const FpPolyhom& target);
// Finds an invertible g with chi(g) equal to the given middle polyhomomorphism:
// a small-support search followed by a deterministic direct construction.
// forced_s pins the outer block size (-1 picks the smallest possible).
// Empty result is a search failure, not a disproof.
std::optional<ChiRealization> realize_chi(const FpPolyhom& target, long budget,
                                          int forced_s = -1);

// Finds an invertible window matrix g with theta_m (graph g) theta_m equal to
// theta_m R theta_m, carrier and weight both exact.
std::optional<gf::Matrix> realize_finitary(const FpPolyhom& r, const FpWindow& win, int m,
                                           long budget);

}  // namespace polyhom
