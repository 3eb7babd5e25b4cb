#pragma once

#include <vector>

#include "polyhom/polyhom.hpp"

namespace polyhom {

struct DimensionMismatch : Error {
  DimensionMismatch() : Error("matrix dimensions do not match") {}
};
struct SamePair : Error {
  SamePair() : Error("the two (subgroup, normal subgroup) pairs must differ") {}
};
struct PartialIsometryViolated : Error {
  explicit PartialIsometryViolated(const std::string& what)
      : Error("partial isometry identity failed: " + what) {}
};

// Dense exact-rational matrix.  For an operator realizing a weighted relation
// G -> H the rows are indexed by elements of G and the columns by elements of
// H; acting on a column vector f over H gives the transported function on G.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[r * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[r * cols_ + c]; }
  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix scalar_mul(const Rational& c, const RationalMatrix& a);
std::vector<Rational> mat_vec(const RationalMatrix& a, const std::vector<Rational>& v);
// Adjoint with respect to the weighted inner products <f,g> = pm * sum f g on
// both sides: (A*)[h][g] = A[g][h] * row_pm / col_pm.
RationalMatrix adjoint(const RationalMatrix& a, const Rational& row_pm, const Rational& col_pm);

// <u, v> = point_mass * sum_x u(x) v(x).
Rational weighted_dot(const MeasuredGroup& g, const std::vector<Rational>& u,
                      const std::vector<Rational>& v);

// 0/1 summation matrix of the bare relation.
RationalMatrix pi_star(const MultRelation& r);
// Weighted summation operator: entry (g,h) = weight * [(g,h) in R] divided by
// the source point mass, so that it integrates against the conditional
// measures of the source fibres.  The zero element gives the zero matrix.
RationalMatrix pi(const Polyhom& p);

// Orthogonal projection onto functions supported on Phi and invariant under
// its normal subgroup Delta: (Pf)(g) = [g in Phi] * average of f over g Delta.
RationalMatrix projection(const MeasuredGroup& g, const Subgroup& phi, const Subgroup& delta);

struct PartialIsometryReport {
  Rational scale_sq;        // alpha * beta
  RationalMatrix initial;   // projection onto L2(im)^indef
  RationalMatrix final_;    // projection onto L2(dom)^ker
};
// Asserts Pi* Pi = alpha beta P_{im|indef} and Pi Pi* = alpha beta P_{dom|ker}
// exactly; the square of the unitarizing scalar is returned, never its root.
PartialIsometryReport verify_partial_isometry(const Polyhom& p);

// sigma = 1 / ([Delta : Delta n Psi] * [Gamma : Gamma n Phi]); asserts
// M^2 = sigma M for M = P_{Phi|Delta} P_{Psi|Gamma} P_{Phi|Delta}.
Rational angle_check(const MeasuredGroup& g, const Subgroup& phi, const Subgroup& delta,
                     const Subgroup& psi, const Subgroup& gamma);

// Pi(P) applied to the indicator of B, as an exact vector over the source.
// When B is an indef-invariant subset of im R the result is checked against
// alpha * indicator of the preimage.
std::vector<Rational> apply_indicator(const Polyhom& p, const std::vector<int>& b);

}  // namespace polyhom
