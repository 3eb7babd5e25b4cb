#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyhom/relation.hpp"

namespace polyhom {

struct DominationViolated : Error {
  std::string which;  // "alpha" or "beta"
  DominationViolated(std::string which_, const Rational& value)
      : Error(which_ + " = " + to_fraction(value) + " exceeds 1 (marginal not dominated)"),
        which(std::move(which_)) {}
};
struct ZeroPolyhom : Error {
  ZeroPolyhom() : Error("operation is undefined for the zero polyhomomorphism") {}
};
struct InternalInconsistency : Error {
  explicit InternalInconsistency(const std::string& what)
      : Error("internal inconsistency: " + what) {}
};

// A group together with a Haar measure: every element weighs point_mass.
struct MeasuredGroup {
  GroupPtr group;
  Rational point_mass = 1;
};
MeasuredGroup measured(GroupPtr group, Rational point_mass = 1);
bool same_measured(const MeasuredGroup& a, const MeasuredGroup& b);

// A relation carrying a uniform per-point weight, or the absorbing zero
// element.  alpha is the density of the first marginal against the source
// measure, beta of the second against the target measure; both lie in (0, 1]
// for nonzero values and are cached exactly.
class Polyhom {
 public:
  static Polyhom zero(MeasuredGroup source, MeasuredGroup target);
  static Polyhom make(MultRelation relation, Rational weight, MeasuredGroup source,
                      MeasuredGroup target);
  static Polyhom identity(const MeasuredGroup& g);

  bool is_zero() const { return !relation_.has_value(); }
  const MeasuredGroup& source() const { return source_; }
  const MeasuredGroup& target() const { return target_; }
  const MultRelation& relation() const;
  const Rational& weight() const;
  Rational alpha() const { return alpha_; }
  Rational beta() const { return beta_; }

  bool operator==(const Polyhom& o) const;

 private:
  Polyhom(MeasuredGroup source, MeasuredGroup target) : source_(std::move(source)), target_(std::move(target)) {}
  MeasuredGroup source_, target_;
  std::optional<MultRelation> relation_;
  Rational weight_ = 0;
  Rational alpha_ = 0, beta_ = 0;
};

// Product with the index-normalized weights; the zero element absorbs.  The
// weight recovered from the alpha formula must match the one recovered from
// beta — InternalInconsistency guards that (it never fires).
Polyhom ph_compose(const Polyhom& t, const Polyhom& r);
// Same carrier read backwards: alpha and beta swap.
Polyhom involution(const Polyhom& p);

// The diagonal polyhomomorphism G -> (Phi/Delta) built from g |-> (g, g Delta)
// on Phi, with the image measure on the quotient; alpha = beta = 1.
struct DiagonalQuotient {
  Polyhom poly;
  MeasuredGroup quotient;
  QuotientMap map;
};
DiagonalQuotient mu_phi_delta(const MeasuredGroup& g, const Subgroup& phi,
                              const Subgroup& delta);

// P = t o s o q with q onto dom/ker, t from im/indef, and s the weighted graph
// of the canonical isomorphism; recomposition is exact.
struct Decomposition {
  Polyhom q, s, t;
};
Decomposition decompose(const Polyhom& p);

// True iff 1/q lies in the multiplicative semigroup of integers generated by
// all indices [K1:K2] of nested subgroups of G.
bool lambda_membership(const MeasuredGroup& g, const Rational& q);

// weight * #(carrier intersect A x B); zero for the zero element.
Rational box_measure(const Polyhom& p, const std::vector<int>& a, const std::vector<int>& b);

}  // namespace polyhom
