#pragma once

#include <cstdint>
#include <vector>

#include "orbihyp/curves.hpp"
#include "orbihyp/multiplicity.hpp"
#include "orbihyp/rational.hpp"

namespace orbihyp {

/// One component of the hypersurface arrangement being met.
struct ArrangementComponent {
  std::int64_t degree = 1;  // d_j
  Multiplicity multiplicity;
};

/// Contact record of a curve of degree deg(C) in P^n against an
/// arrangement: contact orders t[i][j] of point p_i with component j.
/// Column sums are pinned to deg(C)*d_j and every point must actually
/// lie on the arrangement; both are enforced at construction.
class IntersectionData {
 public:
  IntersectionData(std::int64_t genus, std::int64_t curve_degree, int ambient_dim,
                   std::vector<ArrangementComponent> components,
                   std::vector<std::vector<std::int64_t>> contacts);

  std::int64_t genus() const { return genus_; }
  std::int64_t curve_degree() const { return curve_degree_; }
  int ambient_dim() const { return ambient_dim_; }
  const std::vector<ArrangementComponent>& components() const { return components_; }
  const std::vector<std::vector<std::int64_t>>& contacts() const { return contacts_; }

  std::size_t point_count() const { return contacts_.size(); }
  std::int64_t row_total(std::size_t i) const;

 private:
  std::int64_t genus_;
  std::int64_t curve_degree_;
  int ambient_dim_;
  std::vector<ArrangementComponent> components_;
  std::vector<std::vector<std::int64_t>> contacts_;
};

enum class ContactMode {
  RowTotal,      // ceiling against the total contact order t_i of the point
  PerComponent,  // ceiling against each t_{i,j} separately
};

/// Minimal multiplicities on the source points making the map an
/// orbifold morphism; one entry per point.
std::vector<Multiplicity> minimal_structure(const IntersectionData& data,
                                            ContactMode mode = ContactMode::RowTotal);

/// deg(Delta) = sum (1 - 1/m_j) d_j of the target arrangement.
Rational arrangement_degree(const IntersectionData& data);

/// Slack of the algebraic-hyperbolicity bound:
/// (2g - 2 + sum(1 - 1/m~_i)) - (deg(Delta) - 2n) deg(C), with the
/// minimal structure in RowTotal mode. Nonnegative for very generic
/// arrangements; interpretation is left to the caller.
Rational algebraic_hyperbolicity_gap(const IntersectionData& data);

/// Constancy of entire orbifold curves through an algebraic image curve
/// carrying its minimal structure: true iff the curve is hyperbolic.
bool p1_curve_degeneracy_check(const OrbifoldCurve& curve);

}  // namespace orbihyp
