#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbihyp/multiplicity.hpp"
#include "orbihyp/rational.hpp"

namespace orbihyp {

struct MarkedPoint {
  std::string id;
  Multiplicity multiplicity;
};

/// Compact orbifold curve: a genus together with marked points carrying
/// multiplicities >= 2 (a mark of multiplicity 1 has weight 0 and is
/// rejected so divisor support stays well-defined).
class OrbifoldCurve {
 public:
  OrbifoldCurve(std::int64_t genus, std::vector<MarkedPoint> marks);

  /// Convenience: marks at anonymous points x1, x2, ...
  static OrbifoldCurve with_marks(std::int64_t genus, const std::vector<Multiplicity>& ms);

  std::int64_t genus() const { return genus_; }
  const std::vector<MarkedPoint>& marks() const { return marks_; }

 private:
  std::int64_t genus_;
  std::vector<MarkedPoint> marks_;
};

enum class CurveClass { Spherical, Euclidean, Hyperbolic, Excluded };

enum class ExclusionCase {
  SingleFiniteMark,  // one marked point on P^1 with finite multiplicity
  TwoUnequalMarks,   // two marked points on P^1 with distinct multiplicities
};

struct UniformizationClass {
  CurveClass kind;
  std::optional<ExclusionCase> exclusion;  // set iff kind == Excluded
  Rational degree;                         // canonical degree, for reporting
};

std::string to_string(CurveClass c);
std::string to_string(ExclusionCase c);

/// deg(K_X + Delta) = 2g - 2 + sum of weights, exact.
Rational canonical_degree(const OrbifoldCurve& c);

/// Uniformization trichotomy by the sign of the canonical degree. When
/// the curve lives on P^1 (genus 0 and ambient_is_p1) the two bad
/// configurations are reported as Excluded instead of classified.
UniformizationClass classify(const OrbifoldCurve& c, bool ambient_is_p1 = true);

struct HyperbolicArea {
  Rational pi_multiple;  // area as an exact multiple of pi
  double value;
};

/// Area 2*pi*deg(K) of a hyperbolic orbifold curve; rejects inputs that
/// do not classify as hyperbolic.
HyperbolicArea hyperbolic_area(const OrbifoldCurve& c);

/// Whether a nonconstant entire orbifold curve into (P^1/Delta) survives
/// the classical defect bound: true iff sum(1 - 1/m_i) <= 2.
bool p1_entire_curve_possible(const std::vector<Multiplicity>& marks);

/// Multiplicity induced on a source point of contact order t against a
/// component of multiplicity m. Non-classical: smallest m' with
/// t*m' >= m, i.e. ceil(m/t). Classical: smallest m' with m | t*m',
/// i.e. m/gcd(t,m). Infinity maps to infinity in both modes.
Multiplicity induced_multiplicity(std::int64_t t, const Multiplicity& m, bool classical);

}  // namespace orbihyp
