#include "orbihyp/curves.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace orbihyp {

OrbifoldCurve::OrbifoldCurve(std::int64_t genus, std::vector<MarkedPoint> marks)
    : genus_(genus), marks_(std::move(marks)) {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  std::unordered_set<std::string> seen;
  for (const MarkedPoint& p : marks_) {
    if (p.multiplicity == Multiplicity(1))
      throw std::invalid_argument("mark of multiplicity 1 carries no orbifold structure");
    if (!seen.insert(p.id).second)
      throw std::invalid_argument("duplicate marked point id: " + p.id);
  }
}

OrbifoldCurve OrbifoldCurve::with_marks(std::int64_t genus,
                                        const std::vector<Multiplicity>& ms) {
  std::vector<MarkedPoint> marks;
  marks.reserve(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i)
    marks.push_back({"x" + std::to_string(i + 1), ms[i]});
  return OrbifoldCurve(genus, std::move(marks));
}

std::string to_string(CurveClass c) {
  switch (c) {
    case CurveClass::Spherical: return "spherical";
    case CurveClass::Euclidean: return "euclidean";
    case CurveClass::Hyperbolic: return "hyperbolic";
    case CurveClass::Excluded: return "excluded";
  }
  return "?";
}

std::string to_string(ExclusionCase c) {
  switch (c) {
    case ExclusionCase::SingleFiniteMark: return "single-finite-mark";
    case ExclusionCase::TwoUnequalMarks: return "two-unequal-marks";
  }
  return "?";
}

Rational canonical_degree(const OrbifoldCurve& c) {
  Rational deg(2 * c.genus() - 2);
  for (const MarkedPoint& p : c.marks()) deg += weight(p.multiplicity);
  return deg;
}

UniformizationClass classify(const OrbifoldCurve& c, bool ambient_is_p1) {
  const Rational deg = canonical_degree(c);
  if (c.genus() == 0 && ambient_is_p1) {
    const auto& marks = c.marks();
    if (marks.size() == 1 && marks[0].multiplicity.is_finite())
      return {CurveClass::Excluded, ExclusionCase::SingleFiniteMark, deg};
    if (marks.size() == 2 && marks[0].multiplicity != marks[1].multiplicity)
      return {CurveClass::Excluded, ExclusionCase::TwoUnequalMarks, deg};
  }
  if (deg.is_negative()) return {CurveClass::Spherical, std::nullopt, deg};
  if (deg.is_zero()) return {CurveClass::Euclidean, std::nullopt, deg};
  return {CurveClass::Hyperbolic, std::nullopt, deg};
}

HyperbolicArea hyperbolic_area(const OrbifoldCurve& c) {
  const UniformizationClass cls = classify(c);
  if (cls.kind != CurveClass::Hyperbolic)
    throw std::domain_error("hyperbolic_area: curve is not hyperbolic (class " +
                            to_string(cls.kind) + ")");
  const Rational multiple = Rational(2) * cls.degree;
  return {multiple, multiple.to_double() * std::numbers::pi};
}

bool p1_entire_curve_possible(const std::vector<Multiplicity>& marks) {
  Rational sum(0);
  for (const Multiplicity& m : marks) sum += weight(m);
  return sum <= Rational(2);
}

Multiplicity induced_multiplicity(std::int64_t t, const Multiplicity& m, bool classical) {
  if (t < 1) throw std::invalid_argument("contact order must be >= 1");
  if (m.is_infinite()) return Multiplicity::infinity();
  if (!classical) return ceil_ratio(m, t);
  return Multiplicity(m.value() / std::gcd(t, m.value()));
}

}  // namespace orbihyp
