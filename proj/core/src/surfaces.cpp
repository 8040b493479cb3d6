#include "orbihyp/surfaces.hpp"

#include <stdexcept>

namespace orbihyp {

namespace {

void check_plane(const PlaneArrangement& p) {
  if (p.degrees.size() != p.multiplicities.size())
    throw std::invalid_argument("degrees and multiplicities must have equal length");
  for (std::int64_t d : p.degrees)
    if (d < 1) throw std::invalid_argument("curve degree must be >= 1");
}

}  // namespace

std::pair<Rational, Rational> log_chern_plane(const PlaneArrangement& p) {
  check_plane(p);
  std::int64_t d = 0;
  for (std::int64_t di : p.degrees) d += di;

  Rational c1_sq((d - 3) * (d - 3));

  // c2bar = c2(P^2) - e(D) with e(D) = sum e(C_i) - sum_{i<j} C_i.C_j and
  // e(C_i) = 3 d_i - d_i^2 by genus-degree.
  std::int64_t euler_d = 0;
  for (std::int64_t di : p.degrees) euler_d += 3 * di - di * di;
  for (std::size_t i = 0; i < p.degrees.size(); ++i)
    for (std::size_t j = i + 1; j < p.degrees.size(); ++j)
      euler_d -= p.degrees[i] * p.degrees[j];
  Rational c2(3 - euler_d);

  return {c1_sq, c2};
}

SurfacePairData lift_plane(const PlaneArrangement& p) {
  check_plane(p);
  SurfacePairData data;
  auto [c1_sq, c2] = log_chern_plane(p);
  data.log_c1_sq = c1_sq;
  data.log_c2 = c2;
  for (std::size_t i = 0; i < p.degrees.size(); ++i) {
    const std::int64_t di = p.degrees[i];
    SurfaceComponent comp;
    comp.genus = (di - 1) * (di - 2) / 2;
    comp.multiplicity = p.multiplicities[i];
    comp.cross_intersections = 0;
    for (std::size_t j = 0; j < p.degrees.size(); ++j)
      if (j != i) comp.cross_intersections += di * p.degrees[j];
    comp.self_sections_nonzero = true;  // effective movable plane curves
    data.components.push_back(comp);
  }
  return data;
}

Rational jet_criterion(const SurfacePairData& s) {
  Rational value = s.log_c1_sq - s.log_c2;
  for (const SurfaceComponent& c : s.components) {
    if (c.multiplicity.is_infinite()) continue;  // 1/m = 0 in the log case
    value -= Rational(2 * c.genus - 2 + c.cross_intersections, c.multiplicity.value());
  }
  return value;
}

SurfaceApplicability surface_applicability(const SurfacePairData& s) {
  SurfaceApplicability flags;
  for (const SurfaceComponent& c : s.components) {
    if (c.genus < 2) flags.genus_ok = false;
    if (!c.self_sections_nonzero) flags.self_sections_ok = false;
  }
  return flags;
}

Rational h0_leading_coefficient(const SurfacePairData& s) {
  BigInt product = 1;
  for (const SurfaceComponent& c : s.components) {
    if (c.multiplicity.is_infinite())
      throw std::domain_error(
          "h0 leading coefficient needs finite multiplicities (N is a common multiple)");
    product *= c.multiplicity.value();
  }
  const BigInt cube = product * product * product;
  return Rational(cube, 6) * jet_criterion(s);
}

PlanePairReport plane_pair_criterion(std::int64_t d1, std::int64_t d2,
                                     const Multiplicity& m1, const Multiplicity& m2) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("degrees must be >= 1");
  const std::int64_t d = d1 + d2;
  if (d == 3) throw std::invalid_argument("total degree 3 leaves the threshold undefined");

  PlanePairReport report;
  report.degrees_ok = d1 >= 4 && d2 >= 4;
  report.degree = weight(m1) * Rational(d1) + weight(m2) * Rational(d2);
  report.threshold = Rational(d1 * d1 + d2 * d2 + d1 * d2 - 6, d - 3);
  report.margin = report.degree - report.threshold;
  report.pass = report.margin.is_positive();
  report.general_type = report.degree > Rational(3);
  return report;
}

Rational bt_criterion(const Rational& log_c1_sq, const Rational& log_c2,
                      std::int64_t genus_d, std::int64_t m) {
  if (genus_d < 0) throw std::invalid_argument("genus must be nonnegative");
  if (m < 2) throw std::invalid_argument("multiple fibers require m >= 2");
  return log_c1_sq - log_c2 - Rational(2 * genus_d - 2, m);
}

}  // namespace orbihyp
