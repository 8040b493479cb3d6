#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orbihyp/multiplicity.hpp"
#include "orbihyp/rational.hpp"

namespace orbihyp {

/// One irreducible component of a surface orbifold divisor, with the
/// intersection bookkeeping the general-type criterion consumes.
struct SurfaceComponent {
  std::int64_t genus = 0;
  Multiplicity multiplicity;
  std::int64_t cross_intersections = 0;  // sum over j != i of C_i . C_j
  bool self_sections_nonzero = true;     // h^0(C_i, O_{C_i}(C_i)) != 0
};

/// Log Chern numbers of (X, ceil(Delta)) plus the component data.
struct SurfacePairData {
  Rational log_c1_sq;
  Rational log_c2;
  std::vector<SurfaceComponent> components;
};

/// Union of smooth plane curves with normal crossings, with orbifold
/// multiplicities.
struct PlaneArrangement {
  std::vector<std::int64_t> degrees;
  std::vector<Multiplicity> multiplicities;
  bool normal_crossings = true;
};

/// Log Chern numbers (c1bar^2, c2bar) of the plane with the arrangement:
/// c1bar^2 = (d-3)^2 for d the total degree, and c2bar from the Euler
/// characteristic of a normal-crossing union of smooth curves.
std::pair<Rational, Rational> log_chern_plane(const PlaneArrangement& p);

/// SurfacePairData of a plane arrangement: genus-degree genera,
/// Bezout cross-intersections, log Chern numbers from log_chern_plane.
SurfacePairData lift_plane(const PlaneArrangement& p);

/// Left side of the jet-differential criterion
/// c1bar^2 - c2bar - sum (1/m_i)(2g_i - 2 + cross_i), exact.
/// Strict positivity gives sections of the symmetric differential sheaf
/// twisted by an antiample line, hence degeneracy of entire orbifold
/// curves on a general-type pair.
Rational jet_criterion(const SurfacePairData& s);

struct SurfaceApplicability {
  bool genus_ok = true;          // every g_i >= 2
  bool self_sections_ok = true;  // every h^0(C_i, O(C_i)) != 0
};

SurfaceApplicability surface_applicability(const SurfacePairData& s);

/// Leading q^3 coefficient of the section-count lower bound with
/// N = q*m_1*...*m_n: (m_1...m_n)^3/6 times the criterion value.
/// Rejects infinite multiplicities.
Rational h0_leading_coefficient(const SurfacePairData& s);

struct PlanePairReport {
  Rational degree;        // deg(Delta)
  Rational threshold;     // (d1^2 + d2^2 + d1 d2 - 6)/(d - 3)
  Rational margin;        // degree - threshold
  bool pass = false;      // strict positivity of the margin
  bool general_type = false;   // deg(Delta) > 3
  bool degrees_ok = false;     // d1, d2 >= 4 hypothesis
};

/// Criterion for a pair of smooth plane curves: deg(Delta) must strictly
/// exceed (d1^2 + d2^2 + d1 d2 - 6)/(d - 3).
PlanePairReport plane_pair_criterion(std::int64_t d1, std::int64_t d2,
                                     const Multiplicity& m1, const Multiplicity& m2);

/// Criterion value c1bar^2(B,D) - c2bar(B,D) - (1/m)(2 g(D) - 2) for an
/// elliptic fibration with multiple fibers of multiplicity m over D;
/// positivity forces degeneracy of entire curves through the fibration.
Rational bt_criterion(const Rational& log_c1_sq, const Rational& log_c2,
                      std::int64_t genus_d, std::int64_t m);

}  // namespace orbihyp
