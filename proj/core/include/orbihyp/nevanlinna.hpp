#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "orbihyp/multiplicity.hpp"
#include "orbihyp/polynomial.hpp"

namespace orbihyp {

struct ZeroEntry {
  Complex location;
  std::int64_t multiplicity = 1;
};

/// Finite divisor on the plane: distinct locations with positive
/// multiplicities.
class ZeroDivisor {
 public:
  ZeroDivisor() = default;
  explicit ZeroDivisor(std::vector<ZeroEntry> zeros);

  const std::vector<ZeroEntry>& zeros() const { return zeros_; }
  std::int64_t total_multiplicity() const;

 private:
  std::vector<ZeroEntry> zeros_;
};

/// A polynomial map C -> P^n in homogeneous coordinates, normalized so
/// the coordinates have no common zero (checked by gcd up to tolerance).
class PolynomialCurve {
 public:
  explicit PolynomialCurve(std::vector<Polynomial> coordinates, double tol = 1e-8);

  const std::vector<Polynomial>& coordinates() const { return coords_; }
  int ambient_dim() const { return static_cast<int>(coords_.size()) - 1; }
  int degree() const;  // max coordinate degree

 private:
  std::vector<Polynomial> coords_;
};

/// Counting function N^l(r, E): the log-averaged count of divisor points
/// inside radius r with multiplicities truncated at l, in closed form:
/// sum of min(nu_i, l) * log(r / max(|z_i|, 1)) over |z_i| < r.
/// Truncation level infinity counts full multiplicities. Requires r >= 1.
double counting_function(const ZeroDivisor& E, double r, const Multiplicity& l);

/// Divisor of zeros of the hyperplane pullback <f, a> with multiplicities
/// from square-free decomposition; rejects hyperplanes containing the
/// curve image.
ZeroDivisor pullback_divisor(const PolynomialCurve& f, std::span<const Complex> hyperplane,
                             double tol = 1e-8);

/// Order function T_f(r) in the Cartan form: circle mean of
/// log max_j |f_j| at radius r minus the mean at radius 1, by doubling
/// trapezoid quadrature to the given tolerance.
double order_function(const PolynomialCurve& f, double r, double quad_tol = 1e-10);

/// Finite-difference growth rate of T over the top decade below r;
/// converges to the algebraic degree of the curve.
double order_function_slope(const PolynomialCurve& f, double r, double quad_tol = 1e-10);

/// Proximity function m_f(r, a): circle mean of
/// log( ||f|| * ||a|| / |<f, a>| ).
double proximity_function(const PolynomialCurve& f, std::span<const Complex> hyperplane,
                          double r, double quad_tol = 1e-10);

struct DefectSample {
  double radius = 0.0;
  double counting = 0.0;
  double order = 0.0;
  double defect = 0.0;
};

struct DefectReport {
  std::vector<DefectSample> trajectory;  // geometric radius grid up to r_max
  double defect = 0.0;                   // value at r_max
};

/// Truncated defect 1 - N^l/T evaluated at r_max, with the trajectory
/// over a geometric radius grid so convergence is visible. Rejects maps
/// whose order function stays below tolerance (constant maps).
DefectReport defect_estimate(const PolynomialCurve& f, std::span<const Complex> hyperplane,
                             const Multiplicity& l, double r_max, int grid_points = 12,
                             double quad_tol = 1e-10);

}  // namespace orbihyp
