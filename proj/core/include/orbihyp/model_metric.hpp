#pragma once

#include <complex>
#include <cstdint>

#include "orbihyp/multiplicity.hpp"

namespace orbihyp {

/// The model disk orbifold: the unit disk with one marked point of
/// multiplicity n at the origin. n = 1 is the plain Poincare disk,
/// n = infinity the punctured disk.
class ModelOrbifoldDisk {
 public:
  explicit ModelOrbifoldDisk(Multiplicity n) : order_(n) {}

  const Multiplicity& order() const { return order_; }

 private:
  Multiplicity order_;
};

/// Conformal density factor at a point; singular marks the cone point of
/// a finite-order model, where the factor diverges and must not be
/// averaged across.
struct DensityValue {
  double value = 0.0;
  bool singular = false;
};

/// Poincare distance log((1+r)/(1-r)) with r the Moebius-invariant ratio
/// |a-b|/|1-conj(a)b| (metric 4|dz|^2/(1-|z|^2)^2, curvature -1).
double poincare_distance(std::complex<double> a, std::complex<double> b);

/// Density 4/(n^2 |z|^(2-2/n) (1-|z|^(2/n))^2); for n = infinity
/// 4/(|z|^2 log(|z|^2)^2). Rejects |z| >= 1 and, for the punctured
/// model, z = 0.
DensityValue density(const ModelOrbifoldDisk& d, std::complex<double> z);

/// Quotient distance: minimum of the Poincare distance over lifts
/// through the unfolding w -> w^n (n-th root pairs), or through the
/// universal cover of the punctured disk when n = infinity, where the
/// deck search is truncated at |k| <= lift_window.
double distance(const ModelOrbifoldDisk& d, std::complex<double> p,
                std::complex<double> q, int lift_window = 16);

/// Ratio of the pullback of the model density under t -> t^m to the
/// Poincare density. Requires m >= n so that the power map is an
/// orbifold morphism; equals 1 exactly at m = n and is <= 1 throughout.
double ahlfors_schwarz_ratio(const ModelOrbifoldDisk& d, std::int64_t m,
                             std::complex<double> t);

/// Independent distance oracle: shortest path on a polar-grid graph with
/// density-weighted edge lengths, refined by local descent on the
/// polyline. Converges to distance() from above as resolution grows.
double geodesic_oracle_distance(const ModelOrbifoldDisk& d, std::complex<double> p,
                                std::complex<double> q, int resolution);

}  // namespace orbihyp
