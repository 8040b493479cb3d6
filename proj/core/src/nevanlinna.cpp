#include "orbihyp/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace orbihyp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Doubling trapezoid mean over the circle; the integrands are periodic
// and piecewise smooth, so successive halvings settle quickly.
double circle_mean(const std::function<double(double)>& g, double tol) {
  int n = 64;
  double mean = 0.0;
  for (int k = 0; k < n; ++k) mean += g(kTwoPi * k / n);
  mean /= n;
  for (int level = 0; level < 16; ++level) {
    double extra = 0.0;
    for (int k = 0; k < n; ++k) extra += g(kTwoPi * (k + 0.5) / n);
    const double refined = 0.5 * (mean + extra / n);
    const bool settled = std::abs(refined - mean) < tol;
    mean = refined;
    n *= 2;
    if (settled) return mean;
  }
  throw std::runtime_error("circle quadrature did not converge");
}

double log_max_norm(const PolynomialCurve& f, Complex z) {
  double best = 0.0;
  bool first = true;
  for (const Polynomial& coord : f.coordinates()) {
    const double a = std::abs(coord.eval(z));
    if (first || a > best) best = a;
    first = false;
  }
  return std::log(best);
}

Polynomial hyperplane_section(const PolynomialCurve& f, std::span<const Complex> a) {
  if (a.size() != f.coordinates().size())
    throw std::invalid_argument("hyperplane coefficient count must match coordinates");
  Polynomial section;
  for (std::size_t j = 0; j < a.size(); ++j)
    section = section + a[j] * f.coordinates()[j];
  return section;
}

}  // namespace

ZeroDivisor::ZeroDivisor(std::vector<ZeroEntry> zeros) : zeros_(std::move(zeros)) {
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    if (zeros_[i].multiplicity < 1)
      throw std::invalid_argument("divisor multiplicities must be >= 1");
    for (std::size_t j = i + 1; j < zeros_.size(); ++j)
      if (zeros_[i].location == zeros_[j].location)
        throw std::invalid_argument("divisor locations must be pairwise distinct");
  }
}

std::int64_t ZeroDivisor::total_multiplicity() const {
  std::int64_t total = 0;
  for (const ZeroEntry& z : zeros_) total += z.multiplicity;
  return total;
}

PolynomialCurve::PolynomialCurve(std::vector<Polynomial> coordinates, double tol)
    : coords_(std::move(coordinates)) {
  if (coords_.size() < 2)
    throw std::invalid_argument("a projective curve needs at least two coordinates");
  Polynomial common;
  bool all_zero = true;
  for (const Polynomial& c : coords_) {
    if (c.is_zero()) continue;
    all_zero = false;
    common = common.is_zero() ? c : poly_gcd(common, c, tol);
  }
  if (all_zero) throw std::invalid_argument("all coordinates vanish identically");
  if (common.degree() > 0)
    throw std::invalid_argument("coordinates share a common zero");
}

int PolynomialCurve::degree() const {
  int d = 0;
  for (const Polynomial& c : coords_) d = std::max(d, c.degree());
  return d;
}

double counting_function(const ZeroDivisor& E, double r, const Multiplicity& l) {
  if (r < 1.0) throw std::invalid_argument("counting function requires r >= 1");
  double total = 0.0;
  for (const ZeroEntry& z : E.zeros()) {
    const double modulus = std::abs(z.location);
    if (modulus >= r) continue;
    const double count = l.is_infinite()
                             ? static_cast<double>(z.multiplicity)
                             : static_cast<double>(std::min(z.multiplicity, l.value()));
    total += count * std::log(r / std::max(modulus, 1.0));
  }
  return total;
}

ZeroDivisor pullback_divisor(const PolynomialCurve& f, std::span<const Complex> hyperplane,
                             double tol) {
  const Polynomial section = hyperplane_section(f, hyperplane);
  if (section.is_zero())
    throw std::domain_error("curve image lies inside the hyperplane");
  if (section.degree() == 0) return ZeroDivisor();

  std::vector<ZeroEntry> zeros;
  const std::vector<Polynomial> parts = squarefree_decomposition(section, tol);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].degree() < 1) continue;
    for (const Complex& root : simple_roots(parts[k]))
      zeros.push_back({root, static_cast<std::int64_t>(k + 1)});
  }
  return ZeroDivisor(std::move(zeros));
}

double order_function(const PolynomialCurve& f, double r, double quad_tol) {
  if (r < 1.0) throw std::invalid_argument("order function requires r >= 1");
  if (r == 1.0) return 0.0;
  const double at_r =
      circle_mean([&](double theta) { return log_max_norm(f, std::polar(r, theta)); },
                  quad_tol);
  const double at_1 =
      circle_mean([&](double theta) { return log_max_norm(f, std::polar(1.0, theta)); },
                  quad_tol);
  return at_r - at_1;
}

double order_function_slope(const PolynomialCurve& f, double r, double quad_tol) {
  const double r_low = std::max(1.0, r / 10.0);
  const double span = std::log(r) - std::log(r_low);
  if (span <= 0.0) throw std::invalid_argument("slope needs r > 1");
  return (order_function(f, r, quad_tol) - order_function(f, r_low, quad_tol)) / span;
}

double proximity_function(const PolynomialCurve& f, std::span<const Complex> hyperplane,
                          double r, double quad_tol) {
  const Polynomial section = hyperplane_section(f, hyperplane);
  if (section.is_zero())
    throw std::domain_error("curve image lies inside the hyperplane");
  double norm_sq = 0.0;
  for (const Complex& a : hyperplane) norm_sq += std::norm(a);
  const double log_norm = 0.5 * std::log(norm_sq);
  return circle_mean(
      [&](double theta) {
        const Complex z = std::polar(r, theta);
        return log_max_norm(f, z) + log_norm - std::log(std::abs(section.eval(z)));
      },
      quad_tol);
}

DefectReport defect_estimate(const PolynomialCurve& f, std::span<const Complex> hyperplane,
                             const Multiplicity& l, double r_max, int grid_points,
                             double quad_tol) {
  if (r_max <= 1.0) throw std::invalid_argument("defect estimate requires r_max > 1");
  if (grid_points < 1) throw std::invalid_argument("defect grid needs at least one point");
  const ZeroDivisor divisor = pullback_divisor(f, hyperplane);

  DefectReport report;
  for (int k = 1; k <= grid_points; ++k) {
    const double r = std::pow(r_max, static_cast<double>(k) / grid_points);
    DefectSample sample;
    sample.radius = r;
    sample.counting = counting_function(divisor, r, l);
    sample.order = order_function(f, r, quad_tol);
    if (k == grid_points && sample.order < 1e-9)
      throw std::domain_error("order function vanishes: constant map has no defect");
    sample.defect = sample.order > 0.0 ? 1.0 - sample.counting / sample.order : 0.0;
    report.trajectory.push_back(sample);
  }
  report.defect = report.trajectory.back().defect;
  return report;
}

}  // namespace orbihyp
