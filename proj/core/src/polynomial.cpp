#include "orbihyp/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orbihyp {

Polynomial::Polynomial(std::vector<Complex> coeffs, double trim_tol)
    : coeffs_(std::move(coeffs)) {
  double scale = 0.0;
  for (const Complex& c : coeffs_) scale = std::max(scale, std::abs(c));
  const double cutoff = trim_tol * scale;
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= cutoff) coeffs_.pop_back();
}

Complex Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

double Polynomial::magnitude() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex Polynomial::eval(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return Polynomial(d);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Complex> c(coeffs_);
  const Complex lead = c.back();
  for (Complex& x : c) x /= lead;
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(Complex s, const Polynomial& p) {
  std::vector<Complex> c(p.coeffs_);
  for (Complex& x : c) x *= s;
  return Polynomial(std::move(c), 0.0);
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Complex> rem(a.coefficients());
  std::vector<Complex> quot(a.degree() - b.degree() + 1, 0.0);
  const Complex lead = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Complex factor = rem[k + b.degree()] / lead;
    quot[k] = factor;
    for (int j = 0; j <= b.degree(); ++j)
      rem[k + j] -= factor * b.coefficients()[j];
  }
  rem.resize(b.degree() > 0 ? b.degree() : 0);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem), 1e-12)};
}

Polynomial poly_gcd(Polynomial a, Polynomial b, double tol) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  a = a.monic();
  b = b.monic();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    auto [quot, rem] = poly_divmod(a, b);
    (void)quot;
    // Truncate noise relative to the inputs, not the remainder itself.
    Polynomial cleaned(std::vector<Complex>(rem.coefficients()), 0.0);
    if (!rem.is_zero() && rem.magnitude() <= tol) cleaned = Polynomial();
    if (!cleaned.is_zero()) {
      std::vector<Complex> cs(cleaned.coefficients());
      const double cutoff = tol * cleaned.magnitude();
      while (!cs.empty() && std::abs(cs.back()) <= cutoff) cs.pop_back();
      cleaned = Polynomial(std::move(cs));
    }
    a = b;
    b = cleaned.is_zero() ? Polynomial() : cleaned.monic();
  }
  return a.monic();
}

std::vector<Complex> simple_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("root finding on the zero polynomial");
  const Polynomial m = p.monic();
  const int n = m.degree();
  if (n == 0) return {};

  // Cauchy bound for the root radius.
  double bound = 0.0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(m.coefficients()[i]));
  bound += 1.0;

  std::vector<Complex> z(n);
  const Complex seed(0.4, 0.9);  // not a root of unity
  Complex acc = 1.0;
  for (int i = 0; i < n; ++i) {
    acc *= seed;
    z[i] = bound * acc;
  }

  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0.0;
    for (int i = 0; i < n; ++i) {
      Complex denom = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      const Complex delta = m.eval(z[i]) / denom;
      z[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14 * bound) break;
  }
  return z;
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p, double tol) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of zero");
  // g[k] = prod f_i^{i-k} over factors f_i of multiplicity i > k.
  std::vector<Polynomial> g;
  g.push_back(p.monic());
  while (g.back().degree() > 0) {
    Polynomial next = poly_gcd(g.back(), g.back().derivative(), tol);
    if (next.degree() == g.back().degree()) break;  // numerical stall
    g.push_back(next);
    if (next.degree() == 0) break;
  }
  // d[k] = g[k]/g[k+1] multiplies the factors of multiplicity > k;
  // the multiplicity-(k+1) part is d[k]/d[k+1].
  std::vector<Polynomial> d;
  for (std::size_t k = 0; k + 1 < g.size(); ++k)
    d.push_back(poly_divmod(g[k], g[k + 1]).first.monic());
  if (!g.empty() && g.back().degree() > 0) d.push_back(g.back().monic());

  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k + 1 < d.size())
      out.push_back(poly_divmod(d[k], d[k + 1]).first.monic());
    else
      out.push_back(d[k]);
  }
  return out;
}

}  // namespace orbihyp
