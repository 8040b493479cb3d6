#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace orbihyp {

using Complex = std::complex<double>;

/// Univariate polynomial with complex coefficients, coefficient of z^i
/// at index i. Trailing coefficients below a relative tolerance are
/// trimmed so degrees stay honest under inexact arithmetic.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<Complex> coeffs, double trim_tol = 0.0);

  static Polynomial constant(Complex c) { return Polynomial({c}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coefficients() const { return coeffs_; }
  Complex leading() const;
  double magnitude() const;  // max |coefficient|

  Complex eval(Complex z) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex s, const Polynomial& p);

 private:
  std::vector<Complex> coeffs_;
};

/// Quotient and remainder of dense complex division.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

/// Euclidean gcd with relative coefficient truncation; monic result.
Polynomial poly_gcd(Polynomial a, Polynomial b, double tol = 1e-8);

/// All roots of a polynomial whose roots are simple, by Durand-Kerner
/// iteration on the monic normalization.
std::vector<Complex> simple_roots(const Polynomial& p);

/// Square-free decomposition p ~ prod_k out[k-1]^k via the repeated-gcd
/// scheme; out[k-1] collects the roots of multiplicity exactly k.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p, double tol = 1e-8);

}  // namespace orbihyp
