#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "orbihyp/multiplicity.hpp"

namespace orbihyp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-precision integers.
///
/// Always stored in lowest terms with positive denominator; every
/// operation is exact. Criterion margins downstream can be as small as
/// 1/994 and are compared strictly, so nothing here ever rounds.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator-(const Rational& x) {
    Rational r;
    r.num_ = -x.num_;
    r.den_ = x.den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& x) { return *this = *this + x; }
  Rational& operator-=(const Rational& x) { return *this = *this - x; }
  Rational& operator*=(const Rational& x) { return *this = *this * x; }
  Rational& operator/=(const Rational& x) { return *this = *this / x; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  BigInt num_;
  BigInt den_;
};

/// Orbifold weight 1 - 1/m of a multiplicity; exactly 1 for infinity.
inline Rational weight(const Multiplicity& m) {
  if (m.is_infinite()) return Rational(1);
  return Rational(m.value() - 1, m.value());
}

}  // namespace orbihyp
