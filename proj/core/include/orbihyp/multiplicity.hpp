#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace orbihyp {

/// An orbifold multiplicity: a positive integer or infinity.
///
/// Infinity marks a logarithmic component (the divisor must be avoided);
/// it compares greater than every finite value and absorbs products.
class Multiplicity {
 public:
  Multiplicity() : value_(1) {}

  Multiplicity(std::int64_t v) : value_(v) {
    if (v < 1) throw std::invalid_argument("multiplicity must be >= 1");
  }

  static Multiplicity infinity() {
    Multiplicity m;
    m.value_ = kInfinite;
    return m;
  }

  bool is_infinite() const { return value_ == kInfinite; }
  bool is_finite() const { return value_ != kInfinite; }

  /// Finite value; throws on infinity.
  std::int64_t value() const {
    if (is_infinite()) throw std::domain_error("multiplicity is infinite");
    return value_;
  }

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

  friend std::strong_ordering operator<=>(const Multiplicity& a, const Multiplicity& b) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

  /// Product of multiplicities; infinity absorbs.
  friend Multiplicity operator*(const Multiplicity& a, const Multiplicity& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    if (a.value_ > kMaxFinite / b.value_)
      throw std::overflow_error("multiplicity product overflow");
    return Multiplicity(a.value_ * b.value_);
  }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, const Multiplicity& m) {
    return os << m.str();
  }

 private:
  static constexpr std::int64_t kInfinite = -1;
  static constexpr std::int64_t kMaxFinite = INT64_MAX / 2;

  std::int64_t value_;
};

/// ceil(a/m) for a >= 0. Infinity yields 0: the prefactor of a generator
/// with a log pole clears no power of the coordinate.
inline std::int64_t ceil_div(std::int64_t a, const Multiplicity& m) {
  if (a < 0) throw std::invalid_argument("ceil_div: negative numerator");
  if (a == 0 || m.is_infinite()) return 0;
  return (a + m.value() - 1) / m.value();
}

/// ceil(m/t) as a multiplicity: the smallest m' with t*m' >= m.
/// Infinity is preserved.
inline Multiplicity ceil_ratio(const Multiplicity& m, std::int64_t t) {
  if (t < 1) throw std::invalid_argument("ceil_ratio: t must be >= 1");
  if (m.is_infinite()) return Multiplicity::infinity();
  return Multiplicity((m.value() + t - 1) / t);
}

}  // namespace orbihyp
