#include "orbihyp/pullback.hpp"

#include <stdexcept>

namespace orbihyp {

IntersectionData::IntersectionData(std::int64_t genus, std::int64_t curve_degree,
                                   int ambient_dim,
                                   std::vector<ArrangementComponent> components,
                                   std::vector<std::vector<std::int64_t>> contacts)
    : genus_(genus),
      curve_degree_(curve_degree),
      ambient_dim_(ambient_dim),
      components_(std::move(components)),
      contacts_(std::move(contacts)) {
  if (genus_ < 0) throw std::invalid_argument("genus must be nonnegative");
  if (curve_degree_ < 1) throw std::invalid_argument("curve degree must be >= 1");
  if (ambient_dim_ < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  if (components_.empty()) throw std::invalid_argument("arrangement has no components");
  for (const ArrangementComponent& c : components_)
    if (c.degree < 1) throw std::invalid_argument("component degree must be >= 1");

  const std::size_t cols = components_.size();
  std::vector<std::int64_t> column_sums(cols, 0);
  for (const auto& row : contacts_) {
    if (row.size() != cols)
      throw std::invalid_argument("contact row width does not match component count");
    std::int64_t row_sum = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (row[j] < 0) throw std::invalid_argument("contact orders are nonnegative");
      column_sums[j] += row[j];
      row_sum += row[j];
    }
    if (row_sum == 0)
      throw std::invalid_argument("every point must meet the arrangement");
  }
  for (std::size_t j = 0; j < cols; ++j) {
    if (column_sums[j] != curve_degree_ * components_[j].degree)
      throw std::invalid_argument(
          "contact column sum must equal deg(C)*d_j (component " +
          std::to_string(j) + ")");
  }
}

std::int64_t IntersectionData::row_total(std::size_t i) const {
  std::int64_t total = 0;
  for (std::int64_t t : contacts_[i]) total += t;
  return total;
}

std::vector<Multiplicity> minimal_structure(const IntersectionData& data,
                                            ContactMode mode) {
  std::vector<Multiplicity> result;
  result.reserve(data.point_count());
  for (std::size_t i = 0; i < data.point_count(); ++i) {
    const std::int64_t t_i = data.row_total(i);
    Multiplicity best(1);
    for (std::size_t j = 0; j < data.components().size(); ++j) {
      const std::int64_t t_ij = data.contacts()[i][j];
      if (t_ij == 0) continue;
      const std::int64_t t = mode == ContactMode::RowTotal ? t_i : t_ij;
      const Multiplicity candidate = ceil_ratio(data.components()[j].multiplicity, t);
      if (candidate > best) best = candidate;
    }
    result.push_back(best);
  }
  return result;
}

Rational arrangement_degree(const IntersectionData& data) {
  Rational deg(0);
  for (const ArrangementComponent& c : data.components())
    deg += weight(c.multiplicity) * Rational(c.degree);
  return deg;
}

Rational algebraic_hyperbolicity_gap(const IntersectionData& data) {
  const std::vector<Multiplicity> minimal = minimal_structure(data, ContactMode::RowTotal);
  Rational lhs(2 * data.genus() - 2);
  for (const Multiplicity& m : minimal) lhs += weight(m);
  const Rational rhs = (arrangement_degree(data) - Rational(2 * data.ambient_dim())) *
                       Rational(data.curve_degree());
  return lhs - rhs;
}

bool p1_curve_degeneracy_check(const OrbifoldCurve& curve) {
  return canonical_degree(curve).is_positive();
}

}  // namespace orbihyp
