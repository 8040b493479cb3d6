#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "orbihyp/pullback.hpp"

using namespace orbihyp;

namespace {

// Random contact record honoring the column-sum constraint: every point
// first claims one unit of contact, then the leftovers are scattered.
IntersectionData random_instance(std::mt19937& rng, std::int64_t max_value) {
  std::uniform_int_distribution<std::int64_t> small(1, 4);
  const std::int64_t genus = rng() % 3;
  const std::int64_t deg_c = small(rng);
  const int dim = 1 + static_cast<int>(rng() % 3);
  const int cols = 1 + static_cast<int>(rng() % 3);

  std::vector<ArrangementComponent> comps;
  std::vector<std::int64_t> budget;
  std::int64_t total = 0;
  for (int j = 0; j < cols; ++j) {
    ArrangementComponent c;
    c.degree = small(rng);
    c.multiplicity = rng() % 5 == 0 ? Multiplicity::infinity()
                                    : Multiplicity(1 + static_cast<std::int64_t>(
                                                           rng() % max_value));
    comps.push_back(c);
    budget.push_back(deg_c * c.degree);
    total += budget.back();
  }

  const int points = 1 + static_cast<int>(rng() % std::min<std::int64_t>(total, 6));
  std::vector<std::vector<std::int64_t>> contacts(points,
                                                  std::vector<std::int64_t>(cols, 0));
  for (int i = 0; i < points; ++i) {
    int j = static_cast<int>(rng() % cols);
    while (budget[j] == 0) j = (j + 1) % cols;
    ++contacts[i][j];
    --budget[j];
  }
  for (int j = 0; j < cols; ++j) {
    while (budget[j] > 0) {
      ++contacts[rng() % points][j];
      --budget[j];
    }
  }
  return IntersectionData(genus, deg_c, dim, std::move(comps), std::move(contacts));
}

// Smallest multiplicity satisfying the morphism condition at one point,
// by direct search.
Multiplicity brute_minimal(const IntersectionData& data, std::size_t i, ContactMode mode) {
  const std::int64_t t_i = data.row_total(i);
  for (std::int64_t candidate = 1; candidate <= 1 << 14; ++candidate) {
    bool ok = true;
    for (std::size_t j = 0; j < data.components().size(); ++j) {
      const std::int64_t t = mode == ContactMode::RowTotal ? t_i : data.contacts()[i][j];
      if (data.contacts()[i][j] == 0) continue;
      const Multiplicity& m = data.components()[j].multiplicity;
      if (m.is_infinite()) return Multiplicity::infinity();
      if (t * candidate < m.value()) ok = false;
    }
    if (ok) return Multiplicity(candidate);
  }
  return Multiplicity::infinity();
}

}  // namespace

TEST_CASE("intersection data enforces the degree constraint") {
  // one point, one component of degree 2, curve degree 1: column sum 2
  CHECK_NOTHROW(IntersectionData(0, 1, 2, {{2, Multiplicity(5)}}, {{2}}));
  CHECK_THROWS_AS(IntersectionData(0, 1, 2, {{2, Multiplicity(5)}}, {{1}}),
                  std::invalid_argument);
  // zero rows are not points of the preimage
  CHECK_THROWS_AS(IntersectionData(0, 1, 2, {{2, Multiplicity(5)}}, {{2}, {0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(IntersectionData(0, 1, 2, {{2, Multiplicity(5)}}, {{-1}, {3}}),
                  std::invalid_argument);
}

TEST_CASE("minimal structure: ceiling of target multiplicity by contact") {
  const IntersectionData one_point(0, 1, 2, {{2, Multiplicity(5)}}, {{2}});
  CHECK(minimal_structure(one_point) == std::vector<Multiplicity>{Multiplicity(3)});

  const IntersectionData log_target(0, 1, 2, {{2, Multiplicity::infinity()}}, {{2}});
  CHECK(minimal_structure(log_target)[0].is_infinite());
  CHECK(minimal_structure(log_target, ContactMode::PerComponent)[0].is_infinite());
}

TEST_CASE("per-component minimal structure of a two-component tangency") {
  // degrees (2,3), curve degree 1, single point with contacts (2,3)
  const IntersectionData data(0, 1, 2, {{2, Multiplicity(4)}, {3, Multiplicity(6)}},
                              {{2, 3}});
  CHECK(minimal_structure(data, ContactMode::PerComponent) ==
        std::vector<Multiplicity>{Multiplicity(2)});  // max(ceil(4/2), ceil(6/3))
  CHECK(minimal_structure(data, ContactMode::RowTotal) ==
        std::vector<Multiplicity>{Multiplicity(2)});  // max(ceil(4/5), ceil(6/5))
}

TEST_CASE("logarithmic gap equals the log-arrangement slack") {
  // all infinite multiplicities: gap = (2g-2+points) - (d-2n) deg(C)
  const IntersectionData data(
      1, 2, 2, {{3, Multiplicity::infinity()}, {2, Multiplicity::infinity()}},
      {{3, 1}, {2, 1}, {1, 2}});
  const std::int64_t points = 3, g = 1, d = 5, n = 2, deg_c = 2;
  CHECK(algebraic_hyperbolicity_gap(data) ==
        Rational(2 * g - 2 + points) - Rational((d - 2 * n) * deg_c));
}

TEST_CASE("trivial arrangement gap") {
  // all multiplicities 1: Delta = 0 and the bound reduces to 2g-2+2n deg(C)
  const IntersectionData data(0, 2, 3, {{2, Multiplicity(1)}}, {{4}});
  CHECK(algebraic_hyperbolicity_gap(data) == Rational(-2 + 2 * 3 * 2));
}

TEST_CASE("minimal structures are brute-force minimal on random instances") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 300; ++trial) {
    const IntersectionData data = random_instance(rng, 50);
    for (const ContactMode mode : {ContactMode::RowTotal, ContactMode::PerComponent}) {
      const auto minimal = minimal_structure(data, mode);
      for (std::size_t i = 0; i < data.point_count(); ++i)
        CHECK(minimal[i] == brute_minimal(data, i, mode));
    }
  }
}

TEST_CASE("per-component multiplicities dominate row-total ones") {
  std::mt19937 rng(55555);
  for (int trial = 0; trial < 300; ++trial) {
    const IntersectionData data = random_instance(rng, 50);
    const auto by_row = minimal_structure(data, ContactMode::RowTotal);
    const auto by_component = minimal_structure(data, ContactMode::PerComponent);
    for (std::size_t i = 0; i < data.point_count(); ++i)
      CHECK(by_component[i] >= by_row[i]);
  }
}

TEST_CASE("contact mass identity and the inequality chain") {
  std::mt19937 rng(987);
  for (int trial = 0; trial < 300; ++trial) {
    const IntersectionData data = random_instance(rng, 50);

    // sum_{i,j} t_{ij}/m_j = deg(C) * sum_j d_j/m_j, infinity contributing 0
    Rational lhs(0), per_degree(0);
    for (std::size_t j = 0; j < data.components().size(); ++j) {
      const Multiplicity& m = data.components()[j].multiplicity;
      if (m.is_infinite()) continue;
      for (std::size_t i = 0; i < data.point_count(); ++i)
        lhs += Rational(data.contacts()[i][j], m.value());
      per_degree += Rational(data.components()[j].degree, m.value());
    }
    CHECK(lhs == Rational(data.curve_degree()) * per_degree);

    // sum (1 - 1/m~_i) >= points - sum_{i,j} t_{ij}/m_j
    const auto minimal = minimal_structure(data, ContactMode::RowTotal);
    Rational weights(0);
    for (const auto& m : minimal) weights += weight(m);
    CHECK(weights >= Rational(static_cast<std::int64_t>(data.point_count())) - lhs);

    // hence the gap dominates the logarithmic gap
    std::vector<ArrangementComponent> log_comps(data.components());
    for (auto& c : log_comps) c.multiplicity = Multiplicity::infinity();
    const IntersectionData log_data(data.genus(), data.curve_degree(), data.ambient_dim(),
                                    std::move(log_comps), data.contacts());
    CHECK(algebraic_hyperbolicity_gap(data) >= algebraic_hyperbolicity_gap(log_data));
  }
}

TEST_CASE("gap is invariant under permutations of points and components") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    const IntersectionData data = random_instance(rng, 20);
    const Rational base = algebraic_hyperbolicity_gap(data);

    std::vector<std::size_t> row_perm(data.point_count());
    std::iota(row_perm.begin(), row_perm.end(), 0);
    std::shuffle(row_perm.begin(), row_perm.end(), rng);
    std::vector<std::size_t> col_perm(data.components().size());
    std::iota(col_perm.begin(), col_perm.end(), 0);
    std::shuffle(col_perm.begin(), col_perm.end(), rng);

    std::vector<ArrangementComponent> comps;
    for (std::size_t j : col_perm) comps.push_back(data.components()[j]);
    std::vector<std::vector<std::int64_t>> contacts;
    for (std::size_t i : row_perm) {
      std::vector<std::int64_t> row;
      for (std::size_t j : col_perm) row.push_back(data.contacts()[i][j]);
      contacts.push_back(std::move(row));
    }
    const IntersectionData shuffled(data.genus(), data.curve_degree(), data.ambient_dim(),
                                    std::move(comps), std::move(contacts));
    CHECK(algebraic_hyperbolicity_gap(shuffled) == base);
  }
}

TEST_CASE("degeneracy of curves through a hyperbolic image") {
  CHECK(p1_curve_degeneracy_check(OrbifoldCurve::with_marks(
      0, {Multiplicity(3), Multiplicity(3), Multiplicity(5)})));
  CHECK_FALSE(p1_curve_degeneracy_check(OrbifoldCurve::with_marks(
      0, {Multiplicity(2), Multiplicity(2), Multiplicity(2), Multiplicity(2)})));
  CHECK(p1_curve_degeneracy_check(OrbifoldCurve::with_marks(2, {})));
}
