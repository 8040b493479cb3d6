#include <random>

#include "doctest.h"
#include "orbihyp/surfaces.hpp"

using namespace orbihyp;

namespace {

PlaneArrangement plane(std::vector<std::int64_t> degrees, std::vector<Multiplicity> ms) {
  return {std::move(degrees), std::move(ms), true};
}

}  // namespace

TEST_CASE("log Chern numbers of plane arrangements") {
  auto [c1, c2] = log_chern_plane(plane({5, 5}, {Multiplicity(2), Multiplicity(2)}));
  CHECK(c1 == Rational(49));
  CHECK(c2 == Rational(48));

  auto [p1, p2] = log_chern_plane(plane({}, {}));
  CHECK(p1 == Rational(9));
  CHECK(p2 == Rational(3));

  auto [q1, q2] = log_chern_plane(plane({4}, {Multiplicity(2)}));
  CHECK(q1 == Rational(1));
  CHECK(q2 == Rational(7));
}

TEST_CASE("difference identity c1bar^2 - c2bar = d1 d2 - 3d + 6 for pairs") {
  for (std::int64_t d1 = 1; d1 <= 9; ++d1) {
    for (std::int64_t d2 = 1; d2 <= 9; ++d2) {
      auto [c1, c2] = log_chern_plane(plane({d1, d2}, {Multiplicity(2), Multiplicity(2)}));
      CHECK(c1 - c2 == Rational(d1 * d2 - 3 * (d1 + d2) + 6));
    }
  }
}

TEST_CASE("lifting a plane arrangement") {
  const auto single = lift_plane(plane({5}, {Multiplicity(3)}));
  REQUIRE(single.components.size() == 1);
  CHECK(single.components[0].genus == 6);
  CHECK(single.components[0].cross_intersections == 0);

  CHECK(lift_plane(plane({4}, {Multiplicity(3)})).components[0].genus == 3);

  const auto pair = lift_plane(plane({5, 5}, {Multiplicity(70), Multiplicity(71)}));
  REQUIRE(pair.components.size() == 2);
  CHECK(pair.components[0].cross_intersections == 25);
  CHECK(pair.components[1].cross_intersections == 25);
  CHECK(pair.components[0].self_sections_nonzero);
}

TEST_CASE("jet criterion on the quintic pair") {
  const auto data = lift_plane(plane({5, 5}, {Multiplicity(70), Multiplicity(71)}));
  CHECK(jet_criterion(data) == Rational(1, 142));

  const auto boundary = lift_plane(plane({5, 5}, {Multiplicity(70), Multiplicity(70)}));
  CHECK(jet_criterion(boundary) == Rational(0));

  const auto logarithmic =
      lift_plane(plane({5, 5}, {Multiplicity::infinity(), Multiplicity::infinity()}));
  CHECK(jet_criterion(logarithmic) == Rational(1));  // c1bar^2 - c2bar
}

TEST_CASE("jet criterion is monotone in each multiplicity") {
  Rational prev(-100);
  for (std::int64_t m = 60; m <= 90; ++m) {
    const Rational v = jet_criterion(lift_plane(plane({5, 5}, {Multiplicity(m), Multiplicity(71)})));
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(prev <= jet_criterion(lift_plane(
                    plane({5, 5}, {Multiplicity::infinity(), Multiplicity(71)}))));
}

TEST_CASE("section count leading coefficient") {
  const auto data = lift_plane(plane({5, 5}, {Multiplicity(70), Multiplicity(71)}));
  const BigInt product(70 * 71);
  CHECK(h0_leading_coefficient(data) ==
        Rational(product * product * product, 6) * Rational(1, 142));

  const auto boundary = lift_plane(plane({5, 5}, {Multiplicity(70), Multiplicity(70)}));
  CHECK(h0_leading_coefficient(boundary) == Rational(0));

  SurfacePairData single;
  single.log_c1_sq = Rational(7);
  single.log_c2 = Rational(3);
  single.components.push_back({3, Multiplicity(2), 0, true});
  // criterion v = 4 - (1/2)*4 = 2; coefficient (2^3/6) v = (4/3) v
  CHECK(h0_leading_coefficient(single) == Rational(4, 3) * jet_criterion(single));

  const auto log_pair =
      lift_plane(plane({5, 5}, {Multiplicity::infinity(), Multiplicity(70)}));
  CHECK_THROWS_AS(h0_leading_coefficient(log_pair), std::domain_error);
}

TEST_CASE("plane-pair criterion on the quintic example") {
  const auto report = plane_pair_criterion(5, 5, Multiplicity(70), Multiplicity(71));
  CHECK(report.pass);
  CHECK(report.margin == Rational(1, 994));
  CHECK(report.degree == Rational(9799, 994));
  CHECK(report.threshold == Rational(69, 7));
  CHECK(report.general_type);
  CHECK(report.degrees_ok);

  const auto boundary = plane_pair_criterion(5, 5, Multiplicity(70), Multiplicity(70));
  CHECK_FALSE(boundary.pass);
  CHECK(boundary.margin == Rational(0));

  const auto logarithmic =
      plane_pair_criterion(5, 5, Multiplicity::infinity(), Multiplicity::infinity());
  CHECK(logarithmic.pass);
  CHECK(logarithmic.margin == Rational(1, 7));

  CHECK_FALSE(plane_pair_criterion(3, 5, Multiplicity(9), Multiplicity(9)).degrees_ok);
}

TEST_CASE("criterion equals (d-3) times the pair margin, exactly") {
  std::mt19937 rng(6121);
  std::uniform_int_distribution<std::int64_t> deg(4, 30);
  std::uniform_int_distribution<std::int64_t> mult(1, 200);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t d1 = deg(rng), d2 = deg(rng);
    const Multiplicity m1(mult(rng)), m2(mult(rng));
    const Rational jet = jet_criterion(lift_plane(plane({d1, d2}, {m1, m2})));
    const auto report = plane_pair_criterion(d1, d2, m1, m2);
    CHECK(jet == Rational(d1 + d2 - 3) * report.margin);
    CHECK(jet == report.degree * Rational(d1 + d2 - 3) -
                     Rational(d1 * d1 + d2 * d2 + d1 * d2 - 6));
    CHECK(report.pass == jet.is_positive());
  }
}

TEST_CASE("applicability flags") {
  const auto good = lift_plane(plane({5, 5}, {Multiplicity(2), Multiplicity(2)}));
  CHECK(surface_applicability(good).genus_ok);

  const auto conic = lift_plane(plane({2, 5}, {Multiplicity(2), Multiplicity(2)}));
  CHECK_FALSE(surface_applicability(conic).genus_ok);  // genus 0 component

  SurfacePairData rigid;
  rigid.components.push_back({4, Multiplicity(3), 2, false});
  CHECK_FALSE(surface_applicability(rigid).self_sections_ok);
}

TEST_CASE("fibration criterion with multiple fibers") {
  CHECK(bt_criterion(Rational(2), Rational(1), 2, 2) == Rational(0));
  CHECK(bt_criterion(Rational(6), Rational(1), 3, 4) == Rational(4));
  CHECK(bt_criterion(Rational(5), Rational(2), 1, 2) == Rational(3));  // g=1 drops out
  CHECK_THROWS_AS(bt_criterion(Rational(2), Rational(1), 2, 1), std::invalid_argument);
}
