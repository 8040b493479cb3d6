#pragma once

#include <cstdint>
#include <vector>

#include "orbihyp/multiplicity.hpp"
#include "orbihyp/rational.hpp"

namespace orbihyp {

/// q hyperplanes in P^n carrying orbifold multiplicities. General
/// position is an assumption recorded in reports, never verified here.
struct ArrangementSpec {
  int dim = 1;  // ambient projective dimension n
  std::vector<Multiplicity> multiplicities;

  int q() const { return static_cast<int>(multiplicities.size()); }
};

/// deg(Delta) = sum of weights (hyperplanes have degree 1).
Rational orbifold_degree(const ArrangementSpec& a);

/// The defect-relation bound 2N - n + 1 for hyperplanes in N-subgeneral
/// position; rejects N < n.
std::int64_t nochka_bound(std::int64_t N, std::int64_t n);

/// Degeneracy criterion: margins margin(l) = l*deg(Delta) - (l-1)q - (2n-l+1)
/// for l = 1..n, all strictly positive iff every entire orbifold curve
/// into the arrangement is constant.
struct DegeneracyReport {
  Rational degree;                // deg(Delta)
  std::vector<Rational> margins;  // indexed by l-1
  bool constant_verdict = false;
  bool general_position_assumed = true;
};

DegeneracyReport degeneracy_check(const ArrangementSpec& a);

/// One failing partition in the exhaustive sweep: the index set I cut
/// out, with the two conditions' exact margins (a failure is margin <= 0).
struct SubsetMargin {
  std::vector<int> subset;       // 0-based indices of I, |I| = k
  std::int64_t count_margin;     // (q-k) - 2(n-k)
  Rational degree_margin;        // deg(Delta_J) - threshold(k)
};

struct EmbeddingReport {
  bool q_hypothesis = false;       // q > 2n
  Rational degree_margin;          // deg(Delta) - (q - q/n + 1 + 1/n)
  bool degree_hypothesis = false;  // strict positivity of the above
  bool hypotheses_pass = false;
  bool exhaustive = false;
  std::vector<SubsetMargin> failing_subsets;  // empty unless exhaustive
  bool pass = false;
  bool general_position_assumed = true;
};

/// Hyperbolic-embedding hypotheses, optionally with the exhaustive
/// partition sweep over all index sets I of size k = 1..n-1. The sweep
/// is rejected for q > 20.
EmbeddingReport embedding_check(const ArrangementSpec& a, bool exhaustive);

}  // namespace orbihyp
