#include "orbihyp/nochka.hpp"

#include <stdexcept>

namespace orbihyp {

namespace {

void check_arrangement(const ArrangementSpec& a) {
  if (a.dim < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  if (a.multiplicities.empty() && a.q() != 0)
    throw std::invalid_argument("arrangement multiplicities missing");
}

// Threshold q' - q'/n' + 1 + 1/n' for q' hyperplanes in P^{n'}.
Rational degree_threshold(std::int64_t qp, std::int64_t np) {
  return Rational(qp) - Rational(qp, np) + Rational(1) + Rational(1, np);
}

}  // namespace

Rational orbifold_degree(const ArrangementSpec& a) {
  Rational deg(0);
  for (const Multiplicity& m : a.multiplicities) deg += weight(m);
  return deg;
}

std::int64_t nochka_bound(std::int64_t N, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (N < n) throw std::invalid_argument("subgeneral position requires N >= n");
  return 2 * N - n + 1;
}

DegeneracyReport degeneracy_check(const ArrangementSpec& a) {
  check_arrangement(a);
  DegeneracyReport report;
  report.degree = orbifold_degree(a);
  const std::int64_t n = a.dim;
  const std::int64_t q = a.q();
  report.constant_verdict = true;
  for (std::int64_t l = 1; l <= n; ++l) {
    // sum of defects >= l*deg(Delta) - (l-1)q must strictly exceed the
    // bound 2n - l + 1 for curves inside an l-plane.
    Rational margin = Rational(l) * report.degree - Rational((l - 1) * q) -
                      Rational(2 * n - l + 1);
    if (!margin.is_positive()) report.constant_verdict = false;
    report.margins.push_back(std::move(margin));
  }
  return report;
}

EmbeddingReport embedding_check(const ArrangementSpec& a, bool exhaustive) {
  check_arrangement(a);
  const int n = a.dim;
  const int q = a.q();

  EmbeddingReport report;
  report.q_hypothesis = q > 2 * n;
  report.degree_margin = orbifold_degree(a) - degree_threshold(q, n);
  report.degree_hypothesis = report.degree_margin.is_positive();
  report.hypotheses_pass = report.q_hypothesis && report.degree_hypothesis;
  report.pass = report.hypotheses_pass;

  if (!exhaustive) return report;
  if (q > 20)
    throw std::invalid_argument("exhaustive sweep limited to q <= 20 hyperplanes");
  report.exhaustive = true;

  // Sweep every index set I of size k = 1..n-1; the complement J defines
  // the induced arrangement of q-k hyperplanes in P^{n-k}.
  std::vector<int> subset;
  for (int k = 1; k <= n - 1; ++k) {
    subset.assign(k, 0);
    for (int i = 0; i < k; ++i) subset[i] = i;
    while (true) {
      Rational deg_j = orbifold_degree(a);
      for (int idx : subset) deg_j -= weight(a.multiplicities[idx]);

      const std::int64_t count_margin = (q - k) - 2 * (n - k);
      Rational degree_margin = deg_j - degree_threshold(q - k, n - k);
      if (count_margin <= 0 || !degree_margin.is_positive()) {
        report.failing_subsets.push_back({subset, count_margin, std::move(degree_margin)});
        report.pass = false;
      }

      // next k-combination of {0..q-1}
      int pos = k - 1;
      while (pos >= 0 && subset[pos] == q - k + pos) --pos;
      if (pos < 0) break;
      ++subset[pos];
      for (int i = pos + 1; i < k; ++i) subset[i] = subset[i - 1] + 1;
    }
  }
  return report;
}

}  // namespace orbihyp
