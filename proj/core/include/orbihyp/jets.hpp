#pragma once

#include <cstdint>
#include <vector>

#include "orbihyp/multiplicity.hpp"

namespace orbihyp {

/// Local normal-crossing chart: one multiplicity per coordinate
/// hyperplane, multiplicity 1 meaning the coordinate is not in the
/// divisor.
struct LocalOrbifoldChart {
  std::vector<Multiplicity> multiplicities;

  int dim() const { return static_cast<int>(multiplicities.size()); }
};

/// One local generator of an orbifold (jet) differential sheaf.
///
/// alpha[i][j-1] is the power of the order-j logarithmic derivative of
/// coordinate i. The generator carries the coordinate prefactor
/// x_i ^ exponents[i] with exponents[i] = sum_j ceil(j*alpha[i][j-1]/m_i);
/// symmetric differentials are the k = 1 case.
struct JetMonomial {
  std::vector<std::vector<std::int64_t>> alpha;  // [coordinate][derivative order - 1]
  std::vector<std::int64_t> exponents;           // per coordinate
  std::int64_t weight = 0;                       // sum_j j * |alpha_j|

  friend bool operator==(const JetMonomial&, const JetMonomial&) = default;
};

/// Generators of the degree-N symmetric differentials of the chart: all
/// compositions of N into dim parts, each with its ceiling prefactor.
/// Lexicographic in alpha; count is binomial(N + dim - 1, dim - 1).
std::vector<JetMonomial> symmetric_generators(const LocalOrbifoldChart& chart,
                                              std::int64_t N);

/// Generators of the order-k, weight-N jet differentials: all matrices
/// alpha with |alpha_1| + 2|alpha_2| + ... + k|alpha_k| = N.
std::vector<JetMonomial> jet_generators(const LocalOrbifoldChart& chart, int k,
                                        std::int64_t N);

/// Prefactor exponents of the wedge-block generator determined by blocks
/// J_1..J_N of q distinct coordinate indices each (1-based): coordinate j
/// occurring k_j times gets exponent ceil(k_j/m_j).
std::vector<std::int64_t> snq_exponents(const LocalOrbifoldChart& chart,
                                        const std::vector<std::vector<int>>& blocks);

}  // namespace orbihyp
