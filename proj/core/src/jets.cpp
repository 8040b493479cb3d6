#include "orbihyp/jets.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbihyp {

namespace {

void check_chart(const LocalOrbifoldChart& chart) {
  if (chart.multiplicities.empty())
    throw std::invalid_argument("chart must have at least one coordinate");
}

// Ascending lexicographic enumeration over the flattened matrix
// alpha[coord][order-1]; cell (i,j) consumes weight (j+1) per unit.
void enumerate(const LocalOrbifoldChart& chart, int k, std::int64_t total,
               std::size_t cell, std::int64_t remaining,
               std::vector<std::int64_t>& flat, std::vector<JetMonomial>& out) {
  const std::size_t n = chart.multiplicities.size();
  const std::size_t cells = n * static_cast<std::size_t>(k);
  if (cell == cells) {
    if (remaining != 0) return;
    JetMonomial mono;
    mono.alpha.assign(n, std::vector<std::int64_t>(k, 0));
    mono.exponents.assign(n, 0);
    mono.weight = total;
    for (std::size_t i = 0; i < n; ++i) {
      for (int j = 0; j < k; ++j) {
        const std::int64_t a = flat[i * k + j];
        mono.alpha[i][j] = a;
        mono.exponents[i] += ceil_div((j + 1) * a, chart.multiplicities[i]);
      }
    }
    out.push_back(std::move(mono));
    return;
  }
  const std::int64_t order = static_cast<std::int64_t>(cell % k) + 1;
  // Last cell is forced when it can absorb the remainder exactly.
  if (cell == cells - 1) {
    if (remaining % order == 0) {
      flat[cell] = remaining / order;
      enumerate(chart, k, total, cell + 1, 0, flat, out);
      flat[cell] = 0;
    }
    return;
  }
  for (std::int64_t v = 0; v * order <= remaining; ++v) {
    flat[cell] = v;
    enumerate(chart, k, total, cell + 1, remaining - v * order, flat, out);
  }
  flat[cell] = 0;
}

}  // namespace

std::vector<JetMonomial> jet_generators(const LocalOrbifoldChart& chart, int k,
                                        std::int64_t N) {
  check_chart(chart);
  if (k < 1) throw std::invalid_argument("jet order k must be >= 1");
  if (N < 1) throw std::invalid_argument("weight N must be >= 1");
  std::vector<JetMonomial> out;
  std::vector<std::int64_t> flat(chart.multiplicities.size() * k, 0);
  enumerate(chart, k, N, 0, N, flat, out);
  return out;
}

std::vector<JetMonomial> symmetric_generators(const LocalOrbifoldChart& chart,
                                              std::int64_t N) {
  return jet_generators(chart, 1, N);
}

std::vector<std::int64_t> snq_exponents(const LocalOrbifoldChart& chart,
                                        const std::vector<std::vector<int>>& blocks) {
  check_chart(chart);
  const int n = chart.dim();
  std::vector<std::int64_t> counts(n, 0);
  std::size_t block_size = blocks.empty() ? 0 : blocks.front().size();
  for (const auto& block : blocks) {
    if (block.size() != block_size || block.empty())
      throw std::invalid_argument("blocks must all have the same nonzero size");
    std::vector<int> sorted(block);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("block indices must be distinct");
    for (int idx : block) {
      if (idx < 1 || idx > n)
        throw std::invalid_argument("block index out of range");
      ++counts[idx - 1];
    }
  }
  std::vector<std::int64_t> exponents(n, 0);
  for (int j = 0; j < n; ++j)
    exponents[j] = ceil_div(counts[j], chart.multiplicities[j]);
  return exponents;
}

}  // namespace orbihyp
