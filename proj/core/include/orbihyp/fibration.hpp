#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "orbihyp/multiplicity.hpp"

namespace orbihyp {

/// One irreducible component of a pulled-back fiber divisor: its fiber
/// multiplicity together with the multiplicity the ambient orbifold
/// divisor assigns to it (1 when the component is not in the divisor).
struct FiberComponent {
  std::int64_t fiber_multiplicity = 1;
  Multiplicity ambient_multiplicity = Multiplicity(1);
};

/// Pullback data of an irreducible base divisor under a fibration; the
/// exceptional part is recorded but never enters the infimum.
struct FibrationFiberData {
  std::vector<FiberComponent> components;
  bool exceptional_part_present = false;
};

/// Multiplicity of the base divisor. In plain mode this is inf_j m_j;
/// the orbifold-aware variant takes inf_j of the products m_j * m_D(D_j),
/// with infinity absorbing.
inline Multiplicity fibration_multiplicity(const FibrationFiberData& data,
                                           bool orbifold_aware) {
  if (data.components.empty())
    throw std::invalid_argument("fibration fiber data has no components");
  Multiplicity best = Multiplicity::infinity();
  for (const FiberComponent& c : data.components) {
    if (c.fiber_multiplicity < 1)
      throw std::invalid_argument("fiber multiplicity must be >= 1");
    Multiplicity term = orbifold_aware
                            ? Multiplicity(c.fiber_multiplicity) * c.ambient_multiplicity
                            : Multiplicity(c.fiber_multiplicity);
    if (term < best) best = term;
  }
  return best;
}

}  // namespace orbihyp
