#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "domikit/numeric.hpp"

namespace domikit {

/// Bit i of a mask is the state of the i-th component of a binary structure.
using ComponentMask = std::uint64_t;

/// Largest component count for which 2^n subset sums are evaluated.
inline constexpr std::size_t kDefaultSubsetGuard = 25;

/// A binary monotone structure over a set of (original) component indices.
class BinaryStructure {
 public:
  using Evaluator = std::function<bool(ComponentMask)>;

  BinaryStructure(std::vector<std::size_t> components, Evaluator evaluator);

  std::size_t size() const noexcept { return components_.size(); }
  /// Original index of each local component.
  const std::vector<std::size_t>& components() const noexcept { return components_; }
  ComponentMask full_mask() const noexcept;

  bool operator()(ComponentMask z) const { return evaluator_(z); }

  /// Structure on the remaining components with local component `position`
  /// fixed at `state`.
  BinaryStructure restrict(std::size_t position, bool state) const;

 private:
  std::vector<std::size_t> components_;
  Evaluator evaluator_;
};

/// d(psi) = sum_{B subset C} psi(B) (-1)^{|C|-|B|}. Throws ComplexityGuardError
/// when the structure has more than `guard` components.
Integer signed_domination(const BinaryStructure& psi, std::size_t guard = kDefaultSubsetGuard);

/// Exhaustive monotonicity check.
bool is_monotone(const BinaryStructure& psi);

/// psi(1_i, .) differs from psi(0_i, .) somewhere.
bool is_relevant(const BinaryStructure& psi, std::size_t position);

/// Minimal path sets as local masks, ascending.
std::vector<ComponentMask> minimal_path_sets(const BinaryStructure& psi);

}  // namespace domikit
