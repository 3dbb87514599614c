#include "domikit/binary_structure.hpp"

#include <bit>
#include <string>

#include "domikit/errors.hpp"

namespace domikit {

namespace {

// Inserts `state` at bit `position`, shifting the higher bits up.
ComponentMask expand(ComponentMask z, std::size_t position, bool state) {
  const ComponentMask low = z & ((ComponentMask{1} << position) - 1);
  const ComponentMask high = (z >> position) << (position + 1);
  return low | high | (static_cast<ComponentMask>(state) << position);
}

}  // namespace

BinaryStructure::BinaryStructure(std::vector<std::size_t> components, Evaluator evaluator)
    : components_(std::move(components)), evaluator_(std::move(evaluator)) {
  if (components_.size() > 63) {
    throw DomainError("binary structure limited to 63 components, got " +
                      std::to_string(components_.size()));
  }
}

ComponentMask BinaryStructure::full_mask() const noexcept {
  return (ComponentMask{1} << components_.size()) - 1;
}

BinaryStructure BinaryStructure::restrict(std::size_t position, bool state) const {
  if (position >= components_.size()) {
    throw DomainError("component position " + std::to_string(position) + " out of range");
  }
  std::vector<std::size_t> remaining = components_;
  remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(position));
  return BinaryStructure(std::move(remaining),
                         [parent = evaluator_, position, state](ComponentMask z) {
                           return parent(expand(z, position, state));
                         });
}

Integer signed_domination(const BinaryStructure& psi, std::size_t guard) {
  const std::size_t n = psi.size();
  if (n > guard) {
    throw ComplexityGuardError("binary signed domination: " + std::to_string(n) +
                               " components exceed the subset guard of " +
                               std::to_string(guard) +
                               "; use pivotal decomposition or a closed form");
  }
  // |sum| <= 2^n with n <= 63, so 64-bit accumulation is exact.
  std::int64_t total = 0;
  const ComponentMask full = psi.full_mask();
  for (ComponentMask b = 0;; ++b) {
    if (psi(b)) total += ((n - std::popcount(b)) % 2 == 0) ? 1 : -1;
    if (b == full) break;
  }
  return Integer(total);
}

bool is_monotone(const BinaryStructure& psi) {
  const ComponentMask full = psi.full_mask();
  for (ComponentMask z = 0;; ++z) {
    if (psi(z)) {
      for (std::size_t i = 0; i < psi.size(); ++i) {
        const ComponentMask up = z | (ComponentMask{1} << i);
        if (up != z && !psi(up)) return false;
      }
    }
    if (z == full) break;
  }
  return true;
}

bool is_relevant(const BinaryStructure& psi, std::size_t position) {
  const ComponentMask bit = ComponentMask{1} << position;
  const ComponentMask full = psi.full_mask();
  for (ComponentMask z = 0;; ++z) {
    if (!(z & bit) && psi(z) != psi(z | bit)) return true;
    if (z == full) break;
  }
  return false;
}

std::vector<ComponentMask> minimal_path_sets(const BinaryStructure& psi) {
  std::vector<ComponentMask> paths;
  const ComponentMask full = psi.full_mask();
  for (ComponentMask z = 0;; ++z) {
    if (psi(z)) {
      bool minimal = true;
      for (ComponentMask rest = z; rest && minimal; rest &= rest - 1) {
        if (psi(z & ~(rest & (~rest + 1)))) minimal = false;
      }
      if (minimal) paths.push_back(z);
    }
    if (z == full) break;
  }
  return paths;
}

}  // namespace domikit
