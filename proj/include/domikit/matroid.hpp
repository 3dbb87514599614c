#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domikit/binary_structure.hpp"
#include "domikit/numeric.hpp"

namespace domikit {

/// Subset of a matroid ground set {0, ..., |F|-1} as a bitmask.
using ElementSet = std::uint64_t;

inline constexpr std::size_t kDefaultCircuitValidationGuard = 20;
inline constexpr std::size_t kDefaultBetaGuard = 25;

/// Matroid given by its circuit family.
class Matroid {
 public:
  /// Throws DomainError on empty circuits, elements outside the ground set, or
  /// ground sets above 63 elements. Axioms are checked by validate_circuits().
  Matroid(std::size_t ground_size, std::vector<ElementSet> circuits);

  std::size_t ground_size() const noexcept { return ground_size_; }
  ElementSet ground() const noexcept;
  const std::vector<ElementSet>& circuits() const noexcept { return circuits_; }

  /// Contains no circuit.
  bool independent(ElementSet b) const noexcept;

 private:
  std::size_t ground_size_;
  std::vector<ElementSet> circuits_;
};

struct CircuitValidation {
  enum class Status { valid, invalid, skipped };

  Status status = Status::skipped;
  /// First offending pair; `element` is set for elimination failures.
  std::optional<std::pair<ElementSet, ElementSet>> circuits;
  std::optional<std::size_t> element;
  std::string message;

  bool valid() const noexcept { return status == Status::valid; }
};

/// Checks incomparability and circuit elimination exhaustively. Ground sets
/// above `guard` elements are reported as skipped.
CircuitValidation validate_circuits(const Matroid& m,
                                    std::size_t guard = kDefaultCircuitValidationGuard);

enum class RankMethod { greedy, exhaustive };

/// Size of the largest independent subset of `a`.
int rank(const Matroid& m, ElementSet a, RankMethod method = RankMethod::greedy);

/// Matroid on C + x with distinguished element x. Components of the derived
/// system are the remaining ground elements in ascending order.
struct MatroidSystemLink {
  Matroid matroid;
  std::size_t distinguished;

  /// Ground element of each system component.
  std::vector<std::size_t> components() const;
  ElementSet component_set() const noexcept;
};

/// {M \ x : x in M}, as ground-element masks in ascending order. Throws
/// DegenerateSystemError if {x} is itself a circuit.
std::vector<ElementSet> matroid_system_paths(const MatroidSystemLink& link);

/// phi(A) = 1 + rho(A) - rho(A + x) for A a subset of C (ground-element mask).
int structure_from_rank(const MatroidSystemLink& link, ElementSet a);

/// Binary structure of the derived system, evaluated through the rank
/// characterization.
BinaryStructure link_structure(const MatroidSystemLink& link);

/// beta(A) = sum_{B subset A} (-1)^{rho(A)-|B|} rho(B).
Integer crapo_beta(const Matroid& m, ElementSet a, std::size_t guard = kDefaultBetaGuard);

/// b(M) = beta(F).
Integer crapo_number(const Matroid& m, std::size_t guard = kDefaultBetaGuard);

/// delta(A) = (-1)^{|A| - rho(A + x)} beta(A + x) for non-empty A in C;
/// delta(empty) = 0.
Integer domination_from_beta(const MatroidSystemLink& link, ElementSet a,
                             std::size_t guard = kDefaultBetaGuard);

/// D(phi) = D(phi(1_e, .)) + D(phi(0_e, .)), memoized over partial
/// assignments. Valid for matroid systems; a restricted system with an
/// irrelevant component contributes 0.
Integer domination_invariant_recursion(const BinaryStructure& phi,
                                       std::optional<std::size_t> pivot = std::nullopt);

/// Signed domination of the k-out-of-(n,m) sum system.
Integer threshold_domination(int n, int m, int k);

/// Circuits are all (rank+1)-subsets.
Matroid uniform_matroid(std::size_t ground_size, std::size_t rank);

/// Cycle matroid of an undirected multigraph; edge i is ground element i.
Matroid graphic_matroid(std::size_t vertex_count,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace domikit
