#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>

#include "domikit/binary_structure.hpp"
#include "domikit/numeric.hpp"
#include "domikit/poset.hpp"
#include "domikit/system.hpp"

namespace domikit {

/// Moebius function of the full product lattice: (-1)^{sum(y-x)} when
/// y_i - 1 <= x_i <= y_i for every i, else 0. Throws DomainError if x is not
/// below y.
int mobius_product(const StateVector& x, const StateVector& y);

/// delta_k(y) = sum_{B subset A(y)} phi_k(x(B)) (-1)^{|A(y)|-|B|}, where x(B)
/// keeps y_i on B and lowers the rest of A(y) = {i : y_i > 0} by one.
/// Throws DomainError for y = 0.
Integer delta_at(const LevelSystem& ls, const StateVector& y,
                 std::size_t guard = kDefaultSubsetGuard);

/// delta_k over the whole lattice via delta_at, zero entries dropped. The
/// bottom vector carries phi_k(0) when that is non-zero.
DominationTable lattice_domination_table(const LevelSystem& ls,
                                         std::uint64_t guard = kDefaultEnumerationGuard);

/// d(phi_k) = delta_k(m). Throws ComplexityGuardError when n > guard.
Integer signed_domination(const LevelSystem& ls, std::size_t guard = kDefaultSubsetGuard);

struct PivotOptions {
  /// Systems with at most this many components are finished with the subset
  /// formula.
  std::size_t base_threshold = 10;
  /// Recursion levels below the top call before falling back to the subset
  /// formula regardless of size.
  std::size_t max_depth = std::numeric_limits<std::size_t>::max();
  /// Finish unit-weight sum systems with a common max state in closed form.
  bool use_closed_forms = true;
  std::size_t guard = kDefaultSubsetGuard;
};

/// Component with the largest max state (lowest index on ties).
std::size_t default_pivot(const StateSpace& space);

/// d(phi_k) = d(phi_k(m_e, .)) - d(phi_k(m_e - 1, .)), applied recursively.
/// `pivot` selects e at the top level; deeper levels use default_pivot().
Integer pivotal_domination(const LevelSystem& ls, std::optional<std::size_t> pivot = std::nullopt,
                           const PivotOptions& options = {});

/// psi_k(z) = phi_k(m - 1 + z) over all components.
BinaryStructure associated_binary(const LevelSystem& ls);

/// d(psi_k) evaluated on the associated binary structure.
Integer domination_via_binary(const LevelSystem& ls, std::size_t guard = kDefaultSubsetGuard);

/// psi_k^y over A(y): psi(z) = phi_k(y - 1_{A(y)} + z). Throws DomainError
/// for y = 0.
BinaryStructure associated_binary_at(const LevelSystem& ls, const StateVector& y);

}  // namespace domikit
