#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "domikit/errors.hpp"
#include "domikit/poset.hpp"
#include "domikit/state_vector.hpp"

namespace domikit {

/// Default bound on the number of states visited by exhaustive enumeration.
inline constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

/// Component state sets {0..m_i} and system state set {0..M}.
class StateSpace {
 public:
  StateSpace(std::vector<int> max_states, int system_max);

  std::size_t n() const noexcept { return max_states_.size(); }
  int max_state(std::size_t i) const { return max_states_[i]; }
  const std::vector<int>& max_states() const noexcept { return max_states_; }
  int system_max() const noexcept { return system_max_; }

  StateVector top() const { return StateVector(max_states_); }
  StateVector bottom() const { return StateVector(n(), 0); }

  /// Number of state vectors, saturating at UINT64_MAX.
  std::uint64_t cardinality() const noexcept;

  bool contains(const StateVector& x) const noexcept;
  /// Throws DimensionError / DomainError.
  void check(const StateVector& x) const;

  /// Position of x in lexicographic order (last component fastest).
  std::uint64_t index_of(std::span<const int> x) const;

  friend bool operator==(const StateSpace&, const StateSpace&) = default;

 private:
  std::vector<int> max_states_;
  int system_max_;
};

/// Throws ComplexityGuardError if the space has more than `guard` states.
void require_enumerable(const StateSpace& space, std::uint64_t guard, const char* what);

/// Visits every state vector in lexicographic order.
template <class Visitor>
void for_each_state(const StateSpace& space, Visitor&& visit) {
  StateVector x = space.bottom();
  const std::size_t n = space.n();
  while (true) {
    visit(std::as_const(x));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < space.max_state(i)) {
        ++x[i];
        break;
      }
      x[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

enum class StructureKind { table, sum, network, path_vectors, restricted };

const char* to_string(StructureKind kind);

/// Evaluator of a structure function phi. Inputs are assumed to be inside
/// the owning state space; MultistateSystem validates before calling.
class Structure {
 public:
  virtual ~Structure() = default;
  virtual StructureKind kind() const noexcept = 0;
  virtual int evaluate(std::span<const int> x) const = 0;
};

/// phi given by an explicit value per state, in lexicographic state order.
class TableStructure final : public Structure {
 public:
  TableStructure(const StateSpace& space, std::vector<int> values);

  StructureKind kind() const noexcept override { return StructureKind::table; }
  int evaluate(std::span<const int> x) const override;
  const std::vector<int>& values() const noexcept { return values_; }

 private:
  StateSpace space_;
  std::vector<int> values_;
};

/// phi(x) = offset + sum_i w_i x_i with non-negative integer weights.
class WeightedSumStructure final : public Structure {
 public:
  explicit WeightedSumStructure(std::vector<int> weights, int offset = 0);

  StructureKind kind() const noexcept override { return StructureKind::sum; }
  int evaluate(std::span<const int> x) const override;
  const std::vector<int>& weights() const noexcept { return weights_; }
  int offset() const noexcept { return offset_; }
  bool unit_weights() const noexcept;

 private:
  std::vector<int> weights_;
  int offset_;
};

/// phi(x) = max{k : x >= p for some p in P_k}, 0 if none. `levels[k-1]` holds
/// P_k; each upset must contain the next one.
class PathVectorStructure final : public Structure {
 public:
  explicit PathVectorStructure(std::vector<GeneratorSet> levels);

  StructureKind kind() const noexcept override { return StructureKind::path_vectors; }
  int evaluate(std::span<const int> x) const override;
  const std::vector<GeneratorSet>& levels() const noexcept { return levels_; }

 private:
  std::vector<GeneratorSet> levels_;
};

/// Parent structure with one component frozen at a fixed state; the
/// remaining components keep their relative order.
class RestrictedStructure final : public Structure {
 public:
  RestrictedStructure(std::shared_ptr<const Structure> parent, std::size_t parent_n,
                      std::size_t component, int state);

  StructureKind kind() const noexcept override { return StructureKind::restricted; }
  int evaluate(std::span<const int> x) const override;

 private:
  std::shared_ptr<const Structure> parent_;
  std::size_t parent_n_;
  std::size_t component_;
  int state_;
};

/// A state space together with a monotone structure function.
class MultistateSystem {
 public:
  /// Throws DomainError when phi(0) < 0 or phi(m) > M. Monotonicity is not
  /// checked here; see check_monotone() and make_table_system().
  MultistateSystem(StateSpace space, std::shared_ptr<const Structure> structure);

  const StateSpace& space() const noexcept { return space_; }
  std::size_t n() const noexcept { return space_.n(); }
  const Structure& structure() const noexcept { return *structure_; }
  const std::shared_ptr<const Structure>& structure_ptr() const noexcept { return structure_; }

  /// Validated evaluation of phi.
  int evaluate(const StateVector& x) const;
  int evaluate_unchecked(std::span<const int> x) const { return structure_->evaluate(x); }

 private:
  StateSpace space_;
  std::shared_ptr<const Structure> structure_;
};

int evaluate(const MultistateSystem& s, const StateVector& x);

/// Builds a table system; M defaults to the largest table value. Throws
/// ValidationError when the table is not non-decreasing.
MultistateSystem make_table_system(std::vector<int> max_states, std::vector<int> values,
                                   std::optional<int> system_max = std::nullopt);

/// phi(x) = sum_i w_i x_i (unit weights when `weights` is empty); M defaults
/// to phi(m).
MultistateSystem make_sum_system(std::vector<int> max_states, std::vector<int> weights = {},
                                 std::optional<int> system_max = std::nullopt);

/// M defaults to the number of levels.
MultistateSystem make_path_vector_system(std::vector<int> max_states,
                                         std::vector<GeneratorSet> levels,
                                         std::optional<int> system_max = std::nullopt);

/// The system on C \ {e} with component e frozen at `state`. Weighted sums
/// stay weighted sums (the frozen term moves into the offset). Requires n >= 2.
MultistateSystem restrict_component(const MultistateSystem& s, std::size_t e, int state);

/// Binary indicator phi_k(x) = I(phi(x) >= k).
class LevelSystem {
 public:
  /// Throws DomainError unless 1 <= k <= M.
  LevelSystem(MultistateSystem system, int k);

  const MultistateSystem& system() const noexcept { return system_; }
  const StateSpace& space() const noexcept { return system_.space(); }
  std::size_t n() const noexcept { return system_.n(); }
  int level() const noexcept { return level_; }

  bool evaluate(const StateVector& x) const { return system_.evaluate(x) >= level_; }
  bool evaluate_unchecked(std::span<const int> x) const {
    return system_.evaluate_unchecked(x) >= level_;
  }

 private:
  MultistateSystem system_;
  int level_;
};

LevelSystem level_function(const MultistateSystem& s, int k);

/// LevelSystem of restrict_component(ls.system(), e, state) at the same level.
LevelSystem restrict_component(const LevelSystem& ls, std::size_t e, int state);

/// phi(y) >= phi(x) for every unit step x -> y. Throws ComplexityGuardError
/// when the space exceeds `guard` states.
bool check_monotone(const MultistateSystem& s,
                    std::uint64_t guard = kDefaultEnumerationGuard);

}  // namespace domikit
