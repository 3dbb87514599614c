#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "domikit/numeric.hpp"
#include "domikit/state_vector.hpp"

namespace domikit {

/// Largest generator count for which 2^|g| subsets are enumerated.
inline constexpr std::size_t kDefaultFormationGuard = 20;

/// Finite set of pairwise incomparable state vectors, kept in lexicographic
/// order. All vectors share one length.
class GeneratorSet {
 public:
  GeneratorSet() = default;

  /// Throws InvalidGeneratorError on comparable (or duplicate) vectors and
  /// DimensionError on mixed lengths.
  explicit GeneratorSet(std::vector<StateVector> vectors);

  std::size_t size() const noexcept { return vectors_.size(); }
  bool empty() const noexcept { return vectors_.empty(); }
  std::size_t dimension() const noexcept {
    return vectors_.empty() ? 0 : vectors_.front().size();
  }

  const StateVector& operator[](std::size_t i) const { return vectors_[i]; }
  auto begin() const noexcept { return vectors_.begin(); }
  auto end() const noexcept { return vectors_.end(); }
  const std::vector<StateVector>& vectors() const noexcept { return vectors_; }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<StateVector> vectors_;
};

/// Smallest join-closed superset of a generator set, with the componentwise
/// order restricted to its elements.
class JoinClosure {
 public:
  /// Throws InvalidGeneratorError when `generators` is empty.
  explicit JoinClosure(GeneratorSet generators);

  const GeneratorSet& generators() const noexcept { return generators_; }
  /// Lexicographic.
  const std::vector<StateVector>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  std::optional<std::size_t> index_of(const StateVector& x) const;
  bool contains(const StateVector& x) const { return index_of(x).has_value(); }
  const StateVector& top() const { return elements_[top_]; }

  /// elements()[i] <= elements()[j]
  bool below(std::size_t i, std::size_t j) const { return leq(elements_[i], elements_[j]); }

 private:
  GeneratorSet generators_;
  std::vector<StateVector> elements_;
  std::size_t top_ = 0;
};

JoinClosure join_closure(const GeneratorSet& g);

/// Signed domination values; vectors absent from the map have value 0.
class DominationTable {
 public:
  DominationTable() = default;
  explicit DominationTable(std::map<StateVector, Integer> entries);

  Integer at(const StateVector& x) const;
  void set(const StateVector& x, Integer value);

  std::size_t size() const noexcept { return entries_.size(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const std::map<StateVector, Integer>& entries() const noexcept { return entries_; }

  /// Copy with zero entries dropped.
  DominationTable nonzero() const;

  friend bool operator==(const DominationTable&, const DominationTable&) = default;

 private:
  std::map<StateVector, Integer> entries_;
};

/// A formation is a subset of generators, given by generator indices in
/// ascending order.
using Formation = std::vector<std::size_t>;

/// All non-empty subsets of `g` whose join is `target`, sorted by size then
/// lexicographically. Empty when `target` is not in the closure.
std::vector<Formation> formations(const StateVector& target, const GeneratorSet& g,
                                  std::size_t guard = kDefaultFormationGuard);

/// delta(x) = #odd formations - #even formations for every x in cl(g).
/// Throws ComplexityGuardError when |g| > guard.
DominationTable domination_by_formations(const GeneratorSet& g,
                                         std::size_t guard = kDefaultFormationGuard);

/// Moebius function of a join closure, indexed by closure position.
class MobiusTable {
 public:
  MobiusTable(const JoinClosure& closure, std::vector<Integer> values)
      : closure_(&closure), values_(std::move(values)) {}

  /// mu(x, y); throws DomainError unless both are in the closure with x <= y.
  const Integer& at(const StateVector& x, const StateVector& y) const;
  const Integer& at(std::size_t i, std::size_t j) const {
    return values_[i * closure_->size() + j];
  }

 private:
  const JoinClosure* closure_;
  std::vector<Integer> values_;
};

/// Closures above this size are refused by the Moebius routines (the table
/// is quadratic in the closure size).
inline constexpr std::size_t kDefaultClosureGuard = 4096;

/// The returned table refers to `c`, which must outlive it.
MobiusTable mobius_on_closure(const JoinClosure& c, std::size_t guard = kDefaultClosureGuard);

/// delta(y) = sum over closure elements x <= y of mu(x, y).
DominationTable domination_by_closure_mobius(const JoinClosure& c,
                                             std::size_t guard = kDefaultClosureGuard);

}  // namespace domikit
