#include "domikit/system.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace domikit {

StateSpace::StateSpace(std::vector<int> max_states, int system_max)
    : max_states_(std::move(max_states)), system_max_(system_max) {
  if (max_states_.empty()) throw DomainError("state space needs at least one component");
  for (std::size_t i = 0; i < max_states_.size(); ++i) {
    if (max_states_[i] < 1) {
      throw DomainError("component " + std::to_string(i) + " has max state " +
                        std::to_string(max_states_[i]) + " < 1");
    }
  }
  if (system_max_ < 1) {
    throw DomainError("system max state " + std::to_string(system_max_) + " < 1");
  }
}

std::uint64_t StateSpace::cardinality() const noexcept {
  std::uint64_t total = 1;
  for (int m : max_states_) {
    const auto states = static_cast<std::uint64_t>(m) + 1;
    if (total > std::numeric_limits<std::uint64_t>::max() / states) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= states;
  }
  return total;
}

bool StateSpace::contains(const StateVector& x) const noexcept {
  if (x.size() != n()) return false;
  for (std::size_t i = 0; i < n(); ++i) {
    if (x[i] < 0 || x[i] > max_states_[i]) return false;
  }
  return true;
}

void StateSpace::check(const StateVector& x) const {
  if (x.size() != n()) {
    throw DimensionError("state vector " + to_string(x) + " has length " +
                         std::to_string(x.size()) + ", expected " + std::to_string(n()));
  }
  for (std::size_t i = 0; i < n(); ++i) {
    if (x[i] < 0 || x[i] > max_states_[i]) {
      throw DomainError("state vector " + to_string(x) + ": component " + std::to_string(i) +
                        " outside 0.." + std::to_string(max_states_[i]));
    }
  }
}

std::uint64_t StateSpace::index_of(std::span<const int> x) const {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < n(); ++i) {
    index = index * (static_cast<std::uint64_t>(max_states_[i]) + 1) +
            static_cast<std::uint64_t>(x[i]);
  }
  return index;
}

void require_enumerable(const StateSpace& space, std::uint64_t guard, const char* what) {
  if (space.cardinality() > guard) {
    throw ComplexityGuardError(std::string(what) + ": state space of " +
                               std::to_string(space.cardinality()) +
                               " vectors exceeds the enumeration guard of " +
                               std::to_string(guard));
  }
}

const char* to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::table: return "table";
    case StructureKind::sum: return "sum";
    case StructureKind::network: return "network";
    case StructureKind::path_vectors: return "path_vectors";
    case StructureKind::restricted: return "restricted";
  }
  return "?";
}

TableStructure::TableStructure(const StateSpace& space, std::vector<int> values)
    : space_(space), values_(std::move(values)) {
  if (values_.size() != space_.cardinality()) {
    throw DimensionError("table has " + std::to_string(values_.size()) + " values, state space has " +
                      std::to_string(space_.cardinality()));
  }
}

int TableStructure::evaluate(std::span<const int> x) const {
  return values_[space_.index_of(x)];
}

WeightedSumStructure::WeightedSumStructure(std::vector<int> weights, int offset)
    : weights_(std::move(weights)), offset_(offset) {
  for (int w : weights_) {
    if (w < 0) throw DomainError("weighted sum: negative weight " + std::to_string(w));
  }
}

int WeightedSumStructure::evaluate(std::span<const int> x) const {
  int total = offset_;
  for (std::size_t i = 0; i < weights_.size(); ++i) total += weights_[i] * x[i];
  return total;
}

bool WeightedSumStructure::unit_weights() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

PathVectorStructure::PathVectorStructure(std::vector<GeneratorSet> levels)
    : levels_(std::move(levels)) {
  for (std::size_t k = 1; k < levels_.size(); ++k) {
    for (const auto& upper : levels_[k]) {
      bool covered = std::any_of(levels_[k - 1].begin(), levels_[k - 1].end(),
                                 [&](const StateVector& lower) { return leq(lower, upper); });
      if (!covered) {
        throw ValidationError("path vector " + to_string(upper) + " of level " +
                          std::to_string(k + 1) + " dominates no path vector of level " +
                          std::to_string(k));
      }
    }
  }
}

int PathVectorStructure::evaluate(std::span<const int> x) const {
  const StateVector y(x);
  for (std::size_t k = levels_.size(); k > 0; --k) {
    for (const auto& p : levels_[k - 1]) {
      if (leq(p, y)) return static_cast<int>(k);
    }
  }
  return 0;
}

RestrictedStructure::RestrictedStructure(std::shared_ptr<const Structure> parent,
                                         std::size_t parent_n, std::size_t component, int state)
    : parent_(std::move(parent)), parent_n_(parent_n), component_(component), state_(state) {}

int RestrictedStructure::evaluate(std::span<const int> x) const {
  std::vector<int> full(parent_n_);
  std::copy(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(component_), full.begin());
  full[component_] = state_;
  std::copy(x.begin() + static_cast<std::ptrdiff_t>(component_), x.end(),
            full.begin() + static_cast<std::ptrdiff_t>(component_) + 1);
  return parent_->evaluate(full);
}

MultistateSystem::MultistateSystem(StateSpace space, std::shared_ptr<const Structure> structure)
    : space_(std::move(space)), structure_(std::move(structure)) {
  if (!structure_) throw DomainError("system without a structure function");
  const int bottom = structure_->evaluate(space_.bottom().span());
  const int top = structure_->evaluate(space_.top().span());
  if (bottom < 0 || top > space_.system_max()) {
    throw DomainError("structure function leaves 0.." + std::to_string(space_.system_max()) +
                      " (phi(0) = " + std::to_string(bottom) +
                      ", phi(m) = " + std::to_string(top) + ")");
  }
}

int MultistateSystem::evaluate(const StateVector& x) const {
  space_.check(x);
  return structure_->evaluate(x.span());
}

int evaluate(const MultistateSystem& s, const StateVector& x) { return s.evaluate(x); }

MultistateSystem make_table_system(std::vector<int> max_states, std::vector<int> values,
                                   std::optional<int> system_max) {
  const int inferred = values.empty() ? 0 : *std::max_element(values.begin(), values.end());
  StateSpace space(std::move(max_states), system_max.value_or(std::max(inferred, 1)));
  for (int v : values) {
    if (v < 0 || v > space.system_max()) {
      throw ValidationError("table value " + std::to_string(v) + " outside 0.." +
                            std::to_string(space.system_max()));
    }
  }
  auto table = std::make_shared<TableStructure>(space, std::move(values));
  MultistateSystem system(space, std::move(table));
  if (!check_monotone(system)) throw ValidationError("table structure is not non-decreasing");
  return system;
}

MultistateSystem make_sum_system(std::vector<int> max_states, std::vector<int> weights,
                                 std::optional<int> system_max) {
  if (weights.empty()) weights.assign(max_states.size(), 1);
  if (weights.size() != max_states.size()) {
    throw DimensionError("sum system: " + std::to_string(weights.size()) + " weights for " +
                         std::to_string(max_states.size()) + " components");
  }
  auto sum = std::make_shared<WeightedSumStructure>(std::move(weights));
  const int top = sum->evaluate(max_states);
  StateSpace space(std::move(max_states), system_max.value_or(top));
  return MultistateSystem(std::move(space), std::move(sum));
}

MultistateSystem make_path_vector_system(std::vector<int> max_states,
                                         std::vector<GeneratorSet> levels,
                                         std::optional<int> system_max) {
  for (const auto& level : levels) {
    for (const auto& p : level) {
      if (p.size() != max_states.size()) {
        throw DimensionError("path vector " + to_string(p) + " does not match " +
                             std::to_string(max_states.size()) + " components");
      }
    }
  }
  const int count = static_cast<int>(levels.size());
  StateSpace space(std::move(max_states), system_max.value_or(count));
  for (const auto& level : levels) {
    for (const auto& p : level) space.check(p);
  }
  return MultistateSystem(std::move(space),
                          std::make_shared<PathVectorStructure>(std::move(levels)));
}

MultistateSystem restrict_component(const MultistateSystem& s, std::size_t e, int state) {
  const std::size_t n = s.n();
  if (n < 2) throw DomainError("cannot remove the only component of a system");
  if (e >= n) throw DomainError("component " + std::to_string(e) + " out of range");
  if (state < 0 || state > s.space().max_state(e)) {
    throw DomainError("state " + std::to_string(state) + " outside 0.." +
                      std::to_string(s.space().max_state(e)));
  }
  std::vector<int> max_states = s.space().max_states();
  max_states.erase(max_states.begin() + static_cast<std::ptrdiff_t>(e));
  StateSpace space(std::move(max_states), s.space().system_max());

  if (auto sum = dynamic_cast<const WeightedSumStructure*>(&s.structure())) {
    std::vector<int> weights = sum->weights();
    const int folded = sum->offset() + weights[e] * state;
    weights.erase(weights.begin() + static_cast<std::ptrdiff_t>(e));
    return MultistateSystem(std::move(space),
                            std::make_shared<WeightedSumStructure>(std::move(weights), folded));
  }
  return MultistateSystem(
      std::move(space), std::make_shared<RestrictedStructure>(s.structure_ptr(), n, e, state));
}

LevelSystem::LevelSystem(MultistateSystem system, int k) : system_(std::move(system)), level_(k) {
  if (k < 1 || k > system_.space().system_max()) {
    throw DomainError("level " + std::to_string(k) + " outside 1.." +
                      std::to_string(system_.space().system_max()));
  }
}

LevelSystem level_function(const MultistateSystem& s, int k) { return LevelSystem(s, k); }

LevelSystem restrict_component(const LevelSystem& ls, std::size_t e, int state) {
  return LevelSystem(restrict_component(ls.system(), e, state), ls.level());
}

bool check_monotone(const MultistateSystem& s, std::uint64_t guard) {
  require_enumerable(s.space(), guard, "check_monotone");
  bool monotone = true;
  StateVector up;
  for_each_state(s.space(), [&](const StateVector& x) {
    if (!monotone) return;
    const int here = s.evaluate_unchecked(x.span());
    up = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == s.space().max_state(i)) continue;
      ++up[i];
      if (s.evaluate_unchecked(up.span()) < here) {
        monotone = false;
        return;
      }
      --up[i];
    }
  });
  return monotone;
}

}  // namespace domikit
