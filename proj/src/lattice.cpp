#include "domikit/lattice.hpp"

#include <bit>
#include <string>

#include "domikit/errors.hpp"
#include "domikit/matroid.hpp"

namespace domikit {

namespace {

std::vector<std::size_t> support(const StateVector& y) {
  std::vector<std::size_t> a;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] > 0) a.push_back(i);
  }
  return a;
}

// d(phi_k) of a unit-weight sum system with a common max state, if `ls` is one.
std::optional<Integer> closed_form(const LevelSystem& ls) {
  const auto* sum = dynamic_cast<const WeightedSumStructure*>(&ls.system().structure());
  if (sum == nullptr || !sum->unit_weights()) return std::nullopt;
  const auto& m = ls.space().max_states();
  for (int mi : m) {
    if (mi != m.front()) return std::nullopt;
  }
  const int k = ls.level() - sum->offset();
  if (k <= 0) return Integer(0);  // phi_k == 1 with n >= 1 free components
  return threshold_domination(static_cast<int>(ls.n()), m.front(), k);
}

Integer pivot_recursive(const LevelSystem& ls, std::optional<std::size_t> pivot,
                        const PivotOptions& options, std::size_t depth) {
  if (!pivot) {
    if (options.use_closed_forms) {
      if (auto value = closed_form(ls)) return *value;
    }
    if (ls.n() <= options.base_threshold || depth >= options.max_depth) {
      return signed_domination(ls, options.guard);
    }
    pivot = default_pivot(ls.space());
  }
  const std::size_t e = *pivot;
  if (e >= ls.n()) {
    throw DomainError("pivot " + std::to_string(e) + " outside 0.." + std::to_string(ls.n() - 1));
  }
  const int top = ls.space().max_state(e);
  if (ls.n() == 1) {
    // Freezing the last component leaves a constant system whose domination
    // is its value.
    const int high = ls.evaluate_unchecked(std::span<const int>(&top, 1)) ? 1 : 0;
    const int below = top - 1;
    const int low = ls.evaluate_unchecked(std::span<const int>(&below, 1)) ? 1 : 0;
    return Integer(high - low);
  }
  const LevelSystem upper = restrict_component(ls, e, top);
  const LevelSystem lower = restrict_component(ls, e, top - 1);
  return pivot_recursive(upper, std::nullopt, options, depth + 1) -
         pivot_recursive(lower, std::nullopt, options, depth + 1);
}

}  // namespace

int mobius_product(const StateVector& x, const StateVector& y) {
  if (!leq(x, y)) {
    throw DomainError("mobius_product: " + to_string(x) + " is not below " + to_string(y));
  }
  int gap = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int d = y[i] - x[i];
    if (d > 1) return 0;
    gap += d;
  }
  return parity_sign(gap);
}

Integer delta_at(const LevelSystem& ls, const StateVector& y, std::size_t guard) {
  ls.space().check(y);
  if (y.is_zero()) {
    throw DomainError("delta_at: the subset formula is undefined at the zero vector");
  }
  const std::vector<std::size_t> a = support(y);
  if (a.size() > guard) {
    throw ComplexityGuardError("delta_at: |A(y)| = " + std::to_string(a.size()) +
                               " exceeds the subset guard of " + std::to_string(guard) +
                               "; use pivotal_domination");
  }
  std::int64_t total = 0;
  StateVector x = y;
  const ComponentMask full = (ComponentMask{1} << a.size()) - 1;
  for (ComponentMask b = 0;; ++b) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      x[a[j]] = (b >> j) & 1 ? y[a[j]] : y[a[j]] - 1;
    }
    if (ls.evaluate_unchecked(x.span())) {
      total += ((a.size() - std::popcount(b)) % 2 == 0) ? 1 : -1;
    }
    if (b == full) break;
  }
  return Integer(total);
}

DominationTable lattice_domination_table(const LevelSystem& ls, std::uint64_t guard) {
  require_enumerable(ls.space(), guard, "lattice_domination_table");
  DominationTable table;
  for_each_state(ls.space(), [&](const StateVector& y) {
    Integer value = y.is_zero() ? Integer(ls.evaluate_unchecked(y.span()) ? 1 : 0)
                                : delta_at(ls, y, 63);
    if (value != 0) table.set(y, std::move(value));
  });
  return table;
}

Integer signed_domination(const LevelSystem& ls, std::size_t guard) {
  if (ls.n() > guard) {
    throw ComplexityGuardError("signed_domination: " + std::to_string(ls.n()) +
                               " components exceed the subset guard of " +
                               std::to_string(guard) +
                               "; use pivotal_domination or a closed form");
  }
  return delta_at(ls, ls.space().top(), guard);
}

std::size_t default_pivot(const StateSpace& space) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < space.n(); ++i) {
    if (space.max_state(i) > space.max_state(best)) best = i;
  }
  return best;
}

Integer pivotal_domination(const LevelSystem& ls, std::optional<std::size_t> pivot,
                           const PivotOptions& options) {
  if (!pivot) pivot = default_pivot(ls.space());
  return pivot_recursive(ls, pivot, options, 0);
}

BinaryStructure associated_binary(const LevelSystem& ls) {
  return associated_binary_at(ls, ls.space().top());
}

Integer domination_via_binary(const LevelSystem& ls, std::size_t guard) {
  return signed_domination(associated_binary(ls), guard);
}

BinaryStructure associated_binary_at(const LevelSystem& ls, const StateVector& y) {
  ls.space().check(y);
  if (y.is_zero()) {
    throw DomainError("associated_binary_at: A(y) is empty for the zero vector");
  }
  std::vector<std::size_t> a = support(y);
  StateVector base = y;
  for (std::size_t i : a) --base[i];
  return BinaryStructure(a, [ls, a, base](ComponentMask z) {
    StateVector x = base;
    for (std::size_t j = 0; j < a.size(); ++j) x[a[j]] += static_cast<int>((z >> j) & 1);
    return ls.evaluate_unchecked(x.span());
  });
}

}  // namespace domikit
