#include "domikit/model.hpp"

#include <string>

#include "domikit/errors.hpp"

namespace domikit {

GeneratorSet minimal_path_vectors(const LevelSystem& ls, std::uint64_t guard) {
  require_enumerable(ls.space(), guard, "minimal_path_vectors");
  std::vector<StateVector> minimal;
  StateVector lower;
  for_each_state(ls.space(), [&](const StateVector& x) {
    if (!ls.evaluate_unchecked(x.span())) return;
    // Monotonicity makes single-coordinate descent sufficient.
    lower = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      --lower[i];
      const bool still_path = ls.evaluate_unchecked(lower.span());
      ++lower[i];
      if (still_path) return;
    }
    minimal.push_back(x);
  });
  return GeneratorSet(std::move(minimal));
}

int evaluate_from_paths(const GeneratorSet& p, const StateVector& y) {
  if (!p.empty() && p.dimension() != y.size()) {
    throw DimensionError("state vector " + to_string(y) + " does not match path vector length " +
                         std::to_string(p.dimension()));
  }
  for (const auto& x : p) {
    if (leq(x, y)) return 1;
  }
  return 0;
}

int inclusion_exclusion_eval(const GeneratorSet& p, const StateVector& y, std::size_t guard) {
  if (p.size() > guard) {
    throw ComplexityGuardError("inclusion_exclusion_eval: " + std::to_string(p.size()) +
                               " path vectors exceed the formation guard of " +
                               std::to_string(guard) + "; use evaluate_from_paths");
  }
  if (!p.empty() && p.dimension() != y.size()) {
    throw DimensionError("state vector " + to_string(y) + " does not match path vector length " +
                         std::to_string(p.dimension()));
  }
  // Supersets of a subset whose join exceeds y contribute nothing.
  std::int64_t total = 0;
  auto recurse = [&](auto&& self, std::size_t next, std::size_t depth,
                     const StateVector& current) -> void {
    for (std::size_t i = next; i < p.size(); ++i) {
      StateVector joined = depth == 0 ? p[i] : join(current, p[i]);
      if (!leq(joined, y)) continue;
      total += (depth % 2 == 0) ? 1 : -1;
      self(self, i + 1, depth + 1, joined);
    }
  };
  recurse(recurse, 0, 0, StateVector{});
  return static_cast<int>(total);
}

RelevanceReport relevance_report(const StateSpace& space, const GeneratorSet& paths) {
  RelevanceReport report;
  report.components.resize(space.n());
  for (const auto& x : paths) {
    space.check(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] > 0) report.components[i].relevant_states.insert(x[i]);
    }
  }
  report.strongly_coherent = true;
  for (std::size_t i = 0; i < space.n(); ++i) {
    auto& c = report.components[i];
    c.irrelevant = c.relevant_states.empty();
    c.strongly_relevant = c.relevant_states.count(space.max_state(i)) > 0;
    if (!c.strongly_relevant) report.strongly_coherent = false;
  }
  return report;
}

RelevanceReport relevance_report(const LevelSystem& ls, std::uint64_t guard) {
  return relevance_report(ls.space(), minimal_path_vectors(ls, guard));
}

DominationTable level_domination_table(const LevelSystem& ls, std::size_t formation_guard,
                                       std::uint64_t guard) {
  const GeneratorSet paths = minimal_path_vectors(ls, guard);
  if (paths.empty()) return {};
  return domination_by_formations(paths, formation_guard);
}

HilbertNumerator hilbert_numerator(const DominationTable& d) {
  HilbertNumerator h;
  for (const auto& [x, delta] : d) {
    if (delta != 0) h.terms.push_back({x, delta});
  }
  return h;
}

}  // namespace domikit
