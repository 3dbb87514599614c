#include "domikit/poset.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "domikit/errors.hpp"

namespace domikit {

namespace {

void require_formation_guard(std::size_t count, std::size_t guard, const char* what) {
  if (count > guard || count >= 63) {
    throw ComplexityGuardError(std::string(what) + ": " + std::to_string(count) +
                               " generators exceed the formation guard of " +
                               std::to_string(guard) +
                               " (2^n subsets); use the lattice formula (delta_at / "
                               "signed_domination), pivotal decomposition or the "
                               "associated binary system instead");
  }
}

// Visits every non-empty subset of g with its join, depth first.
template <class Visitor>
void for_each_subset_join(const GeneratorSet& g, Visitor&& visit) {
  const std::size_t count = g.size();
  std::vector<std::size_t> chosen;
  chosen.reserve(count);
  auto recurse = [&](auto&& self, std::size_t next, const StateVector& current) -> void {
    for (std::size_t i = next; i < count; ++i) {
      chosen.push_back(i);
      StateVector joined = chosen.size() == 1 ? g[i] : join(current, g[i]);
      visit(std::as_const(chosen), std::as_const(joined));
      self(self, i + 1, joined);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, StateVector{});
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<StateVector> vectors) : vectors_(std::move(vectors)) {
  std::sort(vectors_.begin(), vectors_.end());
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (vectors_[i].size() != vectors_.front().size()) {
      throw DimensionError("generator " + to_string(vectors_[i]) + " has length " +
                           std::to_string(vectors_[i].size()) + ", expected " +
                           std::to_string(vectors_.front().size()));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (compare(vectors_[j], vectors_[i]) != Order::incomparable) {
        throw InvalidGeneratorError("generators " + to_string(vectors_[j]) + " and " +
                                    to_string(vectors_[i]) + " are comparable");
      }
    }
  }
}

JoinClosure::JoinClosure(GeneratorSet generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw InvalidGeneratorError("empty generator set");

  // Every closure element is a join of generators, so extending by single
  // generators reaches the fixed point.
  std::unordered_set<StateVector, StateVectorHash> seen(generators_.begin(), generators_.end());
  std::deque<StateVector> pending(generators_.begin(), generators_.end());
  while (!pending.empty()) {
    StateVector u = std::move(pending.front());
    pending.pop_front();
    for (const auto& g : generators_) {
      StateVector w = join(u, g);
      if (seen.insert(w).second) pending.push_back(std::move(w));
    }
  }
  elements_.assign(seen.begin(), seen.end());
  std::sort(elements_.begin(), elements_.end());

  StateVector top = generators_[0];
  for (const auto& g : generators_) top = join(top, g);
  top_ = *index_of(top);
}

std::optional<std::size_t> JoinClosure::index_of(const StateVector& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

JoinClosure join_closure(const GeneratorSet& g) { return JoinClosure(g); }

DominationTable::DominationTable(std::map<StateVector, Integer> entries)
    : entries_(std::move(entries)) {}

Integer DominationTable::at(const StateVector& x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? Integer(0) : it->second;
}

void DominationTable::set(const StateVector& x, Integer value) {
  entries_[x] = std::move(value);
}

DominationTable DominationTable::nonzero() const {
  DominationTable out;
  for (const auto& [x, v] : entries_) {
    if (v != 0) out.entries_.emplace(x, v);
  }
  return out;
}

std::vector<Formation> formations(const StateVector& target, const GeneratorSet& g,
                                  std::size_t guard) {
  std::vector<Formation> found;
  if (g.empty()) return found;
  if (target.size() != g.dimension()) {
    throw DimensionError("target " + to_string(target) + " does not match generator length " +
                         std::to_string(g.dimension()));
  }
  require_formation_guard(g.size(), guard, "formations");
  for_each_subset_join(g, [&](const std::vector<std::size_t>& chosen, const StateVector& joined) {
    if (joined == target) found.push_back(chosen);
  });
  std::sort(found.begin(), found.end(), [](const Formation& a, const Formation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return found;
}

DominationTable domination_by_formations(const GeneratorSet& g, std::size_t guard) {
  require_formation_guard(g.size(), guard, "domination_by_formations");
  std::unordered_map<StateVector, std::int64_t, StateVectorHash> counts;
  for_each_subset_join(g, [&](const std::vector<std::size_t>& chosen, const StateVector& joined) {
    counts[joined] += (chosen.size() % 2 == 1) ? 1 : -1;
  });
  std::map<StateVector, Integer> entries;
  for (const auto& [x, c] : counts) entries.emplace(x, Integer(c));
  return DominationTable(std::move(entries));
}

const Integer& MobiusTable::at(const StateVector& x, const StateVector& y) const {
  auto i = closure_->index_of(x);
  auto j = closure_->index_of(y);
  if (!i || !j) {
    throw DomainError("mobius: " + to_string(!i ? x : y) + " is not in the closure");
  }
  if (!closure_->below(*i, *j)) {
    throw DomainError("mobius: " + to_string(x) + " is not below " + to_string(y));
  }
  return at(*i, *j);
}

MobiusTable mobius_on_closure(const JoinClosure& c, std::size_t guard) {
  const std::size_t size = c.size();
  if (size > guard) {
    throw ComplexityGuardError("mobius_on_closure: closure has " + std::to_string(size) +
                               " elements, above the guard of " + std::to_string(guard) +
                               "; use domination_by_formations or the lattice formula");
  }
  // Lexicographic order is a linear extension of the componentwise order,
  // so mu(i, u) for u < j is final when mu(i, j) is computed.
  std::vector<Integer> mu(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    mu[i * size + i] = 1;
    for (std::size_t j = i + 1; j < size; ++j) {
      if (!c.below(i, j)) continue;
      Integer sum = 0;
      for (std::size_t u = i; u < j; ++u) {
        if (c.below(i, u) && c.below(u, j)) sum += mu[i * size + u];
      }
      mu[i * size + j] = -sum;
    }
  }
  return MobiusTable(c, std::move(mu));
}

DominationTable domination_by_closure_mobius(const JoinClosure& c, std::size_t guard) {
  const MobiusTable mu = mobius_on_closure(c, guard);
  std::map<StateVector, Integer> entries;
  for (std::size_t j = 0; j < c.size(); ++j) {
    Integer delta = 0;
    for (std::size_t i = 0; i <= j; ++i) {
      if (c.below(i, j)) delta += mu.at(i, j);
    }
    entries.emplace(c.elements()[j], std::move(delta));
  }
  return DominationTable(std::move(entries));
}

}  // namespace domikit
