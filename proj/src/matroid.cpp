#include "domikit/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "domikit/errors.hpp"

namespace domikit {

namespace {

constexpr ElementSet bit(std::size_t e) { return ElementSet{1} << e; }

// Calls visit(b) for every subset b of a, including 0 and a.
template <class Visitor>
void for_each_submask(ElementSet a, Visitor&& visit) {
  for (ElementSet b = a;; b = (b - 1) & a) {
    visit(b);
    if (b == 0) break;
  }
}

ElementSet expand_mask(ComponentMask local, const std::vector<std::size_t>& elements) {
  ElementSet out = 0;
  for (std::size_t j = 0; j < elements.size(); ++j) {
    if ((local >> j) & 1) out |= bit(elements[j]);
  }
  return out;
}

}  // namespace

Matroid::Matroid(std::size_t ground_size, std::vector<ElementSet> circuits)
    : ground_size_(ground_size), circuits_(std::move(circuits)) {
  if (ground_size_ > 63) {
    throw DomainError("matroid ground set limited to 63 elements, got " +
                      std::to_string(ground_size_));
  }
  for (ElementSet c : circuits_) {
    if (c == 0) throw DomainError("empty circuit");
    if (c & ~ground()) throw DomainError("circuit uses elements outside the ground set");
  }
  std::sort(circuits_.begin(), circuits_.end());
}

ElementSet Matroid::ground() const noexcept {
  return ground_size_ == 0 ? 0 : (~ElementSet{0} >> (64 - ground_size_));
}

bool Matroid::independent(ElementSet b) const noexcept {
  return std::none_of(circuits_.begin(), circuits_.end(),
                      [b](ElementSet c) { return (c & ~b) == 0; });
}

CircuitValidation validate_circuits(const Matroid& m, std::size_t guard) {
  CircuitValidation result;
  if (m.ground_size() > guard) {
    result.status = CircuitValidation::Status::skipped;
    result.message = "ground set of " + std::to_string(m.ground_size()) +
                     " elements exceeds the validation guard of " + std::to_string(guard);
    return result;
  }
  const auto& circuits = m.circuits();
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      const ElementSet a = circuits[i];
      const ElementSet b = circuits[j];
      if ((a & ~b) == 0 || (b & ~a) == 0) {
        result.status = CircuitValidation::Status::invalid;
        result.circuits = {a, b};
        result.message = "circuits are comparable";
        return result;
      }
      for (ElementSet common = a & b; common; common &= common - 1) {
        const auto e = static_cast<std::size_t>(std::countr_zero(common));
        const ElementSet rest = (a | b) & ~bit(e);
        const bool eliminated = std::any_of(circuits.begin(), circuits.end(),
                                            [rest](ElementSet c) { return (c & ~rest) == 0; });
        if (!eliminated) {
          result.status = CircuitValidation::Status::invalid;
          result.circuits = {a, b};
          result.element = e;
          result.message = "circuit elimination fails";
          return result;
        }
      }
    }
  }
  result.status = CircuitValidation::Status::valid;
  return result;
}

int rank(const Matroid& m, ElementSet a, RankMethod method) {
  if (method == RankMethod::greedy) {
    ElementSet basis = 0;
    for (ElementSet rest = a; rest; rest &= rest - 1) {
      const ElementSet e = rest & (~rest + 1);
      if (m.independent(basis | e)) basis |= e;
    }
    return std::popcount(basis);
  }
  int best = 0;
  for_each_submask(a, [&](ElementSet b) {
    const int size = std::popcount(b);
    if (size > best && m.independent(b)) best = size;
  });
  return best;
}

std::vector<std::size_t> MatroidSystemLink::components() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < matroid.ground_size(); ++e) {
    if (e != distinguished) out.push_back(e);
  }
  return out;
}

ElementSet MatroidSystemLink::component_set() const noexcept {
  return matroid.ground() & ~bit(distinguished);
}

std::vector<ElementSet> matroid_system_paths(const MatroidSystemLink& link) {
  if (link.distinguished >= link.matroid.ground_size()) {
    throw DomainError("distinguished element outside the ground set");
  }
  const ElementSet x = bit(link.distinguished);
  std::vector<ElementSet> paths;
  for (ElementSet c : link.matroid.circuits()) {
    if (!(c & x)) continue;
    if (c == x) {
      throw DegenerateSystemError("the distinguished element is a loop; the empty set is a path");
    }
    paths.push_back(c & ~x);
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

int structure_from_rank(const MatroidSystemLink& link, ElementSet a) {
  if (a & ~link.component_set()) throw DomainError("structure_from_rank: A is not a subset of C");
  const ElementSet x = bit(link.distinguished);
  return 1 + rank(link.matroid, a) - rank(link.matroid, a | x);
}

BinaryStructure link_structure(const MatroidSystemLink& link) {
  std::vector<std::size_t> elements = link.components();
  return BinaryStructure(elements, [link, elements](ComponentMask z) {
    return structure_from_rank(link, expand_mask(z, elements)) == 1;
  });
}

Integer crapo_beta(const Matroid& m, ElementSet a, std::size_t guard) {
  if (a & ~m.ground()) throw DomainError("crapo_beta: A is not a subset of the ground set");
  const auto size = static_cast<std::size_t>(std::popcount(a));
  if (size > guard) {
    throw ComplexityGuardError("crapo_beta: |A| = " + std::to_string(size) +
                               " exceeds the guard of " + std::to_string(guard) +
                               "; use domination_invariant_recursion");
  }
  const int rank_a = rank(m, a);
  std::int64_t total = 0;
  for_each_submask(a, [&](ElementSet b) {
    const int term = rank(m, b);
    total += parity_sign(rank_a - std::popcount(b)) * term;
  });
  return Integer(total);
}

Integer crapo_number(const Matroid& m, std::size_t guard) { return crapo_beta(m, m.ground(), guard); }

Integer domination_from_beta(const MatroidSystemLink& link, ElementSet a, std::size_t guard) {
  if (a & ~link.component_set()) throw DomainError("domination_from_beta: A is not a subset of C");
  const ElementSet with_x = a | bit(link.distinguished);
  if (rank(link.matroid, bit(link.distinguished)) == 0) {
    throw DegenerateSystemError("the distinguished element is a loop; the empty set is a path");
  }
  // phi(empty) = 0 while beta({x}) = 1
  if (a == 0) return 0;
  const int exponent = std::popcount(a) - rank(link.matroid, with_x);
  return parity_sign(exponent) * crapo_beta(link.matroid, with_x, guard);
}

Integer domination_invariant_recursion(const BinaryStructure& phi,
                                       std::optional<std::size_t> pivot) {
  const std::size_t n = phi.size();
  if (pivot && *pivot >= n) throw DomainError("pivot outside the component range");
  const ComponentMask full = phi.full_mask();
  std::map<std::pair<ComponentMask, ComponentMask>, Integer> memo;

  // A free component is irrelevant when no assignment of the other free
  // components lets it switch the output.
  auto has_irrelevant = [&](ComponentMask fixed, ComponentMask values) {
    const ComponentMask free = full & ~fixed;
    for (ComponentMask rest = free; rest; rest &= rest - 1) {
      const ComponentMask e = rest & (~rest + 1);
      const ComponentMask others = free & ~e;
      bool relevant = false;
      for (ComponentMask s = others;; s = (s - 1) & others) {
        if (phi(values | s) != phi(values | s | e)) {
          relevant = true;
          break;
        }
        if (s == 0) break;
      }
      if (!relevant) return true;
    }
    return false;
  };

  auto recurse = [&](auto&& self, ComponentMask fixed, ComponentMask values,
                     std::optional<std::size_t> chosen) -> Integer {
    const ComponentMask free = full & ~fixed;
    if (free == 0) return Integer(phi(values) ? 1 : 0);
    const auto key = std::make_pair(fixed, values);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer result = 0;
    if (!has_irrelevant(fixed, values)) {
      const ComponentMask e =
          chosen ? (ComponentMask{1} << *chosen) : (free & (~free + 1));
      result = self(self, fixed | e, values | e, std::nullopt) +
               self(self, fixed | e, values, std::nullopt);
    }
    memo.emplace(key, result);
    return result;
  };
  return recurse(recurse, 0, 0, pivot);
}

Integer threshold_domination(int n, int m, int k) {
  if (n < 1 || m < 1 || k < 1) {
    throw DomainError("threshold_domination requires n, m, k >= 1");
  }
  const int floor = n * (m - 1);
  if (k <= floor || k > n * m) return 0;
  const int j = k - floor;
  return parity_sign(n - j) * binomial(n - 1, j - 1);
}

Matroid uniform_matroid(std::size_t ground_size, std::size_t rank) {
  std::vector<ElementSet> circuits;
  if (rank < ground_size) {
    const ElementSet ground = ground_size == 0 ? 0 : (~ElementSet{0} >> (64 - ground_size));
    for_each_submask(ground, [&](ElementSet c) {
      if (static_cast<std::size_t>(std::popcount(c)) == rank + 1) circuits.push_back(c);
    });
  }
  return Matroid(ground_size, std::move(circuits));
}

Matroid graphic_matroid(std::size_t vertex_count,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const std::size_t count = edges.size();
  if (count > kDefaultBetaGuard) {
    throw ComplexityGuardError("graphic_matroid: " + std::to_string(count) +
                               " edges exceed the cycle enumeration guard of " +
                               std::to_string(kDefaultBetaGuard));
  }
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw GraphError("edge endpoint out of range");
  }
  // A circuit is an edge set in which every touched vertex has degree 2 and
  // which is connected.
  std::vector<ElementSet> circuits;
  std::vector<int> degree(vertex_count);
  std::vector<std::size_t> parent(vertex_count);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const ElementSet all = count == 0 ? 0 : (~ElementSet{0} >> (64 - count));
  for (ElementSet s = 1; s <= all && s != 0; ++s) {
    std::fill(degree.begin(), degree.end(), 0);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::size_t components = 0;
    for (ElementSet rest = s; rest; rest &= rest - 1) {
      const auto& [u, v] = edges[static_cast<std::size_t>(std::countr_zero(rest))];
      degree[u] += 1;
      degree[v] += 1;
    }
    bool cycle = true;
    for (std::size_t v = 0; v < vertex_count && cycle; ++v) {
      if (degree[v] != 0 && degree[v] != 2) cycle = false;
      if (degree[v] == 2) ++components;
    }
    if (!cycle) continue;
    for (ElementSet rest = s; rest; rest &= rest - 1) {
      const auto& [u, v] = edges[static_cast<std::size_t>(std::countr_zero(rest))];
      const std::size_t ru = find(u);
      const std::size_t rv = find(v);
      if (ru != rv) {
        parent[ru] = rv;
        --components;
      }
    }
    if (components == 1) circuits.push_back(s);
    if (s == all) break;
  }
  return Matroid(count, std::move(circuits));
}

}  // namespace domikit
