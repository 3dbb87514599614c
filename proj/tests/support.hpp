#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "domikit/network.hpp"
#include "domikit/numeric.hpp"
#include "domikit/state_vector.hpp"
#include "domikit/system.hpp"

namespace testkit {

using domikit::Integer;
using domikit::Rational;
using domikit::StateVector;

// Plain odometer over {0..m_0} x ... x {0..m_n-1}, last coordinate fastest.
inline std::vector<StateVector> all_states(const std::vector<int>& m) {
  std::vector<StateVector> out;
  StateVector x(m.size(), 0);
  while (true) {
    out.push_back(x);
    std::size_t i = m.size();
    while (i > 0 && x[i - 1] == m[i - 1]) x[--i] = 0;
    if (i == 0) return out;
    ++x[i - 1];
  }
}

inline bool dominated(const StateVector& x, const StateVector& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

struct RandomSystem {
  std::vector<int> max_states;
  int system_max = 1;
  std::vector<int> values;  // odometer order
  std::vector<std::pair<StateVector, int>> seeds;

  int phi(const StateVector& x) const {
    int v = 0;
    for (const auto& [s, level] : seeds)
      if (dominated(s, x)) v = std::max(v, level);
    return v;
  }
  domikit::MultistateSystem build() const {
    return domikit::make_table_system(max_states, values, system_max);
  }
};

// phi(x) = highest level of a seed below x
inline RandomSystem random_system(std::mt19937_64& rng, int max_n = 4, int max_m = 3,
                                  int max_seeds = 7, int cap_component = -1) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  RandomSystem r;
  const int n = uniform(1, max_n);
  for (int i = 0; i < n; ++i)
    r.max_states.push_back(i == cap_component ? uniform(2, std::max(max_m, 2)) : uniform(1, max_m));
  r.system_max = uniform(1, 3);
  const int count = uniform(1, max_seeds);
  for (int s = 0; s < count; ++s) {
    StateVector x(n, 0);
    for (int i = 0; i < n; ++i) {
      int hi = r.max_states[i];
      if (i == cap_component) hi -= 1;
      x[i] = uniform(0, hi);
    }
    if (x.is_zero() && cap_component < 0) x[uniform(0, n - 1)] = 1;
    if (x.is_zero()) continue;
    r.seeds.emplace_back(x, uniform(1, r.system_max));
  }
  if (r.seeds.empty()) {
    StateVector x(n, 0);
    x[cap_component >= 0 ? cap_component : n - 1] = 1;
    r.seeds.emplace_back(x, 1);
  }
  for (const auto& x : all_states(r.max_states)) r.values.push_back(r.phi(x));
  return r;
}

// Minimal path vectors by pairwise comparison over the whole lattice.
inline std::vector<StateVector> brute_paths(const std::vector<int>& m,
                                            const std::function<bool(const StateVector&)>& on) {
  std::vector<StateVector> up;
  for (const auto& x : all_states(m))
    if (on(x)) up.push_back(x);
  std::vector<StateVector> out;
  for (const auto& x : up) {
    bool minimal = true;
    for (const auto& y : up)
      if (y != x && dominated(y, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// delta over every subset join of p; only usable for small p.
inline std::map<StateVector, Integer> brute_formations(const std::vector<StateVector>& p) {
  std::map<StateVector, Integer> delta;
  const std::uint64_t count = std::uint64_t{1} << p.size();
  for (std::uint64_t s = 1; s < count; ++s) {
    StateVector j(p.front().size(), 0);
    int size = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!(s >> i & 1)) continue;
      ++size;
      for (std::size_t c = 0; c < j.size(); ++c) j[c] = std::max(j[c], p[i][c]);
    }
    delta[j] += size % 2 ? 1 : -1;
  }
  std::erase_if(delta, [](const auto& kv) { return kv.second == 0; });
  return delta;
}

// Signed formation counts grouped by join, one generator at a time.
inline std::map<StateVector, Integer> formation_counts(const std::vector<StateVector>& p) {
  std::map<StateVector, Integer> counts;
  for (const auto& g : p) {
    std::map<StateVector, Integer> next = counts;
    for (const auto& [j, c] : counts) {
      StateVector u = j;
      for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::max(u[i], g[i]);
      next[u] -= c;
    }
    next[g] += 1;
    counts = std::move(next);
  }
  std::erase_if(counts, [](const auto& kv) { return kv.second == 0; });
  return counts;
}

// delta(y) = phi(y) - sum_{x < y} delta(x), filled in odometer order.
inline std::map<StateVector, Integer> recursive_delta(
    const std::vector<int>& m, const std::function<bool(const StateVector&)>& on) {
  const auto states = all_states(m);
  std::map<StateVector, Integer> delta;
  for (const auto& y : states) {
    Integer v = on(y) ? 1 : 0;
    for (const auto& [x, d] : delta)
      if (x != y && dominated(x, y)) v -= d;
    if (v != 0) delta[y] = v;
  }
  return delta;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class Scalar>
std::vector<std::vector<Scalar>> to_scalar_pmfs(const std::vector<std::vector<Rational>>& pmfs) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& pmf : pmfs) {
    std::vector<Scalar> row;
    for (const auto& p : pmf) {
      if constexpr (std::is_same_v<Scalar, Rational>) {
        row.push_back(p);
      } else {
        row.push_back(static_cast<Scalar>(p));
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

inline std::vector<std::vector<Rational>> random_pmfs(std::mt19937_64& rng,
                                                      const std::vector<int>& m) {
  std::vector<std::vector<Rational>> out;
  for (int mi : m) {
    std::vector<int> w(mi + 1);
    int total = 0;
    for (auto& v : w) total += v = std::uniform_int_distribution<int>(1, 9)(rng);
    std::vector<Rational> pmf;
    for (int v : w) pmf.emplace_back(v, total);
    out.push_back(std::move(pmf));
  }
  return out;
}

// sum over all states of phi_k(x) * prod p_i(x_i)
template <class Scalar>
Scalar brute_reliability(const std::vector<int>& m, const std::vector<std::vector<Scalar>>& pmfs,
                         const std::function<bool(const StateVector&)>& on) {
  Scalar total{0};
  for (const auto& x : all_states(m)) {
    if (!on(x)) continue;
    Scalar p{1};
    for (std::size_t i = 0; i < x.size(); ++i) p *= pmfs[i][x[i]];
    total += p;
  }
  return total;
}

enum class Bridge { undirected, acyclic, cyclic };

// S=0, a=1, b=2, c=3, T=4; capacities (2,2,1,2,1,2,2)
inline domikit::FlowNetwork bridge_network(Bridge variant) {
  const bool directed = variant != Bridge::undirected;
  std::vector<domikit::FlowEdge> e{{1, 0, 1, directed, 2}, {2, 0, 2, directed, 2},
                                   {3, 1, 2, directed, 1}, {4, 1, 3, directed, 2},
                                   {5, 2, 3, directed, 1}, {6, 3, 4, directed, 2},
                                   {7, 2, 4, directed, 2}};
  if (variant == Bridge::cyclic) {
    std::swap(e[2].from, e[2].to);
    std::swap(e[4].from, e[4].to);
  }
  return domikit::FlowNetwork({"S", "a", "b", "c", "T"}, e, 0, 4);
}

}  // namespace testkit
