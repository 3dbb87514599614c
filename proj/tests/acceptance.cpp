#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "domikit/errors.hpp"
#include "domikit/lattice.hpp"
#include "domikit/matroid.hpp"
#include "domikit/model.hpp"
#include "domikit/network.hpp"
#include "domikit/reliability.hpp"
#include "support.hpp"

using namespace domikit;
using testkit::Bridge;

namespace {

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && limit_seconds > 0 && seconds > limit_seconds) {
    ok = false;
    detail += " over time limit";
  }
  if (!ok) ++failures;
  std::printf("[%s] %2d  %-44s %8.3f s  %s\n", ok ? "PASS" : "FAIL", id, title, seconds, detail.c_str());
}

Integer top_of(const std::map<StateVector, Integer>& d, const StateVector& top) {
  auto it = d.find(top);
  return it == d.end() ? Integer(0) : it->second;
}

std::vector<testkit::RandomSystem> suite() {
  std::mt19937_64 rng(2024);
  std::vector<testkit::RandomSystem> out;
  for (int i = 0; i < 100; ++i) out.push_back(testkit::random_system(rng));
  return out;
}

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

Integer subset_delta(const BinaryStructure& phi, ComponentMask a) {
  Integer total = 0;
  for (ComponentMask b = a;; b = (b - 1) & a) {
    if (phi(b)) total += (std::popcount(a ^ b) % 2) ? -1 : 1;
    if (b == 0) break;
  }
  return total;
}

}  // namespace

int main() {
  const auto systems = suite();

  criterion(1, "closure example, 15 elements, 4/6/4/1", 1.0, [](std::string& detail) {
    const GeneratorSet g({{2, 1, 1, 0}, {1, 2, 0, 1}, {1, 0, 2, 1}, {0, 1, 1, 2}});
    const JoinClosure c(g);
    const auto table = domination_by_formations(g);
    int groups[5][2] = {};
    for (const auto& [x, d] : table) {
      int below = 0;
      for (const auto& v : g) below += leq(v, x);
      groups[below][d > 0 ? 0 : 1] += 1;
    }
    detail = "closure " + std::to_string(c.size());
    return c.size() == 15 && table.size() == 15 && groups[1][0] == 4 && groups[2][1] == 6 &&
           groups[3][0] == 4 && groups[4][1] == 1 &&
           table.nonzero().entries() == testkit::brute_formations(g.vectors()) &&
           domination_by_closure_mobius(c) == table;
  });

  criterion(2, "4-out-of-(4,2): 19 paths, d = 0, 6 and 7", 5.0, [](std::string& detail) {
    const LevelSystem ls(make_sum_system({2, 2, 2, 2}), 4);
    const auto p = minimal_path_vectors(ls);
    const auto top = ls.space().top();
    const Integer f = domination_by_formations(p).at(top);
    const Integer m = domination_by_closure_mobius(JoinClosure(p)).at(top);
    const Integer v = pivotal_domination(ls);
    const Integer b = domination_via_binary(ls);
    const auto r2 = minimal_path_vectors(restrict_component(ls, 3, 2)).size();
    const auto r1 = minimal_path_vectors(restrict_component(ls, 3, 1)).size();
    detail = std::to_string(p.size()) + " paths, restrictions " + std::to_string(r2) + "/" +
             std::to_string(r1);
    return p.size() == 19 && f == 0 && m == 0 && v == 0 && b == 0 && r2 == 6 && r1 == 7;
  });

  criterion(3, "threshold closed form, n<=4 m<=3", 60.0, [](std::string& detail) {
    int cases = 0;
    for (int n = 1; n <= 4; ++n)
      for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= n * m; ++k) {
          const LevelSystem ls(make_sum_system(std::vector<int>(n, m)), k);
          const auto p = minimal_path_vectors(ls);
          if (top_of(testkit::formation_counts(p.vectors()), ls.space().top()) !=
              threshold_domination(n, m, k))
            return false;
          ++cases;
        }
    detail = std::to_string(cases) + " cases";
    return true;
  });

  criterion(4, "k-out-of-n, 1<=k<=n<=6", 10.0, [](std::string& detail) {
    int cases = 0;
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k <= n; ++k) {
        const Integer expected = ((n - k) % 2 ? -1 : 1) * testkit::binomial(n - 1, k - 1);
        const LevelSystem ls(make_sum_system(std::vector<int>(n, 1)), k);
        if (domination_via_binary(ls) != expected || threshold_domination(n, 1, k) != expected)
          return false;
        ++cases;
      }
    detail = std::to_string(cases) + " cases";
    return true;
  });

  criterion(5, "undirected bridge: -3, D = 3, b = 3, cuts", 10.0, [](std::string& detail) {
    const auto net = testkit::bridge_network(Bridge::undirected);
    const bool cuts = minimal_cut_sets(net) == std::vector<CutSet>{{1, 2}, {1, 3, 5, 7}, {2, 3, 4},
                                                                   {2, 3, 5, 6}, {4, 5, 7}, {6, 7}};
    const LevelSystem ls(network_system(net), 3);
    const Integer d = domination_via_binary(ls);
    const Integer lattice = signed_domination(ls);
    const Integer inv = domination_invariant_recursion(associated_binary(ls));
    EdgeList edges;
    for (const auto& e : net.edges()) edges.emplace_back(e.from, e.to);
    edges.emplace_back(net.source(), net.sink());
    const Integer b = crapo_number(graphic_matroid(net.node_count(), edges));
    detail = "d=" + d.str() + " D=" + inv.str() + " b=" + b.str();
    return cuts && d == -3 && lattice == -3 && inv == 3 && b == 3;
  });

  criterion(6, "directed bridge: acyclic -1, cyclic 0", 10.0, [](std::string& detail) {
    const auto acyclic = testkit::bridge_network(Bridge::acyclic);
    const auto cyclic = testkit::bridge_network(Bridge::cyclic);
    const bool cuts =
        minimal_cut_sets(acyclic) ==
            std::vector<CutSet>{{1, 2}, {1, 5, 7}, {2, 3, 4}, {2, 3, 6}, {4, 5, 7}, {6, 7}} &&
        minimal_cut_sets(cyclic) ==
            std::vector<CutSet>{{1, 2}, {1, 3, 7}, {2, 4}, {2, 5, 6}, {4, 7}, {6, 7}};
    const auto a = directed_network_domination(acyclic);
    const Integer a_subset = domination_via_binary(LevelSystem(network_system(acyclic), 3));
    const auto c = directed_network_domination(cyclic);
    const Integer c_subset = domination_via_binary(LevelSystem(network_system(cyclic), 3));
    auto cycle = c.cycle;
    std::sort(cycle.begin(), cycle.end());
    detail = "acyclic " + a.value.str() + "/" + a_subset.str() + ", cyclic " + c.value.str() + "/" +
             c_subset.str();
    return cuts && a.value == -1 && a.value == parity_sign(7 - 4) && a_subset == -1 &&
           c.cyclic && c.value == 0 && c_subset == 0 && cycle == std::vector<int>{3, 4, 5};
  });

  criterion(7, "non-coherent systems vanish at the top", 0, [](std::string& detail) {
    std::mt19937_64 rng(77);
    int instances = 0;
    while (instances < 50) {
      const int n = std::uniform_int_distribution<int>(1, 4)(rng);
      const int capped = std::uniform_int_distribution<int>(0, n - 1)(rng);
      auto r = testkit::random_system(rng, n, 3, 7, capped);
      if (static_cast<int>(r.max_states.size()) <= capped) continue;
      const auto s = r.build();
      for (int k = 1; k <= s.space().system_max(); ++k) {
        const LevelSystem ls(s, k);
        const auto p = minimal_path_vectors(ls);
        if (p.empty()) continue;
        if (relevance_report(ls).components[capped].strongly_relevant) return false;
        if (top_of(testkit::formation_counts(p.vectors()), s.space().top()) != 0) return false;
        if (signed_domination(ls) != 0 || domination_via_binary(ls) != 0) return false;
      }
      ++instances;
    }
    detail = std::to_string(instances) + " instances";
    return true;
  });

  criterion(8, "inversion identity on 100 random systems", 0, [&](std::string& detail) {
    long checked = 0;
    for (const auto& r : systems) {
      const auto s = r.build();
      for (int k = 1; k <= s.space().system_max(); ++k) {
        const LevelSystem ls(s, k);
        const auto p = minimal_path_vectors(ls);
        const auto lattice = lattice_domination_table(ls);
        const auto formation = p.empty() ? DominationTable{} : domination_by_formations(p);
        for (const auto& y : testkit::all_states(r.max_states)) {
          Integer a = 0, b = 0;
          for (const auto& [x, d] : lattice)
            if (leq(x, y)) a += d;
          for (const auto& [x, d] : formation)
            if (leq(x, y)) b += d;
          const int phi = r.phi(y) >= k;
          if (a != phi || b != phi) return false;
          ++checked;
        }
      }
    }
    detail = std::to_string(checked) + " vectors";
    return true;
  });

  criterion(9, "cross-method agreement on the same systems", 0, [&](std::string& detail) {
    int levels = 0;
    for (const auto& r : systems) {
      const auto s = r.build();
      for (int k = 1; k <= s.space().system_max(); ++k) {
        const LevelSystem ls(s, k);
        const auto top = s.space().top();
        const auto p = minimal_path_vectors(ls);
        const Integer oracle = top_of(
            testkit::recursive_delta(r.max_states, [&](const StateVector& x) { return r.phi(x) >= k; }),
            top);
        std::vector<Integer> values;
        if (p.empty()) {
          values.push_back(0);
        } else {
          const auto f = domination_by_formations(p);
          const auto m = domination_by_closure_mobius(JoinClosure(p));
          if (!(f == m)) return false;
          values.push_back(f.at(top));
          values.push_back(m.at(top));
        }
        values.push_back(signed_domination(ls));
        values.push_back(domination_via_binary(ls));
        for (std::size_t e = 0; e < ls.n(); ++e) {
          values.push_back(pivotal_domination(ls, e));
          PivotOptions deep;
          deep.base_threshold = 0;
          deep.use_closed_forms = false;
          values.push_back(pivotal_domination(ls, e, deep));
        }
        for (const auto& v : values)
          if (v != oracle) return false;
        ++levels;
      }
    }
    detail = std::to_string(levels) + " levels";
    return true;
  });

  criterion(10, "component permutation invariance", 0, [&](std::string& detail) {
    long perms = 0;
    for (const auto& r : systems) {
      const std::size_t n = r.max_states.size();
      const auto s = r.build();
      std::vector<std::size_t> pi(n);
      std::iota(pi.begin(), pi.end(), 0);
      do {
        std::vector<int> m2(n);
        for (std::size_t j = 0; j < n; ++j) m2[j] = r.max_states[pi[j]];
        auto unpermute = [&](const StateVector& y) {
          StateVector x(n, 0);
          for (std::size_t j = 0; j < n; ++j) x[pi[j]] = y[j];
          return x;
        };
        std::vector<int> values;
        for (const auto& y : testkit::all_states(m2)) values.push_back(r.phi(unpermute(y)));
        const auto s2 = make_table_system(m2, values, r.system_max);
        for (int k = 1; k <= s.space().system_max(); ++k) {
          const auto d = lattice_domination_table(LevelSystem(s, k));
          const auto d2 = lattice_domination_table(LevelSystem(s2, k));
          if (d.size() != d2.size()) return false;
          for (const auto& [y, v] : d2)
            if (d.at(unpermute(y)) != v) return false;
        }
        ++perms;
      } while (std::next_permutation(pi.begin(), pi.end()));
    }
    detail = std::to_string(perms) + " permutations";
    return true;
  });

  criterion(11, "reliability: 1e-12 double, exact rational", 0, [&](std::string& detail) {
    std::mt19937_64 rng(4242);
    double worst = 0;
    for (const auto& r : systems) {
      const auto s = r.build();
      const auto pmfs = testkit::random_pmfs(rng, r.max_states);
      const ComponentDistribution<Rational> exact(pmfs);
      const auto dpmfs = testkit::to_scalar_pmfs<double>(pmfs);
      const ComponentDistribution<double> approx(dpmfs);
      for (int k = 1; k <= s.space().system_max(); ++k) {
        const LevelSystem ls(s, k);
        auto on = [&](const StateVector& x) { return r.phi(x) >= k; };
        const auto p = minimal_path_vectors(ls);
        const auto table = p.empty() ? DominationTable{} : domination_by_formations(p);
        if (reliability_from_domination(table, exact) !=
            testkit::brute_reliability<Rational>(r.max_states, pmfs, on))
          return false;
        worst = std::max(worst, std::abs(reliability_from_domination(table, approx) -
                                         testkit::brute_reliability<double>(r.max_states, dpmfs, on)));
      }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max |diff| %.2e", worst);
    detail = buf;
    return worst <= 1e-12;
  });

  criterion(12, "matroids: beta >= 0, rank, sign relation", 0, [](std::string& detail) {
    std::mt19937_64 rng(12);
    std::vector<std::pair<Matroid, EdgeList>> suite;
    for (int i = 0; i < 40; ++i) {
      const std::size_t v = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
      const int count = std::uniform_int_distribution<int>(1, 10)(rng);
      std::uniform_int_distribution<std::size_t> pick(0, v - 1);
      EdgeList edges;
      for (int e = 0; e < count; ++e) edges.emplace_back(pick(rng), pick(rng));
      suite.emplace_back(graphic_matroid(v, edges), edges);
    }
    for (std::size_t n = 1; n <= 10; ++n)
      for (std::size_t r = 0; r <= n; r += 1 + n / 4) suite.emplace_back(uniform_matroid(n, r), EdgeList{});
    long links = 0;
    for (const auto& [m, edges] : suite) {
      if (!validate_circuits(m).valid()) return false;
      for (ElementSet a = 0; a <= m.ground(); ++a) {
        if (rank(m, a) != rank(m, a, RankMethod::exhaustive)) return false;
        if (crapo_beta(m, a) < 0) return false;
      }
      for (std::size_t x = 0; x < m.ground_size(); ++x) {
        if (m.independent(ElementSet{1} << x) == false) continue;
        const MatroidSystemLink link{m, x};
        const auto phi = link_structure(link);
        if (subset_delta(phi, phi.full_mask()) != domination_from_beta(link, link.component_set()))
          return false;
        ++links;
      }
    }
    detail = std::to_string(suite.size()) + " matroids, " + std::to_string(links) + " systems";
    return true;
  });

  std::printf("%s: %d failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
