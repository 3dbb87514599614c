#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <numeric>

#include "domikit/binary_structure.hpp"
#include "domikit/errors.hpp"
#include "domikit/matroid.hpp"
#include "support.hpp"

using namespace domikit;

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

int forest_rank(std::size_t vertices, const EdgeList& edges, ElementSet a) {
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int r = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!(a >> i & 1)) continue;
    const auto u = find(edges[i].first), v = find(edges[i].second);
    if (u != v) {
      parent[u] = v;
      ++r;
    }
  }
  return r;
}

EdgeList random_graph(std::mt19937_64& rng, std::size_t& vertices) {
  vertices = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
  const int count = std::uniform_int_distribution<int>(1, 10)(rng);
  EdgeList edges;
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  for (int i = 0; i < count; ++i) edges.emplace_back(pick(rng), pick(rng));
  return edges;
}

Integer subset_delta(const BinaryStructure& phi, ComponentMask a) {
  Integer total = 0;
  for (ComponentMask b = a;; b = (b - 1) & a) {
    if (phi(b)) total += (std::popcount(a ^ b) % 2) ? -1 : 1;
    if (b == 0) break;
  }
  return total;
}

}  // namespace

TEST_CASE("uniform matroid basics") {
  const auto u = uniform_matroid(4, 2);
  CHECK(u.circuits().size() == 4);
  CHECK(validate_circuits(u).valid());
  CHECK(rank(u, 0b1111) == 2);
  CHECK(rank(u, 0b0001) == 1);
  CHECK(u.independent(0b0011));
  CHECK_FALSE(u.independent(0b0111));
  CHECK(crapo_number(uniform_matroid(3, 2)) == 1);
}

TEST_CASE("circuit elimination is checked") {
  const Matroid bad(3, {0b011, 0b110});
  const auto v = validate_circuits(bad);
  CHECK(v.status == CircuitValidation::Status::invalid);
  CHECK_FALSE(v.message.empty());
  CHECK_THROWS_AS(Matroid(2, {0b100}), DomainError);
}

TEST_CASE("graphic matroid of K4") {
  const EdgeList k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const auto m = graphic_matroid(4, k4);
  CHECK(m.circuits().size() == 7);
  CHECK(validate_circuits(m).valid());
  CHECK(rank(m, m.ground()) == 3);
  CHECK(crapo_number(m) == 2);
}

TEST_CASE("rank and beta on random graphs and uniform matroids") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    std::size_t vertices = 0;
    const auto edges = random_graph(rng, vertices);
    const auto m = graphic_matroid(vertices, edges);
    CHECK(validate_circuits(m).valid());
    for (ElementSet a = 0; a <= m.ground(); ++a) {
      CHECK(rank(m, a) == forest_rank(vertices, edges, a));
      CHECK(rank(m, a, RankMethod::exhaustive) == rank(m, a));
      CHECK(crapo_beta(m, a) >= 0);
    }
  }
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t r = 0; r <= n; ++r) {
      const auto u = uniform_matroid(n, r);
      for (ElementSet a = 0; a <= u.ground(); ++a) {
        CHECK(rank(u, a) == std::min<int>(std::popcount(a), r));
        CHECK(crapo_beta(u, a) >= 0);
      }
    }
}

TEST_CASE("matroid systems follow the beta sign relation") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 30; ++round) {
    std::size_t vertices = 0;
    const auto edges = random_graph(rng, vertices);
    const auto m = graphic_matroid(vertices, edges);
    for (std::size_t x = 0; x < edges.size(); ++x) {
      const MatroidSystemLink link{m, x};
      if (edges[x].first == edges[x].second) {
        CHECK_THROWS_AS(matroid_system_paths(link), DegenerateSystemError);
        continue;
      }
      const auto phi = link_structure(link);
      const ComponentMask full = phi.full_mask();
      for (ComponentMask z = 0; z <= full; ++z) {
        ElementSet a = 0;
        for (std::size_t i = 0; i < phi.size(); ++i)
          if (z >> i & 1) a |= ElementSet{1} << phi.components()[i];
        CHECK(phi(z) == (structure_from_rank(link, a) == 1));
        CHECK(subset_delta(phi, z) == domination_from_beta(link, a));
      }
      const Integer d = signed_domination(phi);
      CHECK(d == domination_from_beta(link, link.component_set()));
      CHECK(domination_invariant_recursion(phi) == abs(d));
    }
  }
}

TEST_CASE("k out of n systems") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      std::vector<std::size_t> comps(n);
      std::iota(comps.begin(), comps.end(), 0);
      const BinaryStructure phi(comps, [k](ComponentMask z) { return std::popcount(z) >= k; });
      const Integer expected = ((n - k) % 2 ? -1 : 1) * testkit::binomial(n - 1, k - 1);
      CHECK(signed_domination(phi) == expected);
      CHECK(threshold_domination(n, 1, k) == expected);
      CHECK(domination_invariant_recursion(phi) == abs(expected));
    }
}
