#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "domikit/errors.hpp"
#include "domikit/lattice.hpp"
#include "domikit/model.hpp"
#include "domikit/system.hpp"
#include "support.hpp"

using namespace domikit;

TEST_CASE("table systems are validated") {
  CHECK_THROWS_AS(make_table_system({1, 1}, {0, 1, 1}), DimensionError);
  CHECK_THROWS_AS(make_table_system({1, 1}, {0, 1, 1, 0}), ValidationError);
  CHECK_THROWS_AS(make_table_system({1, 1}, {0, 0, 0, 3}, 2), ValidationError);
  const auto s = make_table_system({1, 1}, {0, 0, 1, 2});
  CHECK(s.space().system_max() == 2);
  CHECK(s.evaluate(StateVector{1, 0}) == 1);
  CHECK_THROWS(s.evaluate(StateVector{2, 0}));
  CHECK(check_monotone(s));
  CHECK_THROWS_AS(LevelSystem(s, 0), DomainError);
  CHECK_THROWS_AS(LevelSystem(s, 3), DomainError);
}

TEST_CASE("sum system of four binary-pair components") {
  const auto s = make_sum_system({2, 2, 2, 2});
  CHECK(s.space().system_max() == 8);
  CHECK(s.space().cardinality() == 81);
  const LevelSystem ls(s, 4);
  const auto p = minimal_path_vectors(ls);
  CHECK(p.size() == 19);
  CHECK(minimal_path_vectors(restrict_component(ls, 3, 2)).size() == 6);
  CHECK(minimal_path_vectors(restrict_component(ls, 3, 1)).size() == 7);
}

TEST_CASE("path vectors match lattice scan on random systems") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 80; ++round) {
    const auto r = testkit::random_system(rng);
    const auto s = r.build();
    for (int k = 1; k <= s.space().system_max(); ++k) {
      const LevelSystem ls(s, k);
      auto on = [&](const StateVector& x) { return r.phi(x) >= k; };
      const auto p = minimal_path_vectors(ls);
      CHECK(p.vectors() == testkit::brute_paths(r.max_states, on));
      for (const auto& y : testkit::all_states(r.max_states)) {
        CHECK(evaluate_from_paths(p, y) == (on(y) ? 1 : 0));
        if (!p.empty()) CHECK(inclusion_exclusion_eval(p, y) == (on(y) ? 1 : 0));
      }
    }
  }
}

TEST_CASE("path vector systems") {
  const auto s = make_path_vector_system(
      {2, 2}, {GeneratorSet({{1, 0}, {0, 1}}), GeneratorSet({{2, 1}, {1, 2}})});
  CHECK(s.space().system_max() == 2);
  CHECK(s.evaluate(StateVector{1, 1}) == 1);
  CHECK(s.evaluate(StateVector{2, 1}) == 2);
  CHECK_THROWS_AS(make_path_vector_system({2, 2}, {GeneratorSet({{2, 1}}), GeneratorSet({{1, 0}})}),
                  ValidationError);
}

TEST_CASE("relevance report") {
  // second component tops out at 1 in every path vector
  const auto s = make_path_vector_system({2, 2}, {GeneratorSet({{2, 0}, {1, 1}})});
  const auto report = relevance_report(LevelSystem(s, 1));
  CHECK(report.components[0].strongly_relevant);
  CHECK_FALSE(report.components[1].strongly_relevant);
  CHECK(report.components[1].relevant_states == std::set<int>{1});
  CHECK_FALSE(report.strongly_coherent);
  CHECK(signed_domination(LevelSystem(s, 1)) == 0);
}

TEST_CASE("hilbert numerator sums to the top value") {
  const auto s = make_sum_system({2, 1, 3});
  for (int k = 1; k <= 6; ++k) {
    const LevelSystem ls(s, k);
    const auto h = hilbert_numerator(level_domination_table(ls));
    CHECK(h(std::vector<Integer>{1, 1, 1}) == 1);
    CHECK(h(std::vector<Integer>{0, 0, 0}) == 0);
  }
}

TEST_CASE("restriction freezes one component") {
  const auto s = make_sum_system({2, 3, 1}, {1, 2, 1});
  const auto r = restrict_component(s, 1, 2);
  CHECK(r.n() == 2);
  CHECK(r.evaluate(StateVector{1, 1}) == 6);
  const auto t = restrict_component(make_table_system({1, 1}, {0, 0, 1, 2}), 0, 1);
  CHECK(t.evaluate(StateVector{0}) == 1);
  CHECK(t.evaluate(StateVector{1}) == 2);
  CHECK_THROWS(restrict_component(t, 0, 0));
}
