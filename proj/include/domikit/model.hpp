#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "domikit/numeric.hpp"
#include "domikit/poset.hpp"
#include "domikit/system.hpp"

namespace domikit {

/// Minimal k-level path vectors, lexicographic. A vector is kept when
/// phi_k(x) = 1 and lowering any single positive coordinate drops phi_k to 0.
GeneratorSet minimal_path_vectors(const LevelSystem& ls,
                                  std::uint64_t guard = kDefaultEnumerationGuard);

/// 1 iff y dominates some vector of p.
int evaluate_from_paths(const GeneratorSet& p, const StateVector& y);

/// Alternating sum over all non-empty subsets S of p of I(y >= join(S)).
int inclusion_exclusion_eval(const GeneratorSet& p, const StateVector& y,
                             std::size_t guard = kDefaultFormationGuard);

struct ComponentRelevance {
  /// States r > 0 attained by component i in some minimal path vector.
  std::set<int> relevant_states;
  bool strongly_relevant = false;
  bool irrelevant = true;
};

struct RelevanceReport {
  std::vector<ComponentRelevance> components;
  bool strongly_coherent = false;
};

RelevanceReport relevance_report(const LevelSystem& ls,
                                 std::uint64_t guard = kDefaultEnumerationGuard);

/// Same classification from an already computed path vector family.
RelevanceReport relevance_report(const StateSpace& space, const GeneratorSet& paths);

/// delta_k over cl(P_k) computed from formations of the minimal path vectors.
DominationTable level_domination_table(const LevelSystem& ls,
                                       std::size_t formation_guard = kDefaultFormationGuard,
                                       std::uint64_t guard = kDefaultEnumerationGuard);

struct Monomial {
  StateVector exponents;
  Integer coefficient;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// H_k(y) = sum_x delta_k(x) y^x, one term per non-zero table entry.
struct HilbertNumerator {
  std::vector<Monomial> terms;

  /// Evaluates at numeric y with the convention y_i^0 = 1.
  template <class Scalar>
  Scalar operator()(const std::vector<Scalar>& y) const {
    Scalar total{0};
    for (const auto& term : terms) {
      Scalar product{1};
      for (std::size_t i = 0; i < y.size(); ++i) {
        for (int e = 0; e < term.exponents[i]; ++e) product *= y[i];
      }
      total += Scalar(term.coefficient) * product;
    }
    return total;
  }
};

HilbertNumerator hilbert_numerator(const DominationTable& d);

}  // namespace domikit
