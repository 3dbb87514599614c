#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "domikit/errors.hpp"
#include "domikit/numeric.hpp"
#include "domikit/poset.hpp"
#include "domikit/system.hpp"

namespace domikit {

/// Tolerance on pmf totals in floating-point mode.
inline constexpr double kPmfTolerance = 1e-12;

template <class Scalar>
Scalar to_scalar(const Integer& value) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return value.template convert_to<Scalar>();
  } else {
    return Scalar(value);
  }
}

/// Independent component distributions: pmfs[i][s] = P(Y_i = s).
template <class Scalar>
class ComponentDistribution {
 public:
  /// Throws DistributionError on negative masses or totals != 1 (within
  /// kPmfTolerance for floating point, exactly otherwise).
  explicit ComponentDistribution(std::vector<std::vector<Scalar>> pmfs)
      : pmfs_(std::move(pmfs)) {
    for (std::size_t i = 0; i < pmfs_.size(); ++i) {
      const auto& pmf = pmfs_[i];
      if (pmf.empty()) {
        throw DistributionError("component " + std::to_string(i) + ": empty pmf");
      }
      Scalar total{0};
      for (const auto& p : pmf) {
        if (p < Scalar{0}) {
          throw DistributionError("component " + std::to_string(i) + ": negative mass");
        }
        total += p;
      }
      bool ok = false;
      if constexpr (std::is_floating_point_v<Scalar>) {
        ok = std::abs(total - Scalar{1}) <= kPmfTolerance;
      } else {
        ok = total == Scalar{1};
      }
      if (!ok) {
        throw DistributionError("component " + std::to_string(i) + ": masses do not sum to 1");
      }
    }
    survival_.reserve(pmfs_.size());
    for (const auto& pmf : pmfs_) {
      std::vector<Scalar> tail(pmf.size() + 1, Scalar{0});
      for (std::size_t s = pmf.size(); s > 0; --s) tail[s - 1] = tail[s] + pmf[s - 1];
      tail[0] = Scalar{1};
      survival_.push_back(std::move(tail));
    }
  }

  std::size_t size() const noexcept { return pmfs_.size(); }
  const std::vector<std::vector<Scalar>>& pmfs() const noexcept { return pmfs_; }

  const Scalar& probability(std::size_t i, int state) const { return pmfs_[i][state]; }

  /// P(Y_i >= state).
  const Scalar& survival(std::size_t i, int state) const { return survival_[i][state]; }

  /// Throws DistributionError unless there is one pmf of length m_i + 1 per
  /// component.
  void check_against(const StateSpace& space) const {
    if (pmfs_.size() != space.n()) {
      throw DistributionError("expected " + std::to_string(space.n()) + " pmfs, got " +
                              std::to_string(pmfs_.size()));
    }
    for (std::size_t i = 0; i < space.n(); ++i) {
      if (pmfs_[i].size() != static_cast<std::size_t>(space.max_state(i)) + 1) {
        throw DistributionError("component " + std::to_string(i) + ": pmf length " +
                                std::to_string(pmfs_[i].size()) + ", expected " +
                                std::to_string(space.max_state(i) + 1));
      }
    }
  }

 private:
  std::vector<std::vector<Scalar>> pmfs_;
  std::vector<std::vector<Scalar>> survival_;
};

/// P(phi_k(Y) = 1) = sum_x delta_k(x) prod_i P(Y_i >= x_i).
template <class Scalar>
Scalar reliability_from_domination(const DominationTable& d,
                                   const ComponentDistribution<Scalar>& dist) {
  Scalar total{0};
  for (const auto& [x, delta] : d) {
    if (delta == 0) continue;
    if (x.size() != dist.size()) {
      throw DistributionError("table dimension " + std::to_string(x.size()) +
                              " does not match " + std::to_string(dist.size()) + " pmfs");
    }
    Scalar term{1};
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < 0 || static_cast<std::size_t>(x[i]) >= dist.pmfs()[i].size()) {
        throw DistributionError("state " + to_string(x) + " outside the pmf support");
      }
      term *= dist.survival(i, x[i]);
    }
    total += to_scalar<Scalar>(delta) * term;
  }
  return total;
}

/// E[phi_k(Y)] by summing over the whole state space.
template <class Scalar>
Scalar reliability_enumerate(const LevelSystem& ls, const ComponentDistribution<Scalar>& dist,
                             std::uint64_t guard = kDefaultEnumerationGuard) {
  require_enumerable(ls.space(), guard, "reliability_enumerate");
  dist.check_against(ls.space());
  Scalar total{0};
  for_each_state(ls.space(), [&](const StateVector& x) {
    if (!ls.evaluate_unchecked(x.span())) return;
    Scalar p{1};
    for (std::size_t i = 0; i < x.size(); ++i) p *= dist.probability(i, x[i]);
    total += p;
  });
  return total;
}

}  // namespace domikit
