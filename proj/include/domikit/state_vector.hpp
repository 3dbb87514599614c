#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace domikit {

/// A point of the component state lattice S_1 x ... x S_n. Ordered
/// lexicographically for containers and output; the componentwise partial
/// order is exposed through compare()/leq().
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t n, int fill = 0) : states_(n, fill) {}
  StateVector(std::initializer_list<int> states) : states_(states) {}
  explicit StateVector(std::vector<int> states) : states_(std::move(states)) {}
  explicit StateVector(std::span<const int> states)
      : states_(states.begin(), states.end()) {}

  std::size_t size() const noexcept { return states_.size(); }
  bool empty() const noexcept { return states_.empty(); }

  int operator[](std::size_t i) const { return states_[i]; }
  int& operator[](std::size_t i) { return states_[i]; }

  auto begin() const noexcept { return states_.begin(); }
  auto end() const noexcept { return states_.end(); }
  auto begin() noexcept { return states_.begin(); }
  auto end() noexcept { return states_.end(); }

  std::span<const int> span() const noexcept { return states_; }
  const std::vector<int>& values() const noexcept { return states_; }

  bool is_zero() const noexcept;

  friend bool operator==(const StateVector&, const StateVector&) = default;
  friend auto operator<=>(const StateVector&, const StateVector&) = default;

 private:
  std::vector<int> states_;
};

struct StateVectorHash {
  std::size_t operator()(const StateVector& v) const noexcept;
};

enum class Order { less, greater, equal, incomparable };

/// Componentwise maximum.
StateVector join(const StateVector& x, const StateVector& y);

/// Position of x relative to y in the componentwise order: `less` means
/// x < y.
Order compare(const StateVector& x, const StateVector& y);

/// x <= y componentwise.
bool leq(const StateVector& x, const StateVector& y);

/// "(2,1,1,0)".
std::string to_string(const StateVector& x);
std::string to_string(Order order);

std::ostream& operator<<(std::ostream& os, const StateVector& x);

}  // namespace domikit
