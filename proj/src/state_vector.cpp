#include "domikit/state_vector.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "domikit/errors.hpp"

namespace domikit {

namespace {

void require_same_length(const StateVector& x, const StateVector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("state vectors of length " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()));
  }
}

}  // namespace

bool StateVector::is_zero() const noexcept {
  return std::all_of(states_.begin(), states_.end(), [](int s) { return s == 0; });
}

std::size_t StateVectorHash::operator()(const StateVector& v) const noexcept {
  std::size_t h = v.size();
  for (int s : v) h ^= std::hash<int>{}(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

StateVector join(const StateVector& x, const StateVector& y) {
  require_same_length(x, y);
  StateVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::max(x[i], y[i]);
  return out;
}

Order compare(const StateVector& x, const StateVector& y) {
  require_same_length(x, y);
  bool some_less = false;
  bool some_greater = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) some_less = true;
    if (x[i] > y[i]) some_greater = true;
  }
  if (some_less && some_greater) return Order::incomparable;
  if (some_less) return Order::less;
  if (some_greater) return Order::greater;
  return Order::equal;
}

bool leq(const StateVector& x, const StateVector& y) {
  require_same_length(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

std::string to_string(const StateVector& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string to_string(Order order) {
  switch (order) {
    case Order::less: return "less";
    case Order::greater: return "greater";
    case Order::equal: return "equal";
    case Order::incomparable: return "incomparable";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const StateVector& x) {
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ',';
    os << x[i];
  }
  return os << ')';
}

}  // namespace domikit
