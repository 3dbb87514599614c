#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "domikit/network.hpp"
#include "domikit/numeric.hpp"
#include "domikit/reliability.hpp"
#include "domikit/system.hpp"

namespace domikit {

inline constexpr int kDocumentFormatVersion = 1;

struct ComponentSpec {
  std::string name;
  int max_state = 1;
  /// P(Y_i = s) for s = 0..max_state, exact.
  std::optional<std::vector<Rational>> pmf;

  friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;
};

/// Structure values in lexicographic state order (last component fastest).
struct TablePayload {
  std::vector<int> values;
  friend bool operator==(const TablePayload&, const TablePayload&) = default;
};

/// phi(x) = sum_i w_i x_i; empty weights mean all ones.
struct SumPayload {
  std::vector<int> weights;
  friend bool operator==(const SumPayload&, const SumPayload&) = default;
};

/// levels[k-1] lists the minimal k-level path vectors.
struct PathVectorPayload {
  std::vector<std::vector<StateVector>> levels;
  friend bool operator==(const PathVectorPayload&, const PathVectorPayload&) = default;
};

struct NetworkEdgeSpec {
  int id = 0;
  std::string from;
  std::string to;
  bool directed = false;
  int max_capacity = 1;
  friend bool operator==(const NetworkEdgeSpec&, const NetworkEdgeSpec&) = default;
};

struct NetworkPayload {
  std::vector<std::string> nodes;
  std::vector<NetworkEdgeSpec> edges;
  std::string source;
  std::string sink;
  friend bool operator==(const NetworkPayload&, const NetworkPayload&) = default;
};

using StructurePayload = std::variant<TablePayload, SumPayload, NetworkPayload, PathVectorPayload>;

/// Parsed input document. For network documents the component list mirrors
/// the edges (component i is edge id i + 1).
struct SystemDocument {
  int format_version = kDocumentFormatVersion;
  std::vector<ComponentSpec> components;
  std::optional<int> system_max;
  StructurePayload structure;

  StructureKind kind() const noexcept;
  std::vector<int> max_states() const;
  bool has_distributions() const noexcept;

  /// Builds the system; throws ValidationError / DomainError on bad payloads.
  MultistateSystem system() const;
  /// Only for network documents.
  std::optional<FlowNetwork> network() const;

  /// Throws UsageError when some component has no pmf.
  ComponentDistribution<double> distribution() const;
  ComponentDistribution<Rational> exact_distribution() const;

  friend bool operator==(const SystemDocument&, const SystemDocument&) = default;
};

/// Parses and validates a JSON document. Schema violations raise ParseError
/// with a JSON pointer to the field; semantic problems (non-monotone table,
/// invalid pmf, malformed network) raise ValidationError.
SystemDocument parse_system(std::string_view text);

/// Canonical JSON form; pmf entries are written as exact "p/q" strings.
std::string serialize_system(const SystemDocument& doc);

/// "3/8", "0.375", "2" or "1e-3" style exact parse.
Rational parse_rational(std::string_view text);
/// Exact binary value of a double.
Rational rational_from_double(double value);
std::string to_string(const Rational& value);

}  // namespace domikit
