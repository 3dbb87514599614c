#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domikit/binary_structure.hpp"
#include "domikit/numeric.hpp"
#include "domikit/system.hpp"

namespace domikit {

inline constexpr std::size_t kDefaultCutGuard = 25;

struct FlowEdge {
  /// 1-based; edge id i is system component i - 1.
  int id = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  bool directed = false;
  int max_capacity = 1;
};

/// Two-terminal network whose edges are the components of a flow system.
class FlowNetwork {
 public:
  /// Edges may be given in any order; ids must be exactly 1..|E|. Throws
  /// GraphError on malformed input.
  FlowNetwork(std::vector<std::string> nodes, std::vector<FlowEdge> edges, std::size_t source,
              std::size_t sink);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  /// Sorted by id.
  const std::vector<FlowEdge>& edges() const noexcept { return edges_; }
  std::size_t source() const noexcept { return source_; }
  std::size_t sink() const noexcept { return sink_; }

  std::vector<int> capacities() const;
  bool all_directed() const noexcept;
  bool any_directed() const noexcept;
  std::optional<std::size_t> node_index(const std::string& name) const;

 private:
  std::vector<std::string> nodes_;
  std::vector<FlowEdge> edges_;
  std::size_t source_;
  std::size_t sink_;
};

/// Sorted edge ids.
using CutSet = std::vector<int>;

/// Maximum S-T flow with edge capacities x (edge id i uses x[i-1]).
int max_flow(const FlowNetwork& net, const StateVector& x);

/// Every minimal S-T edge cut, in lexicographic order of the sorted id lists.
std::vector<CutSet> minimal_cut_sets(const FlowNetwork& net, std::size_t guard = kDefaultCutGuard);

/// min over the given cuts of the summed capacities.
int structure_min_cut(const std::vector<CutSet>& cuts, const StateVector& x);
int structure_min_cut(const FlowNetwork& net, const StateVector& x,
                      std::size_t guard = kDefaultCutGuard);

/// S reaches T using only edges whose bit is set in `alive`.
bool connects(const FlowNetwork& net, ComponentMask alive);

/// Edges lying on some simple S-T path, as a mask over components.
ComponentMask relevant_edges(const FlowNetwork& net);

/// Edge ids of a directed cycle among the edges of `within`, if any.
std::optional<std::vector<int>> find_directed_cycle(const FlowNetwork& net, ComponentMask within);

class NetworkStructure final : public Structure {
 public:
  explicit NetworkStructure(FlowNetwork net) : net_(std::move(net)) {}

  StructureKind kind() const noexcept override { return StructureKind::network; }
  int evaluate(std::span<const int> x) const override;
  const FlowNetwork& network() const noexcept { return net_; }

 private:
  FlowNetwork net_;
};

/// Flow system with M = max flow at full capacity. Throws
/// DegenerateSystemError if S and T are disconnected at full capacity.
MultistateSystem network_system(const FlowNetwork& net);

struct AssociatedNetwork {
  BinaryStructure structure;
  /// k - sum_{i in K_r} (m_i - 1) for each minimal cut, in cut order.
  std::vector<int> cut_thresholds;
  /// Every threshold equals 1, so psi_k is S-T connectivity of the graph.
  bool reduces_to_connectivity = false;
};

/// psi_k(z) = phi_k(m - 1 + z). Throws DomainError unless 1 <= k <= M.
AssociatedNetwork associated_binary_network(const FlowNetwork& net, int k,
                                            std::size_t guard = kDefaultCutGuard);

/// Binary S-T connectivity structure of the graph.
BinaryStructure connectivity_structure(const FlowNetwork& net);

enum class CoherenceScope { full_graph, relevant_subgraph };

struct DirectedDomination {
  Integer value;
  bool coherent = false;
  bool cyclic = false;
  std::vector<int> cycle;
  std::vector<int> irrelevant_edges;
  /// |E| and rho(E + x) = (nodes touched) - 1 of the judged edge set.
  std::size_t edge_count = 0;
  std::size_t rank = 0;
};

/// Signed domination of the binary directed S-T connectivity system: 0 for
/// cyclic graphs, (-1)^{|E| - (v-1)} for coherent acyclic ones. Non-coherent
/// systems give 0, or CoherenceError when `require_coherent` is set. With
/// relevant_subgraph scope, irrelevant edges are deleted first. Throws
/// DomainError if any edge is undirected.
DirectedDomination directed_network_domination(
    const FlowNetwork& net, bool require_coherent = false,
    CoherenceScope scope = CoherenceScope::full_graph);

}  // namespace domikit
