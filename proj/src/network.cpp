#include "domikit/network.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <set>
#include <string>

#include "domikit/errors.hpp"
#include "domikit/lattice.hpp"

namespace domikit {

namespace {

constexpr ComponentMask bit(std::size_t i) { return ComponentMask{1} << i; }

ComponentMask all_edges(const FlowNetwork& net) {
  return net.edge_count() == 0 ? 0 : (~ComponentMask{0} >> (64 - net.edge_count()));
}

// Edmonds-Karp on a residual graph; an undirected edge is a pair of opposed
// arcs that are each other's residual.
class Residual {
 public:
  explicit Residual(std::size_t nodes) : adjacency_(nodes) {}

  void add(std::size_t from, std::size_t to, int forward, int backward) {
    adjacency_[from].push_back(arcs_.size());
    arcs_.push_back({to, forward});
    adjacency_[to].push_back(arcs_.size());
    arcs_.push_back({from, backward});
  }

  int max_flow(std::size_t source, std::size_t sink) {
    int total = 0;
    std::vector<std::size_t> via(adjacency_.size());
    std::vector<bool> seen(adjacency_.size());
    while (true) {
      std::fill(seen.begin(), seen.end(), false);
      std::queue<std::size_t> frontier;
      frontier.push(source);
      seen[source] = true;
      while (!frontier.empty() && !seen[sink]) {
        const std::size_t u = frontier.front();
        frontier.pop();
        for (std::size_t a : adjacency_[u]) {
          const Arc& arc = arcs_[a];
          if (arc.capacity > 0 && !seen[arc.to]) {
            seen[arc.to] = true;
            via[arc.to] = a;
            frontier.push(arc.to);
          }
        }
      }
      if (!seen[sink]) return total;
      int bottleneck = std::numeric_limits<int>::max();
      for (std::size_t v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
        bottleneck = std::min(bottleneck, arcs_[via[v]].capacity);
      }
      for (std::size_t v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].capacity -= bottleneck;
        arcs_[via[v] ^ 1].capacity += bottleneck;
      }
      total += bottleneck;
    }
  }

 private:
  struct Arc {
    std::size_t to;
    int capacity;
  };
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<Arc> arcs_;
};

int max_flow_unchecked(const FlowNetwork& net, std::span<const int> x) {
  Residual residual(net.node_count());
  for (std::size_t i = 0; i < net.edge_count(); ++i) {
    const FlowEdge& e = net.edges()[i];
    if (e.from == e.to || x[i] == 0) continue;
    residual.add(e.from, e.to, x[i], e.directed ? 0 : x[i]);
  }
  return residual.max_flow(net.source(), net.sink());
}

// Node indices reachable in one step from `u` over edges in `alive`, with the
// edge index used.
template <class Visitor>
void for_each_step(const FlowNetwork& net, std::size_t u, ComponentMask alive, Visitor&& visit) {
  for (std::size_t i = 0; i < net.edge_count(); ++i) {
    if (!(alive & bit(i))) continue;
    const FlowEdge& e = net.edges()[i];
    if (e.from == u) visit(e.to, i);
    if (!e.directed && e.to == u) visit(e.from, i);
  }
}

}  // namespace

FlowNetwork::FlowNetwork(std::vector<std::string> nodes, std::vector<FlowEdge> edges,
                         std::size_t source, std::size_t sink)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), source_(source), sink_(sink) {
  if (nodes_.size() < 2) throw GraphError("a network needs at least two nodes");
  if (std::set<std::string>(nodes_.begin(), nodes_.end()).size() != nodes_.size()) {
    throw GraphError("duplicate node names");
  }
  if (source_ >= nodes_.size() || sink_ >= nodes_.size()) {
    throw GraphError("source or sink outside the node list");
  }
  if (source_ == sink_) throw GraphError("source and sink coincide");
  if (edges_.empty()) throw GraphError("a network needs at least one edge");
  if (edges_.size() > 63) throw GraphError("networks are limited to 63 edges");
  std::sort(edges_.begin(), edges_.end(),
            [](const FlowEdge& a, const FlowEdge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const FlowEdge& e = edges_[i];
    if (e.id != static_cast<int>(i) + 1) {
      throw GraphError("edge ids must be exactly 1.." + std::to_string(edges_.size()));
    }
    if (e.from >= nodes_.size() || e.to >= nodes_.size()) {
      throw GraphError("edge " + std::to_string(e.id) + " has an endpoint outside the node list");
    }
    if (e.max_capacity < 1) {
      throw GraphError("edge " + std::to_string(e.id) + " has capacity < 1");
    }
  }
}

std::vector<int> FlowNetwork::capacities() const {
  std::vector<int> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.max_capacity);
  return out;
}

bool FlowNetwork::all_directed() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const FlowEdge& e) { return e.directed; });
}

bool FlowNetwork::any_directed() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const FlowEdge& e) { return e.directed; });
}

std::optional<std::size_t> FlowNetwork::node_index(const std::string& name) const {
  auto it = std::find(nodes_.begin(), nodes_.end(), name);
  if (it == nodes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

int max_flow(const FlowNetwork& net, const StateVector& x) {
  StateSpace(net.capacities(), 1).check(x);
  return max_flow_unchecked(net, x.span());
}

bool connects(const FlowNetwork& net, ComponentMask alive) {
  std::vector<bool> seen(net.node_count());
  std::vector<std::size_t> stack{net.source()};
  seen[net.source()] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    if (u == net.sink()) return true;
    for_each_step(net, u, alive, [&](std::size_t v, std::size_t) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    });
  }
  return false;
}

std::vector<CutSet> minimal_cut_sets(const FlowNetwork& net, std::size_t guard) {
  const std::size_t count = net.edge_count();
  if (count > guard) {
    throw ComplexityGuardError("minimal_cut_sets: " + std::to_string(count) +
                               " edges exceed the cut enumeration guard of " +
                               std::to_string(guard));
  }
  const ComponentMask all = all_edges(net);
  std::vector<ComponentMask> found;
  if (!connects(net, all)) found.push_back(0);
  for (std::size_t size = 1; size <= count && !(found.size() == 1 && found[0] == 0); ++size) {
    // Gosper's hack over the masks with `size` bits.
    for (ComponentMask k = (ComponentMask{1} << size) - 1; k <= all && k != 0;) {
      const bool contains_smaller = std::any_of(
          found.begin(), found.end(), [k](ComponentMask c) { return (c & ~k) == 0; });
      if (!contains_smaller && !connects(net, all & ~k)) found.push_back(k);
      const ComponentMask low = k & (~k + 1);
      const ComponentMask ripple = k + low;
      if (ripple == 0) break;
      k = (((ripple ^ k) >> 2) / low) | ripple;
    }
  }
  std::vector<CutSet> cuts;
  for (ComponentMask c : found) {
    CutSet cut;
    for (ComponentMask rest = c; rest; rest &= rest - 1) {
      cut.push_back(std::countr_zero(rest) + 1);
    }
    cuts.push_back(std::move(cut));
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

int structure_min_cut(const std::vector<CutSet>& cuts, const StateVector& x) {
  int best = std::numeric_limits<int>::max();
  for (const auto& cut : cuts) {
    int total = 0;
    for (int id : cut) {
      if (id < 1 || static_cast<std::size_t>(id) > x.size()) {
        throw DimensionError("cut references edge " + std::to_string(id) + " outside the vector");
      }
      total += x[static_cast<std::size_t>(id) - 1];
    }
    best = std::min(best, total);
  }
  return cuts.empty() ? 0 : best;
}

int structure_min_cut(const FlowNetwork& net, const StateVector& x, std::size_t guard) {
  StateSpace(net.capacities(), 1).check(x);
  return structure_min_cut(minimal_cut_sets(net, guard), x);
}

ComponentMask relevant_edges(const FlowNetwork& net) {
  ComponentMask relevant = 0;
  const ComponentMask all = all_edges(net);
  std::vector<bool> on_path(net.node_count());
  ComponentMask used = 0;
  auto walk = [&](auto&& self, std::size_t u) -> void {
    if (u == net.sink()) {
      relevant |= used;
      return;
    }
    on_path[u] = true;
    for_each_step(net, u, all, [&](std::size_t v, std::size_t edge) {
      if (on_path[v]) return;
      used |= bit(edge);
      self(self, v);
      used &= ~bit(edge);
    });
    on_path[u] = false;
  };
  walk(walk, net.source());
  return relevant;
}

std::optional<std::vector<int>> find_directed_cycle(const FlowNetwork& net,
                                                    ComponentMask within) {
  enum class Mark { fresh, active, done };
  std::vector<Mark> mark(net.node_count(), Mark::fresh);
  // path_edges[j] leads from path_nodes[j] to path_nodes[j + 1].
  std::vector<std::size_t> path_nodes;
  std::vector<std::size_t> path_edges;
  std::optional<std::vector<int>> cycle;

  auto visit = [&](auto&& self, std::size_t u) -> void {
    mark[u] = Mark::active;
    path_nodes.push_back(u);
    for (std::size_t i = 0; i < net.edge_count() && !cycle; ++i) {
      const FlowEdge& e = net.edges()[i];
      if (!(within & bit(i)) || !e.directed || e.from != u) continue;
      if (mark[e.to] == Mark::active) {
        const auto start = static_cast<std::size_t>(
            std::find(path_nodes.begin(), path_nodes.end(), e.to) - path_nodes.begin());
        std::vector<int> ids{e.id};
        for (std::size_t j = start; j < path_edges.size(); ++j) {
          ids.push_back(net.edges()[path_edges[j]].id);
        }
        std::sort(ids.begin(), ids.end());
        cycle = std::move(ids);
      } else if (mark[e.to] == Mark::fresh) {
        path_edges.push_back(i);
        self(self, e.to);
        path_edges.pop_back();
      }
    }
    path_nodes.pop_back();
    mark[u] = Mark::done;
  };
  for (std::size_t u = 0; u < net.node_count() && !cycle; ++u) {
    if (mark[u] == Mark::fresh) visit(visit, u);
  }
  return cycle;
}

int NetworkStructure::evaluate(std::span<const int> x) const {
  return max_flow_unchecked(net_, x);
}

MultistateSystem network_system(const FlowNetwork& net) {
  const std::vector<int> capacities = net.capacities();
  const int top = max_flow_unchecked(net, capacities);
  if (top == 0) {
    throw DegenerateSystemError("source and sink are disconnected at full capacity (M = 0)");
  }
  return MultistateSystem(StateSpace(capacities, top), std::make_shared<NetworkStructure>(net));
}

AssociatedNetwork associated_binary_network(const FlowNetwork& net, int k, std::size_t guard) {
  const LevelSystem ls(network_system(net), k);
  AssociatedNetwork result{associated_binary(ls), {}, true};
  for (const auto& cut : minimal_cut_sets(net, guard)) {
    int threshold = k;
    for (int id : cut) threshold -= net.edges()[static_cast<std::size_t>(id) - 1].max_capacity - 1;
    result.cut_thresholds.push_back(threshold);
    if (threshold != 1) result.reduces_to_connectivity = false;
  }
  return result;
}

BinaryStructure connectivity_structure(const FlowNetwork& net) {
  std::vector<std::size_t> components(net.edge_count());
  for (std::size_t i = 0; i < components.size(); ++i) components[i] = i;
  return BinaryStructure(std::move(components),
                         [net](ComponentMask alive) { return connects(net, alive); });
}

DirectedDomination directed_network_domination(const FlowNetwork& net, bool require_coherent,
                                               CoherenceScope scope) {
  if (!net.all_directed()) {
    throw DomainError("directed_network_domination: the network has undirected edges");
  }
  DirectedDomination result;
  const ComponentMask all = all_edges(net);
  const ComponentMask relevant = relevant_edges(net);
  for (std::size_t i = 0; i < net.edge_count(); ++i) {
    if (!(relevant & bit(i))) result.irrelevant_edges.push_back(net.edges()[i].id);
  }
  const ComponentMask judged = scope == CoherenceScope::full_graph ? all : relevant;
  result.coherent = relevant != 0 && (judged & ~relevant) == 0;
  result.edge_count = static_cast<std::size_t>(std::popcount(judged));

  std::set<std::size_t> touched{net.source(), net.sink()};
  for (std::size_t i = 0; i < net.edge_count(); ++i) {
    if (judged & bit(i)) {
      touched.insert(net.edges()[i].from);
      touched.insert(net.edges()[i].to);
    }
  }
  result.rank = touched.size() - 1;

  if (auto cycle = find_directed_cycle(net, judged)) {
    result.cyclic = true;
    result.cycle = std::move(*cycle);
  }
  if (!result.coherent) {
    if (require_coherent) {
      throw CoherenceError("the directed network system is not coherent (" +
                           std::to_string(result.irrelevant_edges.size()) + " irrelevant edges)");
    }
    result.value = 0;
  } else if (result.cyclic) {
    result.value = 0;
  } else {
    result.value = parity_sign(static_cast<std::int64_t>(result.edge_count) -
                               static_cast<std::int64_t>(result.rank));
  }
  return result;
}

}  // namespace domikit
