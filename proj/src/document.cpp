#include "domikit/document.hpp"

#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

#include "domikit/errors.hpp"

namespace domikit {

namespace {

using nlohmann::json;

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const json& require(const json& object, const std::string& path, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(child(path, key), "missing required field");
  return *it;
}

int as_int(const json& value, const std::string& path) {
  if (!value.is_number_integer()) throw ParseError(path, "expected an integer");
  const auto v = value.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ParseError(path, "integer out of range");
  }
  return static_cast<int>(v);
}

std::string as_string(const json& value, const std::string& path) {
  if (!value.is_string()) throw ParseError(path, "expected a string");
  return value.get<std::string>();
}

const json& as_array(const json& value, const std::string& path) {
  if (!value.is_array()) throw ParseError(path, "expected an array");
  return value;
}

std::vector<int> as_int_array(const json& value, const std::string& path) {
  std::vector<int> out;
  for (std::size_t i = 0; i < as_array(value, path).size(); ++i) {
    out.push_back(as_int(value[i], child(path, i)));
  }
  return out;
}

Rational as_probability(const json& value, const std::string& path) {
  try {
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (value.is_number_float()) return parse_rational(value.dump());
    if (value.is_string()) return parse_rational(value.get<std::string>());
  } catch (const DomainError& e) {
    throw ParseError(path, e.what());
  }
  throw ParseError(path, "expected a probability (number or \"p/q\" string)");
}

ComponentSpec parse_component(const json& value, const std::string& path) {
  if (!value.is_object()) throw ParseError(path, "expected an object");
  ComponentSpec c;
  if (auto it = value.find("name"); it != value.end()) c.name = as_string(*it, child(path, "name"));
  c.max_state = as_int(require(value, path, "max_state"), child(path, "max_state"));
  if (c.max_state < 1) throw ParseError(child(path, "max_state"), "must be >= 1");
  if (auto it = value.find("pmf"); it != value.end()) {
    const std::string pmf_path = child(path, "pmf");
    std::vector<Rational> pmf;
    for (std::size_t s = 0; s < as_array(*it, pmf_path).size(); ++s) {
      pmf.push_back(as_probability((*it)[s], child(pmf_path, s)));
    }
    if (pmf.size() != static_cast<std::size_t>(c.max_state) + 1) {
      throw ParseError(pmf_path, "expected " + std::to_string(c.max_state + 1) + " masses");
    }
    c.pmf = std::move(pmf);
  }
  return c;
}

NetworkPayload parse_network(const json& value, const std::string& path) {
  NetworkPayload net;
  const std::string nodes_path = child(path, "nodes");
  const json& nodes = as_array(require(value, path, "nodes"), nodes_path);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    net.nodes.push_back(as_string(nodes[i], child(nodes_path, i)));
  }
  net.source = as_string(require(value, path, "source"), child(path, "source"));
  net.sink = as_string(require(value, path, "sink"), child(path, "sink"));
  const std::string edges_path = child(path, "edges");
  const json& edges = as_array(require(value, path, "edges"), edges_path);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string p = child(edges_path, i);
    const json& e = edges[i];
    if (!e.is_object()) throw ParseError(p, "expected an object");
    NetworkEdgeSpec spec;
    spec.id = as_int(require(e, p, "id"), child(p, "id"));
    spec.from = as_string(require(e, p, "from"), child(p, "from"));
    spec.to = as_string(require(e, p, "to"), child(p, "to"));
    if (auto it = e.find("directed"); it != e.end()) {
      if (!it->is_boolean()) throw ParseError(child(p, "directed"), "expected a boolean");
      spec.directed = it->get<bool>();
    }
    spec.max_capacity = as_int(require(e, p, "max_capacity"), child(p, "max_capacity"));
    net.edges.push_back(std::move(spec));
  }
  return net;
}

StructurePayload parse_structure(const json& value, const std::string& path) {
  if (!value.is_object()) throw ParseError(path, "expected an object");
  const std::string kind = as_string(require(value, path, "kind"), child(path, "kind"));
  if (kind == "table") {
    return TablePayload{as_int_array(require(value, path, "values"), child(path, "values"))};
  }
  if (kind == "sum") {
    SumPayload sum;
    if (auto it = value.find("weights"); it != value.end()) {
      sum.weights = as_int_array(*it, child(path, "weights"));
    }
    return sum;
  }
  if (kind == "path_vectors") {
    PathVectorPayload payload;
    const std::string levels_path = child(path, "levels");
    const json& levels = as_array(require(value, path, "levels"), levels_path);
    for (std::size_t k = 0; k < levels.size(); ++k) {
      const std::string level_path = child(levels_path, k);
      std::vector<StateVector> level;
      for (std::size_t j = 0; j < as_array(levels[k], level_path).size(); ++j) {
        level.emplace_back(as_int_array(levels[k][j], child(level_path, j)));
      }
      payload.levels.push_back(std::move(level));
    }
    return payload;
  }
  if (kind == "network") return parse_network(value, path);
  throw ParseError(child(path, "kind"),
                   "unknown kind \"" + kind + "\" (expected table, sum, network or path_vectors)");
}

FlowNetwork build_network(const NetworkPayload& payload) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < payload.nodes.size(); ++i) index.emplace(payload.nodes[i], i);
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw GraphError("unknown node \"" + name + "\"");
    return it->second;
  };
  std::vector<FlowEdge> edges;
  for (const auto& e : payload.edges) {
    edges.push_back({e.id, lookup(e.from), lookup(e.to), e.directed, e.max_capacity});
  }
  return FlowNetwork(payload.nodes, std::move(edges), lookup(payload.source),
                     lookup(payload.sink));
}

std::vector<GeneratorSet> build_levels(const PathVectorPayload& payload) {
  std::vector<GeneratorSet> levels;
  for (const auto& level : payload.levels) levels.emplace_back(level);
  return levels;
}

template <class Scalar, class Convert>
ComponentDistribution<Scalar> build_distribution(const SystemDocument& doc, Convert convert) {
  std::vector<std::vector<Scalar>> pmfs;
  for (std::size_t i = 0; i < doc.components.size(); ++i) {
    const auto& pmf = doc.components[i].pmf;
    if (!pmf) {
      throw UsageError("component " + std::to_string(i) +
                       " has no pmf; reliability needs a distribution for every component");
    }
    std::vector<Scalar> masses;
    for (const auto& p : *pmf) masses.push_back(convert(p));
    pmfs.push_back(std::move(masses));
  }
  return ComponentDistribution<Scalar>(std::move(pmfs));
}

}  // namespace

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite probability");
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // 53-bit mantissa scaled to an integer.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Integer numerator = scaled;
  Integer denominator = 1;
  if (exponent >= 0) {
    numerator <<= exponent;
  } else {
    denominator <<= -exponent;
  }
  return Rational(numerator, denominator);
}

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw DomainError("cannot parse \"" + std::string(text) + "\" as an exact number");
  };
  if (text.empty()) return fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) return fail();
    return num / den;
  }
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    const std::string exp_text(text.substr(e + 1));
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != exp_text.size()) return fail();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  Integer digits = 0;
  long fraction_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (char ch : mantissa) {
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (ch >= '0' && ch <= '9') {
      digits = digits * 10 + (ch - '0');
      seen_digit = true;
      if (seen_point) ++fraction_digits;
    } else {
      return fail();
    }
  }
  if (!seen_digit) return fail();
  exponent -= fraction_digits;
  Integer scale = 1;
  for (long i = 0; i < std::labs(exponent); ++i) scale *= 10;
  Rational value = exponent >= 0 ? Rational(digits * scale) : Rational(digits, scale);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

StructureKind SystemDocument::kind() const noexcept {
  switch (structure.index()) {
    case 0: return StructureKind::table;
    case 1: return StructureKind::sum;
    case 2: return StructureKind::network;
    default: return StructureKind::path_vectors;
  }
}

std::vector<int> SystemDocument::max_states() const {
  std::vector<int> out;
  for (const auto& c : components) out.push_back(c.max_state);
  return out;
}

bool SystemDocument::has_distributions() const noexcept {
  return !components.empty() &&
         std::all_of(components.begin(), components.end(),
                     [](const ComponentSpec& c) { return c.pmf.has_value(); });
}

MultistateSystem SystemDocument::system() const {
  return std::visit(
      [&](const auto& payload) -> MultistateSystem {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, TablePayload>) {
          return make_table_system(max_states(), payload.values, system_max);
        } else if constexpr (std::is_same_v<T, SumPayload>) {
          return make_sum_system(max_states(), payload.weights, system_max);
        } else if constexpr (std::is_same_v<T, PathVectorPayload>) {
          return make_path_vector_system(max_states(), build_levels(payload), system_max);
        } else {
          MultistateSystem built = network_system(build_network(payload));
          if (system_max && *system_max != built.space().system_max()) {
            return MultistateSystem(StateSpace(built.space().max_states(), *system_max),
                                    built.structure_ptr());
          }
          return built;
        }
      },
      structure);
}

std::optional<FlowNetwork> SystemDocument::network() const {
  if (const auto* payload = std::get_if<NetworkPayload>(&structure)) return build_network(*payload);
  return std::nullopt;
}

ComponentDistribution<double> SystemDocument::distribution() const {
  return build_distribution<double>(*this, [](const Rational& p) { return p.convert_to<double>(); });
}

ComponentDistribution<Rational> SystemDocument::exact_distribution() const {
  return build_distribution<Rational>(*this, [](const Rational& p) { return p; });
}

SystemDocument parse_system(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("", "expected a JSON object");

  SystemDocument doc;
  if (auto it = root.find("format_version"); it != root.end()) {
    doc.format_version = as_int(*it, "/format_version");
    if (doc.format_version != kDocumentFormatVersion) {
      throw ParseError("/format_version", "unsupported version " +
                                              std::to_string(doc.format_version));
    }
  }
  doc.structure = parse_structure(require(root, "", "structure"), "/structure");

  if (auto it = root.find("components"); it != root.end()) {
    const json& components = as_array(*it, "/components");
    if (components.empty()) throw ParseError("/components", "component list is empty");
    for (std::size_t i = 0; i < components.size(); ++i) {
      doc.components.push_back(parse_component(components[i], child("/components", i)));
    }
  } else if (const auto* net = std::get_if<NetworkPayload>(&doc.structure)) {
    std::vector<NetworkEdgeSpec> edges = net->edges;
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& e : edges) {
      doc.components.push_back({"e" + std::to_string(e.id), e.max_capacity, std::nullopt});
    }
  } else {
    throw ParseError("/components", "missing required field");
  }
  if (auto it = root.find("system_max"); it != root.end()) {
    doc.system_max = as_int(*it, "/system_max");
  }

  if (const auto* net = std::get_if<NetworkPayload>(&doc.structure)) {
    if (net->edges.size() != doc.components.size()) {
      throw ParseError("/components", "network documents need one component per edge");
    }
    std::map<int, int> capacity;
    for (const auto& e : net->edges) capacity[e.id] = e.max_capacity;
    for (std::size_t i = 0; i < doc.components.size(); ++i) {
      auto cap = capacity.find(static_cast<int>(i) + 1);
      if (cap == capacity.end() || cap->second != doc.components[i].max_state) {
        throw ParseError(child(child("/components", i), "max_state"),
                         "does not match the capacity of edge " + std::to_string(i + 1));
      }
    }
  }

  try {
    doc.system();
    if (std::any_of(doc.components.begin(), doc.components.end(),
                    [](const ComponentSpec& c) { return c.pmf.has_value(); })) {
      for (std::size_t i = 0; i < doc.components.size(); ++i) {
        if (doc.components[i].pmf) {
          ComponentDistribution<Rational> check({*doc.components[i].pmf});
        }
      }
    }
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
  return doc;
}

std::string serialize_system(const SystemDocument& doc) {
  json root;
  root["format_version"] = doc.format_version;
  json components = json::array();
  for (const auto& c : doc.components) {
    json entry{{"name", c.name}, {"max_state", c.max_state}};
    if (c.pmf) {
      json pmf = json::array();
      for (const auto& p : *c.pmf) pmf.push_back(to_string(p));
      entry["pmf"] = std::move(pmf);
    }
    components.push_back(std::move(entry));
  }
  root["components"] = std::move(components);
  if (doc.system_max) root["system_max"] = *doc.system_max;

  json structure;
  std::visit(
      [&](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, TablePayload>) {
          structure = {{"kind", "table"}, {"values", payload.values}};
        } else if constexpr (std::is_same_v<T, SumPayload>) {
          structure = {{"kind", "sum"}};
          if (!payload.weights.empty()) structure["weights"] = payload.weights;
        } else if constexpr (std::is_same_v<T, PathVectorPayload>) {
          json levels = json::array();
          for (const auto& level : payload.levels) {
            json vectors = json::array();
            for (const auto& v : level) vectors.push_back(v.values());
            levels.push_back(std::move(vectors));
          }
          structure = {{"kind", "path_vectors"}, {"levels", std::move(levels)}};
        } else {
          json edges = json::array();
          for (const auto& e : payload.edges) {
            edges.push_back({{"id", e.id},
                             {"from", e.from},
                             {"to", e.to},
                             {"directed", e.directed},
                             {"max_capacity", e.max_capacity}});
          }
          structure = {{"kind", "network"},
                       {"nodes", payload.nodes},
                       {"edges", std::move(edges)},
                       {"source", payload.source},
                       {"sink", payload.sink}};
        }
      },
      doc.structure);
  root["structure"] = std::move(structure);
  return root.dump(2) + "\n";
}

}  // namespace domikit
