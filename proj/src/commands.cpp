#include "domikit/commands.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "domikit/errors.hpp"
#include "domikit/lattice.hpp"
#include "domikit/matroid.hpp"
#include "domikit/model.hpp"
#include "domikit/network.hpp"

namespace domikit {

namespace {

using nlohmann::json;

struct ClosedForm {
  std::string engine;
  Integer value;
};

json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

std::string format_probability(double p) {
  std::ostringstream os;
  os << std::setprecision(15) << p;
  return os.str();
}

std::optional<ClosedForm> threshold_form(const SystemDocument& doc, const LevelSystem& ls) {
  const auto* sum = std::get_if<SumPayload>(&doc.structure);
  if (sum == nullptr) return std::nullopt;
  if (!std::all_of(sum->weights.begin(), sum->weights.end(), [](int w) { return w == 1; })) {
    return std::nullopt;
  }
  const auto m = doc.max_states();
  if (!std::all_of(m.begin(), m.end(), [&](int mi) { return mi == m.front(); })) {
    return std::nullopt;
  }
  return ClosedForm{"closed-form threshold",
                    threshold_domination(static_cast<int>(m.size()), m.front(), ls.level())};
}

std::optional<ClosedForm> directed_form(const SystemDocument& doc, const LevelSystem& ls) {
  const auto net = doc.network();
  if (!net || !net->all_directed()) return std::nullopt;
  if (!associated_binary_network(*net, ls.level()).reduces_to_connectivity) return std::nullopt;
  return ClosedForm{"closed-form directed network", directed_network_domination(*net).value};
}

std::optional<ClosedForm> matroid_form(const SystemDocument& doc, const LevelSystem& ls) {
  const auto net = doc.network();
  if (!net || net->any_directed()) return std::nullopt;
  if (!associated_binary_network(*net, ls.level()).reduces_to_connectivity) return std::nullopt;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : net->edges()) edges.emplace_back(e.from, e.to);
  edges.emplace_back(net->source(), net->sink());
  const MatroidSystemLink link{graphic_matroid(net->node_count(), edges), net->edge_count()};
  return ClosedForm{"crapo beta of the graphic matroid",
                    domination_from_beta(link, link.component_set())};
}

std::optional<ClosedForm> any_closed_form(const SystemDocument& doc, const LevelSystem& ls) {
  if (auto form = threshold_form(doc, ls)) return form;
  return directed_form(doc, ls);
}

DominationTable table_by_formula(const LevelSystem& ls, const GeneratorSet& paths) {
  DominationTable table;
  if (paths.empty()) return table;
  const JoinClosure closure(paths);
  for (const auto& y : closure.elements()) {
    table.set(y, y.is_zero() ? Integer(1) : delta_at(ls, y, 63));
  }
  return table;
}

}  // namespace

std::optional<Method> parse_method(std::string_view name) {
  if (name == "formations") return Method::formations;
  if (name == "mobius") return Method::mobius;
  if (name == "pivotal") return Method::pivotal;
  if (name == "binary") return Method::binary;
  if (name == "auto") return Method::automatic;
  return std::nullopt;
}

const char* to_string(Method method) {
  switch (method) {
    case Method::formations: return "formations";
    case Method::mobius: return "mobius";
    case Method::pivotal: return "pivotal";
    case Method::binary: return "binary";
    case Method::automatic: return "auto";
  }
  return "?";
}

PathsResult cmd_paths(const SystemDocument& doc, const CommandOptions& options) {
  const LevelSystem ls(doc.system(), options.level);
  return {options.level, minimal_path_vectors(ls)};
}

std::string render(const PathsResult& result, const CommandOptions& options) {
  if (options.json) {
    json vectors = json::array();
    for (const auto& p : result.paths) vectors.push_back(p.values());
    json out{{"level", result.level}, {"count", result.paths.size()}, {"path_vectors", vectors}};
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "level: " << result.level << "\n";
  os << "count: " << result.paths.size() << "\n";
  for (const auto& p : result.paths) os << p << "\n";
  return os.str();
}

DominationResult cmd_domination(const SystemDocument& doc, const CommandOptions& options) {
  const LevelSystem ls(doc.system(), options.level);
  DominationResult result;
  result.level = options.level;
  result.method = options.method;

  std::optional<GeneratorSet> paths;
  auto path_vectors = [&]() -> const GeneratorSet& {
    if (!paths) paths = minimal_path_vectors(ls);
    return *paths;
  };

  switch (options.method) {
    case Method::formations: {
      result.engine = "formation counting";
      const auto& p = path_vectors();
      if (!p.empty()) {
        DominationTable table = domination_by_formations(p, options.guard);
        result.value = table.at(ls.space().top());
        if (options.table) result.table = std::move(table);
      }
      break;
    }
    case Method::mobius: {
      result.engine = "closure moebius inversion";
      const auto& p = path_vectors();
      if (!p.empty()) {
        if (p.size() > options.guard) {
          throw ComplexityGuardError("mobius: " + std::to_string(p.size()) +
                                     " path vectors exceed the guard of " +
                                     std::to_string(options.guard) +
                                     "; use --method binary or --method pivotal");
        }
        DominationTable table = domination_by_closure_mobius(JoinClosure(p));
        result.value = table.at(ls.space().top());
        if (options.table) result.table = std::move(table);
      }
      break;
    }
    case Method::pivotal:
      result.engine = "pivotal decomposition";
      result.value = pivotal_domination(ls);
      break;
    case Method::binary:
      result.engine = "associated binary subset formula";
      result.value = domination_via_binary(ls);
      break;
    case Method::automatic:
      if (auto form = any_closed_form(doc, ls)) {
        result.engine = form->engine;
        result.value = form->value;
      } else if (ls.n() <= kDefaultSubsetGuard) {
        result.engine = "associated binary subset formula";
        result.value = domination_via_binary(ls);
      } else {
        result.engine = "pivotal decomposition";
        result.value = pivotal_domination(ls);
      }
      break;
  }
  if (options.table && !result.table) result.table = table_by_formula(ls, path_vectors());
  return result;
}

std::string render(const DominationResult& result, const CommandOptions& options) {
  if (options.json) {
    json out{{"level", result.level},
             {"method", to_string(result.method)},
             {"engine", result.engine},
             {"domination", integer_json(result.value)}};
    if (result.table) {
      json rows = json::array();
      for (const auto& [x, delta] : *result.table) {
        rows.push_back({{"state", x.values()}, {"delta", integer_json(delta)}});
      }
      out["table"] = std::move(rows);
    }
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "level: " << result.level << "\n";
  os << "method: " << to_string(result.method) << "\n";
  os << "engine: " << result.engine << "\n";
  os << "domination: " << result.value << "\n";
  if (result.table) {
    for (const auto& [x, delta] : *result.table) os << x << "\t" << delta << "\n";
  }
  return os.str();
}

ReliabilityResult cmd_reliability(const SystemDocument& doc, const CommandOptions& options) {
  if (!doc.has_distributions()) {
    throw UsageError("reliability needs a pmf for every component");
  }
  const LevelSystem ls(doc.system(), options.level);
  const auto dist = doc.distribution();
  dist.check_against(ls.space());

  const GeneratorSet paths = minimal_path_vectors(ls);
  const DominationTable table = paths.size() <= options.guard
                                    ? (paths.empty() ? DominationTable{}
                                                     : domination_by_formations(paths, options.guard))
                                    : lattice_domination_table(ls);
  ReliabilityResult result;
  result.level = options.level;
  result.value = reliability_from_domination(table, dist);
  if (options.rational) {
    result.exact = reliability_from_domination(table, doc.exact_distribution());
  }
  if (options.verify) {
    result.enumerated = reliability_enumerate(ls, dist);
    if (options.rational) result.exact_enumerated = reliability_enumerate(ls, doc.exact_distribution());
  }
  return result;
}

std::string render(const ReliabilityResult& result, const CommandOptions& options) {
  if (options.json) {
    json out{{"level", result.level}, {"reliability", result.value}};
    if (result.exact) out["exact"] = to_string(*result.exact);
    if (result.enumerated) {
      out["enumeration"] = *result.enumerated;
      out["abs_difference"] = std::abs(result.value - *result.enumerated);
    }
    if (result.exact_enumerated) out["exact_enumeration"] = to_string(*result.exact_enumerated);
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "level: " << result.level << "\n";
  os << "reliability: " << format_probability(result.value) << "\n";
  if (result.exact) os << "exact: " << to_string(*result.exact) << "\n";
  if (result.enumerated) {
    os << "enumeration: " << format_probability(*result.enumerated) << "\n";
    os << "abs_difference: " << format_probability(std::abs(result.value - *result.enumerated))
       << "\n";
  }
  if (result.exact_enumerated) os << "exact_enumeration: " << to_string(*result.exact_enumerated) << "\n";
  return os.str();
}

VerificationReport cmd_verify(const SystemDocument& doc, const CommandOptions& options) {
  const LevelSystem ls(doc.system(), options.level);
  VerificationReport report;
  report.level = options.level;

  std::optional<GeneratorSet> paths;
  auto path_vectors = [&]() -> const GeneratorSet& {
    if (!paths) paths = minimal_path_vectors(ls);
    return *paths;
  };
  auto run = [&](const char* name, auto&& compute) {
    VerificationReport::Entry entry;
    entry.method = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      entry.value = compute();
    } catch (const ComplexityGuardError& e) {
      entry.note = std::string("skipped: ") + e.what();
    }
    entry.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.entries.push_back(std::move(entry));
  };

  run("formations", [&]() -> Integer {
    const auto& p = path_vectors();
    if (p.empty()) return 0;
    return domination_by_formations(p, options.guard).at(ls.space().top());
  });
  run("mobius", [&]() -> Integer {
    const auto& p = path_vectors();
    if (p.empty()) return 0;
    if (p.size() > options.guard) {
      throw ComplexityGuardError(std::to_string(p.size()) + " path vectors exceed the guard");
    }
    return domination_by_closure_mobius(JoinClosure(p)).at(ls.space().top());
  });
  run("lattice", [&] { return signed_domination(ls); });
  run("pivotal", [&] { return pivotal_domination(ls); });
  run("binary", [&] { return domination_via_binary(ls); });
  for (auto form : {threshold_form(doc, ls), directed_form(doc, ls), matroid_form(doc, ls)}) {
    if (form) run(form->engine.c_str(), [&] { return form->value; });
  }

  std::optional<Integer> first;
  for (const auto& entry : report.entries) {
    if (!entry.value) continue;
    if (!first) {
      first = entry.value;
    } else if (*entry.value != *first) {
      report.agreement = false;
    }
  }
  return report;
}

std::string render(const VerificationReport& report, const CommandOptions& options) {
  if (options.json) {
    json entries = json::array();
    for (const auto& entry : report.entries) {
      json e{{"method", entry.method}};
      if (entry.value) e["value"] = integer_json(*entry.value);
      if (!entry.note.empty()) e["note"] = entry.note;
      if (options.timing) e["seconds"] = entry.seconds;
      entries.push_back(std::move(e));
    }
    json out{{"level", report.level}, {"methods", entries}, {"agreement", report.agreement}};
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "level: " << report.level << "\n";
  for (const auto& entry : report.entries) {
    os << entry.method << ": ";
    if (entry.value) {
      os << *entry.value;
    } else {
      os << entry.note;
    }
    if (options.timing) os << " (" << std::fixed << std::setprecision(6) << entry.seconds << " s)";
    os << "\n";
  }
  os << "agreement: " << (report.agreement ? "yes" : "no") << "\n";
  return os.str();
}

int exit_code_for(const std::exception& error) noexcept {
  if (dynamic_cast<const ParseError*>(&error) || dynamic_cast<const ValidationError*>(&error) ||
      dynamic_cast<const DistributionError*>(&error)) {
    return kExitInvalidInput;
  }
  if (dynamic_cast<const ComplexityGuardError*>(&error)) return kExitGuard;
  return kExitUsage;
}

}  // namespace domikit
