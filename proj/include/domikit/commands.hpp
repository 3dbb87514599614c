#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domikit/document.hpp"
#include "domikit/numeric.hpp"
#include "domikit/poset.hpp"

namespace domikit {

enum class Method { formations, mobius, pivotal, binary, automatic };

std::optional<Method> parse_method(std::string_view name);
const char* to_string(Method method);

struct CommandOptions {
  int level = 1;
  Method method = Method::automatic;
  bool table = false;
  bool json = false;
  /// Largest generator count for formation enumeration.
  std::size_t guard = kDefaultFormationGuard;
  bool timing = true;
  bool verify = false;
  bool rational = false;
};

struct PathsResult {
  int level = 0;
  GeneratorSet paths;
};

PathsResult cmd_paths(const SystemDocument& doc, const CommandOptions& options);
std::string render(const PathsResult& result, const CommandOptions& options);

struct DominationResult {
  int level = 0;
  Method method = Method::automatic;
  /// Engine that produced the value, e.g. "closed-form threshold".
  std::string engine;
  Integer value;
  /// delta_k over cl(P_k), lexicographic, when requested.
  std::optional<DominationTable> table;
};

DominationResult cmd_domination(const SystemDocument& doc, const CommandOptions& options);
std::string render(const DominationResult& result, const CommandOptions& options);

struct ReliabilityResult {
  int level = 0;
  double value = 0;
  std::optional<Rational> exact;
  std::optional<double> enumerated;
  std::optional<Rational> exact_enumerated;
};

/// Throws UsageError when the document carries no pmfs.
ReliabilityResult cmd_reliability(const SystemDocument& doc, const CommandOptions& options);
std::string render(const ReliabilityResult& result, const CommandOptions& options);

struct VerificationReport {
  struct Entry {
    std::string method;
    std::optional<Integer> value;
    /// Why the method was skipped, when it was.
    std::string note;
    double seconds = 0;
  };

  int level = 0;
  std::vector<Entry> entries;
  /// True iff every computed value is equal.
  bool agreement = true;
};

VerificationReport cmd_verify(const SystemDocument& doc, const CommandOptions& options);
std::string render(const VerificationReport& report, const CommandOptions& options);

/// Process exit status for an exception escaping a command: 2 parse or
/// validation, 3 complexity guard, 1 anything else.
int exit_code_for(const std::exception& error) noexcept;

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitDisagreement = 4;

}  // namespace domikit
