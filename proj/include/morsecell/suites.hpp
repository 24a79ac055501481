#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morsecell/io.hpp"

namespace morsecell {

/// Where a step's expected value comes from: a published statement, an
/// independent computation, or an immediate consequence of definitions.
enum class Provenance { published, derived, trivial };

enum class RuntimeClass { seconds, minutes, extended };

std::string to_string(Provenance p);
std::string to_string(RuntimeClass c);
std::optional<RuntimeClass> parse_runtime_class(const std::string& text);

struct SuiteStep {
  std::string claim;
  std::string expected;
  std::string observed;
  Provenance source = Provenance::published;
  bool passed = false;
};

struct SuiteReport {
  std::string id;
  std::string description;
  RuntimeClass runtime_class = RuntimeClass::seconds;
  std::vector<SuiteStep> steps;
  double elapsed_seconds = 0.0;

  bool passed() const;
};

struct SuiteInfo {
  std::string id;
  std::string description;
  RuntimeClass runtime_class = RuntimeClass::seconds;
};

struct SuiteOptions {
  unsigned jobs = 1;
  /// Adds the steps reserved for the extended class.
  bool extended = false;
};

const std::vector<SuiteInfo>& suite_catalog();

/// Throws InvalidArgument for an unknown id.
SuiteReport run_suite(const std::string& id, const SuiteOptions& options = {});

Json suite_report_to_json(const SuiteReport& report);

/// The deterministic weighted trees (and roots) used by the thm-4.8 suite.
struct RootedWeightedTree {
  EdgeWeightedTree tree;
  std::string root;
};
std::vector<RootedWeightedTree> sample_weighted_trees(std::size_t count, std::uint64_t seed);

}  // namespace morsecell
