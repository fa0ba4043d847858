#pragma once

#include <filesystem>

#include "slift/corpus.hpp"
#include "slift/homotopy.hpp"

namespace slift {

struct SuiteConfig {
  /// Empty: the built-in corpus.
  std::string corpus_dir;
  /// Verification height: lifting problems are checked up to this dimension.
  int dim_cap = kDefaultHeight;
  int budget = 10;
  std::vector<std::string> checks;
  std::string output;
};

/// Reads {"corpus": ..., "dim_cap": ..., "budget": ..., "checks": [...], "output": ...}.
SuiteConfig load_suite_config(const std::filesystem::path& path);
/// Throws PreconditionError ("unsound height") or Error for unknown checks and missing files.
void validate_config(const SuiteConfig& config);

struct CheckResult {
  std::string name;
  std::string status = "pass";  // pass | fail | inconclusive
  std::size_t instances = 0;
  /// Instances left out, e.g. because a construction exceeds the dim_cap.
  std::size_t excluded = 0;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  /// Fillers, certificates and traces re-verified by direct composition.
  std::size_t reverified = 0;
  std::size_t reverify_failures = 0;
  double seconds = 0;

  void fail(std::string witness);
};

struct Report {
  std::string corpus;
  int dim_cap = kDefaultHeight;
  int budget = 10;
  std::vector<std::string> presets;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

std::vector<std::string> check_names();
CheckResult run_check(const std::string& name, const Corpus& corpus, int height, int budget);
Report run_suite(const SuiteConfig& config);
Report run_suite(const SuiteConfig& config, const Corpus& corpus);

/// One line per check, key=value pairs.
std::string render_text(const Report& r, bool timing = true);
std::string render_json(const Report& r, bool timing = true);

}  // namespace slift
