#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace copslab::cli {

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t count = 50;
  std::size_t max = 5;       // largest grid side
  std::size_t max_size = 7;  // largest random factor
  std::string out_dir = ".";
};

struct SuiteSummary {
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t vacuous = 0;
  std::vector<std::string> counterexamples;  // files written for failing instances

  bool ok() const noexcept { return failed == 0; }
};

const std::vector<std::string>& suite_names();

/// Runs one suite, printing "# <instance>" headers and CLAIM lines to
/// `out`, followed by a summary line. Throws InputError for unknown names.
SuiteSummary run_suite(const std::string& name, const SuiteOptions& options, std::ostream& out);

}  // namespace copslab::cli
