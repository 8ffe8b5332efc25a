#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcat/fixtures.hpp"

namespace qcat {

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  long cases = 0;
  long failed = 0;
  std::vector<CheckReport> failures;  // first few, with context in `detail`
  std::vector<std::string> notes;     // observations that are data, not verdicts

  bool ok() const { return failed == 0; }
  void check(const CheckReport& r, const std::string& context = {});
  void check(bool ok, const std::string& law, const std::string& context = {});
  void note(std::string text) { notes.push_back(std::move(text)); }
  void merge(const SuiteResult& other);
};

const std::vector<std::string>& suite_names();
/// Throws InvalidArgument for an unknown suite.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

/// Convergence by enumerating every index set M over the first `horizon` positions
/// that meets the periodic tail, extended periodically to an infinite set.
bool converges_direct(const VCategory& x, const EvPeriodicSeq& s, int obj, int horizon = 12);

}  // namespace qcat
