#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcat/document.hpp"

namespace qcat {

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitInvalid = 2 };

/// Runs one command line (without the program name). Text goes to `out`,
/// diagnostics to `err`; `--json <path>` also writes the structured report.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The structured report of the last command line, as also written by --json.
nlohmann::json run_cli_report(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                              int& exit_code);

/// Names of the laws accepted by `check`.
std::vector<std::string> check_laws();

/// Re-evaluates a witness from a report against the document; true iff the
/// recorded failure is reproduced.
bool replay_witness(const Document& doc, const nlohmann::json& witness);

}  // namespace qcat
