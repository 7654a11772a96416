#pragma once

#include "tautkit_cli/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tautkit::cli {

enum class OutputFormat { text, json };

OutputFormat parse_format(const std::string& s);

/// Reads TAUTKIT_FORMAT; text when unset.
OutputFormat default_format();

struct Check {
  std::string name;
  bool pass;
};

/// A command's outcome. `payload` carries no timestamps or other
/// run-dependent data, so identical inputs render byte-identically.
struct CommandResult {
  std::string command;
  json payload;
  std::vector<std::string> text_lines;
  std::vector<Check> checks;

  bool pass() const;
  /// 0 when every check passes, 1 otherwise.
  int exit_code() const { return pass() ? 0 : 1; }
  std::string render(OutputFormat format) const;
};

CommandResult cmd_vmatrix(int genus);
CommandResult cmd_wmatrix();
CommandResult cmd_candidates(int genus, const std::optional<NormSpec>& spec = std::nullopt);
CommandResult cmd_penner(const CurveSystem& sys, const TwistWord& word);
CommandResult cmd_sutured_chi(const CorneredSurface& s);
CommandResult cmd_sutured_core_disk(const SuturedSolidTorus& t);
CommandResult cmd_sutured_pairing(const TangencyList& t);
CommandResult cmd_sutured_witness(long long k, long long m);
CommandResult cmd_holonomy_tau(const PLHomeo& u, const PLHomeo& v, ConcatCase which, int samples);
CommandResult cmd_holonomy_shift(const PLHomeo& f);

/// One-breakpoint shifts of [-1, 1] used when no maps are supplied:
/// u lies above the diagonal and v below it.
PLHomeo bundled_u();
PLHomeo bundled_v();

/// Full command-line entry point; returns the process exit code
/// (0 pass, 1 check failure, 2 input or usage error).
int run(int argc, char** argv);

}  // namespace tautkit::cli
