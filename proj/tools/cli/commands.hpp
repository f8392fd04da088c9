#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "liouv/numcheck.hpp"

namespace liouv::cli {

enum ExitCode : int {
  kOk = 0,
  kCorpusFailure = 1,
  kInputError = 2,
  kNotFound = 3,
  kTimeout = 4,
};

struct CliConfig {
  int deg = 1;
  int degQ = 5;
  int degP = 5;
  bool json = false;
  bool numcheck = false;
  std::optional<Point> basePoint;
  int timeoutSeconds = 60;
  // Trajectory length used by --numcheck.
  double tSpan = 0.25;
  int nSamples = 11;
};

/// "x,y" with each coordinate an integer, p/q or decimal.
Point parse_point(const std::string& text);

int cmd_lsolve(const std::string& ode, const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_intfact(const std::string& ode, const CliConfig& cfg, std::ostream& out,
                std::ostream& err);
int cmd_darboux(const std::string& ode, const CliConfig& cfg, std::ostream& out,
                std::ostream& err);
int cmd_ldop(const std::string& ode, const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_corpus(const std::string& path, const CliConfig& cfg, std::ostream& out,
               std::ostream& err);

}  // namespace liouv::cli
