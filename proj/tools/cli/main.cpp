#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace liouv::cli;
  CLI::App app{"Integrating factors and Liouvillian first integrals of rational first order ODEs"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string ode;
  std::string base;

  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--deg", cfg.deg, "Darboux polynomial degree bound")->check(CLI::PositiveNumber);
    sub->add_option("--deg-q", cfg.degQ, "degree bound for Q")->check(CLI::NonNegativeNumber);
    sub->add_option("--deg-p", cfg.degP, "degree bound for P")->check(CLI::NonNegativeNumber);
    sub->add_option("--timeout", cfg.timeoutSeconds, "seconds")->check(CLI::PositiveNumber);
    sub->add_flag("--json", cfg.json, "JSON output");
  };

  auto* lsolve = app.add_subcommand("lsolve", "integrating factor and first integral");
  lsolve->add_option("ode", ode, "e.g. \"dy/dx = (x+1)*y/(x-x*y-y^2+x^2)\"")->required();
  add_search_flags(lsolve);
  lsolve->add_flag("--numcheck", cfg.numcheck, "check constancy of I along a trajectory");
  lsolve->add_option("--base", base, "base point x,y for the first integral");
  lsolve->add_option("--tspan", cfg.tSpan, "trajectory length for --numcheck")
      ->check(CLI::NonNegativeNumber);

  auto* intfact = app.add_subcommand("intfact", "integrating factor only");
  intfact->add_option("ode", ode)->required();
  add_search_flags(intfact);

  auto* darboux = app.add_subcommand("darboux", "Darboux polynomials and cofactors");
  darboux->add_option("ode", ode)->required();
  darboux->add_option("--deg", cfg.deg, "maximal degree")->check(CLI::PositiveNumber);
  darboux->add_option("--timeout", cfg.timeoutSeconds, "seconds")->check(CLI::PositiveNumber);
  darboux->add_flag("--json", cfg.json, "JSON output");

  auto* ldop = app.add_subcommand("ldop", "the operator D = N d/dx + M d/dy");
  ldop->add_option("ode", ode)->required();
  ldop->add_flag("--json", cfg.json, "JSON output");

  std::string corpusPath;
  auto* corpus = app.add_subcommand("corpus", "run lsolve over a corpus file");
  corpus->add_option("file", corpusPath)->required();
  add_search_flags(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (!base.empty()) cfg.basePoint = parse_point(base);
  } catch (const std::exception& e) {
    std::cerr << "error: --base: " << e.what() << "\n";
    return kInputError;
  }

  if (*lsolve) return cmd_lsolve(ode, cfg, std::cout, std::cerr);
  if (*intfact) return cmd_intfact(ode, cfg, std::cout, std::cerr);
  if (*darboux) return cmd_darboux(ode, cfg, std::cout, std::cerr);
  if (*ldop) return cmd_ldop(ode, cfg, std::cout, std::cerr);
  return cmd_corpus(corpusPath, cfg, std::cout, std::cerr);
}
