#include "commands.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "liouv/darboux.hpp"
#include "liouv/errors.hpp"
#include "liouv/ifsearch.hpp"
#include "liouv/odeparse.hpp"
#include "liouv/verify.hpp"

namespace liouv::cli {

using nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

enum class Status { Solved, NotFound, Timeout, ParseError, InputError };

const char* status_name(Status s) {
  switch (s) {
    case Status::Solved: return "solved";
    case Status::NotFound: return "notfound";
    case Status::Timeout: return "timeout";
    case Status::ParseError: return "parse-error";
    case Status::InputError: return "input-error";
  }
  return "?";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Solved: return kOk;
    case Status::NotFound: return kNotFound;
    case Status::Timeout: return kTimeout;
    default: return kInputError;
  }
}

struct Attempt {
  Status status = Status::InputError;
  std::string message;
  std::optional<OdeInput> ode;
  std::optional<DOperator> D;
  SearchResult result;
  std::string residual;
  double seconds = 0;
};

Attempt load(const std::string& text) {
  Attempt a;
  try {
    a.ode = parse_ode(text);
    a.D = build_operator(a.ode->M, a.ode->N);
    a.status = Status::Solved;
  } catch (const ParseError& e) {
    a.status = Status::ParseError;
    a.message = e.what();
  } catch (const Error& e) {
    a.status = Status::InputError;
    a.message = e.what();
  }
  return a;
}

Attempt solve(const std::string& text, const CliConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Attempt a = load(text);
  if (a.status != Status::Solved) return a;
  try {
    const Deadline deadline(std::chrono::seconds(cfg.timeoutSeconds));
    a.result = auto_search(*a.D, make_schedule(cfg.deg, cfg.degQ, cfg.degP), deadline);
    if (a.result.found()) {
      // Residual is recomputed here rather than trusted from the search.
      const VerifyResidual r = check(*a.D, *a.result.factor);
      a.residual = to_string(r.residualNum);
      a.status = r.valid() ? Status::Solved : Status::NotFound;
    } else {
      a.status = Status::NotFound;
      a.message = "could not find an integrating factor";
    }
  } catch (const SearchTimeout& t) {
    a.status = Status::Timeout;
    a.result.report = t.report;
    a.message = "time limit of " + std::to_string(cfg.timeoutSeconds) + " s exceeded";
  } catch (const Timeout&) {
    a.status = Status::Timeout;
    a.message = "time limit of " + std::to_string(cfg.timeoutSeconds) + " s exceeded";
  } catch (const Error& e) {
    a.status = Status::InputError;
    a.message = e.what();
  } catch (const std::invalid_argument& e) {
    a.status = Status::InputError;
    a.message = e.what();
  }
  a.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return a;
}

ordered_json settings_json(const DegreeSettings& s) {
  return {{"deg", s.deg}, {"degQ", s.degQ}, {"degP", s.degP}};
}

ordered_json report_json(const SolveReport& r) {
  ordered_json tried = ordered_json::array();
  for (const auto& s : r.degreesTried) tried.push_back(settings_json(s));
  ordered_json systems = ordered_json::array();
  for (const auto& s : r.systems) {
    ordered_json j = settings_json(s.settings);
    j["mvec"] = s.mvec;
    j["rows"] = s.rows;
    j["cols"] = s.cols;
    j["outcome"] = to_string(s.outcome);
    systems.push_back(std::move(j));
  }
  return {{"degreesTried", tried},
          {"candidatesTried", r.candidatesTried},
          {"systems", systems},
          {"elapsedSeconds", r.elapsed.count()}};
}

ordered_json factor_json(const IntegratingFactor& R) {
  ordered_json q = ordered_json::array();
  for (const auto& f : R.Qfactors) q.push_back({{"v", to_string(f.v)}, {"m", f.m}});
  ordered_json s = ordered_json::array();
  for (const auto& f : R.Sfactors) s.push_back({{"v", to_string(f.v)}, {"c", to_string(f.c)}});
  return {{"R", to_string(R)},
          {"P", to_string(R.P)},
          {"Q", to_string(R.Q())},
          {"Qfactors", q},
          {"Sfactors", s}};
}

ordered_json attempt_json(const Attempt& a) {
  ordered_json j;
  j["status"] = status_name(a.status);
  if (a.ode) {
    j["ode"] = render_ode(*a.ode);
    j["M"] = to_string(a.D->M());
    j["N"] = to_string(a.D->N());
  }
  if (!a.message.empty()) j["message"] = a.message;
  if (a.status == Status::Solved) {
    j["factor"] = factor_json(*a.result.factor);
    j["residual"] = a.residual;
    j["foundAt"] = settings_json(*a.result.foundAt);
    j["mvec"] = a.result.mvec;
  }
  if (a.status == Status::Solved || a.status == Status::NotFound || a.status == Status::Timeout) {
    j["report"] = report_json(a.result.report);
  }
  return j;
}

void print_failure(const Attempt& a, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.json) {
    out << attempt_json(a).dump(2) << "\n";
    return;
  }
  if (a.status == Status::NotFound) {
    out << "could not find an integrating factor\n";
  } else if (a.status == Status::Timeout) {
    out << a.message << " after " << a.result.report.candidatesTried << " candidates\n";
  } else {
    err << "error: " << a.message << "\n";
  }
}

std::string times(const std::string& R, const Poly2& p) {
  const std::string ps = "(" + to_string(p) + ")";
  return R == "1" ? ps : R + "*" + ps;
}

ordered_json trajectory_json(const TrajectoryCheck& t) {
  ordered_json pts = ordered_json::array();
  for (const auto& p : t.samplePoints) pts.push_back({p.x, p.y});
  return {{"basePoint", {t.basePoint.x, t.basePoint.y}},
          {"samplePoints", pts},
          {"integralValues", t.integralValues},
          {"maxRelDeviation", t.maxRelDeviation}};
}

int solve_and_print(const std::string& text, const CliConfig& cfg, bool firstIntegral,
                    std::ostream& out, std::ostream& err) {
  const Attempt a = solve(text, cfg);
  if (a.status != Status::Solved) {
    print_failure(a, cfg, out, err);
    return exit_code(a.status);
  }
  const IntegratingFactor& R = *a.result.factor;
  ordered_json j = attempt_json(a);
  std::ostringstream text_out;
  text_out << "For the ODE in the form\n"
           << render_ode(*a.ode) << "\n"
           << "the integrating factor will be\n"
           << to_string(R) << "\n"
           << "residual: " << a.residual << "\n";

  if (firstIntegral) {
    std::optional<Point> base = cfg.basePoint ? cfg.basePoint : default_base_point(*a.D, R);
    const std::string Rs = to_string(R);
    const std::string RM = times(Rs, a.D->M());
    const std::string RN = times(Rs, a.D->N());
    ordered_json fi{{"RM", RM}, {"RN", RN}, {"omega", "(" + RM + ") dx - (" + RN + ") dy"}};
    text_out << "omega = (" << RM << ") dx - (" << RN << ") dy\n";
    if (base) {
      const std::string x0 = fmt(base->x);
      const std::string y0 = fmt(base->y);
      const std::string I = "Int((" + RM + ")[y = " + y0 + "], x = " + x0 + " .. x) - Int(" + RN +
                            ", y = " + y0 + " .. y)";
      fi["basePoint"] = {base->x, base->y};
      fi["I"] = I;
      text_out << "I(x, y) = " << I << "\n";
    } else {
      text_out << "no regular base point found on the default lattice; pass --base x,y\n";
    }
    if (cfg.numcheck) {
      ordered_json nc;
      if (!base) {
        nc = {{"error", "no base point"}};
      } else {
        try {
          nc = trajectory_json(trajectory_constancy(*a.D, R, *base, cfg.tSpan, cfg.nSamples));
        } catch (const Error& e) {
          nc = {{"error", e.what()}};
        }
      }
      fi["numcheck"] = nc;
      text_out << "numcheck: " << nc.dump() << "\n";
    }
    j["firstIntegral"] = fi;
  }
  if (cfg.json) {
    out << j.dump(2) << "\n";
  } else {
    out << text_out.str();
  }
  return kOk;
}

}  // namespace

Point parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected x,y");
  auto coord = [](const std::string& s) {
    const RationalFn f = parse_expression(s);
    if (!f.num().is_constant() || !f.den().is_constant()) {
      throw std::invalid_argument("base point coordinates must be numbers");
    }
    return BigRational(f.num().leading_coeff() / f.den().leading_coeff()).get_d();
  };
  const std::string xs = trim(text.substr(0, comma));
  const std::string ys = trim(text.substr(comma + 1));
  return {xs.empty() ? 0.0 : coord(xs), ys.empty() ? 0.0 : coord(ys)};
}

int cmd_intfact(const std::string& ode, const CliConfig& cfg, std::ostream& out,
                std::ostream& err) {
  return solve_and_print(ode, cfg, false, out, err);
}

int cmd_lsolve(const std::string& ode, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return solve_and_print(ode, cfg, true, out, err);
}

int cmd_darboux(const std::string& ode, const CliConfig& cfg, std::ostream& out,
                std::ostream& err) {
  Attempt a = load(ode);
  if (a.status != Status::Solved) {
    err << "error: " << a.message << "\n";
    return kInputError;
  }
  DarbouxSet set;
  try {
    set = find_darboux(*a.D, cfg.deg, Deadline(std::chrono::seconds(cfg.timeoutSeconds)));
  } catch (const Timeout&) {
    err << "time limit of " << cfg.timeoutSeconds << " s exceeded\n";
    return kTimeout;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (cfg.json) {
    ordered_json pairs = ordered_json::array();
    for (const auto& p : set.pairs) {
      pairs.push_back({{"v", to_string(p.v)}, {"lambda", to_string(p.lambda)}});
    }
    ordered_json j{{"ode", render_ode(*a.ode)},
                   {"deg", cfg.deg},
                   {"complete", set.complete},
                   {"pairs", pairs}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  if (set.pairs.empty()) {
    out << "[]\n";
  } else {
    std::string vs;
    std::string ls;
    for (const auto& p : set.pairs) {
      vs += (vs.empty() ? "" : ", ") + to_string(p.v);
      ls += (ls.empty() ? "" : ", ") + to_string(p.lambda);
    }
    out << "[[" << vs << "],[" << ls << "]]\n";
  }
  if (!set.complete) {
    err << "note: a continuous family of Darboux polynomials exists; only representatives are listed\n";
  }
  return kOk;
}

int cmd_ldop(const std::string& ode, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  Attempt a = load(ode);
  if (a.status != Status::Solved) {
    err << "error: " << a.message << "\n";
    return kInputError;
  }
  if (cfg.json) {
    ordered_json j{{"N", to_string(a.D->N())},
                   {"M", to_string(a.D->M())},
                   {"operator", a.D->to_string()}};
    out << j.dump(2) << "\n";
  } else {
    out << a.D->to_string() << "\n";
  }
  return kOk;
}

namespace {

struct CorpusEntry {
  std::size_t line = 0;
  std::string ode;
  CliConfig cfg;
  std::string expect = "any";
  std::string optionError;
};

CorpusEntry parse_corpus_line(std::size_t lineNo, const std::string& raw, const CliConfig& base) {
  CorpusEntry e;
  e.line = lineNo;
  e.cfg = base;
  std::vector<std::string> fields;
  std::size_t from = 0;
  while (true) {
    const auto bar = raw.find('|', from);
    fields.push_back(trim(raw.substr(from, bar == std::string::npos ? bar : bar - from)));
    if (bar == std::string::npos) break;
    from = bar + 1;
  }
  e.ode = fields.front();
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const auto eq = fields[i].find('=');
    const std::string key = trim(fields[i].substr(0, eq));
    const std::string val = eq == std::string::npos ? "" : trim(fields[i].substr(eq + 1));
    try {
      if (key == "deg") {
        e.cfg.deg = std::stoi(val);
      } else if (key == "deg-q" || key == "degQ") {
        e.cfg.degQ = std::stoi(val);
      } else if (key == "deg-p" || key == "degP") {
        e.cfg.degP = std::stoi(val);
      } else if (key == "expect" && (val == "solved" || val == "notfound" || val == "any")) {
        e.expect = val;
      } else {
        e.optionError = "unknown option '" + fields[i] + "'";
      }
    } catch (const std::exception&) {
      e.optionError = "bad value in '" + fields[i] + "'";
    }
  }
  return e;
}

}  // namespace

int cmd_corpus(const std::string& path, const CliConfig& cfg, std::ostream& out,
               std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    return kInputError;
  }
  std::vector<CorpusEntry> entries;
  std::string raw;
  for (std::size_t lineNo = 1; std::getline(in, raw); ++lineNo) {
    const auto hash = raw.find('#');
    const std::string body = trim(raw.substr(0, hash));
    if (body.empty()) continue;
    entries.push_back(parse_corpus_line(lineNo, body, cfg));
  }

  ordered_json rows = ordered_json::array();
  std::size_t solved = 0;
  bool failed = false;
  for (const auto& e : entries) {
    Attempt a;
    if (!e.optionError.empty()) {
      a.status = Status::InputError;
      a.message = e.optionError;
    } else {
      a = solve(e.ode, e.cfg);
    }
    if (a.status == Status::Solved) ++solved;
    if ((e.expect == "solved" && a.status != Status::Solved) ||
        (e.expect == "notfound" && a.status != Status::NotFound)) {
      failed = true;
    }
    ordered_json j = attempt_json(a);
    j.erase("report");
    ordered_json row{{"line", e.line}, {"source", e.ode}, {"expect", e.expect}};
    for (const auto& el : j.items()) row[el.key()] = el.value();
    row["seconds"] = a.seconds;
    rows.push_back(std::move(row));

    if (!cfg.json) {
      out << "line " << e.line << " | " << status_name(a.status) << " | " << fmt(a.seconds)
          << " s | ";
      if (a.status == Status::Solved) {
        out << "residual " << a.residual << " | R = " << to_string(*a.result.factor);
      } else {
        out << (a.message.empty() ? "-" : a.message);
      }
      out << " | " << e.ode << "\n";
    }
  }
  if (cfg.json) {
    ordered_json j{{"entries", rows}, {"solved", solved}, {"total", entries.size()}};
    out << j.dump(2) << "\n";
  } else {
    out << "solved " << solved << "/" << entries.size() << "\n";
  }
  return failed ? kCorpusFailure : kOk;
}

}  // namespace liouv::cli
