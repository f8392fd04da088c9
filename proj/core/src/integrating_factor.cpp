#include "liouv/integrating_factor.hpp"

namespace liouv {

Poly2 IntegratingFactor::Q() const {
  Poly2 q(1);
  for (const auto& f : Qfactors) q *= pow(f.v, f.m);
  return q;
}

namespace {

// Wraps anything that is not a single bare monomial.
std::string atom(const Poly2& p) {
  std::string s = to_string(p);
  const bool bare = p.size() == 1 && p.leading_coeff() == 1;
  return bare ? s : "(" + s + ")";
}

std::string power(const Poly2& v, const std::string& exponent) {
  if (exponent == "1") return atom(v);
  const bool simple = exponent.find_first_of("-/") == std::string::npos;
  return atom(v) + "^" + (simple ? exponent : "(" + exponent + ")");
}

}  // namespace

std::string to_string(const IntegratingFactor& R) {
  std::vector<std::string> parts;
  if (!R.P.is_zero()) {
    std::string e = R.Qfactors.empty() ? to_string(R.P) : atom(R.P);
    if (!R.Qfactors.empty()) {
      std::string q;
      for (const auto& f : R.Qfactors) {
        if (!q.empty()) q += "*";
        q += power(f.v, std::to_string(f.m));
      }
      e += "/" + (R.Qfactors.size() > 1 ? "(" + q + ")" : q);
    }
    parts.push_back("exp(" + e + ")");
  }
  for (const auto& f : R.Sfactors) parts.push_back(power(f.v, f.c.get_str()));
  if (parts.empty()) return "1";
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

}  // namespace liouv
