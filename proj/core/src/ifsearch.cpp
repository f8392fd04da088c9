#include "liouv/ifsearch.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "liouv/errors.hpp"
#include "liouv/verify.hpp"

namespace liouv {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Inconsistent: return "inconsistent";
    case Outcome::TrivialOnly: return "trivialOnly";
    case Outcome::Rejected: return "rejected";
    case Outcome::Success: return "success";
  }
  return "?";
}

namespace {

unsigned weight(const std::vector<DarbouxPair>& pool, const ExponentVector& m) {
  unsigned w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) w += m[i] * static_cast<unsigned>(pool[i].v.degree());
  return w;
}

void extend(const std::vector<DarbouxPair>& pool, int budget, ExponentVector& cur,
            std::vector<ExponentVector>& out) {
  const std::size_t i = cur.size();
  if (i == pool.size()) {
    out.push_back(cur);
    return;
  }
  const int d = pool[i].v.degree();
  for (int m = 0; m * d <= budget; ++m) {
    cur.push_back(static_cast<unsigned>(m));
    extend(pool, budget - m * d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ExponentVector> enumerate_exponents(const std::vector<DarbouxPair>& pool, int degQ) {
  std::vector<ExponentVector> out;
  ExponentVector cur;
  extend(pool, std::max(degQ, 0), cur, out);
  std::stable_sort(out.begin(), out.end(), [&](const ExponentVector& a, const ExponentVector& b) {
    const unsigned wa = weight(pool, a);
    const unsigned wb = weight(pool, b);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return out;
}

LinSystem assemble_system(const DOperator& D, const std::vector<DarbouxPair>& pool,
                          const ExponentVector& mvec, int degP) {
  if (mvec.size() != pool.size()) throw std::invalid_argument("exponent vector size mismatch");

  Poly2 Q(1);
  Poly2 lambdaQ;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (mvec[i] == 0) continue;
    Q *= pow(pool[i].v, mvec[i]);
    lambdaQ += pool[i].lambda * BigRational(mvec[i]);
  }

  const std::vector<Monomial> pmons = monomials_up_to(degP);
  std::vector<Poly2> columns;
  LinSystem sys;
  for (std::size_t i = 0; i < pmons.size(); ++i) {
    const Poly2 mu(pmons[i], 1);
    columns.push_back(D.apply(mu) - mu * lambdaQ);
    sys.unknownNames.push_back("a" + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < pool.size(); ++j) {
    columns.push_back(Q * pool[j].lambda);
    sys.unknownNames.push_back("n" + std::to_string(j + 1));
  }
  const Poly2 rhs = -(Q * D.divergence());

  std::set<Monomial, GrlexGreater> rowMonomials;
  for (const auto& c : columns) {
    for (const auto& [m, v] : c.terms()) rowMonomials.insert(m);
  }
  for (const auto& [m, v] : rhs.terms()) rowMonomials.insert(m);

  std::set<std::vector<BigRational>> seen;
  for (const auto& m : rowMonomials) {
    std::vector<BigRational> row;
    row.reserve(columns.size() + 1);
    for (const auto& c : columns) row.push_back(c.coeff(m));
    row.push_back(rhs.coeff(m));
    if (!seen.insert(row).second) continue;
    BigRational b = row.back();
    row.pop_back();
    sys.matrix.push_back(std::move(row));
    sys.rhs.push_back(std::move(b));
  }
  return sys;
}

namespace {

// Builds R from a solved system and brings P/Q to lowest terms by lowering
// multiplicities of Q factors that divide P. Returns nullopt when a common
// factor cannot be attributed to the Q factors.
std::optional<IntegratingFactor> make_factor(const std::vector<DarbouxPair>& pool,
                                             const ExponentVector& mvec,
                                             const std::vector<BigRational>& x,
                                             const std::vector<Monomial>& pmons) {
  IntegratingFactor R;
  for (std::size_t i = 0; i < pmons.size(); ++i) R.P.add_term(pmons[i], x[i]);
  for (std::size_t j = 0; j < pool.size(); ++j) {
    const BigRational& c = x[pmons.size() + j];
    if (c != 0) R.Sfactors.push_back({pool[j].v, c});
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (mvec[i] > 0) R.Qfactors.push_back({pool[i].v, mvec[i]});
  }

  if (R.P.is_zero()) {
    R.Qfactors.clear();
    return R;
  }
  Poly2 g = gcd(R.P, R.Q());
  for (auto& f : R.Qfactors) {
    while (f.m > 0 && !g.is_constant()) {
      auto q = try_divexact(g, f.v);
      if (!q) break;
      g = *q;
      R.P = divexact(R.P, f.v);
      --f.m;
    }
  }
  if (!g.is_constant()) return std::nullopt;
  std::erase_if(R.Qfactors, [](const QFactor& f) { return f.m == 0; });
  return R;
}

}  // namespace

SearchResult search_with_pool(const DOperator& D, const DarbouxSet& pool, int degQ, int degP,
                              const Deadline& deadline, int deg) {
  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  result.pool = pool;
  const DegreeSettings settings{deg, degQ, degP};
  result.report.degreesTried.push_back(settings);
  const std::vector<Monomial> pmons = monomials_up_to(degP);
  const bool divergenceFree = D.divergence().is_zero();

  auto finish = [&]() {
    result.report.elapsed = std::chrono::steady_clock::now() - start;
    return result;
  };

  for (const auto& mvec : enumerate_exponents(pool.pairs, degQ)) {
    if (deadline.expired()) {
      finish();
      throw SearchTimeout(result.report);
    }
    ++result.report.candidatesTried;
    LinSystem sys = assemble_system(D, pool.pairs, mvec, degP);
    SystemRecord rec{settings, mvec, sys.rows(), sys.cols(), Outcome::Inconsistent};

    auto sol = try_solve_linear(sys);
    if (!sol) {
      result.report.systems.push_back(rec);
      continue;
    }
    auto R = make_factor(pool.pairs, mvec, zero_free_vars(*sol), pmons);
    if (!R) {
      rec.outcome = Outcome::Rejected;
    } else if (R->Qfactors.empty() && R->P.is_constant() && R->Sfactors.empty() &&
               !divergenceFree) {
      rec.outcome = Outcome::TrivialOnly;
    } else if (!check(D, *R).valid()) {
      rec.outcome = Outcome::Rejected;
    } else {
      rec.outcome = Outcome::Success;
      result.report.systems.push_back(rec);
      result.factor = std::move(R);
      result.foundAt = settings;
      result.mvec = mvec;
      return finish();
    }
    result.report.systems.push_back(rec);
  }
  return finish();
}

SearchResult search(const DOperator& D, int deg, int degQ, int degP, const Deadline& deadline) {
  DarbouxSet pool = find_darboux(D, deg, deadline);
  return search_with_pool(D, pool, degQ, degP, deadline, deg);
}

std::vector<DegreeSettings> default_schedule() { return make_schedule(2, 5, 5); }

std::vector<DegreeSettings> make_schedule(int deg, int degQ, int degP) {
  std::vector<DegreeSettings> out;
  const int top = std::max({degQ, degP, 1});
  for (int d = 1; d <= deg; ++d) {
    for (int k = d == 1 ? 1 : 2; k <= top; ++k) {
      DegreeSettings s{d, std::min(k, degQ), std::min(k, degP)};
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
  }
  return out;
}

SearchResult auto_search(const DOperator& D, const std::vector<DegreeSettings>& schedule,
                         const Deadline& deadline) {
  if (schedule.empty()) throw std::invalid_argument("empty search schedule");
  const auto start = std::chrono::steady_clock::now();
  std::map<int, DarbouxSet> pools;
  SolveReport total;
  SearchResult last;

  for (const auto& s : schedule) {
    try {
      auto it = pools.find(s.deg);
      if (it == pools.end()) it = pools.emplace(s.deg, find_darboux(D, s.deg, deadline)).first;
      last = search_with_pool(D, it->second, s.degQ, s.degP, deadline, s.deg);
    } catch (SearchTimeout& t) {
      total.degreesTried.insert(total.degreesTried.end(), t.report.degreesTried.begin(),
                                t.report.degreesTried.end());
      total.candidatesTried += t.report.candidatesTried;
      total.systems.insert(total.systems.end(), t.report.systems.begin(), t.report.systems.end());
      total.elapsed = std::chrono::steady_clock::now() - start;
      throw SearchTimeout(total);
    } catch (const Timeout&) {
      total.elapsed = std::chrono::steady_clock::now() - start;
      throw SearchTimeout(total);
    }
    total.degreesTried.push_back(s);
    total.candidatesTried += last.report.candidatesTried;
    total.systems.insert(total.systems.end(), last.report.systems.begin(),
                         last.report.systems.end());
    if (last.found()) break;
  }
  total.elapsed = std::chrono::steady_clock::now() - start;
  last.report = std::move(total);
  return last;
}

}  // namespace liouv
