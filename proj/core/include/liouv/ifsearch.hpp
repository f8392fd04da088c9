#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "liouv/darboux.hpp"
#include "liouv/deadline.hpp"
#include "liouv/exactla.hpp"
#include "liouv/integrating_factor.hpp"

namespace liouv {

/// Multiplicities m_i of the pool members in Q = prod v_i^m_i; 0 = absent.
using ExponentVector = std::vector<unsigned>;

/// Every vector with sum m_i * deg(v_i) <= degQ, ordered by that weighted
/// degree and then lexicographically. Always contains the zero vector.
std::vector<ExponentVector> enumerate_exponents(const std::vector<DarbouxPair>& pool, int degQ);

/// Coefficient equations of
///   D[P] - P * sum m_i lambda_i + Q * (sum c_j lambda_j + dN/dx + dM/dy) = 0
/// in the unknowns a1.. (coefficients of P on monomials_up_to(degP)) and
/// n1.. (one exponent c_j per pool member). Rows follow descending monomial
/// order; exact duplicate rows are dropped.
LinSystem assemble_system(const DOperator& D, const std::vector<DarbouxPair>& pool,
                          const ExponentVector& mvec, int degP);

struct DegreeSettings {
  int deg = 1;   // Darboux polynomial degree
  int degQ = 5;
  int degP = 5;
  friend bool operator==(const DegreeSettings&, const DegreeSettings&) = default;
};

enum class Outcome { Inconsistent, TrivialOnly, Rejected, Success };

const char* to_string(Outcome o);

struct SystemRecord {
  DegreeSettings settings;
  ExponentVector mvec;
  std::size_t rows = 0;
  std::size_t cols = 0;
  Outcome outcome = Outcome::Inconsistent;
};

struct SolveReport {
  std::vector<DegreeSettings> degreesTried;
  std::size_t candidatesTried = 0;
  std::vector<SystemRecord> systems;
  std::chrono::duration<double> elapsed{0};
};

struct SearchResult {
  std::optional<IntegratingFactor> factor;
  SolveReport report;
  /// Set on success.
  std::optional<DegreeSettings> foundAt;
  ExponentVector mvec;
  /// Darboux polynomials the successful (or last) step worked with.
  DarbouxSet pool;

  bool found() const { return factor.has_value(); }
};

/// Raised when the deadline passes mid-search; carries the partial report.
class SearchTimeout : public Timeout {
 public:
  explicit SearchTimeout(SolveReport r) : report(std::move(r)) {}
  SolveReport report;
};

/// One (deg, degQ, degP) level with a precomputed pool.
SearchResult search_with_pool(const DOperator& D, const DarbouxSet& pool, int degQ, int degP,
                              const Deadline& deadline = {}, int deg = 1);

SearchResult search(const DOperator& D, int deg, int degQ, int degP,
                    const Deadline& deadline = {});

/// (1,1,1), (1,2,2), ..., (1,5,5), (2,2,2), ..., (2,5,5).
std::vector<DegreeSettings> default_schedule();

/// Schedule capped by user limits: for each Darboux degree d <= deg, the
/// ladder k = 1.. (k = 2.. for d >= 2) with (d, min(k, degQ), min(k, degP)).
std::vector<DegreeSettings> make_schedule(int deg, int degQ, int degP);

SearchResult auto_search(const DOperator& D, const std::vector<DegreeSettings>& schedule,
                         const Deadline& deadline = {});

}  // namespace liouv
