#include "liouv/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liouv::elim {

int lex_compare(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

Exponents sub(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

MPoly::MPoly(std::size_t nvars, const BigRational& constant) : nvars_(nvars) {
  if (constant != 0) terms_.push_back({Exponents(nvars, 0), constant});
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  MPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_.push_back({std::move(e), 1});
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return degree_of(terms_.front().exp) == 0;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, degree_of(t.exp));
  return d;
}

bool MPoly::is_univariate_in(std::size_t index) const {
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (i != index && t.exp[i] != 0) return false;
    }
  }
  return true;
}

bool MPoly::involves(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.exp[index] != 0; });
}

void MPoly::subtract_scaled(const MPoly& g, const BigRational& c, const Exponents& shift) {
  if (c == 0 || g.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Exponents ge;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size()) ge = add(g.terms_[j].exp, shift);
    int cmp;
    if (i == terms_.size()) {
      cmp = -1;
    } else if (j == g.terms_.size()) {
      cmp = 1;
    } else {
      cmp = lex_compare(terms_[i].exp, ge);
    }
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({ge, -c * g.terms_[j++].coeff});
    } else {
      BigRational v = terms_[i].coeff - c * g.terms_[j].coeff;
      if (v != 0) out.push_back({std::move(terms_[i].exp), std::move(v)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  subtract_scaled(o, -1, Exponents(nvars_, 0));
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  subtract_scaled(o, 1, Exponents(nvars_, 0));
  return *this;
}

MPoly& MPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(a.nvars_);
  for (const auto& t : a.terms_) r.subtract_scaled(b, -t.coeff, t.exp);
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

MPoly MPoly::substitute(std::size_t index, const BigRational& value) const {
  MPoly r(nvars_);
  for (const auto& t : terms_) {
    MPoly term(nvars_);
    Exponents e = t.exp;
    BigRational c = t.coeff;
    for (std::uint16_t k = 0; k < e[index]; ++k) c *= value;
    if (c == 0) continue;
    e[index] = 0;
    term.terms_.push_back({std::move(e), std::move(c)});
    r += term;
  }
  return r;
}

BigRational MPoly::eval(const std::vector<BigRational>& point) const {
  BigRational s = 0;
  for (const auto& t : terms_) {
    BigRational v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint16_t k = 0; k < t.exp[i]; ++k) v *= point[i];
    }
    s += v;
  }
  return s;
}

Term MPoly::pop_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

void MPoly::make_monic() {
  if (terms_.empty()) return;
  BigRational inv = 1 / terms_.front().coeff;
  for (auto& t : terms_) t.coeff *= inv;
}

std::vector<BigRational> MPoly::univariate_coeffs(std::size_t index) const {
  if (!is_univariate_in(index)) throw std::logic_error("polynomial is not univariate");
  std::vector<BigRational> c;
  for (const auto& t : terms_) {
    if (c.size() <= t.exp[index]) c.resize(t.exp[index] + 1U, 0);
    c[t.exp[index]] += t.coeff;
  }
  return c;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff.get_str();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exp[i] == 0) continue;
      os << "*u" << i;
      if (t.exp[i] > 1) os << '^' << t.exp[i];
    }
  }
  return os.str();
}

MPoly normal_form(MPoly f, const std::vector<MPoly>& g) {
  MPoly rem(f.nvars());
  BigRational q;
  while (!f.is_zero()) {
    const Term& lt = f.leading();
    const MPoly* divisor = nullptr;
    for (const auto& h : g) {
      if (divides(h.leading().exp, lt.exp)) {
        divisor = &h;
        break;
      }
    }
    if (divisor != nullptr) {
      q = lt.coeff / divisor->leading().coeff;
      Exponents shift = sub(lt.exp, divisor->leading().exp);
      f.subtract_scaled(*divisor, q, shift);
    } else {
      rem.append_smaller(f.pop_leading());
    }
  }
  return rem;
}

namespace {

MPoly spoly(const MPoly& f, const MPoly& g) {
  Exponents l = lcm(f.leading().exp, g.leading().exp);
  MPoly s(f.nvars());
  s.subtract_scaled(f, -1 / f.leading().coeff, sub(l, f.leading().exp));
  s.subtract_scaled(g, 1 / g.leading().coeff, sub(l, g.leading().exp));
  return s;
}

}  // namespace

std::vector<MPoly> groebner_basis(std::vector<MPoly> gens, const Deadline& deadline) {
  std::vector<MPoly> basis;
  std::size_t nvars = gens.empty() ? 0 : gens.front().nvars();
  for (auto& f : gens) {
    if (f.is_zero()) continue;
    if (f.is_constant()) return {MPoly(nvars, 1)};
    f.make_monic();
    basis.push_back(std::move(f));
  }
  if (basis.empty()) return {};

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);
  }
  auto in_queue = [&](std::size_t a, std::size_t b) {
    return pairs.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pairs.empty()) {
    deadline.check();
    // Normal strategy: smallest lcm by total degree, then lex.
    auto best = pairs.begin();
    Exponents bestLcm = lcm(basis[best->first].leading().exp, basis[best->second].leading().exp);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Exponents l = lcm(basis[it->first].leading().exp, basis[it->second].leading().exp);
      int dl = degree_of(l);
      int db = degree_of(bestLcm);
      if (dl < db || (dl == db && lex_compare(l, bestLcm) < 0)) {
        best = it;
        bestLcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pairs.erase(best);

    const Exponents& li = basis[i].leading().exp;
    const Exponents& lj = basis[j].leading().exp;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (divides(basis[k].leading().exp, bestLcm) && !in_queue(i, k) && !in_queue(j, k)) {
        chain = true;
      }
    }
    if (chain) continue;

    MPoly r = normal_form(spoly(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {MPoly(nvars, 1)};
    r.make_monic();
    basis.push_back(std::move(r));
    const std::size_t n = basis.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pairs.emplace(k, n);
  }

  // Minimal basis, then interreduce.
  std::vector<MPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      const auto& lk = basis[k].leading().exp;
      const auto& lii = basis[i].leading().exp;
      if (divides(lk, lii) && (lk != lii || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<MPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    deadline.check();
    std::vector<MPoly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    MPoly tail = minimal[i];
    MPoly r(nvars);
    r.append_smaller(tail.pop_leading());
    const MPoly rest = normal_form(std::move(tail), others);
    for (const auto& t : rest.terms()) r.append_smaller(t);
    r.make_monic();
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [](const MPoly& a, const MPoly& b) {
    return lex_compare(a.leading().exp, b.leading().exp) > 0;
  });
  return reduced;
}

namespace {

BigInteger pollard_rho(const BigInteger& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInteger x = 2;
    BigInteger y = 2;
    BigInteger d = 1;
    auto step = [&](BigInteger& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      BigInteger diff = x - y;
      d = liouv::gcd(abs(diff), n);
    }
    if (d != n) return d;
  }
}

void factor_into(BigInteger n, std::vector<BigInteger>& primes) {
  for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  std::vector<BigInteger> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    BigInteger m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) != 0) {
      primes.push_back(m);
      continue;
    }
    BigInteger d = pollard_rho(m);
    stack.push_back(d);
    stack.push_back(m / d);
  }
}

std::vector<BigInteger> positive_divisors(const BigInteger& n) {
  std::vector<BigInteger> primes;
  factor_into(abs(n), primes);
  std::sort(primes.begin(), primes.end());
  std::vector<BigInteger> divs{1};
  std::size_t i = 0;
  while (i < primes.size()) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    const std::size_t count = divs.size();
    BigInteger pk = 1;
    for (std::size_t e = 0; e < j - i; ++e) {
      pk *= primes[i];
      for (std::size_t k = 0; k < count; ++k) divs.push_back(divs[k] * pk);
    }
    i = j;
  }
  return divs;
}

}  // namespace

std::vector<BigRational> rational_roots(const std::vector<BigRational>& coeffs) {
  BigInteger den = 1;
  for (const auto& c : coeffs) den = liouv::lcm(den, c.get_den());
  std::vector<BigInteger> a;
  for (const auto& c : coeffs) {
    BigRational s = c * den;
    a.push_back(s.get_num());
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  if (a.empty()) throw std::invalid_argument("rational_roots of the zero polynomial");

  std::vector<BigRational> roots;
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(low));
  }
  const std::size_t n = a.size() - 1;
  if (n == 0) return roots;

  auto is_root = [&](const BigInteger& p, const BigInteger& q) {
    // sum a_i p^i q^(n-i)
    BigInteger s = 0;
    BigInteger pp = 1;
    std::vector<BigInteger> qpow(n + 1);
    qpow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * q;
    for (std::size_t i = 0; i <= n; ++i) {
      s += a[i] * pp * qpow[n - i];
      pp *= p;
    }
    return s == 0;
  };

  const auto ps = positive_divisors(a.front());
  const auto qs = positive_divisors(a.back());
  for (const auto& q : qs) {
    for (const auto& p : ps) {
      if (liouv::gcd(p, q) != 1) continue;
      for (int sign : {1, -1}) {
        BigInteger sp = p * sign;
        if (is_root(sp, q)) roots.push_back(make_rational(sp, q));
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

struct PointSearch {
  std::size_t nvars;
  const Deadline& deadline;
  RationalPoints out;

  // Returns true when at least one point was produced below this node.
  bool recurse(const std::vector<MPoly>& eqs, std::vector<BigRational>& values,
               std::vector<bool>& assigned) {
    deadline.check();
    std::vector<MPoly> g = groebner_basis(eqs, deadline);
    if (g.size() == 1 && g.front().is_constant()) return false;

    std::size_t var = nvars;
    for (std::size_t k = nvars; k-- > 0;) {
      if (!assigned[k]) {
        var = k;
        break;
      }
    }
    if (var == nvars) {
      out.points.push_back(values);
      return true;
    }

    const MPoly* elim = nullptr;
    for (const auto& p : g) {
      if (p.is_univariate_in(var) && !p.is_constant()) {
        elim = &p;
        break;
      }
    }

    auto branch = [&](const BigRational& v) {
      std::vector<MPoly> sub;
      sub.reserve(g.size());
      for (const auto& p : g) sub.push_back(p.substitute(var, v));
      values[var] = v;
      assigned[var] = true;
      bool found = recurse(sub, values, assigned);
      assigned[var] = false;
      values[var] = 0;
      return found;
    };

    bool found = false;
    if (elim != nullptr) {
      for (const auto& r : rational_roots(elim->univariate_coeffs(var))) found |= branch(r);
      return found;
    }
    out.complete = false;
    found |= branch(0);
    found |= branch(1);
    for (long v : {-1L, 2L, -2L, 3L}) {
      if (found) break;
      found |= branch(v);
    }
    return found;
  }
};

}  // namespace

RationalPoints rational_points(const std::vector<MPoly>& eqs, std::size_t nvars,
                               const Deadline& deadline) {
  PointSearch search{nvars, deadline, {}};
  std::vector<BigRational> values(nvars, 0);
  std::vector<bool> assigned(nvars, false);
  search.recurse(eqs, values, assigned);
  auto& pts = search.out.points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return search.out;
}

}  // namespace liouv::elim
