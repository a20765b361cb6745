#include "boolpoly.hpp"

#include <algorithm>
#include <sstream>

namespace mqa {

ExpVec monomial_exponents(const Monomial& m) {
  ExpVec e;
  e.reserve(m.size());
  for (uint32_t v : m) e.emplace_back(v, 1);
  return e;
}

bool monomial_drl_greater(const Monomial& a, const Monomial& b) {
  return drl_greater(monomial_exponents(a), monomial_exponents(b));
}

BooleanPolynomial::BooleanPolynomial(std::vector<Monomial> monos) {
  for (auto& m : monos) {
    require(std::is_sorted(m.begin(), m.end()) && std::adjacent_find(m.begin(), m.end()) == m.end(),
            ErrorKind::invalid_argument, "monomial indices must be strictly increasing");
    toggle_term(m);
  }
}

BooleanPolynomial BooleanPolynomial::one() {
  BooleanPolynomial p;
  p.toggle_term({});
  return p;
}

void BooleanPolynomial::toggle_term(const Monomial& m) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Monomial& a, const Monomial& b) { return monomial_drl_greater(a, b); });
  if (it != terms_.end() && *it == m)
    terms_.erase(it);
  else
    terms_.insert(it, m);
}

uint32_t BooleanPolynomial::degree() const {
  uint32_t d = 0;
  for (auto& m : terms_) d = std::max<uint32_t>(d, m.size());
  return d;
}

bool BooleanPolynomial::constant_term() const {
  for (auto& m : terms_)
    if (m.empty()) return true;
  return false;
}

BooleanPolynomial BooleanPolynomial::operator+(const BooleanPolynomial& o) const {
  BooleanPolynomial r = *this;
  for (auto& m : o.terms_) r.toggle_term(m);
  return r;
}

int BooleanPolynomial::evaluate(const std::vector<int>& point) const {
  int acc = 0;
  for (auto& m : terms_) {
    int v = 1;
    for (uint32_t var : m) {
      require(var < point.size(), ErrorKind::invalid_argument,
              "evaluate: unassigned variable index " + std::to_string(var));
      v &= point[var] & 1;
      if (!v) break;
    }
    acc ^= v;
  }
  return acc;
}

uint32_t BooleanPolynomial::max_var_index() const {
  uint32_t m = 0;
  for (auto& t : terms_)
    if (!t.empty()) m = std::max(m, t.back() + 1);
  return m;
}

IntPolynomial BooleanPolynomial::to_int() const {
  IntPolynomial p;
  for (auto& m : terms_) p.add_term(monomial_exponents(m), 1);
  return p;
}

std::string BooleanPolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& m : terms_) {
    if (!first) os << " + ";
    first = false;
    os << monomial_to_string(monomial_exponents(m), names);
  }
  return os.str();
}

BooleanPolynomial reduce_squarefree(const IntPolynomial& f) {
  BooleanPolynomial r;
  IntPolynomial sf = f.squarefree_reduced();
  for (auto& [e, c] : sf.terms()) {
    if (mpz_odd_p(c.get_mpz_t())) {
      Monomial m;
      for (auto& [var, exp] : e) m.push_back(var);
      r.toggle_term(m);
    }
  }
  return r;
}

BooleanSystem::BooleanSystem(std::vector<std::string> variables, std::vector<BooleanPolynomial> polys)
    : vars_(std::move(variables)), polys_(std::move(polys)) {
  for (auto& p : polys_)
    require(p.max_var_index() <= vars_.size(), ErrorKind::invalid_argument,
            "polynomial references undeclared variable");
}

uint32_t BooleanSystem::var_index(const std::string& name) const {
  for (uint32_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  fail(ErrorKind::invalid_argument, "unknown variable: " + name);
}

ContentStats BooleanSystem::content_stats() const {
  ContentStats s;
  s.n = vars_.size();
  s.r = polys_.size();
  for (auto& p : polys_) {
    s.T += p.sparseness();
    s.histogram[p.sparseness()]++;
  }
  return s;
}

std::string BooleanSystem::to_string() const {
  std::ostringstream os;
  for (auto& p : polys_) os << p.to_string(vars_) << "\n";
  return os.str();
}

std::vector<std::vector<int>> brute_force_f2_solutions(const BooleanSystem& F) {
  size_t n = F.num_vars();
  require(n <= 24, ErrorKind::resource_limit,
          "brute_force_f2_solutions: n = " + std::to_string(n) + " exceeds the n <= 24 guard");
  // mask per monomial: solution iff every polynomial has even popcount of satisfied monomials
  std::vector<std::vector<uint32_t>> masks(F.polynomials().size());
  for (size_t i = 0; i < F.polynomials().size(); ++i)
    for (auto& m : F.polynomials()[i].terms()) {
      uint32_t msk = 0;
      for (uint32_t v : m) msk |= (1u << v);
      masks[i].push_back(msk);
    }
  std::vector<std::vector<int>> out;
  for (uint64_t a = 0; a < (1ull << n); ++a) {
    bool ok = true;
    for (auto& pm : masks) {
      int acc = 0;
      for (uint32_t msk : pm) acc ^= ((a & msk) == msk);
      if (acc) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<int> pt(n);
      for (size_t i = 0; i < n; ++i) pt[i] = (a >> i) & 1;
      out.push_back(std::move(pt));
    }
  }
  return out;
}

}  // namespace mqa
