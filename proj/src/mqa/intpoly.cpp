#include "intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace mqa {

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
  IntPolynomial p;
  p.add_term({}, c);
  return p;
}

IntPolynomial IntPolynomial::variable(uint32_t v) {
  IntPolynomial p;
  p.add_term({{v, 1}}, 1);
  return p;
}

IntPolynomial IntPolynomial::monomial(const ExpVec& e, const mpz_class& c) {
  IntPolynomial p;
  p.add_term(e, c);
  return p;
}

void IntPolynomial::add_term(const ExpVec& e, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

uint64_t IntPolynomial::degree() const {
  uint64_t d = 0;
  for (auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

mpz_class IntPolynomial::constant_term() const {
  auto it = terms_.find({});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

bool IntPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

uint32_t IntPolynomial::max_var_index() const {
  uint32_t m = 0;
  for (auto& [e, c] : terms_)
    if (!e.empty()) m = std::max(m, e.back().first + 1);
  return m;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

static ExpVec exp_mul(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  IntPolynomial r;
  for (auto& [ea, ca] : terms_)
    for (auto& [eb, cb] : o.terms_) r.add_term(exp_mul(ea, eb), ca * cb);
  return r;
}

mpz_class IntPolynomial::evaluate(const std::vector<mpz_class>& point) const {
  mpz_class acc = 0;
  for (auto& [e, c] : terms_) {
    mpz_class v = c;
    for (auto& [var, exp] : e) {
      require(var < point.size(), ErrorKind::invalid_argument,
              "evaluate: unassigned variable index " + std::to_string(var));
      for (uint32_t k = 0; k < exp; ++k) v *= point[var];
      if (v == 0) break;
    }
    acc += v;
  }
  return acc;
}

IntPolynomial IntPolynomial::squarefree_reduced() const {
  IntPolynomial r;
  for (auto& [e, c] : terms_) {
    ExpVec e2 = e;
    for (auto& p : e2) p.second = 1;
    r.add_term(e2, c);
  }
  return r;
}

IntPolynomial IntPolynomial::substitute(uint32_t v, const mpz_class& value) const {
  IntPolynomial r;
  for (auto& [e, c] : terms_) {
    ExpVec e2;
    mpz_class c2 = c;
    for (auto& [var, exp] : e) {
      if (var == v) {
        for (uint32_t k = 0; k < exp && c2 != 0; ++k) c2 *= value;
      } else {
        e2.emplace_back(var, exp);
      }
    }
    r.add_term(e2, c2);
  }
  return r;
}

IntPolynomial IntPolynomial::rename_vars(const std::vector<uint32_t>& new_index) const {
  IntPolynomial r;
  for (auto& [e, c] : terms_) {
    ExpVec e2;
    for (auto& [var, exp] : e) {
      require(var < new_index.size(), ErrorKind::invalid_argument, "rename_vars: index out of map");
      e2.emplace_back(new_index[var], exp);
    }
    std::sort(e2.begin(), e2.end());
    r.add_term(e2, c);
  }
  return r;
}

std::string monomial_to_string(const ExpVec& e, const std::vector<std::string>& names) {
  if (e.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [var, exp] : e) {
    if (!first) os << "*";
    first = false;
    if (var < names.size())
      os << names[var];
    else
      os << "v" << var;
    if (exp > 1) os << "^" << exp;
  }
  return os.str();
}

std::string IntPolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << monomial_to_string(e, names);
    }
  }
  return os.str();
}

}  // namespace mqa
