#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "common.hpp"
#include "intpoly.hpp"

namespace mqa {

// Squarefree monomial: strictly increasing variable indices; empty = 1.
using Monomial = std::vector<uint32_t>;

ExpVec monomial_exponents(const Monomial& m);
bool monomial_drl_greater(const Monomial& a, const Monomial& b);

// Element of R_2[X] = F_2[X]/(x_i^2 - x_i): a set of squarefree monomials,
// all coefficients 1. Canonical term order is DRL-descending.
class BooleanPolynomial {
 public:
  BooleanPolynomial() = default;
  explicit BooleanPolynomial(std::vector<Monomial> monos);

  static BooleanPolynomial zero() { return {}; }
  static BooleanPolynomial one();

  // XOR of term sets (addition over F_2).
  void toggle_term(const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].empty(); }
  size_t sparseness() const { return terms_.size(); }
  uint32_t degree() const;
  bool constant_term() const;  // f(0)

  const std::vector<Monomial>& terms() const { return terms_; }

  BooleanPolynomial operator+(const BooleanPolynomial& o) const;

  // point[i] in {0,1}; every referenced variable must be assigned.
  int evaluate(const std::vector<int>& point) const;

  uint32_t max_var_index() const;

  // Coefficient-1 image in Z[X] (each F_2 term becomes an integer term).
  IntPolynomial to_int() const;

  std::string to_string(const std::vector<std::string>& names) const;
  bool operator==(const BooleanPolynomial& o) const { return terms_ == o.terms_; }

 private:
  std::vector<Monomial> terms_;  // DRL-descending, no duplicates
};

// Collapses arbitrary exponents to squarefree form and cancels mod 2.
// Input given as (monomial with exponents, parity-count) pairs via IntPolynomial:
// a term with even coefficient vanishes, odd survives.
BooleanPolynomial reduce_squarefree(const IntPolynomial& f);

struct ContentStats {
  uint64_t n = 0;  // variable count
  uint64_t r = 0;  // equation count
  uint64_t T = 0;  // total sparseness
  std::map<uint64_t, uint64_t> histogram;  // s -> r_s
};

class BooleanSystem {
 public:
  BooleanSystem() = default;
  BooleanSystem(std::vector<std::string> variables, std::vector<BooleanPolynomial> polys);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<BooleanPolynomial>& polynomials() const { return polys_; }
  size_t num_vars() const { return vars_.size(); }

  uint32_t var_index(const std::string& name) const;  // throws if unknown

  ContentStats content_stats() const;

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::vector<BooleanPolynomial> polys_;
};

// Exhaustive V_{F_2}(F); guard n <= 24.
std::vector<std::vector<int>> brute_force_f2_solutions(const BooleanSystem& F);

}  // namespace mqa
