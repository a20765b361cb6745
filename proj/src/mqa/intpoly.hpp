#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"

namespace mqa {

// Sparse multivariate polynomial with exact integer coefficients.
// Terms are kept DRL-descending so iteration starts at the leading monomial.
class IntPolynomial {
 public:
  using TermMap = std::map<ExpVec, mpz_class, DrlDescending>;

  IntPolynomial() = default;
  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial variable(uint32_t v);
  static IntPolynomial monomial(const ExpVec& e, const mpz_class& c = 1);

  void add_term(const ExpVec& e, const mpz_class& c);

  bool is_zero() const { return terms_.empty(); }
  size_t sparseness() const { return terms_.size(); }
  uint64_t degree() const;  // 0 for the zero polynomial
  mpz_class constant_term() const;
  bool is_constant() const;
  uint32_t max_var_index() const;  // largest referenced var + 1, 0 if none

  const TermMap& terms() const { return terms_; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;

  mpz_class evaluate(const std::vector<mpz_class>& point) const;

  // x_i^m -> x_i for all m >= 1; equal reduced monomials merge.
  IntPolynomial squarefree_reduced() const;

  // Substitutes x_v = value (0 or 1 is all the solver needs, any mpz works).
  IntPolynomial substitute(uint32_t v, const mpz_class& value) const;

  // Remaps variable indices; vars absent from the map must not occur.
  IntPolynomial rename_vars(const std::vector<uint32_t>& new_index) const;

  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const IntPolynomial& o) const { return terms_ == o.terms_; }

 private:
  TermMap terms_;
};

// DRL leading monomial of a nonzero polynomial.
inline const ExpVec& leading_monomial(const IntPolynomial& f) {
  require(!f.is_zero(), ErrorKind::invalid_argument, "leading monomial of zero polynomial");
  return f.terms().begin()->first;
}

std::string monomial_to_string(const ExpVec& e, const std::vector<std::string>& names);

}  // namespace mqa
