#include "lift.hpp"

#include <json.hpp>

namespace mqa {

uint64_t split_aux_count(uint64_t t, uint64_t s) {
  if (t <= s) return 0;
  return (t - s + (s - 2) - 1) / (s - 2);
}

SplitResult split(const BooleanPolynomial& f, uint64_t s, uint32_t aux_base) {
  require(s >= 3, ErrorKind::invalid_argument, "split requires s >= 3");
  SplitResult r;
  uint64_t t = f.sparseness();
  if (t <= s) {
    r.pieces.push_back(f);
    return r;
  }
  const auto& m = f.terms();  // DRL-descending
  uint64_t St = split_aux_count(t, s);
  r.num_aux = St;
  auto aux = [&](uint64_t j) { return Monomial{aux_base + static_cast<uint32_t>(j - 1)}; };  // u_j

  BooleanPolynomial first;
  for (uint64_t k = 0; k + 1 <= s - 1; ++k) first.toggle_term(m[k]);
  first.toggle_term(aux(1));
  r.pieces.push_back(first);
  for (uint64_t j = 2; j <= St; ++j) {
    BooleanPolynomial piece;
    // terms m_k for k = (j-1)(s-2)+2 .. j(s-2)+1, 1-based
    for (uint64_t k = (j - 1) * (s - 2) + 2; k <= j * (s - 2) + 1; ++k) piece.toggle_term(m[k - 1]);
    piece.toggle_term(aux(j - 1));
    piece.toggle_term(aux(j));
    r.pieces.push_back(piece);
  }
  BooleanPolynomial last;
  for (uint64_t k = St * (s - 2) + 2; k <= t; ++k) last.toggle_term(m[k - 1]);
  last.toggle_term(aux(St));
  r.pieces.push_back(last);
  return r;
}

IntPolynomial c_lift(const BooleanPolynomial& f) {
  if (f.is_zero()) return {};
  uint64_t t = f.sparseness();
  uint64_t k0 = f.constant_term() ? 1 : 0;
  IntPolynomial fi = f.to_int();
  IntPolynomial prod = IntPolynomial::constant(1);
  for (uint64_t k = k0; k <= t / 2; ++k) prod = prod * (fi - IntPolynomial::constant(2 * mpz_class(static_cast<unsigned long>(k))));
  return prod;
}

static ExpVec squarefree_product(const Monomial& a, const Monomial& b) {
  Monomial u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return monomial_exponents(u);
}

IntPolynomial chat_lift(const BooleanPolynomial& f) {
  uint64_t t = f.sparseness();
  require(t <= 3, ErrorKind::invalid_argument, "chat_lift requires #f <= 3");
  if (t == 0) return {};
  const auto& m = f.terms();
  if (t == 1) return f.to_int();
  if (t == 2) {
    IntPolynomial p;
    p.add_term(monomial_exponents(m[0]), 1);
    p.add_term(monomial_exponents(m[1]), -1);
    return p;
  }
  if (f.constant_term()) return f.to_int() - IntPolynomial::constant(2);
  IntPolynomial p;
  p.add_term(squarefree_product(m[0], m[1]), 2);
  p.add_term(squarefree_product(m[0], m[2]), 2);
  p.add_term(squarefree_product(m[1], m[2]), 2);
  for (int i = 0; i < 3; ++i) p.add_term(monomial_exponents(m[i]), -1);
  return p;
}

LiftResult lift_system(const BooleanSystem& F, uint64_t s) {
  require(s >= 3, ErrorKind::invalid_argument, "lift_system requires s >= 3");
  LiftResult lr;
  lr.num_original_vars = static_cast<uint32_t>(F.num_vars());
  lr.system.variables = F.variables();
  uint32_t aux_next = lr.num_original_vars;
  lr.split_map.resize(F.polynomials().size());
  for (size_t i = 0; i < F.polynomials().size(); ++i) {
    const auto& f = F.polynomials()[i];
    if (f.is_zero()) continue;
    SplitResult sr = split(f, s, aux_next);
    for (uint64_t j = 1; j <= sr.num_aux; ++j) {
      std::string name = "u" + std::to_string(i) + "_" + std::to_string(j);
      lr.auxiliary_vars.push_back(name);
      lr.system.variables.push_back(name);
    }
    aux_next += static_cast<uint32_t>(sr.num_aux);
    for (auto& piece : sr.pieces) {
      lr.split_map[i].push_back(lr.system.polynomials.size());
      lr.system.polynomials.push_back(s == 3 ? chat_lift(piece) : c_lift(piece));
    }
  }
  return lr;
}

std::string lift_result_meta_json(const LiftResult& lr) {
  nlohmann::json j;
  j["original_vars"] = lr.num_original_vars;
  j["auxiliary_vars"] = lr.auxiliary_vars;
  j["split_map"] = lr.split_map;
  return j.dump();
}

}  // namespace mqa
