#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boolpoly.hpp"
#include "intpoly.hpp"
#include "json_io.hpp"

namespace mqa {

// ceil((t-s)/(s-2)) with the convention that nonpositive arguments give 0.
uint64_t split_aux_count(uint64_t t, uint64_t s);

struct SplitResult {
  std::vector<BooleanPolynomial> pieces;  // each at most s-sparse
  uint64_t num_aux = 0;                   // auxiliaries u_1..u_num_aux
};

// Chains f into s-sparse pieces over X plus fresh variables
// aux_base, aux_base+1, ... (u_1, u_2, ... in order). Terms are taken in
// DRL-descending order. Pieces sum to f mod 2 (auxiliaries cancel pairwise).
SplitResult split(const BooleanPolynomial& f, uint64_t s, uint32_t aux_base);

// C(f) = prod_{k=f(0)}^{floor(t/2)} (f - 2k), expanded over Z.
IntPolynomial c_lift(const BooleanPolynomial& f);

// 6-sparse lift for #f <= 3; monomial products are squarefree-reduced.
IntPolynomial chat_lift(const BooleanPolynomial& f);

struct LiftResult {
  IntSystem system;                            // over X then auxiliaries
  uint32_t num_original_vars = 0;              // #X
  std::vector<std::string> auxiliary_vars;     // names, in variable order
  std::vector<std::vector<size_t>> split_map;  // input poly -> output indices
};

// P(F,s) = C(S(F,s)); s = 3 uses the 6-sparse chat form.
// Zero input polynomials are dropped (they constrain nothing).
LiftResult lift_system(const BooleanSystem& F, uint64_t s = 3);

std::string lift_result_meta_json(const LiftResult& lr);

}  // namespace mqa
