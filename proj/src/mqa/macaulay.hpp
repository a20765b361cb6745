#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "intpoly.hpp"
#include "linop.hpp"

namespace mqa {

// Digit expansion of Eq.-(5) indexing: the exponent of x_1 is the most
// significant base-B digit, x_n the least significant. Index 0 is the
// constant monomial.
ExpVec index_to_monomial(uint64_t k, uint64_t base, uint32_t n);
uint64_t monomial_to_index(const ExpVec& e, uint64_t base, uint32_t n);

// (k_(dbar+1))_(Dbar+1): inserts (Delta-delta) zero bits before each delta-bit
// digit group, low digits first.
uint64_t reindex_base(uint64_t k, uint32_t delta, uint32_t Delta, uint32_t n);

struct MacaulayParams {
  uint32_t n = 0;       // variables
  uint32_t r = 0;       // polynomials
  uint32_t D = 0;       // target degree
  uint32_t dbar = 0;    // row-side base - 1, dbar+1 = 2^delta
  uint32_t delta = 0;
  uint32_t Dbar = 0;    // column-side base - 1, Dbar+1 = 2^Delta
  uint32_t Delta = 0;
  uint32_t rho = 0;     // polynomials with nonzero constant term
  std::vector<uint32_t> degrees;
  uint64_t M = 0;       // r * (dbar+1)^n
  uint64_t N = 0;       // (Dbar+1)^n - 1
  uint64_t T = 0;       // total sparseness of the input
  std::string to_text() const;
};

// One term of one polynomial: the c_ij * M_ij piece of the 1-sparse
// decomposition of the modified Macaulay matrix.
struct OneSparseTerm {
  uint32_t poly;       // i, 0-based
  double coeff;        // c_ij after any row scaling
  ExpVec alpha;        // exponent offset
  uint64_t alpha_idx;  // alpha in base Dbar+1
  uint64_t alpha_deg;
};

enum class MacaulayMode {
  raw,          // polynomials as given (bit-exact with the worked example)
  assumption2,  // stable reorder: nonzero-constant polynomials first, each
                // scaled so its constant term is -1 (b entries become 1)
};

class MacaulayOperator final : public LinearOperator {
 public:
  MacaulayOperator(std::vector<IntPolynomial> polys, uint32_t n_vars, uint32_t D,
                   MacaulayMode mode);

  const MacaulayParams& params() const { return params_; }
  const std::vector<OneSparseTerm>& one_sparse_terms() const { return terms_; }
  const std::vector<IntPolynomial>& polynomials() const { return polys_; }
  MacaulayMode mode() const { return mode_; }
  // scale applied to input polynomial perm[i] to produce internal poly i
  const std::vector<double>& row_scales() const { return scales_; }
  const std::vector<uint32_t>& permutation() const { return perm_; }

  uint64_t rows() const override { return params_.M; }
  uint64_t cols() const override { return params_.N; }
  void matvec(const double* x, double* y) const override;
  void rmatvec(const double* x, double* y) const override;

  std::vector<std::pair<uint64_t, double>> query_row(uint64_t i0) const;
  std::vector<std::pair<uint64_t, double>> query_col(uint64_t j0) const;

  // Sparse RHS b_{F,D}: entry at each block start row i*(dbar+1)^n is
  // -f_{i+1}(0) (scaled); zero entries omitted.
  std::vector<std::pair<uint64_t, double>> rhs() const;
  std::vector<double> rhs_dense() const;

  // Nonzero-row enumeration only; guard: virtual rows <= 1e8.
  std::vector<Triplet> materialize() const;
  std::string to_matrix_market() const;

  // Virtual column indices of monomials with degree <= D, ascending.
  const std::vector<uint64_t>& active_cols() const { return active_cols_; }
  // Virtual row indices carrying content (digit-sum bound), ascending.
  const std::vector<uint64_t>& active_rows() const { return active_rows_; }

  ExpVec column_monomial(uint64_t j0) const;  // monomial m_{Dbar, j0+1}

  // m_D(a): full virtual-length monomial-value vector at an integer point.
  std::vector<double> monomial_vector(const std::vector<mpz_class>& point) const;

 private:
  void enumerate_active();
  MacaulayParams params_;
  std::vector<IntPolynomial> polys_;  // after mode treatment
  std::vector<double> scales_;
  std::vector<uint32_t> perm_;
  std::vector<OneSparseTerm> terms_;
  std::vector<uint64_t> active_cols_;
  std::vector<uint64_t> active_rows_;
  std::vector<std::vector<uint64_t>> block_rows_;  // per poly, valid k values
  MacaulayMode mode_;
};

struct PaddingDescriptor {
  uint32_t sigma = 0;   // ceil(log2 rho)
  uint32_t eta = 0;     // padded rows = 2^eta
  uint32_t v = 0;       // block size 2^v, v = delta * n
  uint32_t rho = 0;
  uint64_t inserted_rows = 0;  // (2^sigma - rho) * 2^v, before row rho*2^v
  double hadamard_scale = 1.0; // 2^{-sigma/2}, the C = B / 2^{sigma/2} factor
  std::string to_text() const;
};

// Assumption-2 padding: w-blocks ahead of row rho*2^v, zero rows to 2^eta.
// The returned operator keeps the original entries (the Hadamard scale is
// recorded in the descriptor, it cancels in the least-squares solve).
class PaddedMacaulayOperator final : public LinearOperator {
 public:
  PaddedMacaulayOperator(std::shared_ptr<const MacaulayOperator> inner, PaddingDescriptor d);
  uint64_t rows() const override { return uint64_t(1) << desc_.eta; }
  uint64_t cols() const override { return inner_->cols(); }
  void matvec(const double* x, double* y) const override;
  void rmatvec(const double* x, double* y) const override;
  const PaddingDescriptor& descriptor() const { return desc_; }
  const MacaulayOperator& inner() const { return *inner_; }
  // Padded RHS c: ones at k*2^v for k = 0..2^sigma-1.
  std::vector<std::pair<uint64_t, double>> rhs() const;
  std::vector<double> rhs_dense() const;
  std::optional<uint64_t> map_row_to_inner(uint64_t row) const;

 private:
  std::shared_ptr<const MacaulayOperator> inner_;
  PaddingDescriptor desc_;
};

// Requires mode == assumption2 and a nonzero RHS.
PaddedMacaulayOperator pad_assumption2(std::shared_ptr<const MacaulayOperator> op);

}  // namespace mqa
