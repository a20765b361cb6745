#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

#include "linop.hpp"

namespace mqa {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Relative singular-value cutoff shared by the dense solve and the
// condition-number report; the Macaulay matrices have exact rational entries,
// so the rank gap is clean at desk scale.
inline constexpr double kRankCutoff = 1e-10;

struct DenseMinNorm {
  VectorXd x;
  double residual = 0.0;   // ||Ax - b||
  double sigma_max = 0.0;
  double sigma_min_nonzero = 0.0;
  uint64_t rank = 0;
};

// Minimum-norm least-squares via full SVD with the relative rank cutoff.
DenseMinNorm dense_min_norm(const MatrixXd& A, const VectorXd& b);

struct LsqrResult {
  VectorXd x;
  double residual = 0.0;       // ||Ax - b||
  double normal_residual = 0.0;  // ||A^T (Ax - b)||
  uint64_t iterations = 0;
  bool converged = false;
};

// Paige-Saunders LSQR started from x = 0; the iterates stay in range(A^T),
// so the converged point is the minimum-norm least-squares solution.
LsqrResult lsqr(const LinearOperator& A, const std::vector<double>& b, double tol,
                uint64_t max_iter);

struct GklResult {
  double sigma_max = 0.0;
  double sigma_min = 0.0;  // smallest Ritz value seen (row-space restricted)
  uint64_t iterations = 0;
  bool converged_max = false;
  bool converged_min = false;
};

// Golub-Kahan-Lanczos bidiagonalization with full reorthogonalization.
// The start vector is pushed through A^T A once so it lies in the row space;
// Ritz residual bounds below tol*sigma_max stop the respective extreme.
GklResult gkl_extremes(const LinearOperator& A, double tol, uint64_t max_iter,
                       std::mt19937_64& rng);

// Dense materialization of a generic operator by matvec on unit vectors.
MatrixXd dense_from_operator(const LinearOperator& A, uint64_t max_entries = 50'000'000);

}  // namespace mqa
