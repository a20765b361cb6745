#pragma once

#include <cstdint>
#include <vector>

#include "common.hpp"

namespace mqa {

// Matvec-only view of a real M x N operator. Implementations must be
// reentrant; matvec/rmatvec accumulate into a caller-provided buffer.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;
  virtual uint64_t rows() const = 0;
  virtual uint64_t cols() const = 0;
  virtual void matvec(const double* x, double* y) const = 0;   // y = A x
  virtual void rmatvec(const double* x, double* y) const = 0;  // y = A^T x
};

struct Triplet {
  uint64_t row, col;
  double value;
};

class SparseTripletOperator final : public LinearOperator {
 public:
  SparseTripletOperator(uint64_t m, uint64_t n, std::vector<Triplet> t)
      : m_(m), n_(n), trip_(std::move(t)) {}
  uint64_t rows() const override { return m_; }
  uint64_t cols() const override { return n_; }
  void matvec(const double* x, double* y) const override {
    for (uint64_t i = 0; i < m_; ++i) y[i] = 0;
    for (auto& t : trip_) y[t.row] += t.value * x[t.col];
  }
  void rmatvec(const double* x, double* y) const override {
    for (uint64_t j = 0; j < n_; ++j) y[j] = 0;
    for (auto& t : trip_) y[t.col] += t.value * x[t.row];
  }
  const std::vector<Triplet>& triplets() const { return trip_; }

 private:
  uint64_t m_, n_;
  std::vector<Triplet> trip_;
};

}  // namespace mqa
