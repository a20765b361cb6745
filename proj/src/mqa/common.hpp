#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mqa {

// Error taxonomy kept coarse: callers branch on kind, messages carry detail.
enum class ErrorKind {
  invalid_argument,   // bad input, malformed file, precondition violation
  resource_limit,     // size guard tripped
  no_convergence,     // iterative method exhausted its budget
  parse,              // malformed JSON / text input
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool cond, ErrorKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

// Sparse exponent vector: (variable index, exponent), ascending by variable,
// exponents > 0. The empty vector is the constant monomial 1.
using ExpVec = std::vector<std::pair<uint32_t, uint32_t>>;

inline uint64_t total_degree(const ExpVec& e) {
  uint64_t d = 0;
  for (auto& [v, x] : e) d += x;
  return d;
}

// Degree reverse lexicographic order with x_1 > x_2 > ... : higher total
// degree wins; on ties the monomial with the smaller exponent on the last
// differing (highest-index) variable is the larger one.
inline bool drl_greater(const ExpVec& a, const ExpVec& b) {
  uint64_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  auto ia = a.rbegin(), ib = b.rbegin();
  while (ia != a.rend() || ib != b.rend()) {
    uint32_t va = (ia != a.rend()) ? ia->first : 0;
    uint32_t vb = (ib != b.rend()) ? ib->first : 0;
    if (ia == a.rend()) return true;   // b has a trailing variable a lacks
    if (ib == b.rend()) return false;
    if (va != vb) {
      // the poly with the higher trailing variable has the smaller monomial
      return va < vb;
    }
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return false;
}

inline bool drl_less(const ExpVec& a, const ExpVec& b) { return drl_greater(b, a); }

struct DrlDescending {
  bool operator()(const ExpVec& a, const ExpVec& b) const { return drl_greater(a, b); }
};

// -1 / 0 / +1 comparison used by the degrees module's public drl_compare.
inline int drl_compare(const ExpVec& a, const ExpVec& b) {
  if (drl_greater(a, b)) return 1;
  if (drl_greater(b, a)) return -1;
  return 0;
}

}  // namespace mqa
