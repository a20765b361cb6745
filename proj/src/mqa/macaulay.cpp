#include "macaulay.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mqa {

namespace {

uint32_t ceil_log2(uint64_t x) {
  uint32_t b = 0;
  while ((uint64_t(1) << b) < x) ++b;
  return b;
}

uint64_t digit_sum(uint64_t k, uint32_t bits_per_digit, uint32_t n) {
  if (bits_per_digit == 0) return 0;
  uint64_t mask = (uint64_t(1) << bits_per_digit) - 1;
  uint64_t s = 0;
  for (uint32_t i = 0; i < n; ++i) {
    s += k & mask;
    k >>= bits_per_digit;
  }
  return s;
}

}  // namespace

ExpVec index_to_monomial(uint64_t k, uint64_t base, uint32_t n) {
  require(base >= 1, ErrorKind::invalid_argument, "index_to_monomial: base must be >= 1");
  ExpVec e;
  // digit i of k (low to high) is the exponent of x_{n-i}
  for (uint32_t i = 0; i < n; ++i) {
    uint64_t d = k % base;
    k /= base;
    if (d > 0) e.emplace_back(n - 1 - i, static_cast<uint32_t>(d));
  }
  require(k == 0, ErrorKind::invalid_argument, "index_to_monomial: index out of range");
  std::reverse(e.begin(), e.end());
  return e;
}

uint64_t monomial_to_index(const ExpVec& e, uint64_t base, uint32_t n) {
  uint64_t k = 0;
  size_t t = 0;
  for (uint32_t v = 0; v < n; ++v) {
    uint64_t d = 0;
    if (t < e.size() && e[t].first == v) d = e[t++].second;
    require(d < base, ErrorKind::invalid_argument, "monomial_to_index: exponent exceeds base");
    k = k * base + d;
  }
  require(t == e.size(), ErrorKind::invalid_argument, "monomial_to_index: variable index out of range");
  return k;
}

uint64_t reindex_base(uint64_t k, uint32_t delta, uint32_t Delta, uint32_t n) {
  if (delta == Delta) return k;
  uint64_t out = 0;
  uint64_t mask = (uint64_t(1) << delta) - 1;
  for (uint32_t i = 0; i < n; ++i) {
    out |= ((k >> (delta * i)) & mask) << (Delta * i);
  }
  return out;
}

std::string MacaulayParams::to_text() const {
  std::ostringstream os;
  os << "n " << n << "\n"
     << "r " << r << "\n"
     << "D " << D << "\n"
     << "dbar " << dbar << "\n"
     << "delta " << delta << "\n"
     << "Dbar " << Dbar << "\n"
     << "Delta " << Delta << "\n"
     << "rho " << rho << "\n"
     << "M " << M << "\n"
     << "N " << N << "\n"
     << "T " << T << "\n";
  return os.str();
}

MacaulayOperator::MacaulayOperator(std::vector<IntPolynomial> polys, uint32_t n_vars, uint32_t D,
                                   MacaulayMode mode)
    : mode_(mode) {
  require(!polys.empty(), ErrorKind::invalid_argument, "macaulay: empty system");
  uint32_t maxdeg = 0, mindeg = UINT32_MAX;
  for (auto& f : polys) {
    require(!f.is_zero(), ErrorKind::invalid_argument, "macaulay: zero polynomial in system");
    require(f.max_var_index() <= n_vars, ErrorKind::invalid_argument,
            "macaulay: polynomial references variable beyond n");
    uint32_t d = static_cast<uint32_t>(f.degree());
    maxdeg = std::max(maxdeg, d);
    mindeg = std::min(mindeg, d);
  }
  require(D >= maxdeg && D >= 1, ErrorKind::invalid_argument,
          "macaulay: D must be >= max degree (and >= 1)");

  perm_.resize(polys.size());
  for (uint32_t i = 0; i < polys.size(); ++i) perm_[i] = i;
  if (mode == MacaulayMode::assumption2) {
    // stable partition: nonzero-constant polynomials first
    std::stable_sort(perm_.begin(), perm_.end(), [&](uint32_t a, uint32_t b) {
      bool ca = polys[a].constant_term() != 0, cb = polys[b].constant_term() != 0;
      return ca > cb;
    });
  }
  polys_.reserve(polys.size());
  scales_.reserve(polys.size());
  for (uint32_t i = 0; i < polys.size(); ++i) {
    const IntPolynomial& f = polys[perm_[i]];
    double scale = 1.0;
    if (mode == MacaulayMode::assumption2) {
      mpz_class c0 = f.constant_term();
      if (c0 != 0) scale = -1.0 / c0.get_d();
    }
    scales_.push_back(scale);
    polys_.push_back(f);
  }

  params_.n = n_vars;
  params_.r = static_cast<uint32_t>(polys_.size());
  params_.D = D;
  uint32_t need = D - mindeg;  // dbar >= D - min_i d_i
  params_.delta = ceil_log2(need + 1);
  params_.dbar = (uint32_t(1) << params_.delta) - 1;
  params_.Delta = ceil_log2(uint64_t(D) + 1);
  params_.Dbar = (uint32_t(1) << params_.Delta) - 1;
  require(params_.dbar + 1 <= 2 * D && params_.Dbar + 1 <= 2 * D + 1, ErrorKind::internal,
          "macaulay: power-of-two bases violate the dimension lemma");
  require(uint64_t(params_.delta) * n_vars + ceil_log2(params_.r) <= 62 &&
              uint64_t(params_.Delta) * n_vars <= 62,
          ErrorKind::resource_limit, "macaulay: virtual index space exceeds 2^62");
  params_.M = uint64_t(params_.r) << (uint64_t(params_.delta) * n_vars);
  params_.N = (uint64_t(1) << (uint64_t(params_.Delta) * n_vars)) - 1;

  params_.rho = 0;
  params_.T = 0;
  for (auto& f : polys_) {
    params_.degrees.push_back(static_cast<uint32_t>(f.degree()));
    params_.T += f.sparseness();
    if (f.constant_term() != 0) params_.rho++;
  }

  for (uint32_t i = 0; i < params_.r; ++i) {
    for (auto& [e, c] : polys_[i].terms()) {
      OneSparseTerm t;
      t.poly = i;
      t.coeff = c.get_d() * scales_[i];
      t.alpha = e;
      t.alpha_idx = monomial_to_index(e, params_.Dbar + 1, params_.n);
      t.alpha_deg = total_degree(e);
      terms_.push_back(std::move(t));
    }
  }
  enumerate_active();
}

void MacaulayOperator::enumerate_active() {
  const uint32_t n = params_.n;
  // active columns: monomials of degree <= D in ascending index order
  std::vector<uint32_t> digits(n, 0);
  uint64_t colguard = 0;
  std::function<void(uint32_t, uint32_t, uint64_t)> rec_cols = [&](uint32_t pos, uint32_t rem,
                                                                   uint64_t acc) {
    if (pos == n) {
      if (acc > 0) active_cols_.push_back(acc - 1);
      return;
    }
    uint32_t lim = std::min<uint32_t>(rem, params_.Dbar);
    for (uint32_t d = 0; d <= lim; ++d)
      rec_cols(pos + 1, rem - d, acc * (params_.Dbar + 1) + d);
  };
  (void)colguard;
  rec_cols(0, params_.D, 0);
  require(active_cols_.size() <= 40'000'000, ErrorKind::resource_limit,
          "macaulay: too many active columns to enumerate");

  block_rows_.resize(params_.r);
  for (uint32_t i = 0; i < params_.r; ++i) {
    uint32_t budget = params_.D - params_.degrees[i];
    std::function<void(uint32_t, uint32_t, uint64_t)> rec_rows = [&](uint32_t pos, uint32_t rem,
                                                                     uint64_t acc) {
      if (pos == n) {
        block_rows_[i].push_back(acc);
        return;
      }
      uint32_t lim = std::min<uint32_t>(rem, params_.dbar);
      for (uint32_t d = 0; d <= lim; ++d)
        rec_rows(pos + 1, rem - d, acc * (params_.dbar + 1) + d);
    };
    rec_rows(0, budget, 0);
    uint64_t base = uint64_t(i) << (uint64_t(params_.delta) * n);
    for (uint64_t k : block_rows_[i]) active_rows_.push_back(base + k);
    require(active_rows_.size() <= 40'000'000, ErrorKind::resource_limit,
            "macaulay: too many active rows to enumerate");
  }
}

void MacaulayOperator::matvec(const double* x, double* y) const {
  std::fill(y, y + params_.M, 0.0);
  size_t t0 = 0;
  for (uint32_t i = 0; i < params_.r; ++i) {
    size_t t1 = t0;
    while (t1 < terms_.size() && terms_[t1].poly == i) ++t1;
    uint64_t base = uint64_t(i) << (uint64_t(params_.delta) * params_.n);
    for (uint64_t k : block_rows_[i]) {
      uint64_t kD = reindex_base(k, params_.delta, params_.Delta, params_.n);
      double acc = 0.0;
      for (size_t t = t0; t < t1; ++t) {
        uint64_t col = kD + terms_[t].alpha_idx;
        if (col == 0) continue;  // constant entry of the k = 0 row lives in b
        acc += terms_[t].coeff * x[col - 1];
      }
      y[base + k] = acc;
    }
    t0 = t1;
  }
}

void MacaulayOperator::rmatvec(const double* x, double* y) const {
  std::fill(y, y + params_.N, 0.0);
  size_t t0 = 0;
  for (uint32_t i = 0; i < params_.r; ++i) {
    size_t t1 = t0;
    while (t1 < terms_.size() && terms_[t1].poly == i) ++t1;
    uint64_t base = uint64_t(i) << (uint64_t(params_.delta) * params_.n);
    for (uint64_t k : block_rows_[i]) {
      uint64_t kD = reindex_base(k, params_.delta, params_.Delta, params_.n);
      double xi = x[base + k];
      if (xi == 0.0) continue;
      for (size_t t = t0; t < t1; ++t) {
        uint64_t col = kD + terms_[t].alpha_idx;
        if (col == 0) continue;
        y[col - 1] += terms_[t].coeff * xi;
      }
    }
    t0 = t1;
  }
}

std::vector<std::pair<uint64_t, double>> MacaulayOperator::query_row(uint64_t i0) const {
  require(i0 < params_.M, ErrorKind::invalid_argument, "query_row: index out of range");
  uint64_t blockbits = uint64_t(params_.delta) * params_.n;
  uint64_t l = i0 >> blockbits;
  uint64_t k = i0 & ((uint64_t(1) << blockbits) - 1);
  std::vector<std::pair<uint64_t, double>> out;
  if (digit_sum(k, params_.delta, params_.n) > params_.D - params_.degrees[l]) return out;
  uint64_t kD = reindex_base(k, params_.delta, params_.Delta, params_.n);
  for (auto& t : terms_) {
    if (t.poly != l) continue;
    uint64_t col = kD + t.alpha_idx;
    if (col == 0) continue;
    out.emplace_back(col - 1, t.coeff);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<uint64_t, double>> MacaulayOperator::query_col(uint64_t j0) const {
  require(j0 < params_.N, ErrorKind::invalid_argument, "query_col: index out of range");
  std::vector<std::pair<uint64_t, double>> out;
  ExpVec target = index_to_monomial(j0 + 1, params_.Dbar + 1, params_.n);
  for (auto& t : terms_) {
    // k = target - alpha, digitwise; valid iff nonnegative, digits <= dbar,
    // digit sum <= D - d_i
    ExpVec k;
    bool ok = true;
    size_t a = 0, b = 0;
    uint64_t ksum = 0;
    while (a < target.size() || b < t.alpha.size()) {
      if (b == t.alpha.size() || (a < target.size() && target[a].first < t.alpha[b].first)) {
        k.push_back(target[a]);
        ksum += target[a].second;
        ++a;
      } else if (a == target.size() || t.alpha[b].first < target[a].first) {
        ok = false;  // alpha has a variable target lacks -> negative digit
        break;
      } else {
        if (target[a].second < t.alpha[b].second) {
          ok = false;
          break;
        }
        uint32_t d = target[a].second - t.alpha[b].second;
        if (d > 0) k.emplace_back(target[a].first, d);
        ksum += d;
        ++a, ++b;
      }
    }
    if (!ok || ksum > params_.D - params_.degrees[t.poly]) continue;
    bool fits = true;
    for (auto& [v, d] : k)
      if (d > params_.dbar) {
        fits = false;
        break;
      }
    if (!fits) continue;
    uint64_t kidx = monomial_to_index(k, params_.dbar + 1, params_.n);
    uint64_t row = (uint64_t(t.poly) << (uint64_t(params_.delta) * params_.n)) + kidx;
    out.emplace_back(row, t.coeff);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<uint64_t, double>> MacaulayOperator::rhs() const {
  std::vector<std::pair<uint64_t, double>> out;
  for (uint32_t i = 0; i < params_.r; ++i) {
    double c0 = polys_[i].constant_term().get_d() * scales_[i];
    if (c0 != 0.0)
      out.emplace_back(uint64_t(i) << (uint64_t(params_.delta) * params_.n), -c0);
  }
  return out;
}

std::vector<double> MacaulayOperator::rhs_dense() const {
  std::vector<double> b(params_.M, 0.0);
  for (auto& [i, v] : rhs()) b[i] = v;
  return b;
}

std::vector<Triplet> MacaulayOperator::materialize() const {
  require(params_.M <= 100'000'000, ErrorKind::resource_limit,
          "materialize: more than 1e8 virtual rows");
  std::vector<Triplet> out;
  for (uint64_t row : active_rows_) {
    auto entries = query_row(row);
    for (auto& [col, val] : entries) out.push_back({row, col, val});
  }
  return out;
}

std::string MacaulayOperator::to_matrix_market() const {
  auto trip = materialize();
  std::ostringstream os;
  os << "%%MatrixMarket matrix coordinate real general\n";
  os << params_.M << " " << params_.N << " " << trip.size() << "\n";
  char buf[64];
  for (auto& t : trip) {
    std::snprintf(buf, sizeof buf, "%llu %llu %.6f\n", (unsigned long long)(t.row + 1),
                  (unsigned long long)(t.col + 1), t.value);
    os << buf;
  }
  return os.str();
}

ExpVec MacaulayOperator::column_monomial(uint64_t j0) const {
  require(j0 < params_.N, ErrorKind::invalid_argument, "column index out of range");
  return index_to_monomial(j0 + 1, params_.Dbar + 1, params_.n);
}

std::vector<double> MacaulayOperator::monomial_vector(const std::vector<mpz_class>& point) const {
  require(params_.N <= 10'000'000, ErrorKind::resource_limit,
          "monomial_vector: virtual column space too large");
  std::vector<double> v(params_.N, 0.0);
  for (uint64_t j = 0; j < params_.N; ++j) {
    ExpVec m = column_monomial(j);
    mpz_class val = 1;
    for (auto& [var, exp] : m) {
      require(var < point.size(), ErrorKind::invalid_argument, "monomial_vector: point too short");
      for (uint32_t t = 0; t < exp; ++t) val *= point[var];
    }
    v[j] = val.get_d();
  }
  return v;
}

std::string PaddingDescriptor::to_text() const {
  std::ostringstream os;
  os << "sigma " << sigma << "\n"
     << "eta " << eta << "\n"
     << "v " << v << "\n"
     << "rho " << rho << "\n"
     << "inserted_rows " << inserted_rows << "\n"
     << "hadamard_scale " << hadamard_scale << "\n";
  return os.str();
}

PaddedMacaulayOperator::PaddedMacaulayOperator(std::shared_ptr<const MacaulayOperator> inner,
                                               PaddingDescriptor d)
    : inner_(std::move(inner)), desc_(d) {}

std::optional<uint64_t> PaddedMacaulayOperator::map_row_to_inner(uint64_t row) const {
  uint64_t cut = uint64_t(desc_.rho) << desc_.v;
  if (row < cut) return row;
  if (row < cut + desc_.inserted_rows) return std::nullopt;
  uint64_t r = row - desc_.inserted_rows;
  if (r < inner_->rows()) return r;
  return std::nullopt;
}

void PaddedMacaulayOperator::matvec(const double* x, double* y) const {
  std::vector<double> t(inner_->rows());
  inner_->matvec(x, t.data());
  uint64_t R = rows();
  std::fill(y, y + R, 0.0);
  for (uint64_t i = 0; i < R; ++i) {
    auto m = map_row_to_inner(i);
    if (m) y[i] = t[*m];
  }
}

void PaddedMacaulayOperator::rmatvec(const double* x, double* y) const {
  std::vector<double> t(inner_->rows(), 0.0);
  uint64_t R = rows();
  for (uint64_t i = 0; i < R; ++i) {
    auto m = map_row_to_inner(i);
    if (m) t[*m] = x[i];
  }
  inner_->rmatvec(t.data(), y);
}

std::vector<std::pair<uint64_t, double>> PaddedMacaulayOperator::rhs() const {
  std::vector<std::pair<uint64_t, double>> out;
  for (uint64_t k = 0; k < (uint64_t(1) << desc_.sigma); ++k)
    out.emplace_back(k << desc_.v, 1.0);
  return out;
}

std::vector<double> PaddedMacaulayOperator::rhs_dense() const {
  std::vector<double> b(rows(), 0.0);
  for (auto& [i, v] : rhs()) b[i] = v;
  return b;
}

PaddedMacaulayOperator pad_assumption2(std::shared_ptr<const MacaulayOperator> op) {
  require(op->mode() == MacaulayMode::assumption2, ErrorKind::invalid_argument,
          "pad_assumption2: operator must be built in assumption2 mode");
  const auto& p = op->params();
  require(p.rho >= 1, ErrorKind::invalid_argument,
          "pad_assumption2: RHS is zero (no nonzero constant terms), Assumption 2 violated");
  PaddingDescriptor d;
  d.rho = p.rho;
  d.v = p.delta * p.n;
  uint32_t sigma = 0;
  while ((uint32_t(1) << sigma) < p.rho) ++sigma;
  d.sigma = sigma;
  uint64_t blocks = uint64_t(p.r) + (uint64_t(1) << sigma) - p.rho;
  uint32_t eb = 0;
  while ((uint64_t(1) << eb) < blocks) ++eb;
  d.eta = eb + d.v;
  d.inserted_rows = ((uint64_t(1) << sigma) - p.rho) << d.v;
  d.hadamard_scale = std::pow(2.0, -0.5 * sigma);
  require(d.eta <= 62, ErrorKind::resource_limit, "pad_assumption2: padded space exceeds 2^62");
  return PaddedMacaulayOperator(std::move(op), d);
}

}  // namespace mqa
