#include "grpforge/fp.hpp"

#include <algorithm>

namespace grpforge {

u32 mod_pow(u64 base, u64 exp, u32 m) {
  u64 b = base % m;
  u64 r = 1 % m;
  while (exp > 0) {
    if (exp & 1) r = r * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<u32>(r);
}

u32 mod_inv(u32 a, u32 p) {
  a %= p;
  if (a == 0) throw std::domain_error("mod_inv: zero has no inverse");
  return mod_pow(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u32 multiplicative_order(u32 a, u32 m) {
  u64 x = a % m;
  if (x == 0) throw std::domain_error("multiplicative_order: not a unit");
  u32 ord = 1;
  u64 y = x;
  while (y != 1) {
    y = y * a % m;
    ++ord;
    if (ord > m) throw std::domain_error("multiplicative_order: not a unit");
  }
  return ord;
}

int mobius(u64 d) {
  if (d == 0) throw std::domain_error("mobius: d must be positive");
  int result = 1;
  for (u64 q = 2; q * q <= d; ++q) {
    if (d % q == 0) {
      d /= q;
      if (d % q == 0) return 0;
      result = -result;
    }
  }
  if (d > 1) result = -result;
  return result;
}

u64 witt_dim(u64 n, u64 k) {
  if (n < 1 || k < 1) throw std::domain_error("witt_dim: n, k must be >= 1");
  i64 sum = 0;
  for (u64 d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    u64 pw = 1;
    for (u64 i = 0; i < k / d; ++i) pw *= n;
    sum += mobius(d) * static_cast<i64>(pw);
  }
  if (sum % static_cast<i64>(k) != 0)
    throw std::logic_error("witt_dim: necklace sum not divisible by k");
  return static_cast<u64>(sum / static_cast<i64>(k));
}

u64 witt_total(u64 n, u64 c) {
  u64 total = 0;
  for (u64 k = 1; k <= c; ++k) total += witt_dim(n, k);
  return total;
}

u32 primitive_root(u32 p) {
  if (!is_prime(p)) throw std::domain_error("primitive_root: p must be prime");
  for (u32 z = 2; z < p; ++z)
    if (multiplicative_order(z, p) == p - 1) return z;
  if (p == 2) return 1;
  throw std::logic_error("primitive_root: none found");
}

u32 find_prime_q(u32 p, u32 cap) {
  if (!is_prime(p)) throw std::domain_error("find_prime_q: p must be prime");
  for (u64 q = p + 1; q <= cap; ++q)
    if (q % p == 1 && is_prime(q)) return static_cast<u32>(q);
  throw std::runtime_error("find_prime_q: search bound exceeded");
}

FpVector fp_add(const FpVector& a, const FpVector& b, u32 p) {
  FpVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
  return r;
}

FpVector fp_sub(const FpVector& a, const FpVector& b, u32 p) {
  FpVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + p - b[i]) % p;
  return r;
}

FpVector fp_scale(const FpVector& a, u32 s, u32 p) {
  FpVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = static_cast<u32>(static_cast<u64>(a[i]) * s % p);
  return r;
}

bool fp_is_zero(const FpVector& a) {
  return std::all_of(a.begin(), a.end(), [](u32 x) { return x == 0; });
}

void FpMatrix::append_row(FpVector row) {
  if (row.size() != cols_) throw std::invalid_argument("FpMatrix: row length mismatch");
  for (auto& x : row) x %= p_;
  rows_.push_back(std::move(row));
  reduced_ = false;
}

std::size_t FpMatrix::rref() {
  pivots_.clear();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows_.size() && rows_[pivot][col] == 0) ++pivot;
    if (pivot == rows_.size()) continue;
    std::swap(rows_[r], rows_[pivot]);
    u32 inv = mod_inv(rows_[r][col], p_);
    for (std::size_t j = col; j < cols_; ++j)
      rows_[r][j] = static_cast<u32>(static_cast<u64>(rows_[r][j]) * inv % p_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][col] == 0) continue;
      u64 f = rows_[i][col];
      for (std::size_t j = col; j < cols_; ++j)
        rows_[i][j] = static_cast<u32>((rows_[i][j] + (p_ - 1) * f % p_ * rows_[r][j]) % p_);
    }
    pivots_.push_back(col);
    ++r;
  }
  rows_.resize(r);
  reduced_ = true;
  return r;
}

std::size_t FpMatrix::rank() const {
  if (reduced_) return rows_.size();
  FpMatrix copy = *this;
  return copy.rref();
}

FpVector FpMatrix::reduce_vector(FpVector v) const {
  if (!reduced_) throw std::logic_error("FpMatrix: reduce_vector requires rref()");
  if (v.size() != cols_) throw std::invalid_argument("FpMatrix: vector length mismatch");
  for (auto& x : v) x %= p_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    u32 f = v[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = pivots_[i]; j < cols_; ++j)
      v[j] = static_cast<u32>((v[j] + static_cast<u64>(p_ - 1) * f % p_ * rows_[i][j]) % p_);
  }
  return v;
}

bool FpMatrix::contains(const FpVector& v) const {
  return fp_is_zero(reduce_vector(v));
}

bool FpMatrix::same_rowspace(const FpMatrix& other) const {
  FpMatrix a = *this, b = other;
  a.rref();
  b.rref();
  if (a.rows() != b.rows()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a.row(i) != b.row(i)) return false;
  return true;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix t(rows_.size(), p_);
  for (std::size_t c = 0; c < cols_; ++c) {
    FpVector row(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) row[r] = rows_[r][c];
    t.append_row(std::move(row));
  }
  return t;
}

std::vector<FpVector> FpMatrix::kernel() const {
  FpMatrix m = *this;
  m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : m.pivots()) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    FpVector v(cols_, 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
      v[m.pivots()[i]] = mod_reduce(-static_cast<i64>(m.row(i)[free_col]), p_);
    basis.push_back(std::move(v));
  }
  return basis;
}

void RowSolver::add_row(const FpVector& row) {
  if (row.size() != cols_) throw std::invalid_argument("RowSolver: row length mismatch");
  FpVector v = row;
  for (auto& x : v) x %= p_;
  FpVector combo(n_rows_ + 1, 0);
  combo[n_rows_] = 1;
  ++n_rows_;
  for (auto& c : combo_) c.resize(n_rows_, 0);

  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    u32 f = v[pivots_[i]];
    if (f == 0) continue;
    u64 neg = static_cast<u64>(p_ - 1) * f % p_;
    for (std::size_t j = 0; j < cols_; ++j)
      v[j] = static_cast<u32>((v[j] + neg * reduced_[i][j]) % p_);
    for (std::size_t j = 0; j < n_rows_; ++j)
      combo[j] = static_cast<u32>((combo[j] + neg * combo_[i][j]) % p_);
  }
  std::size_t piv = 0;
  while (piv < cols_ && v[piv] == 0) ++piv;
  if (piv == cols_) return;  // dependent row
  u32 inv = mod_inv(v[piv], p_);
  for (auto& x : v) x = static_cast<u32>(static_cast<u64>(x) * inv % p_);
  for (auto& x : combo) x = static_cast<u32>(static_cast<u64>(x) * inv % p_);
  reduced_.push_back(std::move(v));
  combo_.push_back(std::move(combo));
  pivots_.push_back(piv);
}

std::optional<FpVector> RowSolver::solve(FpVector v) const {
  if (v.size() != cols_) throw std::invalid_argument("RowSolver: vector length mismatch");
  for (auto& x : v) x %= p_;
  FpVector coeff(n_rows_, 0);
  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    u32 f = v[pivots_[i]];
    if (f == 0) continue;
    u64 neg = static_cast<u64>(p_ - 1) * f % p_;
    for (std::size_t j = 0; j < cols_; ++j)
      v[j] = static_cast<u32>((v[j] + neg * reduced_[i][j]) % p_);
    for (std::size_t j = 0; j < combo_[i].size(); ++j)
      coeff[j] = static_cast<u32>((coeff[j] + static_cast<u64>(f) * combo_[i][j]) % p_);
  }
  if (!fp_is_zero(v)) return std::nullopt;
  return coeff;
}

}  // namespace grpforge
