#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace grpforge {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Reduce an arbitrary signed value into [0, m).
inline u32 mod_reduce(i64 v, u32 m) {
  i64 r = v % static_cast<i64>(m);
  if (r < 0) r += m;
  return static_cast<u32>(r);
}

u32 mod_pow(u64 base, u64 exp, u32 m);
u32 mod_inv(u32 a, u32 p);  // p prime, a != 0 mod p

bool is_prime(u64 n);  // deterministic trial division
u32 multiplicative_order(u32 a, u32 m);

int mobius(u64 d);

/// Dimension of the degree-k component of the free Lie algebra of rank n:
/// (1/k) * sum_{d|k} mu(d) n^{k/d}. The division is exact; a remainder
/// indicates a bug and throws.
u64 witt_dim(u64 n, u64 k);
u64 witt_total(u64 n, u64 c);

/// Smallest generator of (Z/p)^x, verified by order computation.
u32 primitive_root(u32 p);

/// Smallest prime q > p with q == 1 (mod p).
u32 find_prime_q(u32 p, u32 cap = 1000000);

/// An element of F_p (or Z/m) carrying its modulus.
struct Residue {
  u32 value = 0;
  u32 modulus = 0;

  Residue() = default;
  Residue(i64 v, u32 m) : value(mod_reduce(v, m)), modulus(m) {}

  Residue operator+(Residue o) const { return {static_cast<i64>(value) + o.value, modulus}; }
  Residue operator-(Residue o) const { return {static_cast<i64>(value) - o.value, modulus}; }
  Residue operator*(Residue o) const { return {static_cast<i64>(value) * o.value, modulus}; }
  Residue pow(u64 e) const { return {mod_pow(value, e, modulus), modulus}; }
  Residue inv() const { return {mod_inv(value, modulus), modulus}; }
  bool operator==(const Residue& o) const = default;
};

using FpVector = std::vector<u32>;

FpVector fp_add(const FpVector& a, const FpVector& b, u32 p);
FpVector fp_sub(const FpVector& a, const FpVector& b, u32 p);
FpVector fp_scale(const FpVector& a, u32 s, u32 p);
bool fp_is_zero(const FpVector& a);

/// Dense matrix over F_p. Row reduction is deterministic: leftmost pivot,
/// pivot scaled to 1, full reduction above and below, so the reduced form
/// of a row space is canonical.
class FpMatrix {
 public:
  FpMatrix(std::size_t cols, u32 p) : cols_(cols), p_(p) {}

  void append_row(FpVector row);
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  u32 p() const { return p_; }
  const FpVector& row(std::size_t i) const { return rows_[i]; }
  FpVector& row(std::size_t i) { return rows_[i]; }

  /// In-place RREF; returns rank. Zero rows are dropped.
  std::size_t rref();
  bool reduced() const { return reduced_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::size_t rank() const;

  /// Eliminate pivot coordinates of v against the reduced rows.
  /// The result is the canonical coset representative of v modulo the
  /// row space; it is zero iff v lies in the row space.
  FpVector reduce_vector(FpVector v) const;
  bool contains(const FpVector& v) const;

  bool same_rowspace(const FpMatrix& other) const;

  FpMatrix transposed() const;

  /// Basis of {x : M x = 0} (column kernel), one row per basis vector.
  std::vector<FpVector> kernel() const;

 private:
  std::size_t cols_;
  u32 p_;
  std::vector<FpVector> rows_;
  std::vector<std::size_t> pivots_;
  bool reduced_ = false;
};

/// Solves x * A = v for a fixed row list A (not necessarily independent),
/// tracking coefficients through the elimination.
class RowSolver {
 public:
  RowSolver(std::size_t cols, u32 p) : cols_(cols), p_(p) {}
  void add_row(const FpVector& row);
  std::size_t rank() const { return reduced_.size(); }

  /// Coefficients x (length = number of added rows) with sum x_i row_i = v,
  /// or nullopt if v is outside the span.
  std::optional<FpVector> solve(FpVector v) const;

 private:
  std::size_t cols_;
  u32 p_;
  std::size_t n_rows_ = 0;
  std::vector<FpVector> reduced_;   // eliminated rows, pivot scaled to 1
  std::vector<FpVector> combo_;     // combo_[i]: reduced_[i] in terms of input rows
  std::vector<std::size_t> pivots_;
};

}  // namespace grpforge
