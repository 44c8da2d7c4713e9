#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grpforge/fp.hpp"

namespace grpforge {

/// Truncated free associative algebra over F_p: coefficients indexed by
/// words of length 0..c over letters {0..n-1}; products of words beyond
/// length c are dropped. Requires p > c so that exp/log denominators are
/// invertible.
class FreeAlgebra {
 public:
  FreeAlgebra(u32 rank, u32 cls, u32 p);

  u32 rank() const { return rank_; }
  u32 cls() const { return cls_; }
  u32 p() const { return p_; }
  std::size_t dim() const { return offsets_.back(); }

  std::size_t degree_offset(u32 k) const { return offsets_[k]; }
  std::size_t degree_size(u32 k) const { return offsets_[k + 1] - offsets_[k]; }

  std::vector<u32> word_at(std::size_t global_index) const;
  std::size_t index_of(const std::vector<u32>& word) const;

 private:
  u32 rank_, cls_, p_;
  std::vector<std::size_t> offsets_;  // offsets_[k] = start of degree k, size cls+2
};

using AlgebraPtr = std::shared_ptr<const FreeAlgebra>;

AlgebraPtr make_algebra(u32 rank, u32 cls, u32 p);

class Series {
 public:
  Series() = default;
  explicit Series(AlgebraPtr alg) : alg_(std::move(alg)), c_(alg_->dim(), 0) {}

  static Series zero(AlgebraPtr alg) { return Series(std::move(alg)); }
  static Series one(AlgebraPtr alg);
  static Series letter(AlgebraPtr alg, u32 i);  // the degree-1 generator X_i

  const AlgebraPtr& algebra() const { return alg_; }
  u32 coeff(std::size_t idx) const { return c_[idx]; }
  u32& coeff(std::size_t idx) { return c_[idx]; }
  const FpVector& data() const { return c_; }
  FpVector& data() { return c_; }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;  // truncated product
  Series scaled(u32 s) const;
  bool operator==(const Series& o) const { return c_ == o.c_; }
  bool is_zero() const { return fp_is_zero(c_); }

  FpVector degree_block(u32 k) const;
  void set_degree_block(u32 k, const FpVector& block);
  u32 lowest_nonzero_degree() const;  // cls+1 if zero (ignoring constant term)

 private:
  AlgebraPtr alg_;
  FpVector c_;
};

Series series_exp(const Series& ell);  // requires zero constant term
Series series_log(const Series& g);    // requires constant term 1

/// Lie bracket in the associative algebra.
Series lie_bracket(const Series& a, const Series& b);

/// Dynkin criterion: a homogeneous component v of degree k is a Lie element
/// iff theta(v) = k v, where theta left-bracketings each word. Checks every
/// homogeneous degree >= 1 of s.
bool is_lie_element(const Series& s);

/// Element of the free exponent-p class-c group realized as a group-like
/// series (constant term 1, log in the Lie span).
class GroupLike {
 public:
  GroupLike() = default;
  explicit GroupLike(Series s);

  static GroupLike one(AlgebraPtr alg);
  static GroupLike generator(AlgebraPtr alg, u32 i, i64 exponent = 1);

  const Series& series() const { return s_; }
  const AlgebraPtr& algebra() const { return s_.algebra(); }

  GroupLike operator*(const GroupLike& o) const;
  GroupLike inverse() const;
  GroupLike pow(i64 e) const;
  bool operator==(const GroupLike& o) const { return s_ == o.s_; }
  bool is_identity() const;

 private:
  struct Unchecked {};
  GroupLike(Series s, Unchecked) : s_(std::move(s)) {}
  Series s_;
  friend GroupLike group_like_unchecked(Series s);
};

GroupLike group_like_unchecked(Series s);

/// Product of exp(+-X_i) over a signed word (letters 1..n, sign = inverse).
GroupLike free_group_element(AlgebraPtr alg, const std::vector<int>& signed_letters);

/// Left-normed commutator [a_1,...,a_k] = [a_1,[a_2,...,a_k]] with
/// [x,y] = x y x^-1 y^-1.
GroupLike left_normed_commutator(const std::vector<GroupLike>& elements);

/// Hall-type basis of the free Lie algebra, realized as the Lyndon family:
/// Lyndon words with standard bracketing, ordered by degree then lex.
class HallBasis {
 public:
  explicit HallBasis(AlgebraPtr alg);

  struct Entry {
    std::vector<u32> word;       // the Lyndon word
    std::string bracket;         // printable bracket shape
    FpVector expansion;          // dense over the degree-k word block
  };

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<Entry>& degree(u32 k) const { return by_degree_[k - 1]; }
  std::size_t count(u32 k) const { return by_degree_[k - 1].size(); }

  /// Coordinates of a degree-k word-block vector in the Hall span, or
  /// nullopt if outside.
  std::optional<FpVector> coordinates(u32 k, const FpVector& degree_block) const;

  /// Degree-k word-block vector of a Hall-coordinate vector.
  FpVector expand(u32 k, const FpVector& hall_coords) const;

 private:
  AlgebraPtr alg_;
  std::vector<std::vector<Entry>> by_degree_;
  std::vector<RowSolver> solvers_;
};

using HallBasisPtr = std::shared_ptr<const HallBasis>;

/// Subspace of the degree-c Lie component, stored row-reduced over the
/// degree-c word basis. Defines the central quotient P = F̄_c / exp(I).
struct CentralIdeal {
  u32 degree;
  FpMatrix rows;  // rref

  CentralIdeal(u32 degree, FpMatrix reduced) : degree(degree), rows(std::move(reduced)) {}
  std::size_t rank() const { return rows.rows(); }
};

CentralIdeal make_central_ideal(AlgebraPtr alg, const std::vector<FpVector>& top_degree_rows);

/// Canonical coset representative: the top-degree word coordinates of g are
/// reduced modulo the ideal row space. Two elements of the quotient are
/// equal iff their reduced forms are equal.
GroupLike quotient_reduce(const GroupLike& g, const CentralIdeal& ideal);

/// Letter substitution x_i -> scalar_i * x_{target_i}; scalar 0 kills the
/// letter. Extends word-wise to an algebra endomorphism.
struct Substitution {
  std::vector<u32> target;
  FpVector scalar;

  static Substitution identity(u32 rank);
  static Substitution scale_letter(u32 rank, u32 i, u32 s);   // q_i-style
  static Substitution permute(const std::vector<u32>& perm);  // x_i -> x_{perm[i]}
  static Substitution kill_letter(u32 rank, u32 i);
};

Series apply_substitution(const Substitution& sub, const Series& s);
GroupLike apply_substitution(const Substitution& sub, const GroupLike& g);

/// Hall coordinates of the degree-k part of log(g); throws if a lower
/// degree component of the log is nonzero (g outside F̄^{[k]}).
FpVector lcs_component(const GroupLike& g, u32 k, const HallBasis& hall);

/// Per-degree Hall-coordinate bases of {ell Lie : endo(ell) == ell mod I}.
/// The ideal applies only in its own (top) degree; pass nullptr for none.
struct FixedSubspace {
  std::vector<FpMatrix> by_degree;  // index k-1, rref rows over Hall coords
};
FixedSubspace fixed_subgroup(const Substitution& endo, const CentralIdeal* ideal,
                             const HallBasis& hall);

/// p-adic exponent of |F̄(n,c,p) / ideal|: witt_total(n,c) - rank.
u64 quotient_order_exponent(u32 n, u32 c, const CentralIdeal* ideal);

}  // namespace grpforge
