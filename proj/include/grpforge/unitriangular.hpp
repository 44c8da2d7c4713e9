#pragma once

#include <string>
#include <vector>

#include "grpforge/fp.hpp"

namespace grpforge {

/// Upper unitriangular m x m matrix over F_p.
class UnitriMatrix {
 public:
  UnitriMatrix(u32 m, u32 p);  // identity
  static UnitriMatrix identity(u32 m, u32 p) { return UnitriMatrix(m, p); }

  u32 size() const { return m_; }
  u32 p() const { return p_; }
  u32 at(u32 i, u32 j) const { return e_[i * m_ + j]; }  // 0-based
  void set(u32 i, u32 j, u32 v);

  UnitriMatrix operator*(const UnitriMatrix& o) const;
  UnitriMatrix inverse() const;
  UnitriMatrix pow(i64 e) const;
  bool operator==(const UnitriMatrix& o) const = default;
  bool is_identity() const;
  u32 order() const;

  std::string key() const;

 private:
  u32 m_, p_;
  std::vector<u32> e_;
};

/// E_{ij}: identity plus a single 1 at (i,j); 1-based, i < j.
UnitriMatrix e_matrix(u32 m, u32 p, u32 i, u32 j);

UnitriMatrix ut_commutator(const UnitriMatrix& x, const UnitriMatrix& y);

/// Left-normed [x_1,...,x_k] = [x_1,[x_2,...,x_k]].
UnitriMatrix ut_left_normed_commutator(const std::vector<UnitriMatrix>& xs);

/// Claimed generators of the k-th lower central subgroup: E_{ij} with
/// |j - i| >= k. k = m gives the empty list (trivial subgroup).
std::vector<UnitriMatrix> lcs_generators_ut(u32 m, u32 p, u32 k);

/// Membership in UT^{[k]} by shape: superdiagonals 1..k-1 vanish.
bool ut_in_lcs(const UnitriMatrix& x, u32 k);

std::vector<UnitriMatrix> ut_closure(const std::vector<UnitriMatrix>& gens,
                                     std::size_t bound = 1000000);

/// Independent lower central subgroup via iterated commutator closure:
/// G^[1] = G, G^[k+1] = closure of {[g, h] : g in G, h in G^[k]}.
std::vector<UnitriMatrix> ut_lower_central(u32 m, u32 p, u32 k, std::size_t bound = 1000000);

/// Evaluates both sides of the commutator congruence
///   [x_1,...,x_{n-1},x_1] == [x_{perm(1)},...,x_{perm(n-1)},x_{perm(1)}]^a
/// in UT(n+1,p) under the two generator assignments of the uniqueness
/// argument (first: x_1 = E_{12}E_{n,n+1}, x_i = E_{i,i+1}; second:
/// x_i = E_{12}...E_{n-1,n} for i <= n-2, x_{n-1} = E_{n,n+1}) and reports
/// whether each assignment is consistent with it. perm is 1-based on
/// {1..n-1}.
std::pair<bool, bool> lemLie_matrix_witness(u32 n, u32 p, const std::vector<u32>& perm, u32 a);

}  // namespace grpforge
