#pragma once

#include <string>
#include <vector>

#include "grpforge/group.hpp"

namespace grpforge {

/// Power-commutator presentation of a class-2 group on n generators over an
/// odd prime p: relations [x_i,x_j,x_k] = 1 and x_i^p = c_i, with each c_i a
/// vector over the commutator pair basis {(j,k) : j < k}. Basis orientation:
/// e_{jk} with j < k stands for [x_j,x_k]; collecting x_k past x_j
/// contributes -1 to e_{jk}.
struct Class2Presentation {
  u32 n;
  u32 p;
  std::vector<FpVector> c;  // n vectors of length n(n-1)/2

  Class2Presentation(u32 n, u32 p, std::vector<FpVector> c_words);

  std::size_t pair_count() const { return static_cast<std::size_t>(n) * (n - 1) / 2; }
  std::size_t pair_index(u32 j, u32 k) const;  // j < k, 0-based
  bool operator==(const Class2Presentation&) const = default;
};

/// Normal form x_1^{a_1} ... x_n^{a_n} prod_{j<k} [x_j,x_k]^{b_jk}.
struct Class2Element {
  FpVector a;
  FpVector b;
  bool operator==(const Class2Element&) const = default;
};

Class2Element c2_identity(const Class2Presentation& pres);
Class2Element c2_generator(const Class2Presentation& pres, u32 i);
Class2Element c2_multiply(const Class2Presentation& pres, const Class2Element& x,
                          const Class2Element& y);
Class2Element c2_inverse(const Class2Presentation& pres, const Class2Element& x);
Class2Element c2_commutator(const Class2Presentation& pres, const Class2Element& x,
                            const Class2Element& y);
Class2Element c2_power(const Class2Presentation& pres, const Class2Element& x, i64 m);
u32 c2_element_order(const Class2Presentation& pres, const Class2Element& x);

std::string c2_name(const Class2Element& x);
Class2Element c2_parse(const Class2Presentation& pres, const std::string& name);

/// The group of the presentation as an enumerable ConcreteGroup of order
/// p^{n(n+1)/2}, generators x_1..x_n first.
GroupPtr build_lemgenrel(u32 n, u32 p, const std::vector<FpVector>& c_words,
                         std::size_t bound = ConcreteGroup::kDefaultBound);

/// The order-p^3 two-generator group with x^p = [x,y]^a, y^p = [x,y]^b,
/// classified following the case analysis: D8 / Q8 for p = 2 by parity of
/// ab, extraspecial of exponent p when a = b = 0, else C_{p^2} : C_p.
struct P3Result {
  GroupPtr group;
  std::string type_tag;  // "D8", "Q8", "extraspecial-exponent-p", "Cp2:Cp"
};
P3Result build_p3(u32 p, u32 a, u32 b);

/// Reference realizations used to certify the order-p^3 classification
/// independently of the collection engine.
GroupPtr heisenberg_mod_p(u32 p);        // UT(3,p) as a permutation-free backend
GroupPtr cp2_semidirect_cp(u32 p);       // C_{p^2} : C_p, y x y^-1 = x^{1+p}

/// Presentation of the p-group P underlying the extension tower: one
/// generator v_g per element of G, with v_g^p = prod_i [v_g, v_{g x_i}]^i.
/// Generator order is G's enumeration order (identity first).
struct ExtensionPresentation {
  Class2Presentation pres;
  GroupPtr G;
  std::vector<u32> gens;  // generating set of G, indices into its enumeration
};
ExtensionPresentation build_thmext_presentation(GroupPtr G, u32 p, const std::vector<u32>& gens);

GroupPtr build_thmext_P(GroupPtr G, u32 p, const std::vector<u32>& gens,
                        std::size_t bound = ConcreteGroup::kDefaultBound);

}  // namespace grpforge
