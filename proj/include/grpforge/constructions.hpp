#pragma once

#include "grpforge/class2.hpp"
#include "grpforge/multilinear.hpp"
#include "grpforge/series.hpp"

namespace grpforge {

/// Direct power of the holomorph C_p : C_{p-1}, with designated generators
/// x_1..x_n (the cyclic parts) then y_1..y_n (the acting parts). The acting
/// generator exponent base is primitive_root(p).
GroupPtr holomorph_power(u32 p, u32 n, std::size_t bound = ConcreteGroup::kDefaultBound);

/// The extension tower Ghat = (Q : P) : G. Elements are triples
/// (Q-vector over F_q, class-2 element of P, element of G); the group law
/// is derived from the conjugation identities
///   g v_h g^-1 = v_{gh},  g w_h g^-1 = w_{gh},  v_g w_h v_g^-1 = gamma_g(w_h)
/// with gamma_g scaling w_g by zeta_q (an element of order p mod q).
struct PettetTower {
  GroupPtr G;
  std::vector<u32> gens;  // generating set of G (element indices, identity excluded)
  u32 p = 0, q = 0, zeta_q = 0;
  ExtensionPresentation ext;  // presentation of P on v_{g_1}..v_{g_n}
  GroupPtr N;                 // Q : P
  GroupPtr Ghat;              // N : G
  std::vector<u32> v_idx, w_idx, g_idx;  // embeddings into Ghat, by G enumeration
  std::vector<u32> N_elements;           // Ghat indices with trivial G part
  std::vector<u32> Q_elements;           // Ghat indices with trivial P and G part
};

PettetTower pettet_construct(GroupPtr G, std::vector<u32> gens, u32 p = 0, u32 q = 0,
                             std::size_t bound = ConcreteGroup::kDefaultBound);

/// Ideal of the spanning commutators [x_{hg_1},...,x_{hg_{n-1}},x_{hg_1}],
/// h in G, computed in the free exponent-p group of rank and class n = |G|.
/// Pass a prebuilt algebra to share it with the caller.
CentralIdeal cornulier_ideal(GroupPtr G, u32 p, AlgebraPtr alg = nullptr);

/// Element of H = P : Q: a quotient-reduced group-like series and the
/// exponent vector of the scaling generators q_1..q_n over Z_{p-1}.
struct HElem {
  GroupLike u;
  FpVector s;
  bool operator==(const HElem&) const = default;
};

struct CornulierGroup {
  GroupPtr G;
  u32 n = 0, p = 0, zeta = 0;  // zeta = primitive_root(p)
  AlgebraPtr alg;              // free algebra of rank n, class n
  std::shared_ptr<const CentralIdeal> ideal;
  HallBasisPtr hall;  // null when Hall machinery is skipped (large ranks)
  u64 p_exponent = 0;  // |P| = p^p_exponent
  std::vector<std::vector<u32>> sigma;  // sigma[h][i] = index of h * g_{i+1}, 0-based

  HElem identity() const;
  HElem x(u32 i, i64 e = 1) const;  // image of exp(e x_i), 0-based i
  HElem q(u32 j, i64 e = 1) const;  // q_j^e, 0-based j
  HElem mul(const HElem& a, const HElem& b) const;
  HElem inv(const HElem& a) const;
  Substitution q_sub(const FpVector& s) const;  // x_j -> zeta^{s_j} x_j
  HElem alpha(u32 h, const HElem& e) const;     // the automorphism alpha_h
  HElem random_element(std::mt19937_64& rng) const;
  std::string h_name(const HElem& e) const;
};

/// Requires |G| >= 3 (smaller inputs reduce per the classical identities
/// Out(1) = 1, Out(C_3) = C_2 and are handled by the CLI). Default p is the
/// smallest prime above |G|. Throws if the ideal rank differs from |G|.
CornulierGroup cornulier_construct(GroupPtr G, u32 p = 0, bool build_hall = true);

/// q_i- and alpha_h-invariance of the ideal row space.
CheckReport cornulier_ideal_invariance(const CornulierGroup& cg);

/// alpha_1 = id; each alpha_h for h != 1 permutes the Q coordinates without
/// fixed points (so alpha_h acts nontrivially on H/P and is outer); alpha is
/// injective.
CheckReport verify_alpha_outer(const CornulierGroup& cg);

/// Multiplicativity of every alpha_h on generator pairs and random pairs,
/// alpha_{hh'} = alpha_h o alpha_{h'} on generators, and identity images of
/// the spanning relation words.
CheckReport verify_alpha_hom(const CornulierGroup& cg, std::size_t samples = 200, u64 seed = 1);

/// C_P(q_j) vs the Lie span of {x_i : i != j}: subspace comparison in every
/// degree (mod the ideal in the top degree). Requires the Hall basis.
struct CentralizerReport {
  std::vector<bool> degree_ok;
  bool pass = true;
};
CentralizerReport centralizer_of_qj(const CornulierGroup& cg, u32 j);

/// Structure constants of H/P' against holomorph_power(p, n), through the
/// projection (degree-1 block, q-exponents).
CheckReport h_mod_pprime_vs_holomorph(const CornulierGroup& cg, std::size_t samples = 100,
                                      u64 seed = 1);

/// Color-preserving automorphisms of the Cayley color graph of (G, gens),
/// with the left-translation isomorphism G -> autos checked elementwise.
struct CayleyResult {
  GroupPtr autos;
  CheckReport left_translation_iso;
};
CayleyResult cayley_color_autos(GroupPtr G, const std::vector<u32>& gens);

}  // namespace grpforge
