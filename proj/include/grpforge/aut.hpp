#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "grpforge/group.hpp"

namespace grpforge {

class SearchTimeout : public std::runtime_error {
 public:
  explicit SearchTimeout(const std::string& what) : std::runtime_error(what) {}
};

/// Generator-image description of an automorphism; the full map expands by
/// closure over the enumeration.
struct Automorphism {
  std::vector<u32> search_gens;  // domain generator sequence (element indices)
  std::vector<u32> images;       // one image per search generator
};

std::vector<u32> expand_map(const ConcreteGroup& G, const Automorphism& a);
bool is_inner(const ConcreteGroup& G, const Automorphism& a);

struct AutOptions {
  std::size_t bound = 5000;
  double timeout_sec = 900;
  /// Full N^2 homomorphism re-verification of every reported automorphism;
  /// falls back to sampling when the total cost would exceed verify_budget.
  u64 verify_budget = 20000000000ULL;
};

struct AutGroupResult {
  std::vector<u32> search_gens;
  std::vector<Automorphism> all;   // complete list of automorphisms
  std::size_t aut_order = 0;
  std::size_t inn_order = 0;
  std::size_t out_order = 0;
  std::vector<std::size_t> outer_reps;  // indices into all: Inn-coset representatives
};

/// Complete Aut(G) by backtrack over generator images with conjugacy-class
/// fingerprint pruning; every candidate is validated as a bijective
/// homomorphism before being reported.
AutGroupResult automorphism_group(const ConcreteGroup& G, const AutOptions& opt = {});

std::vector<Automorphism> inner_automorphisms(const ConcreteGroup& G,
                                              const std::vector<u32>& search_gens);

/// Out(G) = Aut(G)/Inn(G) as an enumerable group on the coset
/// representatives.
GroupPtr out_group(const ConcreteGroup& G, const AutGroupResult& aut);

struct QuotientAction {
  bool normalizes = false;
  bool induces_identity = false;
  bool induces_inner = false;
};

/// Action of a full automorphism map on G/N for a normal subgroup N given
/// by its element set. Throws if alpha does not normalize N.
QuotientAction induced_on_quotient(const ConcreteGroup& G, const std::vector<u32>& full_map,
                                   const std::vector<u32>& normal_elements);

/// Explicit isomorphism between two enumerated groups (as a full element
/// map A -> B), or nullopt with certified absence.
std::optional<std::vector<u32>> isomorphic(const ConcreteGroup& A, const ConcreteGroup& B,
                                           const AutOptions& opt = {});

struct LemmaAutReport {
  bool pass = false;
  std::size_t aut_order = 0;
  std::size_t checked = 0;  // automorphisms normalizing N
  std::string detail;
};

/// Constructs C_m : A with the faithful cyclic power action, computes its
/// automorphism group and checks that every automorphism normalizing the
/// cyclic normal subgroup induces the identity on the quotient.
LemmaAutReport verify_lemma_aut(u32 m, u32 acting_order, const AutOptions& opt = {});

}  // namespace grpforge
