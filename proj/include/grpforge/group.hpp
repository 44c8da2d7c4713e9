#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "grpforge/fp.hpp"

namespace grpforge {

class BoundExceeded : public std::runtime_error {
 public:
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

class InvalidAction : public std::runtime_error {
 public:
  explicit InvalidAction(const std::string& what) : std::runtime_error(what) {}
};

/// Unambiguous serialization of element components: each part is
/// length-prefixed, so nested packs never collide.
std::string pack(const std::vector<std::string>& parts);
std::vector<std::string> unpack(const std::string& s);

/// Abstract description of a group: identity, generators and a composition
/// law, all on canonical element strings. realize() turns this into an
/// enumerated ConcreteGroup by closure.
struct GroupBackend {
  std::string label;
  std::string identity;
  std::vector<std::string> generators;
  std::function<std::string(const std::string&, const std::string&)> mul;
};

class ConcreteGroup;
using GroupPtr = std::shared_ptr<const ConcreteGroup>;

/// A finite group with a fixed enumeration. Element 0 is the identity; the
/// enumeration order is the BFS closure order from the designated
/// generators and is stable across runs. A full multiplication table is
/// kept for orders up to kTableCap; beyond that products fall back to the
/// backend law.
class ConcreteGroup {
 public:
  static constexpr std::size_t kDefaultBound = 1000000;
  static constexpr std::size_t kTableCap = 4096;

  static GroupPtr realize(GroupBackend backend, std::size_t bound = kDefaultBound);

  std::size_t order() const { return names_.size(); }
  u32 identity() const { return 0; }
  u32 mul(u32 a, u32 b) const;
  u32 inv(u32 a) const { return inv_[a]; }
  u32 conj(u32 g, u32 x) const { return mul(mul(g, x), inv(g)); }
  u32 power(u32 a, i64 e) const;
  u32 element_order(u32 a) const;

  const std::vector<u32>& generators() const { return gen_idx_; }
  const std::string& name(u32 e) const { return names_[e]; }
  std::optional<u32> find(const std::string& name) const;
  const std::string& label() const { return backend_.label; }
  bool has_table() const { return !table_.empty(); }

  /// Word in generator ordinals reaching element e from the identity.
  std::vector<u32> word_of(u32 e) const;

  struct Classes {
    std::vector<u32> class_of;              // element -> class id
    std::vector<std::vector<u32>> members;  // class id -> elements
  };
  const Classes& classes() const;
  std::size_t centralizer_order(u32 x) const;
  std::vector<u32> center() const;
  std::vector<u32> subgroup_closure(const std::vector<u32>& seeds) const;
  bool is_abelian() const;

  /// FNV-1a hash of the enumerated names in order; reports carry this so
  /// that enumeration-order-dependent results are reproducible.
  u64 enumeration_fingerprint() const;
  /// Same hash over the full multiplication table (used as a cache key).
  u64 table_fingerprint() const;

  /// Spot-check of the group axioms, run once at realize(): identity and
  /// inverses exhaustively, associativity on random triples (exhaustive
  /// when order^3 <= 1e6).
  void check_axioms(std::size_t samples = 10000) const;

 private:
  friend GroupPtr realize_with_table(GroupBackend, std::size_t);
  ConcreteGroup() = default;

  GroupBackend backend_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, u32> index_;
  std::vector<std::uint16_t> table_;  // table_[b * n + a] = a*b
  std::vector<u32> inv_;
  std::vector<u32> gen_idx_;
  std::vector<std::pair<u32, u32>> bfs_link_;  // (parent, generator ordinal)
  mutable std::unique_ptr<Classes> classes_;
  mutable std::vector<u32> orders_;
};

/// Action of a group on another group, given by one target permutation per
/// acting generator. Arbitrary acting elements act by composing along a
/// factorization word.
class ActionMap {
 public:
  ActionMap(GroupPtr acting, GroupPtr target, std::vector<std::vector<u32>> generator_images);

  const std::vector<u32>& perm_of(u32 acting_element) const;
  const GroupPtr& acting() const { return acting_; }
  const GroupPtr& target() const { return target_; }

  /// Checks that every generator image is an automorphism of the target and
  /// that the action respects the acting group's multiplication. Exhaustive
  /// for small groups, sampled above pair_bound.
  void validate(std::size_t pair_bound = 1000000) const;

 private:
  GroupPtr acting_;
  GroupPtr target_;
  std::vector<std::vector<u32>> gen_images_;
  mutable std::vector<std::vector<u32>> cache_;
};

// Atom constructors.
GroupBackend cyclic_backend(u32 m);
GroupBackend symmetric_backend(u32 m);
GroupBackend dihedral_backend(u32 order);      // order = 2m
GroupBackend quaternion8_backend();
GroupBackend perm_backend(const std::vector<std::vector<u32>>& generator_images);  // 0-based images
GroupBackend direct_product_backend(GroupPtr a, GroupPtr b);
GroupBackend semidirect_backend(GroupPtr normal, GroupPtr acting, std::shared_ptr<const ActionMap> action);

GroupPtr semidirect(GroupPtr normal, GroupPtr acting, std::shared_ptr<const ActionMap> action,
                    std::size_t bound = ConcreteGroup::kDefaultBound);
GroupPtr direct_product(GroupPtr a, GroupPtr b, std::size_t bound = ConcreteGroup::kDefaultBound);

/// Faithful-type action of cyclic C_k on cyclic C_m: the acting generator
/// maps x to x^s where s is the smallest integer of multiplicative order
/// exactly k mod m. Throws InvalidAction if none exists.
std::shared_ptr<const ActionMap> cyclic_power_action(GroupPtr normal_cyclic, GroupPtr acting_cyclic);

}  // namespace grpforge
