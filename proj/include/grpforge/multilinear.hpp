#pragma once

#include <random>
#include <string>
#include <vector>

#include "grpforge/series.hpp"
#include "grpforge/unitriangular.hpp"

namespace grpforge {

struct CheckReport {
  bool pass = true;
  std::string detail;
};

/// Model of a nilpotent group of exponent p for the multilinearity
/// congruence: elements, group law, random sampling, a sampler of derived
/// subgroup elements and a lower-central membership test.
struct FreeNilpotentModel {
  AlgebraPtr alg;
  using Elem = GroupLike;

  Elem identity() const { return GroupLike::one(alg); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return a.inverse(); }
  Elem random(std::mt19937_64& rng) const;
  Elem random_derived(std::mt19937_64& rng) const;
  bool in_lcs_beyond(const Elem& g, u32 k) const;
};

struct UnitriModel {
  u32 m, p;
  using Elem = UnitriMatrix;

  Elem identity() const { return UnitriMatrix(m, p); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return a.inverse(); }
  Elem random(std::mt19937_64& rng) const;
  Elem random_derived(std::mt19937_64& rng) const;
  bool in_lcs_beyond(const Elem& g, u32 k) const { return ut_in_lcs(g, k + 1); }
};

/// Randomized check of the congruence
///   [g_1,...,g_i h h',...,g_k] == [g_1,...,g_k] [g_1,...,h,...,g_k]
/// mod G^{[k+1]}, with h' in the derived subgroup; fails with a witness
/// sample index.
template <class Model>
CheckReport multilinearity_check(const Model& model, u32 k, std::size_t samples, u64 seed) {
  if (k < 2) throw std::invalid_argument("multilinearity_check: k >= 2 required");
  using Elem = typename Model::Elem;
  auto commutator = [&](const Elem& x, const Elem& y) {
    return model.mul(model.mul(x, y), model.mul(model.inv(x), model.inv(y)));
  };
  auto left_normed = [&](const std::vector<Elem>& xs) {
    Elem acc = xs.back();
    for (std::size_t i = xs.size() - 1; i-- > 0;) acc = commutator(xs[i], acc);
    return acc;
  };
  std::mt19937_64 rng(seed);
  CheckReport report;
  for (std::size_t t = 0; t < samples; ++t) {
    std::vector<Elem> g;
    for (u32 i = 0; i < k; ++i) g.push_back(model.random(rng));
    Elem h = model.random(rng);
    Elem hp = model.random_derived(rng);
    u32 slot = static_cast<u32>(rng() % k);

    std::vector<Elem> lhs_args = g;
    lhs_args[slot] = model.mul(model.mul(g[slot], h), hp);
    std::vector<Elem> mid_args = g;
    mid_args[slot] = h;

    Elem lhs = left_normed(lhs_args);
    Elem rhs = model.mul(left_normed(g), left_normed(mid_args));
    if (!model.in_lcs_beyond(model.mul(lhs, model.inv(rhs)), k)) {
      report.pass = false;
      report.detail = "congruence failed at sample " + std::to_string(t) + ", slot " +
                      std::to_string(slot + 1);
      return report;
    }
  }
  report.detail = std::to_string(samples) + " samples, k=" + std::to_string(k);
  return report;
}

/// Exhaustive scan of the commutator congruence
///   [x_1,...,x_{n-1},x_1] == [x_{pi(1)},...,x_{pi(n-1)},x_{pi(1)}]^a
/// over all permutations pi of {1..n-1} and residues a, evaluated in the
/// free exponent-p group of class n. Returns the accepted (pi, a) pairs
/// (pi 1-based).
std::vector<std::pair<std::vector<u32>, u32>> lemlie_accepted(u32 n, u32 p);

}  // namespace grpforge
