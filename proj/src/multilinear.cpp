#include "grpforge/multilinear.hpp"

#include <algorithm>

namespace grpforge {

GroupLike FreeNilpotentModel::random(std::mt19937_64& rng) const {
  // random word in the generator exponentials, long enough to mix degrees
  std::uniform_int_distribution<u32> letter(1, alg->rank());
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> word;
  u32 len = 2 * alg->cls() + static_cast<u32>(rng() % 3);
  for (u32 i = 0; i < len; ++i) {
    int l = static_cast<int>(letter(rng));
    word.push_back(sign(rng) ? l : -l);
  }
  return free_group_element(alg, word);
}

GroupLike FreeNilpotentModel::random_derived(std::mt19937_64& rng) const {
  GroupLike x = random(rng), y = random(rng);
  return x * y * x.inverse() * y.inverse();
}

bool FreeNilpotentModel::in_lcs_beyond(const GroupLike& g, u32 k) const {
  if (k >= alg->cls()) return true;  // truncation already quotients G^[c+1]
  return series_log(g.series()).lowest_nonzero_degree() > k;
}

UnitriMatrix UnitriModel::random(std::mt19937_64& rng) const {
  UnitriMatrix x(m, p);
  for (u32 i = 0; i < m; ++i)
    for (u32 j = i + 1; j < m; ++j) x.set(i, j, static_cast<u32>(rng() % p));
  return x;
}

UnitriMatrix UnitriModel::random_derived(std::mt19937_64& rng) const {
  return ut_commutator(random(rng), random(rng));
}

std::vector<std::pair<std::vector<u32>, u32>> lemlie_accepted(u32 n, u32 p) {
  if (n < 3 || !is_prime(p) || p <= n)
    throw std::invalid_argument("lemlie_accepted: need prime p > n >= 3");
  AlgebraPtr alg = make_algebra(n, n, p);
  std::vector<GroupLike> x;
  for (u32 i = 0; i < n; ++i) x.push_back(GroupLike::generator(alg, i));

  auto chain = [&](const std::vector<u32>& perm) {
    std::vector<GroupLike> args;
    for (u32 i : perm) args.push_back(x[i - 1]);
    args.push_back(x[perm[0] - 1]);
    return left_normed_commutator(args);
  };

  std::vector<u32> id(n - 1);
  for (u32 i = 0; i < n - 1; ++i) id[i] = i + 1;
  GroupLike lhs = chain(id);

  std::vector<std::pair<std::vector<u32>, u32>> accepted;
  std::vector<u32> perm = id;
  do {
    GroupLike base = chain(perm);
    GroupLike acc = GroupLike::one(alg);
    for (u32 a = 0; a < p; ++a) {
      if (lhs == acc) accepted.emplace_back(perm, a);
      acc = acc * base;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return accepted;
}

}  // namespace grpforge
