#include <doctest.h>

#include "grpforge/fp.hpp"

using namespace grpforge;

TEST_SUITE_BEGIN("fp");

TEST_CASE("mobius values and divisor-sum identity") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(30) == -1);
  for (u64 n = 2; n <= 64; ++n) {
    int sum = 0;
    for (u64 d = 1; d <= n; ++d)
      if (n % d == 0) sum += mobius(d);
    CHECK(sum == 0);
  }
}

TEST_CASE("witt dimensions") {
  CHECK(witt_dim(3, 1) == 3);
  CHECK(witt_dim(3, 2) == 3);
  CHECK(witt_dim(3, 3) == 8);
  CHECK(witt_total(3, 3) == 14);
  CHECK(witt_dim(1, 2) == 0);
  CHECK(witt_dim(2, 2) == 1);
  CHECK(witt_total(2, 3) == 5);
  CHECK(witt_total(1, 4) == 1);
  // exact divisibility of the necklace sum
  for (u64 n = 1; n <= 6; ++n)
    for (u64 k = 1; k <= 8; ++k) {
      i64 sum = 0;
      for (u64 d = 1; d <= k; ++d)
        if (k % d == 0) {
          i64 pw = 1;
          for (u64 i = 0; i < k / d; ++i) pw *= static_cast<i64>(n);
          sum += mobius(d) * pw;
        }
      CHECK(static_cast<u64>(sum) == k * witt_dim(n, k));
    }
}

TEST_CASE("primitive roots") {
  CHECK(primitive_root(5) == 2);
  CHECK(primitive_root(3) == 2);
  CHECK(primitive_root(7) == 3);
  for (u32 p : {3u, 5u, 7u, 11u, 13u}) {
    u32 z = primitive_root(p);
    CHECK(mod_pow(z, p - 1, p) == 1);
    for (u32 m = 1; m + 1 < p; ++m) CHECK(mod_pow(z, m, p) != 1);
  }
}

TEST_CASE("find_prime_q") {
  CHECK(find_prime_q(3) == 7);
  CHECK(find_prime_q(5) == 11);
  CHECK(find_prime_q(2) == 3);
  for (u32 p : {2u, 3u, 5u, 7u}) {
    u32 q = find_prime_q(p);
    CHECK(q % p == 1);
    for (u32 d = 2; d * d <= q; ++d) CHECK(q % d != 0);
  }
}

TEST_CASE("modular helpers") {
  CHECK(mod_reduce(-1, 5) == 4);
  CHECK(mod_inv(3, 7) == 5);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(3, 7) == 6);
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
  Residue r(9, 7);
  CHECK(r.value == 2);
  CHECK((r * r.inv()).value == 1);
}

TEST_CASE("rref is canonical and solves membership") {
  FpMatrix m(3, 5);
  m.append_row({1, 2, 3});
  m.append_row({0, 1, 4});
  m.append_row({1, 3, 2});  // sum of the first two mod 5
  CHECK(m.rref() == 2);
  CHECK(m.contains({1, 2, 3}));
  CHECK(m.contains({1, 3, 2}));
  CHECK(!m.contains({0, 0, 1}));

  FpMatrix other(3, 5);
  other.append_row({1, 3, 2});
  other.append_row({1, 2, 3});
  other.rref();
  CHECK(m.same_rowspace(other));

  // reduce_vector gives canonical coset representatives
  FpVector v{2, 4, 0};
  FpVector w = m.reduce_vector(v);
  CHECK(m.contains(fp_sub(v, w, 5)));
  CHECK(m.reduce_vector(w) == w);
}

TEST_CASE("kernel") {
  FpMatrix m(3, 7);
  m.append_row({1, 1, 0});
  m.append_row({0, 1, 1});
  auto ker = m.kernel();
  REQUIRE(ker.size() == 1);
  for (std::size_t r = 0; r < 2; ++r) {
    u64 dot = 0;
    for (std::size_t c = 0; c < 3; ++c) dot += static_cast<u64>(m.row(r)[c]) * ker[0][c];
    CHECK(dot % 7 == 0);
  }
}

TEST_CASE("row solver tracks coefficients") {
  RowSolver s(3, 5);
  std::vector<FpVector> rows{{1, 2, 3}, {0, 1, 4}, {1, 3, 2}};
  for (const auto& r : rows) s.add_row(r);
  FpVector target{1, 4, 1};  // rows[0] + 2 rows[1] mod 5
  auto x = s.solve(target);
  REQUIRE(x.has_value());
  FpVector combo(3, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) combo = fp_add(combo, fp_scale(rows[i], (*x)[i], 5), 5);
  CHECK(combo == target);
  CHECK(!s.solve({0, 0, 1}).has_value());
}

TEST_SUITE_END();
