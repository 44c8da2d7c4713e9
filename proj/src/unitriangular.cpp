#include "grpforge/unitriangular.hpp"

#include <unordered_set>

namespace grpforge {

UnitriMatrix::UnitriMatrix(u32 m, u32 p) : m_(m), p_(p), e_(static_cast<std::size_t>(m) * m, 0) {
  if (m < 1 || !is_prime(p)) throw std::invalid_argument("UnitriMatrix: bad size or modulus");
  for (u32 i = 0; i < m; ++i) e_[i * m + i] = 1;
}

void UnitriMatrix::set(u32 i, u32 j, u32 v) {
  if (i >= j) throw std::invalid_argument("UnitriMatrix::set: strictly upper entries only");
  e_[i * m_ + j] = v % p_;
}

UnitriMatrix UnitriMatrix::operator*(const UnitriMatrix& o) const {
  if (m_ != o.m_ || p_ != o.p_) throw std::invalid_argument("UnitriMatrix: shape mismatch");
  UnitriMatrix r(m_, p_);
  for (u32 i = 0; i < m_; ++i)
    for (u32 j = i; j < m_; ++j) {
      u64 s = 0;
      for (u32 k = i; k <= j; ++k) s += static_cast<u64>(e_[i * m_ + k]) * o.e_[k * m_ + j];
      r.e_[i * m_ + j] = static_cast<u32>(s % p_);
    }
  return r;
}

UnitriMatrix UnitriMatrix::inverse() const {
  // (1+N)^-1 = sum (-N)^k, N nilpotent of index <= m
  UnitriMatrix n(m_, p_), r(m_, p_), power(m_, p_);
  for (u32 i = 0; i < m_; ++i)
    for (u32 j = i + 1; j < m_; ++j) n.e_[i * m_ + j] = (p_ - e_[i * m_ + j]) % p_;
  for (u32 i = 0; i < m_; ++i) n.e_[i * m_ + i] = 0;
  std::vector<u32> acc = r.e_;
  for (u32 k = 1; k < m_; ++k) {
    power = power * n;  // (−N)·...; sign folded into n
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t] = (acc[t] + power.e_[t]) % p_;
  }
  UnitriMatrix out(m_, p_);
  out.e_ = std::move(acc);
  // power loop used n with diagonal zero: subtract spurious diagonal shifts
  for (u32 i = 0; i < m_; ++i) out.e_[i * m_ + i] = 1;
  return out;
}

UnitriMatrix UnitriMatrix::pow(i64 e) const {
  if (e < 0) return inverse().pow(-e);
  UnitriMatrix r(m_, p_), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool UnitriMatrix::is_identity() const { return *this == UnitriMatrix(m_, p_); }

u32 UnitriMatrix::order() const {
  UnitriMatrix x = *this;
  u32 ord = 1;
  while (!x.is_identity()) {
    x = x * *this;
    ++ord;
  }
  return ord;
}

std::string UnitriMatrix::key() const {
  std::string s;
  for (u32 i = 0; i < m_; ++i)
    for (u32 j = i + 1; j < m_; ++j) {
      s += std::to_string(e_[i * m_ + j]);
      s += ',';
    }
  return s;
}

UnitriMatrix e_matrix(u32 m, u32 p, u32 i, u32 j) {
  if (i < 1 || i >= j || j > m) throw std::invalid_argument("e_matrix: need 1 <= i < j <= m");
  UnitriMatrix e(m, p);
  e.set(i - 1, j - 1, 1);
  return e;
}

UnitriMatrix ut_commutator(const UnitriMatrix& x, const UnitriMatrix& y) {
  return x * y * x.inverse() * y.inverse();
}

UnitriMatrix ut_left_normed_commutator(const std::vector<UnitriMatrix>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("ut_left_normed_commutator: need >= 2 entries");
  UnitriMatrix acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) acc = ut_commutator(xs[i], acc);
  return acc;
}

std::vector<UnitriMatrix> lcs_generators_ut(u32 m, u32 p, u32 k) {
  if (k < 1 || k > m) throw std::invalid_argument("lcs_generators_ut: need 1 <= k <= m");
  std::vector<UnitriMatrix> gens;
  for (u32 i = 1; i <= m; ++i)
    for (u32 j = i + 1; j <= m; ++j)
      if (j - i >= k) gens.push_back(e_matrix(m, p, i, j));
  return gens;
}

bool ut_in_lcs(const UnitriMatrix& x, u32 k) {
  for (u32 i = 0; i < x.size(); ++i)
    for (u32 j = i + 1; j < x.size() && j - i < k; ++j)
      if (x.at(i, j) != 0) return false;
  return true;
}

std::vector<UnitriMatrix> ut_closure(const std::vector<UnitriMatrix>& gens, std::size_t bound) {
  if (gens.empty()) return {};
  std::vector<UnitriMatrix> elems{UnitriMatrix(gens[0].size(), gens[0].p())};
  std::unordered_set<std::string> seen{elems[0].key()};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      UnitriMatrix next = elems[head] * g;
      if (seen.insert(next.key()).second) {
        elems.push_back(std::move(next));
        if (elems.size() > bound) throw std::runtime_error("ut_closure: bound exceeded");
      }
    }
  }
  return elems;
}

std::vector<UnitriMatrix> ut_lower_central(u32 m, u32 p, u32 k, std::size_t bound) {
  std::vector<UnitriMatrix> full_gens = lcs_generators_ut(m, p, 1);
  std::vector<UnitriMatrix> full = ut_closure(full_gens, bound);
  std::vector<UnitriMatrix> current = full;
  for (u32 step = 1; step < k; ++step) {
    std::vector<UnitriMatrix> comms;
    std::unordered_set<std::string> seen;
    for (const auto& g : full)
      for (const auto& h : current) {
        UnitriMatrix c = ut_commutator(g, h);
        if (seen.insert(c.key()).second) comms.push_back(std::move(c));
      }
    current = comms.empty() ? std::vector<UnitriMatrix>{UnitriMatrix(m, p)}
                            : ut_closure(comms, bound);
  }
  return current;
}

std::pair<bool, bool> lemLie_matrix_witness(u32 n, u32 p, const std::vector<u32>& perm, u32 a) {
  if (n < 3 || !is_prime(p) || p <= n)
    throw std::invalid_argument("lemLie_matrix_witness: need prime p > n >= 3");
  if (perm.size() != n - 1)
    throw std::invalid_argument("lemLie_matrix_witness: perm must act on 1..n-1");
  const u32 m = n + 1;
  a %= p;

  auto evaluate = [&](const std::vector<UnitriMatrix>& x) {
    // sequences (x_1,...,x_{n-1},x_1) and the permuted variant
    std::vector<UnitriMatrix> lhs_seq, rhs_seq;
    for (u32 i = 1; i <= n - 1; ++i) lhs_seq.push_back(x[i - 1]);
    lhs_seq.push_back(x[0]);
    for (u32 i = 1; i <= n - 1; ++i) rhs_seq.push_back(x[perm[i - 1] - 1]);
    rhs_seq.push_back(x[perm[0] - 1]);
    UnitriMatrix lhs = ut_left_normed_commutator(lhs_seq);
    UnitriMatrix rhs = ut_left_normed_commutator(rhs_seq).pow(a);
    return lhs == rhs;
  };

  std::vector<UnitriMatrix> first;
  first.push_back(e_matrix(m, p, 1, 2) * e_matrix(m, p, n, n + 1));
  for (u32 i = 2; i <= n - 1; ++i) first.push_back(e_matrix(m, p, i, i + 1));

  std::vector<UnitriMatrix> second;
  UnitriMatrix chain(m, p);
  for (u32 i = 1; i <= n - 1; ++i) chain = chain * e_matrix(m, p, i, i + 1);
  for (u32 i = 1; i <= n - 2; ++i) second.push_back(chain);
  second.push_back(e_matrix(m, p, n, n + 1));

  return {evaluate(first), evaluate(second)};
}

}  // namespace grpforge
