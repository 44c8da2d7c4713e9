#include "grpforge/series.hpp"

#include <algorithm>

namespace grpforge {

FreeAlgebra::FreeAlgebra(u32 rank, u32 cls, u32 p) : rank_(rank), cls_(cls), p_(p) {
  if (rank < 1 || cls < 1) throw std::invalid_argument("FreeAlgebra: rank, class >= 1 required");
  if (!is_prime(p) || p <= cls)
    throw std::invalid_argument("FreeAlgebra: prime p > class required (Lazard range)");
  offsets_.resize(cls + 2);
  offsets_[0] = 0;
  std::size_t count = 1;
  for (u32 k = 0; k <= cls; ++k) {
    offsets_[k + 1] = offsets_[k] + count;
    count *= rank;
  }
}

std::vector<u32> FreeAlgebra::word_at(std::size_t global_index) const {
  u32 k = 0;
  while (global_index >= offsets_[k + 1]) ++k;
  std::size_t local = global_index - offsets_[k];
  std::vector<u32> word(k);
  for (u32 i = k; i-- > 0;) {
    word[i] = static_cast<u32>(local % rank_);
    local /= rank_;
  }
  return word;
}

std::size_t FreeAlgebra::index_of(const std::vector<u32>& word) const {
  if (word.size() > cls_) throw std::invalid_argument("FreeAlgebra: word too long");
  std::size_t local = 0;
  for (u32 l : word) {
    if (l >= rank_) throw std::invalid_argument("FreeAlgebra: letter out of range");
    local = local * rank_ + l;
  }
  return offsets_[word.size()] + local;
}

AlgebraPtr make_algebra(u32 rank, u32 cls, u32 p) {
  return std::make_shared<const FreeAlgebra>(rank, cls, p);
}

Series Series::one(AlgebraPtr alg) {
  Series s(std::move(alg));
  s.c_[0] = 1;
  return s;
}

Series Series::letter(AlgebraPtr alg, u32 i) {
  Series s(std::move(alg));
  s.c_[s.alg_->index_of({i})] = 1;
  return s;
}

Series Series::operator+(const Series& o) const {
  Series r(alg_);
  r.c_ = fp_add(c_, o.c_, alg_->p());
  return r;
}

Series Series::operator-(const Series& o) const {
  Series r(alg_);
  r.c_ = fp_sub(c_, o.c_, alg_->p());
  return r;
}

Series Series::scaled(u32 s) const {
  Series r(alg_);
  r.c_ = fp_scale(c_, s, alg_->p());
  return r;
}

Series Series::operator*(const Series& o) const {
  const auto& A = *alg_;
  const u32 p = A.p();
  Series r(alg_);
  for (u32 di = 0; di <= A.cls(); ++di) {
    const std::size_t oi = A.degree_offset(di);
    const std::size_t si = A.degree_size(di);
    for (u32 dj = 0; di + dj <= A.cls(); ++dj) {
      const std::size_t oj = A.degree_offset(dj);
      const std::size_t sj = A.degree_size(dj);
      const std::size_t ok = A.degree_offset(di + dj);
      for (std::size_t i = 0; i < si; ++i) {
        const u64 a = c_[oi + i];
        if (a == 0) continue;
        const std::size_t base = ok + i * sj;
        for (std::size_t j = 0; j < sj; ++j) {
          const u32 b = o.c_[oj + j];
          if (b == 0) continue;
          r.c_[base + j] = static_cast<u32>((r.c_[base + j] + a * b) % p);
        }
      }
    }
  }
  return r;
}

FpVector Series::degree_block(u32 k) const {
  auto off = alg_->degree_offset(k);
  return FpVector(c_.begin() + off, c_.begin() + off + alg_->degree_size(k));
}

void Series::set_degree_block(u32 k, const FpVector& block) {
  auto off = alg_->degree_offset(k);
  if (block.size() != alg_->degree_size(k))
    throw std::invalid_argument("set_degree_block: size mismatch");
  std::copy(block.begin(), block.end(), c_.begin() + off);
}

u32 Series::lowest_nonzero_degree() const {
  for (u32 k = 1; k <= alg_->cls(); ++k) {
    auto off = alg_->degree_offset(k);
    for (std::size_t i = 0; i < alg_->degree_size(k); ++i)
      if (c_[off + i] != 0) return k;
  }
  return alg_->cls() + 1;
}

Series series_exp(const Series& ell) {
  if (ell.coeff(0) != 0) throw std::invalid_argument("series_exp: nonzero constant term");
  const auto& alg = ell.algebra();
  Series r = Series::one(alg);
  Series power = Series::one(alg);
  u64 fact_inv = 1;
  for (u32 k = 1; k <= alg->cls(); ++k) {
    power = power * ell;
    fact_inv = fact_inv * mod_inv(k, alg->p()) % alg->p();
    r = r + power.scaled(static_cast<u32>(fact_inv));
  }
  return r;
}

Series series_log(const Series& g) {
  if (g.coeff(0) != 1) throw std::invalid_argument("series_log: constant term must be 1");
  const auto& alg = g.algebra();
  Series x = g - Series::one(alg);
  Series r = Series::zero(alg);
  Series power = Series::one(alg);
  for (u32 k = 1; k <= alg->cls(); ++k) {
    power = power * x;
    u32 coeff = mod_inv(k, alg->p());
    if (k % 2 == 0) coeff = (alg->p() - coeff) % alg->p();
    r = r + power.scaled(coeff);
  }
  return r;
}

Series lie_bracket(const Series& a, const Series& b) { return a * b - b * a; }

namespace {

// theta(a1...ak) = [...[[a1,a2],a3],...,ak] expanded into the word block.
void dynkin_accumulate(const FreeAlgebra& alg, const std::vector<u32>& word, u64 coeff,
                       FpVector& out) {
  const u32 p = alg.p();
  const u32 k = static_cast<u32>(word.size());
  // Iteratively bracket: maintain a sparse polynomial over degree-j words.
  std::vector<std::pair<std::vector<u32>, u32>> cur{{{word[0]}, static_cast<u32>(coeff % p)}};
  for (u32 j = 1; j < k; ++j) {
    std::vector<std::pair<std::vector<u32>, u32>> next;
    next.reserve(cur.size() * 2);
    for (auto& [w, c] : cur) {
      std::vector<u32> left = w;
      left.push_back(word[j]);
      next.emplace_back(std::move(left), c);
      std::vector<u32> right{word[j]};
      right.insert(right.end(), w.begin(), w.end());
      next.emplace_back(std::move(right), (p - c) % p);
    }
    cur = std::move(next);
  }
  const std::size_t off = alg.degree_offset(k);
  for (auto& [w, c] : cur) {
    std::size_t idx = alg.index_of(w) - off;
    out[idx] = static_cast<u32>((out[idx] + c) % p);
  }
}

}  // namespace

bool is_lie_element(const Series& s) {
  const auto& alg = *s.algebra();
  if (s.coeff(0) != 0) return false;
  for (u32 k = 1; k <= alg.cls(); ++k) {
    FpVector block = s.degree_block(k);
    if (fp_is_zero(block)) continue;
    FpVector theta(block.size(), 0);
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] == 0) continue;
      auto word = alg.word_at(alg.degree_offset(k) + i);
      dynkin_accumulate(alg, word, block[i], theta);
    }
    if (theta != fp_scale(block, k % alg.p(), alg.p())) return false;
  }
  return true;
}

GroupLike::GroupLike(Series s) : s_(std::move(s)) {
  if (s_.coeff(0) != 1) throw std::invalid_argument("GroupLike: constant term must be 1");
  if (!is_lie_element(series_log(s_)))
    throw std::invalid_argument("GroupLike: log is not a Lie element");
}

GroupLike group_like_unchecked(Series s) { return GroupLike(std::move(s), GroupLike::Unchecked{}); }

GroupLike GroupLike::one(AlgebraPtr alg) { return group_like_unchecked(Series::one(std::move(alg))); }

GroupLike GroupLike::generator(AlgebraPtr alg, u32 i, i64 exponent) {
  u32 e = mod_reduce(exponent, alg->p());
  return group_like_unchecked(series_exp(Series::letter(alg, i).scaled(e)));
}

GroupLike GroupLike::operator*(const GroupLike& o) const {
  return group_like_unchecked(s_ * o.s_);
}

GroupLike GroupLike::inverse() const {
  const auto& alg = s_.algebra();
  Series x = s_ - Series::one(alg);
  Series r = Series::one(alg);
  Series power = Series::one(alg);
  for (u32 k = 1; k <= alg->cls(); ++k) {
    power = power * x;
    r = r + power.scaled(k % 2 == 1 ? alg->p() - 1 : 1);
  }
  return group_like_unchecked(r);
}

GroupLike GroupLike::pow(i64 e) const {
  if (e < 0) return inverse().pow(-e);
  GroupLike r = GroupLike::one(s_.algebra());
  GroupLike base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool GroupLike::is_identity() const { return s_ == Series::one(s_.algebra()); }

GroupLike free_group_element(AlgebraPtr alg, const std::vector<int>& signed_letters) {
  GroupLike g = GroupLike::one(alg);
  for (int l : signed_letters) {
    if (l == 0 || static_cast<u32>(std::abs(l)) > alg->rank())
      throw std::invalid_argument("free_group_element: letter out of range");
    u32 i = static_cast<u32>(std::abs(l)) - 1;
    g = g * GroupLike::generator(alg, i, l > 0 ? 1 : -1);
  }
  return g;
}

GroupLike left_normed_commutator(const std::vector<GroupLike>& elements) {
  if (elements.size() < 2)
    throw std::invalid_argument("left_normed_commutator: need >= 2 elements");
  GroupLike acc = elements.back();
  for (std::size_t i = elements.size() - 1; i-- > 0;) {
    const GroupLike& x = elements[i];
    acc = x * acc * x.inverse() * acc.inverse();
  }
  return acc;
}

namespace {

bool is_lyndon(const std::vector<u32>& w) {
  // strictly smaller than all proper suffixes
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::vector<u32> suffix(w.begin() + i, w.end());
    if (!std::lexicographical_compare(w.begin(), w.end(), suffix.begin(), suffix.end()))
      return false;
  }
  return true;
}

// standard factorization: w = uv with v the longest proper Lyndon suffix
std::size_t standard_split(const std::vector<u32>& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::vector<u32> suffix(w.begin() + i, w.end());
    if (is_lyndon(suffix)) return i;
  }
  throw std::logic_error("standard_split: no Lyndon suffix");
}

struct SparsePoly {
  std::vector<std::pair<std::vector<u32>, u32>> terms;
};

SparsePoly bracket_poly(const SparsePoly& a, const SparsePoly& b, u32 p) {
  SparsePoly r;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      std::vector<u32> ab = wa;
      ab.insert(ab.end(), wb.begin(), wb.end());
      r.terms.emplace_back(std::move(ab), static_cast<u32>(static_cast<u64>(ca) * cb % p));
      std::vector<u32> ba = wb;
      ba.insert(ba.end(), wa.begin(), wa.end());
      r.terms.emplace_back(std::move(ba),
                           static_cast<u32>(static_cast<u64>(ca) * cb % p * (p - 1) % p));
    }
  return r;
}

struct LyndonExpansion {
  SparsePoly poly;
  std::string bracket;
};

LyndonExpansion expand_lyndon(const std::vector<u32>& w, u32 p) {
  if (w.size() == 1) return {{{{w, 1}}}, "x" + std::to_string(w[0] + 1)};
  std::size_t split = standard_split(w);
  std::vector<u32> u(w.begin(), w.begin() + split), v(w.begin() + split, w.end());
  auto eu = expand_lyndon(u, p);
  auto ev = expand_lyndon(v, p);
  return {bracket_poly(eu.poly, ev.poly, p), "[" + eu.bracket + "," + ev.bracket + "]"};
}

}  // namespace

HallBasis::HallBasis(AlgebraPtr alg) : alg_(std::move(alg)) {
  const u32 n = alg_->rank();
  const u32 p = alg_->p();
  by_degree_.resize(alg_->cls());
  for (u32 k = 1; k <= alg_->cls(); ++k) {
    solvers_.emplace_back(alg_->degree_size(k), p);
    std::vector<u32> word(k, 0);
    // enumerate all degree-k words lexicographically
    bool done = false;
    while (!done) {
      if (is_lyndon(word)) {
        auto exp = expand_lyndon(word, p);
        FpVector dense(alg_->degree_size(k), 0);
        const std::size_t off = alg_->degree_offset(k);
        for (const auto& [w, c] : exp.poly.terms) {
          std::size_t idx = alg_->index_of(w) - off;
          dense[idx] = static_cast<u32>((dense[idx] + c) % p);
        }
        solvers_.back().add_row(dense);
        by_degree_[k - 1].push_back({word, exp.bracket, std::move(dense)});
      }
      // next word
      u32 i = k;
      while (i-- > 0) {
        if (++word[i] < n) break;
        word[i] = 0;
        if (i == 0) done = true;
      }
      if (k == 0) break;
    }
    if (by_degree_[k - 1].size() != witt_dim(n, k))
      throw std::logic_error("HallBasis: Lyndon count does not match the Witt dimension");
    if (solvers_.back().rank() != by_degree_[k - 1].size())
      throw std::logic_error("HallBasis: expansions are linearly dependent");
  }
}

std::optional<FpVector> HallBasis::coordinates(u32 k, const FpVector& block) const {
  return solvers_[k - 1].solve(block);
}

FpVector HallBasis::expand(u32 k, const FpVector& hall_coords) const {
  const auto& entries = by_degree_[k - 1];
  if (hall_coords.size() != entries.size())
    throw std::invalid_argument("HallBasis::expand: coordinate length mismatch");
  FpVector out(alg_->degree_size(k), 0);
  const u32 p = alg_->p();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (hall_coords[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] = static_cast<u32>((out[j] +
                                 static_cast<u64>(hall_coords[i]) * entries[i].expansion[j]) %
                                p);
  }
  return out;
}

CentralIdeal make_central_ideal(AlgebraPtr alg, const std::vector<FpVector>& top_degree_rows) {
  const u32 c = alg->cls();
  FpMatrix m(alg->degree_size(c), alg->p());
  for (const auto& row : top_degree_rows) {
    Series probe(alg);
    probe.set_degree_block(c, row);
    if (!is_lie_element(probe))
      throw std::invalid_argument("make_central_ideal: row outside the Lie span");
    m.append_row(row);
  }
  m.rref();
  return CentralIdeal(c, std::move(m));
}

GroupLike quotient_reduce(const GroupLike& g, const CentralIdeal& ideal) {
  const auto& alg = g.algebra();
  if (ideal.degree != alg->cls())
    throw std::invalid_argument("quotient_reduce: ideal degree does not match the algebra class");
  Series s = g.series();
  s.set_degree_block(ideal.degree, ideal.rows.reduce_vector(s.degree_block(ideal.degree)));
  return group_like_unchecked(std::move(s));
}

Substitution Substitution::identity(u32 rank) {
  Substitution s;
  s.target.resize(rank);
  s.scalar.assign(rank, 1);
  for (u32 i = 0; i < rank; ++i) s.target[i] = i;
  return s;
}

Substitution Substitution::scale_letter(u32 rank, u32 i, u32 sc) {
  Substitution s = identity(rank);
  s.scalar[i] = sc;
  return s;
}

Substitution Substitution::permute(const std::vector<u32>& perm) {
  Substitution s = identity(static_cast<u32>(perm.size()));
  s.target = perm;
  return s;
}

Substitution Substitution::kill_letter(u32 rank, u32 i) {
  Substitution s = identity(rank);
  s.scalar[i] = 0;
  return s;
}

Series apply_substitution(const Substitution& sub, const Series& s) {
  const auto& alg = *s.algebra();
  const u32 p = alg.p();
  Series r(s.algebra());
  r.coeff(0) = s.coeff(0);
  for (u32 k = 1; k <= alg.cls(); ++k) {
    const std::size_t off = alg.degree_offset(k);
    for (std::size_t i = 0; i < alg.degree_size(k); ++i) {
      const u32 c = s.coeff(off + i);
      if (c == 0) continue;
      auto word = alg.word_at(off + i);
      u64 factor = c;
      for (auto& l : word) {
        factor = factor * sub.scalar[l] % p;
        l = sub.target[l];
      }
      if (factor == 0) continue;
      std::size_t idx = alg.index_of(word);
      r.coeff(idx) = static_cast<u32>((r.coeff(idx) + factor) % p);
    }
  }
  return r;
}

GroupLike apply_substitution(const Substitution& sub, const GroupLike& g) {
  Series img = apply_substitution(sub, g.series());
  if (img.coeff(0) != 1)
    throw std::invalid_argument("apply_substitution: image is not group-like");
  return group_like_unchecked(std::move(img));
}

FpVector lcs_component(const GroupLike& g, u32 k, const HallBasis& hall) {
  Series ell = series_log(g.series());
  for (u32 d = 1; d < k; ++d)
    if (!fp_is_zero(ell.degree_block(d)))
      throw std::invalid_argument("lcs_component: element outside F^[" + std::to_string(k) + "]");
  auto coords = hall.coordinates(k, ell.degree_block(k));
  if (!coords) throw std::logic_error("lcs_component: log outside the Hall span");
  return *coords;
}

FixedSubspace fixed_subgroup(const Substitution& endo, const CentralIdeal* ideal,
                             const HallBasis& hall) {
  const auto& alg = *hall.algebra();
  const u32 p = alg.p();
  FixedSubspace result;
  for (u32 k = 1; k <= alg.cls(); ++k) {
    const auto& entries = hall.degree(k);
    const std::size_t d = entries.size();
    const bool top = ideal != nullptr && k == ideal->degree;
    if (top) {
      // verify the endomorphism preserves the ideal in its degree
      for (std::size_t r = 0; r < ideal->rows.rows(); ++r) {
        Series probe(hall.algebra());
        probe.set_degree_block(k, ideal->rows.row(r));
        FpVector img = apply_substitution(endo, probe).degree_block(k);
        if (!ideal->rows.contains(img))
          throw std::invalid_argument("fixed_subgroup: endomorphism does not preserve the ideal");
      }
    }
    // images of Hall basis vectors, reduced mod the ideal at top degree
    std::vector<FpVector> rows;
    for (std::size_t i = 0; i < d; ++i) {
      Series probe(hall.algebra());
      probe.set_degree_block(k, entries[i].expansion);
      FpVector img = apply_substitution(endo, probe).degree_block(k);
      if (top) img = ideal->rows.reduce_vector(img);
      auto coords = hall.coordinates(k, img);
      if (!coords)
        throw std::logic_error("fixed_subgroup: substitution image outside the Lie span");
      FpVector base(d, 0);
      base[i] = 1;
      if (top) {
        FpVector red = ideal->rows.reduce_vector(entries[i].expansion);
        auto bc = hall.coordinates(k, red);
        base = *bc;
      }
      rows.push_back(fp_sub(*coords, base, p));
    }
    FpMatrix m(d, p);
    for (auto& r : rows) m.append_row(std::move(r));
    // fixed vectors: v with v * M = 0 (v in Hall coords, rows = images)
    auto kernel_rows = m.transposed().kernel();
    FpMatrix basis(d, p);
    for (auto& v : kernel_rows) basis.append_row(std::move(v));
    basis.rref();
    result.by_degree.push_back(std::move(basis));
  }
  return result;
}

u64 quotient_order_exponent(u32 n, u32 c, const CentralIdeal* ideal) {
  u64 e = witt_total(n, c);
  if (ideal) e -= ideal->rank();
  return e;
}

}  // namespace grpforge
