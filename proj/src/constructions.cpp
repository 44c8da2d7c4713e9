#include "grpforge/constructions.hpp"

#include <algorithm>
#include <unordered_map>

namespace grpforge {

namespace {

u32 next_prime_above(u32 n) {
  u32 p = n + 1;
  while (!is_prime(p)) ++p;
  return p;
}

std::string vec_name(const FpVector& v) {
  std::vector<std::string> parts;
  for (u32 x : v) parts.push_back(std::to_string(x));
  return pack(parts);
}

FpVector vec_parse(const std::string& s) {
  FpVector v;
  for (const auto& part : unpack(s)) v.push_back(static_cast<u32>(std::stoul(part)));
  return v;
}

std::vector<u32> vec_parse_csv(const std::string& s, u32 n) {
  std::vector<u32> v;
  v.reserve(n);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    v.push_back(static_cast<u32>(std::stoul(s.substr(pos, comma - pos))));
    pos = comma + 1;
  }
  return v;
}

/// Generator relabeling v_i -> v_{sigma(i)} on class-2 normal forms.
Class2Element c2_relabel(const Class2Presentation& pres, const Class2Element& x,
                         const std::vector<u32>& sigma) {
  Class2Element r{FpVector(pres.n, 0), FpVector(pres.pair_count(), 0)};
  for (u32 i = 0; i < pres.n; ++i) r.a[sigma[i]] = x.a[i];
  for (u32 j = 0; j < pres.n; ++j)
    for (u32 k = j + 1; k < pres.n; ++k) {
      u32 v = x.b[pres.pair_index(j, k)];
      if (v == 0) continue;
      u32 sj = sigma[j], sk = sigma[k];
      std::size_t idx = sj < sk ? pres.pair_index(sj, sk) : pres.pair_index(sk, sj);
      u32 add = sj < sk ? v : pres.p - v;
      r.b[idx] = (r.b[idx] + add) % pres.p;
    }
  return r;
}

std::vector<std::vector<u32>> left_translations(const ConcreteGroup& G) {
  std::vector<std::vector<u32>> sigma(G.order(), std::vector<u32>(G.order()));
  for (u32 h = 0; h < G.order(); ++h)
    for (u32 i = 0; i < G.order(); ++i) sigma[h][i] = G.mul(h, i);
  return sigma;
}

}  // namespace

GroupPtr holomorph_power(u32 p, u32 n, std::size_t bound) {
  if (!is_prime(p) || p < 3 || n < 1)
    throw std::invalid_argument("holomorph_power: odd prime p and n >= 1 required");
  const u32 zeta = primitive_root(p);
  GroupBackend b;
  b.label = "Hol(C" + std::to_string(p) + ")^" + std::to_string(n);
  b.identity = vec_name(FpVector(2 * n, 0));
  for (u32 i = 0; i < 2 * n; ++i) {
    FpVector g(2 * n, 0);
    g[i] = 1;
    b.generators.push_back(vec_name(g));
  }
  // element (a, s) = prod x_i^{a_i} prod y_i^{s_i};
  // y x y^-1 = x^zeta gives (a,s)(b,t) = (a + zeta^s b, s + t)
  b.mul = [p, n, zeta](const std::string& xs, const std::string& ys) {
    FpVector x = vec_parse(xs), y = vec_parse(ys);
    FpVector r(2 * n);
    for (u32 i = 0; i < n; ++i) {
      r[i] = static_cast<u32>((x[i] + static_cast<u64>(y[i]) * mod_pow(zeta, x[n + i], p)) % p);
      r[n + i] = (x[n + i] + y[n + i]) % (p - 1);
    }
    return vec_name(r);
  };
  u64 order = 1;
  for (u32 i = 0; i < n; ++i) order *= static_cast<u64>(p) * (p - 1);
  if (order > bound) throw BoundExceeded("holomorph_power: order above enumeration bound");
  auto g = ConcreteGroup::realize(std::move(b), bound);
  if (g->order() != order) throw std::logic_error("holomorph_power: enumeration order mismatch");
  return g;
}

PettetTower pettet_construct(GroupPtr G, std::vector<u32> gens, u32 p, u32 q, std::size_t bound) {
  if (!G || G->order() < 2) throw std::invalid_argument("pettet_construct: G != 1 required");
  const u32 n = static_cast<u32>(G->order());
  if (p == 0) p = next_prime_above(n);
  if (!is_prime(p) || p <= n) throw std::invalid_argument("pettet_construct: prime p > |G| required");
  if (q == 0) q = find_prime_q(p);
  if (!is_prime(q) || q % p != 1)
    throw std::invalid_argument("pettet_construct: prime q = 1 mod p required");

  PettetTower t{G,
                gens,
                p,
                q,
                mod_pow(primitive_root(q), (q - 1) / p, q),
                build_thmext_presentation(G, p, gens),
                nullptr,
                nullptr,
                {},
                {},
                {},
                {},
                {}};
  const Class2Presentation& pres = t.ext.pres;
  auto sigma = left_translations(*G);

  // left translation must be an automorphism of the presentation
  for (u32 h = 0; h < n; ++h)
    for (u32 g = 0; g < n; ++g) {
      Class2Element cg{FpVector(n, 0), pres.c[g]};
      if (c2_relabel(pres, cg, sigma[h]).b != pres.c[sigma[h][g]])
        throw std::logic_error("pettet_construct: relations not invariant under G");
    }

  const u32 zq = t.zeta_q;
  auto n_mul = [pres, q, zq](const FpVector& u1, const Class2Element& x1, const FpVector& u2,
                             const Class2Element& x2) {
    FpVector u(u1.size());
    for (std::size_t h = 0; h < u.size(); ++h)
      u[h] = static_cast<u32>((u1[h] + static_cast<u64>(u2[h]) * mod_pow(zq, x1.a[h], q)) % q);
    return std::make_pair(std::move(u), c2_multiply(pres, x1, x2));
  };

  GroupBackend nb;
  nb.label = "Q:P(" + G->label() + ")";
  nb.identity = pack({vec_name(FpVector(n, 0)), c2_name(c2_identity(pres))});
  for (u32 i = 0; i < n; ++i) {
    FpVector w(n, 0);
    w[i] = 1;
    nb.generators.push_back(pack({vec_name(w), c2_name(c2_identity(pres))}));
    nb.generators.push_back(pack({vec_name(FpVector(n, 0)), c2_name(c2_generator(pres, i))}));
  }
  nb.mul = [pres, n_mul](const std::string& xs, const std::string& ys) {
    auto xp = unpack(xs), yp = unpack(ys);
    auto [u, x] = n_mul(vec_parse(xp[0]), c2_parse(pres, xp[1]), vec_parse(yp[0]),
                        c2_parse(pres, yp[1]));
    return pack({vec_name(u), c2_name(x)});
  };
  t.N = ConcreteGroup::realize(std::move(nb), bound);

  GroupBackend gb;
  gb.label = "(Q:P):" + G->label();
  auto gname = [&](const FpVector& u, const Class2Element& x, u32 g) {
    return pack({vec_name(u), c2_name(x), G->name(g)});
  };
  gb.identity = gname(FpVector(n, 0), c2_identity(pres), G->identity());
  {
    FpVector w(n, 0);
    w[0] = 1;
    gb.generators.push_back(gname(w, c2_identity(pres), G->identity()));
    gb.generators.push_back(gname(FpVector(n, 0), c2_generator(pres, 0), G->identity()));
    for (u32 g : gens) gb.generators.push_back(gname(FpVector(n, 0), c2_identity(pres), g));
  }
  gb.mul = [G, pres, sigma, n_mul](const std::string& xs, const std::string& ys) {
    auto xp = unpack(xs), yp = unpack(ys);
    u32 g1 = *G->find(xp[2]), g2 = *G->find(yp[2]);
    const auto& sg = sigma[g1];
    FpVector u2 = vec_parse(yp[0]), u2p(u2.size());
    for (std::size_t h = 0; h < u2.size(); ++h) u2p[sg[h]] = u2[h];
    Class2Element x2p = c2_relabel(pres, c2_parse(pres, yp[1]), sg);
    auto [u, x] = n_mul(vec_parse(xp[0]), c2_parse(pres, xp[1]), u2p, x2p);
    return pack({vec_name(u), c2_name(x), G->name(G->mul(g1, g2))});
  };
  t.Ghat = ConcreteGroup::realize(std::move(gb), bound);

  u64 expect = static_cast<u64>(n);
  for (u32 i = 0; i < n; ++i) expect *= q;
  for (u32 i = 0; i < n * (n + 1) / 2; ++i) expect *= p;
  if (t.Ghat->order() != expect || t.N->order() * n != expect)
    throw std::logic_error("pettet_construct: order formula mismatch");

  for (u32 i = 0; i < n; ++i) {
    FpVector w(n, 0);
    w[i] = 1;
    t.w_idx.push_back(*t.Ghat->find(gname(w, c2_identity(pres), G->identity())));
    t.v_idx.push_back(*t.Ghat->find(gname(FpVector(n, 0), c2_generator(pres, i), G->identity())));
    t.g_idx.push_back(*t.Ghat->find(gname(FpVector(n, 0), c2_identity(pres), i)));
  }
  for (u32 e = 0; e < t.Ghat->order(); ++e) {
    auto parts = unpack(t.Ghat->name(e));
    if (parts[2] != G->name(G->identity())) continue;
    t.N_elements.push_back(e);
    if (c2_parse(pres, parts[1]) == c2_identity(pres)) t.Q_elements.push_back(e);
  }

  // conjugation identities on the indexed generators
  const auto& GH = *t.Ghat;
  for (u32 g = 0; g < n; ++g)
    for (u32 h = 0; h < n; ++h) {
      if (GH.conj(t.g_idx[g], t.v_idx[h]) != t.v_idx[sigma[g][h]] ||
          GH.conj(t.g_idx[g], t.w_idx[h]) != t.w_idx[sigma[g][h]])
        throw std::logic_error("pettet_construct: G-conjugation identity fails");
      u32 c = GH.conj(t.v_idx[g], t.w_idx[h]);
      u32 want = g == h ? GH.power(t.w_idx[h], t.zeta_q) : t.w_idx[h];
      if (c != want) throw std::logic_error("pettet_construct: gamma identity fails");
    }
  return t;
}

CentralIdeal cornulier_ideal(GroupPtr G, u32 p, AlgebraPtr alg) {
  if (!G || G->order() < 3) throw std::invalid_argument("cornulier_ideal: |G| >= 3 required");
  const u32 n = static_cast<u32>(G->order());
  if (!is_prime(p) || p <= n) throw std::invalid_argument("cornulier_ideal: prime p > |G| required");
  if (!alg) alg = make_algebra(n, n, p);
  auto sigma = left_translations(*G);

  std::vector<FpVector> rows;
  for (u32 h = 0; h < n; ++h) {
    std::vector<GroupLike> args;
    for (u32 i = 0; i + 1 < n; ++i) args.push_back(GroupLike::generator(alg, sigma[h][i]));
    args.push_back(GroupLike::generator(alg, sigma[h][0]));
    Series ell = series_log(left_normed_commutator(args).series());
    if (ell.lowest_nonzero_degree() < n)
      throw std::logic_error("cornulier_ideal: spanning commutator below top degree");
    rows.push_back(ell.degree_block(n));
  }
  return make_central_ideal(alg, rows);
}

HElem CornulierGroup::identity() const { return {GroupLike::one(alg), FpVector(n, 0)}; }

HElem CornulierGroup::x(u32 i, i64 e) const {
  return {quotient_reduce(GroupLike::generator(alg, i, e), *ideal), FpVector(n, 0)};
}

HElem CornulierGroup::q(u32 j, i64 e) const {
  FpVector s(n, 0);
  s[j] = mod_reduce(e, p - 1);
  return {GroupLike::one(alg), std::move(s)};
}

Substitution CornulierGroup::q_sub(const FpVector& s) const {
  Substitution sub = Substitution::identity(n);
  for (u32 j = 0; j < n; ++j) sub.scalar[j] = mod_pow(zeta, s[j], p);
  return sub;
}

HElem CornulierGroup::mul(const HElem& a, const HElem& b) const {
  GroupLike u = quotient_reduce(a.u * apply_substitution(q_sub(a.s), b.u), *ideal);
  FpVector s(n);
  for (u32 j = 0; j < n; ++j) s[j] = (a.s[j] + b.s[j]) % (p - 1);
  return {std::move(u), std::move(s)};
}

HElem CornulierGroup::inv(const HElem& a) const {
  FpVector s(n);
  for (u32 j = 0; j < n; ++j) s[j] = (p - 1 - a.s[j]) % (p - 1);
  GroupLike u = quotient_reduce(apply_substitution(q_sub(s), a.u.inverse()), *ideal);
  return {std::move(u), std::move(s)};
}

HElem CornulierGroup::alpha(u32 h, const HElem& e) const {
  GroupLike u = quotient_reduce(apply_substitution(Substitution::permute(sigma[h]), e.u), *ideal);
  FpVector s(n);
  for (u32 j = 0; j < n; ++j) s[sigma[h][j]] = e.s[j];
  return {std::move(u), std::move(s)};
}

HElem CornulierGroup::random_element(std::mt19937_64& rng) const {
  HElem e = identity();
  for (u32 step = 0; step < n + 2; ++step) {
    e = mul(e, x(static_cast<u32>(rng() % n), static_cast<i64>(rng() % p)));
    e = mul(e, q(static_cast<u32>(rng() % n), static_cast<i64>(rng() % (p - 1))));
  }
  return e;
}

std::string CornulierGroup::h_name(const HElem& e) const {
  return pack({vec_name(e.u.series().data()), vec_name(e.s)});
}

CornulierGroup cornulier_construct(GroupPtr G, u32 p, bool build_hall) {
  if (!G || G->order() < 3) throw std::invalid_argument("cornulier_construct: |G| >= 3 required");
  CornulierGroup cg;
  cg.G = G;
  cg.n = static_cast<u32>(G->order());
  cg.p = p ? p : next_prime_above(cg.n);
  cg.zeta = primitive_root(cg.p);
  cg.alg = make_algebra(cg.n, cg.n, cg.p);
  cg.ideal = std::make_shared<CentralIdeal>(cornulier_ideal(G, cg.p, cg.alg));
  if (cg.ideal->rank() != cg.n)
    throw std::runtime_error("cornulier_construct: ideal rank " + std::to_string(cg.ideal->rank()) +
                             " != |G| = " + std::to_string(cg.n));
  cg.p_exponent = quotient_order_exponent(cg.n, cg.n, cg.ideal.get());
  cg.sigma = left_translations(*G);
  if (build_hall) cg.hall = std::make_shared<const HallBasis>(cg.alg);
  return cg;
}

CheckReport cornulier_ideal_invariance(const CornulierGroup& cg) {
  CheckReport report;
  auto transformed_ok = [&](const Substitution& sub, const std::string& what) {
    FpMatrix m(cg.ideal->rows.cols(), cg.p);
    for (std::size_t r = 0; r < cg.ideal->rank(); ++r) {
      Series s(cg.alg);
      s.set_degree_block(cg.n, cg.ideal->rows.row(r));
      m.append_row(apply_substitution(sub, s).degree_block(cg.n));
    }
    m.rref();
    if (!m.same_rowspace(cg.ideal->rows)) {
      report.pass = false;
      report.detail = what + " does not preserve the ideal";
      return false;
    }
    return true;
  };
  for (u32 j = 0; j < cg.n; ++j)
    if (!transformed_ok(Substitution::scale_letter(cg.n, j, cg.zeta),
                        "q_" + std::to_string(j + 1)))
      return report;
  for (u32 h = 0; h < cg.n; ++h)
    if (!transformed_ok(Substitution::permute(cg.sigma[h]), "alpha_" + cg.G->name(h)))
      return report;
  report.detail = "ideal invariant under all q_i and alpha_h";
  return report;
}

CheckReport verify_alpha_outer(const CornulierGroup& cg) {
  CheckReport report;
  for (u32 i = 0; i < cg.n; ++i)
    if (!(cg.alpha(0, cg.x(i)) == cg.x(i)) || !(cg.alpha(0, cg.q(i)) == cg.q(i))) {
      report.pass = false;
      report.detail = "alpha_1 is not the identity";
      return report;
    }
  for (u32 h = 1; h < cg.n; ++h)
    for (u32 i = 0; i < cg.n; ++i)
      if (cg.sigma[h][i] == i) {
        report.pass = false;
        report.detail = "alpha_" + cg.G->name(h) + " fixes a Q coordinate";
        return report;
      }
  for (u32 h = 0; h < cg.n; ++h)
    for (u32 hp = h + 1; hp < cg.n; ++hp)
      if (cg.sigma[h] == cg.sigma[hp]) {
        report.pass = false;
        report.detail = "alpha is not injective";
        return report;
      }
  report.detail = "alpha_h acts freely on the Q coordinates for every h != 1";
  return report;
}

CheckReport verify_alpha_hom(const CornulierGroup& cg, std::size_t samples, u64 seed) {
  CheckReport report;
  std::vector<HElem> gens;
  for (u32 i = 0; i < cg.n; ++i) gens.push_back(cg.x(i));
  for (u32 j = 0; j < cg.n; ++j) gens.push_back(cg.q(j));

  std::mt19937_64 rng(seed);
  for (u32 h = 0; h < cg.n; ++h) {
    auto check_pair = [&](const HElem& a, const HElem& b) {
      return cg.alpha(h, cg.mul(a, b)) == cg.mul(cg.alpha(h, a), cg.alpha(h, b));
    };
    for (const auto& a : gens)
      for (const auto& b : gens)
        if (!check_pair(a, b)) {
          report.pass = false;
          report.detail = "alpha_" + cg.G->name(h) + " not multiplicative on generators";
          return report;
        }
    for (std::size_t t = 0; t < samples; ++t)
      if (!check_pair(cg.random_element(rng), cg.random_element(rng))) {
        report.pass = false;
        report.detail = "alpha_" + cg.G->name(h) + " not multiplicative on random pair";
        return report;
      }
  }
  for (u32 h = 0; h < cg.n; ++h)
    for (u32 hp = 0; hp < cg.n; ++hp) {
      u32 hh = cg.G->mul(h, hp);
      for (const auto& g : gens)
        if (!(cg.alpha(hh, g) == cg.alpha(h, cg.alpha(hp, g)))) {
          report.pass = false;
          report.detail = "alpha is not a homomorphism on G";
          return report;
        }
    }
  report.detail = "all alpha_h multiplicative; alpha a homomorphism";
  return report;
}

CentralizerReport centralizer_of_qj(const CornulierGroup& cg, u32 j) {
  if (!cg.hall) throw std::logic_error("centralizer_of_qj: Hall basis not built");
  CentralizerReport report;
  FixedSubspace fixed =
      fixed_subgroup(Substitution::scale_letter(cg.n, j, cg.zeta), cg.ideal.get(), *cg.hall);
  for (u32 k = 1; k <= cg.n; ++k) {
    // span of Hall elements avoiding letter j, plus the ideal in the top degree
    FpMatrix expect(cg.hall->count(k), cg.p);
    const auto& entries = cg.hall->degree(k);
    for (std::size_t e = 0; e < entries.size(); ++e) {
      bool has_j = std::find(entries[e].word.begin(), entries[e].word.end(), j) !=
                   entries[e].word.end();
      if (has_j) continue;
      FpVector row(entries.size(), 0);
      row[e] = 1;
      expect.append_row(std::move(row));
    }
    if (k == cg.n)
      for (std::size_t r = 0; r < cg.ideal->rank(); ++r) {
        auto coords = cg.hall->coordinates(cg.n, cg.ideal->rows.row(r));
        if (!coords) throw std::logic_error("centralizer_of_qj: ideal row outside Lie span");
        expect.append_row(std::move(*coords));
      }
    expect.rref();
    bool ok = expect.same_rowspace(fixed.by_degree[k - 1]);
    report.degree_ok.push_back(ok);
    if (!ok) report.pass = false;
  }
  return report;
}

CheckReport h_mod_pprime_vs_holomorph(const CornulierGroup& cg, std::size_t samples, u64 seed) {
  CheckReport report;
  auto hol = holomorph_power(cg.p, cg.n);
  auto embed = [&](const HElem& e) {
    u32 r = hol->identity();
    for (u32 i = 0; i < cg.n; ++i) {
      std::size_t idx = cg.alg->index_of({i});
      r = hol->mul(r, hol->power(hol->generators()[i], e.u.series().coeff(idx)));
    }
    for (u32 j = 0; j < cg.n; ++j)
      r = hol->mul(r, hol->power(hol->generators()[cg.n + j], e.s[j]));
    return r;
  };
  std::mt19937_64 rng(seed);
  std::vector<HElem> gens;
  for (u32 i = 0; i < cg.n; ++i) gens.push_back(cg.x(i));
  for (u32 j = 0; j < cg.n; ++j) gens.push_back(cg.q(j));
  auto check_pair = [&](const HElem& a, const HElem& b) {
    return embed(cg.mul(a, b)) == hol->mul(embed(a), embed(b));
  };
  for (const auto& a : gens)
    for (const auto& b : gens)
      if (!check_pair(a, b)) {
        report.pass = false;
        report.detail = "structure constants differ on a generator pair";
        return report;
      }
  for (std::size_t t = 0; t < samples; ++t)
    if (!check_pair(cg.random_element(rng), cg.random_element(rng))) {
      report.pass = false;
      report.detail = "structure constants differ on a random pair";
      return report;
    }
  report.detail = "H/P' multiplication matches " + hol->label();
  return report;
}

CayleyResult cayley_color_autos(GroupPtr G, const std::vector<u32>& gens) {
  if (!G || G->order() < 2) throw std::invalid_argument("cayley_color_autos: G != 1 required");
  if (G->subgroup_closure(gens).size() != G->order())
    throw std::invalid_argument("cayley_color_autos: set does not generate G");
  const u32 n = static_cast<u32>(G->order());

  // propagate sigma(1) = t along colored edges g -> g x_i and verify
  std::vector<std::vector<u32>> found;
  for (u32 t = 0; t < n; ++t) {
    std::vector<u32> s(n, UINT32_MAX);
    std::vector<u32> queue{G->identity()};
    s[G->identity()] = t;
    bool ok = true;
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      for (u32 x : gens) {
        u32 from = queue[head], to = G->mul(from, x);
        u32 img = G->mul(s[from], x);
        if (s[to] == UINT32_MAX) {
          s[to] = img;
          queue.push_back(to);
        } else if (s[to] != img) {
          ok = false;
          break;
        }
      }
    }
    if (!ok || queue.size() != n) continue;
    std::vector<bool> hit(n, false);
    for (u32 v : s) {
      if (hit[v]) ok = false;
      hit[v] = true;
    }
    for (u32 g = 0; g < n && ok; ++g)
      for (u32 x : gens)
        if (s[G->mul(g, x)] != G->mul(s[g], x)) ok = false;
    if (ok) found.push_back(std::move(s));
  }

  auto key = [](const std::vector<u32>& s) {
    std::string k;
    for (u32 v : s) {
      k += std::to_string(v);
      k += ',';
    }
    return k;
  };

  GroupBackend b;
  b.label = "CayleyAut(" + G->label() + ")";
  std::vector<u32> id(n);
  for (u32 i = 0; i < n; ++i) id[i] = i;
  b.identity = key(id);
  for (u32 x : gens) {
    std::vector<u32> lt(n);
    for (u32 g = 0; g < n; ++g) lt[g] = G->mul(x, g);
    b.generators.push_back(key(lt));
  }
  // function composition (x*y)(v) = x(y(v)), so left translations compose
  // as L_t L_u = L_{tu}
  b.mul = [n, key](const std::string& xs, const std::string& ys) {
    std::vector<u32> x = vec_parse_csv(xs, n), y = vec_parse_csv(ys, n), r(n);
    for (u32 i = 0; i < n; ++i) r[i] = x[y[i]];
    return key(r);
  };
  CayleyResult result;
  result.autos = ConcreteGroup::realize(std::move(b));

  auto& iso = result.left_translation_iso;
  if (found.size() != n || result.autos->order() != n) {
    iso.pass = false;
    iso.detail = "color automorphism count differs from |G|";
    return result;
  }
  std::vector<u32> phi(n);
  for (u32 t = 0; t < n; ++t) {
    std::vector<u32> lt(n);
    for (u32 g = 0; g < n; ++g) lt[g] = G->mul(t, g);
    auto idx = result.autos->find(key(lt));
    bool listed = false;
    for (const auto& s : found)
      if (s == lt) listed = true;
    if (!idx || !listed) {
      iso.pass = false;
      iso.detail = "left translation missing from the automorphism group";
      return result;
    }
    phi[t] = *idx;
  }
  for (u32 a = 0; a < n; ++a)
    for (u32 c = 0; c < n; ++c)
      if (phi[G->mul(a, c)] != result.autos->mul(phi[a], phi[c])) {
        iso.pass = false;
        iso.detail = "left translation map is not a homomorphism";
        return result;
      }
  iso.detail = "left translations give an isomorphism G -> CayleyAut";
  return result;
}

}  // namespace grpforge
