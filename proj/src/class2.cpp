#include "grpforge/class2.hpp"

namespace grpforge {

Class2Presentation::Class2Presentation(u32 n_, u32 p_, std::vector<FpVector> c_words)
    : n(n_), p(p_), c(std::move(c_words)) {
  if (n < 1) throw std::invalid_argument("Class2Presentation: n >= 1 required");
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("Class2Presentation: odd prime required (p = 2 has its own path)");
  if (c.size() != n) throw std::invalid_argument("Class2Presentation: one c word per generator");
  for (auto& w : c) {
    if (w.size() != pair_count())
      throw std::invalid_argument("Class2Presentation: c word length mismatch");
    for (auto& x : w) x %= p;
  }
}

std::size_t Class2Presentation::pair_index(u32 j, u32 k) const {
  if (j >= k || k >= n) throw std::invalid_argument("pair_index: need j < k < n");
  // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
  return static_cast<std::size_t>(j) * n - static_cast<std::size_t>(j) * (j + 1) / 2 + (k - j - 1);
}

Class2Element c2_identity(const Class2Presentation& pres) {
  return {FpVector(pres.n, 0), FpVector(pres.pair_count(), 0)};
}

Class2Element c2_generator(const Class2Presentation& pres, u32 i) {
  Class2Element e = c2_identity(pres);
  e.a[i] = 1;
  return e;
}

Class2Element c2_multiply(const Class2Presentation& pres, const Class2Element& x,
                          const Class2Element& y) {
  const u32 p = pres.p;
  Class2Element r = c2_identity(pres);
  r.b = fp_add(x.b, y.b, p);
  // Collect x_k^{a_k} past x_j^{a'_j} for j < k: each swap costs [x_j,x_k]^{-1}.
  for (u32 j = 0; j + 1 < pres.n; ++j)
    for (u32 k = j + 1; k < pres.n; ++k) {
      u64 cross = static_cast<u64>(x.a[k]) * y.a[j] % p;
      if (cross) {
        auto idx = pres.pair_index(j, k);
        r.b[idx] = static_cast<u32>((r.b[idx] + p - cross) % p);
      }
    }
  for (u32 i = 0; i < pres.n; ++i) {
    u32 s = x.a[i] + y.a[i];
    r.a[i] = s % p;
    if (s >= p)  // apply x_i^p = c_i
      r.b = fp_add(r.b, pres.c[i], p);
  }
  return r;
}

Class2Element c2_inverse(const Class2Presentation& pres, const Class2Element& x) {
  const u32 p = pres.p;
  Class2Element inv;
  inv.a.resize(pres.n);
  for (u32 i = 0; i < pres.n; ++i) inv.a[i] = (p - x.a[i]) % p;
  // Solve (x * inv).b = 0 for inv.b given inv.a.
  FpVector b(pres.pair_count(), 0);
  for (u32 j = 0; j + 1 < pres.n; ++j)
    for (u32 k = j + 1; k < pres.n; ++k) {
      u64 cross = static_cast<u64>(x.a[k]) * inv.a[j] % p;
      auto idx = pres.pair_index(j, k);
      b[idx] = static_cast<u32>((b[idx] + cross) % p);
    }
  b = fp_sub(b, x.b, p);
  for (u32 i = 0; i < pres.n; ++i)
    if (x.a[i] > 0) b = fp_sub(b, pres.c[i], p);
  inv.b = std::move(b);
  return inv;
}

Class2Element c2_commutator(const Class2Presentation& pres, const Class2Element& x,
                            const Class2Element& y) {
  const u32 p = pres.p;
  Class2Element r = c2_identity(pres);
  for (u32 j = 0; j + 1 < pres.n; ++j)
    for (u32 k = j + 1; k < pres.n; ++k) {
      i64 v = static_cast<i64>(x.a[j]) * y.a[k] - static_cast<i64>(x.a[k]) * y.a[j];
      r.b[pres.pair_index(j, k)] = mod_reduce(v, p);
    }
  return r;
}

Class2Element c2_power(const Class2Presentation& pres, const Class2Element& x, i64 m) {
  if (m < 0) return c2_power(pres, c2_inverse(pres, x), -m);
  Class2Element r = c2_identity(pres);
  Class2Element base = x;
  while (m > 0) {
    if (m & 1) r = c2_multiply(pres, r, base);
    base = c2_multiply(pres, base, base);
    m >>= 1;
  }
  return r;
}

u32 c2_element_order(const Class2Presentation& pres, const Class2Element& x) {
  Class2Element id = c2_identity(pres);
  Class2Element y = x;
  u32 ord = 1;
  while (!(y == id)) {
    y = c2_multiply(pres, y, x);
    ++ord;
  }
  return ord;
}

std::string c2_name(const Class2Element& x) {
  std::string s;
  for (u32 v : x.a) {
    s += std::to_string(v);
    s += '.';
  }
  s += '|';
  for (u32 v : x.b) {
    s += std::to_string(v);
    s += '.';
  }
  return s;
}

Class2Element c2_parse(const Class2Presentation& pres, const std::string& name) {
  Class2Element e;
  FpVector* cur = &e.a;
  std::size_t i = 0;
  while (i < name.size()) {
    if (name[i] == '|') {
      cur = &e.b;
      ++i;
      continue;
    }
    std::size_t dot = name.find('.', i);
    cur->push_back(static_cast<u32>(std::stoul(name.substr(i, dot - i))));
    i = dot + 1;
  }
  if (e.a.size() != pres.n || e.b.size() != pres.pair_count())
    throw std::invalid_argument("c2_parse: shape mismatch");
  return e;
}

static GroupBackend c2_backend(std::string label, Class2Presentation pres) {
  GroupBackend b;
  b.label = std::move(label);
  b.identity = c2_name(c2_identity(pres));
  for (u32 i = 0; i < pres.n; ++i) b.generators.push_back(c2_name(c2_generator(pres, i)));
  // commutator basis elements as extra generators so enumeration always
  // reaches the full group even when some c_i vanish
  for (std::size_t k = 0; k < pres.pair_count(); ++k) {
    Class2Element e = c2_identity(pres);
    e.b[k] = 1;
    b.generators.push_back(c2_name(e));
  }
  b.mul = [pres](const std::string& x, const std::string& y) {
    return c2_name(c2_multiply(pres, c2_parse(pres, x), c2_parse(pres, y)));
  };
  return b;
}

GroupPtr build_lemgenrel(u32 n, u32 p, const std::vector<FpVector>& c_words, std::size_t bound) {
  Class2Presentation pres(n, p, c_words);
  return ConcreteGroup::realize(
      c2_backend("lemgenrel(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ")", pres), bound);
}

GroupPtr heisenberg_mod_p(u32 p) {
  // triples (x,y,z): (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y')
  GroupBackend b;
  b.label = "Heis(" + std::to_string(p) + ")";
  auto name = [](u32 x, u32 y, u32 z) {
    return std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z);
  };
  auto parse = [](const std::string& s, u32& x, u32& y, u32& z) {
    auto c1 = s.find(','), c2 = s.find(',', c1 + 1);
    x = static_cast<u32>(std::stoul(s.substr(0, c1)));
    y = static_cast<u32>(std::stoul(s.substr(c1 + 1, c2 - c1 - 1)));
    z = static_cast<u32>(std::stoul(s.substr(c2 + 1)));
  };
  b.identity = name(0, 0, 0);
  b.generators = {name(1, 0, 0), name(0, 1, 0)};
  b.mul = [p, name, parse](const std::string& s, const std::string& t) {
    u32 x1, y1, z1, x2, y2, z2;
    parse(s, x1, y1, z1);
    parse(t, x2, y2, z2);
    return name((x1 + x2) % p, (y1 + y2) % p,
                static_cast<u32>((static_cast<u64>(z1) + z2 + static_cast<u64>(x1) * y2) % p));
  };
  return ConcreteGroup::realize(std::move(b));
}

GroupPtr cp2_semidirect_cp(u32 p) {
  u32 p2 = p * p;
  GroupBackend b;
  b.label = "C" + std::to_string(p2) + ":C" + std::to_string(p);
  auto name = [](u32 x, u32 y) { return std::to_string(x) + "," + std::to_string(y); };
  b.identity = name(0, 0);
  b.generators = {name(1, 0), name(0, 1)};
  b.mul = [p, p2, name](const std::string& s, const std::string& t) {
    auto c1 = s.find(','), c2 = t.find(',');
    u32 x1 = static_cast<u32>(std::stoul(s.substr(0, c1)));
    u32 y1 = static_cast<u32>(std::stoul(s.substr(c1 + 1)));
    u32 x2 = static_cast<u32>(std::stoul(t.substr(0, c2)));
    u32 y2 = static_cast<u32>(std::stoul(t.substr(c2 + 1)));
    // y x y^-1 = x^{1+p}; (x1,y1)(x2,y2) = (x1 + x2*(1+p)^{y1}, y1+y2)
    u32 twist = mod_pow(1 + p, y1, p2);
    u32 x = static_cast<u32>((x1 + static_cast<u64>(x2) * twist) % p2);
    return name(x, (y1 + y2) % p);
  };
  return ConcreteGroup::realize(std::move(b));
}

P3Result build_p3(u32 p, u32 a, u32 b) {
  if (!is_prime(p)) throw std::invalid_argument("build_p3: p must be prime");
  a %= p;
  b %= p;
  if (p == 2) {
    // p = 2 case split: ab even gives D8, odd gives Q8.
    bool even = (a * b) % 2 == 0;
    GroupPtr g = even ? ConcreteGroup::realize(dihedral_backend(8))
                      : ConcreteGroup::realize(quaternion8_backend());
    return {g, even ? "D8" : "Q8"};
  }
  GroupPtr g = build_lemgenrel(2, p, {FpVector{a}, FpVector{b}});
  std::string tag = (a == 0 && b == 0) ? "extraspecial-exponent-p" : "Cp2:Cp";
  return {g, tag};
}

ExtensionPresentation build_thmext_presentation(GroupPtr G, u32 p, const std::vector<u32>& gens) {
  const u32 ng = static_cast<u32>(G->order());
  if (!is_prime(p) || p <= ng)
    throw std::invalid_argument("build_thmext_presentation: prime p > |G| required");
  if (gens.empty()) throw std::invalid_argument("build_thmext_presentation: empty generating set");
  if (gens.size() >= p)
    throw std::invalid_argument("build_thmext_presentation: need |gens| < p");
  for (u32 x : gens)
    if (x == G->identity())
      throw std::invalid_argument("build_thmext_presentation: generating set must not contain 1");
  if (G->subgroup_closure(gens).size() != ng)
    throw std::invalid_argument("build_thmext_presentation: set does not generate G");

  Class2Presentation pres(ng, p, std::vector<FpVector>(ng, FpVector(ng * (ng - 1) / 2, 0)));
  for (u32 g = 0; g < ng; ++g) {
    FpVector word(pres.pair_count(), 0);
    for (u32 i = 0; i < gens.size(); ++i) {
      u32 h = G->mul(g, gens[i]);  // g * x_i, distinct from g since x_i != 1
      u32 weight = (i + 1) % p;
      if (g < h) {
        auto idx = pres.pair_index(g, h);
        word[idx] = (word[idx] + weight) % p;
      } else {
        auto idx = pres.pair_index(h, g);
        word[idx] = (word[idx] + p - weight) % p;
      }
    }
    pres.c[g] = std::move(word);
  }
  return {std::move(pres), G, gens};
}

GroupPtr build_thmext_P(GroupPtr G, u32 p, const std::vector<u32>& gens, std::size_t bound) {
  auto ext = build_thmext_presentation(std::move(G), p, gens);
  return ConcreteGroup::realize(c2_backend("thmext-P(" + ext.G->label() + ")", ext.pres), bound);
}

}  // namespace grpforge
