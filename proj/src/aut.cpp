#include "grpforge/aut.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace grpforge {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<u32> prime_divisors(std::size_t n) {
  std::vector<u32> ps;
  for (u32 q = 2; static_cast<std::size_t>(q) * q <= n; ++q)
    if (n % q == 0) {
      ps.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) ps.push_back(static_cast<u32>(n));
  return ps;
}

/// Conjugacy-class fingerprints, refined by element order, class size and
/// power-map class profile until stable. Keys are canonical, so the ids are
/// comparable between two groups refined through the same dictionary.
struct Fingerprints {
  std::vector<u32> class_fp;  // per class id
  std::vector<u32> elem_fp;   // per element
};

Fingerprints fingerprints_for(const ConcreteGroup& G, std::map<std::vector<u64>, u32>* shared_dict,
                              std::size_t rounds) {
  const auto& cls = G.classes();
  const std::size_t nc = cls.members.size();
  std::vector<u32> ps = prime_divisors(G.order());

  std::vector<u64> fp(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    u32 rep = cls.members[c].front();
    fp[c] = (static_cast<u64>(G.element_order(rep)) << 32) | cls.members[c].size();
  }
  // normalize through the dictionary
  auto normalize = [&](const std::vector<std::vector<u64>>& keys, std::vector<u64>& out) {
    for (std::size_t c = 0; c < nc; ++c) {
      auto [it, inserted] = shared_dict->try_emplace(keys[c], static_cast<u32>(shared_dict->size()));
      out[c] = it->second;
    }
  };
  std::vector<std::vector<u64>> keys(nc);
  for (std::size_t c = 0; c < nc; ++c) keys[c] = {fp[c]};
  normalize(keys, fp);

  // Each round that splits anything adds at least one class, so `rounds`
  // iterations reach the stable partition. A fixed round count keeps the
  // dictionary ids comparable between two groups refined together.
  for (std::size_t r = 0; r < rounds; ++r) {
    std::vector<std::vector<u64>> next(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      u32 rep = cls.members[c].front();
      next[c] = {fp[c]};
      for (u32 q : ps) next[c].push_back(fp[cls.class_of[G.power(rep, q)]]);
    }
    std::vector<u64> refined(nc);
    normalize(next, refined);
    fp = std::move(refined);
  }

  Fingerprints out;
  out.class_fp.assign(fp.begin(), fp.end());
  out.elem_fp.resize(G.order());
  for (u32 e = 0; e < G.order(); ++e) out.elem_fp[e] = out.class_fp[cls.class_of[e]];
  return out;
}

/// Minimal generating subsequence of the designated generators.
std::vector<u32> reduce_generators(const ConcreteGroup& G) {
  std::vector<u32> gens;
  std::size_t reach = 1;
  for (u32 g : G.generators()) {
    if (reach == G.order()) break;
    std::vector<u32> trial = gens;
    trial.push_back(g);
    std::size_t sz = G.subgroup_closure(trial).size();
    if (sz > reach) {
      gens = std::move(trial);
      reach = sz;
    }
  }
  if (reach != G.order()) throw std::logic_error("reduce_generators: generators do not generate");
  return gens;
}

/// Closure of a generator prefix with BFS links, for incremental image maps.
struct PrefixClosure {
  std::vector<u32> elems;                      // BFS order, elems[0] = identity
  std::vector<std::pair<u32, u32>> links;      // (position of parent, gen ordinal)
  std::vector<u32> position;                   // element -> position+1, 0 = absent
};

PrefixClosure closure_of(const ConcreteGroup& G, const std::vector<u32>& gens) {
  PrefixClosure pc;
  pc.position.assign(G.order(), 0);
  pc.elems.push_back(G.identity());
  pc.links.emplace_back(0, UINT32_MAX);
  pc.position[G.identity()] = 1;
  for (std::size_t head = 0; head < pc.elems.size(); ++head) {
    for (u32 j = 0; j < gens.size(); ++j) {
      u32 y = G.mul(pc.elems[head], gens[j]);
      if (pc.position[y] == 0) {
        pc.position[y] = static_cast<u32>(pc.elems.size()) + 1;
        pc.elems.push_back(y);
        pc.links.emplace_back(static_cast<u32>(head), j);
      }
    }
  }
  return pc;
}

/// Shared scratch for the backtrack: image map + stamps to avoid clearing.
struct SearchScratch {
  std::vector<u32> image;        // domain element -> image
  std::vector<u32> image_stamp;  // validity stamp per domain element
  std::vector<u32> hit_stamp;    // image element already used (injectivity)
  u32 stamp = 0;

  explicit SearchScratch(std::size_t n)
      : image(n, 0), image_stamp(n, 0), hit_stamp(n, 0) {}
  void fresh() { ++stamp; }
};

/// Extends gen images over the prefix closure; returns false on any
/// homomorphism conflict or injectivity failure. On success the scratch
/// holds the full map on the closure.
bool try_extend(const ConcreteGroup& domain, const ConcreteGroup& codomain,
                const PrefixClosure& pc, const std::vector<u32>& gens,
                const std::vector<u32>& images, SearchScratch& scratch) {
  scratch.fresh();
  const u32 st = scratch.stamp;
  scratch.image[domain.identity()] = codomain.identity();
  scratch.image_stamp[domain.identity()] = st;
  scratch.hit_stamp[codomain.identity()] = st;
  for (std::size_t pos = 1; pos < pc.elems.size(); ++pos) {
    auto [parent_pos, j] = pc.links[pos];
    u32 x = pc.elems[pos];
    u32 img = codomain.mul(scratch.image[pc.elems[parent_pos]], images[j]);
    if (scratch.hit_stamp[img] == st) return false;  // not injective
    scratch.hit_stamp[img] = st;
    scratch.image[x] = img;
    scratch.image_stamp[x] = st;
  }
  // full consistency: m(x * g_j) == m(x) * h_j for every x in the closure
  for (u32 x : pc.elems) {
    for (std::size_t j = 0; j < images.size(); ++j) {
      u32 y = domain.mul(x, gens[j]);
      u32 expect = codomain.mul(scratch.image[x], images[j]);
      if (scratch.image_stamp[y] != st || scratch.image[y] != expect) return false;
    }
  }
  return true;
}

struct MorphismSearch {
  const ConcreteGroup& domain;
  const ConcreteGroup& codomain;
  std::vector<u32> gens;
  std::vector<std::vector<u32>> candidates;  // per generator level
  std::vector<PrefixClosure> prefixes;       // prefixes[k]: closure of gens[0..k]
  const std::vector<u32>* fa = nullptr;      // elementwise fingerprints, domain
  const std::vector<u32>* fb = nullptr;      // elementwise fingerprints, codomain
  SearchScratch scratch;
  Clock::time_point deadline;
  u64 nodes = 0;
  bool first_only = false;
  std::vector<Automorphism> found;

  MorphismSearch(const ConcreteGroup& d, const ConcreteGroup& c)
      : domain(d), codomain(c), scratch(d.order()) {}

  /// Cheap prune: products with the already-chosen generators must land in
  /// matching fingerprint buckets.
  bool products_compatible(const std::vector<u32>& images, std::size_t level, u32 cand) const {
    for (std::size_t j = 0; j < level; ++j) {
      if ((*fa)[domain.mul(gens[j], gens[level])] != (*fb)[codomain.mul(images[j], cand)])
        return false;
      if ((*fa)[domain.mul(gens[level], gens[j])] != (*fb)[codomain.mul(cand, images[j])])
        return false;
    }
    return true;
  }

  void run(std::vector<u32>& images, std::size_t level) {
    if (++nodes % 256 == 0 && Clock::now() > deadline)
      throw SearchTimeout("automorphism search timeout");
    if (level == gens.size()) {
      found.push_back({gens, images});
      return;
    }
    for (u32 cand : candidates[level]) {
      if (!products_compatible(images, level, cand)) continue;
      images.push_back(cand);
      if (try_extend(domain, codomain, prefixes[level], gens, images, scratch))
        run(images, level + 1);
      images.pop_back();
      if (first_only && !found.empty()) return;
    }
  }
};

std::vector<Automorphism> search_morphisms(const ConcreteGroup& A, const ConcreteGroup& B,
                                           const AutOptions& opt, bool first_only) {
  std::map<std::vector<u64>, u32> dict;
  std::size_t rounds = std::max(A.classes().members.size(), B.classes().members.size());
  Fingerprints fa = fingerprints_for(A, &dict, rounds);
  Fingerprints fb = fingerprints_for(B, &dict, rounds);

  MorphismSearch search(A, B);
  search.fa = &fa.elem_fp;
  search.fb = &fb.elem_fp;
  search.first_only = first_only;
  search.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(opt.timeout_sec));
  search.gens = reduce_generators(A);

  // per-generator candidate sets from the shared fingerprints
  std::vector<std::pair<std::size_t, u32>> order_by_size;
  std::vector<std::vector<u32>> cands(search.gens.size());
  for (std::size_t i = 0; i < search.gens.size(); ++i) {
    u32 fp = fa.elem_fp[search.gens[i]];
    for (u32 e = 0; e < B.order(); ++e)
      if (fb.elem_fp[e] == fp) cands[i].push_back(e);
    order_by_size.emplace_back(cands[i].size(), static_cast<u32>(i));
  }
  // strongest-first: assign the most constrained generator first
  std::stable_sort(order_by_size.begin(), order_by_size.end());
  std::vector<u32> reordered;
  for (auto [sz, i] : order_by_size) {
    if (sz == 0) return {};  // no possible image: certified absence
    reordered.push_back(search.gens[i]);
  }
  std::vector<std::vector<u32>> reordered_cands;
  for (auto [sz, i] : order_by_size) reordered_cands.push_back(std::move(cands[i]));
  search.gens = std::move(reordered);
  search.candidates = std::move(reordered_cands);

  for (std::size_t k = 1; k <= search.gens.size(); ++k)
    search.prefixes.push_back(
        closure_of(A, std::vector<u32>(search.gens.begin(), search.gens.begin() + k)));

  std::vector<u32> images;
  search.run(images, 0);
  return std::move(search.found);
}

void verify_full(const ConcreteGroup& G, const std::vector<Automorphism>& all,
                 const AutOptions& opt) {
  const u32 n = static_cast<u32>(G.order());
  u64 cost = static_cast<u64>(n) * n * all.size();
  std::mt19937_64 rng(7);
  for (const auto& a : all) {
    std::vector<u32> m = expand_map(G, a);
    auto check = [&](u32 x, u32 y) {
      if (m[G.mul(x, y)] != G.mul(m[x], m[y]))
        throw std::logic_error("automorphism verification failed");
    };
    if (cost <= opt.verify_budget) {
      for (u32 x = 0; x < n; ++x)
        for (u32 y = 0; y < n; ++y) check(x, y);
    } else {
      std::uniform_int_distribution<u32> dist(0, n - 1);
      for (int i = 0; i < 100000; ++i) check(dist(rng), dist(rng));
    }
  }
}

std::vector<u32> inner_tuple(const ConcreteGroup& G, u32 g, const std::vector<u32>& gens) {
  std::vector<u32> t(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) t[i] = G.conj(g, gens[i]);
  return t;
}

struct TupleHash {
  std::size_t operator()(const std::vector<u32>& v) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (u32 x : v) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace

std::vector<u32> expand_map(const ConcreteGroup& G, const Automorphism& a) {
  PrefixClosure pc = closure_of(G, a.search_gens);
  if (pc.elems.size() != G.order())
    throw std::logic_error("expand_map: search generators do not generate");
  std::vector<u32> m(G.order());
  m[G.identity()] = G.identity();
  for (std::size_t pos = 1; pos < pc.elems.size(); ++pos) {
    auto [parent_pos, j] = pc.links[pos];
    m[pc.elems[pos]] = G.mul(m[pc.elems[parent_pos]], a.images[j]);
  }
  return m;
}

bool is_inner(const ConcreteGroup& G, const Automorphism& a) {
  for (u32 g = 0; g < G.order(); ++g)
    if (inner_tuple(G, g, a.search_gens) == a.images) return true;
  return false;
}

std::vector<Automorphism> inner_automorphisms(const ConcreteGroup& G,
                                              const std::vector<u32>& search_gens) {
  std::unordered_set<std::vector<u32>, TupleHash> seen;
  std::vector<Automorphism> inner;
  for (u32 g = 0; g < G.order(); ++g) {
    auto t = inner_tuple(G, g, search_gens);
    if (seen.insert(t).second) inner.push_back({search_gens, std::move(t)});
  }
  return inner;
}

AutGroupResult automorphism_group(const ConcreteGroup& G, const AutOptions& opt) {
  if (G.order() > opt.bound) throw BoundExceeded("automorphism_group: order above search bound");
  AutGroupResult result;
  result.all = search_morphisms(G, G, opt, false);
  if (result.all.empty()) throw std::logic_error("automorphism_group: identity not found");
  result.search_gens = result.all.front().search_gens;
  verify_full(G, result.all, opt);
  result.aut_order = result.all.size();

  std::unordered_set<std::vector<u32>, TupleHash> inner_set;
  for (u32 g = 0; g < G.order(); ++g) inner_set.insert(inner_tuple(G, g, result.search_gens));
  result.inn_order = inner_set.size();
  if (result.aut_order % result.inn_order != 0)
    throw std::logic_error("automorphism_group: |Inn| does not divide |Aut|");
  result.out_order = result.aut_order / result.inn_order;

  // Inn-coset representatives; the identity automorphism's coset comes first.
  std::vector<std::unordered_set<std::vector<u32>, TupleHash>> coset_sets;
  auto coset_of = [&](const Automorphism& a) -> std::optional<std::size_t> {
    for (std::size_t r = 0; r < coset_sets.size(); ++r)
      if (coset_sets[r].count(a.images)) return r;
    return std::nullopt;
  };
  std::size_t id_pos = 0;
  for (std::size_t i = 0; i < result.all.size(); ++i)
    if (result.all[i].images == result.all[i].search_gens) id_pos = i;
  std::vector<std::size_t> order_scan;
  order_scan.push_back(id_pos);
  for (std::size_t i = 0; i < result.all.size(); ++i)
    if (i != id_pos) order_scan.push_back(i);
  for (std::size_t i : order_scan) {
    if (coset_of(result.all[i])) continue;
    result.outer_reps.push_back(i);
    std::vector<u32> rep_map = expand_map(G, result.all[i]);
    std::unordered_set<std::vector<u32>, TupleHash> set;
    for (u32 g = 0; g < G.order(); ++g) {
      std::vector<u32> t(result.search_gens.size());
      for (std::size_t j = 0; j < t.size(); ++j)
        t[j] = G.conj(g, rep_map[result.search_gens[j]]);
      set.insert(std::move(t));
    }
    coset_sets.push_back(std::move(set));
  }
  if (result.outer_reps.size() != result.out_order)
    throw std::logic_error("automorphism_group: coset decomposition mismatch");
  return result;
}

GroupPtr out_group(const ConcreteGroup& G, const AutGroupResult& aut) {
  // coset rep full maps and recognition sets
  auto maps = std::make_shared<std::vector<std::vector<u32>>>();
  auto sets = std::make_shared<std::vector<std::unordered_set<std::vector<u32>, TupleHash>>>();
  const auto& gens = aut.search_gens;
  for (std::size_t r : aut.outer_reps) {
    maps->push_back(expand_map(G, aut.all[r]));
    std::unordered_set<std::vector<u32>, TupleHash> set;
    for (u32 g = 0; g < G.order(); ++g) {
      std::vector<u32> t(gens.size());
      for (std::size_t j = 0; j < t.size(); ++j) t[j] = G.conj(g, maps->back()[gens[j]]);
      set.insert(std::move(t));
    }
    sets->push_back(std::move(set));
  }
  GroupBackend b;
  b.label = "Out(" + G.label() + ")";
  b.identity = "0";
  for (std::size_t r = 1; r < aut.outer_reps.size(); ++r)
    b.generators.push_back(std::to_string(r));
  b.mul = [maps, sets, gens](const std::string& x, const std::string& y) {
    std::size_t a = std::stoul(x), c = std::stoul(y);
    std::vector<u32> t(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) t[j] = (*maps)[a][(*maps)[c][gens[j]]];
    for (std::size_t r = 0; r < sets->size(); ++r)
      if ((*sets)[r].count(t)) return std::to_string(r);
    throw std::logic_error("out_group: composite escapes the coset list");
  };
  return ConcreteGroup::realize(std::move(b));
}

QuotientAction induced_on_quotient(const ConcreteGroup& G, const std::vector<u32>& full_map,
                                   const std::vector<u32>& normal_elements) {
  std::vector<bool> in_n(G.order(), false);
  for (u32 x : normal_elements) in_n[x] = true;
  QuotientAction qa;
  qa.normalizes = true;
  for (u32 x : normal_elements)
    if (!in_n[full_map[x]]) qa.normalizes = false;
  if (!qa.normalizes)
    throw std::invalid_argument("induced_on_quotient: automorphism does not normalize N");

  // coset id = minimal element of x*N
  std::vector<u32> coset(G.order(), UINT32_MAX);
  for (u32 x = 0; x < G.order(); ++x) {
    if (coset[x] != UINT32_MAX) continue;
    u32 rep = x;
    for (u32 nel : normal_elements) rep = std::min(rep, G.mul(x, nel));
    for (u32 nel : normal_elements) coset[G.mul(x, nel)] = rep;
  }

  qa.induces_identity = true;
  for (u32 x = 0; x < G.order(); ++x)
    if (coset[full_map[x]] != coset[x]) qa.induces_identity = false;

  qa.induces_inner = qa.induces_identity;
  if (!qa.induces_inner) {
    for (u32 g = 0; g < G.order() && !qa.induces_inner; ++g) {
      bool ok = true;
      for (u32 x = 0; x < G.order() && ok; ++x)
        if (coset[full_map[x]] != coset[G.conj(g, x)]) ok = false;
      qa.induces_inner = ok;
    }
  }
  return qa;
}

std::optional<std::vector<u32>> isomorphic(const ConcreteGroup& A, const ConcreteGroup& B,
                                           const AutOptions& opt) {
  if (A.order() != B.order()) return std::nullopt;
  if (A.order() > opt.bound) throw BoundExceeded("isomorphic: order above search bound");
  auto found = search_morphisms(A, B, opt, true);
  if (found.empty()) return std::nullopt;
  PrefixClosure pc = closure_of(A, found[0].search_gens);
  std::vector<u32> m(A.order());
  m[A.identity()] = B.identity();
  for (std::size_t pos = 1; pos < pc.elems.size(); ++pos) {
    auto [parent_pos, j] = pc.links[pos];
    m[pc.elems[pos]] = B.mul(m[pc.elems[parent_pos]], found[0].images[j]);
  }
  return m;
}

LemmaAutReport verify_lemma_aut(u32 m, u32 acting_order, const AutOptions& opt) {
  auto normal = ConcreteGroup::realize(cyclic_backend(m));
  auto acting = ConcreteGroup::realize(cyclic_backend(acting_order));
  LemmaAutReport report;
  if (acting_order == 1) {
    report.pass = true;
    report.detail = "trivial acting group: vacuous";
    return report;
  }
  auto action = cyclic_power_action(normal, acting);
  auto ghat = semidirect(normal, acting, action);
  auto aut = automorphism_group(*ghat, opt);
  report.aut_order = aut.aut_order;
  std::vector<u32> n_elems = ghat->subgroup_closure({ghat->generators().front()});
  if (n_elems.size() != m) throw std::logic_error("verify_lemma_aut: normal subgroup size mismatch");
  report.pass = true;
  for (const auto& a : aut.all) {
    std::vector<u32> full = expand_map(*ghat, a);
    bool normalizes = true;
    std::vector<bool> in_n(ghat->order(), false);
    for (u32 x : n_elems) in_n[x] = true;
    for (u32 x : n_elems)
      if (!in_n[full[x]]) normalizes = false;
    if (!normalizes) continue;
    ++report.checked;
    auto qa = induced_on_quotient(*ghat, full, n_elems);
    if (!qa.induces_identity) {
      report.pass = false;
      report.detail = "automorphism acts nontrivially on the quotient";
    }
  }
  return report;
}

}  // namespace grpforge
