// Acceptance gate: one criterion per numbered check, one PASS/FAIL line each.
// Usage: acceptance [N] [--big]   (no N runs every criterion).
#include <algorithm>
#include <cstdio>
#include <cstring>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "grpforge/aut.hpp"
#include "grpforge/constructions.hpp"
#include "grpforge/spec_parser.hpp"

using namespace grpforge;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

// ---------------------------------------------------------------- criterion 1
Outcome crit_witt_sizes() {
  Outcome o;
  if (witt_total(3, 3) != 14) o.fail("witt_total(3,3) != 14");
  auto cg = cornulier_construct(realize_spec_text("C3"));
  if (cg.p != 5) o.fail("p != 5");
  if (witt_total(cg.n, cg.n) != 14) o.fail("|F3| exponent != 14");
  if (cg.p_exponent != 11) o.fail("|P| != 5^11");
  // |H| = (p-1)^n p^11 = 2^6 5^11
  u64 unit_part = 1;
  for (u32 i = 0; i < cg.n; ++i) unit_part *= cg.p - 1;
  if (unit_part != 64) o.fail("unit part != 2^6");
  o.detail = "|F3|=5^14 |P|=5^11 |H|=2^6*5^11";
  return o;
}

// ---------------------------------------------------------------- criterion 2
Outcome crit_relation_scan() {
  Outcome o;
  for (u32 n : {3u, 4u}) {
    const u32 p = 5;
    auto acc = lemlie_accepted(n, p);
    std::vector<u32> id_perm;
    for (u32 i = 1; i < n; ++i) id_perm.push_back(i);
    if (acc.size() != 1 || acc[0].first != id_perm || acc[0].second != 1) {
      o.fail("n=" + std::to_string(n) + ": accepted set != {(id,1)}");
      continue;
    }
    // matrix witnesses must reject every non-(id,1) pair
    std::vector<u32> perm = id_perm;
    do {
      for (u32 a = 0; a < p; ++a) {
        auto [first, second] = lemLie_matrix_witness(n, p, perm, a);
        bool is_id = perm == id_perm && a == 1;
        if (is_id && !(first && second)) o.fail("matrix witness rejects (id,1)");
        if (!is_id && first && second) o.fail("matrix witness accepts a non-(id,1) pair");
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  if (o.pass) o.detail = "(3,5) and (4,5): exactly (id,1), matrix cross-check agrees";
  return o;
}

// ---------------------------------------------------------------- criterion 3
Outcome crit_out_holomorph() {
  Outcome o;
  struct Case {
    u32 p, n;
    std::size_t factorial;
    const char* sym;
  };
  for (auto [p, n, factorial, sym] :
       {Case{3, 1, 1, "C1"}, Case{5, 1, 1, "C1"}, Case{3, 2, 2, "C2"}, Case{5, 2, 2, "C2"}}) {
    auto h = holomorph_power(p, n);
    auto res = automorphism_group(*h);
    if (res.out_order != factorial) {
      o.fail("(p,n)=(" + std::to_string(p) + "," + std::to_string(n) + "): |Out| = " +
             std::to_string(res.out_order));
      continue;
    }
    auto out = out_group(*h, res);
    if (!out || !isomorphic(*out, *realize_spec_text(sym)).has_value())
      o.fail("(p,n)=(" + std::to_string(p) + "," + std::to_string(n) + "): Out not iso to " + sym);
  }
  if (o.pass) o.detail = "|Out| = n! and Out iso S_n for all four instances";
  return o;
}

// ---------------------------------------------------------------- criterion 4
Outcome crit_tower_full_aut() {
  Outcome o;
  auto g = realize_spec_text("C2");
  auto t = pettet_construct(g, {1});
  if (t.Ghat->order() != 2646) {
    o.fail("|Ghat| != 2646");
    return o;
  }
  AutOptions opt;
  opt.timeout_sec = 820;
  auto res = automorphism_group(*t.Ghat, opt);
  std::vector<bool> in_q(t.Ghat->order(), false), in_n(t.Ghat->order(), false);
  for (u32 e : t.Q_elements) in_q[e] = true;
  for (u32 e : t.N_elements) in_n[e] = true;
  std::size_t bad_q = 0, bad_n = 0, bad_quot = 0;
  for (const auto& a : res.all) {
    auto map = expand_map(*t.Ghat, a);
    for (u32 e : t.Q_elements)
      if (!in_q[map[e]]) ++bad_q;
    for (u32 e : t.N_elements)
      if (!in_n[map[e]]) ++bad_n;
    auto qa = induced_on_quotient(*t.Ghat, map, t.N_elements);
    if (!qa.normalizes || !qa.induces_identity || !qa.induces_inner) ++bad_quot;
  }
  if (bad_q) o.fail("Q not normalized " + std::to_string(bad_q) + " times");
  if (bad_n) o.fail("N not normalized " + std::to_string(bad_n) + " times");
  if (bad_quot) o.fail(std::to_string(bad_quot) + " automorphisms act nontrivially on Ghat/N");
  if (o.pass)
    o.detail = "|Aut|=" + std::to_string(res.aut_order) + " |Inn|=" + std::to_string(res.inn_order) +
               " |Out|=" + std::to_string(res.out_order) +
               "; all normalize Q and N and fix Ghat/N pointwise";
  return o;
}

// ---------------------------------------------------------------- criterion 5
Outcome crit_p3_classification() {
  Outcome o;
  for (u32 a = 0; a < 2; ++a)
    for (u32 b = 0; b < 2; ++b) {
      auto r = build_p3(2, a, b);
      std::string expect = (a * b) % 2 == 0 ? "D8" : "Q8";
      if (r.type_tag != expect) o.fail("p=2 tag mismatch");
      if (!isomorphic(*r.group, *realize_spec_text(expect)).has_value())
        o.fail("p=2 iso certification failed");
    }
  for (u32 p : {3u, 5u}) {
    auto heis = heisenberg_mod_p(p);
    auto meta = cp2_semidirect_cp(p);
    for (u32 a = 0; a < p; ++a)
      for (u32 b = 0; b < p; ++b) {
        auto r = build_p3(p, a, b);
        if (r.group->order() != p * p * p || r.group->is_abelian()) {
          o.fail("p=" + std::to_string(p) + ": wrong order or abelian");
          continue;
        }
        bool extraspecial = a == 0 && b == 0;
        if (r.type_tag != (extraspecial ? "extraspecial-exponent-p" : "Cp2:Cp"))
          o.fail("p=" + std::to_string(p) + ": tag mismatch at (" + std::to_string(a) + "," +
                 std::to_string(b) + ")");
        const ConcreteGroup& ref = extraspecial ? *heis : *meta;
        if (!isomorphic(*r.group, ref).has_value())
          o.fail("p=" + std::to_string(p) + ": iso certification failed at (" + std::to_string(a) +
                 "," + std::to_string(b) + ")");
      }
  }
  if (o.pass) o.detail = "all (a,b) for p in {2,3,5} classified and certified";
  return o;
}

// ---------------------------------------------------------------- criterion 6
Outcome crit_presentation_structure() {
  Outcome o;
  std::mt19937_64 rng(2026);
  struct Case {
    u32 n, p;
  };
  for (auto [n, p] : {Case{2, 3}, Case{2, 5}, Case{3, 3}}) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<FpVector> c_words(n, FpVector(pairs, 0));
      for (auto& w : c_words)
        for (auto& v : w) v = static_cast<u32>(rng() % p);
      auto g = build_lemgenrel(n, p, c_words);
      u64 expect = 1;
      for (u32 i = 0; i < n * (n + 1) / 2; ++i) expect *= p;
      if (g->order() != expect) {
        o.fail("order != p^{n(n+1)/2}");
        continue;
      }
      // derived subgroup: closure of the generator commutators
      std::vector<u32> comms;
      auto gens = g->generators();
      for (u32 i = 0; i < n; ++i)
        for (u32 j = i + 1; j < n; ++j)
          comms.push_back(g->mul(g->mul(gens[i], gens[j]),
                                 g->mul(g->inv(gens[i]), g->inv(gens[j]))));
      auto derived = g->subgroup_closure(comms);
      u64 dexpect = 1;
      for (std::size_t i = 0; i < pairs; ++i) dexpect *= p;
      if (derived.size() != dexpect) o.fail("derived subgroup rank deficient");
      for (u32 e : derived)
        if (g->power(e, p) != g->identity()) o.fail("derived subgroup not elementary abelian");
      for (u32 x : derived)
        for (u32 y : derived)
          if (g->mul(x, y) != g->mul(y, x)) o.fail("derived subgroup not abelian");
    }
  }
  if (o.pass) o.detail = "orders and independent elementary-abelian commutators, 5 trials each";
  return o;
}

// ---------------------------------------------------------------- criterion 7
Outcome crit_multilinearity() {
  Outcome o;
  FreeNilpotentModel fn{make_algebra(3, 3, 5)};
  UnitriModel ut{4, 5};
  for (u32 k : {2u, 3u}) {
    auto a = multilinearity_check(fn, k, 200, 42);
    if (!a.pass) o.fail("free model k=" + std::to_string(k) + ": " + a.detail);
    auto b = multilinearity_check(ut, k, 200, 42);
    if (!b.pass) o.fail("matrix model k=" + std::to_string(k) + ": " + b.detail);
  }
  if (o.pass) o.detail = "200 samples per model, k in {2,3}";
  return o;
}

// ---------------------------------------------------------------- criterion 8
Outcome crit_scaling_suite(bool big) {
  Outcome o;
  if (big) {
    auto cg = cornulier_construct(realize_spec_text("S3"), 7, /*build_hall=*/false);
    if (cg.ideal->rank() != 6) o.fail("S3 ideal rank != 6");
    auto inv = cornulier_ideal_invariance(cg);
    if (!inv.pass) o.fail("S3 ideal invariance: " + inv.detail);
    if (o.pass) o.detail = "S3, p=7: ideal rank 6 and invariance";
    return o;
  }
  auto cg = cornulier_construct(realize_spec_text("C3"));
  if (cg.ideal->rank() != 3) o.fail("ideal rank != |G|");
  auto inv = cornulier_ideal_invariance(cg);
  if (!inv.pass) o.fail("ideal invariance: " + inv.detail);
  auto hom = verify_alpha_hom(cg, 200, 42);
  if (!hom.pass) o.fail("alpha homomorphism: " + hom.detail);
  auto outr = verify_alpha_outer(cg);
  if (!outr.pass) o.fail("alpha outer/mono: " + outr.detail);
  for (u32 j = 0; j < cg.n; ++j)
    if (!centralizer_of_qj(cg, j).pass) o.fail("centralizer mismatch at j=" + std::to_string(j));
  auto holo = h_mod_pprime_vs_holomorph(cg, 200, 42);
  if (!holo.pass) o.fail("H/P' vs holomorph: " + holo.detail);
  if (o.pass) o.detail = "C3, p=5: ideal, alpha, centralizers, H/P' all verified";
  return o;
}

// ---------------------------------------------------------------- criterion 9
GroupPtr free_class2_group(u32 p) {
  auto alg = make_algebra(2, 2, p);
  GroupBackend b;
  b.label = "Fbar(2,2," + std::to_string(p) + ")";
  auto name_of = [](const GroupLike& g) {
    std::vector<std::string> parts;
    for (u32 v : g.series().data()) parts.push_back(std::to_string(v));
    return pack(parts);
  };
  auto parse = [alg](const std::string& s) {
    Series ser(alg);
    auto parts = unpack(s);
    for (std::size_t i = 0; i < parts.size(); ++i)
      ser.coeff(i) = static_cast<u32>(std::stoul(parts[i]));
    return group_like_unchecked(ser);
  };
  b.identity = name_of(GroupLike::one(alg));
  b.generators = {name_of(GroupLike::generator(alg, 0)), name_of(GroupLike::generator(alg, 1))};
  b.mul = [name_of, parse](const std::string& x, const std::string& y) {
    return name_of(parse(x) * parse(y));
  };
  return ConcreteGroup::realize(std::move(b));
}

Outcome crit_cross_engine() {
  Outcome o;
  for (u32 p : {3u, 5u}) {
    auto via_collection = build_lemgenrel(2, p, {FpVector{0}, FpVector{0}});
    auto via_series = free_class2_group(p);
    if (via_series->order() != via_collection->order()) {
      o.fail("p=" + std::to_string(p) + ": orders differ");
      continue;
    }
    if (!isomorphic(*via_collection, *via_series).has_value())
      o.fail("p=" + std::to_string(p) + ": engines give non-isomorphic groups");
  }
  if (o.pass) o.detail = "collection and series engines agree for n=2, p in {3,5}";
  return o;
}

// --------------------------------------------------------------- criterion 10
Outcome crit_cyclic_extension_auts() {
  Outcome o;
  struct Case {
    u32 m, k;
  };
  for (auto [m, k] : {Case{7, 3}, Case{5, 4}, Case{9, 3}}) {
    auto rep = verify_lemma_aut(m, k);
    if (!rep.pass)
      o.fail("(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + "): " + rep.detail);
  }
  if (o.pass) o.detail = "(7,C3), (5,C4), (9,C3): quotient action trivial throughout";
  return o;
}

// --------------------------------------------------------------- criterion 11
Outcome crit_color_graph() {
  Outcome o;
  auto run = [&o](const char* spec, std::vector<u32> gens) {
    auto g = realize_spec_text(spec);
    if (g->subgroup_closure(gens).size() != g->order()) {
      o.fail(std::string(spec) + ": chosen set does not generate");
      return;
    }
    auto res = cayley_color_autos(g, gens);
    if (!res.left_translation_iso.pass)
      o.fail(std::string(spec) + ": " + res.left_translation_iso.detail);
    if (res.autos->order() != g->order() || !isomorphic(*res.autos, *g).has_value())
      o.fail(std::string(spec) + ": symmetry group not isomorphic to G");
  };
  run("C3", {1});
  run("C3", {2});
  run("C4", {1});
  run("C4", {1, 3});
  auto s3 = realize_spec_text("S3");
  u32 t = 0, c = 0;
  for (u32 e = 0; e < 6; ++e) {
    if (s3->element_order(e) == 2) t = e;
    if (s3->element_order(e) == 3) c = e;
  }
  run("S3", {s3->generators()[0], s3->generators()[1]});
  run("S3", {t, c});
  auto d8 = realize_spec_text("D8");
  u32 r = d8->generators()[0], s = d8->generators()[1];
  run("D8", {r, s});
  run("D8", {r, d8->mul(r, s)});
  if (o.pass) o.detail = "two generating sets each for C3, C4, S3, D8";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int which = 0;
  bool big = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--big") == 0)
      big = true;
    else
      which = std::atoi(argv[i]);
  }

  struct Entry {
    int num;
    const char* title;
    Outcome (*fn)(bool);
  };
  static const Entry entries[] = {
      {1, "size reproduction", [](bool) { return crit_witt_sizes(); }},
      {2, "exhaustive relation scan", [](bool) { return crit_relation_scan(); }},
      {3, "outer symmetries of holomorph powers", [](bool) { return crit_out_holomorph(); }},
      {4, "full tower automorphism check", [](bool) { return crit_tower_full_aut(); }},
      {5, "order p^3 classification", [](bool) { return crit_p3_classification(); }},
      {6, "presentation structure", [](bool) { return crit_presentation_structure(); }},
      {7, "multilinearity congruences", [](bool) { return crit_multilinearity(); }},
      {8, "scaling-quotient suite", [](bool b) { return crit_scaling_suite(b); }},
      {9, "cross-engine agreement", [](bool) { return crit_cross_engine(); }},
      {10, "cyclic extension automorphisms", [](bool) { return crit_cyclic_extension_auts(); }},
      {11, "color graph symmetries", [](bool) { return crit_color_graph(); }},
  };

  bool all_pass = true;
  for (const auto& e : entries) {
    if (which != 0 && e.num != which) continue;
    Outcome o;
    try {
      o = e.fn(big);
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    all_pass = all_pass && o.pass;
    std::printf("criterion %2d [%s]: %s%s%s\n", e.num, e.title, o.pass ? "PASS" : "FAIL",
                o.detail.empty() ? "" : " — ", o.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
