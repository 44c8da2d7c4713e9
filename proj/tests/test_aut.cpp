#include <doctest.h>

#include <set>

#include "grpforge/aut.hpp"
#include "grpforge/spec_parser.hpp"

using namespace grpforge;

TEST_SUITE_BEGIN("aut");

namespace {
void check_full_map_is_automorphism(const ConcreteGroup& g, const std::vector<u32>& map) {
  REQUIRE(map.size() == g.order());
  std::set<u32> image(map.begin(), map.end());
  CHECK(image.size() == g.order());
  for (u32 a = 0; a < g.order(); ++a)
    for (u32 b = 0; b < g.order(); ++b) CHECK(map[g.mul(a, b)] == g.mul(map[a], map[b]));
}
}  // namespace

TEST_CASE("automorphism group orders of small groups") {
  struct Case {
    const char* spec;
    std::size_t aut, inn, out;
  };
  for (auto [spec, aut, inn, out] : {Case{"S3", 6, 6, 1}, Case{"C3", 2, 1, 2},
                                     Case{"Q8", 24, 4, 6}, Case{"D8", 8, 4, 2},
                                     Case{"C5:C4", 20, 20, 1}, Case{"C3 x C3", 48, 1, 48}}) {
    auto g = realize_spec_text(spec);
    auto res = automorphism_group(*g);
    CHECK(res.aut_order == aut);
    CHECK(res.inn_order == inn);
    CHECK(res.out_order == out);
    CHECK(res.all.size() == aut);
    CHECK(res.outer_reps.size() == out);
  }
}

TEST_CASE("expanded maps are bijective homomorphisms") {
  auto g = realize_spec_text("D8");
  auto res = automorphism_group(*g);
  std::set<std::vector<u32>> distinct;
  for (const auto& a : res.all) {
    auto map = expand_map(*g, a);
    check_full_map_is_automorphism(*g, map);
    distinct.insert(map);
  }
  CHECK(distinct.size() == res.aut_order);
}

TEST_CASE("inner recognition") {
  auto s3 = realize_spec_text("S3");
  auto res = automorphism_group(*s3);
  for (const auto& a : res.all) CHECK(is_inner(*s3, a));

  auto c3 = realize_spec_text("C3");
  auto rc3 = automorphism_group(*c3);
  std::size_t inner = 0;
  for (const auto& a : rc3.all) inner += is_inner(*c3, a) ? 1 : 0;
  CHECK(inner == 1);  // only the identity map

  CHECK(inner_automorphisms(*s3, res.search_gens).size() == 6);
}

TEST_CASE("out group structure of Q8") {
  auto q8 = realize_spec_text("Q8");
  auto res = automorphism_group(*q8);
  auto out = out_group(*q8, res);
  REQUIRE(out);
  CHECK(out->order() == 6);
  auto s3 = realize_spec_text("S3");
  CHECK(isomorphic(*out, *s3).has_value());
}

TEST_CASE("induced action on a quotient") {
  auto s3 = realize_spec_text("S3");
  std::vector<u32> n;  // the normal C3: identity and both 3-cycles
  for (u32 e = 0; e < s3->order(); ++e)
    if (s3->element_order(e) != 2) n.push_back(e);
  REQUIRE(n.size() == 3);
  auto res = automorphism_group(*s3);
  for (const auto& a : res.all) {
    auto qa = induced_on_quotient(*s3, expand_map(*s3, a), n);
    CHECK(qa.normalizes);
    CHECK(qa.induces_identity);  // quotient has order 2
    CHECK(qa.induces_inner);
  }
  // a non-normal subgroup is not normalized by conjugation maps
  u32 t = 0;
  while (s3->element_order(t) != 2) ++t;
  auto h = s3->subgroup_closure({t});
  bool some_throw = false;
  for (const auto& a : res.all) {
    try {
      induced_on_quotient(*s3, expand_map(*s3, a), h);
    } catch (const std::exception&) {
      some_throw = true;
    }
  }
  CHECK(some_throw);
}

TEST_CASE("isomorphism search with certified absence") {
  auto c4 = realize_spec_text("C4");
  auto v4 = realize_spec_text("C2 x C2");
  CHECK(!isomorphic(*c4, *v4).has_value());
  CHECK(!isomorphic(*realize_spec_text("C6"), *realize_spec_text("S3")).has_value());
  CHECK(!isomorphic(*realize_spec_text("D8"), *realize_spec_text("Q8")).has_value());

  auto c6 = realize_spec_text("C6");
  auto c2c3 = realize_spec_text("C2 x C3");
  auto map = isomorphic(*c6, *c2c3);
  REQUIRE(map.has_value());
  std::set<u32> image(map->begin(), map->end());
  CHECK(image.size() == 6);
  for (u32 a = 0; a < 6; ++a)
    for (u32 b = 0; b < 6; ++b) CHECK((*map)[c6->mul(a, b)] == c2c3->mul((*map)[a], (*map)[b]));
}

TEST_CASE("cyclic-extension automorphisms act trivially on the quotient") {
  auto rep = verify_lemma_aut(7, 3);
  CHECK(rep.pass);
  CHECK(rep.aut_order == 42);
  CHECK(rep.checked > 0);
  auto rep2 = verify_lemma_aut(5, 4);
  CHECK(rep2.pass);
  CHECK(rep2.aut_order == 20);
}

TEST_SUITE_END();
