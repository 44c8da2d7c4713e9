#include <doctest.h>

#include <algorithm>
#include <set>

#include "grpforge/spec_parser.hpp"

using namespace grpforge;

TEST_SUITE_BEGIN("group");

TEST_CASE("pack/unpack round-trips") {
  std::vector<std::string> parts{"", "a", "12:34", std::string("\x00\x01", 2), "nested:5:parts"};
  CHECK(unpack(pack(parts)) == parts);
  CHECK(unpack(pack({})).empty());
  // nested packs never collide
  CHECK(pack({pack({"a", "b"}), "c"}) != pack({"a", pack({"b", "c"})}));
}

TEST_CASE("spec parsing") {
  CHECK(parse_group_spec("C3").kind == GroupSpec::Kind::Cyclic);
  CHECK(parse_group_spec("C3").param == 3);
  auto d = parse_group_spec("C5 x C5");
  CHECK(d.kind == GroupSpec::Kind::Direct);
  CHECK(d.children[0].param == 5);
  auto s = parse_group_spec("C7 ⋊ C3");
  CHECK(s.kind == GroupSpec::Kind::Semidirect);
  CHECK(parse_group_spec("C7:C3").kind == GroupSpec::Kind::Semidirect);
  CHECK(parse_group_spec("C5:[hol]C4").action_name == "hol");
  CHECK(parse_group_spec("perm[(1 2 3), (1 2)]").perm_gens.size() == 2);

  CHECK_THROWS_AS(parse_group_spec("C"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("C3 )"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("perm[(1 1 2)]"), ParseError);
  try {
    parse_group_spec("C3 x\nZ9");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 1);
  }
}

TEST_CASE("realize atoms") {
  CHECK(realize_spec_text("C3")->order() == 3);
  CHECK(realize_spec_text("S3")->order() == 6);
  CHECK(realize_spec_text("C5 x C5")->order() == 25);
  CHECK(realize_spec_text("perm[(1 2 3), (1 2)]")->order() == 6);
  CHECK(realize_spec_text("D8")->order() == 8);
  CHECK(realize_spec_text("D4")->order() == 4);
  CHECK(realize_spec_text("Q8")->order() == 8);
}

TEST_CASE("semidirect C7:C3 is nonabelian of order 21") {
  auto g = realize_spec_text("C7:C3");
  CHECK(g->order() == 21);
  CHECK(!g->is_abelian());
}

TEST_CASE("holomorph of C5 via semidirect") {
  auto g = realize_spec_text("C5:C4");
  CHECK(g->order() == 20);
  std::multiset<std::size_t> sizes;
  for (const auto& m : g->classes().members) sizes.insert(m.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 4, 5, 5, 5});
}

TEST_CASE("trivial action gives the direct product") {
  auto c3 = ConcreteGroup::realize(cyclic_backend(3));
  auto c4 = ConcreteGroup::realize(cyclic_backend(4));
  std::vector<u32> id(3);
  for (u32 i = 0; i < 3; ++i) id[i] = i;
  auto action = std::make_shared<const ActionMap>(c4, c3, std::vector<std::vector<u32>>{id});
  action->validate();
  auto sd = semidirect(c3, c4, action);
  CHECK(sd->order() == 12);
  CHECK(sd->is_abelian());
  CHECK(sd->center().size() == 12);
  // identity-pair map onto the direct product
  auto dp = direct_product(c3, c4);
  CHECK(dp->order() == 12);
  for (u32 a = 0; a < 12; ++a)
    for (u32 b = 0; b < 12; ++b) CHECK(sd->name(sd->mul(a, b)) == dp->name(dp->mul(a, b)));
}

TEST_CASE("invalid action is rejected") {
  auto c3 = ConcreteGroup::realize(cyclic_backend(3));
  auto c4 = ConcreteGroup::realize(cyclic_backend(4));
  // x -> x^2 has order 2, not dividing into a homomorphism from C4 faithfully;
  // an outright non-automorphism image: collapse everything to the identity
  std::vector<u32> collapse(3, 0);
  auto bad = std::make_shared<const ActionMap>(c4, c3, std::vector<std::vector<u32>>{collapse});
  CHECK_THROWS_AS(bad->validate(), InvalidAction);
  CHECK_THROWS_AS(cyclic_power_action(c3, c4), InvalidAction);  // no order-4 element mod 3
}

TEST_CASE("conjugacy classes") {
  auto s3 = realize_spec_text("S3");
  std::multiset<std::size_t> sizes;
  for (const auto& m : s3->classes().members) sizes.insert(m.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
  auto c4 = realize_spec_text("C4");
  CHECK(c4->classes().members.size() == 4);

  for (auto spec : {"S3", "C5:C4", "Q8", "D8"}) {
    auto g = realize_spec_text(spec);
    std::size_t total = 0;
    for (const auto& m : g->classes().members) {
      total += m.size();
      CHECK(g->order() % m.size() == 0);
      CHECK(m.size() * g->centralizer_order(m.front()) == g->order());
    }
    CHECK(total == g->order());
  }
}

TEST_CASE("centralizer orders") {
  auto s3 = realize_spec_text("S3");
  CHECK(s3->centralizer_order(s3->identity()) == 6);
  for (u32 e = 0; e < s3->order(); ++e)
    if (s3->element_order(e) == 2) CHECK(s3->centralizer_order(e) == 2);
}

TEST_CASE("subgroup closure") {
  auto s3 = realize_spec_text("S3");
  CHECK(s3->subgroup_closure({}).size() == 1);
  for (u32 e = 0; e < s3->order(); ++e)
    if (s3->element_order(e) == 3) CHECK(s3->subgroup_closure({e}).size() == 3);
}

TEST_CASE("Q8 structure") {
  auto q8 = realize_spec_text("Q8");
  std::size_t order2 = 0;
  for (u32 e = 0; e < 8; ++e)
    if (q8->element_order(e) == 2) ++order2;
  CHECK(order2 == 1);  // unique involution -1
  CHECK(q8->center().size() == 2);
  CHECK(!q8->is_abelian());
}

TEST_CASE("axioms and determinism") {
  auto g = realize_spec_text("C7:C3");
  g->check_axioms();
  auto h = realize_spec_text("C7:C3");
  CHECK(g->enumeration_fingerprint() == h->enumeration_fingerprint());
  CHECK(g->table_fingerprint() == h->table_fingerprint());
}

TEST_CASE("word_of reproduces elements") {
  auto g = realize_spec_text("S3 x C4");
  for (u32 e = 0; e < g->order(); ++e) {
    u32 acc = g->identity();
    for (u32 ord : g->word_of(e)) acc = g->mul(acc, g->generators()[ord]);
    CHECK(acc == e);
  }
}

TEST_CASE("inverses and powers") {
  auto g = realize_spec_text("D8");
  for (u32 e = 0; e < g->order(); ++e) {
    CHECK(g->mul(e, g->inv(e)) == g->identity());
    CHECK(g->power(e, g->element_order(e)) == g->identity());
    CHECK(g->power(e, -1) == g->inv(e));
  }
}

TEST_CASE("enumeration bound") {
  CHECK_THROWS_AS(realize_spec_text("C100 x C100", 5000), BoundExceeded);
}

TEST_SUITE_END();
