#include <catch2/catch_amalgamated.hpp>

#include "equipage/corpus.hpp"
#include "equipage/fincat.hpp"

using namespace equipage;

TEST_CASE("validate_category accepts the stock categories") {
  CHECK(validate_category(terminal_category()).ok());
  CHECK(validate_category(walking_arrow()).ok());
  for (const auto& [name, C] : corpus_categories()) {
    INFO(name);
    CHECK(validate_category(C).ok());
  }
}

TEST_CASE("validate_category reports a unit-law violation with witness") {
  FinCategory C = walking_arrow();
  C.comp[{"id1", "u"}] = "id1";  // boundary-compatible? id1: 1->1, u: 0->1; id1.u must be 0->1
  ValidationReport r = validate_category(C);
  REQUIRE(!r.ok());
  bool found = false;
  for (const auto& v : r.violations)
    if ((v.law == "unit-left" || v.law == "comp-boundary") && v.witness.find("u") != std::string::npos)
      found = true;
  CHECK(found);
}

TEST_CASE("validate_category flags dangling identifiers as structural") {
  FinCategory C = walking_arrow();
  C.morphisms.push_back({"w", "0", "ghost"});
  ValidationReport r = validate_category(C);
  CHECK(!r.structural.empty());
}

TEST_CASE("opposite") {
  CHECK(opposite(terminal_category()) == terminal_category());
  FinCategory op2 = opposite(walking_arrow());
  CHECK(op2.mor("u").src == "1");
  CHECK(op2.mor("u").tgt == "0");
  for (const auto& [name, C] : corpus_categories()) {
    INFO(name);
    CHECK(opposite(opposite(C)) == C);
    CHECK(validate_category(opposite(C)).ok());
  }
}

TEST_CASE("product categories validate") {
  for (const auto& [name, C] : corpus_categories()) {
    INFO(name);
    CHECK(validate_category(product(C, walking_arrow())).ok());
  }
}

TEST_CASE("comma of identities on the point is the point") {
  FinFunctor id1 = identity_functor(terminal_category());
  CommaResult r = comma(id1, id1);
  CHECK(r.category.objects.size() == 1);
  CHECK(r.category.morphisms.size() == 1);
  CHECK(validate_category(r.category).ok());
}

TEST_CASE("comma fibers over the walking arrow") {
  FinCategory two = walking_arrow();
  FinFunctor pick1 = point_functor(two, "1");
  FinFunctor pick0 = point_functor(two, "0");
  FinFunctor id2 = identity_functor(two);

  // f picks 1: no morphism 1 -> 0, so the fiber over j=0 is empty.
  CommaResult r1 = comma(pick1, id2);
  int over0 = 0;
  for (const auto& [o, j] : r1.to_right.object_map)
    if (j == "0") ++over0;
  CHECK(over0 == 0);

  // f picks 0: two objects, one nonidentity morphism.
  CommaResult r0 = comma(pick0, id2);
  CHECK(r0.category.objects.size() == 2);
  int nonid = 0;
  for (const auto& m : r0.category.morphisms)
    if (!r0.category.is_identity(m.id)) ++nonid;
  CHECK(nonid == 1);
  CHECK(validate_category(r0.category).ok());
  CHECK(validate_functor(r0.to_left).ok());
  CHECK(validate_functor(r0.to_right).ok());
}

TEST_CASE("comma outputs validate over the corpus") {
  FinCategory two = walking_arrow();
  for (const auto& [name, C] : corpus_categories()) {
    INFO(name);
    for (const auto& f : enumerate_functors(two, C)) {
      CommaResult r = comma(f, identity_functor(C));
      CHECK(validate_category(r.category).ok());
      CHECK(validate_functor(r.to_left).ok());
      CHECK(validate_functor(r.to_right).ok());
    }
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(walking_arrow()).size() == 1);
  CHECK(connected_components(discrete_category(2)).size() == 2);
  FinFunctor pick0 = point_functor(walking_arrow(), "0");
  CommaResult r = comma(pick0, identity_functor(walking_arrow()));
  CHECK(connected_components(r.category).size() == 1);
}

TEST_CASE("enumerate_functors") {
  FinCategory one = terminal_category();
  FinCategory two = walking_arrow();
  CHECK(enumerate_functors(one, two).size() == 2);
  CHECK(enumerate_functors(two, two).size() == 3);
  CHECK(enumerate_functors(two, one).size() == 1);
  // deterministic order: first by object map
  auto fs = enumerate_functors(one, two);
  CHECK(fs[0].object_map.at("*") == "0");
  CHECK(fs[1].object_map.at("*") == "1");
  // every result validates
  for (const auto& [name, C] : corpus_categories())
    for (const auto& F : enumerate_functors(walking_arrow(), C)) CHECK(validate_functor(F).ok());
}

TEST_CASE("enumerate_functors respects the guard") {
  SizeGuard tiny{1};
  CHECK_THROWS_AS(enumerate_functors(chain_poset(3), chain_poset(3), tiny), resource_error);
}

TEST_CASE("colimit_in_cat") {
  FinCategory one = terminal_category();
  FinCategory two = walking_arrow();

  auto c1 = colimit_in_cat(one, identity_functor(one));
  REQUIRE(c1.has_value());
  CHECK(c1->apex == "*");

  // empty diagram: initial object of the walking arrow is 0
  FinFunctor empty_diag{discrete_category(0), two, {}, {}};
  auto c2 = colimit_in_cat(two, empty_diag);
  REQUIRE(c2.has_value());
  CHECK(c2->apex == "0");

  // constant diagram at 1 with shape the walking arrow
  FinFunctor const1{two, two, {{"0", "1"}, {"1", "1"}}, {{"id0", "id1"}, {"u", "id1"}, {"id1", "id1"}}};
  auto c3 = colimit_in_cat(two, const1);
  REQUIRE(c3.has_value());
  CHECK(c3->apex == "1");

  // coproduct of 0 and 1 in the walking arrow is the join 1
  FinCategory d2 = discrete_category(2);
  FinFunctor incl{d2, two, {{"0", "0"}, {"1", "1"}}, {{"id0", "id0"}, {"id1", "id1"}}};
  auto c4 = colimit_in_cat(two, incl);
  REQUIRE(c4.has_value());
  CHECK(c4->apex == "1");

  // while the product of 0 and 1 taken in the opposite fails to exist... the
  // two-point diagram into the parallel pair has no colimit
  FinCategory pp = parallel_pair();
  FinFunctor incl2{d2, pp, {{"0", "a"}, {"1", "b"}}, {{"id0", "ida"}, {"id1", "idb"}}};
  CHECK(!colimit_in_cat(pp, incl2).has_value());
}

TEST_CASE("limit_in_cat is the dual") {
  FinCategory one = terminal_category();
  FinCategory two = walking_arrow();
  auto l1 = limit_in_cat(one, identity_functor(one));
  REQUIRE(l1.has_value());
  CHECK(l1->apex == "*");

  FinFunctor empty_diag{discrete_category(0), two, {}, {}};
  auto l2 = limit_in_cat(two, empty_diag);
  REQUIRE(l2.has_value());
  CHECK(l2->apex == "1");
}

TEST_CASE("colimit and limit agree under double dualization on the corpus") {
  FinCategory two = walking_arrow();
  for (const auto& [name, X] : corpus_categories()) {
    INFO(name);
    for (const auto& d : enumerate_functors(two, X)) {
      auto lim = limit_in_cat(X, d);
      auto dual = colimit_in_cat(opposite(X), opposite_functor(d));
      CHECK(lim.has_value() == dual.has_value());
      if (lim && dual) CHECK(lim->apex == dual->apex);
    }
  }
}

TEST_CASE("set_colimit") {
  // one-object diagram {a, b}
  SetDiagram d1{terminal_category(), {{"*", {"a", "b"}}}, {}};
  d1.action[{"id*", "a"}] = "a";
  d1.action[{"id*", "b"}] = "b";
  CHECK(set_colimit(d1).classes.size() == 2);

  // coequalizer of two parallel maps {x,y} => {p,q} with images {p,q} and {p,p}
  SetDiagram d2{parallel_pair(), {{"a", {"x", "y"}}, {"b", {"p", "q"}}}, {}};
  d2.action[{"ida", "x"}] = "x";
  d2.action[{"ida", "y"}] = "y";
  d2.action[{"idb", "p"}] = "p";
  d2.action[{"idb", "q"}] = "q";
  d2.action[{"u", "x"}] = "p";
  d2.action[{"u", "y"}] = "q";
  d2.action[{"v", "x"}] = "p";
  d2.action[{"v", "y"}] = "p";
  auto col = set_colimit(d2);
  CHECK(col.classes.size() == 1);

  // discrete shape: disjoint union
  SetDiagram d3{discrete_category(2), {{"0", {"a"}}, {"1", {"a", "b"}}}, {}};
  d3.action[{"id0", "a"}] = "a";
  d3.action[{"id1", "a"}] = "a";
  d3.action[{"id1", "b"}] = "b";
  CHECK(set_colimit(d3).classes.size() == 3);

  // non-total action is structural
  SetDiagram bad = d3;
  bad.action.erase({"id1", "b"});
  CHECK_THROWS_AS(set_colimit(bad), structural_error);
}

TEST_CASE("set_limit") {
  SetDiagram d1{terminal_category(), {{"*", {"a", "b"}}}, {}};
  d1.action[{"id*", "a"}] = "a";
  d1.action[{"id*", "b"}] = "b";
  CHECK(set_limit(d1).size() == 2);

  // equalizer of swap and identity on {x,y}: empty
  SetDiagram d2{parallel_pair(), {{"a", {"x", "y"}}, {"b", {"x", "y"}}}, {}};
  d2.action[{"ida", "x"}] = "x";
  d2.action[{"ida", "y"}] = "y";
  d2.action[{"idb", "x"}] = "x";
  d2.action[{"idb", "y"}] = "y";
  d2.action[{"u", "x"}] = "x";
  d2.action[{"u", "y"}] = "y";
  d2.action[{"v", "x"}] = "y";
  d2.action[{"v", "y"}] = "x";
  CHECK(set_limit(d2).empty());

  // constant singleton diagram over the walking arrow
  SetDiagram d3{walking_arrow(), {{"0", {"z"}}, {"1", {"z"}}}, {}};
  d3.action[{"id0", "z"}] = "z";
  d3.action[{"id1", "z"}] = "z";
  d3.action[{"u", "z"}] = "z";
  CHECK(set_limit(d3).size() == 1);
}

TEST_CASE("set_colimit coequalizes every action pair") {
  // inclusion-then-quotient: for every morphism and element, source and image
  // land in the same class.
  SetDiagram d{walking_arrow(), {{"0", {"a", "b"}}, {"1", {"c"}}}, {}};
  d.action[{"id0", "a"}] = "a";
  d.action[{"id0", "b"}] = "b";
  d.action[{"id1", "c"}] = "c";
  d.action[{"u", "a"}] = "c";
  d.action[{"u", "b"}] = "c";
  auto col = set_colimit(d);
  for (const auto& m : d.shape.morphisms)
    for (const auto& x : d.elements.at(m.src))
      CHECK(col.class_of.at({m.src, x}) == col.class_of.at({m.tgt, d.apply(m.id, x)}));
}

TEST_CASE("gaunt_check") {
  CHECK(gaunt_check(walking_arrow()));
  CHECK(gaunt_check(discrete_category(3)));
  CHECK(!gaunt_check(two_element_group()));
  // exactly the posets of the corpus are gaunt; the group is not
  for (const auto& [name, C] : corpus_posets()) {
    INFO(name);
    CHECK(gaunt_check(C));
  }
  CHECK(gaunt_check(parallel_pair()));
  CHECK(gaunt_check(split_idempotent()));
}
