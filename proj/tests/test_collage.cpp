#include <catch2/catch_amalgamated.hpp>

#include "equipage/collage.hpp"
#include "equipage/corpus.hpp"

using namespace equipage;

namespace {
const FinCategory kOne = terminal_category();
const FinCategory kTwo = walking_arrow();

std::vector<Profunctor> small_corpus_profunctors() {
  std::vector<Profunctor> out;
  for (const auto& [name, C] : corpus_categories()) {
    out.push_back(hom_profunctor(C));
    for (const auto& f : enumerate_functors(terminal_category(), C)) {
      out.push_back(companion_of(f));
      out.push_back(conjoint_of(f));
    }
  }
  return out;
}

Profunctor empty_profunctor(const FinCategory& C, const FinCategory& D) {
  return make_profunctor(
      C, D, [](const std::string&, const std::string&) { return std::vector<std::string>{}; },
      [](const FinCategory::Mor&, const std::string&, const std::string& x) { return x; },
      [](const FinCategory::Mor&, const std::string&, const std::string& x) { return x; });
}

Profunctor terminal_profunctor(const FinCategory& C, const FinCategory& D) {
  return make_profunctor(
      C, D, [](const std::string&, const std::string&) { return std::vector<std::string>{"pt"}; },
      [](const FinCategory::Mor&, const std::string&, const std::string& x) { return x; },
      [](const FinCategory::Mor&, const std::string&, const std::string& x) { return x; });
}
}  // namespace

TEST_CASE("collage of the unit profunctor over the point is the walking arrow") {
  CollageResult r = collage(hom_profunctor(kOne));
  CHECK(r.category.objects.size() == 2);
  CHECK(r.category.morphisms.size() == 3);
  CHECK(validate_category(r.category).ok());
  CHECK(validate_functor(r.classifier).ok());
}

TEST_CASE("collage of the empty profunctor is a disjoint union") {
  CollageResult r = collage(empty_profunctor(kOne, kTwo));
  CHECK(r.category.objects.size() == 3);
  CHECK(r.category.morphisms.size() == 4);
  CHECK(connected_components(r.category).size() == 2);
  CHECK(validate_category(r.category).ok());
}

TEST_CASE("collage validates and round-trips on the corpus") {
  for (const auto& P : small_corpus_profunctors()) {
    CollageResult r = collage(P);
    CHECK(validate_category(r.category).ok());
    CHECK(validate_functor(r.classifier).ok());
    CHECK(collage_roundtrip_check(P));
  }
}

TEST_CASE("prof_from_collage rejects reversed morphisms") {
  FinCategory E;
  E.objects = {"d", "c"};
  E.morphisms = {{"idd", "d", "d"}, {"idc", "c", "c"}, {"bad", "c", "d"}};
  E.identity = {{"d", "idd"}, {"c", "idc"}};
  E.comp[{"idd", "idd"}] = "idd";
  E.comp[{"idc", "idc"}] = "idc";
  E.comp[{"bad", "idc"}] = "bad";
  E.comp[{"idd", "bad"}] = "bad";
  FinFunctor p{E, walking_arrow(), {{"d", "0"}, {"c", "1"}},
               {{"idd", "id0"}, {"idc", "id1"}, {"bad", "u"}}};
  CHECK_THROWS_AS(prof_from_collage(E, p), not_a_correspondence_error);
}

TEST_CASE("elements span of hom over the point is the point") {
  ElementsSpan s = elements_span(hom_profunctor(kOne));
  CHECK(s.category.objects.size() == 1);
  CHECK(validate_category(s.category).ok());
}

TEST_CASE("elements span of hom over the walking arrow is its arrow category") {
  ElementsSpan s = elements_span(hom_profunctor(kTwo));
  CHECK(s.category.objects.size() == 3);
  CHECK(validate_category(s.category).ok());
  CHECK(validate_functor(s.to_source).ok());
  CHECK(validate_functor(s.to_target).ok());
  CHECK(elements_span_discrete(hom_profunctor(kTwo), s));
}

TEST_CASE("elements span of the empty profunctor is empty") {
  ElementsSpan s = elements_span(empty_profunctor(kOne, kTwo));
  CHECK(s.category.objects.empty());
}

TEST_CASE("elements span discreteness on the corpus") {
  for (const auto& P : small_corpus_profunctors()) {
    ElementsSpan s = elements_span(P);
    CHECK(validate_category(s.category).ok());
    CHECK(elements_span_discrete(P, s));
  }
}

TEST_CASE("conduche_check holds on composite-built trimodules") {
  FinFunctor pick1 = point_functor(kTwo, "1");
  Profunctor F = companion_of(pick1);  // 1 -> 2
  Profunctor G = conjoint_of(pick1);   // 2 -> 1
  TriModule M = canonical_trimodule(G, F);
  REQUIRE(validate_trimodule(M).ok());
  CHECK(conduche_check(M).ok);

  FinCategory pp = parallel_pair();
  TriModule M2 = canonical_trimodule(hom_profunctor(pp), hom_profunctor(pp));
  REQUIRE(validate_trimodule(M2).ok());
  CHECK(conduche_check(M2).ok);
}

TEST_CASE("conduche_check fails with witness on a padded long edge") {
  FinFunctor pick1 = point_functor(kTwo, "1");
  Profunctor F = companion_of(pick1);
  Profunctor G = conjoint_of(pick1);
  TriModule M = canonical_trimodule(G, F);
  // add a fresh element to H at some (e,c), fixed under every action, without
  // extending the pairing image
  auto slot = M.H.elements.begin();
  const std::string e = slot->first.first, c = slot->first.second;
  slot->second.push_back("extra");
  for (const auto& m : M.H.source.morphisms)
    if (m.src == c && m.tgt == c) M.H.lact[{m.id, e, "extra"}] = "extra";
  for (const auto& m : M.H.target.morphisms)
    if (m.tgt == e && m.src == e) M.H.ract[{m.id, c, "extra"}] = "extra";
  ConducheCheck r = conduche_check(M);
  CHECK(!r.ok);
  CHECK(r.witness.find("extra") != std::string::npos);
}

TEST_CASE("conduche_check fails when classes are merged") {
  // the terminal long edge merges the two classes of hom.hom over the
  // parallel pair
  FinCategory pp = parallel_pair();
  Profunctor F = hom_profunctor(pp);
  Profunctor G = hom_profunctor(pp);
  TriModule M{F, G, terminal_profunctor(pp, pp), {}};
  for (const auto& e : pp.objects)
    for (const auto& d : pp.objects)
      for (const auto& c : pp.objects)
        for (const auto& y : G.at(e, d))
          for (const auto& x : F.at(d, c)) M.pairing[{e, d, c, y, x}] = "pt";
  REQUIRE(validate_trimodule(M).ok());
  ConducheCheck r = conduche_check(M);
  CHECK(!r.ok);
  CHECK(r.witness.find("not injective") != std::string::npos);
}
