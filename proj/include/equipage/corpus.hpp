#ifndef EQUIPAGE_CORPUS_HPP
#define EQUIPAGE_CORPUS_HPP

#include <string>
#include <vector>

#include "equipage/fincat.hpp"

namespace equipage {

// The fixed generator corpus: every category here has at most 3 objects and
// at most 8 morphisms. Used by the verification suites and the CLI.

// Chain poset 0 <= 1 <= ... <= n-1.
inline FinCategory chain_poset(int n) {
  FinCategory C;
  for (int i = 0; i < n; ++i) C.objects.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      C.morphisms.push_back({"le" + std::to_string(i) + std::to_string(j), std::to_string(i),
                             std::to_string(j)});
  for (int i = 0; i < n; ++i)
    C.identity[std::to_string(i)] = "le" + std::to_string(i) + std::to_string(i);
  for (const auto& g : C.morphisms)
    for (const auto& f : C.morphisms)
      if (f.tgt == g.src) C.comp[{g.id, f.id}] = "le" + f.src + g.tgt;
  return C;
}

inline FinCategory discrete_category(int n) {
  FinCategory C;
  for (int i = 0; i < n; ++i) {
    std::string o = std::to_string(i);
    C.objects.push_back(o);
    C.morphisms.push_back({"id" + o, o, o});
    C.identity[o] = "id" + o;
    C.comp[{"id" + o, "id" + o}] = "id" + o;
  }
  return C;
}

// Cospan poset a -> m <- b.
inline FinCategory cospan_poset() {
  FinCategory C;
  C.objects = {"a", "b", "m"};
  C.morphisms = {{"ida", "a", "a"}, {"idb", "b", "b"}, {"idm", "m", "m"},
                 {"am", "a", "m"},  {"bm", "b", "m"}};
  C.identity = {{"a", "ida"}, {"b", "idb"}, {"m", "idm"}};
  for (const auto& g : C.morphisms)
    for (const auto& f : C.morphisms)
      if (f.tgt == g.src)
        C.comp[{g.id, f.id}] = f.src == g.tgt ? "id" + f.src : f.src + g.tgt;
  return C;
}

// Span poset a <- m -> b.
inline FinCategory span_poset() { return opposite(cospan_poset()); }

// One object, two morphisms: the 2-element group.
inline FinCategory two_element_group() {
  FinCategory C;
  C.objects = {"*"};
  C.morphisms = {{"e", "*", "*"}, {"s", "*", "*"}};
  C.identity["*"] = "e";
  C.comp[{"e", "e"}] = "e";
  C.comp[{"e", "s"}] = "s";
  C.comp[{"s", "e"}] = "s";
  C.comp[{"s", "s"}] = "e";
  return C;
}

// Two objects with a parallel pair of arrows between them.
inline FinCategory parallel_pair() {
  FinCategory C;
  C.objects = {"a", "b"};
  C.morphisms = {{"ida", "a", "a"}, {"idb", "b", "b"}, {"u", "a", "b"}, {"v", "a", "b"}};
  C.identity = {{"a", "ida"}, {"b", "idb"}};
  for (const auto& g : C.morphisms)
    for (const auto& f : C.morphisms)
      if (f.tgt == g.src) {
        std::string h;
        if (C.identity.at(f.src) == f.id) h = g.id;
        else if (C.identity.at(g.src) == g.id) h = f.id;
        C.comp[{g.id, f.id}] = h;
      }
  return C;
}

// The walking split idempotent: e = s.p with p.s = id_r.
inline FinCategory split_idempotent() {
  FinCategory C;
  C.objects = {"a", "r"};
  C.morphisms = {{"ida", "a", "a"}, {"e", "a", "a"}, {"p", "a", "r"}, {"idr", "r", "r"},
                 {"s", "r", "a"}};
  C.identity = {{"a", "ida"}, {"r", "idr"}};
  auto& comp = C.comp;
  comp[{"ida", "ida"}] = "ida";
  comp[{"ida", "e"}] = "e";
  comp[{"e", "ida"}] = "e";
  comp[{"e", "e"}] = "e";
  comp[{"p", "ida"}] = "p";
  comp[{"p", "e"}] = "p";
  comp[{"ida", "s"}] = "s";
  comp[{"e", "s"}] = "s";
  comp[{"p", "s"}] = "idr";
  comp[{"s", "p"}] = "e";
  comp[{"s", "idr"}] = "s";
  comp[{"idr", "p"}] = "p";
  comp[{"idr", "idr"}] = "idr";
  return C;
}

struct CorpusEntry {
  std::string name;
  FinCategory category;
};

// The full corpus in a fixed order.
inline std::vector<CorpusEntry> corpus_categories() {
  return {
      {"one", terminal_category()},
      {"two", walking_arrow()},
      {"chain3", chain_poset(3)},
      {"disc2", discrete_category(2)},
      {"cospan", cospan_poset()},
      {"span", span_poset()},
      {"bz2", two_element_group()},
      {"parallel", parallel_pair()},
      {"splitidem", split_idempotent()},
  };
}

// The poset members of the corpus (used by the double-category suites).
inline std::vector<CorpusEntry> corpus_posets() {
  return {
      {"one", terminal_category()},
      {"two", walking_arrow()},
      {"chain3", chain_poset(3)},
      {"disc2", discrete_category(2)},
      {"cospan", cospan_poset()},
      {"span", span_poset()},
  };
}

}  // namespace equipage

#endif
