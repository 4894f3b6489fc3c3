#ifndef EQUIPAGE_COLLAGE_HPP
#define EQUIPAGE_COLLAGE_HPP

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "equipage/errors.hpp"
#include "equipage/fincat.hpp"
#include "equipage/profunctor.hpp"

namespace equipage {

// The collage of a proarrow F: C -> D is a category over the walking arrow
// with D over 0, C over 1, and the cross hom(d, c) given by F(d,c). Object
// ids are prefixed "0."/"1.", cross morphisms are "x.(d,c,x)".
struct CollageResult {
  FinCategory category;
  FinFunctor classifier;  // to the walking arrow
};

inline CollageResult collage(const Profunctor& F) {
  const FinCategory& C = F.source;
  const FinCategory& D = F.target;
  FinCategory E;
  for (const auto& d : D.objects) E.objects.push_back("0." + d);
  for (const auto& c : C.objects) E.objects.push_back("1." + c);
  for (const auto& m : D.morphisms) E.morphisms.push_back({"0." + m.id, "0." + m.src, "0." + m.tgt});
  for (const auto& m : C.morphisms) E.morphisms.push_back({"1." + m.id, "1." + m.src, "1." + m.tgt});
  for (const auto& [slot, xs] : F.elements)
    for (const auto& x : xs)
      E.morphisms.push_back(
          {"x." + tuple_id({slot.first, slot.second, x}), "0." + slot.first, "1." + slot.second});
  for (const auto& d : D.objects) E.identity["0." + d] = "0." + D.id_of(d);
  for (const auto& c : C.objects) E.identity["1." + c] = "1." + C.id_of(c);

  for (const auto& g : D.morphisms)
    for (const auto& f : D.morphisms)
      if (f.tgt == g.src) E.comp[{"0." + g.id, "0." + f.id}] = "0." + D.compose(g.id, f.id);
  for (const auto& g : C.morphisms)
    for (const auto& f : C.morphisms)
      if (f.tgt == g.src) E.comp[{"1." + g.id, "1." + f.id}] = "1." + C.compose(g.id, f.id);
  for (const auto& [slot, xs] : F.elements) {
    const auto& [d, c] = slot;
    for (const auto& x : xs) {
      std::string cross = "x." + tuple_id({d, c, x});
      for (const auto& delta : D.morphisms)
        if (delta.tgt == d)
          E.comp[{cross, "0." + delta.id}] =
              "x." + tuple_id({delta.src, c, F.apply_ract(delta.id, c, x)});
      for (const auto& alpha : C.morphisms)
        if (alpha.src == c)
          E.comp[{"1." + alpha.id, cross}] =
              "x." + tuple_id({d, alpha.tgt, F.apply_lact(alpha.id, d, x)});
    }
  }

  CollageResult out;
  out.category = E;
  out.classifier = FinFunctor{E, walking_arrow(), {}, {}};
  for (const auto& d : D.objects) out.classifier.object_map["0." + d] = "0";
  for (const auto& c : C.objects) out.classifier.object_map["1." + c] = "1";
  for (const auto& m : D.morphisms) out.classifier.morphism_map["0." + m.id] = "id0";
  for (const auto& m : C.morphisms) out.classifier.morphism_map["1." + m.id] = "id1";
  for (const auto& [slot, xs] : F.elements)
    for (const auto& x : xs)
      out.classifier.morphism_map["x." + tuple_id({slot.first, slot.second, x})] = "u";
  return out;
}

// Recover a profunctor from a category over the walking arrow. The fiber over
// 0 is the target, over 1 the source; cross hom-sets are the elements.
inline Profunctor prof_from_collage(const FinCategory& E, const FinFunctor& p) {
  if (!(p.source == E) || !(p.target == walking_arrow()))
    throw boundary_error("prof_from_collage: classifier must map E to the walking arrow");
  auto fiber = [&](const std::string& label) {
    FinCategory S;
    for (const auto& o : E.objects)
      if (p.on_object(o) == label) S.objects.push_back(o);
    for (const auto& m : E.morphisms)
      if (p.on_object(m.src) == label && p.on_object(m.tgt) == label) S.morphisms.push_back(m);
    for (const auto& o : S.objects) S.identity[o] = E.id_of(o);
    for (const auto& g : S.morphisms)
      for (const auto& f : S.morphisms)
        if (f.tgt == g.src) S.comp[{g.id, f.id}] = E.compose(g.id, f.id);
    return S;
  };
  for (const auto& m : E.morphisms)
    if (p.on_object(m.src) == "1" && p.on_object(m.tgt) == "0")
      throw not_a_correspondence_error("reversed morphism " + m.id + " from fiber 1 to fiber 0");

  FinCategory D = fiber("0");
  FinCategory C = fiber("1");
  return make_profunctor(
      C, D, [&](const std::string& d, const std::string& c) { return E.hom(d, c); },
      [&](const FinCategory::Mor& alpha, const std::string&, const std::string& x) {
        return E.compose(alpha.id, x);
      },
      [&](const FinCategory::Mor& delta, const std::string&, const std::string& x) {
        return E.compose(x, delta.id);
      });
}

// Round trip: prof_from_collage(collage(F)) reproduces F up to the canonical
// relabeling x |-> "x.(d,c,x)". Checks the constructed comparison is a
// natural bijection; no isomorphism search involved.
inline bool collage_roundtrip_check(const Profunctor& F) {
  CollageResult col = collage(F);
  Profunctor back = prof_from_collage(col.category, col.classifier);
  if (!validate_profunctor(back).ok()) return false;
  // componentwise bijection along the canonical relabeling
  for (const auto& [slot, xs] : F.elements) {
    const auto& [d, c] = slot;
    const auto& ys = back.at("0." + d, "1." + c);
    if (ys.size() != xs.size()) return false;
    std::set<std::string> seen(ys.begin(), ys.end());
    for (const auto& x : xs)
      if (!seen.count("x." + tuple_id({d, c, x}))) return false;
  }
  // naturality: actions transported along the relabeling agree
  for (const auto& alpha : F.source.morphisms)
    for (const auto& d : F.target.objects)
      for (const auto& x : F.at(d, alpha.src)) {
        std::string lhs = back.apply_lact("1." + alpha.id, "0." + d, "x." + tuple_id({d, alpha.src, x}));
        std::string rhs = "x." + tuple_id({d, alpha.tgt, F.apply_lact(alpha.id, d, x)});
        if (lhs != rhs) return false;
      }
  for (const auto& delta : F.target.morphisms)
    for (const auto& c : F.source.objects)
      for (const auto& x : F.at(delta.tgt, c)) {
        std::string lhs =
            back.apply_ract("0." + delta.id, "1." + c, "x." + tuple_id({delta.tgt, c, x}));
        std::string rhs = "x." + tuple_id({delta.src, c, F.apply_ract(delta.id, c, x)});
        if (lhs != rhs) return false;
      }
  return true;
}

// Two-sided category of elements of F: C -> D: objects are (d,c,x) with x in
// F(d,c); a morphism (delta,gamma,x,x') exists when gamma.x = x'.delta.
struct ElementsSpan {
  FinCategory category;
  FinFunctor to_source;  // leg to C
  FinFunctor to_target;  // leg to D
};

inline ElementsSpan elements_span(const Profunctor& F) {
  const FinCategory& C = F.source;
  const FinCategory& D = F.target;
  ElementsSpan out;
  FinCategory& E = out.category;

  struct Obj {
    std::string d, c, x;
  };
  std::vector<Obj> objs;
  for (const auto& [slot, xs] : F.elements)
    for (const auto& x : xs) objs.push_back({slot.first, slot.second, x});
  for (const auto& o : objs) E.objects.push_back(tuple_id({o.d, o.c, o.x}));

  struct MorData {
    std::string delta, gamma;
    Obj src, tgt;
  };
  std::vector<MorData> mors;
  for (const auto& s : objs)
    for (const auto& t : objs)
      for (const auto& delta : D.morphisms) {
        if (delta.src != s.d || delta.tgt != t.d) continue;
        for (const auto& gamma : C.morphisms) {
          if (gamma.src != s.c || gamma.tgt != t.c) continue;
          if (F.apply_lact(gamma.id, s.d, s.x) == F.apply_ract(delta.id, t.c, t.x))
            mors.push_back({delta.id, gamma.id, s, t});
        }
      }
  for (const auto& m : mors)
    E.morphisms.push_back({tuple_id({m.delta, m.gamma, m.src.x, m.tgt.x}),
                           tuple_id({m.src.d, m.src.c, m.src.x}),
                           tuple_id({m.tgt.d, m.tgt.c, m.tgt.x})});
  for (const auto& o : objs)
    E.identity[tuple_id({o.d, o.c, o.x})] = tuple_id({D.id_of(o.d), C.id_of(o.c), o.x, o.x});
  for (std::size_t b = 0; b < mors.size(); ++b)
    for (std::size_t a = 0; a < mors.size(); ++a) {
      if (!(E.morphisms[a].tgt == E.morphisms[b].src)) continue;
      E.comp[{E.morphisms[b].id, E.morphisms[a].id}] =
          tuple_id({D.compose(mors[b].delta, mors[a].delta), C.compose(mors[b].gamma, mors[a].gamma),
                    mors[a].src.x, mors[b].tgt.x});
    }

  out.to_source = FinFunctor{E, C, {}, {}};
  out.to_target = FinFunctor{E, D, {}, {}};
  for (std::size_t k = 0; k < objs.size(); ++k) {
    out.to_source.object_map[E.objects[k]] = objs[k].c;
    out.to_target.object_map[E.objects[k]] = objs[k].d;
  }
  for (std::size_t k = 0; k < mors.size(); ++k) {
    out.to_source.morphism_map[E.morphisms[k].id] = mors[k].gamma;
    out.to_target.morphism_map[E.morphisms[k].id] = mors[k].delta;
  }
  return out;
}

// Unique-lift conditions of a two-sided discrete fibration, by enumeration:
// every gamma out of an object lifts uniquely with identity D-leg, and every
// delta into an object lifts uniquely with identity C-leg.
inline bool elements_span_discrete(const Profunctor& F, const ElementsSpan& span) {
  const FinCategory& E = span.category;
  const FinCategory& C = F.source;
  const FinCategory& D = F.target;
  for (const auto& o : E.objects) {
    const std::string c = span.to_source.object_map.at(o);
    const std::string d = span.to_target.object_map.at(o);
    for (const auto& gamma : C.morphisms) {
      if (gamma.src != c) continue;
      int lifts = 0;
      for (const auto& m : E.morphisms)
        if (m.src == o && span.to_source.morphism_map.at(m.id) == gamma.id &&
            span.to_target.morphism_map.at(m.id) == D.id_of(d))
          ++lifts;
      if (lifts != 1) return false;
    }
    for (const auto& delta : D.morphisms) {
      if (delta.tgt != d) continue;
      int lifts = 0;
      for (const auto& m : E.morphisms)
        if (m.tgt == o && span.to_target.morphism_map.at(m.id) == delta.id &&
            span.to_source.morphism_map.at(m.id) == C.id_of(c))
          ++lifts;
      if (lifts != 1) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Trimodules and the Conduché bar condition.

// F: A -> B, G: B -> C, H: A -> C with a pairing mu: G(e,d) x F(d,c) -> H(e,c).
struct TriModule {
  Profunctor F, G, H;
  std::map<std::tuple<std::string, std::string, std::string, std::string, std::string>, std::string>
      pairing;  // (e, d, c, y, x) -> element of H(e, c)

  const std::string& mu(const std::string& e, const std::string& d, const std::string& c,
                        const std::string& y, const std::string& x) const {
    auto it = pairing.find({e, d, c, y, x});
    if (it == pairing.end())
      throw structural_error("trimodule pairing not total at " + tuple_id({e, d, c, y, x}));
    return it->second;
  }
};

inline ValidationReport validate_trimodule(const TriModule& M) {
  ValidationReport r;
  if (!(M.F.source == M.H.source) || !(M.G.target == M.H.target) || !(M.F.target == M.G.source)) {
    r.structural.push_back("trimodule boundary mismatch");
    return r;
  }
  const FinCategory& A = M.F.source;
  const FinCategory& B = M.F.target;
  const FinCategory& Cc = M.G.target;
  for (const auto& e : Cc.objects)
    for (const auto& d : B.objects)
      for (const auto& c : A.objects)
        for (const auto& y : M.G.at(e, d))
          for (const auto& x : M.F.at(d, c)) {
            auto it = M.pairing.find({e, d, c, y, x});
            if (it == M.pairing.end()) {
              r.structural.push_back("pairing not total at " + tuple_id({e, d, c, y, x}));
              continue;
            }
            const auto& hs = M.H.at(e, c);
            if (std::find(hs.begin(), hs.end(), it->second) == hs.end())
              r.structural.push_back("pairing out of range at " + tuple_id({e, d, c, y, x}));
          }
  if (!r.structural.empty()) return r;

  // naturality in the outer variables
  for (const auto& eps : Cc.morphisms)
    for (const auto& d : B.objects)
      for (const auto& c : A.objects)
        for (const auto& y : M.G.at(eps.tgt, d))
          for (const auto& x : M.F.at(d, c))
            if (M.mu(eps.src, d, c, M.G.apply_ract(eps.id, d, y), x) !=
                M.H.apply_ract(eps.id, c, M.mu(eps.tgt, d, c, y, x)))
              r.violations.push_back({"mu-natural-outer-target", tuple_id({eps.id, y, x})});
  for (const auto& alpha : A.morphisms)
    for (const auto& e : Cc.objects)
      for (const auto& d : B.objects)
        for (const auto& y : M.G.at(e, d))
          for (const auto& x : M.F.at(d, alpha.src))
            if (M.mu(e, d, alpha.tgt, y, M.F.apply_lact(alpha.id, d, x)) !=
                M.H.apply_lact(alpha.id, e, M.mu(e, d, alpha.src, y, x)))
              r.violations.push_back({"mu-natural-outer-source", tuple_id({alpha.id, y, x})});
  // balance over the middle
  for (const auto& delta : B.morphisms)
    for (const auto& e : Cc.objects)
      for (const auto& c : A.objects)
        for (const auto& y : M.G.at(e, delta.src))
          for (const auto& x : M.F.at(delta.tgt, c))
            if (M.mu(e, delta.tgt, c, M.G.apply_lact(delta.id, e, y), x) !=
                M.mu(e, delta.src, c, y, M.F.apply_ract(delta.id, c, x)))
              r.violations.push_back({"mu-balanced", tuple_id({delta.id, y, x})});
  return r;
}

// Trimodule whose long edge is the bar coequalizer itself.
inline TriModule canonical_trimodule(const Profunctor& G, const Profunctor& F) {
  TriModule M{F, G, compose_prof(G, F), {}};
  for (const auto& e : M.G.target.objects)
    for (const auto& d : M.F.target.objects)
      for (const auto& c : M.F.source.objects)
        for (const auto& y : M.G.at(e, d))
          for (const auto& x : M.F.at(d, c))
            M.pairing[{e, d, c, y, x}] = coend_class(M.H, G, F, e, c, d, y, x);
  return M;
}

struct ConducheCheck {
  bool ok;
  std::string witness;  // failing component and element when not ok
};

// The bar condition at Set level: the canonical map from the coend composite
// G . F to H induced by the pairing is a componentwise bijection.
inline ConducheCheck conduche_check(const TriModule& M) {
  {
    ValidationReport r = validate_trimodule(M);
    if (!r.structural.empty()) throw structural_error("conduche_check: " + r.structural.front());
    if (!r.violations.empty())
      throw structural_error("conduche_check: " + r.violations.front().law + " at " +
                             r.violations.front().witness);
  }
  Profunctor K = compose_prof(M.G, M.F);
  const FinCategory& A = M.F.source;
  const FinCategory& B = M.F.target;
  const FinCategory& Cc = M.G.target;
  for (const auto& e : Cc.objects)
    for (const auto& c : A.objects) {
      std::map<std::string, std::string> image;  // class -> mu value
      for (const auto& d : B.objects)
        for (const auto& y : M.G.at(e, d))
          for (const auto& x : M.F.at(d, c)) {
            std::string cls = coend_class(K, M.G, M.F, e, c, d, y, x);
            const std::string& v = M.mu(e, d, c, y, x);
            auto it = image.find(cls);
            if (it != image.end() && it->second != v)
              return {false, "pairing not constant on class " + cls + " at " + tuple_id({e, c})};
            image[cls] = v;
          }
      std::set<std::string> hit;
      for (const auto& [cls, v] : image) {
        if (!hit.insert(v).second)
          return {false, "canonical map not injective at " + tuple_id({e, c}) + ": " + v};
      }
      for (const auto& h : M.H.at(e, c))
        if (!hit.count(h))
          return {false, "canonical map misses " + h + " at " + tuple_id({e, c})};
    }
  return {true, ""};
}

}  // namespace equipage

#endif
