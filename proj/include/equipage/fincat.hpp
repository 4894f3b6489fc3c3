#ifndef EQUIPAGE_FINCAT_HPP
#define EQUIPAGE_FINCAT_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "equipage/errors.hpp"
#include "equipage/guard.hpp"
#include "equipage/ids.hpp"

namespace equipage {

// A finite category given by a total, explicit composition table. Identifiers
// are strings throughout; comp maps (g, f) -> g after f, defined exactly when
// tgt(f) = src(g).
struct FinCategory {
  struct Mor {
    std::string id, src, tgt;
    bool operator==(const Mor&) const = default;
    auto operator<=>(const Mor&) const = default;
  };

  std::vector<std::string> objects;
  std::vector<Mor> morphisms;
  std::map<std::string, std::string> identity;                      // object -> morphism id
  std::map<std::pair<std::string, std::string>, std::string> comp;  // (g, f) -> g.f

  bool operator==(const FinCategory&) const = default;

  bool has_object(const std::string& o) const {
    return std::find(objects.begin(), objects.end(), o) != objects.end();
  }

  const Mor* find_mor(const std::string& id) const {
    for (const auto& m : morphisms)
      if (m.id == id) return &m;
    return nullptr;
  }

  const Mor& mor(const std::string& id) const {
    const Mor* m = find_mor(id);
    if (!m) throw structural_error("unknown morphism id: " + id);
    return *m;
  }

  const std::string& id_of(const std::string& obj) const {
    auto it = identity.find(obj);
    if (it == identity.end()) throw structural_error("no identity for object: " + obj);
    return it->second;
  }

  bool is_identity(const std::string& mor_id) const {
    for (const auto& [o, i] : identity)
      if (i == mor_id) return true;
    return false;
  }

  // g after f; requires tgt(f) = src(g).
  const std::string& compose(const std::string& g, const std::string& f) const {
    auto it = comp.find({g, f});
    if (it == comp.end())
      throw structural_error("composite undefined for (" + g + "," + f + ")");
    return it->second;
  }

  // All morphisms from -> to, in morphism-list order.
  std::vector<std::string> hom(const std::string& from, const std::string& to) const {
    std::vector<std::string> out;
    for (const auto& m : morphisms)
      if (m.src == from && m.tgt == to) out.push_back(m.id);
    return out;
  }
};

struct LawViolation {
  std::string law;      // which invariant failed
  std::string witness;  // the cells witnessing the failure
  bool operator==(const LawViolation&) const = default;
};

struct ValidationReport {
  std::vector<std::string> structural;  // dangling identifiers and the like
  std::vector<LawViolation> violations;
  bool ok() const { return structural.empty() && violations.empty(); }
};

inline ValidationReport validate_category(const FinCategory& C) {
  ValidationReport r;
  std::set<std::string> objs(C.objects.begin(), C.objects.end());
  if (objs.size() != C.objects.size()) r.structural.push_back("duplicate object identifier");
  std::set<std::string> mors;
  for (const auto& m : C.morphisms) {
    if (!mors.insert(m.id).second) r.structural.push_back("duplicate morphism identifier: " + m.id);
    if (!objs.count(m.src)) r.structural.push_back("morphism " + m.id + " has dangling src " + m.src);
    if (!objs.count(m.tgt)) r.structural.push_back("morphism " + m.id + " has dangling tgt " + m.tgt);
  }
  for (const auto& o : C.objects) {
    auto it = C.identity.find(o);
    if (it == C.identity.end()) {
      r.structural.push_back("object " + o + " has no identity");
    } else if (!mors.count(it->second)) {
      r.structural.push_back("identity of " + o + " is dangling: " + it->second);
    } else {
      const auto& m = C.mor(it->second);
      if (m.src != o || m.tgt != o)
        r.structural.push_back("identity of " + o + " has endpoints " + m.src + "->" + m.tgt);
    }
  }
  for (const auto& [gf, h] : C.comp) {
    if (!mors.count(gf.first)) r.structural.push_back("comp key has dangling morphism " + gf.first);
    if (!mors.count(gf.second)) r.structural.push_back("comp key has dangling morphism " + gf.second);
    if (!mors.count(h)) r.structural.push_back("comp value dangling: " + h);
  }
  if (!r.structural.empty()) return r;

  // Totality and boundary of the composition table.
  for (const auto& g : C.morphisms)
    for (const auto& f : C.morphisms) {
      bool composable = (f.tgt == g.src);
      auto it = C.comp.find({g.id, f.id});
      if (composable && it == C.comp.end()) {
        r.violations.push_back({"comp-total", "(" + g.id + "," + f.id + ") undefined"});
      } else if (!composable && it != C.comp.end()) {
        r.violations.push_back({"comp-domain", "(" + g.id + "," + f.id + ") defined but not composable"});
      } else if (composable) {
        const auto& h = C.mor(it->second);
        if (h.src != f.src || h.tgt != g.tgt)
          r.violations.push_back({"comp-boundary", "(" + g.id + "," + f.id + ")=" + h.id});
      }
    }
  if (!r.violations.empty()) return r;

  for (const auto& f : C.morphisms) {
    if (C.compose(C.id_of(f.tgt), f.id) != f.id)
      r.violations.push_back({"unit-left", f.id});
    if (C.compose(f.id, C.id_of(f.src)) != f.id)
      r.violations.push_back({"unit-right", f.id});
  }
  for (const auto& h : C.morphisms)
    for (const auto& g : C.morphisms)
      for (const auto& f : C.morphisms) {
        if (f.tgt != g.src || g.tgt != h.src) continue;
        if (C.compose(h.id, C.compose(g.id, f.id)) != C.compose(C.compose(h.id, g.id), f.id))
          r.violations.push_back({"associativity", "(" + h.id + "," + g.id + "," + f.id + ")"});
      }
  return r;
}

inline void require_valid(const FinCategory& C, const std::string& who) {
  ValidationReport r = validate_category(C);
  if (!r.structural.empty()) throw structural_error(who + ": " + r.structural.front());
  if (!r.violations.empty())
    throw structural_error(who + ": law " + r.violations.front().law + " fails at " +
                           r.violations.front().witness);
}

// src/tgt swapped, comp reversed. Involutive on the nose.
inline FinCategory opposite(const FinCategory& C) {
  FinCategory D;
  D.objects = C.objects;
  for (const auto& m : C.morphisms) D.morphisms.push_back({m.id, m.tgt, m.src});
  D.identity = C.identity;
  for (const auto& [gf, h] : C.comp) D.comp[{gf.second, gf.first}] = h;
  return D;
}

// Object ids "(a,b)", morphism ids "(f,g)".
inline FinCategory product(const FinCategory& C, const FinCategory& D) {
  FinCategory P;
  for (const auto& a : C.objects)
    for (const auto& b : D.objects) P.objects.push_back(tuple_id({a, b}));
  for (const auto& f : C.morphisms)
    for (const auto& g : D.morphisms)
      P.morphisms.push_back({tuple_id({f.id, g.id}), tuple_id({f.src, g.src}), tuple_id({f.tgt, g.tgt})});
  for (const auto& a : C.objects)
    for (const auto& b : D.objects)
      P.identity[tuple_id({a, b})] = tuple_id({C.id_of(a), D.id_of(b)});
  for (const auto& f2 : C.morphisms)
    for (const auto& g2 : D.morphisms)
      for (const auto& f1 : C.morphisms) {
        if (f1.tgt != f2.src) continue;
        for (const auto& g1 : D.morphisms) {
          if (g1.tgt != g2.src) continue;
          P.comp[{tuple_id({f2.id, g2.id}), tuple_id({f1.id, g1.id})}] =
              tuple_id({C.compose(f2.id, f1.id), D.compose(g2.id, g1.id)});
        }
      }
  return P;
}

// A functor between finite categories, checkable by exhaustion.
struct FinFunctor {
  FinCategory source, target;
  std::map<std::string, std::string> object_map;
  std::map<std::string, std::string> morphism_map;

  bool operator==(const FinFunctor&) const = default;

  const std::string& on_object(const std::string& o) const {
    auto it = object_map.find(o);
    if (it == object_map.end()) throw structural_error("functor undefined on object " + o);
    return it->second;
  }
  const std::string& on_morphism(const std::string& m) const {
    auto it = morphism_map.find(m);
    if (it == morphism_map.end()) throw structural_error("functor undefined on morphism " + m);
    return it->second;
  }
};

inline ValidationReport validate_functor(const FinFunctor& F) {
  ValidationReport r;
  for (const auto& o : F.source.objects) {
    auto it = F.object_map.find(o);
    if (it == F.object_map.end())
      r.structural.push_back("no image for object " + o);
    else if (!F.target.has_object(it->second))
      r.structural.push_back("object image dangling: " + it->second);
  }
  for (const auto& m : F.source.morphisms) {
    auto it = F.morphism_map.find(m.id);
    if (it == F.morphism_map.end())
      r.structural.push_back("no image for morphism " + m.id);
    else if (!F.target.find_mor(it->second))
      r.structural.push_back("morphism image dangling: " + it->second);
  }
  if (!r.structural.empty()) return r;

  for (const auto& m : F.source.morphisms) {
    const auto& fm = F.target.mor(F.on_morphism(m.id));
    if (fm.src != F.on_object(m.src) || fm.tgt != F.on_object(m.tgt))
      r.violations.push_back({"functor-boundary", m.id});
  }
  for (const auto& [o, i] : F.source.identity)
    if (F.on_morphism(i) != F.target.id_of(F.on_object(o)))
      r.violations.push_back({"functor-identity", o});
  for (const auto& g : F.source.morphisms)
    for (const auto& f : F.source.morphisms) {
      if (f.tgt != g.src) continue;
      if (F.on_morphism(F.source.compose(g.id, f.id)) !=
          F.target.compose(F.on_morphism(g.id), F.on_morphism(f.id)))
        r.violations.push_back({"functor-composition", "(" + g.id + "," + f.id + ")"});
    }
  return r;
}

inline FinFunctor identity_functor(const FinCategory& C) {
  FinFunctor F{C, C, {}, {}};
  for (const auto& o : C.objects) F.object_map[o] = o;
  for (const auto& m : C.morphisms) F.morphism_map[m.id] = m.id;
  return F;
}

inline FinFunctor compose_functors(const FinFunctor& G, const FinFunctor& F) {
  if (!(F.target == G.source)) throw boundary_error("compose_functors: middle categories differ");
  FinFunctor H{F.source, G.target, {}, {}};
  for (const auto& [o, fo] : F.object_map) H.object_map[o] = G.on_object(fo);
  for (const auto& [m, fm] : F.morphism_map) H.morphism_map[m] = G.on_morphism(fm);
  return H;
}

inline FinFunctor opposite_functor(const FinFunctor& F) {
  return FinFunctor{opposite(F.source), opposite(F.target), F.object_map, F.morphism_map};
}

struct NatTransformation {
  FinFunctor source, target;  // parallel functors
  std::map<std::string, std::string> components;  // object of source cat -> morphism in target cat

  bool operator==(const NatTransformation&) const = default;

  const std::string& at(const std::string& o) const {
    auto it = components.find(o);
    if (it == components.end()) throw structural_error("transformation undefined at " + o);
    return it->second;
  }
};

inline ValidationReport validate_transformation(const NatTransformation& t) {
  ValidationReport r;
  if (!(t.source.source == t.target.source) || !(t.source.target == t.target.target)) {
    r.structural.push_back("functors are not parallel");
    return r;
  }
  const FinCategory& X = t.source.target;
  for (const auto& o : t.source.source.objects) {
    auto it = t.components.find(o);
    if (it == t.components.end()) {
      r.structural.push_back("no component at " + o);
      continue;
    }
    const FinCategory::Mor* m = X.find_mor(it->second);
    if (!m) {
      r.structural.push_back("component at " + o + " dangling: " + it->second);
      continue;
    }
    if (m->src != t.source.on_object(o) || m->tgt != t.target.on_object(o))
      r.violations.push_back({"component-boundary", o});
  }
  if (!r.structural.empty() || !r.violations.empty()) return r;
  for (const auto& m : t.source.source.morphisms) {
    // naturality: t(tgt m) . F(m) = G(m) . t(src m)
    if (X.compose(t.at(m.tgt), t.source.on_morphism(m.id)) !=
        X.compose(t.target.on_morphism(m.id), t.at(m.src)))
      r.violations.push_back({"naturality", m.id});
  }
  return r;
}

inline NatTransformation identity_transformation(const FinFunctor& F) {
  NatTransformation t{F, F, {}};
  for (const auto& o : F.source.objects) t.components[o] = F.target.id_of(F.on_object(o));
  return t;
}

inline NatTransformation vcomp_transformations(const NatTransformation& s, const NatTransformation& t) {
  // s after t: t: F => G, s: G => H.
  if (!(t.target == s.source)) throw boundary_error("vcomp_transformations: boundaries differ");
  NatTransformation out{t.source, s.target, {}};
  for (const auto& o : t.source.source.objects)
    out.components[o] = t.source.target.compose(s.at(o), t.at(o));
  return out;
}

// Whisker t: F => G (functors x -> y) with h: y -> z, giving h.F => h.G.
inline NatTransformation whisker_left(const FinFunctor& h, const NatTransformation& t) {
  NatTransformation out{compose_functors(h, t.source), compose_functors(h, t.target), {}};
  for (const auto& [o, c] : t.components) out.components[o] = h.on_morphism(c);
  return out;
}

// Whisker t: F => G (functors y -> z) with h: x -> y, giving F.h => G.h.
inline NatTransformation whisker_right(const NatTransformation& t, const FinFunctor& h) {
  NatTransformation out{compose_functors(t.source, h), compose_functors(t.target, h), {}};
  for (const auto& o : h.source.objects) out.components[o] = t.at(h.on_object(o));
  return out;
}

inline bool transformation_invertible(const NatTransformation& t) {
  const FinCategory& X = t.source.target;
  for (const auto& [o, c] : t.components) {
    const auto& m = X.mor(c);
    bool has_inverse = false;
    for (const auto& w : X.hom(m.tgt, m.src))
      if (X.compose(w, c) == X.id_of(m.src) && X.compose(c, w) == X.id_of(m.tgt)) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) return false;
  }
  return true;
}

// Comma category f/g for f: I -> X, g: J -> X. Objects are "(i,j,alpha)" with
// alpha: f i -> g j; morphisms "(u,v,alpha,alpha')" are compatible pairs.
struct CommaResult {
  FinCategory category;
  FinFunctor to_left;   // projection to I
  FinFunctor to_right;  // projection to J
};

inline CommaResult comma(const FinFunctor& f, const FinFunctor& g) {
  if (!(f.target == g.target)) throw boundary_error("comma: functors do not share a target");
  const FinCategory& I = f.source;
  const FinCategory& J = g.source;
  const FinCategory& X = f.target;

  struct Obj {
    std::string i, j, alpha;
  };
  std::vector<Obj> objs;
  for (const auto& i : I.objects)
    for (const auto& j : J.objects)
      for (const auto& a : X.hom(f.on_object(i), g.on_object(j))) objs.push_back({i, j, a});

  CommaResult out;
  FinCategory& E = out.category;
  for (const auto& o : objs) E.objects.push_back(tuple_id({o.i, o.j, o.alpha}));

  struct MorData {
    std::string u, v;
    Obj src, tgt;
  };
  std::vector<MorData> mors;
  for (const auto& s : objs)
    for (const auto& t : objs)
      for (const auto& u : I.morphisms) {
        if (u.src != s.i || u.tgt != t.i) continue;
        for (const auto& v : J.morphisms) {
          if (v.src != s.j || v.tgt != t.j) continue;
          // square: alpha' . f(u) = g(v) . alpha
          if (X.compose(t.alpha, f.on_morphism(u.id)) == X.compose(g.on_morphism(v.id), s.alpha))
            mors.push_back({u.id, v.id, s, t});
        }
      }
  for (const auto& m : mors)
    E.morphisms.push_back({tuple_id({m.u, m.v, m.src.alpha, m.tgt.alpha}),
                           tuple_id({m.src.i, m.src.j, m.src.alpha}),
                           tuple_id({m.tgt.i, m.tgt.j, m.tgt.alpha})});
  for (const auto& o : objs)
    E.identity[tuple_id({o.i, o.j, o.alpha})] =
        tuple_id({I.id_of(o.i), J.id_of(o.j), o.alpha, o.alpha});
  for (std::size_t b = 0; b < mors.size(); ++b)
    for (std::size_t a = 0; a < mors.size(); ++a) {
      const auto& m2 = mors[b];
      const auto& m1 = mors[a];
      if (!(E.morphisms[a].tgt == E.morphisms[b].src)) continue;
      E.comp[{E.morphisms[b].id, E.morphisms[a].id}] =
          tuple_id({I.compose(m2.u, m1.u), J.compose(m2.v, m1.v), m1.src.alpha, m2.tgt.alpha});
    }

  out.to_left = FinFunctor{E, I, {}, {}};
  out.to_right = FinFunctor{E, J, {}, {}};
  for (std::size_t k = 0; k < objs.size(); ++k) {
    out.to_left.object_map[E.objects[k]] = objs[k].i;
    out.to_right.object_map[E.objects[k]] = objs[k].j;
  }
  for (std::size_t k = 0; k < mors.size(); ++k) {
    out.to_left.morphism_map[E.morphisms[k].id] = mors[k].u;
    out.to_right.morphism_map[E.morphisms[k].id] = mors[k].v;
  }
  return out;
}

// Partition generated by "source and target of a morphism are equivalent".
// Classes are sorted internally and ordered by their least member.
inline std::vector<std::vector<std::string>> connected_components(const FinCategory& C) {
  std::map<std::string, std::string> parent;
  for (const auto& o : C.objects) parent[o] = o;
  auto find = [&](std::string x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const auto& m : C.morphisms) {
    auto a = find(m.src), b = find(m.tgt);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::string, std::vector<std::string>> classes;
  for (const auto& o : C.objects) classes[find(o)].push_back(o);
  std::vector<std::vector<std::string>> out;
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

// All functors C -> D, duplicate-free, in lexicographic order of object_map
// then morphism_map (object/morphism candidates scanned in target-list order).
inline std::vector<FinFunctor> enumerate_functors(const FinCategory& C, const FinCategory& D,
                                                  const SizeGuard& guard = default_guard()) {
  std::uint64_t space = 1;
  for (std::size_t k = 0; k < C.objects.size(); ++k)
    space = SizeGuard::times(space, D.objects.size());
  std::vector<std::string> nonid;
  for (const auto& m : C.morphisms)
    if (!C.is_identity(m.id)) nonid.push_back(m.id);
  for (std::size_t k = 0; k < nonid.size(); ++k)
    space = SizeGuard::times(space, std::max<std::size_t>(D.morphisms.size(), 1));
  guard.check(space, "enumerate_functors");

  std::vector<FinFunctor> out;
  FinFunctor F{C, D, {}, {}};

  auto assign_morphisms = [&](auto&& self, std::size_t k) -> void {
    if (k == nonid.size()) {
      if (validate_functor(F).ok()) out.push_back(F);
      return;
    }
    const auto& m = C.mor(nonid[k]);
    for (const auto& cand : D.hom(F.on_object(m.src), F.on_object(m.tgt))) {
      F.morphism_map[m.id] = cand;
      // partial composition check against already-assigned morphisms
      bool ok = true;
      for (std::size_t j = 0; j <= k && ok; ++j)
        for (std::size_t i = 0; i <= k && ok; ++i) {
          const auto& g = C.mor(nonid[j]);
          const auto& f = C.mor(nonid[i]);
          if (f.tgt != g.src) continue;
          const std::string& gf = C.compose(g.id, f.id);
          auto it = F.morphism_map.find(gf);
          if (it == F.morphism_map.end()) continue;
          if (D.compose(F.on_morphism(g.id), F.on_morphism(f.id)) != it->second) ok = false;
        }
      if (ok) self(self, k + 1);
      F.morphism_map.erase(m.id);
    }
  };

  auto assign_objects = [&](auto&& self, std::size_t k) -> void {
    if (k == C.objects.size()) {
      for (const auto& [o, i] : C.identity) F.morphism_map[i] = D.id_of(F.on_object(o));
      assign_morphisms(assign_morphisms, 0);
      for (const auto& [o, i] : C.identity) F.morphism_map.erase(i);
      return;
    }
    for (const auto& d : D.objects) {
      F.object_map[C.objects[k]] = d;
      self(self, k + 1);
      F.object_map.erase(C.objects[k]);
    }
  };
  assign_objects(assign_objects, 0);
  return out;
}

// A cocone under d with a given apex; components indexed by objects of the
// diagram shape.
struct Cocone {
  std::string apex;
  std::map<std::string, std::string> legs;  // shape object -> morphism in X
};

namespace detail {

inline bool is_cocone(const FinCategory& X, const FinFunctor& d,
                      const std::map<std::string, std::string>& legs) {
  for (const auto& m : d.source.morphisms)
    if (X.compose(legs.at(m.tgt), d.on_morphism(m.id)) != legs.at(m.src)) return false;
  return true;
}

// Enumerate cocones under d with the given apex, lexicographic in legs.
inline std::vector<std::map<std::string, std::string>> cocones_to(const FinCategory& X,
                                                                  const FinFunctor& d,
                                                                  const std::string& apex) {
  std::vector<std::map<std::string, std::string>> out;
  const auto& shape = d.source.objects;
  std::map<std::string, std::string> legs;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == shape.size()) {
      if (is_cocone(X, d, legs)) out.push_back(legs);
      return;
    }
    for (const auto& c : X.hom(d.on_object(shape[k]), apex)) {
      legs[shape[k]] = c;
      self(self, k + 1);
      legs.erase(shape[k]);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

// Colimit by exhaustive universal-property scan. Deterministic tie-break:
// first apex in object order, then lexicographically least legs.
inline std::optional<Cocone> colimit_in_cat(const FinCategory& X, const FinFunctor& d) {
  if (!(d.target == X)) throw boundary_error("colimit_in_cat: diagram target mismatch");
  for (const auto& apex : X.objects) {
    for (const auto& legs : detail::cocones_to(X, d, apex)) {
      bool universal = true;
      for (const auto& y : X.objects) {
        if (!universal) break;
        for (const auto& other : detail::cocones_to(X, d, y)) {
          int factorizations = 0;
          for (const auto& h : X.hom(apex, y)) {
            bool commutes = true;
            for (const auto& o : d.source.objects)
              if (X.compose(h, legs.at(o)) != other.at(o)) {
                commutes = false;
                break;
              }
            if (commutes) ++factorizations;
          }
          if (factorizations != 1) {
            universal = false;
            break;
          }
        }
      }
      if (universal) return Cocone{apex, legs};
    }
  }
  return std::nullopt;
}

// Dual of colimit_in_cat, computed through opposites — one search kernel.
inline std::optional<Cocone> limit_in_cat(const FinCategory& X, const FinFunctor& d) {
  return colimit_in_cat(opposite(X), opposite_functor(d));
}

// ---------------------------------------------------------------------------
// Set-valued diagrams: functors from a finite category to finite sets.

struct SetDiagram {
  FinCategory shape;
  std::map<std::string, std::vector<std::string>> elements;  // object -> element ids
  // (morphism id, element) -> element of the target object's set
  std::map<std::pair<std::string, std::string>, std::string> action;

  const std::string& apply(const std::string& m, const std::string& x) const {
    auto it = action.find({m, x});
    if (it == action.end())
      throw structural_error("set diagram action not total at (" + m + "," + x + ")");
    return it->second;
  }
};

inline ValidationReport validate_set_diagram(const SetDiagram& d) {
  ValidationReport r;
  for (const auto& o : d.shape.objects)
    if (!d.elements.count(o)) r.structural.push_back("no element set for " + o);
  if (!r.structural.empty()) return r;
  for (const auto& m : d.shape.morphisms)
    for (const auto& x : d.elements.at(m.src)) {
      auto it = d.action.find({m.id, x});
      if (it == d.action.end()) {
        r.structural.push_back("action not total at (" + m.id + "," + x + ")");
        continue;
      }
      const auto& tgt_set = d.elements.at(m.tgt);
      if (std::find(tgt_set.begin(), tgt_set.end(), it->second) == tgt_set.end())
        r.structural.push_back("action image out of range at (" + m.id + "," + x + ")");
    }
  if (!r.structural.empty()) return r;
  for (const auto& [o, i] : d.shape.identity)
    for (const auto& x : d.elements.at(o))
      if (d.apply(i, x) != x) r.violations.push_back({"identity-action", "(" + o + "," + x + ")"});
  for (const auto& g : d.shape.morphisms)
    for (const auto& f : d.shape.morphisms) {
      if (f.tgt != g.src) continue;
      for (const auto& x : d.elements.at(f.src))
        if (d.apply(d.shape.compose(g.id, f.id), x) != d.apply(g.id, d.apply(f.id, x)))
          r.violations.push_back({"composition-action", "(" + g.id + "," + f.id + "," + x + ")"});
    }
  return r;
}

struct SetColimit {
  std::vector<std::string> classes;  // representative ids "(obj,elem)", sorted
  std::map<std::pair<std::string, std::string>, std::string> class_of;  // (obj, elem) -> representative
};

// Quotient of the disjoint union by zig-zag closure; the representative of a
// class is its lexicographically least "(obj,elem)" id.
inline SetColimit set_colimit(const SetDiagram& d) {
  {
    ValidationReport r = validate_set_diagram(d);
    if (!r.structural.empty()) throw structural_error("set_colimit: " + r.structural.front());
  }
  std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> parent;
  for (const auto& o : d.shape.objects)
    for (const auto& x : d.elements.at(o)) parent[{o, x}] = {o, x};
  auto find = [&](std::pair<std::string, std::string> v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  auto unite = [&](const std::pair<std::string, std::string>& a,
                   const std::pair<std::string, std::string>& b) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  };
  for (const auto& m : d.shape.morphisms)
    for (const auto& x : d.elements.at(m.src)) unite({m.src, x}, {m.tgt, d.apply(m.id, x)});

  SetColimit out;
  std::map<std::pair<std::string, std::string>, std::string> rep_id;
  for (const auto& o : d.shape.objects)
    for (const auto& x : d.elements.at(o)) {
      auto root = find({o, x});
      auto it = rep_id.find(root);
      if (it == rep_id.end()) {
        // least (obj,elem) in the class: scan all members
        std::pair<std::string, std::string> least = root;
        for (const auto& [v, p] : parent)
          if (find(v) == root && v < least) least = v;
        it = rep_id.emplace(root, tuple_id({least.first, least.second})).first;
      }
      out.class_of[{o, x}] = it->second;
    }
  std::set<std::string> uniq;
  for (const auto& [k, v] : out.class_of) uniq.insert(v);
  out.classes.assign(uniq.begin(), uniq.end());
  return out;
}

// All object-indexed families commuting with every action; elements named as
// tuples of member elements in object order.
inline std::vector<std::string> set_limit(const SetDiagram& d) {
  {
    ValidationReport r = validate_set_diagram(d);
    if (!r.structural.empty()) throw structural_error("set_limit: " + r.structural.front());
  }
  std::vector<std::string> out;
  std::map<std::string, std::string> family;
  const auto& objs = d.shape.objects;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == objs.size()) {
      for (const auto& m : d.shape.morphisms)
        if (d.apply(m.id, family.at(m.src)) != family.at(m.tgt)) return;
      std::vector<std::string> parts;
      for (const auto& o : objs) parts.push_back(family.at(o));
      out.push_back(tuple_id(parts));
      return;
    }
    for (const auto& x : d.elements.at(objs[k])) {
      family[objs[k]] = x;
      self(self, k + 1);
      family.erase(objs[k]);
    }
  };
  rec(rec, 0);
  return out;
}

// True iff every invertible morphism is an identity; invertibility decided by
// exhaustive inverse search.
inline bool gaunt_check(const FinCategory& C) {
  for (const auto& m : C.morphisms) {
    if (C.is_identity(m.id)) continue;
    for (const auto& w : C.hom(m.tgt, m.src))
      if (C.compose(w, m.id) == C.id_of(m.src) && C.compose(m.id, w) == C.id_of(m.tgt))
        return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Stock categories.

inline FinCategory terminal_category() {
  FinCategory C;
  C.objects = {"*"};
  C.morphisms = {{"id*", "*", "*"}};
  C.identity["*"] = "id*";
  C.comp[{"id*", "id*"}] = "id*";
  return C;
}

inline FinCategory walking_arrow() {
  FinCategory C;
  C.objects = {"0", "1"};
  C.morphisms = {{"id0", "0", "0"}, {"u", "0", "1"}, {"id1", "1", "1"}};
  C.identity["0"] = "id0";
  C.identity["1"] = "id1";
  C.comp[{"id0", "id0"}] = "id0";
  C.comp[{"u", "id0"}] = "u";
  C.comp[{"id1", "u"}] = "u";
  C.comp[{"id1", "id1"}] = "id1";
  return C;
}

// Functor from the terminal category picking an object.
inline FinFunctor point_functor(const FinCategory& X, const std::string& obj) {
  if (!X.has_object(obj)) throw structural_error("point_functor: unknown object " + obj);
  FinFunctor F{terminal_category(), X, {}, {}};
  F.object_map["*"] = obj;
  F.morphism_map["id*"] = X.id_of(obj);
  return F;
}

// The unique functor to the terminal category.
inline FinFunctor collapse_functor(const FinCategory& X) {
  FinFunctor F{X, terminal_category(), {}, {}};
  for (const auto& o : X.objects) F.object_map[o] = "*";
  for (const auto& m : X.morphisms) F.morphism_map[m.id] = "id*";
  return F;
}

}  // namespace equipage

#endif
