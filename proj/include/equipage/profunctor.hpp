#ifndef EQUIPAGE_PROFUNCTOR_HPP
#define EQUIPAGE_PROFUNCTOR_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "equipage/errors.hpp"
#include "equipage/fincat.hpp"
#include "equipage/guard.hpp"
#include "equipage/ids.hpp"

namespace equipage {

// A proarrow C -> D is a functor D^op x C -> Set. Elements are indexed
// (d, c) with d from the target and c from the source; lact acts covariantly
// along morphisms of C, ract contravariantly along morphisms of D.
struct Profunctor {
  FinCategory source;  // C
  FinCategory target;  // D
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> elements;  // (d,c) -> ids
  // (alpha: c->c' in C, d, x in P(d,c)) -> element of P(d,c')
  std::map<std::tuple<std::string, std::string, std::string>, std::string> lact;
  // (delta: d'->d in D, c, x in P(d,c)) -> element of P(d',c)
  std::map<std::tuple<std::string, std::string, std::string>, std::string> ract;

  bool operator==(const Profunctor&) const = default;

  const std::vector<std::string>& at(const std::string& d, const std::string& c) const {
    static const std::vector<std::string> empty;
    auto it = elements.find({d, c});
    return it == elements.end() ? empty : it->second;
  }

  const std::string& apply_lact(const std::string& alpha, const std::string& d,
                                const std::string& x) const {
    auto it = lact.find({alpha, d, x});
    if (it == lact.end())
      throw structural_error("lact not total at (" + alpha + "," + d + "," + x + ")");
    return it->second;
  }

  const std::string& apply_ract(const std::string& delta, const std::string& c,
                                const std::string& x) const {
    auto it = ract.find({delta, c, x});
    if (it == ract.end())
      throw structural_error("ract not total at (" + delta + "," + c + "," + x + ")");
    return it->second;
  }
};

// Build a profunctor from callables; materializes total action tables.
inline Profunctor make_profunctor(
    const FinCategory& C, const FinCategory& D,
    const std::function<std::vector<std::string>(const std::string&, const std::string&)>& elems,
    const std::function<std::string(const FinCategory::Mor&, const std::string&, const std::string&)>&
        lact_fn,
    const std::function<std::string(const FinCategory::Mor&, const std::string&, const std::string&)>&
        ract_fn) {
  Profunctor P{C, D, {}, {}, {}};
  for (const auto& d : D.objects)
    for (const auto& c : C.objects) P.elements[{d, c}] = elems(d, c);
  for (const auto& alpha : C.morphisms)
    for (const auto& d : D.objects)
      for (const auto& x : P.at(d, alpha.src)) P.lact[{alpha.id, d, x}] = lact_fn(alpha, d, x);
  for (const auto& delta : D.morphisms)
    for (const auto& c : C.objects)
      for (const auto& x : P.at(delta.tgt, c)) P.ract[{delta.id, c, x}] = ract_fn(delta, c, x);
  return P;
}

inline ValidationReport validate_profunctor(const Profunctor& P) {
  ValidationReport r;
  auto has_elem = [&](const std::string& d, const std::string& c, const std::string& x) {
    const auto& v = P.at(d, c);
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  for (const auto& alpha : P.source.morphisms)
    for (const auto& d : P.target.objects)
      for (const auto& x : P.at(d, alpha.src)) {
        auto it = P.lact.find({alpha.id, d, x});
        if (it == P.lact.end())
          r.structural.push_back("lact not total at (" + alpha.id + "," + d + "," + x + ")");
        else if (!has_elem(d, alpha.tgt, it->second))
          r.structural.push_back("lact out of range at (" + alpha.id + "," + d + "," + x + ")");
      }
  for (const auto& delta : P.target.morphisms)
    for (const auto& c : P.source.objects)
      for (const auto& x : P.at(delta.tgt, c)) {
        auto it = P.ract.find({delta.id, c, x});
        if (it == P.ract.end())
          r.structural.push_back("ract not total at (" + delta.id + "," + c + "," + x + ")");
        else if (!has_elem(delta.src, c, it->second))
          r.structural.push_back("ract out of range at (" + delta.id + "," + c + "," + x + ")");
      }
  if (!r.structural.empty()) return r;

  for (const auto& [o, i] : P.source.identity)
    for (const auto& d : P.target.objects)
      for (const auto& x : P.at(d, o))
        if (P.apply_lact(i, d, x) != x) r.violations.push_back({"lact-identity", tuple_id({d, o, x})});
  for (const auto& [o, i] : P.target.identity)
    for (const auto& c : P.source.objects)
      for (const auto& x : P.at(o, c))
        if (P.apply_ract(i, c, x) != x) r.violations.push_back({"ract-identity", tuple_id({o, c, x})});
  for (const auto& b : P.source.morphisms)
    for (const auto& a : P.source.morphisms) {
      if (a.tgt != b.src) continue;
      for (const auto& d : P.target.objects)
        for (const auto& x : P.at(d, a.src))
          if (P.apply_lact(P.source.compose(b.id, a.id), d, x) !=
              P.apply_lact(b.id, d, P.apply_lact(a.id, d, x)))
            r.violations.push_back({"lact-composition", tuple_id({b.id, a.id, d, x})});
    }
  for (const auto& b : P.target.morphisms)
    for (const auto& a : P.target.morphisms) {
      if (a.tgt != b.src) continue;
      // (b;a): a'' -> a' -> a, ract(b.a) = ract(b) after? ract is contravariant:
      // ract(a . b)? compose(b,a): src a -> tgt b; ract of the composite equals
      // ract(a) then ract(b) read at matching ends: ract(c2.c1) = ract(c1) o ract(c2).
      for (const auto& c : P.source.objects)
        for (const auto& x : P.at(b.tgt, c))
          if (P.apply_ract(P.target.compose(b.id, a.id), c, x) !=
              P.apply_ract(a.id, c, P.apply_ract(b.id, c, x)))
            r.violations.push_back({"ract-composition", tuple_id({b.id, a.id, c, x})});
    }
  if (!r.violations.empty()) return r;
  for (const auto& alpha : P.source.morphisms)
    for (const auto& delta : P.target.morphisms)
      for (const auto& x : P.at(delta.tgt, alpha.src))
        if (P.apply_lact(alpha.id, delta.src, P.apply_ract(delta.id, alpha.src, x)) !=
            P.apply_ract(delta.id, alpha.tgt, P.apply_lact(alpha.id, delta.tgt, x)))
          r.violations.push_back({"actions-commute", tuple_id({alpha.id, delta.id, x})});
  return r;
}

inline void require_valid(const Profunctor& P, const std::string& who) {
  ValidationReport r = validate_profunctor(P);
  if (!r.structural.empty()) throw structural_error(who + ": " + r.structural.front());
  if (!r.violations.empty())
    throw structural_error(who + ": law " + r.violations.front().law + " at " +
                           r.violations.front().witness);
}

// Horizontal unit: elements (c',c) = hom_C(c',c), actions by composition.
inline Profunctor hom_profunctor(const FinCategory& C) {
  return make_profunctor(
      C, C, [&](const std::string& d, const std::string& c) { return C.hom(d, c); },
      [&](const FinCategory::Mor& a, const std::string&, const std::string& x) {
        return C.compose(a.id, x);
      },
      [&](const FinCategory::Mor& dl, const std::string&, const std::string& x) {
        return C.compose(x, dl.id);
      });
}

// (d,c) -> Map_D(d, fc)
inline Profunctor companion_of(const FinFunctor& f) {
  const FinCategory& C = f.source;
  const FinCategory& D = f.target;
  return make_profunctor(
      C, D,
      [&](const std::string& d, const std::string& c) { return D.hom(d, f.on_object(c)); },
      [&](const FinCategory::Mor& a, const std::string&, const std::string& x) {
        return D.compose(f.on_morphism(a.id), x);
      },
      [&](const FinCategory::Mor& dl, const std::string&, const std::string& x) {
        return D.compose(x, dl.id);
      });
}

// (c,d) -> Map_D(fc, d)
inline Profunctor conjoint_of(const FinFunctor& f) {
  const FinCategory& C = f.source;
  const FinCategory& D = f.target;
  return make_profunctor(
      D, C,
      [&](const std::string& c, const std::string& d) { return D.hom(f.on_object(c), d); },
      [&](const FinCategory::Mor& dl, const std::string&, const std::string& x) {
        return D.compose(dl.id, x);
      },
      [&](const FinCategory::Mor& a, const std::string&, const std::string& x) {
        return D.compose(x, f.on_morphism(a.id));
      });
}

// ---------------------------------------------------------------------------
// Coend composition.

namespace detail {

// Tagged element of the disjoint sum over middle objects.
struct CoendAtom {
  std::string d;  // middle object
  std::string y;  // element of G(e, d)
  std::string x;  // element of F(d, c)
  auto operator<=>(const CoendAtom&) const = default;
};

inline std::string atom_id(const CoendAtom& a) { return tuple_id({a.d, a.y, a.x}); }

// Union-find closure of the zig-zag relation at one slot (e, c); maps every
// atom to the lexicographically least atom of its class.
inline std::map<CoendAtom, CoendAtom> coend_classes_at(const Profunctor& G, const Profunctor& F,
                                                       const std::string& e, const std::string& c) {
  const FinCategory& D = F.target;
  std::map<CoendAtom, CoendAtom> parent;
  for (const auto& d : D.objects)
    for (const auto& y : G.at(e, d))
      for (const auto& x : F.at(d, c)) {
        CoendAtom a{d, y, x};
        parent.emplace(a, a);
      }
  auto find = [&](CoendAtom a) {
    while (!(parent.at(a) == a)) a = parent.at(a);
    return a;
  };
  // relation (y.delta, x) ~ (y, delta.x) for delta: d' -> d, y in G(e,d'),
  // x in F(d,c): here "y.delta" is G's lact and "delta.x" is F's ract.
  for (const auto& delta : D.morphisms)
    for (const auto& y : G.at(e, delta.src))
      for (const auto& x : F.at(delta.tgt, c)) {
        CoendAtom a{delta.tgt, G.apply_lact(delta.id, e, y), x};
        CoendAtom b{delta.src, y, F.apply_ract(delta.id, c, x)};
        CoendAtom ra = find(a), rb = find(b);
        if (!(ra == rb)) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
  std::map<CoendAtom, CoendAtom> least;
  for (const auto& [a, p] : parent) {
    CoendAtom root = find(a);
    auto it = least.find(root);
    if (it == least.end() || a < it->second) least[root] = a;
  }
  std::map<CoendAtom, CoendAtom> out;
  for (const auto& [a, p] : parent) out[a] = least.at(find(a));
  return out;
}

}  // namespace detail

// Composite proarrow G . F for F: C -> D, G: D -> E, by the coend formula:
// (e,c) -> disjoint sum over d of G(e,d) x F(d,c), quotiented by the zig-zag
// relation (y.delta, x) ~ (y, delta.x), computed by union-find. The class
// representative is the lexicographically least (d,y,x) triple, and the class
// id is its tuple.
inline Profunctor compose_prof(const Profunctor& G, const Profunctor& F) {
  if (!(F.target == G.source)) throw boundary_error("compose_prof: middle categories differ");
  const FinCategory& C = F.source;
  const FinCategory& E = G.target;
  using detail::CoendAtom;

  std::map<std::pair<std::string, std::string>, std::map<CoendAtom, CoendAtom>> rep;
  for (const auto& e : E.objects)
    for (const auto& c : C.objects) rep[{e, c}] = detail::coend_classes_at(G, F, e, c);

  Profunctor composite;
  composite.source = C;
  composite.target = E;
  for (const auto& e : E.objects)
    for (const auto& c : C.objects) {
      std::set<std::string> classes;
      for (const auto& [a, r] : rep.at({e, c})) classes.insert(detail::atom_id(r));
      composite.elements[{e, c}].assign(classes.begin(), classes.end());
    }
  // actions computed on representatives, then re-canonicalized
  for (const auto& alpha : C.morphisms)
    for (const auto& e : E.objects)
      for (const auto& [a, r] : rep.at({e, alpha.src})) {
        if (!(a == r)) continue;
        CoendAtom moved{a.d, a.y, F.apply_lact(alpha.id, a.d, a.x)};
        composite.lact[{alpha.id, e, detail::atom_id(a)}] =
            detail::atom_id(rep.at({e, alpha.tgt}).at(moved));
      }
  for (const auto& eps : E.morphisms)
    for (const auto& c : C.objects)
      for (const auto& [a, r] : rep.at({eps.tgt, c})) {
        if (!(a == r)) continue;
        CoendAtom moved{a.d, G.apply_ract(eps.id, a.d, a.y), a.x};
        composite.ract[{eps.id, c, detail::atom_id(a)}] =
            detail::atom_id(rep.at({eps.src, c}).at(moved));
      }
  return composite;
}

// Class id of the pair (y, x) over middle object d in the composite G . F.
inline std::string coend_class(const Profunctor& composite, const Profunctor& G, const Profunctor& F,
                               const std::string& e, const std::string& c, const std::string& d,
                               const std::string& y, const std::string& x) {
  (void)composite;
  auto classes = detail::coend_classes_at(G, F, e, c);
  auto it = classes.find({d, y, x});
  if (it == classes.end())
    throw structural_error("coend_class: no atom " + tuple_id({d, y, x}) + " at " + tuple_id({e, c}));
  return detail::atom_id(it->second);
}

// ---------------------------------------------------------------------------
// Cells.

// A 2-cell with four-sided boundary: verticals f: A -> C (source side) and
// g: B -> D (target side), top F: A -> B, bottom G: C -> D; components
// phi_{b,a} : F(b,a) -> G(g b, f a).
struct ProfCell {
  FinFunctor left;   // f: A -> C
  FinFunctor right;  // g: B -> D
  Profunctor top;    // F: A -> B
  Profunctor bottom; // G: C -> D
  std::map<std::tuple<std::string, std::string, std::string>, std::string> components;

  bool operator==(const ProfCell&) const = default;

  const std::string& at(const std::string& b, const std::string& a, const std::string& x) const {
    auto it = components.find({b, a, x});
    if (it == components.end())
      throw structural_error("cell component missing at " + tuple_id({b, a, x}));
    return it->second;
  }
};

inline ValidationReport validate_cell(const ProfCell& cell) {
  ValidationReport r;
  if (!(cell.top.source == cell.left.source) || !(cell.top.target == cell.right.source) ||
      !(cell.bottom.source == cell.left.target) || !(cell.bottom.target == cell.right.target)) {
    r.structural.push_back("cell boundary mismatch");
    return r;
  }
  const Profunctor& F = cell.top;
  const Profunctor& G = cell.bottom;
  for (const auto& b : F.target.objects)
    for (const auto& a : F.source.objects)
      for (const auto& x : F.at(b, a)) {
        auto it = cell.components.find({b, a, x});
        if (it == cell.components.end()) {
          r.structural.push_back("component missing at " + tuple_id({b, a, x}));
          continue;
        }
        const auto& gb = cell.right.on_object(b);
        const auto& fa = cell.left.on_object(a);
        const auto& img = G.at(gb, fa);
        if (std::find(img.begin(), img.end(), it->second) == img.end())
          r.structural.push_back("component out of range at " + tuple_id({b, a, x}));
      }
  if (!r.structural.empty()) return r;
  for (const auto& alpha : F.source.morphisms)
    for (const auto& b : F.target.objects)
      for (const auto& x : F.at(b, alpha.src))
        if (cell.at(b, alpha.tgt, F.apply_lact(alpha.id, b, x)) !=
            G.apply_lact(cell.left.on_morphism(alpha.id), cell.right.on_object(b),
                         cell.at(b, alpha.src, x)))
          r.violations.push_back({"cell-lact-naturality", tuple_id({alpha.id, b, x})});
  for (const auto& beta : F.target.morphisms)
    for (const auto& a : F.source.objects)
      for (const auto& x : F.at(beta.tgt, a))
        if (cell.at(beta.src, a, F.apply_ract(beta.id, a, x)) !=
            G.apply_ract(cell.right.on_morphism(beta.id), cell.left.on_object(a),
                         cell.at(beta.tgt, a, x)))
          r.violations.push_back({"cell-ract-naturality", tuple_id({beta.id, a, x})});
  return r;
}

inline void require_valid(const ProfCell& cell, const std::string& who) {
  ValidationReport r = validate_cell(cell);
  if (!r.structural.empty()) throw structural_error(who + ": " + r.structural.front());
  if (!r.violations.empty())
    throw structural_error(who + ": " + r.violations.front().law + " at " +
                           r.violations.front().witness);
}

// Identity cell on a proarrow (identity verticals, identity components).
inline ProfCell id_cell(const Profunctor& P) {
  ProfCell c{identity_functor(P.source), identity_functor(P.target), P, P, {}};
  for (const auto& [slot, xs] : P.elements)
    for (const auto& x : xs) c.components[{slot.first, slot.second, x}] = x;
  return c;
}

// Horizontal identity cell on a functor f: hom_A => hom_B over (f, f).
inline ProfCell id_cell_on_functor(const FinFunctor& f) {
  ProfCell c{f, f, hom_profunctor(f.source), hom_profunctor(f.target), {}};
  for (const auto& [slot, xs] : c.top.elements)
    for (const auto& x : xs) c.components[{slot.first, slot.second, x}] = f.on_morphism(x);
  return c;
}

inline ProfCell vcomp_cells(const ProfCell& lower, const ProfCell& upper) {
  if (!(upper.bottom == lower.top) || !(upper.left.target == lower.left.source) ||
      !(upper.right.target == lower.right.source))
    throw boundary_error("vcomp_cells: boundaries differ");
  ProfCell out{compose_functors(lower.left, upper.left), compose_functors(lower.right, upper.right),
               upper.top, lower.bottom, {}};
  for (const auto& [key, mid] : upper.components) {
    const auto& [b, a, x] = key;
    out.components[key] =
        lower.at(upper.right.on_object(b), upper.left.on_object(a), mid);
  }
  return out;
}

// Horizontal composite: for cells phi: F1 => G1 (left) and psi: F2 => G2
// (right) with F1: A -> B, F2: B -> C, gives F2.F1 => G2.G1 on coend classes.
inline ProfCell hcomp_cells(const ProfCell& right_cell, const ProfCell& left_cell) {
  if (!(left_cell.right == right_cell.left))
    throw boundary_error("hcomp_cells: shared vertical differs");
  Profunctor top = compose_prof(right_cell.top, left_cell.top);
  Profunctor bottom = compose_prof(right_cell.bottom, left_cell.bottom);
  ProfCell out{left_cell.left, right_cell.right, top, bottom, {}};
  const FinCategory& B = left_cell.top.target;  // middle category (top)
  (void)B;
  for (const auto& [slot, classes] : top.elements) {
    const auto& [e, c] = slot;
    for (const auto& cls : classes) {
      // cls is an atom id "(d,y,x)"; recover the parts by scanning.
      // Atoms are exactly the representatives chosen by compose_prof.
      bool found = false;
      for (const auto& d : left_cell.top.target.objects) {
        for (const auto& y : right_cell.top.at(e, d)) {
          for (const auto& x : left_cell.top.at(d, c)) {
            if (tuple_id({d, y, x}) != cls) continue;
            std::string dy = right_cell.at(e, d, y);
            std::string dx = left_cell.at(d, c, x);
            out.components[{e, c, cls}] =
                coend_class(bottom, right_cell.bottom, left_cell.bottom,
                            right_cell.right.on_object(e), left_cell.left.on_object(c),
                            left_cell.right.on_object(d), dy, dx);
            found = true;
            break;
          }
          if (found) break;
        }
        if (found) break;
      }
      if (!found) throw structural_error("hcomp_cells: representative not an atom: " + cls);
    }
  }
  return out;
}

inline bool is_iso_cell(const ProfCell& cell) {
  if (!validate_cell(cell).ok()) return false;
  if (!(cell.left == identity_functor(cell.left.source)) ||
      !(cell.right == identity_functor(cell.right.source)))
    return false;
  for (const auto& [slot, xs] : cell.top.elements) {
    const auto& image = cell.bottom.at(slot.first, slot.second);
    if (xs.size() != image.size()) return false;
    std::set<std::string> hit;
    for (const auto& x : xs) hit.insert(cell.at(slot.first, slot.second, x));
    if (hit.size() != xs.size()) return false;
  }
  return true;
}

inline ProfCell invert_iso_cell(const ProfCell& cell) {
  if (!is_iso_cell(cell)) throw structural_error("invert_iso_cell: not an isomorphism");
  ProfCell out{cell.left, cell.right, cell.bottom, cell.top, {}};
  for (const auto& [key, y] : cell.components) {
    const auto& [b, a, x] = key;
    out.components[{b, a, y}] = x;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coherence cells for the coend composition (constructed, never searched).

// lunit: hom_D . F => F
inline ProfCell compose_left_unitor(const Profunctor& F) {
  Profunctor src = compose_prof(hom_profunctor(F.target), F);
  ProfCell out{identity_functor(F.source), identity_functor(F.target), src, F, {}};
  for (const auto& [slot, classes] : src.elements) {
    const auto& [d, c] = slot;
    for (const auto& cls : classes)
      for (const auto& mid : F.target.objects)
        for (const auto& h : F.target.hom(d, mid))
          for (const auto& x : F.at(mid, c))
            if (tuple_id({mid, h, x}) == cls) out.components[{d, c, cls}] = F.apply_ract(h, c, x);
  }
  return out;
}

// runit: F . hom_C => F
inline ProfCell compose_right_unitor(const Profunctor& F) {
  Profunctor src = compose_prof(F, hom_profunctor(F.source));
  ProfCell out{identity_functor(F.source), identity_functor(F.target), src, F, {}};
  for (const auto& [slot, classes] : src.elements) {
    const auto& [d, c] = slot;
    for (const auto& cls : classes)
      for (const auto& mid : F.source.objects)
        for (const auto& x : F.at(d, mid))
          for (const auto& h : F.source.hom(mid, c))
            if (tuple_id({mid, x, h}) == cls) out.components[{d, c, cls}] = F.apply_lact(h, d, x);
  }
  return out;
}

// assoc: (H . G) . F => H . (G . F)
inline ProfCell compose_associator(const Profunctor& H, const Profunctor& G, const Profunctor& F) {
  Profunctor HG = compose_prof(H, G);
  Profunctor GF = compose_prof(G, F);
  Profunctor lhs = compose_prof(HG, F);
  Profunctor rhs = compose_prof(H, GF);
  ProfCell out{identity_functor(F.source), identity_functor(H.target), lhs, rhs, {}};
  for (const auto& [slot, classes] : lhs.elements) {
    const auto& [e, c] = slot;
    for (const auto& cls : classes) {
      // cls = (d, <class in HG(e,d)>, x) with the middle class = (m, z, y)
      bool found = false;
      for (const auto& d : F.target.objects) {
        for (const auto& yz : HG.at(e, d)) {
          for (const auto& x : F.at(d, c)) {
            if (tuple_id({d, yz, x}) != cls) continue;
            for (const auto& m : G.target.objects) {
              for (const auto& z : H.at(e, m)) {
                for (const auto& y : G.at(m, d)) {
                  if (tuple_id({m, z, y}) != yz) continue;
                  std::string inner = coend_class(GF, G, F, m, c, d, y, x);
                  out.components[{e, c, cls}] = coend_class(rhs, H, GF, e, c, m, z, inner);
                  found = true;
                }
                if (found) break;
              }
              if (found) break;
            }
            if (found) break;
          }
          if (found) break;
        }
        if (found) break;
      }
      if (!found) throw structural_error("associator: representative not resolvable: " + cls);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Horizontal closure: ends of natural families.

namespace detail {

// Deterministic id for a family of functions indexed by (object, element).
inline std::string family_id(const std::map<std::pair<std::string, std::string>, std::string>& fam) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : fam) {
    if (!first) out += ";";
    out += k.first + ":" + k.second + ">" + v;
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace detail

// left_extension(W, F) for W: C -> D and F: E -> D is the proarrow E -> C
// with elements at (c,e) the families phi_d : W(d,c) -> F(d,e) natural in d.
// It is right adjoint to postcomposition: Map(W . V, F) = Map(V, <W|F).
inline Profunctor left_extension(const Profunctor& W, const Profunctor& F,
                                 const SizeGuard& guard = default_guard()) {
  if (!(W.target == F.target)) throw boundary_error("left_extension: target categories differ");
  const FinCategory& C = W.source;
  const FinCategory& D = W.target;
  const FinCategory& E = F.source;

  auto families = [&](const std::string& c, const std::string& e) {
    // enumerate all (obj,elem) -> image assignments, filter naturality in d
    std::vector<std::pair<std::string, std::string>> domain;
    std::uint64_t space = 1;
    for (const auto& d : D.objects)
      for (const auto& x : W.at(d, c)) {
        domain.push_back({d, x});
        space = SizeGuard::times(space, std::max<std::size_t>(F.at(d, e).size(), 0));
      }
    guard.check(space, "left_extension");
    std::vector<std::map<std::pair<std::string, std::string>, std::string>> out;
    std::map<std::pair<std::string, std::string>, std::string> fam;
    auto natural = [&]() {
      for (const auto& delta : D.morphisms)
        for (const auto& x : W.at(delta.tgt, c)) {
          // phi_{d'}(x . delta) = phi_d(x) . delta for delta: d' -> d
          auto lhs = fam.find({delta.src, W.apply_ract(delta.id, c, x)});
          auto rhs = fam.find({delta.tgt, x});
          if (lhs == fam.end() || rhs == fam.end()) continue;
          if (lhs->second != F.apply_ract(delta.id, e, rhs->second)) return false;
        }
      return true;
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == domain.size()) {
        if (natural()) out.push_back(fam);
        return;
      }
      for (const auto& img : F.at(domain[k].first, e)) {
        fam[domain[k]] = img;
        self(self, k + 1);
        fam.erase(domain[k]);
      }
    };
    rec(rec, 0);
    return out;
  };

  Profunctor P;
  P.source = E;
  P.target = C;
  std::map<std::pair<std::string, std::string>,
           std::map<std::string, std::map<std::pair<std::string, std::string>, std::string>>>
      table;
  for (const auto& c : C.objects)
    for (const auto& e : E.objects) {
      std::vector<std::string> ids;
      for (const auto& fam : families(c, e)) {
        std::string id = detail::family_id(fam);
        ids.push_back(id);
        table[{c, e}][id] = fam;
      }
      std::sort(ids.begin(), ids.end());
      P.elements[{c, e}] = ids;
    }
  // lact along eps: e -> e' postcomposes with F's lact; ract along gamma:
  // c' -> c precomposes with W's lact.
  for (const auto& eps : E.morphisms)
    for (const auto& c : C.objects)
      for (const auto& id : P.at(c, eps.src)) {
        const auto& fam = table.at({c, eps.src}).at(id);
        std::map<std::pair<std::string, std::string>, std::string> moved;
        for (const auto& [k, v] : fam) moved[k] = F.apply_lact(eps.id, k.first, v);
        P.lact[{eps.id, c, id}] = detail::family_id(moved);
      }
  for (const auto& gamma : C.morphisms)
    for (const auto& e : E.objects)
      for (const auto& id : P.at(gamma.tgt, e)) {
        const auto& fam = table.at({gamma.tgt, e}).at(id);
        std::map<std::pair<std::string, std::string>, std::string> moved;
        for (const auto& d : D.objects)
          for (const auto& x : W.at(d, gamma.src))
            moved[{d, x}] = fam.at({d, W.apply_lact(gamma.id, d, x)});
        P.ract[{gamma.id, e, id}] = detail::family_id(moved);
      }
  return P;
}

// right_extension(W, F) for W: C -> D and F: C -> E is the proarrow D -> E
// with elements at (e,d) the families psi_c : W(d,c) -> F(e,c) natural in c.
// It is right adjoint to precomposition: Map(V . W, F) = Map(V, F^W).
inline Profunctor right_extension(const Profunctor& W, const Profunctor& F,
                                  const SizeGuard& guard = default_guard()) {
  if (!(W.source == F.source)) throw boundary_error("right_extension: source categories differ");
  const FinCategory& C = W.source;
  const FinCategory& D = W.target;
  const FinCategory& E = F.target;

  auto families = [&](const std::string& e, const std::string& d) {
    std::vector<std::pair<std::string, std::string>> domain;
    std::uint64_t space = 1;
    for (const auto& c : C.objects)
      for (const auto& x : W.at(d, c)) {
        domain.push_back({c, x});
        space = SizeGuard::times(space, std::max<std::size_t>(F.at(e, c).size(), 0));
      }
    guard.check(space, "right_extension");
    std::vector<std::map<std::pair<std::string, std::string>, std::string>> out;
    std::map<std::pair<std::string, std::string>, std::string> fam;
    auto natural = [&]() {
      for (const auto& gamma : C.morphisms)
        for (const auto& x : W.at(d, gamma.src)) {
          // psi_{c'}(gamma . x) = gamma . psi_c(x) for gamma: c -> c'
          auto lhs = fam.find({gamma.tgt, W.apply_lact(gamma.id, d, x)});
          auto rhs = fam.find({gamma.src, x});
          if (lhs == fam.end() || rhs == fam.end()) continue;
          if (lhs->second != F.apply_lact(gamma.id, e, rhs->second)) return false;
        }
      return true;
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == domain.size()) {
        if (natural()) out.push_back(fam);
        return;
      }
      for (const auto& img : F.at(e, domain[k].first)) {
        fam[domain[k]] = img;
        self(self, k + 1);
        fam.erase(domain[k]);
      }
    };
    rec(rec, 0);
    return out;
  };

  Profunctor P;
  P.source = D;
  P.target = E;
  std::map<std::pair<std::string, std::string>,
           std::map<std::string, std::map<std::pair<std::string, std::string>, std::string>>>
      table;
  for (const auto& e : E.objects)
    for (const auto& d : D.objects) {
      std::vector<std::string> ids;
      for (const auto& fam : families(e, d)) {
        std::string id = detail::family_id(fam);
        ids.push_back(id);
        table[{e, d}][id] = fam;
      }
      std::sort(ids.begin(), ids.end());
      P.elements[{e, d}] = ids;
    }
  // lact along delta: d -> d' precomposes with W's ract; ract along eps:
  // e' -> e postcomposes with F's ract.
  for (const auto& delta : D.morphisms)
    for (const auto& e : E.objects)
      for (const auto& id : P.at(e, delta.src)) {
        const auto& fam = table.at({e, delta.src}).at(id);
        std::map<std::pair<std::string, std::string>, std::string> moved;
        for (const auto& c : C.objects)
          for (const auto& x : W.at(delta.tgt, c))
            moved[{c, x}] = fam.at({c, W.apply_ract(delta.id, c, x)});
        P.lact[{delta.id, e, id}] = detail::family_id(moved);
      }
  for (const auto& eps : E.morphisms)
    for (const auto& d : D.objects)
      for (const auto& id : P.at(eps.tgt, d)) {
        const auto& fam = table.at({eps.tgt, d}).at(id);
        std::map<std::pair<std::string, std::string>, std::string> moved;
        for (const auto& [k, v] : fam) moved[k] = F.apply_ract(eps.id, k.first, v);
        P.ract[{eps.id, d, id}] = detail::family_id(moved);
      }
  return P;
}

// ---------------------------------------------------------------------------
// Restriction and cocartesian fillers.

struct RestrictionResult {
  Profunctor pro;
  ProfCell cell;  // cartesian filler of the niche (f, G, g)
};

// <g|G|f>(b,a) = G(g b, f a); the returned cell into G is cartesian.
inline RestrictionResult restrict_pro(const Profunctor& G, const FinFunctor& f, const FinFunctor& g) {
  if (!(f.target == G.source) || !(g.target == G.target))
    throw boundary_error("restrict: boundaries incompatible");
  const FinCategory& A = f.source;
  const FinCategory& B = g.source;
  Profunctor P = make_profunctor(
      A, B,
      [&](const std::string& b, const std::string& a) {
        return G.at(g.on_object(b), f.on_object(a));
      },
      [&](const FinCategory::Mor& alpha, const std::string& b, const std::string& x) {
        return G.apply_lact(f.on_morphism(alpha.id), g.on_object(b), x);
      },
      [&](const FinCategory::Mor& beta, const std::string& a, const std::string& x) {
        return G.apply_ract(g.on_morphism(beta.id), f.on_object(a), x);
      });
  ProfCell cell{f, g, P, G, {}};
  for (const auto& [slot, xs] : P.elements)
    for (const auto& x : xs) cell.components[{slot.first, slot.second, x}] = x;
  return {P, cell};
}

struct CocartesianResult {
  Profunctor pro;
  ProfCell cell;  // cocartesian filler of the roof (f, F, g); top F, bottom the filler
};

// Cocartesian filler [g|F|f] = companion(g) . F . conjoint(f), with the
// canonical cell from F given by unit insertions.
inline CocartesianResult cocartesian_filler(const Profunctor& F, const FinFunctor& f,
                                            const FinFunctor& g) {
  if (!(f.source == F.source) || !(g.source == F.target))
    throw boundary_error("cocartesian_filler: boundaries incompatible");
  Profunctor conj = conjoint_of(f);
  Profunctor comp = companion_of(g);
  Profunctor Fconj = compose_prof(F, conj);
  Profunctor filler = compose_prof(comp, Fconj);
  ProfCell cell{f, g, F, filler, {}};
  const FinCategory& C = f.target;
  const FinCategory& D = g.target;
  (void)C;
  for (const auto& [slot, xs] : F.elements) {
    const auto& [b, a] = slot;
    for (const auto& x : xs) {
      std::string inner =
          coend_class(Fconj, F, conj, b, f.on_object(a), a, x, C.id_of(f.on_object(a)));
      cell.components[{b, a, x}] = coend_class(filler, comp, Fconj, g.on_object(b), f.on_object(a),
                                               b, D.id_of(g.on_object(b)), inner);
    }
  }
  return {filler, cell};
}

// Comparison of a cell to the restriction of its bottom along its verticals;
// the cell is cartesian iff this comparison is invertible.
inline ProfCell restriction_factor(const ProfCell& cell) {
  RestrictionResult r = restrict_pro(cell.bottom, cell.left, cell.right);
  ProfCell out{identity_functor(cell.top.source), identity_functor(cell.top.target), cell.top, r.pro,
               cell.components};
  return out;
}

inline bool is_cartesian_cell(const ProfCell& cell) {
  if (!validate_cell(cell).ok()) return false;
  return is_iso_cell(restriction_factor(cell));
}

// The interchange bijection Map([g|F|f], G) = Map(F, <g|G|f>), both ways.
// to_restrict_form maps a globular cell from the filler to one into the
// restriction; from_restrict_form is its inverse.
inline ProfCell to_restrict_form(const ProfCell& phi, const Profunctor& F, const FinFunctor& f,
                                 const FinFunctor& g) {
  const Profunctor& G = phi.bottom;
  RestrictionResult r = restrict_pro(G, f, g);
  ProfCell out{identity_functor(F.source), identity_functor(F.target), F, r.pro, {}};
  CocartesianResult co = cocartesian_filler(F, f, g);
  for (const auto& [slot, xs] : F.elements) {
    const auto& [b, a] = slot;
    for (const auto& x : xs)
      out.components[{b, a, x}] =
          phi.at(g.on_object(b), f.on_object(a), co.cell.at(b, a, x));
  }
  return out;
}

inline ProfCell from_restrict_form(const ProfCell& chi, const FinFunctor& f, const FinFunctor& g,
                                   const Profunctor& G) {
  const Profunctor& F = chi.top;
  CocartesianResult co = cocartesian_filler(F, f, g);
  ProfCell out{identity_functor(co.pro.source), identity_functor(co.pro.target), co.pro, G, {}};
  const FinCategory& C = f.target;
  const FinCategory& D = g.target;
  (void)D;
  Profunctor conj = conjoint_of(f);
  Profunctor comp = companion_of(g);
  Profunctor Fconj = compose_prof(F, conj);
  for (const auto& [slot, classes] : co.pro.elements) {
    const auto& [d, c] = slot;
    for (const auto& cls : classes) {
      bool found = false;
      // cls = (b, beta: d -> g b, inner) with inner = (a, x, alpha: f a -> c)
      for (const auto& b : F.target.objects) {
        for (const auto& beta : comp.at(d, b)) {
          for (const auto& inner : Fconj.at(b, c)) {
            if (tuple_id({b, beta, inner}) != cls) continue;
            for (const auto& a : F.source.objects) {
              for (const auto& x : F.at(b, a)) {
                for (const auto& alpha : conj.at(a, c)) {
                  if (tuple_id({a, x, alpha}) != inner) continue;
                  const std::string& mid = chi.at(b, a, x);  // element of G(g b, f a)
                  out.components[{d, c, cls}] =
                      G.apply_ract(beta, c, G.apply_lact(alpha, g.on_object(b), mid));
                  found = true;
                }
                if (found) break;
              }
              if (found) break;
            }
            if (found) break;
          }
          if (found) break;
        }
        if (found) break;
      }
      if (!found) throw structural_error("from_restrict_form: unresolvable class " + cls);
    }
  }
  (void)C;
  return out;
}

// ---------------------------------------------------------------------------
// Cell enumeration and isomorphism search.

inline std::vector<ProfCell> enumerate_cells(const Profunctor& F, const Profunctor& G,
                                             const FinFunctor& f, const FinFunctor& g,
                                             const SizeGuard& guard = default_guard()) {
  if (!(F.source == f.source) || !(F.target == g.source) || !(G.source == f.target) ||
      !(G.target == g.target))
    throw boundary_error("enumerate_cells: boundaries incompatible");
  std::vector<std::tuple<std::string, std::string, std::string>> domain;
  std::uint64_t space = 1;
  for (const auto& [slot, xs] : F.elements)
    for (const auto& x : xs) {
      domain.push_back({slot.first, slot.second, x});
      space = SizeGuard::times(
          space, std::max<std::size_t>(G.at(g.on_object(slot.first), f.on_object(slot.second)).size(), 0));
    }
  guard.check(space, "enumerate_cells");

  std::vector<ProfCell> out;
  ProfCell cell{f, g, F, G, {}};
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == domain.size()) {
      if (validate_cell(cell).ok()) out.push_back(cell);
      return;
    }
    const auto& [b, a, x] = domain[k];
    for (const auto& img : G.at(g.on_object(b), f.on_object(a))) {
      cell.components[domain[k]] = img;
      self(self, k + 1);
      cell.components.erase(domain[k]);
    }
  };
  rec(rec, 0);
  return out;
}

// Exhaustive search for a natural isomorphism between parallel proarrows.
// Canonical comparisons are preferred by callers; this is the last resort.
inline std::optional<ProfCell> iso_prof(const Profunctor& F, const Profunctor& G,
                                        const SizeGuard& guard = default_guard()) {
  if (!(F.source == G.source) || !(F.target == G.target))
    throw boundary_error("iso_prof: boundaries differ");
  for (const auto& [slot, xs] : F.elements)
    if (xs.size() != G.at(slot.first, slot.second).size()) return std::nullopt;
  for (const auto& c :
       enumerate_cells(F, G, identity_functor(F.source), identity_functor(F.target), guard))
    if (is_iso_cell(c)) return c;
  return std::nullopt;
}

}  // namespace equipage

#endif
