#ifndef EQUIPAGE_DBLCAT_HPP
#define EQUIPAGE_DBLCAT_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "equipage/errors.hpp"
#include "equipage/fincat.hpp"
#include "equipage/guard.hpp"
#include "equipage/ids.hpp"

namespace equipage {

// A finite strict double category. Squares have a four-sided boundary:
//   top:    h-arrow a -> b        left:  v-arrow a -> c
//   bottom: h-arrow c -> d        right: v-arrow b -> d
// hcomp(t, s) is s-then-t (sharing s.right = t.left); vcomp(u, s) is
// s-on-top-of-u (sharing s.bottom = u.top). Arrow compositions follow the
// same convention as FinCategory: comp(g, f) = g after f.
struct DoubleCategory {
  struct Arrow {
    std::string id, src, tgt;
    bool operator==(const Arrow&) const = default;
  };
  struct Square {
    std::string id, top, bottom, left, right;
    bool operator==(const Square&) const = default;
  };

  std::vector<std::string> objects;
  std::vector<Arrow> harrs, varrs;
  std::vector<Square> squares;
  std::map<std::string, std::string> h_id, v_id;  // object -> identity arrow
  std::map<std::pair<std::string, std::string>, std::string> hcomp, vcomp;  // arrows
  std::map<std::string, std::string> sq_id_h;  // v-arrow -> its horizontal identity square
  std::map<std::string, std::string> sq_id_v;  // h-arrow -> its vertical identity square
  std::map<std::pair<std::string, std::string>, std::string> sq_hcomp, sq_vcomp;

  bool operator==(const DoubleCategory&) const = default;

  const Arrow* find_harr(const std::string& id) const {
    for (const auto& a : harrs)
      if (a.id == id) return &a;
    return nullptr;
  }
  const Arrow* find_varr(const std::string& id) const {
    for (const auto& a : varrs)
      if (a.id == id) return &a;
    return nullptr;
  }
  const Square* find_square(const std::string& id) const {
    for (const auto& s : squares)
      if (s.id == id) return &s;
    return nullptr;
  }
  const Arrow& harr(const std::string& id) const {
    const Arrow* a = find_harr(id);
    if (!a) throw structural_error("unknown h-arrow " + id);
    return *a;
  }
  const Arrow& varr(const std::string& id) const {
    const Arrow* a = find_varr(id);
    if (!a) throw structural_error("unknown v-arrow " + id);
    return *a;
  }
  const Square& square(const std::string& id) const {
    const Square* s = find_square(id);
    if (!s) throw structural_error("unknown square " + id);
    return *s;
  }
  const std::string& compose_h(const std::string& g, const std::string& f) const {
    auto it = hcomp.find({g, f});
    if (it == hcomp.end()) throw structural_error("hcomp undefined for (" + g + "," + f + ")");
    return it->second;
  }
  const std::string& compose_v(const std::string& g, const std::string& f) const {
    auto it = vcomp.find({g, f});
    if (it == vcomp.end()) throw structural_error("vcomp undefined for (" + g + "," + f + ")");
    return it->second;
  }
  const std::string& compose_sq_h(const std::string& t, const std::string& s) const {
    auto it = sq_hcomp.find({t, s});
    if (it == sq_hcomp.end()) throw structural_error("square hcomp undefined for (" + t + "," + s + ")");
    return it->second;
  }
  const std::string& compose_sq_v(const std::string& u, const std::string& s) const {
    auto it = sq_vcomp.find({u, s});
    if (it == sq_vcomp.end()) throw structural_error("square vcomp undefined for (" + u + "," + s + ")");
    return it->second;
  }
};

namespace detail {

inline FinCategory arrow_category(const std::vector<std::string>& objects,
                                  const std::vector<DoubleCategory::Arrow>& arrows,
                                  const std::map<std::string, std::string>& ids,
                                  const std::map<std::pair<std::string, std::string>, std::string>& comp) {
  FinCategory C;
  C.objects = objects;
  for (const auto& a : arrows) C.morphisms.push_back({a.id, a.src, a.tgt});
  C.identity = ids;
  C.comp = comp;
  return C;
}

}  // namespace detail

inline ValidationReport validate_double(const DoubleCategory& D) {
  ValidationReport r;
  std::set<std::string> objs(D.objects.begin(), D.objects.end());
  for (const auto& a : D.harrs) {
    if (!objs.count(a.src)) r.structural.push_back("h-arrow " + a.id + " dangling src");
    if (!objs.count(a.tgt)) r.structural.push_back("h-arrow " + a.id + " dangling tgt");
  }
  for (const auto& a : D.varrs) {
    if (!objs.count(a.src)) r.structural.push_back("v-arrow " + a.id + " dangling src");
    if (!objs.count(a.tgt)) r.structural.push_back("v-arrow " + a.id + " dangling tgt");
  }
  for (const auto& s : D.squares) {
    const auto* t = D.find_harr(s.top);
    const auto* b = D.find_harr(s.bottom);
    const auto* l = D.find_varr(s.left);
    const auto* g = D.find_varr(s.right);
    if (!t || !b || !l || !g) {
      r.structural.push_back("square " + s.id + " has dangling boundary");
      continue;
    }
    if (l->src != t->src || g->src != t->tgt || l->tgt != b->src || g->tgt != b->tgt)
      r.structural.push_back("square " + s.id + " has incompatible corners");
  }
  if (!r.structural.empty()) return r;

  // Both arrow directions form categories.
  {
    ValidationReport h = validate_category(detail::arrow_category(D.objects, D.harrs, D.h_id, D.hcomp));
    for (auto& v : h.structural) r.structural.push_back("h-arrows: " + v);
    for (auto& v : h.violations) r.violations.push_back({"h-arrows/" + v.law, v.witness});
    ValidationReport v = validate_category(detail::arrow_category(D.objects, D.varrs, D.v_id, D.vcomp));
    for (auto& w : v.structural) r.structural.push_back("v-arrows: " + w);
    for (auto& w : v.violations) r.violations.push_back({"v-arrows/" + w.law, w.witness});
  }
  if (!r.structural.empty() || !r.violations.empty()) return r;

  // Identity squares exist with the right boundaries.
  for (const auto& v : D.varrs) {
    auto it = D.sq_id_h.find(v.id);
    if (it == D.sq_id_h.end()) {
      r.structural.push_back("no horizontal identity square for v-arrow " + v.id);
      continue;
    }
    const auto& s = D.square(it->second);
    if (s.top != D.h_id.at(v.src) || s.bottom != D.h_id.at(v.tgt) || s.left != v.id ||
        s.right != v.id)
      r.violations.push_back({"sq-id-h-boundary", v.id});
  }
  for (const auto& h : D.harrs) {
    auto it = D.sq_id_v.find(h.id);
    if (it == D.sq_id_v.end()) {
      r.structural.push_back("no vertical identity square for h-arrow " + h.id);
      continue;
    }
    const auto& s = D.square(it->second);
    if (s.top != h.id || s.bottom != h.id || s.left != D.v_id.at(h.src) ||
        s.right != D.v_id.at(h.tgt))
      r.violations.push_back({"sq-id-v-boundary", h.id});
  }
  if (!r.structural.empty() || !r.violations.empty()) return r;

  // Squares form categories in both directions.
  auto check_square_category = [&](bool horizontal) {
    const char* tag = horizontal ? "sq-h" : "sq-v";
    const auto& table = horizontal ? D.sq_hcomp : D.sq_vcomp;
    for (const auto& t : D.squares)
      for (const auto& s : D.squares) {
        bool composable = horizontal ? (s.right == t.left) : (s.bottom == t.top);
        auto it = table.find({t.id, s.id});
        if (composable && it == table.end()) {
          r.violations.push_back({std::string(tag) + "-total", "(" + t.id + "," + s.id + ")"});
          continue;
        }
        if (!composable && it != table.end()) {
          r.violations.push_back({std::string(tag) + "-domain", "(" + t.id + "," + s.id + ")"});
          continue;
        }
        if (!composable) continue;
        const auto* comp = D.find_square(it->second);
        if (!comp) {
          r.structural.push_back(std::string(tag) + " value dangling at (" + t.id + "," + s.id + ")");
          continue;
        }
        if (horizontal) {
          if (comp->top != D.compose_h(t.top, s.top) || comp->bottom != D.compose_h(t.bottom, s.bottom) ||
              comp->left != s.left || comp->right != t.right)
            r.violations.push_back({"sq-h-boundary", "(" + t.id + "," + s.id + ")"});
        } else {
          if (comp->top != s.top || comp->bottom != t.bottom ||
              comp->left != D.compose_v(t.left, s.left) || comp->right != D.compose_v(t.right, s.right))
            r.violations.push_back({"sq-v-boundary", "(" + t.id + "," + s.id + ")"});
        }
      }
    if (!r.violations.empty() || !r.structural.empty()) return;
    // units
    for (const auto& s : D.squares) {
      if (horizontal) {
        if (D.compose_sq_h(s.id, D.sq_id_h.at(s.left)) != s.id ||
            D.compose_sq_h(D.sq_id_h.at(s.right), s.id) != s.id)
          r.violations.push_back({"sq-h-unit", s.id});
      } else {
        if (D.compose_sq_v(s.id, D.sq_id_v.at(s.top)) != s.id ||
            D.compose_sq_v(D.sq_id_v.at(s.bottom), s.id) != s.id)
          r.violations.push_back({"sq-v-unit", s.id});
      }
    }
    // associativity
    for (const auto& u : D.squares)
      for (const auto& t : D.squares)
        for (const auto& s : D.squares) {
          bool c1 = horizontal ? (s.right == t.left) : (s.bottom == t.top);
          bool c2 = horizontal ? (t.right == u.left) : (t.bottom == u.top);
          if (!c1 || !c2) continue;
          const auto& compose = horizontal
                                    ? [](const DoubleCategory& dd, const std::string& a,
                                         const std::string& b) { return dd.compose_sq_h(a, b); }
                                    : [](const DoubleCategory& dd, const std::string& a,
                                         const std::string& b) { return dd.compose_sq_v(a, b); };
          if (compose(D, u.id, compose(D, t.id, s.id)) != compose(D, compose(D, u.id, t.id), s.id))
            r.violations.push_back(
                {std::string(tag) + "-assoc", "(" + u.id + "," + t.id + "," + s.id + ")"});
        }
  };
  check_square_category(true);
  check_square_category(false);
  if (!r.structural.empty() || !r.violations.empty()) return r;

  // Identity squares compose functorially.
  for (const auto& v2 : D.varrs)
    for (const auto& v1 : D.varrs) {
      if (v1.tgt != v2.src) continue;
      if (D.compose_sq_v(D.sq_id_h.at(v2.id), D.sq_id_h.at(v1.id)) !=
          D.sq_id_h.at(D.compose_v(v2.id, v1.id)))
        r.violations.push_back({"sq-id-h-functorial", "(" + v2.id + "," + v1.id + ")"});
    }
  for (const auto& h2 : D.harrs)
    for (const auto& h1 : D.harrs) {
      if (h1.tgt != h2.src) continue;
      if (D.compose_sq_h(D.sq_id_v.at(h2.id), D.sq_id_v.at(h1.id)) !=
          D.sq_id_v.at(D.compose_h(h2.id, h1.id)))
        r.violations.push_back({"sq-id-v-functorial", "(" + h2.id + "," + h1.id + ")"});
    }
  for (const auto& o : D.objects)
    if (D.sq_id_h.at(D.v_id.at(o)) != D.sq_id_v.at(D.h_id.at(o)))
      r.violations.push_back({"sq-id-pin", o});
  if (!r.violations.empty()) return r;

  // Interchange on all composable 2x2 grids.
  for (const auto& s00 : D.squares)
    for (const auto& s01 : D.squares) {
      if (s00.right != s01.left) continue;
      for (const auto& s10 : D.squares) {
        if (s00.bottom != s10.top) continue;
        for (const auto& s11 : D.squares) {
          if (s10.right != s11.left || s01.bottom != s11.top) continue;
          const std::string rows =
              D.compose_sq_v(D.compose_sq_h(s11.id, s10.id), D.compose_sq_h(s01.id, s00.id));
          const std::string cols =
              D.compose_sq_h(D.compose_sq_v(s11.id, s01.id), D.compose_sq_v(s10.id, s00.id));
          if (rows != cols)
            r.violations.push_back(
                {"interchange", "(" + s00.id + "," + s01.id + ";" + s10.id + "," + s11.id + ")"});
        }
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Pasting.

struct PastingGrid {
  std::vector<std::vector<std::string>> rows;  // m x n array of square ids
};

// Paste rows of squares: each row is composed horizontally, then the row
// composites vertically. Row widths may differ as long as the composite
// boundaries agree.
inline std::string paste_rows(const DoubleCategory& D,
                              const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty() || rows.front().empty()) throw boundary_error("paste_rows: empty pasting");
  std::vector<std::string> row_composites;
  for (const auto& row : rows) {
    if (row.empty()) throw boundary_error("paste_rows: empty row");
    std::string acc = row.front();
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (D.square(acc).right != D.square(row[j]).left)
        throw boundary_error("paste_rows: horizontal boundary mismatch at " + row[j]);
      acc = D.compose_sq_h(row[j], acc);
    }
    row_composites.push_back(acc);
  }
  std::string acc = row_composites.front();
  for (std::size_t i = 1; i < row_composites.size(); ++i) {
    if (D.square(acc).bottom != D.square(row_composites[i]).top)
      throw boundary_error("paste_rows: vertical boundary mismatch at row " + std::to_string(i));
    acc = D.compose_sq_v(row_composites[i], acc);
  }
  return acc;
}

// Rectangular pasting; result is asserted independent of evaluation order
// (row-major against column-major).
inline std::string paste_grid(const DoubleCategory& D, const PastingGrid& g) {
  if (g.rows.empty() || g.rows.front().empty()) throw boundary_error("paste_grid: empty grid");
  const std::size_t n = g.rows.front().size();
  for (const auto& row : g.rows)
    if (row.size() != n) throw boundary_error("paste_grid: ragged grid");
  // adjacency
  for (std::size_t i = 0; i < g.rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& s = D.square(g.rows[i][j]);
      if (j + 1 < n && s.right != D.square(g.rows[i][j + 1]).left)
        throw boundary_error("paste_grid: vertical boundary mismatch at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
      if (i + 1 < g.rows.size() && s.bottom != D.square(g.rows[i + 1][j]).top)
        throw boundary_error("paste_grid: horizontal boundary mismatch at (" + std::to_string(i) +
                             "," + std::to_string(j) + ")");
    }
  std::string row_major = paste_rows(D, g.rows);
  // column-major
  std::vector<std::string> col_composites;
  for (std::size_t j = 0; j < n; ++j) {
    std::string acc = g.rows[0][j];
    for (std::size_t i = 1; i < g.rows.size(); ++i) acc = D.compose_sq_v(g.rows[i][j], acc);
    col_composites.push_back(acc);
  }
  std::string col_major = col_composites.front();
  for (std::size_t j = 1; j < n; ++j) col_major = D.compose_sq_h(col_composites[j], col_major);
  if (row_major != col_major)
    throw structural_error("paste_grid: row-major and column-major evaluations differ");
  return row_major;
}

// ---------------------------------------------------------------------------
// Companions and conjoints.

// A companion datum: the h-arrow together with the two squares
//   eps: top = harr, bottom = h-id, left = v, right = v-id
//   eta: top = h-id, bottom = harr, left = v-id, right = v
// whose two pastings are the identity squares.
struct CompanionDatum {
  std::string harr, eps, eta;
  bool operator==(const CompanionDatum&) const = default;
};

inline std::vector<CompanionDatum> all_companion_data(const DoubleCategory& D, const std::string& v) {
  std::vector<CompanionDatum> out;
  const auto& va = D.varr(v);
  for (const auto& h : D.harrs) {
    if (h.src != va.src || h.tgt != va.tgt) continue;
    for (const auto& eps : D.squares) {
      if (eps.top != h.id || eps.bottom != D.h_id.at(va.tgt) || eps.left != v ||
          eps.right != D.v_id.at(va.tgt))
        continue;
      for (const auto& eta : D.squares) {
        if (eta.top != D.h_id.at(va.src) || eta.bottom != h.id || eta.left != D.v_id.at(va.src) ||
            eta.right != v)
          continue;
        if (D.compose_sq_v(eps.id, eta.id) != D.sq_id_h.at(v)) continue;
        if (D.compose_sq_h(eps.id, eta.id) != D.sq_id_v.at(h.id)) continue;
        out.push_back({h.id, eps.id, eta.id});
      }
    }
  }
  return out;
}

inline std::optional<CompanionDatum> find_companion(const DoubleCategory& D, const std::string& v) {
  auto all = all_companion_data(D, v);
  if (all.empty()) return std::nullopt;
  return all.front();
}

// Horizontal opposite: h-arrows reversed, square left/right swapped; ids kept.
inline DoubleCategory horizontal_opposite(const DoubleCategory& D) {
  DoubleCategory H = D;
  for (auto& a : H.harrs) std::swap(a.src, a.tgt);
  for (auto& s : H.squares) std::swap(s.left, s.right);
  H.hcomp.clear();
  for (const auto& [gf, h] : D.hcomp) H.hcomp[{gf.second, gf.first}] = h;
  H.sq_hcomp.clear();
  for (const auto& [ts, u] : D.sq_hcomp) H.sq_hcomp[{ts.second, ts.first}] = u;
  return H;
}

// A conjoint for v is a companion for v in the horizontal opposite; the
// returned squares are (in the original orientation)
//   alpha: top = harr, bottom = h-id, left = v-id, right = v
//   beta:  top = h-id, bottom = harr, left = v, right = v-id.
struct ConjointDatum {
  std::string harr, alpha, beta;
  bool operator==(const ConjointDatum&) const = default;
};

inline std::optional<ConjointDatum> find_conjoint(const DoubleCategory& D, const std::string& v) {
  auto datum = find_companion(horizontal_opposite(D), v);
  if (!datum) return std::nullopt;
  return ConjointDatum{datum->harr, datum->eps, datum->eta};
}

inline bool is_equipment_double(const DoubleCategory& D) {
  for (const auto& v : D.varrs)
    if (!find_companion(D, v.id) || !find_conjoint(D, v.id)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Cartesian squares by the universal property (decided by enumeration).

inline bool is_cartesian_square(const DoubleCategory& D, const std::string& sq) {
  const auto& s = D.square(sq);
  const auto& top = D.harr(s.top);
  for (const auto& p : D.varrs) {
    if (p.tgt != top.src) continue;
    for (const auto& q : D.varrs) {
      if (q.tgt != top.tgt) continue;
      const std::string lp = D.compose_v(s.left, p.id);
      const std::string rq = D.compose_v(s.right, q.id);
      for (const auto& e : D.squares) {
        if (e.bottom != s.bottom || e.left != lp || e.right != rq) continue;
        int factorizations = 0;
        for (const auto& x : D.squares) {
          if (x.top != e.top || x.bottom != s.top || x.left != p.id || x.right != q.id) continue;
          if (D.compose_sq_v(sq, x.id) == e.id) ++factorizations;
        }
        if (factorizations != 1) return false;
      }
    }
  }
  return true;
}

inline bool has_cartesian_filler(const DoubleCategory& D, const std::string& f,
                                 const std::string& bottom, const std::string& g) {
  for (const auto& s : D.squares)
    if (s.bottom == bottom && s.left == f && s.right == g && is_cartesian_square(D, s.id))
      return true;
  return false;
}

// ---------------------------------------------------------------------------
// The double category of commutative squares of a category (thin for posets).

inline DoubleCategory squares_double_category(const FinCategory& X) {
  DoubleCategory D;
  D.objects = X.objects;
  for (const auto& m : X.morphisms) {
    D.harrs.push_back({m.id, m.src, m.tgt});
    D.varrs.push_back({m.id, m.src, m.tgt});
  }
  D.h_id = X.identity;
  D.v_id = X.identity;
  for (const auto& [k, v] : X.comp) {
    D.hcomp[k] = v;
    D.vcomp[k] = v;
  }
  auto sq_id = [](const DoubleCategory::Square& s) {
    return tuple_id({s.top, s.bottom, s.left, s.right});
  };
  for (const auto& t : X.morphisms)
    for (const auto& b : X.morphisms)
      for (const auto& l : X.morphisms) {
        if (l.src != t.src || l.tgt != b.src) continue;
        for (const auto& g : X.morphisms) {
          if (g.src != t.tgt || g.tgt != b.tgt) continue;
          if (X.compose(b.id, l.id) != X.compose(g.id, t.id)) continue;
          DoubleCategory::Square s{"", t.id, b.id, l.id, g.id};
          s.id = sq_id(s);
          D.squares.push_back(s);
        }
      }
  for (const auto& v : D.varrs)
    D.sq_id_h[v.id] = tuple_id({X.id_of(v.src), X.id_of(v.tgt), v.id, v.id});
  for (const auto& h : D.harrs)
    D.sq_id_v[h.id] = tuple_id({h.id, h.id, X.id_of(h.src), X.id_of(h.tgt)});
  for (const auto& t : D.squares)
    for (const auto& s : D.squares) {
      if (s.right == t.left)
        D.sq_hcomp[{t.id, s.id}] = tuple_id({X.compose(t.top, s.top), X.compose(t.bottom, s.bottom),
                                             s.left, t.right});
      if (s.bottom == t.top)
        D.sq_vcomp[{t.id, s.id}] = tuple_id({s.top, t.bottom, X.compose(t.left, s.left),
                                             X.compose(t.right, s.right)});
    }
  return D;
}

// The free companion: the square double category of the walking arrow. Two
// objects, three arrows each way (the monotone maps), six squares.
inline DoubleCategory free_companion() { return squares_double_category(walking_arrow()); }

inline DoubleCategory free_conjoint() { return horizontal_opposite(free_companion()); }

// ---------------------------------------------------------------------------
// Double functors out of the free companion.

// A double functor comp -> D is exactly a companion datum in D: images of the
// generating cells (x, y, h-arrow, v-arrow, eps, eta) subject to the two
// pasting identities. The restriction map to the tautological vertical arrow
// is a bijection onto the companionable v-arrows iff every such arrow carries
// exactly one datum.
inline bool free_companion_property(const DoubleCategory& D,
                                    const SizeGuard& guard = default_guard()) {
  guard.check(SizeGuard::times(D.varrs.size(), D.squares.size() * D.squares.size()),
              "free_companion_property");
  for (const auto& v : D.varrs) {
    std::size_t data = all_companion_data(D, v.id).size();
    bool companionable = data > 0;
    if (companionable && data != 1) return false;
    // find_companion agrees with the datum count by construction
    if (companionable != find_companion(D, v.id).has_value()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Adjunctions of horizontal arrows via the triangle identities.

// F: x -> y left adjoint, G: y -> x right adjoint; unit: square with top the
// h-identity of x and bottom G.F (F then G), counit dually. The triangle
// pastings are evaluated as two-row pastings per the usual staircase shape.
inline bool horizontal_adjunction_check(const DoubleCategory& D, const std::string& F,
                                        const std::string& G, const std::string& unit_sq,
                                        const std::string& counit_sq) {
  const auto& f = D.harr(F);
  const auto& g = D.harr(G);
  if (f.src != g.tgt || f.tgt != g.src) throw boundary_error("adjunction candidates not opposed");
  const std::string x = f.src, y = f.tgt;
  const auto& eta = D.square(unit_sq);
  const auto& eps = D.square(counit_sq);
  if (eta.top != D.h_id.at(x) || eta.bottom != D.compose_h(G, F) || eta.left != D.v_id.at(x) ||
      eta.right != D.v_id.at(x))
    throw boundary_error("unit square has wrong boundary");
  if (eps.top != D.compose_h(F, G) || eps.bottom != D.h_id.at(y) || eps.left != D.v_id.at(y) ||
      eps.right != D.v_id.at(y))
    throw boundary_error("counit square has wrong boundary");

  const std::string idF = D.sq_id_v.at(F);
  const std::string idG = D.sq_id_v.at(G);
  std::string t1 = paste_rows(D, {{unit_sq, idF}, {idF, counit_sq}});
  std::string t2 = paste_rows(D, {{idG, unit_sq}, {counit_sq, idG}});
  return t1 == idF && t2 == idG;
}

}  // namespace equipage

#endif
