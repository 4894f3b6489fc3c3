#ifndef EQUIPAGE_SIMPLICIAL_HPP
#define EQUIPAGE_SIMPLICIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "equipage/errors.hpp"
#include "equipage/fincat.hpp"
#include "equipage/ids.hpp"

namespace equipage {

// A 3-truncated simplicial set. face[n][i] : X_n -> X_{n-1} for 1 <= n <= 3,
// 0 <= i <= n; degeneracy[n][i] : X_n -> X_{n+1} for 0 <= n <= 2, 0 <= i <= n.
struct TruncSimpSet {
  std::vector<std::string> levels[4];
  std::map<std::string, std::string> face[4][4];
  std::map<std::string, std::string> degeneracy[3][3];

  const std::string& d(int n, int i, const std::string& x) const {
    auto it = face[n][i].find(x);
    if (it == face[n][i].end())
      throw structural_error("face d_" + std::to_string(i) + " undefined at " + x);
    return it->second;
  }
  const std::string& s(int n, int i, const std::string& x) const {
    auto it = degeneracy[n][i].find(x);
    if (it == degeneracy[n][i].end())
      throw structural_error("degeneracy s_" + std::to_string(i) + " undefined at " + x);
    return it->second;
  }
};

inline ValidationReport validate_simpset(const TruncSimpSet& S) {
  ValidationReport r;
  auto in_level = [&](int n, const std::string& x) {
    for (const auto& y : S.levels[n])
      if (y == x) return true;
    return false;
  };
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i)
      for (const auto& x : S.levels[n]) {
        auto it = S.face[n][i].find(x);
        if (it == S.face[n][i].end())
          r.structural.push_back("d_" + std::to_string(i) + " not total at level " + std::to_string(n));
        else if (!in_level(n - 1, it->second))
          r.structural.push_back("d_" + std::to_string(i) + "(" + x + ") out of range");
      }
  for (int n = 0; n <= 2; ++n)
    for (int i = 0; i <= n; ++i)
      for (const auto& x : S.levels[n]) {
        auto it = S.degeneracy[n][i].find(x);
        if (it == S.degeneracy[n][i].end())
          r.structural.push_back("s_" + std::to_string(i) + " not total at level " + std::to_string(n));
        else if (!in_level(n + 1, it->second))
          r.structural.push_back("s_" + std::to_string(i) + "(" + x + ") out of range");
      }
  if (!r.structural.empty()) return r;

  // Simplicial identities among all composites representable in 4 levels.
  for (int n = 2; n <= 3; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (const auto& x : S.levels[n])
          if (S.d(n - 1, i, S.d(n, j, x)) != S.d(n - 1, j - 1, S.d(n, i, x)))
            r.violations.push_back(
                {"face-face", "d" + std::to_string(i) + "d" + std::to_string(j) + "(" + x + ")"});
  for (int n = 0; n <= 1; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        for (const auto& x : S.levels[n])
          if (S.s(n + 1, i, S.s(n, j, x)) != S.s(n + 1, j + 1, S.s(n, i, x)))
            r.violations.push_back(
                {"deg-deg", "s" + std::to_string(i) + "s" + std::to_string(j) + "(" + x + ")"});
  for (int n = 0; n <= 2; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (const auto& x : S.levels[n]) {
          const std::string& sx = S.s(n, j, x);
          const std::string& lhs = S.d(n + 1, i, sx);
          if (i < j) {
            if (n >= 1 && lhs != S.s(n - 1, j - 1, S.d(n, i, x)))
              r.violations.push_back({"face-deg", "d" + std::to_string(i) + "s" + std::to_string(j)});
          } else if (i == j || i == j + 1) {
            if (lhs != x)
              r.violations.push_back({"face-deg-id", "d" + std::to_string(i) + "s" + std::to_string(j)});
          } else {
            if (n >= 1 && lhs != S.s(n - 1, j, S.d(n, i - 1, x)))
              r.violations.push_back({"face-deg", "d" + std::to_string(i) + "s" + std::to_string(j)});
          }
        }
  return r;
}

struct SegalCheck {
  bool ok;
  std::string witness;  // empty when ok
};

// Segal maps X2 -> X1 x_X0 X1 and X3 -> X1 x_X0 X1 x_X0 X1 are bijections.
// Edges of a simplex are read off the spine via faces; src = d1, tgt = d0.
inline SegalCheck segal_check(const TruncSimpSet& S) {
  {
    ValidationReport r = validate_simpset(S);
    if (!r.structural.empty()) throw structural_error("segal_check: " + r.structural.front());
  }
  // level 2
  {
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> hit;
    for (const auto& x : S.levels[2]) {
      std::pair<std::string, std::string> key{S.d(2, 2, x), S.d(2, 0, x)};
      hit[key].push_back(x);
      if (hit[key].size() > 1)
        return {false, "Segal map X2 not injective at " + tuple_id({key.first, key.second})};
    }
    for (const auto& e : S.levels[1])
      for (const auto& f : S.levels[1]) {
        if (S.d(1, 0, e) != S.d(1, 1, f)) continue;  // tgt(e) = src(f)
        if (!hit.count({e, f}))
          return {false, "Segal map X2 misses " + tuple_id({e, f})};
      }
  }
  // level 3
  {
    std::map<std::vector<std::string>, std::vector<std::string>> hit;
    for (const auto& x : S.levels[3]) {
      std::vector<std::string> key{S.d(2, 2, S.d(3, 3, x)), S.d(2, 0, S.d(3, 3, x)),
                                   S.d(2, 0, S.d(3, 0, x))};
      hit[key].push_back(x);
      if (hit[key].size() > 1) return {false, "Segal map X3 not injective at " + tuple_id(key)};
    }
    for (const auto& e : S.levels[1])
      for (const auto& f : S.levels[1]) {
        if (S.d(1, 0, e) != S.d(1, 1, f)) continue;
        for (const auto& g : S.levels[1]) {
          if (S.d(1, 0, f) != S.d(1, 1, g)) continue;
          if (!hit.count({e, f, g})) return {false, "Segal map X3 misses " + tuple_id({e, f, g})};
        }
      }
  }
  return {true, ""};
}

// 3-truncated nerve. X2 is spine pairs "(f,g)" (f then g), X3 spine triples.
inline TruncSimpSet nerve(const FinCategory& C) {
  TruncSimpSet S;
  S.levels[0] = C.objects;
  for (const auto& m : C.morphisms) S.levels[1].push_back(m.id);
  for (const auto& m : C.morphisms) {
    S.face[1][0][m.id] = m.tgt;
    S.face[1][1][m.id] = m.src;
    S.degeneracy[1][0][m.id] = tuple_id({C.id_of(m.src), m.id});
    S.degeneracy[1][1][m.id] = tuple_id({m.id, C.id_of(m.tgt)});
  }
  for (const auto& o : C.objects) S.degeneracy[0][0][o] = C.id_of(o);
  for (const auto& f : C.morphisms)
    for (const auto& g : C.morphisms) {
      if (f.tgt != g.src) continue;
      std::string p = tuple_id({f.id, g.id});
      S.levels[2].push_back(p);
      S.face[2][0][p] = g.id;
      S.face[2][1][p] = C.compose(g.id, f.id);
      S.face[2][2][p] = f.id;
      S.degeneracy[2][0][p] = tuple_id({C.id_of(f.src), f.id, g.id});
      S.degeneracy[2][1][p] = tuple_id({f.id, C.id_of(f.tgt), g.id});
      S.degeneracy[2][2][p] = tuple_id({f.id, g.id, C.id_of(g.tgt)});
    }
  for (const auto& f : C.morphisms)
    for (const auto& g : C.morphisms) {
      if (f.tgt != g.src) continue;
      for (const auto& h : C.morphisms) {
        if (g.tgt != h.src) continue;
        std::string t = tuple_id({f.id, g.id, h.id});
        S.levels[3].push_back(t);
        S.face[3][0][t] = tuple_id({g.id, h.id});
        S.face[3][1][t] = tuple_id({C.compose(g.id, f.id), h.id});
        S.face[3][2][t] = tuple_id({f.id, C.compose(h.id, g.id)});
        S.face[3][3][t] = tuple_id({f.id, g.id});
      }
    }
  return S;
}

}  // namespace equipage

#endif
