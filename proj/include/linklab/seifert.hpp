#pragma once

// Seifert matrices over labeled symplectic bases, Nielsen-move congruences,
// and the condition checkers: good block form, extended form, Lagrangian-
// trivial and Lagrangian-trivial+.
//
// Surfaces are never represented explicitly.  A CurveSystem carries the link
// components, the basis curves a_i/b_i, and explicit push-offs a_i+ / b'_i as
// extra diagram components; every check below consumes only linking data of
// those curves.

#include <deque>

#include "linklab/milnor.hpp"

namespace linklab {

// ---------------------------------------------------------------------------
// Types

struct SeifertMatrix {
  int g = 0;
  std::vector<std::vector<long long>> entries;  // 2g x 2g, basis a1,b1,...,ag,bg
  std::vector<std::string> labels;              // "a1","b1",...
  std::vector<std::string> origins;             // component-of-origin per pair

  static SeifertMatrix zero(int g_) {
    SeifertMatrix m;
    m.g = g_;
    m.entries.assign(2 * g_, std::vector<long long>(2 * g_, 0));
    for (int i = 1; i <= g_; ++i) {
      m.labels.push_back("a" + std::to_string(i));
      m.labels.push_back("b" + std::to_string(i));
    }
    m.origins.assign(g_, "");
    return m;
  }
  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;
};

// V - V^T must be the standard symplectic form: +1 at (a_i, b_i), -1 at
// (b_i, a_i), zero elsewhere.
inline bool symplectic_invariant_holds(const SeifertMatrix& v) {
  int n = 2 * v.g;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long expect = 0;
      if (i / 2 == j / 2) expect = (i % 2 == 0 && j % 2 == 1) ? 1 : (i % 2 == 1 && j % 2 == 0 ? -1 : 0);
      if (v.entries[i][j] - v.entries[j][i] != expect) return false;
    }
  return true;
}

enum class CurveRole { link_component, a_curve, b_curve, a_pushoff, b_pushoff };

struct RoleTag {
  CurveRole role = CurveRole::link_component;
  int index = 0;  // 1-based pair index for basis curves/push-offs
  friend bool operator==(const RoleTag&, const RoleTag&) = default;
};

struct CurveSystem {
  Diagram diagram;
  std::map<std::string, RoleTag> roles;  // label -> role
  int genus = 0;
  std::map<int, std::string> origin;  // pair index -> link component label

  std::string label_of(CurveRole role, int index) const {
    for (const auto& [l, t] : roles)
      if (t.role == role && t.index == index) return l;
    throw std::invalid_argument("curve system: missing role for index " + std::to_string(index));
  }
};

struct Witness {
  std::string what;
  std::string where;
  long long value = 0;
};

struct ConditionReport {
  std::string condition;
  bool pass = true;
  std::vector<Witness> witnesses;
};

// ---------------------------------------------------------------------------
// Validation

inline std::vector<std::string> validate_curve_system(const CurveSystem& cs) {
  std::vector<std::string> bad = validate_diagram(cs.diagram);
  for (const auto& [label, tag] : cs.roles)
    if (!cs.diagram.has_component(label)) bad.push_back("role for missing component " + label);
  for (const auto& c : cs.diagram.components)
    if (!cs.roles.count(c.label)) bad.push_back("component without role: " + c.label);
  for (int i = 1; i <= cs.genus; ++i) {
    for (CurveRole r : {CurveRole::a_curve, CurveRole::b_curve, CurveRole::a_pushoff,
                        CurveRole::b_pushoff}) {
      int count = 0;
      for (const auto& [l, t] : cs.roles)
        if (t.role == r && t.index == i) ++count;
      if (count != 1)
        bad.push_back("pair " + std::to_string(i) + ": role multiplicity " + std::to_string(count));
    }
  }
  if (!bad.empty()) return bad;
  auto lk = linking_matrix(cs.diagram);
  auto idx = [&](const std::string& l) { return cs.diagram.component_index(l); };
  for (int i = 1; i <= cs.genus; ++i) {
    auto b = cs.label_of(CurveRole::b_curve, i);
    auto bp = cs.label_of(CurveRole::b_pushoff, i);
    auto a = cs.label_of(CurveRole::a_curve, i);
    if (cs.diagram.at(b).framing != 0) bad.push_back("b-curve " + b + " not 0-framed");
    if (lk[idx(bp)][idx(b)] != 0) bad.push_back("lk(" + bp + "," + b + ") != 0");
    if (lk[idx(bp)][idx(a)] != 0) bad.push_back("lk(" + bp + "," + a + ") != 0");
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Seifert matrix of a curve system

// Same-index 2x2 blocks use the explicit push-offs; entries between distinct
// disjoint curves are plain linking numbers.
inline SeifertMatrix seifert_matrix_of(const CurveSystem& cs) {
  auto bad = validate_curve_system(cs);
  if (!bad.empty()) throw std::invalid_argument("seifert_matrix_of: " + bad.front());
  int g = cs.genus;
  SeifertMatrix v = SeifertMatrix::zero(g);
  auto lk = linking_matrix(cs.diagram);
  auto idx = [&](const std::string& l) { return cs.diagram.component_index(l); };
  for (int i = 1; i <= g; ++i) {
    auto it = cs.origin.find(i);
    v.origins[i - 1] = it == cs.origin.end() ? "" : it->second;
  }
  std::vector<int> a(g), b(g), ap(g), bp(g);
  for (int i = 0; i < g; ++i) {
    a[i] = idx(cs.label_of(CurveRole::a_curve, i + 1));
    b[i] = idx(cs.label_of(CurveRole::b_curve, i + 1));
    ap[i] = idx(cs.label_of(CurveRole::a_pushoff, i + 1));
    bp[i] = idx(cs.label_of(CurveRole::b_pushoff, i + 1));
  }
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      if (i == j) {
        v.entries[2 * i][2 * i] = lk[ap[i]][a[i]];
        v.entries[2 * i][2 * i + 1] = lk[ap[i]][b[i]];
        v.entries[2 * i + 1][2 * i] = lk[bp[i]][a[i]];
        v.entries[2 * i + 1][2 * i + 1] = lk[bp[i]][b[i]];
      } else {
        v.entries[2 * i][2 * j] = lk[a[i]][a[j]];
        v.entries[2 * i][2 * j + 1] = lk[a[i]][b[j]];
        v.entries[2 * i + 1][2 * j] = lk[b[i]][a[j]];
        v.entries[2 * i + 1][2 * j + 1] = lk[b[i]][b[j]];
      }
    }
  return v;
}

// ---------------------------------------------------------------------------
// Block-form checkers

// Pass iff V is block-diagonal in (a_i, b_i) pairs with every block
// [[0, +-1], [0, 0]].
inline ConditionReport is_good_block_form(const SeifertMatrix& v) {
  ConditionReport rep{"good-block-form", true, {}};
  int n = 2 * v.g;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long e = v.entries[i][j];
      if (i / 2 == j / 2) {
        bool ok = (i % 2 == 0 && j % 2 == 1) ? (e == 1 || e == -1) : e == 0;
        if (!ok) {
          rep.pass = false;
          rep.witnesses.push_back({"bad diagonal block entry",
                                   "(" + v.labels[i] + "," + v.labels[j] + ")", e});
        }
      } else if (e != 0) {
        rep.pass = false;
        rep.witnesses.push_back(
            {"nonzero off-block entry", "(" + v.labels[i] + "," + v.labels[j] + ")", e});
      }
    }
  return rep;
}

// Pass iff the diagonal 2x2 blocks have good form and all lk(a_i, b_j),
// lk(b_i, b_j) vanish for i != j; lk(a_i, a_j) is unconstrained.
inline ConditionReport is_extended_form(const SeifertMatrix& v) {
  ConditionReport rep{"extended-form", true, {}};
  int n = 2 * v.g;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long e = v.entries[i][j];
      if (i / 2 == j / 2) {
        bool ok = (i % 2 == 0 && j % 2 == 1) ? (e == 1 || e == -1) : e == 0;
        if (!ok) {
          rep.pass = false;
          rep.witnesses.push_back({"bad diagonal block entry",
                                   "(" + v.labels[i] + "," + v.labels[j] + ")", e});
        }
      } else if (!(i % 2 == 0 && j % 2 == 0) && e != 0) {
        rep.pass = false;
        rep.witnesses.push_back(
            {"nonzero off-block entry", "(" + v.labels[i] + "," + v.labels[j] + ")", e});
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Nielsen congruences

struct NielsenMove {
  int into = 0;   // 0-based basis row index i: e_i <- e_i + coeff * e_j
  int from = 0;   // 0-based basis row index j
  int coeff = 0;  // 0 = identity move
};

namespace detail {

inline std::vector<std::vector<long long>> symplectic_j(int g) {
  std::vector<std::vector<long long>> j(2 * g, std::vector<long long>(2 * g, 0));
  for (int i = 0; i < g; ++i) {
    j[2 * i][2 * i + 1] = 1;
    j[2 * i + 1][2 * i] = -1;
  }
  return j;
}

inline std::vector<std::vector<long long>> mat_mul(const std::vector<std::vector<long long>>& a,
                                                   const std::vector<std::vector<long long>>& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  std::vector<std::vector<long long>> r(n, std::vector<long long>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
  return r;
}

inline std::vector<std::vector<long long>> mat_transpose(
    const std::vector<std::vector<long long>>& a) {
  std::vector<std::vector<long long>> r(a[0].size(), std::vector<long long>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

inline bool is_symplectic(const std::vector<std::vector<long long>>& p, int g) {
  auto j = symplectic_j(g);
  return mat_mul(mat_mul(p, j), mat_transpose(p)) == j;
}

}  // namespace detail

// e_into <- e_into + coeff * e_from, completed to an elementary symplectic
// transvection when a compensating entry is required; rejects moves that
// cannot be completed.
inline SeifertMatrix nielsen_congruence(const SeifertMatrix& v, const NielsenMove& move) {
  int n = 2 * v.g;
  if (move.coeff == 0) return v;
  if (move.into < 0 || move.into >= n || move.from < 0 || move.from >= n ||
      move.into == move.from)
    throw std::invalid_argument("nielsen_congruence: bad indices");
  auto identity = [&]() {
    std::vector<std::vector<long long>> p(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) p[i][i] = 1;
    return p;
  };
  int dual_into = move.into ^ 1;
  int dual_from = move.from ^ 1;
  std::vector<std::vector<std::vector<long long>>> candidates;
  {
    auto p = identity();
    p[move.into][move.from] = move.coeff;
    candidates.push_back(p);
    if (dual_from != move.into) {
      for (int s : {move.coeff, -move.coeff}) {
        auto q = identity();
        q[move.into][move.from] = move.coeff;
        q[dual_from][dual_into] = s;
        candidates.push_back(q);
      }
    }
  }
  for (const auto& p : candidates) {
    if (!detail::is_symplectic(p, v.g)) continue;
    SeifertMatrix r = v;
    r.entries = detail::mat_mul(detail::mat_mul(p, v.entries), detail::mat_transpose(p));
    return r;
  }
  throw std::invalid_argument("nielsen_congruence: move is not symplectic");
}

// Bounded breadth-first search for a basis in good block form.  Absence of a
// certificate means "not found", never nonexistence.
struct BasisSearchResult {
  bool found = false;
  std::vector<NielsenMove> moves;
  SeifertMatrix matrix;
};

inline BasisSearchResult search_good_basis(const SeifertMatrix& v, int max_depth = 6) {
  BasisSearchResult res;
  res.matrix = v;
  if (is_good_block_form(v).pass) {
    res.found = true;
    return res;
  }
  int n = 2 * v.g;
  std::set<std::vector<std::vector<long long>>> seen{v.entries};
  struct Node {
    SeifertMatrix m;
    std::vector<NielsenMove> path;
  };
  std::deque<Node> queue{{v, {}}};
  while (!queue.empty()) {
    Node cur = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(cur.path.size()) >= max_depth) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int c : {1, -1}) {
          NielsenMove mv{i, j, c};
          SeifertMatrix next;
          try {
            next = nielsen_congruence(cur.m, mv);
          } catch (const std::invalid_argument&) {
            continue;
          }
          if (!seen.insert(next.entries).second) continue;
          auto path = cur.path;
          path.push_back(mv);
          if (is_good_block_form(next).pass) {
            res.found = true;
            res.moves = std::move(path);
            res.matrix = std::move(next);
            return res;
          }
          queue.push_back({std::move(next), std::move(path)});
        }
      }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Lagrangian conditions

namespace detail {

inline std::string mu_witness_text(const Diagram& link, const MuValue& w) {
  std::string s = w.sequence.size() == 2 ? "lk(" : "mu(";
  // Put the appended test curve first in the length-2 case so the witness
  // reads lk(a_i, b'_j).
  std::vector<int> order(w.sequence);
  if (order.size() == 2) std::swap(order[0], order[1]);
  for (size_t t = 0; t < order.size(); ++t) {
    if (t) s += ",";
    s += link.components[order[t] - 1].label;
  }
  return s + ")";
}

}  // namespace detail

// The b-curves, as a standalone link (deleting every other component).
inline Diagram lagrangian_link(const CurveSystem& cs) {
  std::vector<std::string> keep;
  for (int i = 1; i <= cs.genus; ++i) keep.push_back(cs.label_of(CurveRole::b_curve, i));
  return restrict_to(cs.diagram, keep);
}

inline ConditionReport check_lagrangian_trivial(const CurveSystem& cs) {
  ConditionReport rep{"lagrangian-trivial", true, {}};
  if (cs.genus == 0) return rep;
  Diagram b_link = lagrangian_link(cs);
  for (const auto& c : b_link.components)
    if (c.framing != 0) {
      rep.pass = false;
      rep.witnesses.push_back({"nonzero framing", c.label, c.framing});
    }
  if (!rep.pass) return rep;
  auto verdict = is_homotopy_trivial(b_link);
  if (!verdict.trivial) {
    rep.pass = false;
    rep.witnesses.push_back({"nonvanishing mu-bar",
                             detail::mu_witness_text(b_link, *verdict.witness),
                             verdict.witness->value});
  }
  return rep;
}

// The 2g test links of the trivial+ condition: {b'_1..b'_g} U a_i, then
// {b'_1..b'_g} U b_i, each as a (g+1)-component diagram.
inline std::vector<Diagram> plus_test_links(const CurveSystem& cs) {
  std::vector<std::string> pushoffs;
  for (int i = 1; i <= cs.genus; ++i) pushoffs.push_back(cs.label_of(CurveRole::b_pushoff, i));
  std::vector<Diagram> links;
  for (CurveRole role : {CurveRole::a_curve, CurveRole::b_curve})
    for (int i = 1; i <= cs.genus; ++i) {
      auto keep = pushoffs;
      keep.push_back(cs.label_of(role, i));
      links.push_back(restrict_to(cs.diagram, keep));
    }
  return links;
}

inline ConditionReport check_lagrangian_trivial_plus(const CurveSystem& cs) {
  ConditionReport rep{"lagrangian-trivial-plus", true, {}};
  auto links = plus_test_links(cs);
  for (size_t t = 0; t < links.size(); ++t) {
    auto verdict = is_homotopy_trivial(links[t]);
    if (verdict.trivial) continue;
    rep.pass = false;
    const auto& extra = links[t].components.back().label;
    rep.witnesses.push_back({"essential test link (" + extra + ")",
                             detail::mu_witness_text(links[t], *verdict.witness),
                             verdict.witness->value});
  }
  return rep;
}

}  // namespace linklab
