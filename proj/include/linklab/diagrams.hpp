#pragma once

// Oriented framed link diagrams as signed Gauss codes: each component is a
// cyclic sequence of crossing passages (over/under, sign) plus an integer
// framing.  Every crossing id occurs exactly twice in the diagram, once over
// and once under, with the same sign stored at both passages.  Planar
// realizability is not verified; all built-in constructors emit realizable
// codes, and the invariants computed downstream (linking numbers, Magnus
// expansions of longitudes) are the formal Wirtinger ones, which are stable
// under the move set implemented here.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace linklab {

enum class Strand { over, under };

struct Passage {
  int crossing = -1;
  Strand strand = Strand::over;
  int sign = 1;
  friend bool operator==(const Passage&, const Passage&) = default;
};

struct Component {
  std::string label;
  int framing = 0;
  std::vector<Passage> passages;  // cyclic; index 0 is the basepoint passage
  friend bool operator==(const Component&, const Component&) = default;
};

struct Diagram {
  std::vector<Component> components;

  int component_index(const std::string& label) const {
    for (size_t i = 0; i < components.size(); ++i)
      if (components[i].label == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown component label: " + label);
  }
  bool has_component(const std::string& label) const {
    for (const auto& c : components)
      if (c.label == label) return true;
    return false;
  }
  Component& at(const std::string& label) { return components[component_index(label)]; }
  const Component& at(const std::string& label) const {
    return components[component_index(label)];
  }

  int num_crossings() const {
    int m = -1;
    for (const auto& c : components)
      for (const auto& p : c.passages) m = std::max(m, p.crossing);
    return m + 1;
  }

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

// Location of one passage: component index + position in its sequence.
struct PassageRef {
  int comp = -1;
  int pos = -1;
  bool valid() const { return comp >= 0; }
};

struct CrossingEnds {
  PassageRef over, under;
};

// crossing id -> its two passage locations.
inline std::vector<CrossingEnds> crossing_table(const Diagram& d) {
  std::vector<CrossingEnds> t(d.num_crossings());
  for (size_t ci = 0; ci < d.components.size(); ++ci) {
    const auto& ps = d.components[ci].passages;
    for (size_t pi = 0; pi < ps.size(); ++pi) {
      const Passage& p = ps[pi];
      if (p.crossing < 0 || p.crossing >= static_cast<int>(t.size())) continue;
      PassageRef ref{static_cast<int>(ci), static_cast<int>(pi)};
      (p.strand == Strand::over ? t[p.crossing].over : t[p.crossing].under) = ref;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Validation

inline std::vector<std::string> validate_diagram(const Diagram& d) {
  std::vector<std::string> bad;
  std::set<std::string> labels;
  for (const auto& c : d.components) {
    if (c.label.empty()) bad.push_back("empty component label");
    if (!labels.insert(c.label).second) bad.push_back("duplicate component label: " + c.label);
  }
  struct Seen {
    int overs = 0, unders = 0, sign = 0;
    bool sign_ok = true;
  };
  std::map<int, Seen> seen;
  for (const auto& c : d.components) {
    for (const auto& p : c.passages) {
      if (p.crossing < 0) {
        bad.push_back("negative crossing id on " + c.label);
        continue;
      }
      if (p.sign != 1 && p.sign != -1) bad.push_back("bad crossing sign on " + c.label);
      auto& s = seen[p.crossing];
      (p.strand == Strand::over ? s.overs : s.unders)++;
      if (s.sign == 0)
        s.sign = p.sign;
      else if (s.sign != p.sign)
        s.sign_ok = false;
    }
  }
  int expect = 0;
  for (const auto& [id, s] : seen) {
    if (id != expect++) bad.push_back("crossing ids not contiguous at " + std::to_string(id));
    if (s.overs + s.unders != 2)
      bad.push_back("unpaired crossing " + std::to_string(id));
    else if (s.overs != 1)
      bad.push_back("crossing " + std::to_string(id) + " lacks over/under pairing");
    if (!s.sign_ok) bad.push_back("mismatched signs at crossing " + std::to_string(id));
  }
  return bad;
}

inline void require_valid(const Diagram& d) {
  auto bad = validate_diagram(d);
  if (!bad.empty()) throw std::invalid_argument("invalid diagram: " + bad.front());
}

// ---------------------------------------------------------------------------
// Basic invariants

// Sum of signs over self-crossings of the component (each crossing once).
inline int writhe(const Diagram& d, const std::string& label) {
  int ci = d.component_index(label);
  auto table = crossing_table(d);
  int w = 0;
  for (const auto& x : table)
    if (x.over.comp == ci && x.under.comp == ci) {
      const auto& p = d.components[ci].passages[x.over.pos];
      w += p.sign;
    }
  return w;
}

// Off-diagonal (i,j): half the signed count of crossings between components
// i and j; diagonal: stored framings.
inline std::vector<std::vector<int>> linking_matrix(const Diagram& d) {
  require_valid(d);
  size_t n = d.components.size();
  std::vector<std::vector<int>> twice(n, std::vector<int>(n, 0));
  auto table = crossing_table(d);
  for (const auto& x : table) {
    if (x.over.comp == x.under.comp) continue;
    int s = d.components[x.over.comp].passages[x.over.pos].sign;
    twice[x.over.comp][x.under.comp] += s;
    twice[x.under.comp][x.over.comp] += s;
  }
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    m[i][i] = d.components[i].framing;
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (twice[i][j] % 2 != 0)
        throw std::invalid_argument("odd inter-component crossing parity (non-planar code)");
      m[i][j] = twice[i][j] / 2;
    }
  }
  return m;
}

inline int linking_number(const Diagram& d, const std::string& a, const std::string& b) {
  auto m = linking_matrix(d);
  return m[d.component_index(a)][d.component_index(b)];
}

// ---------------------------------------------------------------------------
// Structural edits

// Deterministic renumbering: crossings keyed by first appearance in
// (component order, passage order) traversal.
inline void renumber_crossings(Diagram& d) {
  std::map<int, int> remap;
  for (auto& c : d.components)
    for (auto& p : c.passages)
      if (!remap.count(p.crossing)) remap[p.crossing] = -1;
  int next = 0;
  for (auto& c : d.components)
    for (auto& p : c.passages)
      if (remap[p.crossing] < 0) remap[p.crossing] = next++;
  for (auto& c : d.components)
    for (auto& p : c.passages) p.crossing = remap[p.crossing];
}

// Remove the named components together with every crossing they touch.
inline Diagram delete_components(const Diagram& d, const std::vector<std::string>& labels) {
  std::set<int> gone;
  for (const auto& l : labels) gone.insert(d.component_index(l));
  std::set<int> dead_crossings;
  for (int ci : gone)
    for (const auto& p : d.components[ci].passages) dead_crossings.insert(p.crossing);
  Diagram r;
  for (size_t ci = 0; ci < d.components.size(); ++ci) {
    if (gone.count(static_cast<int>(ci))) continue;
    Component c;
    c.label = d.components[ci].label;
    c.framing = d.components[ci].framing;
    for (const auto& p : d.components[ci].passages)
      if (!dead_crossings.count(p.crossing)) c.passages.push_back(p);
    r.components.push_back(std::move(c));
  }
  renumber_crossings(r);
  return r;
}

// Keep only the named components (sub-link extraction), in the given order.
inline Diagram restrict_to(const Diagram& d, const std::vector<std::string>& keep) {
  std::set<std::string> keep_set(keep.begin(), keep.end());
  std::vector<std::string> drop;
  for (const auto& c : d.components)
    if (!keep_set.count(c.label)) drop.push_back(c.label);
  Diagram r = delete_components(d, drop);
  Diagram ordered;
  for (const auto& l : keep) ordered.components.push_back(r.at(l));
  return ordered;
}

// Reverse a component's orientation: its passage sequence reverses and every
// crossing shared with a *different* component flips sign (self-crossings
// keep theirs).
inline Diagram reverse_component(const Diagram& d, const std::string& label) {
  Diagram r = d;
  int ci = r.component_index(label);
  auto& comp = r.components[ci];
  std::reverse(comp.passages.begin(), comp.passages.end());
  std::set<int> own;
  std::map<int, int> count;
  for (const auto& p : comp.passages) count[p.crossing]++;
  for (const auto& [id, n] : count)
    if (n == 2) own.insert(id);
  for (auto& c : r.components)
    for (auto& p : c.passages)
      if (count.count(p.crossing) && !own.count(p.crossing)) p.sign = -p.sign;
  return r;
}

// Move the basepoint of a component k steps along its cyclic order.
inline Diagram rotate_basepoint(const Diagram& d, const std::string& label, int k) {
  Diagram r = d;
  auto& ps = r.at(label).passages;
  if (ps.empty()) return r;
  int n = static_cast<int>(ps.size());
  k = ((k % n) + n) % n;
  std::rotate(ps.begin(), ps.begin() + k, ps.end());
  return r;
}

inline Diagram relabel_component(const Diagram& d, const std::string& from, const std::string& to) {
  Diagram r = d;
  r.at(from).label = to;
  return r;
}

}  // namespace linklab
