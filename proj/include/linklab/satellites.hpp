#pragma once

// Satellite constructions on signed Gauss codes: blackboard cabling with
// twist correction, Whitehead and Bing doubling, parallel copies, braid
// closures for the primitive diagrams, and pattern composition.
//
// Cabling convention: copy i of a component runs at offset i to the left of
// the direction of travel.  At a crossing of sign s, a strand passing under
// the cable meets the copies in descending index order when s = +1 and
// ascending order when s = -1; a strand passing over the cable meets them in
// ascending order when s = +1.  These orders make the cable the honest
// planar parallel, which the mu-bar oracle tests pin down.

#include "linklab/diagrams.hpp"
#include "linklab/moves.hpp"

namespace linklab {

struct PatternSpec {
  std::string name;  // unknot|hopf|whitehead_link|borromean|wh_double|bing_double|parallel
  int clasp_sign = 1;  // hopf, whitehead_link, wh_double only
  int copies = 1;      // parallel only
};

// ---------------------------------------------------------------------------
// Braid closures

// Word letters: +i = sigma_i (left strand over, positive crossing),
// -i = sigma_i^-1.  Strands are numbered 1..n; closure components are born in
// order of their smallest starting position and labelled L1, L2, ....
inline Diagram braid_closure(int strands, const std::vector<int>& word,
                             const std::string& label_prefix = "L") {
  if (strands < 1) throw std::invalid_argument("braid_closure: need at least one strand");
  std::vector<int> perm(strands);  // perm[pos] = strand currently at pos
  for (int i = 0; i < strands; ++i) perm[i] = i;
  std::vector<std::vector<Passage>> strand_passages(strands);
  int id = 0;
  for (int g : word) {
    int i = std::abs(g) - 1;
    if (g == 0 || i + 1 >= strands) throw std::invalid_argument("braid_closure: bad letter");
    int u = perm[i], v = perm[i + 1];
    int sign = g > 0 ? 1 : -1;
    // sigma_i: strand at position i passes over; sigma_i^-1: under.
    strand_passages[u].push_back({id, g > 0 ? Strand::over : Strand::under, sign});
    strand_passages[v].push_back({id, g > 0 ? Strand::under : Strand::over, sign});
    std::swap(perm[i], perm[i + 1]);
    ++id;
  }
  // Close up: follow the permutation cycles.  perm maps start position to
  // end position; component = orbit of start positions.
  std::vector<int> end_pos(strands);
  for (int pos = 0; pos < strands; ++pos) end_pos[perm[pos]] = pos;
  std::vector<bool> used(strands, false);
  Diagram d;
  int comp_idx = 1;
  for (int s = 0; s < strands; ++s) {
    if (used[s]) continue;
    Component c;
    c.label = label_prefix + std::to_string(comp_idx++);
    int cur = s;
    do {
      used[cur] = true;
      for (const auto& p : strand_passages[cur]) c.passages.push_back(p);
      cur = end_pos[cur];  // closure arc: bottom position back to same top position
    } while (cur != s);
    d.components.push_back(std::move(c));
  }
  renumber_crossings(d);
  return d;
}

// ---------------------------------------------------------------------------
// Cabling

// Blackboard k-cable of one component.  Returns the diagram and the labels of
// the copies in cross-section order (copy 0 first).  Copies keep the
// original's orientation, get framing 0, and are labelled label^0..label^k-1
// unless custom labels are supplied.
inline Diagram cable_component(const Diagram& d, const std::string& label, int k,
                               std::vector<std::string>* out_labels = nullptr,
                               const std::vector<std::string>& custom_labels = {}) {
  require_valid(d);
  if (k < 1) throw std::invalid_argument("cable: k must be positive");
  int target = d.component_index(label);
  auto table = crossing_table(d);

  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i)
    labels[i] = custom_labels.empty() ? label + "^" + std::to_string(i) : custom_labels[i];
  if (out_labels) *out_labels = labels;

  // New crossing ids: for each old crossing id, a block of k or k*k.
  int next_id = 0;
  int n_old = d.num_crossings();
  std::vector<int> base(n_old, -1);
  std::vector<int> block(n_old, 0);
  for (int x = 0; x < n_old; ++x) {
    bool over_in = table[x].over.comp == target;
    bool under_in = table[x].under.comp == target;
    block[x] = (over_in && under_in) ? k * k : ((over_in || under_in) ? k : 1);
    base[x] = next_id;
    next_id += block[x];
  }
  // id of the cabled crossing: self-crossings indexed by (over copy i, under
  // copy j) as base + i*k + j; single-sided by copy index.
  auto self_id = [&](int x, int i, int j) { return base[x] + i * k + j; };
  auto side_id = [&](int x, int i) { return base[x] + i; };

  Diagram r;
  for (size_t ci = 0; ci < d.components.size(); ++ci) {
    const auto& src = d.components[ci];
    if (static_cast<int>(ci) != target) {
      Component c;
      c.label = src.label;
      c.framing = src.framing;
      for (const auto& p : src.passages) {
        int x = p.crossing;
        bool over_in = table[x].over.comp == target;
        bool under_in = table[x].under.comp == target;
        if (!over_in && !under_in) {
          c.passages.push_back({base[x], p.strand, p.sign});
        } else if (p.strand == Strand::under) {
          // This strand passes under the cable: descending copies for +1.
          for (int t = 0; t < k; ++t) {
            int i = p.sign > 0 ? k - 1 - t : t;
            c.passages.push_back({side_id(x, i), Strand::under, p.sign});
          }
        } else {
          // Passes over the cable: ascending copies for +1.
          for (int t = 0; t < k; ++t) {
            int j = p.sign > 0 ? t : k - 1 - t;
            c.passages.push_back({side_id(x, j), Strand::over, p.sign});
          }
        }
      }
      r.components.push_back(std::move(c));
    } else {
      for (int copy = 0; copy < k; ++copy) {
        Component c;
        c.label = labels[copy];
        c.framing = 0;
        for (const auto& p : src.passages) {
          int x = p.crossing;
          bool over_in = table[x].over.comp == target;
          bool under_in = table[x].under.comp == target;
          if (over_in && under_in) {
            if (p.strand == Strand::over) {
              // copy acts as over strand: meets under copies ascending for +1.
              for (int t = 0; t < k; ++t) {
                int j = p.sign > 0 ? t : k - 1 - t;
                c.passages.push_back({self_id(x, copy, j), Strand::over, p.sign});
              }
            } else {
              // copy acts as under strand: meets over copies descending for +1.
              for (int t = 0; t < k; ++t) {
                int i = p.sign > 0 ? k - 1 - t : t;
                c.passages.push_back({self_id(x, i, copy), Strand::under, p.sign});
              }
            }
          } else {
            c.passages.push_back({side_id(x, copy), p.strand, p.sign});
          }
        }
        r.components.push_back(std::move(c));
      }
    }
  }
  renumber_crossings(r);
  return r;
}

// ---------------------------------------------------------------------------
// Twist regions

struct StrandRef {
  std::string comp;
  int pos;        // insertion index into the component's passage list
  int direction;  // +1 with the braid flow, -1 against it
};

// Insert |twists| full twists on the listed strands (cross-section order).
// Each pair of strands acquires two crossings of sign sgn(twists)*d1*d2 per
// full twist, so pairwise linking changes by exactly that amount.
inline Diagram insert_full_twists(const Diagram& d, const std::vector<StrandRef>& strands,
                                  int twists) {
  if (twists == 0 || strands.size() < 2) return d;
  Diagram r = d;
  int k = static_cast<int>(strands.size());
  int id = r.num_crossings();
  std::vector<std::vector<Passage>> pending(k);
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  int tsign = twists > 0 ? 1 : -1;
  for (int rep = 0; rep < std::abs(twists); ++rep) {
    for (int round = 0; round < k; ++round) {
      for (int p = 0; p + 1 < k; ++p) {
        int u = perm[p], v = perm[p + 1];
        int sign = tsign * strands[u].direction * strands[v].direction;
        // Right-handed twist: the strand coming from the lower position
        // crosses over.
        Strand su = tsign > 0 ? Strand::over : Strand::under;
        Strand sv = tsign > 0 ? Strand::under : Strand::over;
        pending[u].push_back({id, su, sign});
        pending[v].push_back({id, sv, sign});
        std::swap(perm[p], perm[p + 1]);
        ++id;
      }
    }
  }
  // Insert each strand's passages at its site; reversed strands see the
  // braid in the opposite order.  Insert at higher positions first so that
  // indices stay valid when several strands share a component.
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (strands[a].comp != strands[b].comp) return strands[a].comp < strands[b].comp;
    return strands[a].pos > strands[b].pos;
  });
  for (int i : order) {
    auto block = pending[i];
    if (strands[i].direction < 0) std::reverse(block.begin(), block.end());
    detail::insert_passages(r.at(strands[i].comp), strands[i].pos, block);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Encircling loops

struct LoopTarget {
  std::string comp;
  int pos;       // insertion index
  int pass_dir;  // +1 or -1: direction of this strand through the loop disk
};

// A small unknotted loop around the listed strands: it runs over all of them
// and back under all of them, linking each strand once.  lk(loop, C) is the
// sum of pass_dir over C's listed strands, times `orientation`.
inline Diagram insert_encircling_loop(const Diagram& d, const std::string& label, int framing,
                                      int orientation, const std::vector<LoopTarget>& targets) {
  Diagram r = d;
  int id = r.num_crossings();
  int m = static_cast<int>(targets.size());
  Component loop;
  loop.label = label;
  loop.framing = framing;
  for (int s = 0; s < m; ++s)
    loop.passages.push_back({id + s, Strand::over, orientation * targets[s].pass_dir});
  for (int s = m - 1; s >= 0; --s)
    loop.passages.push_back({id + m + s, Strand::under, orientation * targets[s].pass_dir});
  // Insert the [under front, over back] pair into each target strand.
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (targets[a].comp != targets[b].comp) return targets[a].comp < targets[b].comp;
    return targets[a].pos > targets[b].pos;
  });
  for (int s : order) {
    int sign = orientation * targets[s].pass_dir;
    std::vector<Passage> block{{id + s, Strand::under, sign}, {id + m + s, Strand::over, sign}};
    if (targets[s].pass_dir < 0) std::reverse(block.begin(), block.end());
    detail::insert_passages(r.at(targets[s].comp), targets[s].pos, block);
  }
  r.components.push_back(std::move(loop));
  return r;
}

// A loop and its push-off with `twist` full twists between them (the twisted
// band of a clasp): lk(loop, pushoff) = twist.
inline Diagram insert_encircling_pair(const Diagram& d, const std::string& label,
                                      const std::string& pushoff_label, int orientation,
                                      const std::vector<LoopTarget>& targets, int twist) {
  Diagram r = insert_encircling_loop(d, label, 0, orientation, targets);
  // The push-off runs parallel just inside the first loop: its passage pair
  // lands between the pair the first loop inserted (the strand reads
  // [under front, under front', over back', over back]).  Each target's site
  // therefore shifts by 1, plus 2 for every earlier target on the same
  // component.
  std::vector<LoopTarget> shifted = targets;
  for (size_t i = 0; i < targets.size(); ++i) {
    int bump = 1;
    for (size_t j = 0; j < targets.size(); ++j)
      if (j != i && targets[j].comp == targets[i].comp && targets[j].pos < targets[i].pos)
        bump += 2;
    shifted[i].pos = targets[i].pos + bump;
  }
  r = insert_encircling_loop(r, pushoff_label, 0, orientation, shifted);
  if (twist != 0) {
    // Twist the two loop strands around each other between the front and
    // back runs (i.e. after the over-run of each loop).
    int m = static_cast<int>(targets.size());
    StrandRef a{label, m, 1};
    StrandRef b{pushoff_label, m, 1};
    r = insert_full_twists(r, {a, b}, twist);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Doubling constructors

namespace detail {

// Untwisted k-cable: blackboard cable plus -writhe full twists, so all
// pairwise linking numbers among the copies vanish.
inline Diagram untwisted_cable(const Diagram& d, const std::string& label, int k,
                               std::vector<std::string>* out_labels) {
  int w = writhe(d, label);
  Diagram r = cable_component(d, label, k, out_labels);
  if (w != 0 && k >= 2) {
    std::vector<StrandRef> strands;
    for (const auto& l : *out_labels)
      strands.push_back({l, static_cast<int>(r.at(l).passages.size()), 1});
    r = insert_full_twists(r, strands, -w);
  }
  return r;
}

}  // namespace detail

// k untwisted 0-framed parallel copies; k = 1 is the identity.
inline Diagram parallel_copies(const Diagram& d, const std::string& label, int k) {
  if (k < 1) throw std::invalid_argument("parallel_copies: k must be positive");
  if (k == 1) return d;
  std::vector<std::string> labels;
  return detail::untwisted_cable(d, label, k, &labels);
}

// Merge an outgoing strand and an already-reversed returning strand into one
// component through a clasp: two equal-sign crossings between the two cable
// strands.  The merged component lands at the outgoing strand's position.
inline Diagram clasp_merge(const Diagram& d, const std::string& fwd, const std::string& rev,
                           const std::string& out_label, int clasp_sign, int framing = 0) {
  if (clasp_sign != 1 && clasp_sign != -1)
    throw std::invalid_argument("clasp_merge: clasp sign must be +-1");
  int id = d.num_crossings();
  int c1 = id, c2 = id + 1;
  Component merged;
  merged.label = out_label;
  merged.framing = framing;
  const auto& p0 = d.at(fwd).passages;
  const auto& p1 = d.at(rev).passages;
  merged.passages.insert(merged.passages.end(), p0.begin(), p0.end());
  merged.passages.push_back({c1, Strand::over, clasp_sign});
  merged.passages.push_back({c2, Strand::under, clasp_sign});
  merged.passages.insert(merged.passages.end(), p1.begin(), p1.end());
  merged.passages.push_back({c2, Strand::over, clasp_sign});
  merged.passages.push_back({c1, Strand::under, clasp_sign});

  Diagram out;
  for (const auto& c : d.components) {
    if (c.label == fwd)
      out.components.push_back(merged);
    else if (c.label != rev)
      out.components.push_back(c);
  }
  renumber_crossings(out);
  return out;
}

// Join two components end-to-end (a band sum along the parallel cable
// region); the merged component keeps `first`'s position.
inline Diagram band_merge(const Diagram& d, const std::string& first, const std::string& second,
                          const std::string& out_label, int framing = 0) {
  Component merged;
  merged.label = out_label;
  merged.framing = framing;
  const auto& p0 = d.at(first).passages;
  const auto& p1 = d.at(second).passages;
  merged.passages.insert(merged.passages.end(), p0.begin(), p0.end());
  merged.passages.insert(merged.passages.end(), p1.begin(), p1.end());
  Diagram out;
  for (const auto& c : d.components) {
    if (c.label == first)
      out.components.push_back(merged);
    else if (c.label != second)
      out.components.push_back(c);
  }
  renumber_crossings(out);
  return out;
}

// Untwisted Whitehead double with one clasp of the given sign.  The
// component is replaced; the new component has framing 0 and linking number
// zero with everything else.
inline Diagram whitehead_double(const Diagram& d, const std::string& label, int clasp_sign) {
  std::vector<std::string> copies;
  Diagram r = detail::untwisted_cable(d, label, 2, &copies);
  r = reverse_component(r, copies[1]);
  return clasp_merge(r, copies[0], copies[1], label, clasp_sign);
}

// Untwisted Bing double: the component is replaced by two clasped 0-framed
// circles in its cable annulus (the two non-core components of the Borromean
// rings, viewed in the complementary solid torus of the third).  Built on a
// 4-strand cable [X out, Y back, X back, Y out] with the hook tangle; the
// over/under assignment below is calibrated so that Bing-doubling one Hopf
// component reproduces the Borromean rings.
inline Diagram bing_double(const Diagram& d, const std::string& label) {
  std::vector<std::string> copies;
  Diagram r = detail::untwisted_cable(d, label, 4, &copies);
  r = reverse_component(r, copies[1]);
  r = reverse_component(r, copies[2]);
  int id = r.num_crossings();
  int c1 = id, c2 = id + 1, c3 = id + 2, c4 = id + 3;
  // Hook crossings: c1 = (X return) x (Y bend), c2 = (X bend) x (Y strand),
  // c3 = (X return) x (Y wall cap), c4 = (X wall cap) x (Y strand).
  // Calibrated bits: Y over at c1 and c3, X over at c2 and c4; signs then
  // come from the strand directions: -1, -1, +1, +1.
  Component x, y;
  x.label = label + "a";
  y.label = label + "b";
  x.framing = y.framing = 0;
  const auto& s0 = r.at(copies[0]).passages;  // X outgoing
  const auto& s1 = r.at(copies[1]).passages;  // Y return (reversed)
  const auto& s2 = r.at(copies[2]).passages;  // X return (reversed)
  const auto& s3 = r.at(copies[3]).passages;  // Y outgoing

  x.passages.insert(x.passages.end(), s0.begin(), s0.end());
  x.passages.push_back({c2, Strand::over, -1});
  x.passages.push_back({c1, Strand::under, -1});
  x.passages.push_back({c3, Strand::under, 1});
  x.passages.insert(x.passages.end(), s2.begin(), s2.end());
  x.passages.push_back({c4, Strand::over, 1});

  y.passages.push_back({c4, Strand::under, 1});
  y.passages.push_back({c2, Strand::under, -1});
  y.passages.push_back({c1, Strand::over, -1});
  y.passages.insert(y.passages.end(), s3.begin(), s3.end());
  y.passages.push_back({c3, Strand::over, 1});
  y.passages.insert(y.passages.end(), s1.begin(), s1.end());

  Diagram out;
  for (const auto& c : r.components) {
    if (c.label == copies[0]) {
      out.components.push_back(x);
      out.components.push_back(y);
      continue;
    }
    bool is_copy = false;
    for (const auto& l : copies) is_copy |= (c.label == l);
    if (!is_copy) out.components.push_back(c);
  }
  renumber_crossings(out);
  return out;
}

// ---------------------------------------------------------------------------
// Primitives

inline Diagram build_primitive(const PatternSpec& spec) {
  if (spec.name == "unknot") {
    Diagram d;
    d.components.push_back({"L1", 0, {}});
    return d;
  }
  if (spec.name == "hopf") {
    // Closure of sigma_1^{+-2}.
    return braid_closure(2, {spec.clasp_sign > 0 ? 1 : -1, spec.clasp_sign > 0 ? 1 : -1});
  }
  if (spec.name == "borromean") {
    return braid_closure(3, {1, -2, 1, -2, 1, -2});
  }
  if (spec.name == "whitehead_link") {
    // Untwisted double of one Hopf component, with two compensating kinks so
    // both components of the standard diagram have writhe zero (8 crossings).
    Diagram d = build_primitive({"hopf", 1, 1});
    d = whitehead_double(d, "L2", spec.clasp_sign);
    d = r1_insert(d, "L2", 0, -spec.clasp_sign, true);
    d = r1_insert(d, "L2", 0, -spec.clasp_sign, false);
    return d;
  }
  throw std::invalid_argument("build_primitive: unsupported pattern " + spec.name);
}

// ---------------------------------------------------------------------------
// Pattern composition

struct PatternStage {
  PatternSpec spec;
  // Optional per-component overrides: clasp sign for wh_double, copy count
  // for parallel.  Components not listed use the spec defaults.
  std::map<std::string, int> per_component;
};

// Apply stages left-to-right from the innermost (base) outward; each stage
// hits every component present at that point.
inline Diagram compose_pattern(const std::vector<PatternStage>& chain, const Diagram& base) {
  Diagram d = base;
  for (const auto& stage : chain) {
    std::vector<std::string> labels;
    for (const auto& c : d.components) labels.push_back(c.label);
    for (const auto& l : labels) {
      auto it = stage.per_component.find(l);
      if (stage.spec.name == "wh_double") {
        int sign = it != stage.per_component.end() ? it->second : stage.spec.clasp_sign;
        d = whitehead_double(d, l, sign);
      } else if (stage.spec.name == "bing_double") {
        d = bing_double(d, l);
      } else if (stage.spec.name == "parallel") {
        int k = it != stage.per_component.end() ? it->second : stage.spec.copies;
        d = parallel_copies(d, l, k);
      } else {
        throw std::invalid_argument("compose_pattern: unsupported stage " + stage.spec.name);
      }
    }
  }
  return d;
}

}  // namespace linklab
