#pragma once

// Wirtinger presentations, 0-framed longitudes, and Milnor mu-bar invariants
// with non-repeating indices.  Longitudes are read off the Gauss code by the
// Chen-Milnor procedure: walking a component, each under-passage contributes
// the over-arc's meridian to the power of the crossing sign, and every arc
// meridian is a conjugate of its component's base meridian.  The rewriting
// into base meridians is done on truncated Magnus series directly, memoized
// per arc, which keeps the work polynomial in the truncation degree.
//
// Convention calibration (fixed jointly): crossing sign +1 is a right-handed
// crossing, the Wirtinger relation at a sign-s crossing is
// out = over^-s . in . over^s, and longitudes collect over^s.  These choices
// make mu_bar(1,2) of the positive Hopf link equal +1, make mu_bar(i,j)
// agree with the linking matrix everywhere, and vanish on trivial braid
// words (the decisive consistency check for mixed-sign diagrams).

#include <cstdlib>
#include <numeric>
#include <optional>

#include "linklab/moves.hpp"
#include "linklab/satellites.hpp"
#include "linklab/words.hpp"

namespace linklab {

// ---------------------------------------------------------------------------
// Wirtinger data

struct WirtingerRelation {
  int crossing;
  int arc_in, arc_out, arc_over;
  int sign;
};

struct WirtingerData {
  // Arc ids are global, grouped by component: arcs_of[c] lists component c's
  // arcs in traversal order starting with the base arc.
  std::vector<std::vector<int>> arcs_of;
  std::vector<int> component_of_arc;
  std::vector<int> base_arc;               // one per component
  std::vector<WirtingerRelation> relations;  // one per crossing
  std::vector<int> arc_of_passage_flat;    // indexed by (comp, pos) flattened
  std::vector<int> passage_offset;         // per component
  int num_arcs = 0;

  int arc_at(int comp, int pos) const { return arc_of_passage_flat[passage_offset[comp] + pos]; }
};

// One generator per arc (maximal run ending at each under-passage), one
// relation per crossing.
inline WirtingerData wirtinger_presentation(const Diagram& d) {
  require_valid(d);
  WirtingerData w;
  size_t nc = d.components.size();
  w.arcs_of.resize(nc);
  w.base_arc.resize(nc, -1);
  w.passage_offset.resize(nc, 0);
  size_t total = 0;
  for (size_t c = 0; c < nc; ++c) {
    w.passage_offset[c] = static_cast<int>(total);
    total += d.components[c].passages.size();
  }
  w.arc_of_passage_flat.resize(total, -1);

  for (size_t c = 0; c < nc; ++c) {
    const auto& ps = d.components[c].passages;
    int n = static_cast<int>(ps.size());
    // Arc boundaries sit *after* each under-passage.  The arc containing the
    // basepoint passage (index 0) is the base arc.
    std::vector<int> unders;
    for (int i = 0; i < n; ++i)
      if (ps[i].strand == Strand::under) unders.push_back(i);
    if (unders.empty()) {
      int arc = w.num_arcs++;
      w.arcs_of[c].push_back(arc);
      w.component_of_arc.push_back(static_cast<int>(c));
      w.base_arc[c] = arc;
      for (int i = 0; i < n; ++i) w.arc_of_passage_flat[w.passage_offset[c] + i] = arc;
      continue;
    }
    // Arc k runs from just after unders[k-1] through unders[k] (cyclically);
    // allocate arcs in traversal order starting at the arc containing index 0.
    int m = static_cast<int>(unders.size());
    std::vector<int> arc_ids(m);
    for (int k = 0; k < m; ++k) arc_ids[k] = w.num_arcs++;
    for (int k = 0; k < m; ++k) {
      w.component_of_arc.push_back(static_cast<int>(c));
      w.arcs_of[c].push_back(arc_ids[k]);
    }
    // Passage index i belongs to the arc whose terminal under-passage is the
    // first under at position >= i (cyclically).
    for (int i = 0; i < n; ++i) {
      int k = static_cast<int>(std::lower_bound(unders.begin(), unders.end(), i) - unders.begin());
      if (k == m) k = 0;  // wraps to the arc ending at the first under
      w.arc_of_passage_flat[w.passage_offset[c] + i] = arc_ids[k];
    }
    w.base_arc[c] = w.arc_at(static_cast<int>(c), 0);
  }

  auto table = crossing_table(d);
  for (int x = 0; x < static_cast<int>(table.size()); ++x) {
    const auto& e = table[x];
    const auto& up = d.components[e.under.comp].passages[e.under.pos];
    int arc_in = w.arc_at(e.under.comp, e.under.pos);
    int n = static_cast<int>(d.components[e.under.comp].passages.size());
    // The outgoing arc starts just after the under-passage.
    int next = (e.under.pos + 1) % n;
    int arc_out = w.arc_at(e.under.comp, next);
    int arc_over = w.arc_at(e.over.comp, e.over.pos);
    w.relations.push_back({x, arc_in, arc_out, arc_over, up.sign});
  }
  return w;
}

// ---------------------------------------------------------------------------
// Longitudes

namespace detail {

// Magnus series of every arc meridian in the based meridian variables
// X_1..X_n, exact through max_degree.  Iterative refinement: meridians exact
// to degree t give conjugators exact to degree t and meridians exact to
// degree t+1.
inline std::vector<MagnusSeries> arc_meridian_series(const Diagram& d, const WirtingerData& w,
                                                     int max_degree, bool reduced) {
  int nv = static_cast<int>(d.components.size());
  std::vector<MagnusSeries> cur;
  cur.reserve(w.num_arcs);
  for (int a = 0; a < w.num_arcs; ++a) {
    MagnusSeries s = MagnusSeries::one(nv, max_degree, reduced);
    s.add(monomial_key({w.component_of_arc[a] + 1}), 1);
    cur.push_back(std::move(s));
  }
  if (max_degree <= 1) return cur;

  // Under-passages of each component in traversal order, with over-arc and
  // sign.
  struct Step {
    int over_arc, sign, arc_after;
  };
  std::vector<std::vector<Step>> walk(d.components.size());
  auto table = crossing_table(d);
  for (size_t c = 0; c < d.components.size(); ++c) {
    const auto& ps = d.components[c].passages;
    for (size_t i = 0; i < ps.size(); ++i) {
      if (ps[i].strand != Strand::under) continue;
      const auto& e = table[ps[i].crossing];
      int over_arc = w.arc_at(e.over.comp, e.over.pos);
      int next = static_cast<int>((i + 1) % ps.size());
      walk[c].push_back({over_arc, ps[i].sign, w.arc_at(static_cast<int>(c), next)});
    }
  }

  for (int round = 1; round < max_degree; ++round) {
    std::vector<MagnusSeries> next = cur;
    for (size_t c = 0; c < d.components.size(); ++c) {
      // m(arc_{t+1}) = o^-e m(arc_t) o^e, so the conjugator grows on the
      // left: W_{t+1} = o^-e W_t.
      MagnusSeries conj = MagnusSeries::one(nv, max_degree, reduced);
      MagnusSeries base = MagnusSeries::one(nv, max_degree, reduced);
      base.add(monomial_key({static_cast<int>(c) + 1}), 1);
      for (const auto& step : walk[c]) {
        MagnusSeries over = cur[step.over_arc];
        conj = series_multiply(step.sign > 0 ? series_inverse(over) : over, conj);
        next[step.arc_after] =
            series_multiply(series_multiply(conj, base), series_inverse(conj));
      }
      next[w.base_arc[c]] = base;  // the base meridian is the base arc's meridian
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

// Magnus series of the 0-framed longitude of one component, in based meridian
// variables, exact through max_degree.
inline MagnusSeries longitude_series(const Diagram& d, const std::string& label, int max_degree,
                                     bool reduced) {
  auto w = wirtinger_presentation(d);
  auto arcs = detail::arc_meridian_series(d, w, max_degree, reduced);
  int nv = static_cast<int>(d.components.size());
  int c = d.component_index(label);
  auto table = crossing_table(d);
  MagnusSeries ell = MagnusSeries::one(nv, max_degree, reduced);
  const auto& ps = d.components[c].passages;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].strand != Strand::under) continue;
    const auto& e = table[ps[i].crossing];
    const MagnusSeries& over = arcs[w.arc_at(e.over.comp, e.over.pos)];
    ell = series_multiply(ell, ps[i].sign > 0 ? over : series_inverse(over));
  }
  MagnusSeries base_pow =
      letter_series(c + 1, -writhe(d, label), nv, max_degree, reduced);
  return series_multiply(ell, base_pow);
}

// The 0-framed longitude as a word in based meridians (generator index =
// component index + 1).  Conjugators are expanded recursively with depth cap
// `truncation_degree`; the result is exact modulo commutators of depth
// greater than the cap, and exact outright on diagrams whose arcs resolve
// within the cap (all the worked primitives).
inline Word longitude(const Diagram& d, const std::string& label, int truncation_degree) {
  auto w = wirtinger_presentation(d);
  int c = d.component_index(label);
  auto table = crossing_table(d);

  // Conjugator word of each arc at a given depth, memoized.
  std::map<std::pair<int, int>, Word> memo;
  auto arc_word = [&](auto&& self, int arc, int depth) -> Word {
    int comp = w.component_of_arc[arc];
    Word base = Word::generator(comp + 1);
    if (depth <= 0 || arc == w.base_arc[comp]) return base;
    auto key = std::make_pair(arc, depth);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    // Walk from the base arc to this arc; the conjugator grows on the left.
    Word conj;
    const auto& ps = d.components[comp].passages;
    for (size_t i = 0; i < ps.size(); ++i) {
      if (ps[i].strand != Strand::under) continue;
      const auto& e = table[ps[i].crossing];
      int over_arc = w.arc_at(e.over.comp, e.over.pos);
      Word over = self(self, over_arc, depth - 1);
      conj = concat(ps[i].sign > 0 ? inverse(over) : over, conj);
      int next = static_cast<int>((i + 1) % ps.size());
      if (w.arc_at(comp, next) == arc) break;
    }
    Word result = concat(concat(conj, base), inverse(conj));
    memo[key] = result;
    return result;
  };

  Word ell;
  const auto& ps = d.components[c].passages;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].strand != Strand::under) continue;
    const auto& e = table[ps[i].crossing];
    int over_arc = w.arc_at(e.over.comp, e.over.pos);
    Word over = arc_word(arc_word, over_arc, truncation_degree);
    ell = concat(ell, ps[i].sign > 0 ? over : inverse(over));
  }
  return concat(ell, Word::generator(c + 1, -writhe(d, label)));
}

// ---------------------------------------------------------------------------
// mu-bar invariants

struct MuValue {
  std::vector<int> sequence;  // 1-based component indices, pairwise distinct
  long long value = 0;
  long long modulus = 0;  // 0 = well-defined over the integers
};

struct MilnorReport {
  int max_length = 0;
  std::vector<MuValue> values;  // length-then-lexicographic order
  std::optional<MuValue> first_nonvanishing;
};

inline int homotopy_component_cap() {
  if (const char* env = std::getenv("LINKLAB_MAX_COMPONENTS")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, kMaxMagnusVars);
  }
  return 10;
}

namespace detail {

// Raw Magnus coefficient mu(i_1..i_{k-1}; i_k) on the sub-diagram spanned by
// the sequence (Milnor invariants only depend on the sublink).  Sequences are
// 1-based into `d`'s component order.
struct MuContext {
  const Diagram& d;
  // Cache of longitude series per (component subset, last index, degree).
  std::map<std::tuple<std::vector<int>, int, int>, MagnusSeries> longitudes;
  std::map<std::vector<int>, long long> raw_cache;

  explicit MuContext(const Diagram& d_) : d(d_) {}

  long long raw(const std::vector<int>& seq) {
    auto it = raw_cache.find(seq);
    if (it != raw_cache.end()) return it->second;
    std::vector<int> support(seq);
    std::sort(support.begin(), support.end());
    int last = seq.back();
    int degree = static_cast<int>(seq.size()) - 1;
    auto key = std::make_tuple(support, last, degree);
    auto lit = longitudes.find(key);
    if (lit == longitudes.end()) {
      std::vector<std::string> keep;
      for (int i : support) keep.push_back(d.components[i - 1].label);
      Diagram sub = simplify_reidemeister(restrict_to(d, keep));
      // The series lives over the sub-diagram's compact variable numbering;
      // mu-bar only depends on the sublink, so nothing is lost.
      MagnusSeries ell =
          longitude_series(sub, d.components[last - 1].label, degree, /*reduced=*/true);
      lit = longitudes.emplace(key, std::move(ell)).first;
    }
    // Translate the monomial into sub-diagram indices.
    std::vector<int> mono;
    for (size_t t = 0; t + 1 < seq.size(); ++t) {
      int pos = static_cast<int>(std::lower_bound(support.begin(), support.end(), seq[t]) -
                                 support.begin());
      mono.push_back(pos + 1);
    }
    long long v = coefficient(lit->second, mono);
    raw_cache[seq] = v;
    return v;
  }

  // Spec bookkeeping: Delta(I) = gcd of |reduced values| over proper
  // subsequences (length >= 2) obtained by deleting indices; 0 if all vanish.
  long long delta(const std::vector<int>& seq) {
    long long g = 0;
    int n = static_cast<int>(seq.size());
    // Enumerate proper subsequences of length >= 2 preserving order.
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) sub.push_back(seq[i]);
      if (sub.size() < 2) continue;
      g = std::gcd(g, std::llabs(reduced_value(sub).first));
    }
    return g;
  }

  // (value reduced into [0, modulus) when modulus > 0, modulus)
  std::pair<long long, long long> reduced_value(const std::vector<int>& seq) {
    long long m = delta(seq);
    long long v = raw(seq);
    if (m > 0) v = ((v % m) + m) % m;
    return {v, m};
  }
};

}  // namespace detail

// mu-bar with distinct 1-based indices; returns (value, modulus).
inline std::pair<long long, long long> mu_bar(const Diagram& d, const std::vector<int>& seq) {
  if (seq.size() < 2) throw std::invalid_argument("mu_bar: need at least two indices");
  std::set<int> uniq(seq.begin(), seq.end());
  if (uniq.size() != seq.size()) throw std::invalid_argument("mu_bar: repeated indices rejected");
  for (int i : seq)
    if (i < 1 || i > static_cast<int>(d.components.size()))
      throw std::invalid_argument("mu_bar: index out of range");
  detail::MuContext ctx(d);
  return ctx.reduced_value(seq);
}

// All distinct-index sequences up to max_length, in increasing length; if a
// well-defined nonzero value appears, first_nonvanishing is set and longer
// lengths are skipped.
inline MilnorReport mu_table(const Diagram& d, int max_length) {
  int n = static_cast<int>(d.components.size());
  if (max_length > n) max_length = n;
  MilnorReport rep;
  rep.max_length = max_length;
  detail::MuContext ctx(d);
  for (int len = 2; len <= max_length; ++len) {
    std::vector<int> seq;
    bool found_this_length = false;
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(seq.size()) == len) {
        auto [v, m] = ctx.reduced_value(seq);
        rep.values.push_back({seq, v, m});
        if (v != 0 && !rep.first_nonvanishing) {
          rep.first_nonvanishing = rep.values.back();
          found_this_length = true;
        }
        return;
      }
      for (int i = 1; i <= n; ++i) {
        if (std::find(seq.begin(), seq.end(), i) != seq.end()) continue;
        seq.push_back(i);
        self(self);
        seq.pop_back();
      }
    };
    rec(rec);
    if (found_this_length) break;
  }
  return rep;
}

struct HomotopyVerdict {
  bool trivial = true;
  std::optional<MuValue> witness;
};

// Milnor's criterion: trivial under link homotopy iff every non-repeating
// mu-bar up to length = component count vanishes.  Implemented by scanning
// the reduced longitude series of each component on the simplified diagram,
// which reads off all distinct-index coefficients at once.
inline HomotopyVerdict is_homotopy_trivial(const Diagram& d) {
  int n = static_cast<int>(d.components.size());
  if (n > homotopy_component_cap())
    throw std::invalid_argument("is_homotopy_trivial: component count exceeds cap (set LINKLAB_MAX_COMPONENTS)");
  HomotopyVerdict verdict;
  if (n < 2) return verdict;
  Diagram simp = simplify_reidemeister(d);
  detail::MuContext ctx(simp);

  // Collect candidate nonzero coefficients from each component's longitude.
  std::vector<MuValue> candidates;
  for (int c = 1; c <= n; ++c) {
    MagnusSeries ell = longitude_series(simp, simp.components[c - 1].label, n - 1, true);
    for (const auto& [k, v] : ell.terms()) {
      if (k == 0 || v == 0) continue;
      auto idx = monomial_indices(k);
      bool uses_self = false;
      for (int i : idx) uses_self |= (i == c);
      if (uses_self) continue;  // repeated-index invariant, out of scope
      idx.push_back(c);
      candidates.push_back({idx, v, 0});
    }
  }
  // Order candidates by (length, sequence) and confirm against the modulus
  // bookkeeping; the first confirmed one is the witness.
  std::sort(candidates.begin(), candidates.end(), [](const MuValue& a, const MuValue& b) {
    if (a.sequence.size() != b.sequence.size()) return a.sequence.size() < b.sequence.size();
    return a.sequence < b.sequence;
  });
  for (const auto& cand : candidates) {
    auto [v, m] = ctx.reduced_value(cand.sequence);
    if (v != 0) {
      verdict.trivial = false;
      verdict.witness = MuValue{cand.sequence, v, m};
      return verdict;
    }
  }
  return verdict;
}

}  // namespace linklab
