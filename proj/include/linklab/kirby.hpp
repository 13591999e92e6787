#pragma once

// Framed-link surgery moves: handle slides and blow-ups/blow-downs, with
// Smith-form homology of the surgered 3-manifold as the invariant-level
// verification.  Framings are the stored surgery coefficients.

#include "linklab/satellites.hpp"

namespace linklab {

struct SurgeryPresentation {
  Diagram diagram;
  std::set<std::string> twist_surgery;  // marked +-1 curves
};

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithResult {
  std::vector<std::vector<long long>> d, p, q;  // p * m * q = d, p/q unimodular
};

inline SmithResult smith_normal_form(std::vector<std::vector<long long>> m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  SmithResult r;
  r.p.assign(rows, std::vector<long long>(rows, 0));
  r.q.assign(cols, std::vector<long long>(cols, 0));
  for (size_t i = 0; i < rows; ++i) r.p[i][i] = 1;
  for (size_t i = 0; i < cols; ++i) r.q[i][i] = 1;

  auto swap_rows = [&](size_t a, size_t b) {
    std::swap(m[a], m[b]);
    std::swap(r.p[a], r.p[b]);
  };
  auto swap_cols = [&](size_t a, size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
    for (auto& row : r.q) std::swap(row[a], row[b]);
  };
  auto add_row = [&](size_t dst, size_t src, long long c) {  // row dst += c * row src
    for (size_t j = 0; j < cols; ++j) m[dst][j] += c * m[src][j];
    for (size_t j = 0; j < rows; ++j) r.p[dst][j] += c * r.p[src][j];
  };
  auto add_col = [&](size_t dst, size_t src, long long c) {
    for (size_t i = 0; i < rows; ++i) m[i][dst] += c * m[i][src];
    for (size_t i = 0; i < cols; ++i) r.q[i][dst] += c * r.q[i][src];
  };
  auto negate_row = [&](size_t i) {
    for (auto& x : m[i]) x = -x;
    for (auto& x : r.p[i]) x = -x;
  };

  size_t t = 0;
  while (t < rows && t < cols) {
    // Find a pivot: smallest nonzero absolute value in the remaining block.
    size_t pi = t, pj = t;
    long long best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
          best = std::llabs(m[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i) {
      long long c = m[i][t] / m[t][t];
      if (c != 0) add_row(i, t, -c);
      if (m[i][t] != 0) clean = false;
    }
    for (size_t j = t + 1; j < cols; ++j) {
      long long c = m[t][j] / m[t][t];
      if (c != 0) add_col(j, t, -c);
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // remainders left; repeat with a smaller pivot
    // Divisibility: d_t must divide every later entry.
    bool fixed = false;
    for (size_t i = t + 1; i < rows && !fixed; ++i)
      for (size_t j = t + 1; j < cols && !fixed; ++j)
        if (m[i][j] % m[t][t] != 0) {
          add_row(t, i, 1);
          fixed = true;
        }
    if (fixed) continue;
    if (m[t][t] < 0) negate_row(t);
    ++t;
  }
  r.d = std::move(m);
  return r;
}

// ---------------------------------------------------------------------------
// First homology of the surgered manifold

struct H1Surgery {
  std::vector<long long> torsion;  // invariant factors > 1, in divisibility order
  int free_rank = 0;
  friend bool operator==(const H1Surgery&, const H1Surgery&) = default;
};

inline H1Surgery h1_surgery(const SurgeryPresentation& sp) {
  auto lk = linking_matrix(sp.diagram);
  std::vector<std::vector<long long>> m(lk.size(), std::vector<long long>(lk.size()));
  for (size_t i = 0; i < lk.size(); ++i)
    for (size_t j = 0; j < lk.size(); ++j) m[i][j] = lk[i][j];
  auto snf = smith_normal_form(m);
  H1Surgery h;
  for (size_t i = 0; i < lk.size(); ++i) {
    long long d = snf.d[i][i];
    if (d == 0)
      ++h.free_rank;
    else if (d != 1)
      h.torsion.push_back(d);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Handle slides

// Replace component i by its band sum with a framing-j push-off of j.  The
// new framing is n_i + n_j + 2 lk(i,j) and the linking matrix transforms by
// the elementary congruence E Lambda E^T.
inline SurgeryPresentation handle_slide(const SurgeryPresentation& sp, const std::string& slide,
                                        const std::string& over, int band_pos_i = 0,
                                        int band_pos_push = 0) {
  if (slide == over) throw std::invalid_argument("handle_slide: i must differ from j");
  const Diagram& d = sp.diagram;
  int n_i = d.at(slide).framing;
  int n_j = d.at(over).framing;
  int lk_ij = linking_number(d, slide, over);
  int w = writhe(d, over);

  // Framed push-off of j: blackboard parallel corrected to self-linking n_j.
  std::vector<std::string> copies;
  Diagram r = cable_component(d, over, 2, &copies, {over, over + "~push"});
  r.at(over).framing = n_j;
  if (n_j - w != 0) {
    StrandRef s0{copies[0], static_cast<int>(r.at(copies[0]).passages.size()), 1};
    StrandRef s1{copies[1], static_cast<int>(r.at(copies[1]).passages.size()), 1};
    r = insert_full_twists(r, {s0, s1}, n_j - w);
  }

  // Band the push-off into component i at the chosen positions.
  auto& ci = r.at(slide);
  auto& cp = r.at(copies[1]);
  int ni = static_cast<int>(ci.passages.size());
  int np = static_cast<int>(cp.passages.size());
  if (band_pos_i < 0 || band_pos_i > ni || band_pos_push < 0 || band_pos_push > np)
    throw std::invalid_argument("handle_slide: invalid band site");
  std::vector<Passage> merged;
  merged.insert(merged.end(), ci.passages.begin() + band_pos_i, ci.passages.end());
  merged.insert(merged.end(), ci.passages.begin(), ci.passages.begin() + band_pos_i);
  merged.insert(merged.end(), cp.passages.begin() + band_pos_push, cp.passages.end());
  merged.insert(merged.end(), cp.passages.begin(), cp.passages.begin() + band_pos_push);

  SurgeryPresentation out;
  out.twist_surgery = sp.twist_surgery;
  for (const auto& c : r.components) {
    if (c.label == copies[1]) continue;
    if (c.label == slide) {
      Component nc;
      nc.label = slide;
      nc.framing = n_i + n_j + 2 * lk_ij;
      nc.passages = merged;
      out.diagram.components.push_back(std::move(nc));
    } else {
      out.diagram.components.push_back(c);
    }
  }
  renumber_crossings(out.diagram);
  return out;
}

// ---------------------------------------------------------------------------
// Blow-ups and blow-downs

struct BlowSite {
  std::string unknot_label;
  int sign = -1;  // framing of the +-1 unknot
  std::vector<LoopTarget> targets;
};

// Blow up: insert a +-1-framed unknot around the listed strands together
// with a matching full twist just past it, leaving the surgered manifold
// unchanged.  Framings update by the inverse of the blow-down rule.
inline SurgeryPresentation blow_up(const SurgeryPresentation& sp, const BlowSite& site) {
  if (site.sign != 1 && site.sign != -1) throw std::invalid_argument("blow: sign must be +-1");
  SurgeryPresentation out = sp;
  Diagram d = insert_encircling_loop(sp.diagram, site.unknot_label, site.sign, 1, site.targets);
  if (!site.targets.empty()) {
    // After the loop insertion each target's [under, over] pair sits at
    // pos + 2 * (number of earlier targets on the same component); the twist
    // block goes immediately after the pair.
    std::vector<StrandRef> strands;
    for (size_t i = 0; i < site.targets.size(); ++i) {
      int bump = 2;
      for (size_t j = 0; j < site.targets.size(); ++j)
        if (j != i && site.targets[j].comp == site.targets[i].comp &&
            (site.targets[j].pos < site.targets[i].pos ||
             (site.targets[j].pos == site.targets[i].pos && j < i)))
          bump += 2;
      strands.push_back(
          {site.targets[i].comp, site.targets[i].pos + bump, site.targets[i].pass_dir});
    }
    d = insert_full_twists(d, strands, site.sign);
    std::map<std::string, int> winding;
    for (const auto& t : site.targets) winding[t.comp] += t.pass_dir;
    for (auto& [label, wind] : winding) d.at(label).framing += site.sign * wind * wind;
  }
  out.diagram = std::move(d);
  out.twist_surgery.insert(site.unknot_label);
  return out;
}

// Structural check + inverse data for a blow-down site: the component must be
// an encircling +-1-framed unknot in the pattern insert_encircling_loop
// produces.
namespace detail {

struct EncirclingShape {
  std::vector<LoopTarget> targets;  // positions refer to the diagram *after* removal
  bool ok = false;
};

inline EncirclingShape analyze_encircling_unknot(const Diagram& d, const std::string& label) {
  EncirclingShape shape;
  const auto& u = d.at(label);
  int n = static_cast<int>(u.passages.size());
  if (n % 2 != 0) return shape;
  int m = n / 2;
  for (int t = 0; t < m; ++t)
    if (u.passages[t].strand != Strand::over || u.passages[n - 1 - t].strand != Strand::under ||
        u.passages[t].sign != u.passages[n - 1 - t].sign)
      return shape;
  auto table = crossing_table(d);
  int u_idx = d.component_index(label);
  std::map<int, std::vector<std::pair<int, int>>> removed_per_comp;  // comp -> positions
  for (int t = 0; t < m; ++t) {
    int x = u.passages[t].crossing;          // loop over
    int y = u.passages[n - 1 - t].crossing;  // loop under, same strand
    PassageRef sx = table[x].under;
    PassageRef sy = table[y].over;
    if (sx.comp == u_idx || sy.comp == u_idx) return shape;
    if (sx.comp != sy.comp) return shape;
    const auto& comp = d.components[sx.comp];
    int nc = static_cast<int>(comp.passages.size());
    // The strand passes [under x, over y] consecutively in one direction or
    // the other.
    int dir;
    if ((sx.pos + 1) % nc == sy.pos)
      dir = 1;
    else if ((sy.pos + 1) % nc == sx.pos)
      dir = -1;
    else
      return shape;
    shape.targets.push_back({comp.label, std::min(sx.pos, sy.pos), dir});
    removed_per_comp[sx.comp].push_back({std::min(sx.pos, sy.pos), t});
  }
  // Adjust target positions to the post-removal indexing: each earlier
  // removed pair on the same component shifts the site down by 2.
  for (auto& [comp, sites] : removed_per_comp) {
    std::sort(sites.begin(), sites.end());
    int shift = 0;
    for (auto& [pos, t] : sites) {
      shape.targets[t].pos = pos - shift;
      shift += 2;
    }
  }
  shape.ok = true;
  return shape;
}

}  // namespace detail

// Blow down a +-1-framed encircling unknot: remove it, insert the opposite
// full twist on the encircled strands, and update framings by
// n_k -> n_k - sign * lk(k, U)^2.
inline SurgeryPresentation blow_down(const SurgeryPresentation& sp, const std::string& label) {
  const Diagram& d = sp.diagram;
  const auto& u = d.at(label);
  if (u.framing != 1 && u.framing != -1)
    throw std::invalid_argument("blow_down: component is not +-1-framed");
  auto shape = detail::analyze_encircling_unknot(d, label);
  if (!shape.ok)
    throw std::invalid_argument("blow_down: component is not an encircling unknot");
  int sign = u.framing;
  auto lk = linking_matrix(d);
  int u_idx = d.component_index(label);

  Diagram r = delete_components(d, {label});
  if (!shape.targets.empty()) {
    std::vector<StrandRef> strands;
    for (const auto& t : shape.targets) strands.push_back({t.comp, t.pos, t.pass_dir});
    r = insert_full_twists(r, strands, -sign);
  }
  for (auto& c : r.components) {
    int link = lk[d.component_index(c.label)][u_idx];
    c.framing -= sign * link * link;
  }
  r = simplify_reidemeister(r);
  SurgeryPresentation out;
  out.diagram = std::move(r);
  out.twist_surgery = sp.twist_surgery;
  out.twist_surgery.erase(label);
  return out;
}

inline SurgeryPresentation blow(const SurgeryPresentation& sp, bool up, const BlowSite& site) {
  return up ? blow_up(sp, site) : blow_down(sp, site.unknot_label);
}

// ---------------------------------------------------------------------------
// The corrected surgery-identity configurations

// A 0-framed coil passing twice, in the same direction, through a -1-framed
// unknot (the post-cancellation configuration of the corrected identity).
// Blowing down the -1 curve puts one right-handed full twist on the coil and
// raises its framing by lk(K,U)^2 = 4.
inline SurgeryPresentation twist_coil_configuration(int coils = 1, int sign = -1) {
  Diagram d;
  std::vector<LoopTarget> targets;
  for (int c = 0; c < coils; ++c) {
    std::string label = "K" + std::to_string(c + 1);
    Component k;
    k.label = label;
    k.framing = 0;
    int x = d.num_crossings();
    k.passages.push_back({x, Strand::under, 1});
    k.passages.push_back({x, Strand::over, 1});
    d.components.push_back(std::move(k));
    targets.push_back({label, 0, 1});
    targets.push_back({label, 1, 1});
  }
  d = insert_encircling_loop(d, "U", sign, 1, targets);
  SurgeryPresentation sp;
  sp.diagram = std::move(d);
  sp.twist_surgery.insert("U");
  return sp;
}

// Both sides of the genus-2 identity, completed to closed surgery
// presentations over a chosen embedding of the handlebody (its two handle
// cores become 0-framed companion curves).  The left side carries the -1
// twist-surgery curve; the right side is its blow-down.
struct IdentityScenario {
  SurgeryPresentation lhs, rhs;
};

inline IdentityScenario surgery_identity_scenario(const std::string& embedding) {
  Diagram cores;
  if (embedding == "unlink") {
    cores.components.push_back({"G1", 0, {}});
    cores.components.push_back({"G2", 0, {}});
  } else if (embedding == "hopf") {
    cores = build_primitive({"hopf", 1, 1});
    cores = relabel_component(cores, "L1", "G1");
    cores = relabel_component(cores, "L2", "G2");
  } else if (embedding == "whitehead") {
    cores = build_primitive({"whitehead_link", 1, 1});
    cores = relabel_component(cores, "L1", "G1");
    cores = relabel_component(cores, "L2", "G2");
  } else {
    throw std::invalid_argument("surgery_identity_scenario: unknown embedding " + embedding);
  }
  // K follows both handle cores once: band the parallels of G1 and G2.
  Diagram d = parallel_copies(cores, "G1", 2);
  d = parallel_copies(d, "G2", 2);
  d = relabel_component(d, "G1^0", "G1");
  d = relabel_component(d, "G2^0", "G2");
  Component k;
  k.label = "K";
  k.framing = 0;
  auto& g1p = d.at("G1^1");
  auto& g2p = d.at("G2^1");
  k.passages = g1p.passages;
  int junction = static_cast<int>(k.passages.size());
  k.passages.insert(k.passages.end(), g2p.passages.begin(), g2p.passages.end());
  Diagram merged;
  for (const auto& c : d.components) {
    if (c.label == "G1^1") {
      merged.components.push_back(k);
    } else if (c.label != "G2^1") {
      merged.components.push_back(c);
    }
  }
  renumber_crossings(merged);
  // The -1 curve encircles the two strands of K at the junction.
  merged = insert_encircling_loop(merged, "U", -1, 1,
                                  {{"K", 0, 1}, {"K", junction, 1}});
  IdentityScenario sc;
  sc.lhs.diagram = merged;
  sc.lhs.twist_surgery.insert("U");
  sc.rhs = blow_down(sc.lhs, "U");
  return sc;
}

// Genus-2n version: n coils through one -1-framed curve.
inline SurgeryPresentation higher_genus_configuration(int n) {
  if (n < 1) throw std::invalid_argument("higher_genus_configuration: n >= 1");
  return twist_coil_configuration(n, -1);
}

}  // namespace linklab
