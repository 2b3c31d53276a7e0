#include "qq/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>

#include "json.hpp"

namespace qq {

namespace {

struct UnionFind {
  std::vector<uint32_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(uint32_t x, uint32_t y) { parent[find(x)] = find(y); }
};

}  // namespace

PDCode parse_pd(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::SyntaxError, std::string("PD code is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) fail(Errc::SyntaxError, "PD code must be an array of 4-tuples");
  PDCode pd;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 4)
      fail(Errc::SyntaxError, "each PD crossing must be a 4-tuple");
    std::array<int, 4> x{};
    for (size_t i = 0; i < 4; ++i) {
      if (!t[i].is_number_integer()) fail(Errc::SyntaxError, "PD entries must be integers");
      x[i] = t[i].get<int>();
    }
    pd.tuples.push_back(x);
  }
  // Label sanity: labels 1..2n, each appearing exactly twice, and no label
  // twice in the same under slot (an edge terminates at one crossing only).
  size_t n = pd.tuples.size();
  int maxlab = static_cast<int>(2 * n);
  std::vector<int> count(2 * n + 1, 0), a_count(2 * n + 1, 0), c_count(2 * n + 1, 0);
  for (const auto& t : pd.tuples) {
    for (int lab : t) {
      if (lab < 1 || lab > maxlab)
        fail(Errc::LabelCountError,
             "edge label " + std::to_string(lab) + " outside 1.." + std::to_string(maxlab));
      ++count[lab];
    }
    ++a_count[t[0]];
    ++c_count[t[2]];
  }
  for (int lab = 1; lab <= maxlab; ++lab) {
    if (count[lab] != 2)
      fail(Errc::LabelCountError,
           "edge label " + std::to_string(lab) + " appears " + std::to_string(count[lab]) +
               " times (want 2)");
    if (a_count[lab] > 1 || c_count[lab] > 1)
      fail(Errc::LabelCountError,
           "edge label " + std::to_string(lab) + " repeats in an under-edge slot");
  }
  return pd;
}

namespace {

// Infer over-strand orientation and signs; labels increase along components,
// wrapping from a component's maximum back to its minimum.
Embedded pd_to_embedded(const PDCode& pd) {
  Embedded emb;
  size_t n = pd.tuples.size();
  emb.edge_count = static_cast<uint32_t>(2 * n);
  if (n == 0) {
    emb.free_loops = 1;  // "[]" denotes a crossingless unknot
    return emb;
  }
  std::vector<int> succ(2 * n + 1, 0), pred_count(2 * n + 1, 0);
  auto try_succ = [&](int from, int to) {
    if (succ[from] != 0) return false;
    succ[from] = to;
    ++pred_count[to];
    return true;
  };
  // Under-strand successions are forced; set them first.
  for (const auto& t : pd.tuples)
    if (!try_succ(t[0], t[2]))
      fail(Errc::OrientationError, "edge " + std::to_string(t[0]) + " has two successors");
  for (const auto& t : pd.tuples) {
    int b = t[1], d = t[3];
    bool over_b_to_d;
    if (d == b + 1)
      over_b_to_d = true;
    else if (b == d + 1)
      over_b_to_d = false;
    else
      over_b_to_d = b > d;  // wraparound: component max precedes its min
    // Kinked strands can defeat the label rule; fall back to the other
    // direction when the preferred one conflicts.
    if (!try_succ(over_b_to_d ? b : d, over_b_to_d ? d : b)) {
      over_b_to_d = !over_b_to_d;
      if (!try_succ(over_b_to_d ? b : d, over_b_to_d ? d : b))
        fail(Errc::OrientationError, "over-strand orientation conflict");
    }
    emb.crossings.push_back({static_cast<uint32_t>(t[0] - 1), static_cast<uint32_t>(b - 1),
                             static_cast<uint32_t>(t[2] - 1), static_cast<uint32_t>(d - 1),
                             over_b_to_d ? -1 : +1});
  }
  for (size_t lab = 1; lab <= 2 * n; ++lab)
    if (succ[lab] == 0 || pred_count[lab] != 1)
      fail(Errc::OrientationError, "edge labels are not consistently orientable");
  return emb;
}

}  // namespace

Diagram pd_to_diagram(const PDCode& pd) { return to_diagram(pd_to_embedded(pd)); }

Diagram to_diagram(const Embedded& emb, bool validate) {
  std::vector<uint32_t> unused;
  return to_diagram_with_map(emb, unused, validate);
}

Diagram to_diagram_with_map(const Embedded& emb, std::vector<uint32_t>& arc_of_edge,
                            bool validate) {
  UnionFind uf(emb.edge_count);
  for (const auto& x : emb.crossings) uf.unite(x.b, x.d);
  // Compress arc ids.
  std::vector<int32_t> arc_of(emb.edge_count, -1);
  uint32_t arcs = 0;
  for (uint32_t e = 0; e < emb.edge_count; ++e) {
    uint32_t r = uf.find(e);
    if (arc_of[r] < 0) arc_of[r] = static_cast<int32_t>(arcs++);
    arc_of[e] = arc_of[r];
  }
  arc_of_edge.assign(arc_of.begin(), arc_of.end());
  Diagram d;
  d.arcs = arcs + emb.free_loops;  // crossingless circles are arcs too
  for (const auto& x : emb.crossings) {
    uint32_t alpha = static_cast<uint32_t>(arc_of[x.a]);
    uint32_t beta = static_cast<uint32_t>(arc_of[x.c]);
    uint32_t omega = static_cast<uint32_t>(arc_of[x.b]);
    Crossing c;
    c.sign = x.sign;
    c.omega = omega;
    if (x.sign > 0) {
      c.rho = alpha;
      c.lambda = beta;
    } else {
      c.lambda = alpha;
      c.rho = beta;
    }
    d.crossings.push_back(c);
  }
  // Components: cycles of the successor permutation on edges, plus loops.
  {
    std::vector<uint32_t> succ(emb.edge_count, UINT32_MAX);
    for (const auto& x : emb.crossings) {
      succ[x.a] = x.c;
      if (x.sign > 0)
        succ[x.d] = x.b;
      else
        succ[x.b] = x.d;
    }
    std::vector<bool> seen(emb.edge_count, false);
    uint32_t comps = 0;
    for (uint32_t e = 0; e < emb.edge_count; ++e) {
      if (seen[e] || succ[e] == UINT32_MAX) continue;
      ++comps;
      uint32_t cur = e;
      while (!seen[cur]) {
        seen[cur] = true;
        if (succ[cur] == UINT32_MAX) {
          // Open strand end; only legal for tangles.
          check_internal(!validate, "broken edge succession");
          break;
        }
        cur = succ[cur];
      }
    }
    d.components = comps + emb.free_loops;
  }
  if (validate) {
    std::vector<int> as_alpha(d.arcs, 0), as_beta(d.arcs, 0);
    for (const auto& c : d.crossings) {
      ++as_alpha[c.sign > 0 ? c.rho : c.lambda];
      ++as_beta[c.sign > 0 ? c.lambda : c.rho];
    }
    for (uint32_t a = 0; a < d.arcs; ++a)
      if (as_alpha[a] != as_beta[a] || as_alpha[a] > 1)
        fail(Errc::OrientationError, "arc under-crossing structure is inconsistent");
  }
  return d;
}

PDCode to_pd(const Embedded& emb) {
  if (emb.free_loops > 0)
    fail(Errc::BadParams, "PD codes cannot express crossingless components");
  UnionFind uf(emb.edge_count);
  // Closure identifications were already performed by merging ids before
  // calling; here edges are final.  Build successor over edge ids.
  std::map<uint32_t, uint32_t> succ;
  std::vector<uint32_t> edges;
  auto add_succ = [&](uint32_t from, uint32_t to) {
    check_internal(!succ.count(from), "edge with two successors");
    succ[from] = to;
  };
  for (const auto& x : emb.crossings) {
    add_succ(x.a, x.c);
    if (x.sign > 0)
      add_succ(x.d, x.b);
    else
      add_succ(x.b, x.d);
    edges.insert(edges.end(), {x.a, x.b, x.c, x.d});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  check_internal(edges.size() == 2 * emb.crossings.size(), "edge count mismatch");
  // Assign labels 1..2n along each component, components by smallest edge id.
  std::map<uint32_t, int> label;
  int next = 1;
  for (uint32_t e : edges) {
    if (label.count(e)) continue;
    uint32_t cur = e;
    while (!label.count(cur)) {
      label[cur] = next++;
      auto it = succ.find(cur);
      check_internal(it != succ.end(), "broken succession");
      cur = it->second;
    }
  }
  PDCode pd;
  for (const auto& x : emb.crossings)
    pd.tuples.push_back({label[x.a], label[x.b], label[x.c], label[x.d]});
  return pd;
}

BraidWord parse_braid(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    fail(Errc::SyntaxError, "braid word must look like \"m:w1,w2,...\"");
  BraidWord w;
  try {
    w.strands = static_cast<uint32_t>(std::stoul(std::string(text.substr(0, colon))));
  } catch (...) {
    fail(Errc::SyntaxError, "bad strand count in braid word");
  }
  if (w.strands < 2) fail(Errc::BadParams, "braid needs at least 2 strands");
  std::string rest(text.substr(colon + 1));
  size_t pos = 0;
  while (pos < rest.size()) {
    size_t comma = rest.find(',', pos);
    std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) {
      int v;
      try {
        v = std::stoi(tok);
      } catch (...) {
        fail(Errc::SyntaxError, "bad braid letter '" + tok + "'");
      }
      if (v == 0 || static_cast<uint32_t>(std::abs(v)) >= w.strands)
        fail(Errc::BadParams, "braid letter out of range");
      w.letters.push_back(v);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return w;
}

BraidWord torus_braid(uint32_t m, uint32_t n) {
  if (m < 2 || n < 1) fail(Errc::BadParams, "torus braid needs m >= 2, n >= 1");
  BraidWord w;
  w.strands = m;
  w.letters.reserve(size_t(n) * (m - 1));
  for (uint32_t rep = 0; rep < n; ++rep)
    for (uint32_t i = m - 1; i >= 1; --i) w.letters.push_back(static_cast<int>(i));
  return w;
}

Embedded braid_embedded(const BraidWord& w) {
  for (int l : w.letters)
    if (l == 0 || static_cast<uint32_t>(std::abs(l)) >= w.strands)
      fail(Errc::BadParams, "braid letter out of range");
  uint32_t next = 0;
  std::vector<uint32_t> top(w.strands), cur(w.strands);
  for (uint32_t j = 0; j < w.strands; ++j) top[j] = cur[j] = next++;
  std::vector<EmbCrossing> crossings;
  for (int l : w.letters) {
    uint32_t i = static_cast<uint32_t>(std::abs(l)) - 1;  // 0-based position
    uint32_t u = cur[i], v = cur[i + 1];
    uint32_t sw = next++, se = next++;
    if (l > 0) {
      // over strand from position i+1 to i; positive crossing
      crossings.push_back({u, sw, se, v, +1});
    } else {
      crossings.push_back({v, u, sw, se, -1});
    }
    cur[i] = sw;
    cur[i + 1] = se;
  }
  // Close the braid: identify bottom edges with top edges.
  UnionFind uf(next);
  for (uint32_t j = 0; j < w.strands; ++j) uf.unite(cur[j], top[j]);
  Embedded emb;
  std::vector<int32_t> newid(next, -1);
  uint32_t cnt = 0;
  auto id = [&](uint32_t e) {
    uint32_t r = uf.find(e);
    if (newid[r] < 0) newid[r] = static_cast<int32_t>(cnt++);
    return static_cast<uint32_t>(newid[r]);
  };
  for (auto& x : crossings) emb.crossings.push_back({id(x.a), id(x.b), id(x.c), id(x.d), x.sign});
  emb.edge_count = cnt;
  // Strands that met no crossing close into free loops; their classes never
  // received an id above.
  std::vector<bool> counted(next, false);
  for (uint32_t j = 0; j < w.strands; ++j) {
    uint32_t r = uf.find(top[j]);
    if (newid[r] < 0 && !counted[r]) {
      counted[r] = true;
      ++emb.free_loops;
    }
  }
  return emb;
}

Diagram braid_to_diagram(const BraidWord& w) { return to_diagram(braid_embedded(w)); }
PDCode braid_to_pd(const BraidWord& w) { return to_pd(braid_embedded(w)); }

namespace {

// One full twist on a horizontal pair of strands.  Four variants: the pair's
// orientation pattern (EW: upper strand eastbound, lower westbound; WE: the
// reverse) and the handedness (A: negative crossings, B: positive).  Each
// twist consumes the open edges (u, l) at the west frontier, creates the
// middle edges mu, ml and the new frontier edges ue, le, and emits two
// crossings.
struct TwistCtx {
  std::vector<EmbCrossing>* out;
  uint32_t* next;
};

void emit_twist_ew(TwistCtx ctx, bool positive, uint32_t& u, uint32_t& l) {
  uint32_t mu = (*ctx.next)++, ml = (*ctx.next)++, ue = (*ctx.next)++, le = (*ctx.next)++;
  if (!positive) {  // (EW, A)
    ctx.out->push_back({ml, u, l, mu, -1});
    ctx.out->push_back({mu, le, ue, ml, -1});
  } else {  // (EW, B)
    ctx.out->push_back({u, l, mu, ml, +1});
    ctx.out->push_back({le, ue, ml, mu, +1});
  }
  u = ue;
  l = le;
}

void emit_twist_we(TwistCtx ctx, bool positive, uint32_t& u, uint32_t& l) {
  uint32_t mu = (*ctx.next)++, ml = (*ctx.next)++, ue = (*ctx.next)++, le = (*ctx.next)++;
  if (!positive) {  // (WE, A)
    ctx.out->push_back({l, mu, ml, u, -1});
    ctx.out->push_back({ue, ml, mu, le, -1});
  } else {  // (WE, B)
    ctx.out->push_back({mu, ml, u, l, +1});
    ctx.out->push_back({ml, mu, le, ue, +1});
  }
  u = ue;
  l = le;
}

Embedded finish_embedded(std::vector<EmbCrossing> crossings, uint32_t edge_count,
                         const std::vector<std::pair<uint32_t, uint32_t>>& identify) {
  UnionFind uf(edge_count);
  for (auto [x, y] : identify) uf.unite(x, y);
  Embedded emb;
  std::vector<int32_t> newid(edge_count, -1);
  uint32_t cnt = 0;
  auto id = [&](uint32_t e) {
    uint32_t r = uf.find(e);
    if (newid[r] < 0) newid[r] = static_cast<int32_t>(cnt++);
    return static_cast<uint32_t>(newid[r]);
  };
  for (auto& x : crossings) emb.crossings.push_back({id(x.a), id(x.b), id(x.c), id(x.d), x.sign});
  // Any identified class not appearing in crossings is a free loop.
  std::vector<bool> root_seen(edge_count, false), root_used(edge_count, false);
  for (uint32_t e = 0; e < edge_count; ++e) root_seen[uf.find(e)] = true;
  for (auto& x : crossings)
    for (uint32_t e : {x.a, x.b, x.c, x.d}) root_used[uf.find(e)] = true;
  for (uint32_t r = 0; r < edge_count; ++r)
    if (root_seen[r] && uf.find(r) == r && !root_used[r]) ++emb.free_loops;
  emb.edge_count = cnt;
  return emb;
}

}  // namespace

Embedded twobridge_embedded(const std::vector<std::pair<long, long>>& twists) {
  if (twists.empty()) fail(Errc::EmptyTwists, "two-bridge twist sequence is empty");
  uint32_t next = 0;
  uint32_t t0 = next++, m0 = next++, b0 = next++;
  uint32_t tcur = t0, mcur = m0, bcur = b0;
  std::vector<EmbCrossing> crossings;
  TwistCtx ctx{&crossings, &next};
  for (auto [mi, ni] : twists) {
    for (long k = 0; k < std::abs(mi); ++k) emit_twist_ew(ctx, mi < 0, tcur, mcur);
    for (long k = 0; k < std::abs(ni); ++k) emit_twist_we(ctx, ni < 0, mcur, bcur);
  }
  // Left cap joins middle and bottom west ends; right cap joins top and
  // middle east ends; the outer arc runs from bottom east around to top west.
  return finish_embedded(std::move(crossings), next, {{m0, b0}, {tcur, mcur}, {bcur, t0}});
}

Diagram twobridge_diagram(const std::vector<std::pair<long, long>>& twists) {
  return to_diagram(twobridge_embedded(twists));
}

PDCode twobridge_pd(const std::vector<std::pair<long, long>>& twists) {
  return to_pd(twobridge_embedded(twists));
}

OpenTangle twist_box(long n, TwistKind kind) {
  uint32_t next = 0;
  uint32_t u0 = next++, l0 = next++;
  uint32_t u = u0, l = l0;
  std::vector<EmbCrossing> crossings;
  TwistCtx ctx{&crossings, &next};
  for (long k = 0; k < std::abs(n); ++k) {
    if (kind == TwistKind::MBox)
      emit_twist_ew(ctx, n < 0, u, l);
    else
      emit_twist_we(ctx, n < 0, u, l);
  }
  OpenTangle t;
  t.emb.edge_count = next;
  t.emb.crossings = std::move(crossings);
  t.left_top = u0;
  t.left_bottom = l0;
  t.right_top = u;
  t.right_bottom = l;
  return t;
}

Diagram mirror(const Diagram& d) {
  Diagram m = d;
  for (auto& c : m.crossings) {
    c.sign = -c.sign;
    std::swap(c.rho, c.lambda);
  }
  return m;
}

int writhe(const Diagram& d) {
  int w = 0;
  for (const auto& c : d.crossings) w += c.sign;
  return w;
}

LaurentMat relation_matrix(const Diagram& d, uint32_t p) {
  LaurentMat m(d.crossings.size(), std::vector<LaurentPoly>(d.arcs, LaurentPoly::zero(p)));
  LaurentPoly one = LaurentPoly::constant(p, 1);
  LaurentPoly t = LaurentPoly::t_power(p, 1);
  LaurentPoly one_minus_t = one - t;
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& c = d.crossings[i];
    m[i][c.lambda] = m[i][c.lambda] + one;
    m[i][c.rho] = m[i][c.rho] - t;
    m[i][c.omega] = m[i][c.omega] - one_minus_t;
  }
  return m;
}

std::vector<TableEntry> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open table file " + path);
  std::vector<TableEntry> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("name") || !j.contains("pd"))
      fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": want {\"name\",\"pd\"}");
    TableEntry e;
    e.name = j["name"].get<std::string>();
    try {
      e.pd = parse_pd(j["pd"].dump());
    } catch (const Error& err) {
      fail(err.code(), "line " + std::to_string(lineno) + " (" + e.name + "): " + err.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace qq
