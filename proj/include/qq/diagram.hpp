#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qq/errors.hpp"
#include "qq/laurent.hpp"

namespace qq {

// Crossing list by edge labels: tuple (a,b,c,d) counterclockwise from the
// incoming under-edge a; the under-strand runs a -> c.
struct PDCode {
  std::vector<std::array<int, 4>> tuples;
};

PDCode parse_pd(std::string_view text);

// Oriented diagram combinatorics: arcs plus signed crossings with roles.
// omega is the over arc, lambda the under arc left of it, rho the one right.
struct Crossing {
  int sign;  // +1 or -1
  uint32_t rho, lambda, omega;
};

struct Diagram {
  uint32_t arcs = 0;
  uint32_t components = 0;
  std::vector<Crossing> crossings;
};

// Intermediate form that still remembers the planar embedding: crossings as
// PD-style edge tuples plus signs (sign +1: over strand runs d -> b; sign -1:
// b -> d).  Closed components without crossings are counted in free_loops.
struct EmbCrossing {
  uint32_t a, b, c, d;
  int sign;
};

struct Embedded {
  uint32_t edge_count = 0;
  uint32_t free_loops = 0;
  std::vector<EmbCrossing> crossings;
};

Diagram to_diagram(const Embedded& emb, bool validate = true);
// Also reports which arc each edge merged into.
Diagram to_diagram_with_map(const Embedded& emb, std::vector<uint32_t>& arc_of_edge,
                            bool validate = true);
PDCode to_pd(const Embedded& emb);

Diagram pd_to_diagram(const PDCode& pd);

struct BraidWord {
  uint32_t strands = 2;
  std::vector<int> letters;  // +-i for sigma_i^{+-1}, 1 <= i < strands
};

// "m:w1,w2,..." with negative entries for inverse generators.
BraidWord parse_braid(std::string_view text);
// (sigma_{m-1} sigma_{m-2} ... sigma_1)^n, whose closure is T_{m,n}.
BraidWord torus_braid(uint32_t m, uint32_t n);

Embedded braid_embedded(const BraidWord& w);
Diagram braid_to_diagram(const BraidWord& w);
PDCode braid_to_pd(const BraidWord& w);

// Plat diagram of a two-bridge knot from its even continued fraction: for
// each pair, a horizontal twist box on the (top, middle) strands followed by
// one on (middle, bottom); closed without extra crossings.
Embedded twobridge_embedded(const std::vector<std::pair<long, long>>& twists);
Diagram twobridge_diagram(const std::vector<std::pair<long, long>>& twists);
PDCode twobridge_pd(const std::vector<std::pair<long, long>>& twists);

// A single open twist box with its four boundary edges, for local checks.
enum class TwistKind { MBox, NBox };
struct OpenTangle {
  Embedded emb;
  uint32_t left_top, left_bottom, right_top, right_bottom;
};
OpenTangle twist_box(long n, TwistKind kind);

Diagram mirror(const Diagram& d);
int writhe(const Diagram& d);

// Rows = crossings, columns = arcs: +1 at lambda, -t at rho, -(1-t) at omega,
// contributions summed when roles coincide.
LaurentMat relation_matrix(const Diagram& d, uint32_t p);

struct TableEntry {
  std::string name;
  PDCode pd;
};

// UTF-8 JSON lines, each {"name": string, "pd": [[int,int,int,int],...]}.
std::vector<TableEntry> load_table(const std::string& path);

}  // namespace qq
