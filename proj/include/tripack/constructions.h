#ifndef TRIPACK_CONSTRUCTIONS_H_
#define TRIPACK_CONSTRUCTIONS_H_

#include <array>
#include <optional>
#include <vector>

#include "tripack/graph.h"
#include "tripack/packing.h"
#include "tripack/rational.h"
#include "tripack/structure.h"

namespace tripack {

enum class Interior { AllRed, AllBlue, Given };

struct BlobSpec {
  std::array<int, 5> sizes{1, 1, 1, 1, 1};
  std::array<Interior, 5> interior{Interior::AllRed, Interior::AllRed, Interior::AllRed, Interior::AllRed,
                                   Interior::AllRed};
  // Used for blobs marked Given; must be complete colourings of matching order.
  std::array<ColoredGraph, 5> given;
};

BlobSpec blob_spec(const std::array<int, 5>& sizes, Interior interior = Interior::AllRed);

struct Blowup {
  ColoredGraph graph;
  PentagonCert cert;
};

// Blobs occupy consecutive vertex ranges in the order of spec.sizes.
Blowup pentagon_blowup(const BlobSpec& spec);

// The blow-up with one blue A_5-A_2 edge (first vertex of each) turned red;
// cert.flips holds that edge.
Blowup almost_pentagon_blowup(const BlobSpec& spec);

// Blue: K_{ceil(n/2), floor(n/2)} minus the matching {i, ceil(n/2) + i},
// i < m. Red: the complement.
ColoredGraph bipartite_minus_matching(int n, int m);

// Toggles one assigned edge.
ColoredGraph flip_edge(const ColoredGraph& g, const Edge& e);

bool in_family_b1(const std::array<int, 5>& sizes);
bool in_family_b2(const std::array<int, 5>& sizes);
// 3 * sum C(x_i, 2), plus 3 when flipped. Sizes are taken as a multiset
// and must lie in the first family (unflipped) or the second (flipped).
Rational pentagon_pack_closed_form(const std::array<int, 5>& sizes, bool flipped);

// Two-blob packings. A = 0..alpha-1, B = alpha..alpha+beta-1; `missing`
// lists absent A-B edges. Support is cross triangles only; every edge
// inside A or B gets weight exactly 1/2.
enum class AbCase { Complete, Matching, TwoEdges, ThreeFive };
FractionalPacking ab_packing(AbCase which, int alpha, int beta, const std::vector<Edge>& missing);

// Three-blob packing. A = {0, 1}, B = 2..2+beta-1, C after it. `missing`
// lists absent edges between B and A or C (a matching, at most two of them
// towards C); A-C edges are absent. Edges in A or C get 1/2, edges in B 1.
FractionalPacking abc_packing(int beta, int gamma, const std::vector<Edge>& missing);

// Known pack values of pentagon blow-ups (all-red interiors) and of their
// one-flip variants (starred), in the order the table1 command prints them.
struct BlowupValue {
  std::array<int, 5> sizes;
  bool starred = false;
  long value = 0;
};
const std::vector<BlowupValue>& table1_rows();

// Drops triangles that are not monochromatic of the packing's colour in host.
FractionalPacking restrict_to_host(const FractionalPacking& w, const ColoredGraph& host);

}  // namespace tripack

#endif  // TRIPACK_CONSTRUCTIONS_H_
