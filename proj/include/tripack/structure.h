#ifndef TRIPACK_STRUCTURE_H_
#define TRIPACK_STRUCTURE_H_

#include <array>
#include <optional>
#include <vector>

#include "tripack/graph.h"
#include "tripack/rational.h"

namespace tripack {

struct BipartitionCert {
  std::vector<int> x1, x2;
  // Edges inside a part; deleting them leaves the graph bipartite.
  std::vector<Edge> removed_edges;
};

// Certificate iff at most k edge deletions make g bipartite. Exact.
std::optional<BipartitionCert> bip_distance_at_most(const SimpleGraph& g, int k);
// Minimum number of deletions making g bipartite; n <= 28.
int min_bipartization(const SimpleGraph& g);
// min_bipartization(g) / n^2.
Rational e_bip(const SimpleGraph& g);
// Checks the certificate's claims against g and the bound k.
bool verify_bipartition(const SimpleGraph& g, const BipartitionCert& cert, int k);

// Blobs A_1..A_5 (stored 0-based as blobs[0..4]). After flipping `flips`,
// A_i-A_{i+1} edges are red and A_i-A_{i+2} edges blue, indices mod 5.
struct PentagonCert {
  std::array<std::vector<int>, 5> blobs;
  std::vector<Edge> flips;

  std::array<int, 5> sizes() const;
  std::array<int, 5> sorted_sizes() const;
};

int blob_of(const PentagonCert& cert, int v);  // -1 when v is in no blob
bool is_pentagon_blowup(const ColoredGraph& g, const PentagonCert& cert);

// A certificate with at most max_flips (0 or 1) flips, or nothing. Exact.
// Blob order is rotated/reflected so that the size vector is
// lexicographically maximal.
std::optional<PentagonCert> pentagon_distance(const ColoredGraph& g, int max_flips);

struct BadConfiguration {
  int apex = 0;
  EdgeColor color = EdgeColor::Red;
  // Red: one vertex from each of blobs i, i+2, i+3. Blue: i, i+1, i+2.
  int window = 0;
  std::array<int, 3> vertices{};

  bool operator==(const BadConfiguration&) const = default;
};

// u must lie outside the blobs and cert must have no flips and be valid.
std::vector<BadConfiguration> bad_configurations(const ColoredGraph& g, int u, const PentagonCert& cert);

struct DisjointConfigurations {
  int t = 0;
  std::vector<BadConfiguration> witness;
};
DisjointConfigurations max_disjoint_bad_configs(const std::vector<BadConfiguration>& list);

// Number of edges at u whose colour must change for u to join blob i.
std::array<int, 5> apex_flip_counts(const ColoredGraph& g, int u, const PentagonCert& cert);

struct Absorption {
  int index = 0;  // blob u joins
  std::vector<Edge> flips;
};
// Fewest flips at u; smallest index among ties.
Absorption absorb_apex(const ColoredGraph& g, int u, const PentagonCert& cert);

}  // namespace tripack

#endif  // TRIPACK_STRUCTURE_H_
