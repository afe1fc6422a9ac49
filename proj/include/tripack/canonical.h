#ifndef TRIPACK_CANONICAL_H_
#define TRIPACK_CANONICAL_H_

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tripack/graph.h"
#include "tripack/packing.h"

namespace tripack {

// Serialized colour array ("n=<n>\n<colors>") of the canonical relabeling,
// the lexicographic minimum over the leaves of an individualization-
// refinement tree, and over both colourings when swap is admitted.
struct CanonicalKey {
  std::string bytes;
  bool swap_admitted = false;

  auto operator<=>(const CanonicalKey&) const = default;
};

// Maps g to the key's graph: h(perm[i], perm[j]) = g(i, j), with colours
// exchanged when `swapped`.
struct Relabeling {
  std::vector<int> perm;
  bool swapped = false;

  bool operator==(const Relabeling&) const = default;
};

// Requires a complete colouring on at most 64 vertices.
std::pair<CanonicalKey, Relabeling> canonical_key(const ColoredGraph& g, bool admit_swap);

bool are_isomorphic(const ColoredGraph& g, const ColoredGraph& h, bool admit_swap);
// A relabeling taking g onto h, if one exists.
std::optional<Relabeling> find_isomorphism(const ColoredGraph& g, const ColoredGraph& h, bool admit_swap);

ColoredGraph relabel(const ColoredGraph& g, const Relabeling& r);
FractionalPacking relabel(const FractionalPacking& w, const Relabeling& r);
Relabeling inverse(const Relabeling& r);
// First apply a, then b.
Relabeling compose(const Relabeling& a, const Relabeling& b);

}  // namespace tripack

#endif  // TRIPACK_CANONICAL_H_
