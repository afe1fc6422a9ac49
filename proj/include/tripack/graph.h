#ifndef TRIPACK_GRAPH_H_
#define TRIPACK_GRAPH_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tripack {

enum class EdgeColor : std::uint8_t { Red, Blue, Unassigned };

char to_char(EdgeColor c);
EdgeColor opposite(EdgeColor c);  // Red <-> Blue; Unassigned stays.

struct Edge {
  int u = 0;
  int v = 0;  // u < v
  auto operator<=>(const Edge&) const = default;
};

// Orders the endpoints; throws InputError when a == b.
Edge make_edge(int a, int b);

struct Triangle {
  int a = 0, b = 0, c = 0;  // a < b < c
  auto operator<=>(const Triangle&) const = default;
  std::array<Edge, 3> edges() const { return {Edge{a, b}, Edge{a, c}, Edge{b, c}}; }
  bool contains(int v) const { return v == a || v == b || v == c; }
};

Triangle make_triangle(int x, int y, int z);

// A red/blue colouring of K_n, possibly with unassigned edges. Colours are
// stored upper-triangular row-major: {i,j} with i<j lives at
// i(2n-i-1)/2 + (j-i-1).
class ColoredGraph {
 public:
  ColoredGraph() = default;
  explicit ColoredGraph(int n, EdgeColor fill = EdgeColor::Unassigned);
  ColoredGraph(int n, std::vector<EdgeColor> colors);

  int n() const { return n_; }
  std::size_t num_pairs() const { return colors_.size(); }
  std::span<const EdgeColor> colors() const { return colors_; }

  // Throws InputError when i == j or either is out of range.
  EdgeColor color(int i, int j) const;
  EdgeColor color(const Edge& e) const { return color(e.u, e.v); }
  // Unchecked, for hot loops; requires i != j.
  EdgeColor at(int i, int j) const {
    return i < j ? colors_[index_unchecked(n_, i, j)] : colors_[index_unchecked(n_, j, i)];
  }

  bool is_complete() const;
  // True when every Unassigned edge is incident to vertex n-1.
  bool unassigned_only_at_newest() const;

  static std::size_t index_unchecked(int n, int i, int j) {
    return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
  }
  static std::size_t pair_count(int n) {
    return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
  }

  // Builder mutation. Values handed out by the public operations below are
  // never mutated after construction.
  void assign(int i, int j, EdgeColor c);

  bool operator==(const ColoredGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<EdgeColor> colors_;
};

EdgeColor color_of(const ColoredGraph& g, int i, int j);

// Triangles whose three edges all have colour `c`, sorted lexicographically.
std::vector<Triangle> monochromatic_triangles(const ColoredGraph& g, EdgeColor c);

ColoredGraph add_vertex(const ColoredGraph& g);
// Throws UsageError unless the edge is currently Unassigned and c is Red/Blue.
ColoredGraph set_edge(const ColoredGraph& g, int i, int j, EdgeColor c);
ColoredGraph delete_vertex(const ColoredGraph& g, int u);
ColoredGraph swap_colors(const ColoredGraph& g);

// "n=<n>\n<colors>" over {R, B, .}.
std::string serialize(const ColoredGraph& g);
ColoredGraph parse_graph(std::string_view text);

// Single-line form used inside certificate files: "n=<n> <colors>".
std::string serialize_inline(const ColoredGraph& g);
ColoredGraph parse_graph_inline(std::string_view text);

// Simple graph on at most 64 vertices, adjacency as bit rows.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 64;

  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  static SimpleGraph complete(int n);

  int n() const { return n_; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  std::uint64_t neighbours(int u) const { return adj_[u]; }
  int degree(int u) const;
  int num_edges() const;
  std::vector<Edge> edges() const;
  std::vector<Triangle> triangles() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Edges of colour c as a simple graph on the same vertex set.
SimpleGraph color_class(const ColoredGraph& g, EdgeColor c);

}  // namespace tripack

#endif  // TRIPACK_GRAPH_H_
