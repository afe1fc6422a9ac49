#include "tripack/graph.h"

#include <algorithm>
#include <bit>
#include <charconv>

#include "tripack/errors.h"

namespace tripack {

char to_char(EdgeColor c) {
  switch (c) {
    case EdgeColor::Red:
      return 'R';
    case EdgeColor::Blue:
      return 'B';
    case EdgeColor::Unassigned:
      break;
  }
  return '.';
}

EdgeColor opposite(EdgeColor c) {
  if (c == EdgeColor::Red) return EdgeColor::Blue;
  if (c == EdgeColor::Blue) return EdgeColor::Red;
  return c;
}

Edge make_edge(int a, int b) {
  if (a == b) throw InputError("edge endpoints must differ");
  return a < b ? Edge{a, b} : Edge{b, a};
}

Triangle make_triangle(int x, int y, int z) {
  if (x == y || y == z || x == z) throw InputError("triangle vertices must be distinct");
  std::array<int, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  return Triangle{v[0], v[1], v[2]};
}

ColoredGraph::ColoredGraph(int n, EdgeColor fill) : n_(n) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  colors_.assign(pair_count(n), fill);
}

ColoredGraph::ColoredGraph(int n, std::vector<EdgeColor> colors) : n_(n), colors_(std::move(colors)) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  if (colors_.size() != pair_count(n)) throw InputError("colour array has the wrong length");
}

EdgeColor ColoredGraph::color(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw InputError("vertex out of range");
  if (i == j) throw InputError("no loop at vertex " + std::to_string(i));
  return at(i, j);
}

bool ColoredGraph::is_complete() const {
  return std::none_of(colors_.begin(), colors_.end(),
                      [](EdgeColor c) { return c == EdgeColor::Unassigned; });
}

bool ColoredGraph::unassigned_only_at_newest() const {
  for (int i = 0; i + 1 < n_; ++i) {
    for (int j = i + 1; j + 1 < n_; ++j) {
      if (at(i, j) == EdgeColor::Unassigned) return false;
    }
  }
  return true;
}

void ColoredGraph::assign(int i, int j, EdgeColor c) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) throw InputError("bad edge");
  if (i > j) std::swap(i, j);
  colors_[index_unchecked(n_, i, j)] = c;
}

EdgeColor color_of(const ColoredGraph& g, int i, int j) { return g.color(i, j); }

std::vector<Triangle> monochromatic_triangles(const ColoredGraph& g, EdgeColor c) {
  std::vector<Triangle> out;
  if (c == EdgeColor::Unassigned) return out;
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.at(i, j) != c) continue;
      for (int k = j + 1; k < n; ++k) {
        if (g.at(i, k) == c && g.at(j, k) == c) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

ColoredGraph add_vertex(const ColoredGraph& g) {
  const int n = g.n();
  ColoredGraph out(n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.assign(i, j, g.at(i, j));
  }
  return out;
}

ColoredGraph set_edge(const ColoredGraph& g, int i, int j, EdgeColor c) {
  if (c == EdgeColor::Unassigned) throw UsageError("set_edge needs Red or Blue");
  if (g.color(i, j) != EdgeColor::Unassigned) {
    throw UsageError("edge " + std::to_string(i) + "-" + std::to_string(j) + " is already coloured");
  }
  ColoredGraph out = g;
  out.assign(i, j, c);
  return out;
}

ColoredGraph delete_vertex(const ColoredGraph& g, int u) {
  const int n = g.n();
  if (u < 0 || u >= n) throw InputError("vertex out of range");
  ColoredGraph out(n - 1);
  for (int i = 0; i < n; ++i) {
    if (i == u) continue;
    for (int j = i + 1; j < n; ++j) {
      if (j == u) continue;
      out.assign(i - (i > u), j - (j > u), g.at(i, j));
    }
  }
  return out;
}

ColoredGraph swap_colors(const ColoredGraph& g) {
  std::vector<EdgeColor> colors(g.colors().begin(), g.colors().end());
  for (auto& c : colors) c = opposite(c);
  return ColoredGraph(g.n(), std::move(colors));
}

namespace {

std::string color_string(const ColoredGraph& g) {
  std::string s;
  s.reserve(g.num_pairs());
  for (EdgeColor c : g.colors()) s.push_back(to_char(c));
  return s;
}

// Parses "n=<digits>" at the start of `text`; returns n and advances `pos`.
int parse_count(std::string_view text, std::size_t& pos) {
  if (text.substr(0, 2) != "n=") throw ParseError("expected 'n='", 0);
  pos = 2;
  int n = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), n);
  if (ec != std::errc() || ptr == text.data() + pos) throw ParseError("expected vertex count", pos);
  if (n < 0 || n > 100000) throw ParseError("vertex count out of range", pos);
  pos = static_cast<std::size_t>(ptr - text.data());
  return n;
}

ColoredGraph parse_colors(int n, std::string_view body, std::size_t offset) {
  if (body.size() != ColoredGraph::pair_count(n)) {
    throw ParseError("colour string has length " + std::to_string(body.size()) + ", expected " +
                         std::to_string(ColoredGraph::pair_count(n)),
                     offset);
  }
  std::vector<EdgeColor> colors(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    switch (body[i]) {
      case 'R':
        colors[i] = EdgeColor::Red;
        break;
      case 'B':
        colors[i] = EdgeColor::Blue;
        break;
      case '.':
        colors[i] = EdgeColor::Unassigned;
        break;
      default:
        throw ParseError(std::string("invalid colour character '") + body[i] + "'", offset + i);
    }
  }
  return ColoredGraph(n, std::move(colors));
}

}  // namespace

std::string serialize(const ColoredGraph& g) { return "n=" + std::to_string(g.n()) + "\n" + color_string(g); }

ColoredGraph parse_graph(std::string_view text) {
  std::size_t pos = 0;
  const int n = parse_count(text, pos);
  std::string_view rest = text.substr(pos);
  std::size_t offset = pos;
  if (rest.empty()) {
    if (n >= 2) throw ParseError("missing colour line", pos);
    return ColoredGraph(n);
  }
  if (rest[0] != '\n') throw ParseError("expected newline after vertex count", pos);
  rest.remove_prefix(1);
  ++offset;
  if (!rest.empty() && rest.back() == '\n') rest.remove_suffix(1);
  if (rest.find('\n') != std::string_view::npos) {
    throw ParseError("unexpected extra line", offset + rest.find('\n'));
  }
  return parse_colors(n, rest, offset);
}

std::string serialize_inline(const ColoredGraph& g) { return "n=" + std::to_string(g.n()) + " " + color_string(g); }

ColoredGraph parse_graph_inline(std::string_view text) {
  std::size_t pos = 0;
  const int n = parse_count(text, pos);
  if (pos == text.size()) {
    if (n >= 2) throw ParseError("missing colour string", pos);
    return ColoredGraph(n);
  }
  if (text[pos] != ' ') throw ParseError("expected space after vertex count", pos);
  return parse_colors(n, text.substr(pos + 1), pos + 1);
}

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) throw InputError("simple graphs support at most 64 vertices");
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) throw InputError("bad edge");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void SimpleGraph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) throw InputError("bad edge");
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

int SimpleGraph::degree(int u) const { return std::popcount(adj_[u]); }

int SimpleGraph::num_edges() const {
  int total = 0;
  for (auto row : adj_) total += std::popcount(row);
  return total / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (has_edge(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<Triangle> SimpleGraph::triangles() const {
  std::vector<Triangle> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (!has_edge(i, j)) continue;
      std::uint64_t common = adj_[i] & adj_[j];
      common &= ~((std::uint64_t{2} << j) - 1);  // keep k > j
      while (common) {
        const int k = std::countr_zero(common);
        common &= common - 1;
        out.push_back({i, j, k});
      }
    }
  }
  return out;
}

SimpleGraph color_class(const ColoredGraph& g, EdgeColor c) {
  SimpleGraph out(g.n());
  for (int i = 0; i < g.n(); ++i) {
    for (int j = i + 1; j < g.n(); ++j) {
      if (g.at(i, j) == c) out.add_edge(i, j);
    }
  }
  return out;
}

}  // namespace tripack
