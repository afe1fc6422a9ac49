#include "tripack/structure.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>

#include "tripack/errors.h"

namespace tripack {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

template <typename F>
void for_each_bit(Mask m, F f) {
  for (; m; m &= m - 1) f(std::countr_zero(m));
}

// Edge-set of a shortest odd closed walk, or empty when g is bipartite.
std::vector<Edge> shortest_odd_cycle(const SimpleGraph& g) {
  const int n = g.n();
  std::vector<Edge> best;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<int> queue;
    queue.push(root);
    int found_u = -1, found_w = -1;
    while (!queue.empty() && found_u < 0) {
      const int u = queue.front();
      queue.pop();
      if (!best.empty() && 2 * dist[u] + 1 >= static_cast<int>(best.size())) break;
      for_each_bit(g.neighbours(u), [&](int w) {
        if (found_u >= 0) return;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (dist[w] == dist[u]) {
          found_u = u;
          found_w = w;
        }
      });
    }
    if (found_u < 0) continue;
    std::vector<Edge> walk{make_edge(found_u, found_w)};
    for (int x = found_u; parent[x] >= 0; x = parent[x]) walk.push_back(make_edge(x, parent[x]));
    for (int x = found_w; parent[x] >= 0; x = parent[x]) walk.push_back(make_edge(x, parent[x]));
    std::sort(walk.begin(), walk.end());
    walk.erase(std::unique(walk.begin(), walk.end()), walk.end());
    if (best.empty() || walk.size() < best.size()) best = std::move(walk);
  }
  return best;
}

BipartitionCert two_colouring(const SimpleGraph& h, const SimpleGraph& original) {
  const int n = h.n();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for_each_bit(h.neighbours(u), [&](int w) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push(w);
        }
      });
    }
  }
  BipartitionCert cert;
  for (int v = 0; v < n; ++v) (side[v] == 0 ? cert.x1 : cert.x2).push_back(v);
  for (const Edge& e : original.edges())
    if (side[e.u] == side[e.v]) cert.removed_edges.push_back(e);
  return cert;
}

bool bipartize(SimpleGraph& g, int k) {
  const std::vector<Edge> cycle = shortest_odd_cycle(g);
  if (cycle.empty()) return true;
  if (k == 0) return false;
  for (const Edge& e : cycle) {
    g.remove_edge(e.u, e.v);
    if (bipartize(g, k - 1)) return true;
    g.add_edge(e.u, e.v);
  }
  return false;
}

EdgeColor pattern(int j, int k) {
  const int d = ((k - j) % 5 + 5) % 5;
  return d == 1 || d == 4 ? EdgeColor::Red : EdgeColor::Blue;
}

struct Masks {
  std::vector<Mask> red, blue;
};

Masks masks_of(const ColoredGraph& g) {
  Masks m{std::vector<Mask>(g.n(), 0), std::vector<Mask>(g.n(), 0)};
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) {
      const EdgeColor c = g.at(i, j);
      if (c == EdgeColor::Red) {
        m.red[i] |= bit(j);
        m.red[j] |= bit(i);
      } else if (c == EdgeColor::Blue) {
        m.blue[i] |= bit(j);
        m.blue[j] |= bit(i);
      }
    }
  return m;
}

void toggle(Masks& m, const Edge& e) {
  m.red[e.u] ^= bit(e.v);
  m.blue[e.u] ^= bit(e.v);
  m.red[e.v] ^= bit(e.u);
  m.blue[e.v] ^= bit(e.u);
}

// Blob j of vertex v must see blob k in pattern(j, k).
bool blobs_valid(const Masks& m, const std::array<Mask, 5>& blob) {
  for (int j = 0; j < 5; ++j) {
    const Mask need_red = blob[(j + 1) % 5] | blob[(j + 4) % 5];
    const Mask need_blue = blob[(j + 2) % 5] | blob[(j + 3) % 5];
    bool ok = true;
    for_each_bit(blob[j], [&](int v) { ok = ok && (m.red[v] & need_red) == need_red && (m.blue[v] & need_blue) == need_blue; });
    if (!ok) return false;
  }
  return true;
}

std::optional<std::array<Mask, 5>> find_blowup(const Masks& m, int n) {
  if (n < 5) return std::nullopt;
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  const int a1 = 0;
  std::optional<std::array<Mask, 5>> result;
  auto attempt = [&](const std::array<int, 5>& t) {
    std::array<Mask, 5> blob{};
    for (int j = 0; j < 5; ++j) blob[j] = bit(t[j]);
    const Mask placed = blob[0] | blob[1] | blob[2] | blob[3] | blob[4];
    bool ok = true;
    for_each_bit(all & ~placed, [&](int v) {
      if (!ok) return;
      for (int j = 0; j < 5; ++j) {
        bool fits = true;
        for (int k = 0; k < 5 && fits; ++k) {
          if (k == j) continue;
          const Mask& side = pattern(j, k) == EdgeColor::Red ? m.red[v] : m.blue[v];
          fits = (side >> t[k]) & 1;
        }
        if (fits) {
          blob[j] |= bit(v);
          return;
        }
      }
      ok = false;
    });
    if (ok && blobs_valid(m, blob)) result = blob;
  };
  for_each_bit(m.red[a1], [&](int a2) {
    if (result) return;
    for_each_bit(m.red[a1] & m.blue[a2] & ~(bit(a2 + 1) - 1), [&](int a5) {
      if (result) return;
      for_each_bit(m.blue[a1] & m.red[a2] & m.blue[a5], [&](int a3) {
        if (result) return;
        for_each_bit(m.blue[a1] & m.blue[a2] & m.red[a3] & m.red[a5], [&](int a4) {
          if (!result) attempt({a1, a2, a3, a4, a5});
        });
      });
    });
  });
  return result;
}

std::array<std::vector<int>, 5> canonical_order(const std::array<Mask, 5>& blob) {
  std::array<int, 5> best_sizes{};
  std::array<int, 5> best_map{};
  bool have = false;
  for (int s : {1, -1}) {
    for (int r = 0; r < 5; ++r) {
      std::array<int, 5> map{}, sizes{};
      for (int j = 0; j < 5; ++j) map[j] = ((r + s * j) % 5 + 5) % 5;
      for (int j = 0; j < 5; ++j) sizes[j] = std::popcount(blob[map[j]]);
      if (!have || sizes > best_sizes) {
        best_sizes = sizes;
        best_map = map;
        have = true;
      }
    }
  }
  std::array<std::vector<int>, 5> out;
  for (int j = 0; j < 5; ++j) for_each_bit(blob[best_map[j]], [&](int v) { out[j].push_back(v); });
  return out;
}

void check_apex_preconditions(const ColoredGraph& g, int u, const PentagonCert& cert) {
  if (u < 0 || u >= g.n()) throw InputError("apex out of range");
  if (!cert.flips.empty()) throw UsageError("apex analysis needs a certificate without flips");
  if (blob_of(cert, u) >= 0) throw UsageError("apex lies in a blob");
  if (!g.is_complete()) throw UsageError("apex analysis needs a complete colouring");
  if (!is_pentagon_blowup(g, cert)) throw UsageError("blobs do not form a pentagon blow-up");
}

}  // namespace

std::optional<BipartitionCert> bip_distance_at_most(const SimpleGraph& g, int k) {
  if (k < 0) throw InputError("k must be non-negative");
  SimpleGraph h = g;
  if (!bipartize(h, k)) return std::nullopt;
  return two_colouring(h, g);
}

bool verify_bipartition(const SimpleGraph& g, const BipartitionCert& cert, int k) {
  std::vector<int> side(g.n(), -1);
  for (int v : cert.x1) {
    if (v < 0 || v >= g.n() || side[v] >= 0) return false;
    side[v] = 0;
  }
  for (int v : cert.x2) {
    if (v < 0 || v >= g.n() || side[v] >= 0) return false;
    side[v] = 1;
  }
  if (std::count(side.begin(), side.end(), -1) > 0) return false;
  if (static_cast<int>(cert.removed_edges.size()) > k) return false;
  for (const Edge& e : g.edges()) {
    if (side[e.u] == side[e.v] &&
        std::find(cert.removed_edges.begin(), cert.removed_edges.end(), e) == cert.removed_edges.end()) {
      return false;
    }
  }
  return true;
}

int min_bipartization(const SimpleGraph& g) {
  const int n = g.n();
  if (n > 28) throw UsageError("exhaustive bipartition scan is limited to n <= 28");
  if (n <= 1) return 0;
  // Vertex n-1 stays on side 0; Gray code over the others.
  Mask side = 0;
  int internal = g.num_edges();
  int best = internal;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  const Mask all = bit(n) - 1;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int v = std::countr_zero(i);
    const Mask adj = g.neighbours(v);
    const Mask same = (side >> v) & 1 ? side : (all & ~side);
    const int before = std::popcount(adj & same);
    const int after = std::popcount(adj) - before;
    internal += after - before;
    side ^= bit(v);
    best = std::min(best, internal);
  }
  return best;
}

Rational e_bip(const SimpleGraph& g) {
  const int n = g.n();
  const int m = min_bipartization(g);
  if (n == 0) return Rational(0);
  return make_rational(m, static_cast<long>(n) * n);
}

std::array<int, 5> PentagonCert::sizes() const {
  std::array<int, 5> out{};
  for (int j = 0; j < 5; ++j) out[j] = static_cast<int>(blobs[j].size());
  return out;
}

std::array<int, 5> PentagonCert::sorted_sizes() const {
  std::array<int, 5> out = sizes();
  std::sort(out.begin(), out.end());
  return out;
}

int blob_of(const PentagonCert& cert, int v) {
  for (int j = 0; j < 5; ++j)
    if (std::find(cert.blobs[j].begin(), cert.blobs[j].end(), v) != cert.blobs[j].end()) return j;
  return -1;
}

bool is_pentagon_blowup(const ColoredGraph& g, const PentagonCert& cert) {
  if (g.n() > 64) return false;
  std::array<Mask, 5> blob{};
  Mask seen = 0;
  for (int j = 0; j < 5; ++j) {
    if (cert.blobs[j].empty()) return false;
    for (int v : cert.blobs[j]) {
      if (v < 0 || v >= g.n() || ((seen >> v) & 1)) return false;
      seen |= bit(v);
      blob[j] |= bit(v);
    }
  }
  Masks m = masks_of(g);
  for (const Edge& e : cert.flips) {
    if (e.u < 0 || e.v >= g.n() || e.u >= e.v || g.at(e.u, e.v) == EdgeColor::Unassigned) return false;
    toggle(m, e);
  }
  return blobs_valid(m, blob);
}

std::optional<PentagonCert> pentagon_distance(const ColoredGraph& g, int max_flips) {
  if (max_flips < 0 || max_flips > 1) throw InputError("max_flips must be 0 or 1");
  if (g.n() > 64) throw UsageError("pentagon detection supports at most 64 vertices");
  if (g.n() < 5) return std::nullopt;
  Masks m = masks_of(g);
  if (auto blob = find_blowup(m, g.n())) return PentagonCert{canonical_order(*blob), {}};
  if (max_flips == 0) return std::nullopt;
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) {
      if (g.at(i, j) == EdgeColor::Unassigned) continue;
      toggle(m, {i, j});
      auto blob = find_blowup(m, g.n());
      toggle(m, {i, j});
      if (blob) return PentagonCert{canonical_order(*blob), {{i, j}}};
    }
  return std::nullopt;
}

std::vector<BadConfiguration> bad_configurations(const ColoredGraph& g, int u, const PentagonCert& cert) {
  check_apex_preconditions(g, u, cert);
  std::vector<BadConfiguration> out;
  for (EdgeColor c : {EdgeColor::Red, EdgeColor::Blue}) {
    const std::array<int, 3> offsets = c == EdgeColor::Red ? std::array<int, 3>{0, 2, 3} : std::array<int, 3>{0, 1, 2};
    for (int i = 0; i < 5; ++i) {
      std::array<std::vector<int>, 3> nbrs;
      for (int s = 0; s < 3; ++s)
        for (int v : cert.blobs[(i + offsets[s]) % 5])
          if (g.at(u, v) == c) nbrs[s].push_back(v);
      for (int x : nbrs[0])
        for (int y : nbrs[1])
          for (int z : nbrs[2]) out.push_back(BadConfiguration{u, c, i, {x, y, z}});
    }
  }
  return out;
}

DisjointConfigurations max_disjoint_bad_configs(const std::vector<BadConfiguration>& list) {
  std::vector<Mask> masks;
  masks.reserve(list.size());
  for (const auto& b : list) {
    Mask m = 0;
    for (int v : b.vertices) {
      if (v < 0 || v >= 64) throw InputError("configuration vertex out of range");
      m |= bit(v);
    }
    masks.push_back(m);
  }
  std::vector<int> chosen, best_chosen;
  std::function<void(Mask)> search = [&](Mask blocked) {
    if (chosen.size() > best_chosen.size()) best_chosen = chosen;
    Mask live = 0;
    for (Mask m : masks)
      if ((m & blocked) == 0) live |= m;
    if (live == 0) return;
    if (chosen.size() + std::popcount(live) / 3 <= best_chosen.size()) return;
    const int v = std::countr_zero(live);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if ((masks[i] & blocked) != 0 || ((masks[i] >> v) & 1) == 0) continue;
      chosen.push_back(static_cast<int>(i));
      search(blocked | masks[i]);
      chosen.pop_back();
    }
    search(blocked | bit(v));
  };
  search(0);
  DisjointConfigurations out;
  out.t = static_cast<int>(best_chosen.size());
  for (int i : best_chosen) out.witness.push_back(list[i]);
  return out;
}

std::array<int, 5> apex_flip_counts(const ColoredGraph& g, int u, const PentagonCert& cert) {
  check_apex_preconditions(g, u, cert);
  std::array<int, 5> counts{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (j == i) continue;
      for (int v : cert.blobs[j])
        if (g.at(u, v) != pattern(i, j)) ++counts[i];
    }
  return counts;
}

Absorption absorb_apex(const ColoredGraph& g, int u, const PentagonCert& cert) {
  const std::array<int, 5> counts = apex_flip_counts(g, u, cert);
  const int i = static_cast<int>(std::min_element(counts.begin(), counts.end()) - counts.begin());
  Absorption out{i, {}};
  for (int j = 0; j < 5; ++j) {
    if (j == i) continue;
    for (int v : cert.blobs[j])
      if (g.at(u, v) != pattern(i, j)) out.flips.push_back(make_edge(u, v));
  }
  std::sort(out.flips.begin(), out.flips.end());
  return out;
}

}  // namespace tripack
