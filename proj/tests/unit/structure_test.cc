#include "tripack/structure.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_util.h"
#include "tripack/constructions.h"
#include "tripack/errors.h"

namespace tripack {
namespace {

SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

TEST(Bipartite, Examples) {
  const SimpleGraph c5 = cycle(5);
  EXPECT_FALSE(bip_distance_at_most(c5, 0).has_value());
  auto cert = bip_distance_at_most(c5, 1);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->removed_edges.size(), 1u);
  EXPECT_TRUE(verify_bipartition(c5, *cert, 1));

  const SimpleGraph blue = color_class(bipartite_minus_matching(12, 3), EdgeColor::Blue);
  auto b = bip_distance_at_most(blue, 0);
  ASSERT_TRUE(b.has_value());
  EXPECT_TRUE(b->removed_edges.empty());
  EXPECT_TRUE(verify_bipartition(blue, *b, 0));

  SimpleGraph two(6);
  for (int base : {0, 3}) {
    two.add_edge(base, base + 1);
    two.add_edge(base + 1, base + 2);
    two.add_edge(base, base + 2);
  }
  EXPECT_FALSE(bip_distance_at_most(two, 1).has_value());
  auto t = bip_distance_at_most(two, 2);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(verify_bipartition(two, *t, 2));
  EXPECT_THROW(bip_distance_at_most(two, -1), InputError);
}

TEST(Bipartite, EBipExamples) {
  EXPECT_EQ(e_bip(cycle(6)), 0);
  EXPECT_EQ(e_bip(SimpleGraph::complete(4)), make_rational(2, 16));
  EXPECT_EQ(e_bip(cycle(5)), make_rational(1, 25));
  EXPECT_EQ(min_bipartization(SimpleGraph::complete(7)), 9);
  EXPECT_THROW(e_bip(SimpleGraph(29)), UsageError);
}

TEST(Bipartite, AgreesWithExhaustiveScanOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      SimpleGraph g(n);
      int bitpos = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bitpos)
          if ((mask >> bitpos) & 1) g.add_edge(i, j);
      const int m = min_bipartization(g);
      for (int k = std::max(0, m - 1); k <= m + 1; ++k) {
        auto cert = bip_distance_at_most(g, k);
        ASSERT_EQ(cert.has_value(), m <= k) << n << " " << mask << " " << k;
        if (cert) EXPECT_TRUE(verify_bipartition(g, *cert, k));
      }
    }
  }
}

TEST(Bipartite, AgreesWithExhaustiveScanUpToIsomorphism) {
  const std::size_t expected_classes[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 7; n <= 8; ++n) {
    const auto classes = testing::graphs_up_to_iso(n);
    ASSERT_EQ(classes.size(), expected_classes[n]);
    for (const SimpleGraph& g : classes) {
      const int m = min_bipartization(g);
      ASSERT_EQ(e_bip(g), make_rational(m, n * n));
      for (int k = std::max(0, m - 1); k <= m; ++k) {
        auto cert = bip_distance_at_most(g, k);
        ASSERT_EQ(cert.has_value(), m <= k);
        if (cert) ASSERT_TRUE(verify_bipartition(g, *cert, k));
      }
    }
  }
}

TEST(Bipartite, AgreesWithExhaustiveScanOnRandomGraphs) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 7 + trial % 14;
    // Sparse enough that the minimum deletion count stays small.
    SimpleGraph g = color_class(bipartite_minus_matching(n, 0), EdgeColor::Blue);
    std::uniform_int_distribution<int> vertex(0, n - 1);
    for (int extra = 0; extra < 1 + trial % 4; ++extra) {
      const int u = vertex(rng), v = vertex(rng);
      if (u != v) g.add_edge(u, v);
    }
    for (int drop = 0; drop < trial % 6; ++drop) {
      const int u = vertex(rng), v = vertex(rng);
      if (u != v) g.remove_edge(u, v);
    }
    const int m = min_bipartization(g);
    for (int k = std::max(0, m - 1); k <= m; ++k) {
      auto cert = bip_distance_at_most(g, k);
      EXPECT_EQ(cert.has_value(), m <= k);
      if (cert) EXPECT_TRUE(verify_bipartition(g, *cert, k));
    }
    EXPECT_EQ(e_bip(g), make_rational(m, n * n));
  }
}

// All assignments of vertices to five non-empty blobs, vertex 0 in blob 0.
bool brute_force_blowup(const ColoredGraph& g) {
  const int n = g.n();
  if (n < 5) return false;
  std::vector<int> blob(n, 0);
  std::uint64_t total = 1;
  for (int i = 1; i < n; ++i) total *= 5;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    int seen = 1;
    for (int i = 1; i < n; ++i) {
      blob[i] = static_cast<int>(c % 5);
      c /= 5;
      seen |= 1 << blob[i];
    }
    if (seen != 31) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) {
        const int d = (blob[j] - blob[i] + 5) % 5;
        if (d == 0) continue;
        ok = g.at(i, j) == (d == 1 || d == 4 ? EdgeColor::Red : EdgeColor::Blue);
      }
    if (ok) return true;
  }
  return false;
}

int brute_force_distance(const ColoredGraph& g) {
  if (brute_force_blowup(g)) return 0;
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (brute_force_blowup(flip_edge(g, {i, j}))) return 1;
  return 2;
}

ColoredGraph random_near_blowup(int n, std::mt19937_64& rng, int flips) {
  std::array<int, 5> sizes{1, 1, 1, 1, 1};
  for (int extra = 5; extra < n; ++extra) ++sizes[rng() % 5];
  BlobSpec spec = blob_spec(sizes);
  for (int j = 0; j < 5; ++j) {
    spec.interior[j] = Interior::Given;
    spec.given[j] = testing::random_coloring(sizes[j], rng);
  }
  ColoredGraph g = pentagon_blowup(spec).graph;
  g = testing::permuted(g, testing::random_permutation(n, rng));
  for (int f = 0; f < flips; ++f) {
    const int u = static_cast<int>(rng() % n);
    const int v = (u + 1 + static_cast<int>(rng() % (n - 1))) % n;
    g = flip_edge(g, make_edge(u, v));
  }
  return g;
}

TEST(Pentagon, BlowupExamples) {
  const Blowup b = pentagon_blowup(blob_spec({3, 3, 3, 4, 4}));
  auto cert = pentagon_distance(b.graph, 0);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(cert->flips.empty());
  EXPECT_EQ(cert->sorted_sizes(), (std::array<int, 5>{3, 3, 3, 4, 4}));
  EXPECT_EQ(cert->sizes(), (std::array<int, 5>{4, 4, 3, 3, 3}));
  EXPECT_TRUE(is_pentagon_blowup(b.graph, *cert));

  const Edge e = make_edge(b.cert.blobs[0][1], b.cert.blobs[2][0]);
  const ColoredGraph flipped = flip_edge(b.graph, e);
  EXPECT_FALSE(pentagon_distance(flipped, 0).has_value());
  auto one = pentagon_distance(flipped, 1);
  ASSERT_TRUE(one.has_value());
  ASSERT_EQ(one->flips.size(), 1u);
  EXPECT_EQ(one->flips[0], e);
  EXPECT_TRUE(is_pentagon_blowup(flipped, *one));
  EXPECT_EQ(one->sorted_sizes(), (std::array<int, 5>{3, 3, 3, 4, 4}));
}

TEST(Pentagon, BipartiteMinusMatchingIsFar) {
  EXPECT_FALSE(pentagon_distance(bipartite_minus_matching(17, 0), 1).has_value());
  EXPECT_FALSE(pentagon_distance(bipartite_minus_matching(17, 8), 1).has_value());
  for (int n = 5; n <= 7; ++n) {
    for (int m = 0; m <= n / 2; ++m) {
      const ColoredGraph g = bipartite_minus_matching(n, m);
      EXPECT_EQ(pentagon_distance(g, 1).has_value(), brute_force_distance(g) <= 1) << n << " " << m;
    }
  }
}

TEST(Pentagon, MatchesBruteForceOnSmallColourings) {
  std::mt19937_64 rng(52);
  int hits[3] = {0, 0, 0};
  for (int trial = 0; trial < 90; ++trial) {
    const int n = 5 + trial % 3;
    const ColoredGraph g = trial % 10 == 9 ? testing::random_coloring(n, rng) : random_near_blowup(n, rng, trial % 3);
    const int expected = brute_force_distance(g);
    ++hits[expected];
    auto zero = pentagon_distance(g, 0);
    auto one = pentagon_distance(g, 1);
    EXPECT_EQ(zero.has_value(), expected == 0);
    EXPECT_EQ(one.has_value(), expected <= 1);
    if (one) {
      EXPECT_TRUE(is_pentagon_blowup(g, *one));
      EXPECT_EQ(one->flips.size(), expected == 0 ? 0u : 1u);
    }
  }
  EXPECT_GT(hits[0], 0);
  EXPECT_GT(hits[1], 0);
  EXPECT_GT(hits[2], 0);
}

TEST(Pentagon, RelabeledBlowupsAreFoundWithSizes) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    std::array<int, 5> sizes;
    for (int& s : sizes) s = 1 + static_cast<int>(rng() % 5);
    const Blowup b = pentagon_blowup(blob_spec(sizes, trial % 2 ? Interior::AllBlue : Interior::AllRed));
    const int n = b.graph.n();
    const ColoredGraph g = testing::permuted(b.graph, testing::random_permutation(n, rng));
    auto cert = pentagon_distance(g, 1);
    ASSERT_TRUE(cert.has_value());
    EXPECT_TRUE(cert->flips.empty());
    EXPECT_TRUE(is_pentagon_blowup(g, *cert));
    std::array<int, 5> sorted = sizes;
    std::sort(sorted.begin(), sorted.end());
    if (*std::min_element(sizes.begin(), sizes.end()) > 1) EXPECT_EQ(cert->sorted_sizes(), sorted);
    EXPECT_GE(cert->sizes(), sorted);  // lexicographic maximum over the dihedral orders
  }
}

TEST(Pentagon, SmallGraphs) {
  EXPECT_FALSE(pentagon_distance(ColoredGraph(4, EdgeColor::Red), 1).has_value());
  EXPECT_FALSE(pentagon_distance(ColoredGraph(5, EdgeColor::Red), 1).has_value());
  EXPECT_THROW(pentagon_distance(ColoredGraph(5, EdgeColor::Red), 2), InputError);
}

// Pentagon on blob vertices plus an apex u = n - 1 whose edges follow `apex`.
ColoredGraph with_apex(const Blowup& b, const std::vector<EdgeColor>& apex) {
  ColoredGraph g = add_vertex(b.graph);
  const int u = g.n() - 1;
  for (int v = 0; v < u; ++v) g = set_edge(g, v, u, apex[v]);
  return g;
}

TEST(BadConfigurations, Examples) {
  const Blowup p = pentagon_blowup(blob_spec({1, 1, 1, 1, 1}));
  const int u = 5;
  auto all_blue = bad_configurations(with_apex(p, std::vector<EdgeColor>(5, EdgeColor::Blue)), u, p.cert);
  ASSERT_EQ(all_blue.size(), 5u);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(all_blue[i].color, EdgeColor::Blue);
    EXPECT_EQ(all_blue[i].window, i);
    EXPECT_EQ(all_blue[i].vertices, (std::array<int, 3>{i, (i + 1) % 5, (i + 2) % 5}));
  }

  std::vector<EdgeColor> c(5, EdgeColor::Blue);
  c[0] = c[2] = c[3] = EdgeColor::Red;
  auto reds = bad_configurations(with_apex(p, c), u, p.cert);
  int red_count = 0;
  for (const auto& b : reds) {
    if (b.color != EdgeColor::Red) continue;
    ++red_count;
    EXPECT_EQ(b.vertices, (std::array<int, 3>{0, 2, 3}));
  }
  EXPECT_EQ(red_count, 1);

  const Blowup q = pentagon_blowup(blob_spec({2, 2, 2, 2, 2}));
  std::vector<EdgeColor> r(10, EdgeColor::Blue);
  for (int v : q.cert.blobs[0]) r[v] = EdgeColor::Red;
  for (int v : q.cert.blobs[1]) r[v] = EdgeColor::Red;
  for (const auto& b : bad_configurations(with_apex(q, r), 10, q.cert)) EXPECT_NE(b.color, EdgeColor::Red);

  EXPECT_THROW(bad_configurations(p.graph, 0, p.cert), UsageError);
}

TEST(BadConfigurations, MaxDisjoint) {
  EXPECT_EQ(max_disjoint_bad_configs({}).t, 0);
  const BadConfiguration a{9, EdgeColor::Red, 0, {0, 1, 2}};
  const BadConfiguration b{9, EdgeColor::Red, 1, {3, 4, 5}};
  const BadConfiguration c{9, EdgeColor::Blue, 2, {2, 6, 7}};
  EXPECT_EQ(max_disjoint_bad_configs({a, b}).t, 2);
  EXPECT_EQ(max_disjoint_bad_configs({a, c}).t, 1);
  auto r = max_disjoint_bad_configs({a, c, b});
  EXPECT_EQ(r.t, 2);
  EXPECT_EQ(r.witness.size(), 2u);
}

TEST(Absorb, Examples) {
  const Blowup q = pentagon_blowup(blob_spec({2, 3, 2, 3, 2}));
  const int n = q.graph.n();
  // u behaves like a vertex of blob index 1.
  std::vector<EdgeColor> like(n);
  for (int j = 0; j < 5; ++j) {
    const int d = (j - 1 + 5) % 5;
    for (int v : q.cert.blobs[j]) like[v] = d == 0 ? EdgeColor::Blue : (d == 1 || d == 4 ? EdgeColor::Red : EdgeColor::Blue);
  }
  const ColoredGraph g = with_apex(q, like);
  const Absorption a = absorb_apex(g, n, q.cert);
  EXPECT_EQ(a.index, 1);
  EXPECT_TRUE(a.flips.empty());
  EXPECT_TRUE(bad_configurations(g, n, q.cert).empty());
}

// Singleton pentagon, all 32 apex colourings.
TEST(Absorb, SingletonPentagonApexColourings) {
  const Blowup p = pentagon_blowup(blob_spec({1, 1, 1, 1, 1}));
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<EdgeColor> c(5);
    for (int v = 0; v < 5; ++v) c[v] = (mask >> v) & 1 ? EdgeColor::Red : EdgeColor::Blue;
    const ColoredGraph g = with_apex(p, c);
    std::vector<Triangle> through_u;
    for (EdgeColor col : {EdgeColor::Red, EdgeColor::Blue})
      for (const Triangle& t : monochromatic_triangles(g, col))
        if (t.contains(5)) through_u.push_back(t);
    EXPECT_FALSE(through_u.empty()) << mask;
    if (!bad_configurations(g, 5, p.cert).empty()) {
      bool disjoint = false;
      for (std::size_t i = 0; i < through_u.size(); ++i)
        for (std::size_t j = i + 1; j < through_u.size(); ++j) {
          const Triangle& s = through_u[i];
          const Triangle& t = through_u[j];
          disjoint = disjoint || (s.a != t.a || s.b != t.b) && !(t.contains(s.a) && s.a != 5) &&
                                     !(t.contains(s.b) && s.b != 5) && !(t.contains(s.c) && s.c != 5);
        }
      EXPECT_TRUE(disjoint) << mask;
    }
  }
}

TEST(Absorb, ZeroBadConfigurationsMeansZeroFlips) {
  std::mt19937_64 rng(54);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::array<int, 5> sizes;
    for (int& s : sizes) s = 2 + static_cast<int>(rng() % 4);
    const Blowup b = pentagon_blowup(blob_spec(sizes));
    const int n = b.graph.n();
    const int home = static_cast<int>(rng() % 5);
    std::vector<EdgeColor> c(n);
    for (int j = 0; j < 5; ++j) {
      const int d = (j - home + 5) % 5;
      for (int v : b.cert.blobs[j]) {
        c[v] = d == 0 ? (rng() % 2 ? EdgeColor::Red : EdgeColor::Blue)
                      : (d == 1 || d == 4 ? EdgeColor::Red : EdgeColor::Blue);
        if (d != 0 && rng() % 6 == 0) c[v] = opposite(c[v]);
      }
    }
    const ColoredGraph g = with_apex(b, c);
    if (!bad_configurations(g, n, b.cert).empty()) continue;
    ++checked;
    EXPECT_TRUE(absorb_apex(g, n, b.cert).flips.empty());
  }
  EXPECT_GT(checked, 20);
}

TEST(Absorb, DisjointConfigurationsCountFlips) {
  std::mt19937_64 rng(55);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::array<int, 5> sizes;
    for (int& s : sizes) s = 2 + static_cast<int>(rng() % 4);
    const Blowup b = pentagon_blowup(blob_spec(sizes));
    const int n = b.graph.n();
    const int home = static_cast<int>(rng() % 5);
    std::vector<EdgeColor> c(n);
    for (int j = 0; j < 5; ++j) {
      const int d = (j - home + 5) % 5;
      for (int v : b.cert.blobs[j]) {
        c[v] = d == 0 ? (rng() % 2 ? EdgeColor::Red : EdgeColor::Blue)
                      : (d == 1 || d == 4 ? EdgeColor::Red : EdgeColor::Blue);
        if (d != 0 && rng() % 8 == 0) c[v] = opposite(c[v]);
      }
    }
    const ColoredGraph g = with_apex(b, c);
    const DisjointConfigurations d = max_disjoint_bad_configs(bad_configurations(g, n, b.cert));
    if (d.t >= *std::min_element(sizes.begin(), sizes.end())) continue;
    ++checked;
    const std::array<int, 5> counts = apex_flip_counts(g, n, b.cert);
    EXPECT_EQ(*std::min_element(counts.begin(), counts.end()), d.t);
    EXPECT_EQ(static_cast<int>(absorb_apex(g, n, b.cert).flips.size()), d.t);
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace tripack
