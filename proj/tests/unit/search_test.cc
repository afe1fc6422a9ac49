#include "tripack/search.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_util.h"
#include "tripack/constructions.h"
#include "tripack/errors.h"

namespace tripack {
namespace {

ColoredGraph with_new_vertex(const ColoredGraph& host, const std::vector<std::pair<int, EdgeColor>>& edges) {
  ColoredGraph g = add_vertex(host);
  for (auto [v, c] : edges) g = set_edge(g, v, host.n(), c);
  return g;
}

SearchNode node_for(const ColoredGraph& g, int depth) {
  return SearchNode{g, nu_star(g, EdgeColor::Red).packing, nu_star(g, EdgeColor::Blue).packing, depth};
}

TEST(Threshold, Parser) {
  EXPECT_EQ(default_threshold(2), make_rational(3, 2));
  EXPECT_EQ(default_threshold(17), make_rational(153, 2));
  const auto t = parse_threshold("n*(n+1)/4");
  for (int n = 0; n < 30; ++n) EXPECT_EQ(t(n), default_threshold(n));
  EXPECT_EQ(parse_threshold("n*(n-1)/4")(5), 5);
  EXPECT_EQ(parse_threshold("76.5")(3), make_rational(153, 2));
  EXPECT_EQ(parse_threshold(" (n-1)^2 / 4 - 1/2 ")(9), make_rational(31, 2));
  EXPECT_EQ(parse_threshold("-n + 2^-1")(1), make_rational(-1, 2));
  EXPECT_THROW(parse_threshold("n +"), ParseError);
  EXPECT_THROW(parse_threshold("m"), ParseError);
  EXPECT_THROW(parse_threshold("n^x"), ParseError);
  EXPECT_THROW(parse_threshold("(n"), ParseError);
  EXPECT_THROW(parse_threshold("nn"), ParseError);
  EXPECT_THROW(parse_threshold("1."), ParseError);
  EXPECT_THROW(parse_threshold("1/(n-3)")(3), InputError);
}

TEST(ChooseVertex, Examples) {
  const ColoredGraph k3(3, EdgeColor::Red);
  SearchNode last = node_for(with_new_vertex(k3, {{0, EdgeColor::Red}, {2, EdgeColor::Blue}}), 2);
  EXPECT_EQ(choose_next_vertex(last, VertexOrder::Greedy), 1);
  EXPECT_EQ(choose_next_vertex(last, VertexOrder::Fixed), 1);
  const SearchNode fresh = start_node(k3, {}, {EdgeColor::Blue, {}});
  EXPECT_EQ(choose_next_vertex(fresh, VertexOrder::Fixed), 0);

  // Host: 0-1, 0-2 red, the rest blue; u-1 and u-2 red. Exposing u-0 closes
  // two triangles in red, exposing u-3 closes none.
  ColoredGraph host(4, EdgeColor::Blue);
  host.assign(0, 1, EdgeColor::Red);
  host.assign(0, 2, EdgeColor::Red);
  const SearchNode s = node_for(with_new_vertex(host, {{1, EdgeColor::Red}, {2, EdgeColor::Red}}), 2);
  EXPECT_EQ(choose_next_vertex(s, VertexOrder::Greedy), 0);
  EXPECT_EQ(choose_next_vertex(s, VertexOrder::Fixed), 0);
  const SearchNode s2 = node_for(with_new_vertex(host, {{0, EdgeColor::Blue}, {1, EdgeColor::Blue}}), 2);
  // u-3 closes blue triangles with 1 and 0 (1-3 and 0-3 blue); u-2 closes one with 1.
  EXPECT_EQ(choose_next_vertex(s2, VertexOrder::Greedy), 3);
  EXPECT_EQ(choose_next_vertex(s2, VertexOrder::Fixed), 2);

  const SearchNode full = node_for(ColoredGraph(3, EdgeColor::Red), 2);
  EXPECT_THROW(choose_next_vertex(full, VertexOrder::Greedy), UsageError);
}

TEST(Expose, Examples) {
  const ColoredGraph k3(3, EdgeColor::Red);
  const SearchNode root = start_node(k3, nu_star(k3, EdgeColor::Red).packing, {EdgeColor::Blue, {}});
  EXPECT_EQ(root.f_r.value(), 1);
  auto [r0, b0] = expose(root, 0);
  EXPECT_EQ(r0.f_r.value(), 1);
  EXPECT_EQ(r0.f_b.value(), 0);
  EXPECT_EQ(b0.f_r, root.f_r);
  EXPECT_EQ(r0.depth, 1);
  EXPECT_EQ(r0.graph.at(3, 0), EdgeColor::Red);
  EXPECT_EQ(b0.graph.at(3, 0), EdgeColor::Blue);

  auto [r1, b1] = expose(r0, 1);
  auto [r2, b2] = expose(r1, 2);
  EXPECT_EQ(r2.f_r.value(), 2);
  EXPECT_EQ(r2.value(), 6);
  EXPECT_EQ(b2.f_r.value(), r1.f_r.value());
  EXPECT_TRUE(is_feasible(r2.f_r, r2.graph));
  EXPECT_THROW(expose(r2, 0), UsageError);
}

TEST(Expose, WarmStartsGiveTheSameValues) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 5;
    const ColoredGraph host = testing::random_coloring(n, rng);
    const PackValue v = pack(host);
    SearchNode node = start_node(host, v.red.packing, v.blue.packing);
    while (node.depth < n) {
      const int next = choose_next_vertex(node, VertexOrder::Greedy);
      auto warm = expose(node, next, true);
      auto cold = expose(node, next, false);
      ASSERT_EQ(warm.first.f_r.value(), cold.first.f_r.value());
      ASSERT_EQ(warm.second.f_b.value(), cold.second.f_b.value());
      const ColoredGraph& g = warm.first.graph;
      ASSERT_EQ(warm.first.value(),
                3 * (nu_star(g, EdgeColor::Red).primal_value + nu_star(g, EdgeColor::Blue).primal_value));
      node = rng() % 2 ? warm.first : warm.second;
    }
    EXPECT_EQ(node.value(), pack(node.graph).value);
  }
}

TEST(Prune, Examples) {
  const SearchNode mono = node_for(ColoredGraph(3, EdgeColor::Red), 2);
  auto cert = prune(mono, make_rational(3, 2));
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->value, 3);
  EXPECT_FALSE(prune(mono, Rational(3)).has_value());

  const SearchNode pentagon = node_for(pentagon_blowup(blob_spec({1, 1, 1, 1, 1})).graph, 4);
  EXPECT_FALSE(prune(pentagon, Rational(0)).has_value());
  EXPECT_TRUE(prune(pentagon, Rational(-1)).has_value());
}

TEST(Classify, Examples) {
  const ColoredGraph b = pentagon_blowup(blob_spec({3, 3, 3, 4, 4})).graph;
  const ClassifyResult p = classify_complete(b, {FilterKind::Pentagon});
  ASSERT_EQ(p.kind, Classification::FilteredPentagon);
  EXPECT_EQ(p.pentagon->sorted_sizes(), (std::array<int, 5>{3, 3, 3, 4, 4}));
  EXPECT_EQ(classify_complete(b, {}).kind, Classification::Keep);
  EXPECT_EQ(classify_complete(b, {FilterKind::Bipartite, 2}).kind, Classification::Keep);

  const ColoredGraph bm = delete_vertex(bipartite_minus_matching(22, 5), 3);
  const ClassifyResult q = classify_complete(bm, {FilterKind::Bipartite, 2});
  ASSERT_EQ(q.kind, Classification::FilteredBipartite);
  EXPECT_EQ(q.bipartite_color, EdgeColor::Blue);
  EXPECT_TRUE(verify_bipartition(color_class(bm, EdgeColor::Blue), *q.bipartite, 2));
  EXPECT_EQ(classify_complete(bm, {FilterKind::Pentagon}).kind, Classification::Keep);
  EXPECT_THROW(classify_complete(ColoredGraph(3), {}), UsageError);
}

TEST(Survivor, CanonicalFormCarriesPackings) {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 20; ++trial) {
    const ColoredGraph g = testing::random_coloring(7, rng, 0.3);
    const PackValue v = pack(g);
    for (bool swap : {false, true}) {
      const Survivor s = make_survivor(g, v.red.packing, v.blue.packing, swap);
      EXPECT_EQ(s.key.bytes, serialize(s.graph));
      EXPECT_EQ(s.red.color, EdgeColor::Red);
      EXPECT_EQ(s.blue.color, EdgeColor::Blue);
      EXPECT_TRUE(is_feasible(s.red, s.graph));
      EXPECT_TRUE(is_feasible(s.blue, s.graph));
      EXPECT_EQ(s.value(), v.value);
      const Survivor t = make_survivor(testing::permuted(g, testing::random_permutation(7, rng)), v.red.packing,
                                       v.blue.packing, swap);
      EXPECT_EQ(t.graph, s.graph);
    }
  }
}

std::set<std::string> keys(const std::vector<Survivor>& list) {
  std::set<std::string> out;
  for (const Survivor& s : list) out.insert(s.key.bytes);
  return out;
}

// Colourings of K_n with pack <= (n-1)n/4, one per class, from the graph
// classes (red = edge).
std::set<std::string> oracle(int n, bool swap) {
  std::set<std::string> out;
  for (const SimpleGraph& g : testing::graphs_up_to_iso(n)) {
    const ColoredGraph c = testing::as_coloring(g);
    if (pack(c).value <= default_threshold(n - 1)) out.insert(canonical_key(c, swap).first.bytes);
  }
  return out;
}

// Every labeled colouring, n <= 5.
std::set<std::string> labeled_oracle(int n, bool swap) {
  std::set<std::string> out;
  const int pairs = n * (n - 1) / 2;
  for (long mask = 0; mask < (1L << pairs); ++mask) {
    std::vector<EdgeColor> colors(pairs);
    for (int i = 0; i < pairs; ++i) colors[i] = (mask >> i) & 1 ? EdgeColor::Red : EdgeColor::Blue;
    const ColoredGraph c(n, colors);
    if (pack(c).value <= default_threshold(n - 1)) out.insert(canonical_key(c, swap).first.bytes);
  }
  return out;
}

TEST(RunSearch, SmallLevelsMatchOracles) {
  for (bool swap : {true, false}) {
    SearchConfig cfg;
    cfg.n_end = 7;
    cfg.admit_swap = swap;
    const SearchResult r = run_search({ColoredGraph(0)}, cfg);
    ASSERT_EQ(r.reports.size(), 7u);
    for (const LevelReport& rep : r.reports) EXPECT_TRUE(rep.balanced()) << rep.n;
    EXPECT_EQ(r.lists.at(3).size(), swap ? 1u : 2u);
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(keys(r.lists.at(n)), labeled_oracle(n, swap)) << n;
    for (int n = 6; n <= 7; ++n) EXPECT_EQ(keys(r.lists.at(n)), oracle(n, swap)) << n;
    for (const auto& [n, list] : r.lists) {
      EXPECT_EQ(keys(list).size(), list.size());
      for (const Survivor& s : list) {
        EXPECT_TRUE(s.graph.is_complete());
        EXPECT_LE(s.value(), default_threshold(n - 1 < 0 ? 0 : n - 1));
        EXPECT_EQ(s.value(), pack(s.graph).value);
      }
    }
  }
}

TEST(RunSearch, LevelThreeByHand) {
  SearchConfig cfg;
  cfg.n_end = 3;
  cfg.admit_swap = false;
  const SearchResult r = run_search({ColoredGraph(0)}, cfg);
  // RRB and RBB; the two monochromatic triangles are pruned.
  const auto& l3 = r.lists.at(3);
  ASSERT_EQ(l3.size(), 2u);
  for (const Survivor& s : l3) EXPECT_EQ(s.value(), 0);
  EXPECT_EQ(r.reports[2].pruned, 2);
}

TEST(RunSearch, PrunedNodesCarryValidCertificates) {
  SearchConfig cfg;
  cfg.n_end = 6;
  cfg.record_pruned = true;
  const SearchResult r = run_search({ColoredGraph(0)}, cfg);
  long pruned = 0;
  for (const LevelReport& rep : r.reports) pruned += rep.pruned;
  ASSERT_EQ(static_cast<long>(r.pruned.size()), pruned);
  ASSERT_GT(pruned, 0);
  for (const PrunedRecord& p : r.pruned) {
    const Rational threshold = default_threshold(p.graph.n() - 1);
    EXPECT_NO_THROW(check_feasible(p.certificate.red, p.graph));
    EXPECT_NO_THROW(check_feasible(p.certificate.blue, p.graph));
    EXPECT_EQ(p.certificate.value, 3 * (p.certificate.red.value() + p.certificate.blue.value()));
    EXPECT_GT(p.certificate.value, threshold);
  }
}

TEST(RunSearch, ParallelRunsAreIdentical) {
  SearchConfig cfg;
  cfg.n_end = 7;
  const SearchResult one = run_search({ColoredGraph(0)}, cfg);
  cfg.jobs = 4;
  const SearchResult four = run_search({ColoredGraph(0)}, cfg);
  EXPECT_EQ(one.lists, four.lists);
  EXPECT_EQ(one.reports, four.reports);
}

TEST(RunSearch, FixedOrderFindsTheSameClasses) {
  SearchConfig cfg;
  cfg.n_end = 7;
  const SearchResult greedy = run_search({ColoredGraph(0)}, cfg);
  cfg.vertex_order = VertexOrder::Fixed;
  const SearchResult fixed = run_search({ColoredGraph(0)}, cfg);
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(keys(greedy.lists.at(n)), keys(fixed.lists.at(n)));
}

TEST(RunSearch, SeededLevel) {
  SearchConfig cfg;
  cfg.n_start = 8;
  cfg.n_end = 9;
  const SearchResult r = run_search({bipartite_minus_matching(8, 0)}, cfg);
  ASSERT_FALSE(r.lists.at(9).empty());
  for (const Survivor& s : r.lists.at(9)) EXPECT_LE(pack(s.graph).value, 18);

  EXPECT_THROW(run_search({ColoredGraph(8)}, cfg), InputError);
  EXPECT_THROW(run_search({bipartite_minus_matching(7, 0)}, cfg), InputError);
  const ColoredGraph g = bipartite_minus_matching(8, 0);
  EXPECT_THROW(run_search({g, testing::permuted(g, {7, 6, 5, 4, 3, 2, 1, 0})}, cfg), InputError);
}

TEST(RunSearch, FiltersRemoveCompletions) {
  SearchConfig cfg;
  cfg.n_end = 6;
  cfg.filters[5] = {FilterKind::Bipartite, 1};
  const SearchResult r = run_search({ColoredGraph(0)}, cfg);
  EXPECT_GT(r.reports[5].filtered, 0);
  EXPECT_EQ(static_cast<long>(r.filtered.size()), r.reports[5].filtered);
  for (const FilteredGraph& f : r.filtered) {
    EXPECT_EQ(f.result.kind, Classification::FilteredBipartite);
    EXPECT_TRUE(verify_bipartition(color_class(f.graph, f.result.bipartite_color), *f.result.bipartite, 1));
  }
  for (const Survivor& s : r.lists.at(6)) {
    EXPECT_FALSE(bip_distance_at_most(color_class(s.graph, EdgeColor::Red), 1).has_value());
    EXPECT_FALSE(bip_distance_at_most(color_class(s.graph, EdgeColor::Blue), 1).has_value());
  }
  EXPECT_TRUE(r.reports[5].balanced());
}

TEST(Checkpoint, RoundTripsAndResumes) {
  SearchConfig cfg;
  cfg.n_end = 7;
  cfg.checkpoint_every = 2;
  std::vector<SearchState> states;
  cfg.on_checkpoint = [&](const SearchState& s) { states.push_back(s); };
  const SearchResult full = run_search({ColoredGraph(0)}, cfg);
  ASSERT_GE(states.size(), 3u);

  std::size_t mid_level = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::string text = write_checkpoint(states[i]);
    const SearchState back = read_checkpoint(text);
    EXPECT_EQ(back, states[i]) << i;
    EXPECT_EQ(write_checkpoint(back), text) << i;
    if (states[i].next_parent > 0 && states[i].level == 6) mid_level = i;
  }
  ASSERT_GT(mid_level, 0u);

  SearchConfig plain = cfg;
  plain.on_checkpoint = nullptr;
  const SearchResult resumed = resume_search(read_checkpoint(write_checkpoint(states[mid_level])), plain);
  EXPECT_EQ(resumed.lists.at(7), full.lists.at(7));
  EXPECT_EQ(resumed.reports.back(), full.reports.back());
}

TEST(Checkpoint, RejectsBadInput) {
  SearchConfig cfg;
  cfg.n_end = 4;
  SearchState last;
  cfg.on_checkpoint = [&](const SearchState& s) { last = s; };
  run_search({ColoredGraph(0)}, cfg);
  const std::string text = write_checkpoint(last);

  std::string v2 = text;
  v2.replace(0, std::string("TRIPACK-CHECKPOINT v1").size(), "TRIPACK-CHECKPOINT v2");
  EXPECT_THROW(read_checkpoint(v2), ParseError);
  EXPECT_THROW(read_checkpoint("hello\n"), ParseError);
  EXPECT_THROW(read_checkpoint(text.substr(0, text.size() / 2)), ParseError);
  EXPECT_THROW(read_checkpoint(text + "extra\n"), ParseError);

  // A survivor whose packing overloads an edge.
  std::string bad = text;
  const std::size_t at = bad.find("\nR ");
  ASSERT_NE(at, std::string::npos);
  const std::size_t eol = bad.find('\n', at + 1);
  const std::size_t space = bad.rfind(' ', eol);
  bad.replace(space + 1, eol - space - 1, "7/2");
  EXPECT_THROW(read_checkpoint(bad), ParseError);
}

// Seeds: the three 17-vertex blow-up families; no pentagon filter.
TEST(RunSearch, SeventeenVertexBlowupsExtendOnlyNearPentagons) {
  SearchConfig cfg;
  cfg.n_start = 17;
  cfg.n_end = 18;
  cfg.jobs = 3;
  std::vector<ColoredGraph> seeds;
  for (const auto& s : {std::array<int, 5>{3, 3, 3, 4, 4}, {2, 3, 4, 4, 4}, {3, 3, 3, 3, 5}})
    seeds.push_back(pentagon_blowup(blob_spec(s)).graph);
  const SearchResult r = run_search(seeds, cfg);
  EXPECT_EQ(cfg.threshold(17), make_rational(153, 2));
  ASSERT_FALSE(r.lists.at(18).empty());
  for (const Survivor& s : r.lists.at(18)) {
    const bool near = pentagon_distance(s.graph, 1).has_value();
    EXPECT_TRUE(near || s.value() > cfg.threshold(17));
  }
  EXPECT_TRUE(r.reports[0].balanced());
}

}  // namespace
}  // namespace tripack
