#ifndef TRIPACK_SEARCH_H_
#define TRIPACK_SEARCH_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tripack/canonical.h"
#include "tripack/graph.h"
#include "tripack/packing.h"
#include "tripack/rational.h"
#include "tripack/structure.h"

// Frontier search over 2-colourings of K_n. Each level L_n is extended by a
// new vertex u whose edges are exposed one at a time; a partial colouring is
// dropped as soon as its maximum packings certify pack > threshold(n).
namespace tripack {

// graph is complete except possibly at the newest vertex; f_r and f_b are
// maximum packings of the assigned part.
struct SearchNode {
  ColoredGraph graph;
  FractionalPacking f_r{EdgeColor::Red, {}};
  FractionalPacking f_b{EdgeColor::Blue, {}};
  int depth = 0;

  Rational value() const { return 3 * (f_r.value() + f_b.value()); }
};

struct SearchState;

enum class FilterKind { None, Pentagon, Bipartite };

struct LevelFilter {
  FilterKind kind = FilterKind::None;
  int k = 2;  // Bipartite: at most k deletions in one colour class
};

enum class VertexOrder { Greedy, Fixed };

// n(n+1)/4
Rational default_threshold(int n);

// Arithmetic over rationals and the variable n: + - * / ^ (integer
// exponent), parentheses, integers and p/q literals. Throws ParseError.
std::function<Rational(int)> parse_threshold(const std::string& expr);

struct SearchConfig {
  // Lists L_n_start .. L_n_end; seeds live on n_start vertices.
  int n_start = 0;
  int n_end = 0;
  // Bound used while extending L_n (argument n = |H|).
  std::function<Rational(int)> threshold = default_threshold;
  // Filters keyed like the threshold, by the order of the extended graph H.
  std::map<int, LevelFilter> filters;
  bool admit_swap = true;
  VertexOrder vertex_order = VertexOrder::Greedy;
  int jobs = 1;
  bool record_pruned = false;
  // Called with the state after every `checkpoint_every` parents and at
  // every level boundary; 0 means level boundaries only.
  std::function<void(const SearchState&)> on_checkpoint;
  long checkpoint_every = 0;
};

enum class Classification { Keep, FilteredPentagon, FilteredBipartite };

struct ClassifyResult {
  Classification kind = Classification::Keep;
  std::optional<PentagonCert> pentagon;
  std::optional<BipartitionCert> bipartite;
  EdgeColor bipartite_color = EdgeColor::Red;
};

// A complete colouring in canonical form with maximum packings.
struct Survivor {
  CanonicalKey key;
  ColoredGraph graph;
  FractionalPacking red{EdgeColor::Red, {}};
  FractionalPacking blue{EdgeColor::Blue, {}};

  Rational value() const { return 3 * (red.value() + blue.value()); }
  bool operator==(const Survivor&) const = default;
};

struct FilteredGraph {
  ColoredGraph graph;
  ClassifyResult result;
};

struct PrunedRecord {
  ColoredGraph graph;
  ExceedCertificate certificate;
};

struct LevelReport {
  int n = 0;  // order of the graphs being extended
  long parents = 0;
  long nodes = 0;  // exposure-tree nodes visited, including completions
  long pruned = 0;
  long completed = 0;
  long filtered = 0;
  long duplicates = 0;
  long survivors = 0;
  // survivors + duplicates + filtered == completed
  bool balanced() const { return survivors + duplicates + filtered == completed; }
  bool operator==(const LevelReport&) const = default;
};

struct SearchState {
  int level = 0;  // the frontier is L_level
  std::vector<Survivor> frontier;
  long next_parent = 0;  // frontier entries already extended
  // Partial L_{level+1}, keyed by canonical key bytes.
  std::map<std::string, Survivor> next;
  std::vector<LevelReport> reports;  // finished levels
  LevelReport current;

  bool operator==(const SearchState&) const = default;
};

struct SearchResult {
  std::map<int, std::vector<Survivor>> lists;  // L_n sorted by key
  std::vector<LevelReport> reports;
  std::vector<FilteredGraph> filtered;
  std::vector<PrunedRecord> pruned;
};

// Seeds must be complete colourings on cfg.n_start vertices.
SearchResult run_search(const std::vector<ColoredGraph>& seeds, const SearchConfig& cfg);
SearchResult resume_search(SearchState state, const SearchConfig& cfg);

// The node from which every edge u-v (u the newest vertex) is exposed.
SearchNode start_node(const ColoredGraph& host, const FractionalPacking& red, const FractionalPacking& blue);
int choose_next_vertex(const SearchNode& node, VertexOrder order);
// Red child first. Warm starts reuse the parent packing of the re-solved colour.
std::pair<SearchNode, SearchNode> expose(const SearchNode& node, int v, bool warm_start = true);
std::optional<ExceedCertificate> prune(const SearchNode& node, const Rational& threshold);
ClassifyResult classify_complete(const ColoredGraph& g, const LevelFilter& filter);

Survivor make_survivor(const ColoredGraph& g, const FractionalPacking& red, const FractionalPacking& blue,
                       bool admit_swap);

std::string write_checkpoint(const SearchState& state);
// Throws ParseError on a version mismatch or corrupt input.
SearchState read_checkpoint(const std::string& text);

}  // namespace tripack

#endif  // TRIPACK_SEARCH_H_
