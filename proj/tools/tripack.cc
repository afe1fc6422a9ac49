#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tripack/canonical.h"
#include "tripack/certificate.h"
#include "tripack/constructions.h"
#include "tripack/errors.h"
#include "tripack/graph.h"
#include "tripack/packing.h"
#include "tripack/search.h"
#include "tripack/structure.h"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace tripack;

namespace {

enum Exit { kOk = 0, kViolated = 1, kParse = 2, kPrecondition = 3 };

// Unreadable files count as parse failures.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw FileError("cannot write " + path.string());
    out << text;
  }
  fs::rename(tmp, path);
}

ColoredGraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  // Both the two-line and the one-line form are accepted.
  if (text.find('\n') == std::string::npos || text.find('\n') == text.size() - 1) {
    if (text.find(' ') != std::string::npos) return parse_graph_inline(text);
  }
  return parse_graph(text);
}

std::string sizes_string(const std::array<int, 5>& s) {
  std::string out;
  for (int x : s) out += std::to_string(x);
  return out;
}

std::array<int, 5> parse_sizes(const std::string& text) {
  std::vector<int> v;
  std::stringstream in(text);
  std::string part;
  if (text.find(',') == std::string::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError("bad blob sizes '" + text + "'", 0);
      v.push_back(c - '0');
    }
  } else {
    while (std::getline(in, part, ',')) {
      try {
        v.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw ParseError("bad blob sizes '" + text + "'", 0);
      }
    }
  }
  if (v.size() != 5) throw ParseError("expected five blob sizes in '" + text + "'", 0);
  return {v[0], v[1], v[2], v[3], v[4]};
}

struct Output {
  bool as_json = false;
  void record(const json& j) const {
    if (as_json) std::cout << j.dump() << "\n";
  }
  void text(const std::string& line) const {
    if (!as_json) std::cout << line << "\n";
  }
};

// pack

struct PackArgs {
  std::string graph;
  std::string certs;
  bool no_certs = false;
  bool float_mode = false;
};

int cmd_pack(const PackArgs& a, const Output& out) {
  const ColoredGraph g = load_graph(a.graph);
  PackingOptions opts;
  if (a.float_mode) opts.mode = SolveMode::Float;
  const PackValue v = pack(g, opts);
  const bool optimal = v.red.status == SolveStatus::Optimal && v.blue.status == SolveStatus::Optimal;
  json rec{{"command", "pack"}, {"n", g.n()}, {"pack", to_string(v.value)}, {"optimal", optimal}};
  if (optimal) {
    out.text("pack = " + to_string(v.value));
  } else {
    const Rational upper = 3 * (v.red.dual_value + v.blue.dual_value);
    out.text("pack >= " + to_string(v.value) + " (upper bound " + to_string(upper) + ")");
    rec["upper"] = to_string(upper);
  }
  if (!a.no_certs) {
    const fs::path dir = a.certs.empty() ? fs::path(a.graph).parent_path() : fs::path(a.certs);
    const std::string stem = fs::path(a.graph).stem().string();
    const fs::path p = dir / (stem + ".pack.cert");
    const fs::path r = dir / (stem + ".cover-R.cert");
    const fs::path b = dir / (stem + ".cover-B.cert");
    write_file(p, write(make_pack_certificate(g, v.red.packing, v.blue.packing)));
    write_file(r, write(make_cover_certificate(v.red.cover)));
    write_file(b, write(make_cover_certificate(v.blue.cover)));
    out.text("certificates: " + p.string() + " " + r.string() + " " + b.string());
    rec["certificates"] = {p.string(), r.string(), b.string()};
  }
  out.record(rec);
  return kOk;
}

// verify

int cmd_verify(const std::string& cert_path, const std::string& graph_path, const Output& out) {
  const std::string text = read_file(cert_path);
  Verdict verdict;
  std::string kind;
  if (certificate_kind(text) == CertificateKind::Pack) {
    kind = "pack";
    const PackCertificate cert = parse_pack_certificate(text);
    if (!graph_path.empty() && !(load_graph(graph_path) == cert.graph)) {
      verdict = {false, "certificate graph differs from " + graph_path};
    } else {
      verdict = verify(cert);
    }
  } else {
    kind = "cover";
    if (graph_path.empty()) throw UsageError("cover certificates need --graph");
    verdict = verify(parse_cover_certificate(text), load_graph(graph_path));
  }
  out.text(verdict.ok ? "ok" : "fail: " + verdict.violation);
  json rec{{"command", "verify"}, {"kind", kind}, {"ok", verdict.ok}};
  if (!verdict.ok) rec["violation"] = verdict.violation;
  out.record(rec);
  return verdict.ok ? kOk : kViolated;
}

// canon

int cmd_canon(const std::string& path, bool no_swap, const Output& out) {
  const ColoredGraph g = load_graph(path);
  const auto [key, witness] = canonical_key(g, !no_swap);
  const ColoredGraph c = relabel(g, witness);
  std::string perm;
  for (int p : witness.perm) perm += (perm.empty() ? "" : " ") + std::to_string(p);
  out.text("canonical: " + serialize_inline(c));
  out.text("perm: " + perm);
  out.text(std::string("swapped: ") + (witness.swapped ? "yes" : "no"));
  out.record({{"command", "canon"},
              {"canonical", serialize_inline(c)},
              {"perm", witness.perm},
              {"swapped", witness.swapped},
              {"swap_admitted", key.swap_admitted}});
  return kOk;
}

// pentagon

int cmd_pentagon(const std::string& path, int max_flips, const Output& out) {
  const ColoredGraph g = load_graph(path);
  const auto cert = pentagon_distance(g, max_flips);
  json rec{{"command", "pentagon"}, {"n", g.n()}};
  if (!cert) {
    out.text("pentagon = none");
    rec["distance"] = nullptr;
    out.record(rec);
    return kOk;
  }
  const int d = static_cast<int>(cert->flips.size());
  out.text(std::string("pentagon = ") + (d == 0 ? "blow-up" : "one flip"));
  out.text("sizes: " + sizes_string(cert->sizes()));
  json blobs = json::array();
  for (int i = 0; i < 5; ++i) {
    std::string line = "blob " + std::to_string(i) + ":";
    for (int v : cert->blobs[i]) line += " " + std::to_string(v);
    out.text(line);
    blobs.push_back(cert->blobs[i]);
  }
  json flips = json::array();
  for (const Edge& e : cert->flips) {
    out.text("flip: " + std::to_string(e.u) + " " + std::to_string(e.v));
    flips.push_back({e.u, e.v});
  }
  rec["distance"] = d;
  rec["sizes"] = cert->sizes();
  rec["blobs"] = blobs;
  rec["flips"] = flips;
  out.record(rec);
  return kOk;
}

// bipdist

int cmd_bipdist(const std::string& path, int k, const std::string& color, const Output& out) {
  const ColoredGraph g = load_graph(path);
  std::vector<EdgeColor> colours;
  if (color == "R" || color == "both") colours.push_back(EdgeColor::Red);
  if (color == "B" || color == "both") colours.push_back(EdgeColor::Blue);
  for (EdgeColor c : colours) {
    const SimpleGraph h = color_class(g, c);
    const char* name = c == EdgeColor::Red ? "R" : "B";
    const auto cert = bip_distance_at_most(h, k);
    json rec{{"command", "bipdist"}, {"color", name}, {"k", k}, {"within", cert.has_value()}};
    std::string line = std::string(name) + ": " + (cert ? "within " : "not within ") + std::to_string(k);
    if (cert) {
      json removed = json::array();
      for (const Edge& e : cert->removed_edges) {
        line += " -" + std::to_string(e.u) + "," + std::to_string(e.v);
        removed.push_back({e.u, e.v});
      }
      rec["x1"] = cert->x1;
      rec["x2"] = cert->x2;
      rec["removed"] = removed;
    }
    if (g.n() <= 28) {
      const Rational e = e_bip(h);
      line += "; e_bip = " + to_string(e);
      rec["e_bip"] = to_string(e);
    }
    out.text(line);
    out.record(rec);
  }
  return kOk;
}

// construct

struct ConstructArgs {
  std::string family;
  std::string sizes = "44444";
  std::string interior = "red";
  bool starred = false;
  int n = 0;
  int m = 0;
  std::string graph;
  std::vector<int> edge;
  std::string out_path;
  bool inline_form = false;
};

int cmd_construct(const ConstructArgs& a, const Output& out) {
  ColoredGraph g;
  if (a.family == "blowup") {
    Interior in = Interior::AllRed;
    if (a.interior == "blue") in = Interior::AllBlue;
    else if (a.interior != "red") throw UsageError("interior must be red or blue");
    const BlobSpec spec = blob_spec(parse_sizes(a.sizes), in);
    g = a.starred ? almost_pentagon_blowup(spec).graph : pentagon_blowup(spec).graph;
  } else if (a.family == "bipartite") {
    g = bipartite_minus_matching(a.n, a.m);
  } else if (a.family == "flip") {
    if (a.graph.empty() || a.edge.size() != 2) throw UsageError("flip needs --graph and --edge u v");
    g = flip_edge(load_graph(a.graph), make_edge(a.edge[0], a.edge[1]));
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  const std::string text = a.inline_form ? serialize_inline(g) + "\n" : serialize(g) + "\n";
  if (a.out_path.empty()) {
    std::cout << text;
  } else {
    write_file(a.out_path, text);
    out.text("wrote " + a.out_path);
  }
  out.record({{"command", "construct"}, {"family", a.family}, {"n", g.n()}, {"graph", serialize_inline(g)}});
  return kOk;
}

// decompose

int cmd_decompose(const std::string& path, int n, const std::vector<std::string>& missing, const Output& out) {
  SimpleGraph h;
  if (!path.empty()) {
    h = color_class(load_graph(path), EdgeColor::Red);
  } else {
    if (n < 1) throw UsageError("decompose needs a graph file or --n");
    h = SimpleGraph::complete(n);
    for (const std::string& e : missing) {
      const auto dash = e.find_first_of("-,");
      if (dash == std::string::npos) throw ParseError("bad edge '" + e + "'", 0);
      int u, v;
      try {
        u = std::stoi(e.substr(0, dash));
        v = std::stoi(e.substr(dash + 1));
      } catch (const std::exception&) {
        throw ParseError("bad edge '" + e + "'", 0);
      }
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw InputError("edge '" + e + "' out of range");
      h.remove_edge(u, v);
    }
  }
  const DecompositionResult r = frac_decomposition(h);
  json rec{{"command", "decompose"}, {"n", h.n()}, {"edges", h.num_edges()}, {"decomposable", r.packing.has_value()}};
  if (r.packing) {
    out.text("decomposition = yes");
    json w = json::array();
    for (const auto& [t, x] : r.packing->weights) {
      out.text(std::to_string(t.a) + " " + std::to_string(t.b) + " " + std::to_string(t.c) + " " + to_string(x));
      w.push_back({t.a, t.b, t.c, to_string(x)});
    }
    rec["weights"] = w;
  } else {
    out.text("decomposition = no");
    json z = json::array();
    for (const auto& [e, x] : r.farkas) {
      if (sgn(x) == 0) continue;
      out.text("farkas " + std::to_string(e.u) + " " + std::to_string(e.v) + " " + to_string(x));
      z.push_back({e.u, e.v, to_string(x)});
    }
    rec["farkas"] = z;
  }
  out.record(rec);
  return kOk;
}

// table1

int cmd_table1(const Output& out) {
  bool all = true;
  out.text("family    n  pack  n(n+1)/4  floor((n-1)^2/4)  expected");
  for (const BlowupValue& row : table1_rows()) {
    const BlobSpec spec = blob_spec(row.sizes);
    const ColoredGraph g = row.starred ? almost_pentagon_blowup(spec).graph : pentagon_blowup(spec).graph;
    const Rational value = pack(g).value;
    const int n = g.n();
    const Rational upper = make_rational(static_cast<long>(n) * (n + 1), 4);
    const long bound = static_cast<long>(n - 1) * (n - 1) / 4;
    const bool ok = value == row.value;
    all = all && ok;
    const std::string name = "(" + sizes_string(row.sizes) + ")" + (row.starred ? "*" : " ");
    char line[160];
    std::snprintf(line, sizeof line, "%-9s %2d  %4s  %8s  %16ld  %ld%s", name.c_str(), n, to_string(value).c_str(),
                  to_string(upper).c_str(), bound, row.value, ok ? "" : "  MISMATCH");
    out.text(line);
    out.record({{"command", "table1"},
                {"family", sizes_string(row.sizes)},
                {"starred", row.starred},
                {"n", n},
                {"pack", to_string(value)},
                {"upper", to_string(upper)},
                {"bound", bound},
                {"expected", row.value},
                {"match", ok}});
  }
  return all ? kOk : kViolated;
}

// search

struct SearchArgs {
  std::vector<std::string> seeds;
  int to = 0;
  std::string threshold = "n*(n+1)/4";
  std::vector<std::string> filters;
  bool no_swap = false;
  std::string order = "greedy";
  std::string checkpoint;
  long checkpoint_every = 0;
  std::string resume;
  std::string certs = "search-certs";
  bool no_certs = false;
  bool pruned_certs = false;
  int jobs = 1;
};

std::pair<int, LevelFilter> parse_filter(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("filter must be <level>:<pentagon|bip:k>", 0);
  int level;
  try {
    level = std::stoi(text.substr(0, colon));
  } catch (const std::exception&) {
    throw ParseError("bad filter level in '" + text + "'", 0);
  }
  const std::string kind = text.substr(colon + 1);
  if (kind == "pentagon") return {level, {FilterKind::Pentagon}};
  if (kind == "none") return {level, {FilterKind::None}};
  if (kind.rfind("bip:", 0) == 0) {
    try {
      return {level, {FilterKind::Bipartite, std::stoi(kind.substr(4))}};
    } catch (const std::exception&) {
    }
  }
  throw ParseError("bad filter '" + text + "'", colon + 1);
}

void print_report(const LevelReport& r, const Output& out) {
  char line[200];
  std::snprintf(line, sizeof line, "%5d %8ld %10ld %9ld %10ld %9ld %11ld %10ld", r.n, r.parents, r.nodes, r.pruned,
                r.completed, r.filtered, r.duplicates, r.survivors);
  out.text(line);
  out.record({{"command", "search"},
              {"level", r.n},
              {"parents", r.parents},
              {"nodes", r.nodes},
              {"pruned", r.pruned},
              {"completed", r.completed},
              {"filtered", r.filtered},
              {"duplicates", r.duplicates},
              {"survivors", r.survivors}});
}

int cmd_search(const SearchArgs& a, const Output& out) {
  SearchConfig cfg;
  cfg.threshold = parse_threshold(a.threshold);
  for (const std::string& f : a.filters) {
    auto [level, filter] = parse_filter(f);
    cfg.filters[level] = filter;
  }
  cfg.admit_swap = !a.no_swap;
  if (a.order == "greedy") cfg.vertex_order = VertexOrder::Greedy;
  else if (a.order == "fixed") cfg.vertex_order = VertexOrder::Fixed;
  else throw UsageError("order must be greedy or fixed");
  cfg.jobs = a.jobs;
  cfg.record_pruned = a.pruned_certs && !a.no_certs;
  cfg.checkpoint_every = a.checkpoint_every;
  cfg.n_end = a.to;
  if (!a.checkpoint.empty()) {
    cfg.on_checkpoint = [&](const SearchState& s) { write_file(a.checkpoint, write_checkpoint(s)); };
  }

  out.text("level  parents      nodes    pruned  completed  filtered  duplicates  survivors");
  SearchResult r;
  if (!a.resume.empty()) {
    SearchState state = read_checkpoint(read_file(a.resume));
    cfg.n_start = state.level;
    if (cfg.n_end < state.level) throw UsageError("--to is below the checkpoint level");
    r = resume_search(std::move(state), cfg);
  } else {
    std::vector<ColoredGraph> seeds;
    for (const std::string& s : a.seeds) seeds.push_back(load_graph(s));
    if (seeds.empty()) seeds.push_back(ColoredGraph(0));
    cfg.n_start = seeds.front().n();
    for (const ColoredGraph& s : seeds) {
      if (s.n() != cfg.n_start) throw InputError("seeds have different orders");
    }
    if (cfg.n_end < cfg.n_start) throw UsageError("--to is below the seed order");
    r = run_search(seeds, cfg);
  }
  for (const LevelReport& rep : r.reports) print_report(rep, out);

  std::map<std::string, long> shapes;
  for (const FilteredGraph& f : r.filtered) {
    if (f.result.kind == Classification::FilteredPentagon) {
      const bool exact = f.result.pentagon->flips.empty();
      ++shapes["pentagon " + sizes_string(f.result.pentagon->sorted_sizes()) + (exact ? "" : "*")];
    } else {
      ++shapes[std::string("bipartite ") + (f.result.bipartite_color == EdgeColor::Red ? "R" : "B")];
    }
  }
  for (const auto& [shape, count] : shapes) {
    out.text("filtered " + shape + ": " + std::to_string(count));
    out.record({{"command", "search"}, {"filtered", shape}, {"count", count}});
  }

  if (!a.no_certs) {
    long written = 0;
    for (const auto& [n, list] : r.lists) {
      for (std::size_t i = 0; i < list.size(); ++i) {
        const Survivor& s = list[i];
        write_file(fs::path(a.certs) / ("L" + std::to_string(n) + "-" + std::to_string(i) + ".cert"),
                   write(make_pack_certificate(s.graph, s.red, s.blue)));
        ++written;
      }
    }
    for (std::size_t i = 0; i < r.pruned.size(); ++i) {
      const PrunedRecord& p = r.pruned[i];
      write_file(fs::path(a.certs) / ("pruned-" + std::to_string(i) + ".cert"),
                 write(make_pack_certificate(p.graph, p.certificate.red, p.certificate.blue)));
      ++written;
    }
    out.text("certificates written: " + std::to_string(written));
    out.record({{"command", "search"}, {"certificates", written}});
  }
  const auto last = r.lists.find(cfg.n_end);
  const long final_count = last == r.lists.end() ? 0 : static_cast<long>(last->second.size());
  out.text("L" + std::to_string(cfg.n_end) + " size: " + std::to_string(final_count));
  out.record({{"command", "search"}, {"final_level", cfg.n_end}, {"size", final_count}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional monochromatic triangle packings in 2-coloured complete graphs"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.as_json, "Print one JSON record per line instead of tables");

  PackArgs pack_args;
  auto* pack_cmd = app.add_subcommand("pack", "Exact pack value with certificates");
  pack_cmd->add_option("graph", pack_args.graph, "Graph file")->required();
  pack_cmd->add_option("--certs", pack_args.certs, "Directory for the certificates (default: next to the graph)");
  pack_cmd->add_flag("--no-certs", pack_args.no_certs, "Do not write certificates");
  pack_cmd->add_flag("--float", pack_args.float_mode, "Float solve with exact repair");

  std::string verify_cert, verify_graph;
  auto* verify_cmd = app.add_subcommand("verify", "Check a PACKCERT or COVERCERT");
  verify_cmd->add_option("certificate", verify_cert, "Certificate file")->required();
  verify_cmd->add_option("--graph", verify_graph, "Graph file (required for covers)");

  std::string canon_graph;
  bool canon_no_swap = false;
  auto* canon_cmd = app.add_subcommand("canon", "Canonical form");
  canon_cmd->add_option("graph", canon_graph, "Graph file")->required();
  canon_cmd->add_flag("--no-swap", canon_no_swap, "Do not identify a colouring with its colour swap");

  std::string pentagon_graph;
  int max_flips = 1;
  auto* pentagon_cmd = app.add_subcommand("pentagon", "Distance to a pentagon blow-up (0 or 1 flips)");
  pentagon_cmd->add_option("graph", pentagon_graph, "Graph file")->required();
  pentagon_cmd->add_option("--max-flips", max_flips, "0 or 1")->check(CLI::Range(0, 1));

  std::string bip_graph, bip_color = "both";
  int bip_k = 2;
  auto* bip_cmd = app.add_subcommand("bipdist", "Is a colour class k-close to bipartite");
  bip_cmd->add_option("graph", bip_graph, "Graph file")->required();
  bip_cmd->add_option("-k,--k", bip_k, "Deletions allowed")->check(CLI::NonNegativeNumber);
  bip_cmd->add_option("--color", bip_color, "R, B or both")->check(CLI::IsMember({"R", "B", "both"}));

  ConstructArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "Build a named colouring");
  construct_cmd->add_option("family", construct_args.family, "blowup | bipartite | flip")->required();
  construct_cmd->add_option("--sizes", construct_args.sizes, "Blob sizes, e.g. 33344 or 3,3,3,4,4");
  construct_cmd->add_option("--interior", construct_args.interior, "red or blue blob interiors");
  construct_cmd->add_flag("--starred", construct_args.starred, "Flip one blue cross edge to red");
  construct_cmd->add_option("--n", construct_args.n, "Order for bipartite");
  construct_cmd->add_option("--m", construct_args.m, "Matching size for bipartite");
  construct_cmd->add_option("--graph", construct_args.graph, "Input graph for flip");
  construct_cmd->add_option("--edge", construct_args.edge, "Edge to flip")->expected(2);
  construct_cmd->add_option("-o,--out", construct_args.out_path, "Output file (default stdout)");
  construct_cmd->add_flag("--inline", construct_args.inline_form, "One-line graph form");

  std::string decompose_graph;
  int decompose_n = 0;
  std::vector<std::string> decompose_missing;
  auto* decompose_cmd = app.add_subcommand("decompose", "Fractional triangle decomposition of the red class");
  decompose_cmd->add_option("graph", decompose_graph, "Graph file; its red edges form the graph");
  decompose_cmd->add_option("--n", decompose_n, "Complete graph order, with --missing");
  decompose_cmd->add_option("--missing", decompose_missing, "Removed edges u-v");

  auto* table_cmd = app.add_subcommand("table1", "Recompute pack values of the reference blow-ups");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Frontier search over colourings");
  search_cmd->add_option("--seed", search_args.seeds, "Seed graph files (default: the empty graph)");
  search_cmd->add_option("--to", search_args.to, "Last level")->required();
  search_cmd->add_option("--threshold", search_args.threshold, "Expression in n, used when extending L_n");
  search_cmd->add_option("--filter", search_args.filters, "<level>:<pentagon|bip:k>");
  search_cmd->add_flag("--no-swap", search_args.no_swap, "Do not identify colour swaps");
  search_cmd->add_option("--order", search_args.order, "greedy or fixed");
  search_cmd->add_option("--checkpoint", search_args.checkpoint, "Checkpoint file");
  search_cmd->add_option("--checkpoint-every", search_args.checkpoint_every, "Parents between checkpoints");
  search_cmd->add_option("--resume", search_args.resume, "Continue from a checkpoint");
  search_cmd->add_option("--certs", search_args.certs, "Directory for survivor certificates")->capture_default_str();
  search_cmd->add_flag("--no-certs", search_args.no_certs, "Do not write certificates");
  search_cmd->add_flag("--pruned-certs", search_args.pruned_certs, "Also write pruned-node certificates");
  search_cmd->add_option("--jobs", search_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    if (*pack_cmd) return cmd_pack(pack_args, out);
    if (*verify_cmd) return cmd_verify(verify_cert, verify_graph, out);
    if (*canon_cmd) return cmd_canon(canon_graph, canon_no_swap, out);
    if (*pentagon_cmd) return cmd_pentagon(pentagon_graph, max_flips, out);
    if (*bip_cmd) return cmd_bipdist(bip_graph, bip_k, bip_color, out);
    if (*construct_cmd) return cmd_construct(construct_args, out);
    if (*decompose_cmd) return cmd_decompose(decompose_graph, decompose_n, decompose_missing, out);
    if (*table_cmd) return cmd_table1(out);
    if (*search_cmd) return cmd_search(search_args, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const UsageError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InputError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolated;
  }
  return kOk;
}
