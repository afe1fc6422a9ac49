#include "tripack/search.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "tripack/certificate.h"
#include "tripack/errors.h"

namespace tripack {

Rational default_threshold(int n) { return make_rational(static_cast<long>(n) * (n + 1), 4); }

namespace {

// Threshold expressions.

struct Expr {
  enum Kind { Number, Variable, Neg, Add, Sub, Mul, Div, Pow } kind;
  Rational value;
  long exponent = 0;
  std::unique_ptr<Expr> lhs, rhs;
};

class ThresholdParser {
 public:
  explicit ThresholdParser(const std::string& text) : text_(text) {}

  std::unique_ptr<Expr> parse() {
    auto e = sum();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static std::unique_ptr<Expr> node(Expr::Kind k, std::unique_ptr<Expr> a, std::unique_ptr<Expr> b = nullptr) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
  }

  std::unique_ptr<Expr> sum() {
    auto e = product();
    for (;;) {
      if (eat('+')) e = node(Expr::Add, std::move(e), product());
      else if (eat('-')) e = node(Expr::Sub, std::move(e), product());
      else return e;
    }
  }
  std::unique_ptr<Expr> product() {
    auto e = power();
    for (;;) {
      if (eat('*')) e = node(Expr::Mul, std::move(e), power());
      else if (eat('/')) e = node(Expr::Div, std::move(e), power());
      else return e;
    }
  }
  std::unique_ptr<Expr> power() {
    auto e = unary();
    if (!eat('^')) return e;
    skip();
    const std::size_t start = pos_;
    bool negative = eat('-');
    skip();
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits || pos_ - digits > 6) throw ParseError("expected an integer exponent", start);
    auto p = node(Expr::Pow, std::move(e));
    p->exponent = std::stol(text_.substr(digits, pos_ - digits)) * (negative ? -1 : 1);
    return p;
  }
  std::unique_ptr<Expr> unary() {
    if (eat('-')) return node(Expr::Neg, unary());
    if (eat('+')) return unary();
    return primary();
  }
  std::unique_ptr<Expr> primary() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    if (eat('(')) {
      auto e = sum();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (text_[pos_] == 'n') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("unknown name", pos_ - 1);
      }
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Variable;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational v(text_.substr(start, pos_ - start));
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        const std::size_t frac = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == frac) throw ParseError("expected digits after '.'", pos_);
        Rational scale(1);
        for (std::size_t i = frac; i < pos_; ++i) scale *= 10;
        v += Rational(text_.substr(frac, pos_ - frac)) / scale;
        v.canonicalize();
      }
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Number;
      e->value = v;
      return e;
    }
    throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

Rational evaluate(const Expr& e, int n) {
  switch (e.kind) {
    case Expr::Number:
      return e.value;
    case Expr::Variable:
      return Rational(n);
    case Expr::Neg:
      return -evaluate(*e.lhs, n);
    case Expr::Add:
      return evaluate(*e.lhs, n) + evaluate(*e.rhs, n);
    case Expr::Sub:
      return evaluate(*e.lhs, n) - evaluate(*e.rhs, n);
    case Expr::Mul:
      return evaluate(*e.lhs, n) * evaluate(*e.rhs, n);
    case Expr::Div: {
      const Rational d = evaluate(*e.rhs, n);
      if (sgn(d) == 0) throw InputError("threshold divides by zero at n = " + std::to_string(n));
      return evaluate(*e.lhs, n) / d;
    }
    case Expr::Pow: {
      Rational base = evaluate(*e.lhs, n);
      long k = e.exponent;
      if (k < 0) {
        if (sgn(base) == 0) throw InputError("threshold divides by zero at n = " + std::to_string(n));
        base = 1 / base;
        k = -k;
      }
      Rational out(1);
      for (long i = 0; i < k; ++i) out *= base;
      return out;
    }
  }
  return 0;
}

// Search internals.

struct Tagged {
  Survivor survivor;
  long parent = 0;
  long leaf = 0;
};

struct ParentOutcome {
  LevelReport counts;
  std::map<std::string, Tagged> found;
  std::vector<FilteredGraph> filtered;
  std::vector<PrunedRecord> pruned;
};

std::string key_of(const Survivor& s) { return s.key.bytes; }

void extend_parent(const Survivor& parent, long index, const Rational& threshold, const LevelFilter& filter,
                   const SearchConfig& cfg, ParentOutcome& out) {
  const int n = parent.graph.n();
  std::vector<SearchNode> stack{start_node(parent.graph, parent.red, parent.blue)};
  long leaf = 0;
  while (!stack.empty()) {
    SearchNode node = std::move(stack.back());
    stack.pop_back();
    ++out.counts.nodes;
    if (auto cert = prune(node, threshold)) {
      ++out.counts.pruned;
      if (cfg.record_pruned) out.pruned.push_back({node.graph, std::move(*cert)});
      continue;
    }
    if (node.depth == n) {
      ++out.counts.completed;
      ClassifyResult c = classify_complete(node.graph, filter);
      if (c.kind != Classification::Keep) {
        ++out.counts.filtered;
        out.filtered.push_back({node.graph, std::move(c)});
        continue;
      }
      Survivor s = make_survivor(node.graph, node.f_r, node.f_b, cfg.admit_swap);
      std::string k = key_of(s);
      if (out.found.count(k)) {
        ++out.counts.duplicates;
        continue;
      }
      out.found.emplace(std::move(k), Tagged{std::move(s), index, leaf++});
      continue;
    }
    const int v = choose_next_vertex(node, cfg.vertex_order);
    auto [red, blue] = expose(node, v);
    stack.push_back(std::move(blue));
    stack.push_back(std::move(red));
  }
}

void merge_counts(LevelReport& into, const LevelReport& from) {
  into.nodes += from.nodes;
  into.pruned += from.pruned;
  into.completed += from.completed;
  into.filtered += from.filtered;
  into.duplicates += from.duplicates;
}

LevelFilter filter_at(const SearchConfig& cfg, int n) {
  auto it = cfg.filters.find(n);
  return it == cfg.filters.end() ? LevelFilter{} : it->second;
}

}  // namespace

std::function<Rational(int)> parse_threshold(const std::string& expr) {
  std::shared_ptr<Expr> tree = ThresholdParser(expr).parse();
  return [tree](int n) { return evaluate(*tree, n); };
}

SearchNode start_node(const ColoredGraph& host, const FractionalPacking& red, const FractionalPacking& blue) {
  if (!host.is_complete()) throw UsageError("search hosts must be complete colourings");
  return SearchNode{add_vertex(host), red, blue, 0};
}

int choose_next_vertex(const SearchNode& node, VertexOrder order) {
  const ColoredGraph& g = node.graph;
  const int u = g.n() - 1;
  int best = -1;
  long best_score = -1;
  for (int v = 0; v < u; ++v) {
    if (g.at(u, v) != EdgeColor::Unassigned) continue;
    if (order == VertexOrder::Fixed) return v;
    long score = 0;
    for (int w = 0; w < u; ++w) {
      if (w == v) continue;
      const EdgeColor cu = g.at(u, w);
      if (cu != EdgeColor::Unassigned && cu == g.at(v, w)) ++score;
    }
    if (score > best_score) {
      best = v;
      best_score = score;
    }
  }
  if (best < 0) throw UsageError("node is already complete");
  return best;
}

std::pair<SearchNode, SearchNode> expose(const SearchNode& node, int v, bool warm_start) {
  const int u = node.graph.n() - 1;
  if (v < 0 || v >= u || node.graph.at(u, v) != EdgeColor::Unassigned) {
    throw UsageError("edge " + std::to_string(u) + " " + std::to_string(v) + " is not open");
  }
  auto child = [&](EdgeColor c) {
    SearchNode out{set_edge(node.graph, u, v, c), node.f_r, node.f_b, node.depth + 1};
    bool closes = false;
    for (int w = 0; w < u && !closes; ++w) closes = w != v && out.graph.at(u, w) == c && out.graph.at(v, w) == c;
    if (!closes) return out;  // no new triangle of colour c
    FractionalPacking& slot = c == EdgeColor::Red ? out.f_r : out.f_b;
    const FractionalPacking* warm = warm_start ? &slot : nullptr;
    FractionalPacking solved = nu_star(out.graph, c, warm).packing;
    slot = std::move(solved);
    return out;
  };
  return {child(EdgeColor::Red), child(EdgeColor::Blue)};
}

std::optional<ExceedCertificate> prune(const SearchNode& node, const Rational& threshold) {
  const Rational value = node.value();
  if (value <= threshold) return std::nullopt;
  if (!is_feasible(node.f_r, node.graph) || !is_feasible(node.f_b, node.graph)) {
    throw std::logic_error("search node carries an infeasible packing");
  }
  return ExceedCertificate{node.f_r, node.f_b, value};
}

ClassifyResult classify_complete(const ColoredGraph& g, const LevelFilter& filter) {
  if (!g.is_complete()) throw UsageError("classification needs a complete colouring");
  ClassifyResult out;
  switch (filter.kind) {
    case FilterKind::None:
      break;
    case FilterKind::Pentagon:
      if (auto cert = pentagon_distance(g, 1)) {
        out.kind = Classification::FilteredPentagon;
        out.pentagon = std::move(cert);
      }
      break;
    case FilterKind::Bipartite:
      for (EdgeColor c : {EdgeColor::Red, EdgeColor::Blue}) {
        if (auto cert = bip_distance_at_most(color_class(g, c), filter.k)) {
          out.kind = Classification::FilteredBipartite;
          out.bipartite = std::move(cert);
          out.bipartite_color = c;
          break;
        }
      }
      break;
  }
  return out;
}

Survivor make_survivor(const ColoredGraph& g, const FractionalPacking& red, const FractionalPacking& blue,
                       bool admit_swap) {
  auto [key, witness] = canonical_key(g, admit_swap);
  Survivor s{std::move(key), relabel(g, witness), relabel(red, witness), relabel(blue, witness)};
  if (witness.swapped) std::swap(s.red, s.blue);
  return s;
}

SearchResult resume_search(SearchState state, const SearchConfig& cfg) {
  if (cfg.n_start > cfg.n_end) throw InputError("n_start exceeds n_end");
  if (cfg.jobs < 1) throw InputError("jobs must be positive");
  SearchResult result;
  result.reports = state.reports;
  if (state.next_parent == 0 && state.next.empty()) result.lists[state.level] = state.frontier;

  const long chunk = cfg.checkpoint_every > 0 ? cfg.checkpoint_every : std::max<long>(64, 16L * cfg.jobs);
  while (state.level < cfg.n_end) {
    const int n = state.level;
    const Rational threshold = cfg.threshold(n);
    const LevelFilter filter = filter_at(cfg, n);
    state.current.n = n;
    const long total = static_cast<long>(state.frontier.size());
    while (state.next_parent < total) {
      const long begin = state.next_parent;
      const long end = std::min(total, begin + chunk);
      std::vector<ParentOutcome> outcomes(end - begin);
      std::atomic<long> cursor{begin};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      auto worker = [&] {
        for (long i; (i = cursor.fetch_add(1)) < end;) {
          try {
            extend_parent(state.frontier[i], i, threshold, filter, cfg, outcomes[i - begin]);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      };
      const int threads = static_cast<int>(std::min<long>(cfg.jobs, end - begin));
      if (threads <= 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }
      if (failure) std::rethrow_exception(failure);

      // Merged in parent order so the kept representative never depends on scheduling.
      for (ParentOutcome& o : outcomes) {
        ++state.current.parents;
        merge_counts(state.current, o.counts);
        std::vector<Tagged*> order;
        for (auto& [k, t] : o.found) order.push_back(&t);
        std::sort(order.begin(), order.end(), [](const Tagged* a, const Tagged* b) { return a->leaf < b->leaf; });
        for (Tagged* t : order) {
          if (state.next.emplace(t->survivor.key.bytes, std::move(t->survivor)).second) {
            ++state.current.survivors;
          } else {
            ++state.current.duplicates;
          }
        }
        for (auto& f : o.filtered) result.filtered.push_back(std::move(f));
        for (auto& p : o.pruned) result.pruned.push_back(std::move(p));
      }
      state.next_parent = end;
      if (cfg.on_checkpoint && cfg.checkpoint_every > 0 && state.next_parent < total) cfg.on_checkpoint(state);
    }

    state.reports.push_back(state.current);
    result.reports.push_back(state.current);
    std::vector<Survivor> next;
    next.reserve(state.next.size());
    for (auto& [k, s] : state.next) next.push_back(std::move(s));
    state.frontier = std::move(next);
    state.next.clear();
    state.next_parent = 0;
    ++state.level;
    state.current = LevelReport{state.level};
    result.lists[state.level] = state.frontier;
    if (cfg.on_checkpoint) cfg.on_checkpoint(state);
  }
  return result;
}

SearchResult run_search(const std::vector<ColoredGraph>& seeds, const SearchConfig& cfg) {
  SearchState state;
  state.level = cfg.n_start;
  std::map<std::string, Survivor> unique;
  for (const ColoredGraph& g : seeds) {
    if (g.n() != cfg.n_start) throw InputError("seed order differs from n_start");
    if (!g.is_complete()) throw InputError("seeds must be complete colourings");
    const PackValue v = pack(g);
    Survivor s = make_survivor(g, v.red.packing, v.blue.packing, cfg.admit_swap);
    if (!unique.emplace(s.key.bytes, s).second) throw InputError("seeds contain isomorphic colourings");
  }
  for (auto& [k, s] : unique) state.frontier.push_back(std::move(s));
  state.current.n = state.level;
  return resume_search(std::move(state), cfg);
}

// Checkpoints.

namespace {

constexpr const char* kCheckpointHeader = "TRIPACK-CHECKPOINT v1";

std::string write_report(const char* label, const LevelReport& r) {
  std::ostringstream out;
  out << label << " n=" << r.n << " parents=" << r.parents << " nodes=" << r.nodes << " pruned=" << r.pruned
      << " completed=" << r.completed << " filtered=" << r.filtered << " duplicates=" << r.duplicates
      << " survivors=" << r.survivors << "\n";
  return out.str();
}

void write_survivor(std::ostringstream& out, const Survivor& s) {
  const std::string cert = write(make_pack_certificate(s.graph, s.red, s.blue));
  const long lines = std::count(cert.begin(), cert.end(), '\n');
  out << "survivor swap=" << (s.key.swap_admitted ? 1 : 0) << " lines=" << lines << "\n" << cert;
}

class CheckpointReader {
 public:
  explicit CheckpointReader(const std::string& text) : text_(text) {}

  std::string line() {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of checkpoint", pos_);
    const std::size_t end = text_.find('\n', pos_);
    if (end == std::string::npos) throw ParseError("unterminated line", pos_);
    start_ = pos_;
    std::string out = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    return out;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, start_); }
  bool done() const { return pos_ >= text_.size(); }

  // "label k=v k=v ..." with the keys in the given order.
  std::vector<long> fields(const std::string& label, const std::vector<std::string>& keys) {
    std::istringstream in(line());
    std::string word;
    if (!(in >> word) || word != label) fail("expected '" + label + "'");
    std::vector<long> values;
    for (const std::string& k : keys) {
      if (!(in >> word) || word.rfind(k + "=", 0) != 0) fail("expected field '" + k + "'");
      const std::string digits = word.substr(k.size() + 1);
      if (digits.empty() || digits.size() > 18 ||
          !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        fail("bad value for '" + k + "'");
      }
      values.push_back(std::stol(digits));
    }
    if (in >> word) fail("trailing data");
    return values;
  }

  LevelReport report(const std::string& label) {
    const auto v = fields(label, {"n", "parents", "nodes", "pruned", "completed", "filtered", "duplicates", "survivors"});
    return LevelReport{static_cast<int>(v[0]), v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
  }

  Survivor survivor() {
    const auto v = fields("survivor", {"swap", "lines"});
    if (v[0] > 1) fail("swap must be 0 or 1");
    std::string block;
    for (long i = 0; i < v[1]; ++i) block += line() + "\n";
    PackCertificate cert;
    try {
      cert = parse_pack_certificate(block);
    } catch (const std::exception& e) {
      fail(std::string("bad survivor certificate: ") + e.what());
    }
    const Verdict verdict = verify(cert);
    if (!verdict.ok) fail("survivor certificate does not verify: " + verdict.violation);
    if (!cert.graph.is_complete()) fail("survivor graph is incomplete");
    Survivor s{{serialize(cert.graph), v[0] == 1}, std::move(cert.graph), std::move(cert.red), std::move(cert.blue)};
    return s;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t start_ = 0;
};

}  // namespace

std::string write_checkpoint(const SearchState& state) {
  std::ostringstream out;
  out << kCheckpointHeader << "\n";
  out << "level n=" << state.level << " next-parent=" << state.next_parent << "\n";
  out << "reports count=" << state.reports.size() << "\n";
  for (const LevelReport& r : state.reports) out << write_report("report", r);
  out << write_report("current", state.current);
  out << "frontier count=" << state.frontier.size() << "\n";
  for (const Survivor& s : state.frontier) write_survivor(out, s);
  out << "next count=" << state.next.size() << "\n";
  for (const auto& [k, s] : state.next) write_survivor(out, s);
  out << "end\n";
  return out.str();
}

SearchState read_checkpoint(const std::string& text) {
  CheckpointReader in(text);
  const std::string header = in.line();
  if (header != kCheckpointHeader) {
    if (header.rfind("TRIPACK-CHECKPOINT", 0) == 0) in.fail("unsupported checkpoint version '" + header + "'");
    in.fail("not a checkpoint");
  }
  SearchState state;
  const auto level = in.fields("level", {"n", "next-parent"});
  state.level = static_cast<int>(level[0]);
  state.next_parent = level[1];
  const long reports = in.fields("reports", {"count"})[0];
  for (long i = 0; i < reports; ++i) state.reports.push_back(in.report("report"));
  state.current = in.report("current");
  const long frontier = in.fields("frontier", {"count"})[0];
  for (long i = 0; i < frontier; ++i) {
    state.frontier.push_back(in.survivor());
    if (state.frontier.back().graph.n() != state.level) in.fail("frontier graph has the wrong order");
  }
  if (state.next_parent > frontier) in.fail("next-parent beyond the frontier");
  const long next = in.fields("next", {"count"})[0];
  for (long i = 0; i < next; ++i) {
    Survivor s = in.survivor();
    if (s.graph.n() != state.level + 1) in.fail("next-level graph has the wrong order");
    std::string k = s.key.bytes;
    if (!state.next.emplace(std::move(k), std::move(s)).second) in.fail("duplicate next-level key");
  }
  if (in.line() != "end") in.fail("expected 'end'");
  if (!in.done()) in.fail("trailing data after 'end'");
  return state;
}

}  // namespace tripack
