#include "tripack/packing.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "tripack/errors.h"

namespace tripack {

Rational FractionalPacking::value() const {
  Rational s(0);
  for (const auto& [t, w] : weights) s += w;
  return s;
}

Rational FractionalPacking::load(const Edge& e) const {
  Rational s(0);
  for (const auto& [t, w] : weights) {
    if (t.contains(e.u) && t.contains(e.v)) s += w;
  }
  return s;
}

std::map<Edge, Rational> FractionalPacking::loads() const {
  std::map<Edge, Rational> out;
  for (const auto& [t, w] : weights) {
    for (const Edge& e : t.edges()) out[e] += w;
  }
  return out;
}

Rational FractionalCover::value() const {
  Rational s(0);
  for (const auto& [e, w] : edge_weights) s += w;
  return s;
}

namespace {

std::string describe(const Triangle& t) {
  return std::to_string(t.a) + " " + std::to_string(t.b) + " " + std::to_string(t.c);
}

struct PackingLp {
  lp::Problem problem;
  std::vector<Triangle> triangles;  // column order
  std::vector<Edge> row_edges;      // row order
};

PackingLp build_packing_lp(const ColoredGraph& g, EdgeColor c) {
  PackingLp out;
  out.triangles = monochromatic_triangles(g, c);
  std::vector<int> row_of(ColoredGraph::pair_count(g.n()), -1);
  for (const Triangle& t : out.triangles) {
    std::vector<int> rows;
    rows.reserve(3);
    for (const Edge& e : t.edges()) {
      int& r = row_of[ColoredGraph::index_unchecked(g.n(), e.u, e.v)];
      if (r < 0) {
        r = out.problem.add_row(lp::RowSense::LessEqual, Rational(1));
        out.row_edges.push_back(e);
      }
      rows.push_back(r);
    }
    out.problem.add_column(std::move(rows), Rational(1));
  }
  return out;
}

bool is_mono(const ColoredGraph& g, const Triangle& t, EdgeColor c) {
  if (t.a < 0 || t.c >= g.n() || !(t.a < t.b && t.b < t.c)) return false;
  return g.at(t.a, t.b) == c && g.at(t.a, t.c) == c && g.at(t.b, t.c) == c;
}

FractionalCover repaired_cover(const PackingLp& lp, const std::vector<double>& duals, EdgeColor c,
                               const ApproximationOptions& rounding) {
  const int m = lp.problem.num_rows;
  std::vector<Rational> y(m);
  for (int i = 0; i < m; ++i) {
    y[i] = approximate(duals[i], rounding);
    if (sgn(y[i]) < 0) y[i] = 0;
  }
  std::optional<Rational> min_cover;
  for (const auto& col : lp.problem.columns) {
    Rational s = y[col[0]] + y[col[1]] + y[col[2]];
    if (!min_cover || s < *min_cover) min_cover = s;
  }
  if (min_cover && *min_cover < 1) {
    if (sgn(*min_cover) > 0) {
      for (auto& v : y) v /= *min_cover;
    } else {
      for (auto& v : y) v = Rational(1, 3);
    }
  }
  FractionalCover cover{c, {}};
  for (int i = 0; i < m; ++i) {
    if (sgn(y[i]) != 0) cover.edge_weights[lp.row_edges[i]] = y[i];
  }
  return cover;
}

}  // namespace

void check_feasible(const FractionalPacking& w, const ColoredGraph& g) {
  for (const auto& [t, x] : w.weights) {
    if (!is_mono(g, t, w.color)) {
      throw UsageError("triangle " + describe(t) + " is not monochromatic " + std::string(1, to_char(w.color)));
    }
    if (sgn(x) < 0) throw UsageError("weight < 0 on triangle " + describe(t));
    if (x > 1) throw UsageError("weight > 1 on triangle " + describe(t));
  }
  for (const auto& [e, load] : w.loads()) {
    if (load > 1) {
      throw UsageError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " has load " + to_string(load) +
                       " > 1");
    }
  }
}

bool is_feasible(const FractionalPacking& w, const ColoredGraph& g) {
  try {
    check_feasible(w, g);
  } catch (const UsageError&) {
    return false;
  }
  return true;
}

bool covers_all(const FractionalCover& y, const ColoredGraph& g) {
  for (const auto& [e, v] : y.edge_weights) {
    if (sgn(v) < 0) return false;
  }
  auto weight = [&](int a, int b) {
    auto it = y.edge_weights.find(Edge{a, b});
    return it == y.edge_weights.end() ? Rational(0) : it->second;
  };
  for (const Triangle& t : monochromatic_triangles(g, y.color)) {
    if (weight(t.a, t.b) + weight(t.a, t.c) + weight(t.b, t.c) < 1) return false;
  }
  return true;
}

FractionalPacking rationalize(const std::map<Triangle, double>& float_weights, const ColoredGraph& g, EdgeColor c,
                              const ApproximationOptions& options) {
  FractionalPacking out{c, {}};
  for (const auto& [t, d] : float_weights) {
    if (!is_mono(g, t, c)) throw InputError("triangle " + describe(t) + " is not monochromatic in the graph");
    Rational q = approximate(d, options);
    if (sgn(q) <= 0) continue;
    if (q > 1) q = 1;
    out.weights.emplace(t, std::move(q));
  }
  std::map<Edge, Rational> loads = out.loads();
  std::map<Edge, std::vector<Triangle>> through;
  for (const auto& [t, w] : out.weights) {
    for (const Edge& e : t.edges()) through[e].push_back(t);
  }
  for (auto& [e, load] : loads) {
    if (load <= 1) continue;
    const Rational factor = 1 / load;
    for (const Triangle& t : through[e]) {
      Rational& w = out.weights.at(t);
      const Rational scaled = w * factor;
      const Rational delta = scaled - w;
      for (const Edge& f : t.edges()) loads[f] += delta;
      w = scaled;
    }
  }
  return out;
}

SolveResult nu_star(const ColoredGraph& g, EdgeColor c, const FractionalPacking* warm, const PackingOptions& options) {
  if (c == EdgeColor::Unassigned) throw UsageError("nu_star needs Red or Blue");
  const PackingLp lp = build_packing_lp(g, c);
  std::vector<double> warm_x;
  lp::SolveOptions solve_options;
  solve_options.rounding = options.rounding;
  if (warm != nullptr) {
    if (warm->color != c) throw UsageError("warm start has the wrong colour");
    check_feasible(*warm, g);
    warm_x.assign(lp.triangles.size(), 0.0);
    for (std::size_t j = 0; j < lp.triangles.size(); ++j) {
      auto it = warm->weights.find(lp.triangles[j]);
      if (it != warm->weights.end()) warm_x[j] = it->second.get_d();
    }
    solve_options.warm_x = &warm_x;
  }

  SolveResult result;
  result.packing.color = c;
  result.cover.color = c;
  if (lp.triangles.empty()) return result;

  if (options.mode == SolveMode::Exact) {
    const lp::ExactSolution sol = lp::solve_exact(lp.problem, solve_options);
    result.exact_simplex_ran = sol.exact_simplex_ran;
    for (std::size_t j = 0; j < lp.triangles.size(); ++j) {
      if (sgn(sol.x[j]) != 0) result.packing.weights.emplace(lp.triangles[j], sol.x[j]);
    }
    for (int i = 0; i < lp.problem.num_rows; ++i) {
      if (sgn(sol.duals[i]) != 0) result.cover.edge_weights.emplace(lp.row_edges[i], sol.duals[i]);
    }
    result.primal_value = result.packing.value();
    result.dual_value = result.cover.value();
    result.status = SolveStatus::Optimal;
    return result;
  }

  const lp::FloatSolution sol = lp::solve_float(lp.problem, solve_options);
  result.warm_started = sol.warm_started;
  std::map<Triangle, double> fw;
  for (std::size_t j = 0; j < lp.triangles.size(); ++j) {
    if (sol.x[j] > 1e-12) fw.emplace(lp.triangles[j], sol.x[j]);
  }
  result.packing = rationalize(fw, g, c, options.rounding);
  result.cover = repaired_cover(lp, sol.duals, c, options.rounding);
  result.primal_value = result.packing.value();
  result.dual_value = result.cover.value();
  result.status = result.primal_value == result.dual_value ? SolveStatus::Optimal : SolveStatus::LowerBoundOnly;
  return result;
}

PackValue pack(const ColoredGraph& g, const PackingOptions& options) {
  if (!g.is_complete()) throw UsageError("pack needs a complete colouring");
  PackValue out;
  out.red = nu_star(g, EdgeColor::Red, nullptr, options);
  out.blue = nu_star(g, EdgeColor::Blue, nullptr, options);
  out.value = 3 * (out.red.primal_value + out.blue.primal_value);
  return out;
}

std::optional<ExceedCertificate> certified_exceeds(const ColoredGraph& g, const Rational& threshold,
                                                   const ExceedOptions& options) {
  PackingOptions quick{SolveMode::Float, options.rounding};
  SolveResult red = nu_star(g, EdgeColor::Red, nullptr, quick);
  SolveResult blue = nu_star(g, EdgeColor::Blue, nullptr, quick);
  Rational lower = 3 * (red.primal_value + blue.primal_value);
  if (lower > threshold) return ExceedCertificate{red.packing, blue.packing, lower};
  if (3 * (red.dual_value + blue.dual_value) <= threshold) return std::nullopt;
  if (!options.exact_fallback) return std::nullopt;
  PackingOptions exact{SolveMode::Exact, options.rounding};
  red = nu_star(g, EdgeColor::Red, &red.packing, exact);
  blue = nu_star(g, EdgeColor::Blue, &blue.packing, exact);
  lower = 3 * (red.primal_value + blue.primal_value);
  if (lower > threshold) return ExceedCertificate{red.packing, blue.packing, lower};
  return std::nullopt;
}

namespace {

// Prescribed loads on the edges in `demand` (all positive), using the
// triangles of `host` whose edges all have positive demand.
DecompositionResult solve_prescribed(const std::vector<Triangle>& host, const std::map<Edge, Rational>& demand) {
  lp::Problem problem;
  std::map<Edge, int> row_of;
  std::vector<Edge> row_edges;
  for (const auto& [e, d] : demand) {
    row_of[e] = problem.add_row(lp::RowSense::Equal, d);
    row_edges.push_back(e);
  }
  std::vector<Triangle> columns;
  for (const Triangle& t : host) {
    std::vector<int> rows;
    for (const Edge& e : t.edges()) {
      auto it = row_of.find(e);
      if (it == row_of.end()) break;
      rows.push_back(it->second);
    }
    if (rows.size() != 3) continue;
    problem.add_column(std::move(rows), Rational(0));
    columns.push_back(t);
  }
  DecompositionResult out;
  if (demand.empty()) {
    out.packing = FractionalPacking{};
    return out;
  }
  const lp::ExactSolution sol = lp::solve_exact(problem);
  if (sol.status == lp::Status::Optimal) {
    FractionalPacking w;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (sgn(sol.x[j]) != 0) w.weights.emplace(columns[j], sol.x[j]);
    }
    out.packing = std::move(w);
    return out;
  }
  for (std::size_t i = 0; i < row_edges.size(); ++i) {
    if (sgn(sol.duals[i]) != 0) out.farkas[row_edges[i]] = sol.duals[i];
  }
  // Host triangles through a zero-demand edge carry no column; a large
  // enough weight on that edge keeps the ray valid for the full system.
  Rational lift(0);
  for (const Triangle& t : host) {
    Rational s(0);
    bool touches_zero = false;
    for (const Edge& e : t.edges()) {
      if (demand.count(e) == 0) {
        touches_zero = true;
        continue;
      }
      auto it = out.farkas.find(e);
      if (it != out.farkas.end()) s += it->second;
    }
    if (touches_zero && -s > lift) lift = -s;
  }
  if (sgn(lift) > 0) {
    for (const Triangle& t : host) {
      for (const Edge& e : t.edges()) {
        if (demand.count(e) == 0) out.farkas[e] = lift;
      }
    }
  }
  return out;
}

}  // namespace

DecompositionResult frac_decomposition(const SimpleGraph& g) {
  std::map<Edge, Rational> demand;
  for (const Edge& e : g.edges()) demand.emplace(e, Rational(1));
  return solve_prescribed(g.triangles(), demand);
}

DecompositionResult prescribed_packing(int n, const std::map<Edge, Rational>& demand) {
  if (n < 3) throw InputError("prescribed_packing needs n >= 3");
  std::map<Edge, Rational> positive;
  for (const auto& [e, d] : demand) {
    if (e.u < 0 || e.v >= n || e.u >= e.v) throw InputError("demand on an invalid edge");
    if (sgn(d) < 0 || d > 1) throw InputError("demand outside [0, 1] on edge " + std::to_string(e.u) + " " +
                                              std::to_string(e.v));
    if (sgn(d) > 0) positive.emplace(e, d);
  }
  return solve_prescribed(SimpleGraph::complete(n).triangles(), positive);
}

bool verify_farkas(const std::vector<Triangle>& triangles, const std::map<Edge, Rational>& demand,
                   const std::map<Edge, Rational>& farkas) {
  auto z = [&](const Edge& e) {
    auto it = farkas.find(e);
    return it == farkas.end() ? Rational(0) : it->second;
  };
  for (const Triangle& t : triangles) {
    Rational s(0);
    for (const Edge& e : t.edges()) s += z(e);
    if (sgn(s) < 0) return false;
  }
  Rational total(0);
  for (const auto& [e, d] : demand) total += d * z(e);
  return sgn(total) < 0;
}

int integer_nu(const SimpleGraph& g) {
  if (g.n() > 9) throw UsageError("integer_nu is exhaustive and limited to n <= 9");
  const std::vector<Edge> edges = g.edges();
  std::map<Edge, int> bit;
  for (std::size_t i = 0; i < edges.size(); ++i) bit[edges[i]] = static_cast<int>(i);
  std::vector<std::vector<std::uint64_t>> through(edges.size());
  std::uint64_t live = 0;
  for (const Triangle& t : g.triangles()) {
    std::uint64_t mask = 0;
    for (const Edge& e : t.edges()) mask |= std::uint64_t{1} << bit[e];
    for (const Edge& e : t.edges()) through[bit[e]].push_back(mask);
    live |= mask;
  }
  int best = 0;
  std::function<void(std::uint64_t, int)> search = [&](std::uint64_t free, int count) {
    best = std::max(best, count);
    if (count + std::popcount(free) / 3 <= best) return;
    if (free == 0) return;
    const int e = std::countr_zero(free);
    for (std::uint64_t mask : through[e]) {
      if ((mask & free) == mask) search(free & ~mask, count + 1);
    }
    search(free & ~(std::uint64_t{1} << e), count);
  };
  search(live, 0);
  return best;
}

}  // namespace tripack
