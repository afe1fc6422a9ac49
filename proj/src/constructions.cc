#include "tripack/constructions.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tripack/errors.h"
#include "tripack/lp.h"

namespace tripack {

namespace {

using EdgeSet = std::set<Edge>;
using Weights = std::map<Triangle, Rational>;

const std::vector<std::array<int, 5>> kFamilyB1 = {
    {3, 3, 3, 4, 4}, {2, 3, 4, 4, 4}, {3, 3, 3, 3, 5}, {3, 3, 4, 4, 4}, {2, 4, 4, 4, 4}, {3, 3, 3, 4, 5},
    {3, 4, 4, 4, 4}, {3, 3, 4, 4, 5}, {4, 4, 4, 4, 4}, {3, 4, 4, 4, 5}, {4, 4, 4, 4, 5}, {3, 4, 4, 5, 5},
    {4, 4, 4, 5, 5}, {4, 4, 5, 5, 5}, {4, 5, 5, 5, 5}, {5, 5, 5, 5, 5}};
const std::vector<std::array<int, 5>> kFamilyB2 = {
    {3, 3, 3, 4, 4}, {3, 3, 4, 4, 4}, {3, 4, 4, 4, 4}, {4, 4, 4, 4, 4}, {4, 4, 4, 4, 5}};

std::vector<int> range(int from, int count) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = from + i;
  return out;
}

bool contains(const std::vector<int>& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); }

void add(Weights& w, const Triangle& t, const Rational& x) {
  if (sgn(x) == 0) return;
  w[t] += x;
}

// Missing edges must join P and Q and form a matching.
void check_matching(const std::vector<int>& P, const std::vector<int>& Q, const EdgeSet& missing) {
  std::set<int> used;
  for (const Edge& e : missing) {
    const bool across = (contains(P, e.u) && contains(Q, e.v)) || (contains(P, e.v) && contains(Q, e.u));
    if (!across) throw InputError("missing edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                  " does not join the two sides");
    if (!used.insert(e.u).second || !used.insert(e.v).second) throw InputError("missing edges are not a matching");
  }
}

// Enlarges the matching until it saturates the smaller side.
EdgeSet saturate(const std::vector<int>& P, const std::vector<int>& Q, EdgeSet missing) {
  const std::vector<int>& small = P.size() <= Q.size() ? P : Q;
  const std::vector<int>& large = P.size() <= Q.size() ? Q : P;
  std::set<int> used;
  for (const Edge& e : missing) {
    used.insert(e.u);
    used.insert(e.v);
  }
  for (int s : small) {
    if (used.count(s)) continue;
    for (int l : large) {
      if (used.count(l)) continue;
      missing.insert(make_edge(s, l));
      used.insert(s);
      used.insert(l);
      break;
    }
  }
  return missing;
}

// Weight 1/(2d) on each cross triangle pp'q, d the number of common
// neighbours of the same-side pair on the other side.
Weights half_d_weights(const std::vector<int>& P, const std::vector<int>& Q, const EdgeSet& missing) {
  Weights w;
  auto present = [&](int a, int b) { return missing.count(make_edge(a, b)) == 0; };
  for (const auto* side : {&P, &Q}) {
    const std::vector<int>& same = *side;
    const std::vector<int>& other = side == &P ? Q : P;
    for (std::size_t i = 0; i < same.size(); ++i)
      for (std::size_t j = i + 1; j < same.size(); ++j) {
        std::vector<int> common;
        for (int q : other)
          if (present(same[i], q) && present(same[j], q)) common.push_back(q);
        for (int q : common) add(w, make_triangle(same[i], same[j], q), make_rational(1, 2 * static_cast<long>(common.size())));
      }
  }
  return w;
}

Weights matching_packing(const std::vector<int>& P, const std::vector<int>& Q, const EdgeSet& missing) {
  return half_d_weights(P, Q, saturate(P, Q, missing));
}

std::map<Edge, Rational> loads_of(const Weights& w) {
  std::map<Edge, Rational> out;
  for (const auto& [t, x] : w)
    for (const Edge& e : t.edges()) out[e] += x;
  return out;
}

// Cross triangles of the two-sided graph, present edges only.
std::vector<Triangle> cross_triangles(const std::vector<int>& P, const std::vector<int>& Q, const EdgeSet& missing) {
  std::vector<Triangle> out;
  auto present = [&](int a, int b) { return missing.count(make_edge(a, b)) == 0; };
  for (const auto* side : {&P, &Q}) {
    const std::vector<int>& same = *side;
    const std::vector<int>& other = side == &P ? Q : P;
    for (std::size_t i = 0; i < same.size(); ++i)
      for (std::size_t j = i + 1; j < same.size(); ++j)
        for (int q : other)
          if (present(same[i], q) && present(same[j], q)) out.push_back(make_triangle(same[i], same[j], q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Adds weights on `candidates` so that inside edges reach exactly 1/2 and
// cross edges stay at most 1.
std::optional<Weights> complete_by_lp(const Weights& base, const std::vector<Triangle>& candidates,
                                      const std::vector<int>& P, const std::vector<int>& Q) {
  const std::map<Edge, Rational> load = loads_of(base);
  auto current = [&](const Edge& e) {
    auto it = load.find(e);
    return it == load.end() ? Rational(0) : it->second;
  };
  auto inside = [&](const Edge& e) {
    return (contains(P, e.u) && contains(P, e.v)) || (contains(Q, e.u) && contains(Q, e.v));
  };
  lp::Problem problem;
  std::map<Edge, int> row;
  auto row_of = [&](const Edge& e) {
    auto it = row.find(e);
    if (it != row.end()) return it->second;
    const Rational cap = (inside(e) ? make_rational(1, 2) : Rational(1)) - current(e);
    const int r = problem.add_row(inside(e) ? lp::RowSense::Equal : lp::RowSense::LessEqual, cap);
    row.emplace(e, r);
    return r;
  };
  for (int a = 0; a < 2; ++a) {
    const std::vector<int>& side = a == 0 ? P : Q;
    for (std::size_t i = 0; i < side.size(); ++i)
      for (std::size_t j = i + 1; j < side.size(); ++j) row_of(make_edge(side[i], side[j]));
  }
  for (const Triangle& t : candidates) {
    std::vector<int> rows;
    for (const Edge& e : t.edges()) rows.push_back(row_of(e));
    problem.add_column(std::move(rows), Rational(0));
  }
  for (int r = 0; r < problem.num_rows; ++r)
    if (sgn(problem.rhs[r]) < 0) return std::nullopt;
  const lp::ExactSolution sol = lp::solve_exact(problem);
  if (sol.status != lp::Status::Optimal) return std::nullopt;
  Weights out = base;
  for (std::size_t j = 0; j < candidates.size(); ++j) add(out, candidates[j], sol.x[j]);
  return out;
}

FractionalPacking to_packing(const Weights& w) {
  FractionalPacking out{EdgeColor::Red, {}};
  for (const auto& [t, x] : w)
    if (sgn(x) != 0) out.weights.emplace(t, x);
  return out;
}

Weights two_edges_packing(int alpha, int beta, const std::vector<int>& A, const std::vector<int>& B,
                          const EdgeSet& missing) {
  const Edge e1 = *missing.begin(), e2 = *std::next(missing.begin());
  const int x = e1.u;
  const int y = e1.v, z = e2.v;
  std::vector<int> A0, B0;
  for (int a : A)
    if (a != x) A0.push_back(a);
  for (int b : B)
    if (b != y && b != z) B0.push_back(b);
  Weights w;
  for (int a : A0)
    for (int b : B0) {
      add(w, make_triangle(x, a, b), make_rational(1, 2 * (beta - 2)));
      for (int v : {y, z}) add(w, make_triangle(a, v, b), make_rational(1, 2 * (alpha - 1)));
    }
  std::map<Edge, Rational> load = loads_of(w);
  if (beta > 3) {
    const Rational w2 = (1 - load[make_edge(x, B0[0])]) / (beta - 3);
    for (std::size_t i = 0; i < B0.size(); ++i)
      for (std::size_t j = i + 1; j < B0.size(); ++j) add(w, make_triangle(x, B0[i], B0[j]), w2);
  }
  const Rational w3 = (1 - load[make_edge(A0[0], y)]) / (alpha - 2);
  for (int v : {y, z})
    for (std::size_t i = 0; i < A0.size(); ++i)
      for (std::size_t j = i + 1; j < A0.size(); ++j) add(w, make_triangle(v, A0[i], A0[j]), w3);

  std::vector<Triangle> avoiding_x;
  for (const Triangle& t : cross_triangles(A, B, missing))
    if (!t.contains(x)) avoiding_x.push_back(t);
  if (auto done = complete_by_lp(w, avoiding_x, A, B)) return *done;
  if (auto done = complete_by_lp({}, cross_triangles(A, B, missing), A, B)) return *done;
  throw std::runtime_error("no two-blob packing found for the two-edge case");
}

Weights three_five_packing(const std::vector<int>& A, const std::vector<int>& B, const EdgeSet& missing) {
  std::vector<int> A1, B1;
  for (const Edge& e : missing) {
    A1.push_back(e.u);
    B1.push_back(e.v);
  }
  Weights w;
  for (const Triangle& t : cross_triangles(A, B, missing)) {
    int in_a1 = 0, in_a0 = 0, in_b1 = 0, in_b0 = 0;
    for (int v : {t.a, t.b, t.c}) {
      if (contains(A1, v)) ++in_a1;
      else if (contains(A, v)) ++in_a0;
      else if (contains(B1, v)) ++in_b1;
      else ++in_b0;
    }
    Rational x;
    if (in_b1 == 2 && in_a0 == 1) {
      x = make_rational(1, 2);
    } else if (in_a1 == 1 && in_b1 == 1 && in_b0 == 1) {
      x = make_rational(1, 3);
    } else if (in_a1 == 1 && in_a0 == 1 && in_b1 == 1) {
      x = 0;
    } else {
      x = make_rational(1, 6);
    }
    add(w, t, x);
  }
  return w;
}

}  // namespace

BlobSpec blob_spec(const std::array<int, 5>& sizes, Interior interior) {
  BlobSpec spec;
  spec.sizes = sizes;
  spec.interior.fill(interior);
  return spec;
}

Blowup pentagon_blowup(const BlobSpec& spec) {
  int n = 0;
  std::array<int, 5> start{};
  for (int j = 0; j < 5; ++j) {
    if (spec.sizes[j] < 1) throw InputError("blob sizes must be positive");
    if (spec.interior[j] == Interior::Given &&
        (spec.given[j].n() != spec.sizes[j] || !spec.given[j].is_complete())) {
      throw InputError("given interior colouring does not match blob " + std::to_string(j + 1));
    }
    start[j] = n;
    n += spec.sizes[j];
  }
  Blowup out{ColoredGraph(n), {}};
  std::vector<int> blob_of(n);
  for (int j = 0; j < 5; ++j)
    for (int k = 0; k < spec.sizes[j]; ++k) {
      blob_of[start[j] + k] = j;
      out.cert.blobs[j].push_back(start[j] + k);
    }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int j = blob_of[u], k = blob_of[v];
      EdgeColor c;
      if (j == k) {
        switch (spec.interior[j]) {
          case Interior::AllRed: c = EdgeColor::Red; break;
          case Interior::AllBlue: c = EdgeColor::Blue; break;
          default: c = spec.given[j].at(u - start[j], v - start[j]); break;
        }
      } else {
        const int d = (k - j + 5) % 5;
        c = d == 1 || d == 4 ? EdgeColor::Red : EdgeColor::Blue;
      }
      out.graph.assign(u, v, c);
    }
  return out;
}

Blowup almost_pentagon_blowup(const BlobSpec& spec) {
  Blowup b = pentagon_blowup(spec);
  const Edge e = make_edge(b.cert.blobs[4][0], b.cert.blobs[1][0]);
  b.graph = flip_edge(b.graph, e);
  b.cert.flips = {e};
  return b;
}

ColoredGraph bipartite_minus_matching(int n, int m) {
  if (n < 0) throw InputError("n must be non-negative");
  const int half = (n + 1) / 2;
  if (m < 0 || m > n / 2) throw InputError("matching size must lie in [0, floor(n/2)]");
  ColoredGraph g(n, EdgeColor::Red);
  for (int x = 0; x < half; ++x)
    for (int y = half; y < n; ++y)
      if (!(y == half + x && x < m)) g.assign(x, y, EdgeColor::Blue);
  return g;
}

ColoredGraph flip_edge(const ColoredGraph& g, const Edge& e) {
  const EdgeColor c = g.color(e.u, e.v);
  if (c == EdgeColor::Unassigned) throw UsageError("cannot flip an unassigned edge");
  ColoredGraph h = g;
  h.assign(e.u, e.v, opposite(c));
  return h;
}

bool in_family_b1(const std::array<int, 5>& sizes) {
  std::array<int, 5> s = sizes;
  std::sort(s.begin(), s.end());
  return std::find(kFamilyB1.begin(), kFamilyB1.end(), s) != kFamilyB1.end();
}

bool in_family_b2(const std::array<int, 5>& sizes) {
  std::array<int, 5> s = sizes;
  std::sort(s.begin(), s.end());
  return std::find(kFamilyB2.begin(), kFamilyB2.end(), s) != kFamilyB2.end();
}

Rational pentagon_pack_closed_form(const std::array<int, 5>& sizes, bool flipped) {
  if (flipped ? !in_family_b2(sizes) : !in_family_b1(sizes)) {
    throw UsageError("no closed form for these blob sizes; compute pack() on the construction instead");
  }
  long sum = 0;
  for (int x : sizes) sum += static_cast<long>(x) * (x - 1) / 2;
  return Rational(3 * (sum + (flipped ? 1 : 0)));
}

FractionalPacking ab_packing(AbCase which, int alpha, int beta, const std::vector<Edge>& missing_list) {
  const std::vector<int> A = range(0, alpha);
  const std::vector<int> B = range(alpha, beta);
  EdgeSet missing;
  for (const Edge& e : missing_list) {
    const Edge f = make_edge(e.u, e.v);
    if (!(f.u >= 0 && f.u < alpha && f.v >= alpha && f.v < alpha + beta)) {
      throw InputError("missing edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " is not an A-B edge");
    }
    if (!missing.insert(f).second) throw InputError("duplicate missing edge");
  }
  switch (which) {
    case AbCase::Complete:
      if (!(2 <= alpha && alpha <= beta && beta <= alpha + 2)) throw InputError("needs 2 <= |A| <= |B| <= |A| + 2");
      if (!missing.empty()) throw InputError("the complete case has no missing edges");
      return to_packing(half_d_weights(A, B, missing));
    case AbCase::Matching:
      if (!(3 <= alpha && alpha <= beta && beta <= alpha + 1)) throw InputError("needs 3 <= |A| <= |B| <= |A| + 1");
      check_matching(A, B, missing);
      return to_packing(matching_packing(A, B, missing));
    case AbCase::TwoEdges: {
      if (!(3 <= alpha && alpha <= beta && beta <= alpha + 1)) throw InputError("needs 3 <= |A| <= |B| <= |A| + 1");
      if (missing.size() != 2 || missing.begin()->u != std::next(missing.begin())->u) {
        throw InputError("needs exactly two missing edges meeting in A");
      }
      return to_packing(two_edges_packing(alpha, beta, A, B, missing));
    }
    case AbCase::ThreeFive:
      if (alpha != 3 || beta != 5) throw InputError("needs |A| = 3 and |B| = 5");
      check_matching(A, B, missing);
      if (missing.size() != 2) throw InputError("needs a missing matching of size 2");
      return to_packing(three_five_packing(A, B, missing));
  }
  throw InputError("unknown case");
}

FractionalPacking abc_packing(int beta, int gamma, const std::vector<Edge>& missing_list) {
  if (beta < 3 || beta > 4 || gamma < 3 || gamma > 4) throw InputError("needs |B|, |C| in {3, 4}");
  const std::vector<int> A = range(0, 2);
  const std::vector<int> B = range(2, beta);
  const std::vector<int> C = range(2 + beta, gamma);
  std::vector<int> AC = A;
  AC.insert(AC.end(), C.begin(), C.end());
  EdgeSet missing;
  for (const Edge& e : missing_list) {
    if (!missing.insert(make_edge(e.u, e.v)).second) throw InputError("duplicate missing edge");
  }
  check_matching(B, AC, missing);

  std::set<int> used;
  EdgeSet ab, bc;
  for (const Edge& e : missing) {
    used.insert(e.u);
    used.insert(e.v);
    (contains(A, e.u) || contains(A, e.v) ? ab : bc).insert(e);
  }
  if (bc.size() > 2) throw InputError("at most two missing B-C edges are allowed");

  // Enlarge the missing matching to the two shapes the construction uses.
  std::size_t want_ab = 2, want_bc = beta == 4 ? 2 : 1;
  if (beta == 3 && bc.size() == 2) want_ab = 1, want_bc = 2;
  auto extend = [&](const std::vector<int>& other, EdgeSet& into, std::size_t want) {
    for (int b : B) {
      if (into.size() >= want) return;
      if (used.count(b)) continue;
      for (int o : other) {
        if (used.count(o)) continue;
        into.insert(make_edge(b, o));
        used.insert(b);
        used.insert(o);
        break;
      }
    }
  };
  extend(A, ab, want_ab);
  extend(C, bc, want_bc);

  std::vector<int> b_prime;
  for (const Edge& e : ab) b_prime.push_back(contains(B, e.u) ? e.u : e.v);
  std::sort(b_prime.begin(), b_prime.end());

  EdgeSet ab_missing = ab;
  Weights w;
  const std::vector<Triangle> left = cross_triangles(A, B, ab_missing);
  if (beta == 4) {
    for (const Triangle& t : left) {
      int in_a = 0, in_bp = 0;
      for (int v : {t.a, t.b, t.c}) {
        if (contains(A, v)) ++in_a;
        else if (contains(b_prime, v)) ++in_bp;
      }
      const int in_rest = 3 - in_a - in_bp;
      if (in_a == 1 && in_bp == 1 && in_rest == 1) add(w, t, make_rational(1, 2));
      else if (in_a == 1 && in_rest == 2) add(w, t, make_rational(1, 4));
      else if (in_a == 2 && in_rest == 1) add(w, t, make_rational(1, 4));
    }
  } else if (ab.size() == 2) {
    for (const Triangle& t : left) add(w, t, make_rational(1, 2));
  } else {
    for (const Triangle& t : left) add(w, t, t.contains(b_prime[0]) ? make_rational(1, 2) : make_rational(1, 4));
  }

  if (b_prime.size() == 2) {
    int c = -1;
    for (int v : C)
      if (!used.count(v)) {
        c = v;
        break;
      }
    for (int b : b_prime) {
      EdgeSet m = bc;
      m.insert(make_edge(b, c));
      for (const auto& [t, x] : matching_packing(B, C, m)) add(w, t, x / 2);
    }
    add(w, make_triangle(b_prime[0], b_prime[1], c), make_rational(1, 2));
  } else {
    for (const auto& [t, x] : matching_packing(B, C, bc)) add(w, t, x);
  }
  return to_packing(w);
}

const std::vector<BlowupValue>& table1_rows() {
  static const std::vector<BlowupValue> rows = {
      {{3, 3, 3, 4, 4}, false, 63},  {{3, 3, 3, 4, 4}, true, 66},   {{2, 3, 4, 4, 4}, false, 66},
      {{3, 3, 3, 3, 5}, false, 66},  {{3, 3, 4, 4, 4}, false, 72},  {{3, 3, 4, 4, 4}, true, 75},
      {{2, 4, 4, 4, 4}, false, 75},  {{3, 3, 3, 4, 5}, false, 75},  {{3, 4, 4, 4, 4}, false, 81},
      {{3, 4, 4, 4, 4}, true, 84},   {{3, 3, 4, 4, 5}, false, 84},  {{4, 4, 4, 4, 4}, false, 90},
      {{4, 4, 4, 4, 4}, true, 93},   {{3, 4, 4, 4, 5}, false, 93},  {{4, 4, 4, 4, 5}, false, 102},
      {{4, 4, 4, 4, 5}, true, 105},  {{3, 4, 4, 5, 5}, false, 105}, {{4, 4, 4, 5, 5}, false, 114},
      {{4, 4, 5, 5, 5}, false, 126}, {{4, 5, 5, 5, 5}, false, 138}, {{5, 5, 5, 5, 5}, false, 150},
  };
  return rows;
}

FractionalPacking restrict_to_host(const FractionalPacking& w, const ColoredGraph& host) {
  FractionalPacking out{w.color, {}};
  for (const auto& [t, x] : w.weights) {
    if (t.c >= host.n()) continue;
    bool mono = true;
    for (const Edge& e : t.edges()) mono = mono && host.at(e.u, e.v) == w.color;
    if (mono) out.weights.emplace(t, x);
  }
  return out;
}

}  // namespace tripack
