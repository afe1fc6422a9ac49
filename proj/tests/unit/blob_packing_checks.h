#ifndef TRIPACK_TESTS_BLOB_PACKING_CHECKS_H_
#define TRIPACK_TESTS_BLOB_PACKING_CHECKS_H_

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "tripack/constructions.h"

namespace tripack::testing {

// parts[v] is the part index of v; missing lists absent cross edges, and
// parts in `apart` have no edges between them at all. required[p] is the
// exact load of every edge inside part p.
inline std::string check_blob_packing(const FractionalPacking& w, const std::vector<int>& parts,
                                      const std::vector<Rational>& required, const std::vector<Edge>& missing,
                                      std::pair<int, int> apart = {-1, -1}) {
  const int n = static_cast<int>(parts.size());
  std::set<Edge> absent;
  for (const Edge& e : missing) absent.insert(make_edge(e.u, e.v));
  auto present = [&](int u, int v) {
    const int p = parts[u], q = parts[v];
    if ((p == apart.first && q == apart.second) || (p == apart.second && q == apart.first)) return false;
    return !absent.count(make_edge(u, v));
  };
  for (const auto& [t, x] : w.weights) {
    const std::string name = std::to_string(t.a) + " " + std::to_string(t.b) + " " + std::to_string(t.c);
    if (t.c >= n) return "triangle " + name + " leaves the vertex set";
    if (sgn(x) < 0 || x > 1) return "triangle " + name + " has weight " + to_string(x);
    if (parts[t.a] == parts[t.b] && parts[t.b] == parts[t.c]) return "triangle " + name + " lies inside one part";
    if (!present(t.a, t.b) || !present(t.a, t.c) || !present(t.b, t.c)) return "triangle " + name + " uses an absent edge";
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const Rational load = w.load({u, v});
      const std::string name = "edge " + std::to_string(u) + " " + std::to_string(v);
      if (parts[u] == parts[v]) {
        if (load != required[parts[u]]) return name + " has load " + to_string(load);
      } else if (load > 1) {
        return name + " has load " + to_string(load);
      }
    }
  return {};
}

// Every matching between P and Q, as edge lists.
inline void for_each_matching(const std::vector<int>& P, const std::vector<int>& Q,
                              const std::function<void(const std::vector<Edge>&)>& visit) {
  std::vector<Edge> current;
  std::vector<bool> used(64, false);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == P.size()) {
      visit(current);
      return;
    }
    go(i + 1);
    for (int q : Q) {
      if (used[q]) continue;
      used[q] = true;
      current.push_back(make_edge(P[i], q));
      go(i + 1);
      current.pop_back();
      used[q] = false;
    }
  };
  go(0);
}

struct BlobPackingTally {
  long instances = 0;
  std::vector<std::string> failures;
};

inline void record(BlobPackingTally& tally, const std::string& label, const std::function<FractionalPacking()>& build,
                   const std::function<std::string(const FractionalPacking&)>& check) {
  ++tally.instances;
  try {
    const std::string problem = check(build());
    if (!problem.empty()) tally.failures.push_back(label + ": " + problem);
  } catch (const std::exception& e) {
    tally.failures.push_back(label + ": threw " + e.what());
  }
}

// All two-blob instances with |B| <= max_size, and all three-blob instances.
inline BlobPackingTally run_blob_packing_instances(int max_size) {
  BlobPackingTally tally;
  const Rational half = make_rational(1, 2);
  for (int alpha = 2; alpha <= max_size; ++alpha) {
    for (int beta = alpha; beta <= std::min(max_size, alpha + 2); ++beta) {
      std::vector<int> A, B, parts;
      for (int i = 0; i < alpha; ++i) A.push_back(i), parts.push_back(0);
      for (int i = 0; i < beta; ++i) B.push_back(alpha + i), parts.push_back(1);
      const std::string sizes = std::to_string(alpha) + "," + std::to_string(beta);
      auto check = [&](const std::vector<Edge>& missing) {
        return [&, missing](const FractionalPacking& w) { return check_blob_packing(w, parts, {half, half}, missing); };
      };
      record(tally, "complete " + sizes, [&] { return ab_packing(AbCase::Complete, alpha, beta, {}); }, check({}));
      if (alpha < 3 || beta > alpha + 1) continue;
      for_each_matching(A, B, [&](const std::vector<Edge>& m) {
        record(tally, "matching " + sizes, [&] { return ab_packing(AbCase::Matching, alpha, beta, m); }, check(m));
      });
      for (int a : A)
        for (int b1 : B)
          for (int b2 : B) {
            if (b2 <= b1) continue;
            const std::vector<Edge> m{make_edge(a, b1), make_edge(a, b2)};
            record(tally, "two edges " + sizes, [&] { return ab_packing(AbCase::TwoEdges, alpha, beta, m); },
                   check(m));
          }
    }
  }
  {
    const std::vector<int> A{0, 1, 2}, B{3, 4, 5, 6, 7}, parts{0, 0, 0, 1, 1, 1, 1, 1};
    for_each_matching(A, B, [&](const std::vector<Edge>& m) {
      if (m.size() != 2) return;
      record(tally, "three-five", [&] { return ab_packing(AbCase::ThreeFive, 3, 5, m); },
             [&](const FractionalPacking& w) { return check_blob_packing(w, parts, {half, half}, m); });
    });
  }
  for (int beta = 3; beta <= 4; ++beta)
    for (int gamma = 3; gamma <= 4; ++gamma) {
      std::vector<int> B, AC{0, 1}, parts{0, 0};
      for (int i = 0; i < beta; ++i) B.push_back(2 + i), parts.push_back(1);
      for (int i = 0; i < gamma; ++i) AC.push_back(2 + beta + i), parts.push_back(2);
      for_each_matching(B, AC, [&](const std::vector<Edge>& m) {
        int towards_c = 0;
        for (const Edge& e : m) towards_c += e.v >= 2 + beta;
        if (towards_c > 2) return;
        record(tally, "abc " + std::to_string(beta) + "," + std::to_string(gamma),
               [&] { return abc_packing(beta, gamma, m); },
               [&](const FractionalPacking& w) {
                 return check_blob_packing(w, parts, {half, Rational(1), half}, m, {0, 2});
               });
      });
    }
  return tally;
}

}  // namespace tripack::testing

#endif  // TRIPACK_TESTS_BLOB_PACKING_CHECKS_H_
