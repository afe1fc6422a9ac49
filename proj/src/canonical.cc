#include "tripack/canonical.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "tripack/errors.h"

namespace tripack {

namespace {

using Cells = std::vector<std::vector<int>>;

class Canonizer {
 public:
  explicit Canonizer(const ColoredGraph& g) : g_(g), n_(g.n()), red_(n_, 0) {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (g.at(i, j) == EdgeColor::Red) {
          red_[i] |= std::uint64_t{1} << j;
          red_[j] |= std::uint64_t{1} << i;
        }
    seed_twins();
  }

  std::pair<std::string, std::vector<int>> run() {
    Cells root;
    if (n_ > 0) {
      root.emplace_back(n_);
      std::iota(root[0].begin(), root[0].end(), 0);
    }
    refine(root);
    std::vector<int> prefix;
    search(root, prefix);
    return {best_string_, best_perm_};
  }

 private:
  // Vertices with identical colours to every third vertex are exchanged by
  // an automorphism.
  void seed_twins() {
    std::vector<int> cls(n_, -1);
    for (int u = 0; u < n_; ++u) {
      if (cls[u] >= 0) continue;
      cls[u] = u;
      int last = u;
      for (int v = u + 1; v < n_; ++v) {
        if (cls[v] >= 0) continue;
        const std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
        if ((red_[u] & mask) == (red_[v] & mask)) {
          cls[v] = u;
          std::vector<int> gen(n_);
          std::iota(gen.begin(), gen.end(), 0);
          std::swap(gen[last], gen[v]);
          generators_.push_back(std::move(gen));
          last = v;
        }
      }
    }
  }

  void refine(Cells& cells) const {
    std::vector<std::uint64_t> mask;
    std::vector<std::pair<std::vector<int>, int>> keyed;
    while (true) {
      mask.assign(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) mask[c] |= std::uint64_t{1} << v;
      Cells next;
      next.reserve(n_);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        keyed.clear();
        for (int v : cell) {
          std::vector<int> counts(cells.size());
          for (std::size_t c = 0; c < cells.size(); ++c) counts[c] = std::popcount(red_[v] & mask[c]);
          keyed.emplace_back(std::move(counts), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
      }
      const bool changed = next.size() != cells.size();
      cells = std::move(next);
      if (!changed) return;
    }
  }

  std::string leaf_string(const std::vector<int>& perm) const {
    std::vector<int> at(n_);
    for (int v = 0; v < n_; ++v) at[perm[v]] = v;
    std::string s = "n=" + std::to_string(n_) + "\n";
    s.reserve(s.size() + ColoredGraph::pair_count(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) s.push_back((red_[at[i]] >> at[j]) & 1 ? 'R' : 'B');
    return s;
  }

  bool is_automorphism(const std::vector<int>& gamma) const {
    for (int i = 0; i < n_; ++i) {
      std::uint64_t image = 0;
      for (std::uint64_t m = red_[i]; m; m &= m - 1) image |= std::uint64_t{1} << gamma[std::countr_zero(m)];
      if (image != red_[gamma[i]]) return false;
    }
    return true;
  }

  // gamma = sigma^{-1} o pi maps the two leaves onto each other.
  void record_automorphism(const std::vector<int>& pi, const std::vector<int>& sigma) {
    std::vector<int> sigma_inv(n_);
    for (int v = 0; v < n_; ++v) sigma_inv[sigma[v]] = v;
    std::vector<int> gamma(n_);
    for (int v = 0; v < n_; ++v) gamma[v] = sigma_inv[pi[v]];
    if (is_automorphism(gamma)) generators_.push_back(std::move(gamma));
  }

  void leaf(const Cells& cells) {
    std::vector<int> perm(n_);
    for (std::size_t c = 0; c < cells.size(); ++c) perm[cells[c][0]] = static_cast<int>(c);
    std::string s = leaf_string(perm);
    if (first_perm_.empty()) {
      first_string_ = s;
      first_perm_ = perm;
      best_string_ = std::move(s);
      best_perm_ = std::move(perm);
      return;
    }
    if (s == first_string_) {
      record_automorphism(perm, first_perm_);
    } else if (s == best_string_) {
      record_automorphism(perm, best_perm_);
    } else if (s < best_string_) {
      best_string_ = std::move(s);
      best_perm_ = std::move(perm);
    }
  }

  // Orbits of the group generated by the known automorphisms fixing every
  // vertex of `prefix`.
  std::vector<int> orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gen : generators_) {
      bool fixes = true;
      for (int v : prefix) fixes = fixes && gen[v] == v;
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v), b = find(gen[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(const Cells& cells, std::vector<int>& prefix) {
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> candidates = cells[t];
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> explored;
    for (int w : candidates) {
      if (!explored.empty()) {
        const std::vector<int> orb = orbits(prefix);
        bool seen = false;
        for (int x : explored) seen = seen || orb[x] == orb[w];
        if (seen) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != t) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({w});
        std::vector<int> rest;
        for (int v : cells[c])
          if (v != w) rest.push_back(v);
        child.push_back(std::move(rest));
      }
      refine(child);
      prefix.push_back(w);
      search(child, prefix);
      prefix.pop_back();
      explored.push_back(w);
    }
  }

  const ColoredGraph& g_;
  int n_;
  std::vector<std::uint64_t> red_;
  std::vector<std::vector<int>> generators_;
  std::string first_string_, best_string_;
  std::vector<int> first_perm_, best_perm_;
};

}  // namespace

std::pair<CanonicalKey, Relabeling> canonical_key(const ColoredGraph& g, bool admit_swap) {
  if (!g.is_complete()) throw UsageError("canonical_key needs a complete colouring");
  if (g.n() > 64) throw UsageError("canonical_key supports at most 64 vertices");
  auto [bytes, perm] = Canonizer(g).run();
  Relabeling witness{std::move(perm), false};
  if (admit_swap) {
    const ColoredGraph s = swap_colors(g);
    auto [swapped_bytes, swapped_perm] = Canonizer(s).run();
    if (swapped_bytes < bytes) {
      bytes = std::move(swapped_bytes);
      witness = Relabeling{std::move(swapped_perm), true};
    }
  }
  return {CanonicalKey{std::move(bytes), admit_swap}, std::move(witness)};
}

bool are_isomorphic(const ColoredGraph& g, const ColoredGraph& h, bool admit_swap) {
  return find_isomorphism(g, h, admit_swap).has_value();
}

std::optional<Relabeling> find_isomorphism(const ColoredGraph& g, const ColoredGraph& h, bool admit_swap) {
  if (g.n() != h.n()) return std::nullopt;
  auto [kg, rg] = canonical_key(g, admit_swap);
  auto [kh, rh] = canonical_key(h, admit_swap);
  if (kg != kh) return std::nullopt;
  return compose(rg, inverse(rh));
}

ColoredGraph relabel(const ColoredGraph& g, const Relabeling& r) {
  const int n = g.n();
  if (static_cast<int>(r.perm.size()) != n) throw InputError("relabeling size does not match the graph");
  ColoredGraph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const EdgeColor c = g.at(i, j);
      h.assign(r.perm[i], r.perm[j], r.swapped ? opposite(c) : c);
    }
  return h;
}

FractionalPacking relabel(const FractionalPacking& w, const Relabeling& r) {
  FractionalPacking out{r.swapped ? opposite(w.color) : w.color, {}};
  for (const auto& [t, x] : w.weights) out.weights.emplace(make_triangle(r.perm[t.a], r.perm[t.b], r.perm[t.c]), x);
  return out;
}

Relabeling inverse(const Relabeling& r) {
  Relabeling out{std::vector<int>(r.perm.size()), r.swapped};
  for (std::size_t v = 0; v < r.perm.size(); ++v) out.perm[r.perm[v]] = static_cast<int>(v);
  return out;
}

Relabeling compose(const Relabeling& a, const Relabeling& b) {
  Relabeling out{std::vector<int>(a.perm.size()), a.swapped != b.swapped};
  for (std::size_t v = 0; v < a.perm.size(); ++v) out.perm[v] = b.perm[a.perm[v]];
  return out;
}

}  // namespace tripack
