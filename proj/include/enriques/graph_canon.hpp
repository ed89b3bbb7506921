#pragma once

#include "enriques/curves.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace enriques {

// Canonical labeling of small vertex-colored graphs with integer edge weights, by
// color refinement plus exhaustive individualization. Meant for at most ~16 vertices.
struct CanonicalForm {
  std::vector<std::size_t> order;  // order[p] = original vertex at canonical position p
  std::vector<int> code;           // colors then adjacency, in canonical order
};

namespace detail {

struct Canonizer {
  const std::vector<std::vector<int>>& adj;
  const std::vector<std::vector<int>>& color;
  std::size_t n;
  CanonicalForm best;
  bool have = false;

  // cells[v] = cell index; returns refined cell index per vertex (stable, label invariant).
  std::vector<int> refine(std::vector<int> cell) const {
    while (true) {
      std::vector<std::pair<std::vector<int>, std::size_t>> sig(n);
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> s{cell[v]};
        std::vector<std::pair<int, int>> nb;
        for (std::size_t w = 0; w < n; ++w)
          if (w != v && adj[v][w] != 0) nb.emplace_back(cell[w], adj[v][w]);
        std::sort(nb.begin(), nb.end());
        for (auto [c, wgt] : nb) {
          s.push_back(c);
          s.push_back(wgt);
        }
        sig[v] = {std::move(s), v};
      }
      std::vector<std::vector<int>> keys;
      for (auto& s : sig) keys.push_back(s.first);
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      std::vector<int> next(n);
      for (std::size_t v = 0; v < n; ++v)
        next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
      const std::size_t before = count_cells(cell), after = keys.size();
      cell = std::move(next);
      if (after == before) return cell;
    }
  }

  static std::size_t count_cells(const std::vector<int>& cell) {
    std::vector<int> c = cell;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void search(const std::vector<int>& cell) {
    if (count_cells(cell) == n) {
      CanonicalForm f;
      f.order.assign(n, 0);
      for (std::size_t v = 0; v < n; ++v) f.order[static_cast<std::size_t>(cell[v])] = v;
      for (auto v : f.order) {
        f.code.push_back(static_cast<int>(color[v].size()));
        f.code.insert(f.code.end(), color[v].begin(), color[v].end());
      }
      for (auto a : f.order)
        for (auto b : f.order) f.code.push_back(adj[a][b]);
      if (!have || f.code < best.code) {
        best = std::move(f);
        have = true;
      }
      return;
    }
    // First non-singleton cell.
    std::vector<int> sizes(n, 0);
    for (int c : cell) ++sizes[static_cast<std::size_t>(c)];
    int target = 0;
    while (sizes[static_cast<std::size_t>(target)] < 2) ++target;
    for (std::size_t v = 0; v < n; ++v) {
      if (cell[v] != target) continue;
      std::vector<int> split(n);
      for (std::size_t w = 0; w < n; ++w) split[w] = 2 * cell[w] + ((cell[w] == target && w != v) ? 1 : 0);
      search(refine(std::move(split)));
    }
  }
};

}  // namespace detail

inline CanonicalForm canonical_form(const std::vector<std::vector<int>>& adj,
                                    const std::vector<std::vector<int>>& color) {
  const std::size_t n = adj.size();
  if (n == 0) return {};
  detail::Canonizer c{adj, color, n, {}, false};
  std::vector<std::vector<int>> keys = color;
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<int> cell(n);
  for (std::size_t v = 0; v < n; ++v)
    cell[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), color[v]) - keys.begin());
  c.search(c.refine(std::move(cell)));
  return c.best;
}

inline CanonicalForm canonical_form(const CurveConfig& g, const std::vector<std::vector<int>>& color) {
  std::vector<std::vector<int>> adj(g.size(), std::vector<int>(g.size(), 0));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j) adj[i][j] = g(i, j);
  return canonical_form(adj, color);
}

inline CanonicalForm canonical_form(const CurveConfig& g) {
  return canonical_form(g, std::vector<std::vector<int>>(g.size()));
}

inline bool isomorphic(const CurveConfig& a, const CurveConfig& b) {
  return a.size() == b.size() && canonical_form(a).code == canonical_form(b).code;
}

// All automorphisms of a colored graph (brute force backtracking; small graphs only).
inline std::vector<std::vector<std::size_t>> automorphisms(const CurveConfig& g,
                                                           const std::vector<std::vector<int>>& color = {}) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> img(n);
  std::vector<bool> used(n, false);
  auto col = [&](std::size_t v) { return color.empty() ? std::vector<int>{} : color[v]; };
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      out.push_back(img);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || col(c) != col(k)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = g(k, j) == g(c, img[j]);
      if (!ok) continue;
      used[c] = true;
      img[k] = c;
      rec(k + 1);
      used[c] = false;
    }
  };
  rec(0);
  return out;
}

}  // namespace enriques
