#pragma once

// Brute-force reference implementations used only by the tests. None of them
// calls into the solvers they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "flowkit/apps.hpp"
#include "flowkit/lp.hpp"
#include "flowkit/network.hpp"
#include "flowkit/pseudoflow.hpp"

namespace oracle {

using flowkit::Capacity;
using flowkit::IntMatrix;
using flowkit::Network;
using flowkit::Rational;

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Simple network on n in [2, max_n] vertices, s = 0, t = n - 1, integer
/// capacities in [0, max_cap]. Each unordered pair gets at most one arc.
inline Network random_network(std::mt19937_64& rng, int max_n = 8, int max_cap = 10, int density_pct = 50) {
  const int n = uniform(rng, 2, max_n);
  const int s = 0, t = n - 1;
  std::vector<flowkit::ArcSpec> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (uniform(rng, 1, 100) > density_pct) continue;
      int a = u, b = v;
      if (uniform(rng, 0, 1)) std::swap(a, b);
      if (b == s || a == t) std::swap(a, b);
      if (b == s || a == t) continue;
      arcs.push_back({a, b, Capacity(uniform(rng, 0, max_cap))});
    }
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return Network::build(n, s, t, arcs);
}

/// Capacity of the cut with the given source side, from the arc list.
inline Rational cut_value(const Network& net, const std::vector<bool>& side) {
  Rational c = 0;
  for (int e = 0; e < net.arc_count(); ++e) {
    const auto& a = net.arc(e);
    if (side[static_cast<std::size_t>(a.tail)] && !side[static_cast<std::size_t>(a.head)]) c += a.capacity.value();
  }
  return c;
}

/// Minimum over all 2^(n-2) source sides.
inline Rational brute_min_cut(const Network& net) {
  std::vector<int> inner;
  for (int v = 0; v < net.vertex_count(); ++v)
    if (v != net.source() && v != net.sink()) inner.push_back(v);
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner.size()); ++mask) {
    std::vector<bool> side(static_cast<std::size_t>(net.vertex_count()), false);
    side[static_cast<std::size_t>(net.source())] = true;
    for (std::size_t i = 0; i < inner.size(); ++i)
      if (mask >> i & 1) side[static_cast<std::size_t>(inner[i])] = true;
    Rational c = cut_value(net, side);
    if (!best || c < *best) best = c;
  }
  return *best;
}

/// Every source side (s in, t out) of the network.
inline std::vector<std::vector<bool>> all_cut_sides(const Network& net) {
  std::vector<int> inner;
  for (int v = 0; v < net.vertex_count(); ++v)
    if (v != net.source() && v != net.sink()) inner.push_back(v);
  std::vector<std::vector<bool>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner.size()); ++mask) {
    std::vector<bool> side(static_cast<std::size_t>(net.vertex_count()), false);
    side[static_cast<std::size_t>(net.source())] = true;
    for (std::size_t i = 0; i < inner.size(); ++i)
      if (mask >> i & 1) side[static_cast<std::size_t>(inner[i])] = true;
    out.push_back(std::move(side));
  }
  return out;
}

/// max over all subsets of Σ weights − Σ capacities of arcs leaving the subset.
inline Rational brute_max_surplus(const flowkit::WeightedGraph& g) {
  const int n = g.vertex_count();
  Rational best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Rational s = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s += g.weights[static_cast<std::size_t>(v)];
    for (const auto& a : g.arcs)
      if ((mask >> a.tail & 1) && !(mask >> a.head & 1)) s -= a.capacity.value();
    best = std::max(best, s);
  }
  return best;
}

/// Whether some permutation matches every v to a neighbor, by trying all n!.
inline bool has_perfect_matching(const flowkit::BipartiteGraph& g) {
  std::set<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
  std::vector<int> perm(static_cast<std::size_t>(g.n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v) ok = edges.contains({v, perm[static_cast<std::size_t>(v)]});
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool hall_violated(const flowkit::BipartiteGraph& g, const std::vector<int>& s) {
  std::set<int> in(s.begin(), s.end()), nbr;
  for (const auto& [v, w] : g.edges)
    if (in.contains(v)) nbr.insert(w);
  return nbr.size() < in.size();
}

/// Random bounded poset: 0 is the bottom, k+1 the top, internal relations
/// i < j drawn for i < j.
inline flowkit::Poset random_poset(std::mt19937_64& rng, int max_elements = 9) {
  const int total = uniform(rng, 2, max_elements);
  const int k = total - 2;
  std::vector<std::string> names;
  for (int i = 0; i < total; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::pair<int, int>> rel;
  const int density = uniform(rng, 10, 60);
  for (int i = 1; i <= k; ++i) {
    rel.emplace_back(0, i);
    rel.emplace_back(i, k + 1);
    for (int j = i + 1; j <= k; ++j)
      if (uniform(rng, 1, 100) <= density) rel.emplace_back(i, j);
  }
  if (k == 0) rel.emplace_back(0, 1);
  return flowkit::Poset::build(names, rel);
}

/// Maximal chains by direct search: bottom-to-top sequences of covers, where
/// a cover is checked against the closed relation.
inline std::vector<std::vector<int>> all_maximal_chains(const flowkit::Poset& p) {
  const int n = p.size();
  auto is_cover = [&](int a, int b) {
    if (!p.less(a, b)) return false;
    for (int z = 0; z < n; ++z)
      if (p.less(a, z) && p.less(z, b)) return false;
    return true;
  };
  std::vector<std::vector<int>> out;
  std::vector<int> cur{*p.bottom()};
  std::function<void()> walk = [&] {
    if (cur.back() == *p.top()) {
      out.push_back(cur);
      return;
    }
    for (int z = 0; z < n; ++z)
      if (is_cover(cur.back(), z)) {
        cur.push_back(z);
        walk();
        cur.pop_back();
      }
  };
  walk();
  return out;
}

/// Largest family of maximal chains sharing no cover pair, by branch and bound.
inline std::size_t brute_max_cover_disjoint(const flowkit::Poset& p) {
  const auto chains = all_maximal_chains(p);
  std::vector<std::set<std::pair<int, int>>> pairs;
  for (const auto& c : chains) {
    std::set<std::pair<int, int>> s;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) s.insert({c[i], c[i + 1]});
    pairs.push_back(std::move(s));
  }
  std::size_t best = 0;
  std::set<std::pair<int, int>> used;
  std::function<void(std::size_t, std::size_t)> search = [&](std::size_t i, std::size_t count) {
    best = std::max(best, count);
    if (i == chains.size() || count + (chains.size() - i) <= best) return;
    bool free = true;
    for (const auto& pr : pairs[i]) free = free && !used.contains(pr);
    if (free) {
      used.insert(pairs[i].begin(), pairs[i].end());
      search(i + 1, count + 1);
      for (const auto& pr : pairs[i]) used.erase(pr);
    }
    search(i + 1, count);
  };
  search(0, 0);
  return best;
}

/// Random image with rational probabilities and penalties.
inline flowkit::PixelImage random_image(std::mt19937_64& rng, int width, int height) {
  flowkit::PixelImage img;
  img.width = width;
  img.height = height;
  auto prob = [&] {
    Rational r(uniform(rng, 0, 12), 12);
    r.canonicalize();
    return r;
  };
  for (int i = 0; i < width * height; ++i) {
    img.a.push_back(prob());
    img.b.push_back(prob());
  }
  for (int i = 0; i < (width - 1) * height; ++i) img.horizontal.push_back(Rational(uniform(rng, 0, 4), 8));
  for (int i = 0; i < width * (height - 1); ++i) img.vertical.push_back(Rational(uniform(rng, 0, 4), 8));
  for (auto* v : {&img.horizontal, &img.vertical})
    for (auto& x : *v) x.canonicalize();
  return img;
}

/// s(A, B) computed from the definition, with its own neighbor walk.
inline Rational score(const flowkit::PixelImage& img, const std::vector<bool>& fg) {
  Rational s = 0;
  const int w = img.width;
  for (int v = 0; v < img.pixel_count(); ++v) s += fg[static_cast<std::size_t>(v)] ? img.a[static_cast<std::size_t>(v)] : img.b[static_cast<std::size_t>(v)];
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < w; ++x) {
      const int v = y * w + x;
      if (x + 1 < w && fg[static_cast<std::size_t>(v)] != fg[static_cast<std::size_t>(v + 1)])
        s -= img.horizontal[static_cast<std::size_t>(y * (w - 1) + x)];
      if (y + 1 < img.height && fg[static_cast<std::size_t>(v)] != fg[static_cast<std::size_t>(v + w)])
        s -= img.vertical[static_cast<std::size_t>(v)];
    }
  return s;
}

inline Rational brute_best_segmentation(const flowkit::PixelImage& img) {
  const int n = img.pixel_count();
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> fg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) fg[static_cast<std::size_t>(v)] = mask >> v & 1;
    Rational s = score(img, fg);
    if (!best || s > *best) best = s;
  }
  return *best;
}

/// Ghouila-Houri: M is totally unimodular iff every subset R of rows admits
/// signs ±1 such that each column's signed sum over R lies in {-1, 0, 1}.
inline bool ghouila_houri(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) < -1 || m(i, j) > 1) return false;
  const std::size_t r = m.rows();
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << r); ++subset) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < r; ++i)
      if (subset >> i & 1) rows.push_back(i);
    bool found = false;
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << rows.size()) && !found; ++signs) {
      bool ok = true;
      for (std::size_t j = 0; j < m.cols() && ok; ++j) {
        long sum = 0;
        for (std::size_t k = 0; k < rows.size(); ++k) sum += (signs >> k & 1 ? -1 : 1) * m(rows[k], j);
        ok = sum >= -1 && sum <= 1;
      }
      found = ok;
    }
    if (!found) return false;
  }
  return true;
}

inline IntMatrix random_sign_matrix(std::mt19937_64& rng, int max_dim = 6) {
  const int r = uniform(rng, 1, max_dim), c = uniform(rng, 1, max_dim);
  const int zeros = uniform(rng, 20, 80);
  IntMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c), 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (uniform(rng, 1, 100) > zeros) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = uniform(rng, 0, 1) ? 1 : -1;
  return m;
}

/// Solves the square system exactly; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// Optimum of `max c.x, Ax <= b, x >= 0` by enumerating every choice of n
/// tight constraints among the rows and the sign bounds. Assumes the
/// feasible region is bounded; nullopt when it is empty.
inline std::optional<Rational> brute_lp_max(const flowkit::LinearProgram& lp) {
  const std::size_t n = lp.variable_count(), m = lp.row_count();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = lp.constraints(i, j);
    rows.push_back(r);
    rhs.push_back(lp.bounds[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> r(n, Rational(0));
    r[j] = -1;
    rows.push_back(r);
    rhs.push_back(0);
  }
  std::optional<Rational> best;
  const std::size_t total = rows.size();
  std::vector<bool> pick(total, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < total; ++i)
      if (pick[i]) {
        a.push_back(rows[i]);
        b.push_back(rhs[i]);
      }
    auto x = solve_square(a, b);
    if (!x) continue;
    bool feasible = true;
    for (std::size_t i = 0; i < total && feasible; ++i) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += rows[i][j] * (*x)[j];
      feasible = lhs <= rhs[i];
    }
    if (!feasible) continue;
    Rational v = 0;
    for (std::size_t j = 0; j < n; ++j) v += lp.objective[j] * (*x)[j];
    if (!best || v > *best) best = v;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace oracle
