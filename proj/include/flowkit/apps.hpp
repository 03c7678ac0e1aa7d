#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "flowkit/network.hpp"
#include "flowkit/rational.hpp"

namespace flowkit {

/// Parts V = {0..n-1} and W = {0..n-1}; an edge (v, w) joins v in V to w in W.
struct BipartiteGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

struct MatchingResult {
  bool perfect = false;
  std::vector<int> mate;       // mate[v] = w, when perfect
  std::vector<int> violation;  // S ⊆ V with |N(S)| < |S|, otherwise
};

/// Unit arcs s->V and W->t, arcs V->W of capacity n+1. A maximum flow below
/// n yields S = V ∩ (source side of the minimum cut). Throws InvalidVertex
/// for edges outside the parts.
MatchingResult perfect_matching(const BipartiteGraph& g);

/// N(S), sorted.
std::vector<int> neighborhood(const BipartiteGraph& g, const std::vector<int>& s);

/// `bip <n>` then `e <v> <w>` lines, 1-based.
BipartiteGraph read_bipartite(std::istream& in);
/// `match <v> <w>` lines, or `violation <v>...` and `neighbors <w>...`, 1-based.
void write_matching(std::ostream& out, const MatchingResult& r, const BipartiteGraph& g);

/// Finite poset, transitively closed on construction; covers are derived.
class Poset {
 public:
  /// `relations` holds pairs lo < hi (covers or any comparable pairs).
  /// Throws Malformed on a cycle or a bad index. Without explicit bottom and
  /// top, the least and greatest elements are used when they exist.
  static Poset build(std::vector<std::string> names, const std::vector<std::pair<int, int>>& relations,
                     std::optional<int> bottom = std::nullopt, std::optional<int> top = std::nullopt);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
  bool less(int a, int b) const { return less_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  bool covers(int lo, int hi) const;
  const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }
  std::optional<int> bottom() const { return bottom_; }
  std::optional<int> top() const { return top_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> less_;
  std::vector<std::pair<int, int>> covers_;
  std::optional<int> bottom_;
  std::optional<int> top_;
};

/// Bottom-to-top chain whose consecutive elements are covers.
bool is_maximal_chain(const Poset& p, const std::vector<int>& chain);

/// Maximum set of pairwise cover-disjoint maximal chains, from an integer
/// maximum flow on the cover graph with unit capacities and its path
/// decomposition. Throws NotBounded without a bottom and a distinct top.
std::vector<std::vector<int>> max_disjoint_chains(const Poset& p);

/// `el <name>`, `cover <lo> <hi>`, `bottom <name>`, `top <name>`.
Poset read_poset(std::istream& in);
/// One `chain <name>...` line per chain.
void write_chains(std::ostream& out, const Poset& p, const std::vector<std::vector<int>>& chains);

/// Pixels are numbered y * width + x. Penalties are indexed by pair:
/// horizontal[y * (width - 1) + x] joins (x, y) and (x + 1, y);
/// vertical[y * width + x] joins (x, y) and (x, y + 1).
struct PixelImage {
  int width = 0;
  int height = 0;
  std::vector<Rational> a;  // foreground probability
  std::vector<Rational> b;  // background probability
  std::vector<Rational> horizontal;
  std::vector<Rational> vertical;

  int pixel_count() const { return width * height; }
  /// Throws Malformed on wrong sizes, probabilities outside [0, 1], or
  /// negative penalties.
  void check() const;
  /// Neighbor pairs (v, w, p) with v < w.
  std::vector<std::tuple<int, int, Rational>> neighbor_pairs() const;
};

struct Segmentation {
  std::vector<bool> foreground;  // per pixel; the set A
  Rational score;                // s(A, B)
  Rational cost;                 // s'(A, B)
  Rational total;                // Q = Σ a_v + b_v
  Rational cut_value;            // capacity of the minimum cut found
};

Rational segmentation_score(const PixelImage& img, const std::vector<bool>& foreground);
Rational segmentation_cost(const PixelImage& img, const std::vector<bool>& foreground);

/// Source arcs a_v, sink arcs b_v, and both directions of every neighbor
/// pair at p, made simple with two middle vertices per pair. The foreground
/// is the residual-reachable source side.
Segmentation segment_image(const PixelImage& img);

struct GrayImage {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<int> pixels;  // row-major
};

/// PGM P2 (ASCII). Throws ParseError.
GrayImage read_pgm(std::istream& in);
/// Heuristic probabilities: a = g / maxval, b = 1 - a, every penalty `lambda`.
PixelImage image_from_gray(const GrayImage& g, const Rational& lambda);
/// PBM P1 mask, 1 = foreground.
void write_pbm(std::ostream& out, int width, int height, const std::vector<bool>& foreground);

}  // namespace flowkit
