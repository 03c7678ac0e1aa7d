#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "flowkit/error.hpp"
#include "flowkit/simplicial.hpp"

namespace flowkit {

namespace {

/// Vertex sets of the facets as bit rows over the complex's vertices.
class FacetBits {
 public:
  explicit FacetBits(const OrientedComplex& complex) {
    const auto verts = complex.vertices();
    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
    words_ = (verts.size() + 63) / 64;
    for (const auto& f : complex.facets()) {
      std::vector<std::uint64_t> row(words_, 0);
      for (int v : f) {
        const std::size_t i = index[v];
        row[i / 64] |= std::uint64_t{1} << (i % 64);
      }
      rows_.push_back(std::move(row));
    }
  }

  std::vector<std::uint64_t> empty() const { return std::vector<std::uint64_t>(words_, 0); }
  const std::vector<std::uint64_t>& operator[](std::size_t i) const { return rows_[i]; }

  bool intersects(std::size_t a, std::size_t b) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (rows_[a][w] & rows_[b][w]) return true;
    return false;
  }

  /// Adds (a ∩ b) into acc.
  void add_intersection(std::vector<std::uint64_t>& acc, std::size_t a, std::size_t b) const {
    for (std::size_t w = 0; w < words_; ++w) acc[w] |= rows_[a][w] & rows_[b][w];
  }

  bool subset_of(const std::vector<std::uint64_t>& set, std::size_t facet) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (set[w] & ~rows_[facet][w]) return false;
    return true;
  }

 private:
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
};

bool leaf_in(const FacetBits& bits, const std::vector<std::size_t>& facets, std::size_t f, std::size_t f_prime) {
  if (f_prime == f && facets.size() > 1) return false;
  auto shared = bits.empty();
  for (std::size_t h : facets)
    if (h != f) bits.add_intersection(shared, f, h);
  return bits.subset_of(shared, f_prime);
}

bool has_leaf(const FacetBits& bits, const std::vector<std::size_t>& facets) {
  if (facets.size() == 1) return true;
  for (std::size_t f : facets) {
    auto shared = bits.empty();
    for (std::size_t h : facets)
      if (h != f) bits.add_intersection(shared, f, h);
    for (std::size_t g : facets)
      if (g != f && bits.subset_of(shared, g)) return true;
  }
  return false;
}

bool connected(const FacetBits& bits, const std::vector<std::size_t>& facets) {
  if (facets.empty()) return false;
  std::vector<bool> seen(facets.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < facets.size(); ++b) {
      if (seen[b] || !bits.intersects(facets[a], facets[b])) continue;
      seen[b] = true;
      ++count;
      stack.push_back(b);
    }
  }
  return count == facets.size();
}

bool tree_check(const FacetBits& bits, const std::vector<std::size_t>& facets) {
  if (!connected(bits, facets)) return false;
  const std::size_t k = facets.size();
  std::vector<std::size_t> subset;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) subset.push_back(facets[i]);
    if (!has_leaf(bits, subset)) return false;
  }
  return true;
}

void check_indices(const OrientedComplex& complex, const std::vector<std::size_t>& facets) {
  for (std::size_t f : facets)
    if (f >= complex.facet_count()) throw FlowError(ErrorCode::kMalformed, "facet index out of range");
}

std::vector<std::size_t> all_facets(const OrientedComplex& complex) {
  std::vector<std::size_t> v(complex.facet_count());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

bool is_leaf(const OrientedComplex& complex, const std::vector<std::size_t>& facets, std::size_t f,
             std::size_t f_prime) {
  check_indices(complex, facets);
  check_indices(complex, {f, f_prime});
  return leaf_in(FacetBits(complex), facets, f, f_prime);
}

bool is_leaf(const OrientedComplex& complex, std::size_t f, std::size_t f_prime) {
  return is_leaf(complex, all_facets(complex), f, f_prime);
}

bool is_simplicial_tree(const OrientedComplex& complex, const std::vector<std::size_t>& facets,
                        std::size_t max_facets) {
  check_indices(complex, facets);
  if (facets.size() > max_facets || facets.size() > 62)
    throw FlowError(ErrorCode::kBudgetExceeded, "too many facets for the exhaustive subset check");
  return tree_check(FacetBits(complex), facets);
}

bool is_simplicial_tree(const OrientedComplex& complex, std::size_t max_facets) {
  return is_simplicial_tree(complex, all_facets(complex), max_facets);
}

std::optional<std::vector<std::size_t>> tu_certificate_via_tree(const OrientedComplex& complex,
                                                                std::size_t max_facets) {
  if (complex.dimension() != 2) throw FlowError(ErrorCode::kMalformed, "tree certificate needs dimension 2");
  const std::size_t k = complex.facet_count();
  if (k > max_facets || k > 62) throw FlowError(ErrorCode::kBudgetExceeded, "too many facets for the certificate search");
  const FacetBits bits(complex);
  for (std::size_t size = 0; size < k; ++size) {
    std::vector<bool> pick(k, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<std::size_t> removed, kept;
      for (std::size_t i = 0; i < k; ++i) (pick[i] ? removed : kept).push_back(i);
      bool disjoint = true;
      for (std::size_t a = 0; a < removed.size() && disjoint; ++a)
        for (std::size_t b = a + 1; b < removed.size() && disjoint; ++b)
          disjoint = !bits.intersects(removed[a], removed[b]);
      if (disjoint && tree_check(bits, kept)) return removed;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

}  // namespace flowkit
