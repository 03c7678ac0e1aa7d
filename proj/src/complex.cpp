#include <algorithm>
#include <map>
#include <set>

#include "flowkit/error.hpp"
#include "flowkit/simplicial.hpp"

namespace flowkit {

int orientation_sign(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return 0;
  std::vector<std::size_t> perm(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto it = std::find(b.begin(), b.end(), a[i]);
    if (it == b.end()) return 0;
    perm[i] = static_cast<std::size_t>(it - b.begin());
  }
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

Simplex canonical(Simplex s) {
  std::sort(s.begin(), s.end());
  return s;
}

int boundary_coefficient(const Simplex& simplex, const Simplex& face) {
  if (face.size() + 1 != simplex.size()) return 0;
  std::size_t missing = simplex.size();
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (std::find(face.begin(), face.end(), simplex[i]) != face.end()) continue;
    if (missing != simplex.size()) return 0;
    missing = i;
  }
  if (missing == simplex.size()) return 0;
  Simplex removed = simplex;
  removed.erase(removed.begin() + static_cast<std::ptrdiff_t>(missing));
  const int s = orientation_sign(removed, face);
  return missing % 2 == 0 ? s : -s;
}

IntMatrix boundary_matrix(const std::vector<Simplex>& rows, const std::vector<Simplex>& cols) {
  IntMatrix m(rows.size(), cols.size(), 0);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows.size(); ++i) m(i, j) = boundary_coefficient(cols[j], rows[i]);
  return m;
}

OrientedComplex OrientedComplex::build(int dimension, std::vector<Simplex> facets) {
  if (dimension < 1) throw FlowError(ErrorCode::kMalformed, "dimension must be at least 1");
  std::set<Simplex> seen;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const Simplex& f = facets[i];
    if (f.size() != static_cast<std::size_t>(dimension) + 1)
      throw FlowError(ErrorCode::kMalformed, "facet " + std::to_string(i + 1) + " has the wrong number of vertices",
                      {static_cast<int>(i)});
    Simplex key = canonical(f);
    if (std::adjacent_find(key.begin(), key.end()) != key.end() || key.front() < 0)
      throw FlowError(ErrorCode::kMalformed, "facet " + std::to_string(i + 1) + " has repeated or negative vertices",
                      {static_cast<int>(i)});
    if (!seen.insert(std::move(key)).second)
      throw FlowError(ErrorCode::kMalformed, "facet " + std::to_string(i + 1) + " repeats an earlier vertex set",
                      {static_cast<int>(i)});
  }
  OrientedComplex c;
  c.dimension_ = dimension;
  c.facets_ = std::move(facets);
  return c;
}

std::vector<int> OrientedComplex::vertices() const {
  std::set<int> v;
  for (const auto& f : facets_) v.insert(f.begin(), f.end());
  return {v.begin(), v.end()};
}

std::vector<Simplex> OrientedComplex::faces(int k) const {
  std::set<Simplex> out;
  if (k < 0 || k > dimension_) return {};
  const std::size_t size = static_cast<std::size_t>(k) + 1;
  for (const auto& f : facets_) {
    const Simplex sorted = canonical(f);
    std::vector<bool> pick(sorted.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      Simplex face;
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (pick[i]) face.push_back(sorted[i]);
      out.insert(std::move(face));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {out.begin(), out.end()};
}

SourceCheck check_source_condition(const OrientedComplex& complex, std::size_t t) {
  if (t >= complex.facet_count()) throw FlowError(ErrorCode::kMalformed, "source facet index out of range");
  SourceCheck result;
  const Simplex& source = complex.facet(t);
  for (std::size_t i = 0; i < complex.facet_count(); ++i) {
    if (i == t) continue;
    const Simplex& sigma = complex.facet(i);
    Simplex shared;
    for (int v : sigma)
      if (std::find(source.begin(), source.end(), v) != source.end()) shared.push_back(v);
    if (shared.size() + 1 != sigma.size()) continue;
    if (boundary_coefficient(sigma, shared) * boundary_coefficient(source, shared) != -1) {
      result.ok = false;
      result.violators.push_back(i);
    }
  }
  return result;
}

IntMatrix HNetwork::boundary(bool include_source) const {
  std::vector<Simplex> cols;
  for (std::size_t j = 0; j < complex.facet_count(); ++j)
    if (include_source || j != source) cols.push_back(complex.facet(j));
  return boundary_matrix(faces, cols);
}

HNetwork build_hnetwork(OrientedComplex complex, std::size_t source, std::vector<Capacity> capacity,
                        std::vector<Simplex> faces) {
  if (source >= complex.facet_count()) throw FlowError(ErrorCode::kMalformed, "source facet index out of range");
  if (capacity.size() != complex.facet_count())
    throw FlowError(ErrorCode::kMalformed, "one capacity per facet is required");
  for (std::size_t i = 0; i < capacity.size(); ++i)
    if (i != source && capacity[i].is_finite() && capacity[i].value() < 0)
      throw FlowError(ErrorCode::kNegativeCapacity, "facet " + std::to_string(i + 1) + " has negative capacity",
                      {static_cast<int>(i)});
  const auto check = check_source_condition(complex, source);
  if (!check.ok) {
    std::vector<int> witness(check.violators.begin(), check.violators.end());
    throw FlowError(ErrorCode::kSourceConditionViolated, "facets share a face with T with the same sign",
                    std::move(witness));
  }
  const auto ridges = complex.ridges();
  if (faces.empty()) {
    faces = ridges;
  } else {
    std::vector<Simplex> keys;
    for (const auto& f : faces) keys.push_back(canonical(f));
    std::sort(keys.begin(), keys.end());
    if (keys != ridges) throw FlowError(ErrorCode::kMalformed, "face order is not an enumeration of the ridges");
  }
  capacity[source] = Capacity::unbounded();
  return HNetwork{std::move(complex), source, std::move(capacity), std::move(faces)};
}

CycleCheck is_weighted_cycle(const HNetwork& net, const std::vector<Rational>& f) {
  if (f.size() != net.facet_count()) throw FlowError(ErrorCode::kMalformed, "one value per facet is required");
  const IntMatrix b = net.boundary();
  CycleCheck result;
  result.residual.assign(net.face_count(), Rational(0));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) result.residual[i] += b(i, j) * f[j];
    if (result.residual[i] != 0) result.ok = false;
  }
  return result;
}

bool is_hflow(const HNetwork& net, const std::vector<Rational>& f) {
  if (!is_weighted_cycle(net, f).ok) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0) return false;
    if (net.capacity[i].is_finite() && f[i] > net.capacity[i].value()) return false;
  }
  return true;
}

HNetwork graph_to_hnetwork(const Network& net) {
  std::vector<Simplex> facets;
  std::vector<Capacity> caps;
  int fresh = net.vertex_count();
  for (int e = 0; e < net.arc_count(); ++e) {
    const Arc& a = net.arc(e);
    if (a.tail == net.source() && a.head == net.sink()) {
      facets.push_back({a.tail, fresh});
      facets.push_back({fresh, a.head});
      caps.push_back(a.capacity);
      caps.push_back(a.capacity);
      ++fresh;
    } else {
      facets.push_back({a.tail, a.head});
      caps.push_back(a.capacity);
    }
  }
  facets.push_back({net.sink(), net.source()});
  caps.push_back(Capacity::unbounded());
  const std::size_t t = facets.size() - 1;
  return build_hnetwork(OrientedComplex::build(1, std::move(facets)), t, std::move(caps));
}

}  // namespace flowkit
