#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flowkit/lp.hpp"
#include "flowkit/matrix.hpp"
#include "flowkit/network.hpp"
#include "flowkit/rational.hpp"

namespace flowkit {

/// An oriented simplex: the vertex order as written fixes the orientation.
using Simplex = std::vector<int>;

/// +1 if a and b are the same oriented simplex, -1 if they are the same set
/// with opposite orientation, 0 if the vertex sets differ.
int orientation_sign(const Simplex& a, const Simplex& b);

/// Sorted vertex set; the default reference orientation of a face.
Simplex canonical(Simplex s);

/// Coefficient of the oriented face `face` in the boundary of `simplex`:
/// (-1)^i for the face obtained by deleting vertex i, adjusted by the
/// orientation of `face`. Zero when `face` is not a codimension-1 face.
int boundary_coefficient(const Simplex& simplex, const Simplex& face);

/// Rows are the oriented (k-1)-simplices, columns the oriented k-simplices.
IntMatrix boundary_matrix(const std::vector<Simplex>& rows, const std::vector<Simplex>& cols);

/// Pure oriented complex given by its facets.
class OrientedComplex {
 public:
  /// Throws Malformed unless d >= 1, every facet has d+1 distinct
  /// non-negative vertices, and no two facets are equal as sets.
  static OrientedComplex build(int dimension, std::vector<Simplex> facets);

  int dimension() const { return dimension_; }
  std::size_t facet_count() const { return facets_.size(); }
  const std::vector<Simplex>& facets() const { return facets_; }
  const Simplex& facet(std::size_t i) const { return facets_[i]; }
  std::vector<int> vertices() const;

  /// All k-faces, sorted vertex sets in lexicographic order.
  std::vector<Simplex> faces(int k) const;
  /// The (d-1)-faces in their default order.
  std::vector<Simplex> ridges() const { return faces(dimension_ - 1); }

 private:
  int dimension_ = 0;
  std::vector<Simplex> facets_;
};

struct SourceCheck {
  bool ok = true;
  std::vector<std::size_t> violators;  // facet indices
};

/// Every facet meeting facet `t` in a (d-1)-face must carry the opposite
/// sign on that face.
SourceCheck check_source_condition(const OrientedComplex& complex, std::size_t t);

/// A d-dimensional network: complex, source facet T with c(T) = inf, and
/// the row enumeration (reference orientations) of the (d-1)-faces.
struct HNetwork {
  OrientedComplex complex;
  std::size_t source = 0;
  std::vector<Capacity> capacity;  // per facet; capacity[source] is unbounded
  std::vector<Simplex> faces;

  std::size_t facet_count() const { return complex.facet_count(); }
  std::size_t face_count() const { return faces.size(); }
  /// Boundary matrix over `faces`, facets in complex order. Without the T
  /// column when `include_source` is false.
  IntMatrix boundary(bool include_source = true) const;
};

/// Throws SourceConditionViolated (witness = facet indices), NegativeCapacity,
/// or Malformed (bad index, `faces` not an enumeration of the ridges). The
/// capacity given for T is ignored. Empty `faces` selects the default order.
HNetwork build_hnetwork(OrientedComplex complex, std::size_t source, std::vector<Capacity> capacity,
                        std::vector<Simplex> faces = {});

struct CycleCheck {
  bool ok = true;
  std::vector<Rational> residual;  // per face, boundary * f
};

CycleCheck is_weighted_cycle(const HNetwork& net, const std::vector<Rational>& f);

/// Weighted cycle with 0 <= f <= c everywhere.
bool is_hflow(const HNetwork& net, const std::vector<Rational>& f);

struct HFlowResult {
  LPStatus status = LPStatus::kOptimal;
  std::vector<Rational> flow;  // per facet
  Rational value;              // f(T)
};

/// max x_T over [∂; -∂; I] x <= [0; 0; c], x >= 0, with no capacity row for
/// T or for unbounded facets.
LinearProgram build_hmaxflow_lp(const HNetwork& net);
HFlowResult hmaxflow_lp(const HNetwork& net);

/// Oriented facet with positive residual capacity; `forward` means the
/// facet as oriented in the complex, otherwise its reversal.
struct ResidualFacet {
  std::size_t facet = 0;
  bool forward = true;
  Capacity residual;
};

std::vector<ResidualFacet> residual_complex(const HNetwork& net, const std::vector<Rational>& f);

struct Augmentation {
  /// Non-negative integer coefficient per residual facet: forward[i] on facet
  /// i, backward[i] on its reversal.
  std::vector<Rational> forward;
  std::vector<Rational> backward;
  Rational step;
  bool unbounded = false;  // no finite residual bounds the step
  Rational value_after;
};

struct AugmentResult {
  LPStatus status = LPStatus::kOptimal;  // kUnbounded if a cycle has infinite room
  std::vector<Rational> flow;
  Rational value;
  std::vector<Augmentation> trace;
  bool capped = false;  // stopped by the iteration cap, not at a fixpoint
};

/// Integer cycle through T supported on the residual complex, with the least
/// total coefficient at a vertex of the search polytope; none at a fixpoint.
/// The reversal of T is never used.
std::optional<Augmentation> find_augmenting_cycle(const HNetwork& net, const std::vector<Rational>& f);

/// Repeated augmentation from the zero flow until no augmenting cycle is left.
AugmentResult hmaxflow_augment(const HNetwork& net, std::size_t max_iterations = 10'000);

struct HCutResult {
  std::vector<Rational> lambda;  // per face: 0 on S, 1 on S'
  std::vector<Rational> eta;     // per facet, including T
  /// Σ_{σ≠T} η_σ c(σ), plus η_T c(T) which is infinite whenever η_T > 0.
  Capacity capacity;
  Rational weighted_sum;  // Σ_{σ≠T} η_σ c(σ) alone
  bool feasible = false;  // (λ, η) satisfies every dual row by substitution
};

/// `sink_side[i]` places face i in S'. Throws Malformed on a size mismatch.
HCutResult hcut_capacity(const HNetwork& net, const std::vector<bool>& sink_side);

/// 1-complex of a network: arcs as facets in arc order, T = (t, s) appended
/// last. An arc s->t is routed through a fresh vertex so that its facet does
/// not coincide with T as a set. Vertex ids are kept.
HNetwork graph_to_hnetwork(const Network& net);

/// Facets are given as indices into the complex. For every H in `facets`
/// other than F, F ∩ H ⊆ F'. F' must differ from F unless F is alone.
bool is_leaf(const OrientedComplex& complex, const std::vector<std::size_t>& facets, std::size_t f,
             std::size_t f_prime);
bool is_leaf(const OrientedComplex& complex, std::size_t f, std::size_t f_prime);

/// Connected (facets linked through shared vertices) and every nonempty
/// subset of the facets has a leaf. Throws BudgetExceeded for more than
/// `max_facets` facets.
bool is_simplicial_tree(const OrientedComplex& complex, const std::vector<std::size_t>& facets,
                        std::size_t max_facets = 16);
bool is_simplicial_tree(const OrientedComplex& complex, std::size_t max_facets = 16);

/// Smallest set of pairwise vertex-disjoint facets whose removal leaves a
/// simplicial tree, or none. Dimension 2 only (Malformed otherwise); throws
/// BudgetExceeded for more than `max_facets` facets.
std::optional<std::vector<std::size_t>> tu_certificate_via_tree(const OrientedComplex& complex,
                                                                std::size_t max_facets = 12);

/// Random dimension-2 network with T = (0 1 2), at most `max_facets` facets,
/// neighbors of T oriented to meet the source condition, integer capacities
/// in [0, 3].
HNetwork random_hnetwork(std::uint64_t seed, std::size_t max_facets = 8);

struct ProbeRecord {
  std::size_t trial = 0;
  Rational lp_value;
  Rational fixpoint_value;
  std::size_t augmentations = 0;
  bool capped = false;
  std::string instance;  // hnet serialization
};

struct ProbeReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<ProbeRecord> records;
  std::vector<std::size_t> discrepancies;  // indices into records, fixpoint < LP
};

/// Per-trial seed from seed_seq{seed, trial}. Records facts only.
ProbeReport conjecture_probe(std::uint64_t seed, std::size_t trials, std::size_t max_facets = 8);
ProbeRecord probe_instance(const HNetwork& net, std::size_t trial = 0);
void write_probe_report(std::ostream& out, const ProbeReport& report);

/// `hnet dim <d>`, `t <v0> ... <vd>`, `f <v0> ... <vd> <cap>`; facets are
/// numbered in file order with T at its own position. `cap` may be `inf`.
HNetwork read_hnet(std::istream& in);
void write_hnet(std::ostream& out, const HNetwork& net);
std::string to_hnet_string(const HNetwork& net);

/// `hf <facet, 1-based> <value>` per facet, then `s <f(T)>`.
void write_hflow(std::ostream& out, const HNetwork& net, const std::vector<Rational>& f);

}  // namespace flowkit
