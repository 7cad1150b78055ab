#pragma once

#include <functional>

#include "trop/stable.hpp"

namespace trop {

struct Instance {
  int n = 0;
  std::vector<TropicalPolynomial> polynomials;
  long seed = 0;
};

/// Deterministic random instance: supports are random subsets of the lattice
/// points of degree*simplex, always containing the simplex vertices
/// 0, d*e_1, ..., d*e_n (so Newton polytopes are full simplices); coefficients
/// are uniform rationals with numerator and denominator bounded by
/// coeff_bound. Requires 1 <= k <= n <= 3 and degree <= 4.
Instance random_instance(int n, int k, int degree, int coeff_bound, long seed);

/// Sparse variant: simplex vertices are not forced, so degenerate Newton
/// polytopes (segments, points) occur. At least one point is kept.
Instance random_sparse_instance(int n, int k, int degree, int coeff_bound,
                                long seed);

enum class Verdict { Pass, Fail, Vacuous };

struct ComponentInfo {
  std::vector<int> cover_cells;        // indices into cover
  std::optional<int> witness_cell;     // index into stable cells
  std::optional<RatVec> witness_point; // a point in both the component and the witness
};

struct VerificationReport {
  Verdict verdict = Verdict::Vacuous;
  int n = 0, k = 0;
  std::vector<long> seeds;
  std::vector<TropicalHypersurface> surfaces;
  std::vector<Polyhedron> cover;
  ComponentPartition components;
  StableIntersection stable;
  std::vector<ComponentInfo> component_info;
};

/// Checks that every connected component of the intersection of the
/// hypersurface supports contains a point of the stable intersection.
/// Vacuous when the stable intersection is empty.
VerificationReport check_seed_property(const Instance& instance,
                                       const std::vector<long>& seeds);

/// Emptiness of L /\ Sigma is invariant under translating L: builds the two
/// parallel affine subspaces {x : A x = A v} and {x : A x = A v2} as
/// weight-1 single-cell complexes and compares the emptiness flags of their
/// stable intersections with the hypersurface. Returns true when they agree
/// (a false return would witness a soundness bug).
bool check_translate_lemma(const TropicalHypersurface& surface,
                           const RatMat& a_rows, const RatVec& v,
                           const RatVec& v2, const std::vector<long>& seeds);

enum class TriState { True, False, Inconclusive };

/// For >= 2 connected components of the stable intersection of the instance,
/// checks that their stable intersections with one extra hypersurface agree
/// on emptiness. Inconclusive when there are fewer than 2 components.
TriState check_component_conspiracy(const Instance& instance,
                                    const TropicalPolynomial& extra,
                                    const std::vector<long>& seeds);

struct SubsetWitness {
  std::vector<int> subset;  // the n-subset J (0-based)
  RatVec point;
};

struct SubsetSeedingReport {
  bool vacuous = false;
  int component_count = 0;
  // per n-subset J: the stable points, each with the component it lies on
  // (-1 when the point misses the full intersection)
  struct PointRecord {
    std::vector<int> subset;
    RatVec point;
    Int multiplicity;
    int component = -1;
  };
  std::vector<PointRecord> points;
  std::vector<std::vector<SubsetWitness>> per_component;
  bool every_component_witnessed = false;
};

/// Evidence gathering for the subset-seeding question (k > n): classifies the
/// stable points of every n-subset of the hypersurfaces against the
/// components of the full intersection. Reporting only; never a theorem.
SubsetSeedingReport experiment_subset_seeding(const Instance& instance,
                                              const std::vector<long>& seeds);

/// Full per-instance audit used by the corpus runs: seed property plus the
/// structural invariants (balancing, codimension additivity, perturbation
/// independence, containment, Bernstein count when k == n).
struct InstanceAudit {
  Verdict verdict = Verdict::Vacuous;
  bool surfaces_balanced = true;
  bool stable_balanced = true;
  bool codim_additive = true;
  bool perturbation_independent = true;
  bool containment_ok = true;
  bool witness_bound_ok = true;
  int component_count = 0;
  int stable_count = 0;
  Int total_multiplicity;
  std::optional<Int> bernstein;  // mixed volume of the Newton polytopes, k == n
};
InstanceAudit audit_instance(const Instance& instance,
                             const std::vector<long>& seeds_a,
                             const std::vector<long>& seeds_b);

/// Runs fn(0..count-1) on a small thread pool; results must be written to
/// per-index slots by the caller, which keeps aggregation deterministic.
void parallel_for_indices(int count, const std::function<void(int)>& fn);

const std::vector<long>& default_seeds();
std::vector<long> shifted_seeds(long offset);

}  // namespace trop
