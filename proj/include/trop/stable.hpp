#pragma once

#include "trop/complexes.hpp"
#include "trop/volume.hpp"

namespace trop {

class GenericityError : public std::runtime_error {
 public:
  explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

/// Displacement vector drawn deterministically from a seed: every coordinate
/// is k/D for a nonzero pseudo-random k and the fixed denominator D = 2^20.
/// Genericity is verified, never assumed; callers redraw on failure.
struct PerturbationVector {
  RatVec v;
  long seed = 0;
};
PerturbationVector draw_perturbation(int n, long seed);

/// True iff sigma1 n (sigma2 + eps*v) is nonempty for all sufficiently small
/// eps > 0. Decided by two exact LPs over the lifted polyhedron
/// {(x, eps) : x in sigma1, x - eps*v in sigma2, eps >= 0}: the feasible
/// eps-interval must have infimum 0 and supremum > 0.
bool epsilon_feasible(const Polyhedron& sigma1, const Polyhedron& sigma2,
                      const RatVec& v);

/// v is generic for the pair of complexes iff no cell pair with
/// dim(sigma1 + sigma2) < n survives the displacement test.
bool verify_genericity(const WeightedComplex& s1, const WeightedComplex& s2,
                       const RatVec& v);

struct Contributor {
  int i = -1, j = -1;  // cell indices into the two input complexes
  Int local_multiplicity;
};

struct StableCell {
  Polyhedron cell;
  Int multiplicity;
  std::vector<Contributor> contributors;
  RatVec interior;
  int dim = -1;
  RatMat dir_basis;
  IntMat dir_lattice;
};

struct StableIntersection {
  int ambient = 0;
  int codim = 0;
  std::vector<StableCell> cells;

  bool empty() const { return cells.empty(); }
  int pure_dim() const { return ambient - codim; }
  Int total_multiplicity() const;
  WeightedComplex as_complex() const;
};

/// Stable intersection via verified generic displacement: cells are the
/// intersections sigma1 n sigma2 over pairs with dim(sigma1 + sigma2) = n
/// that survive the eps-displacement, merged by set equality and kept only
/// when inclusion-maximal at the target codimension. Multiplicities sum
/// m(sigma1) * m(sigma2) * [Z^n : L_sigma1 + L_sigma2] over the contributor
/// pairs whose intersection contains the cell's relative interior point.
/// Throws GenericityError when the supplied displacement fails verification.
StableIntersection stable_intersection(const WeightedComplex& s1,
                                       const WeightedComplex& s2,
                                       const PerturbationVector& v);

/// Left fold of stable_intersection with bounded redraw-on-genericity-failure
/// (16 attempts per step, derived deterministically from the supplied seeds).
StableIntersection stable_intersection_many(
    const std::vector<WeightedComplex>& complexes, const std::vector<long>& seeds);

/// Normalized lattice mixed volume of Conv(A_1),...,Conv(A_n) by
/// inclusion-exclusion over exact Euclidean volumes of Minkowski sums:
/// MV(P_1..P_n) = sum over nonempty S of (-1)^(n-|S|) vol(sum_{i in S} P_i).
/// Normalized so that n unit simplices give 1. Supports n <= 3.
Int mixed_volume(const std::vector<Support>& supports, int n);

/// Span/mixed-volume conditions for supports of generic complete
/// intersections: for every nonempty J either dim Span U_{j in J} A_j > |J|,
/// or the span dimension equals |J| and the mixed volume of the Conv(A_j) in
/// the saturated lattice of the span is 1. Supports are translated so that
/// 0 lies in each A_i first. Returns the first violating J (0-based,
/// ordered by size then lexicographically) when unsatisfied.
struct YuResult {
  bool satisfied = true;
  std::optional<std::vector<int>> witness;
};
YuResult yu_conditions(const std::vector<Support>& supports, int n);

}  // namespace trop
