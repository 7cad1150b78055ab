#pragma once

#include "trop/lattice.hpp"

namespace trop {

/// Finite set of exponent vectors in Z^n. Points are kept distinct and in
/// lexicographic order.
struct Support {
  std::vector<IntVec> points;
};

/// Min-plus polynomial: w |-> min over alpha of (coeff[alpha] + <alpha, w>).
/// The min convention is fixed throughout the library; there is no max mode.
struct TropicalPolynomial {
  int n = 0;
  Support support;
  RatVec coeffs;  // parallel to support.points
};

TropicalPolynomial make_polynomial(int n, std::vector<IntVec> points,
                                   RatVec coeffs);

Rat dot_iv(const IntVec& a, const RatVec& w);

struct EvalResult {
  Rat value;
  std::vector<int> argmin;  // indices into support.points, ascending
};
EvalResult eval_trop(const TropicalPolynomial& f, const RatVec& w);

/// Cells of the regular subdivision of Conv(support) induced by lifting each
/// exponent by its coefficient: the inclusion-maximal argmin sets. Exhaustive
/// candidate enumeration over subsets of size <= n+1; fine at desk scale
/// (|support| up to ~30) but quadratic-and-worse beyond that.
struct DualSubdivision {
  std::vector<std::vector<int>> cells;  // index sets, ascending; sorted list
};
DualSubdivision regular_subdivision(const TropicalPolynomial& f);

/// Maximal cell of a tropical hypersurface: the closure of the locus where
/// the minimum is attained exactly on `marked` (a collinear set of support
/// points). Weight is the lattice length of the dual edge.
struct HyperCell {
  Polyhedron cell;
  Int weight;
  IntVec dual_from, dual_to;  // endpoints of the dual edge
  std::vector<int> marked;
  RatVec interior;   // relative interior point
  RatMat dir_basis;  // rational basis of the direction space
  IntMat dir_lattice;  // saturated integer basis of direction space n Z^n
};

struct TropicalHypersurface {
  int n = 0;
  TropicalPolynomial source;
  std::vector<HyperCell> cells;  // canonical order
};

/// Dual construction: one (n-1)-dimensional cell per edge of the regular
/// subdivision. Cells whose duals are over-determined (dimension < n-1) are
/// not stored. A single-monomial polynomial has an empty hypersurface.
TropicalHypersurface hypersurface(const TropicalPolynomial& f);

/// True iff w lies on the support of the hypersurface of f
/// (min attained at least twice).
bool on_hypersurface(const TropicalPolynomial& f, const RatVec& w);

}  // namespace trop
