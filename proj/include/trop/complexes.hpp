#pragma once

#include "trop/tropical.hpp"

namespace trop {

/// Weighted cell with cached geometry (dimension, relative interior point,
/// direction space and its saturated integer lattice).
struct WCell {
  Polyhedron poly;
  Int weight;
  RatVec interior;
  int dim = -1;
  RatMat dir_basis;
  IntMat dir_lattice;
};

/// Pure-dimensional weighted polyhedral complex. Cells are expected to
/// intersect in common faces; support_intersection output is NOT a complex.
struct WeightedComplex {
  int ambient = 0;
  int pure_dim = -1;
  std::vector<WCell> cells;

  bool empty() const { return cells.empty(); }
  int codim() const { return ambient - pure_dim; }
};

/// Builds a cell, computing the caches. Throws EmptyPolyhedronError if the
/// polyhedron is empty and NonPureComplexError if its dimension differs from
/// `expected_dim` (pass -1 to skip the check).
WCell make_wcell(Polyhedron p, Int weight, int expected_dim = -1);

class NonPureComplexError : public std::runtime_error {
 public:
  explicit NonPureComplexError(const std::string& what)
      : std::runtime_error(what) {}
};

WeightedComplex make_complex(int ambient, int pure_dim,
                             std::vector<std::pair<Polyhedron, Int>> cells);

WeightedComplex as_complex(const TropicalHypersurface& surface);

/// Finite cover of the set-theoretic intersection of the supports: one
/// polyhedron per combination of maximal cells that intersects nonemptily,
/// deduplicated by canonical constraint key. Combinations are folded
/// left-to-right with empties pruned early. No facial structure is promised.
std::vector<Polyhedron> support_intersection(
    const std::vector<TropicalHypersurface>& surfaces);

/// Partition of cell indices into connected groups: two closed cells are
/// linked when they intersect (LP test). Result is independent of input
/// order (cells are processed in canonical-key order).
struct ComponentPartition {
  std::vector<std::vector<int>> groups;
};
ComponentPartition connected_components(const std::vector<Polyhedron>& cells);

/// Balancing audit around every codimension-1 face discovered as a pairwise
/// intersection of maximal cells (faces on only one maximal cell are
/// skipped). At each face tau the weighted primitive quotient generators of
/// all incident maximal cells must sum into the direction space of tau.
struct BalanceReport {
  bool balanced = true;
  std::vector<Polyhedron> violations;
};
BalanceReport is_balanced(const WeightedComplex& complex);

/// Image of each cell under x |-> <u, x> where u spans the 1-dimensional
/// orthogonal complement of span(directions). Intervals are closed;
/// std::nullopt marks an unbounded side.
struct Interval {
  std::optional<Rat> lo, hi;
};
std::vector<Interval> project_to_complement(const WeightedComplex& complex,
                                            const LatticeBasis& directions);

enum class ProjectionShape { FinitePoints, WholeLine, Other };
ProjectionShape classify_projection(const std::vector<Interval>& intervals);

}  // namespace trop
