#pragma once

#include "trop/polyhedron.hpp"

namespace trop {

class EmptyPolyhedronError : public std::runtime_error {
 public:
  explicit EmptyPolyhedronError(const std::string& what)
      : std::runtime_error(what) {}
};

enum class LpStatus { Infeasible, Optimal, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;     // objective at `point` when Optimal
  RatVec point;  // a feasible point when status != Infeasible
};

/// Exact simplex with Bland's rule. Equalities are eliminated by Gaussian
/// substitution first, so the tableau only carries the reduced inequality
/// system. All pivoting is in exact rationals.
LpResult solve_lp(const Polyhedron& p, const RatVec& objective, bool maximize);

bool lp_feasible(const Polyhedron& p);

/// max t subject to x in P with every inequality slack >= t, 0 <= t <= 1.
/// empty: P is infeasible. strict: t > 0 was reached, i.e. `point` satisfies
/// every inequality strictly (`point` is feasible either way).
struct InteriorProbe {
  bool empty = true;
  bool strict = false;
  RatVec point;
};
InteriorProbe strict_interior(const Polyhedron& p);

/// Affine span of P: explicit equalities plus inequalities that hold with
/// equality on all of P (detected by LP — an inequality is implicit iff its
/// reverse is valid). `interior` is a relative interior point.
struct AffineSpan {
  bool empty = true;
  RatMat normals;
  RatVec rhs;
  RatVec interior;
};
AffineSpan affine_span(const Polyhedron& p);

/// Dimension of the affine span of P; -1 when P is empty.
int dim(const Polyhedron& p);

/// An exact rational point in the relative interior of P.
/// Throws EmptyPolyhedronError when P is empty.
RatVec relative_interior_point(const Polyhedron& p);

/// Basis rows of the direction space of aff(P) (solution space of the
/// equality system of the affine span). Throws when P is empty.
RatMat direction_basis(const Polyhedron& p);

/// dim of the affine span of the Minkowski sum P + Q.
int minkowski_sum_dim(const Polyhedron& p, const Polyhedron& q);

/// P subseteq Q, decided by checking validity of every constraint of Q
/// over P (LP per constraint). An empty P is a subset of everything.
bool subset_of(const Polyhedron& p, const Polyhedron& q);

/// Semantic canonical H-representation: the affine-span equality system in
/// reduced row echelon form (primitive integer rows) plus the irredundant
/// facet inequalities reduced modulo the span. Two polyhedra with the same
/// feasible set produce identical output, so canonical_key(minimal_form(P))
/// is a true set identity. Throws EmptyPolyhedronError on empty input.
Polyhedron minimal_form(const Polyhedron& p);

}  // namespace trop
