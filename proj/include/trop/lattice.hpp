#pragma once

#include <optional>

#include "trop/lp.hpp"

namespace trop {

/// Integer lattice given by the integer span of its generators.
struct LatticeBasis {
  IntMat generators;
};

/// U * A * V = S with U, V unimodular and S diagonal with the divisibility
/// chain S[0][0] | S[1][1] | ...
struct Snf {
  IntMat s;
  IntMat u;
  IntMat v;
  int rank = 0;
};
Snf smith_normal_form(IntMat a);

/// Basis rows of { x in Z^ncols : A x = 0 }. The basis spans the full
/// (saturated) kernel lattice.
IntMat integer_kernel(const IntMat& a, int ncols);

/// Index of span_Z(L1 u L2) inside Z^ambient; nullopt when the span has
/// rank < ambient ("infinite").
std::optional<Int> lattice_index(const LatticeBasis& l1, const LatticeBasis& l2,
                                 int ambient);

/// Saturated integer basis rows of (direction space of aff(P)) n Z^n.
/// Throws EmptyPolyhedronError when P is empty.
IntMat direction_lattice(const Polyhedron& p);

/// Given saturated lattices L_tau c L_sigma with rank(L_sigma) =
/// rank(L_tau) + 1, returns an integer vector generating the quotient
/// L_sigma / L_tau (sign unspecified; the caller orients it).
IntVec quotient_generator(const IntMat& basis_sigma, const IntMat& basis_tau);

}  // namespace trop
