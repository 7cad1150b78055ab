#pragma once

#include <optional>

#include "trop/rational.hpp"

namespace trop {

Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rat& c);
bool is_zero(const RatVec& a);

RatVec to_rat(const IntVec& v);
RatMat to_rat(const IntMat& m);

/// Reduced row echelon form. Rows of `mat` are replaced; `pivot_cols[r]` is
/// the pivot column of row r for r < rank.
struct Rref {
  RatMat mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};
Rref rref(RatMat m);

int rank(const RatMat& m);

/// One solution x of A x = b, or nullopt if inconsistent.
std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b);

/// Basis rows of { x : A x = 0 } in R^ncols.
RatMat nullspace(const RatMat& a, int ncols);

/// Clears denominators and divides by the content; preserves direction.
/// Zero maps to zero.
IntVec primitive_integer(const RatVec& v);
IntVec primitive_integer(const IntVec& v);
Int content(const IntVec& v);

}  // namespace trop
