#pragma once

#include <string>

#include "trop/linalg.hpp"
#include "trop/rational.hpp"

namespace trop {

/// One linear condition <normal, x> (= or >=) rhs.
struct Constraint {
  RatVec normal;
  Rat rhs;
};

/// H-representation polyhedron: equalities and inequalities over R^ambient.
/// Inequalities mean <normal, x> >= rhs. Immutable by convention; all
/// operations below return fresh objects.
struct Polyhedron {
  int ambient = 0;
  std::vector<Constraint> eqs;
  std::vector<Constraint> ineqs;
};

class DimensionMismatchError : public std::invalid_argument {
 public:
  explicit DimensionMismatchError(const std::string& what)
      : std::invalid_argument(what) {}
};

Polyhedron whole_space(int ambient);
Polyhedron make_polyhedron(int ambient, std::vector<Constraint> eqs,
                           std::vector<Constraint> ineqs);

/// Constraint union of P and Q; emptiness is not checked here.
Polyhedron intersect(const Polyhedron& p, const Polyhedron& q);

/// Feasible set { x + v : x in P }.
Polyhedron translate(const Polyhedron& p, const RatVec& v);

/// Closed membership by substitution.
bool contains(const Polyhedron& p, const RatVec& x);

/// Normalizes every constraint to a primitive integer normal (sign kept for
/// inequalities), sorts and deduplicates. Same constraint set => same result.
Polyhedron canonicalize(const Polyhedron& p);

/// Deterministic textual key of canonicalize(p). Equal keys imply equal
/// feasible sets; unequal keys do not imply distinct sets.
std::string canonical_key(const Polyhedron& p);

}  // namespace trop
