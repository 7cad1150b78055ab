#include <doctest.h>

#include "trop/stable.hpp"
#include "trop/theorem_lab.hpp"

using namespace trop;

namespace {

TropicalPolynomial polyn(int n,
                         std::vector<std::pair<std::vector<long>, std::string>> terms) {
  std::vector<IntVec> points;
  RatVec coeffs;
  for (auto& [exps, coeff] : terms) {
    IntVec p;
    for (long e : exps) p.push_back(Int(e));
    points.push_back(std::move(p));
    coeffs.push_back(parse_rational(coeff));
  }
  return make_polynomial(n, std::move(points), std::move(coeffs));
}

Polyhedron x_axis() {
  return make_polyhedron(2, {Constraint{{Rat(0), Rat(1)}, Rat(0)}}, {});
}
Polyhedron y_axis() {
  return make_polyhedron(2, {Constraint{{Rat(1), Rat(0)}, Rat(0)}}, {});
}
Polyhedron horizontal(long y) {
  return make_polyhedron(2, {Constraint{{Rat(0), Rat(1)}, Rat(y)}}, {});
}

Support support_of(std::vector<std::vector<long>> pts) {
  Support s;
  for (auto& p : pts) {
    IntVec v;
    for (long e : p) v.push_back(Int(e));
    s.points.push_back(std::move(v));
  }
  return s;
}

}  // namespace

TEST_CASE("epsilon_feasible on the contract examples") {
  CHECK(epsilon_feasible(x_axis(), y_axis(), {Rat(1), Rat(1)}));
  CHECK_FALSE(epsilon_feasible(x_axis(), horizontal(1), {Rat(1), Rat(0)}));
  CHECK_FALSE(epsilon_feasible(x_axis(), x_axis(), {Rat(0), Rat(1)}));
  // displacement parallel to the shared line keeps intersecting
  CHECK(epsilon_feasible(x_axis(), x_axis(), {Rat(1), Rat(0)}));
}

TEST_CASE("verify_genericity on the contract examples") {
  WeightedComplex xs = make_complex(2, 1, {{x_axis(), Int(1)}});
  WeightedComplex ys = make_complex(2, 1, {{y_axis(), Int(1)}});
  CHECK(verify_genericity(xs, ys, {Rat(1), Rat(7)}));
  CHECK_FALSE(verify_genericity(xs, xs, {Rat(1), Rat(0)}));
  CHECK(verify_genericity(xs, xs, {Rat(0), Rat(1)}));
}

TEST_CASE("draw_perturbation is deterministic and nonzero") {
  PerturbationVector a = draw_perturbation(3, 42);
  PerturbationVector b = draw_perturbation(3, 42);
  CHECK(a.v == b.v);
  for (const Rat& x : a.v) CHECK(x != 0);
  CHECK(draw_perturbation(3, 43).v != a.v);
}

TEST_CASE("stable intersection of two generic tropical lines: one point, mult 1") {
  // all nine cell pairs enumerated by hand: the only transversal crossing is
  // {x = y <= 0} meeting {x = -1/2, y >= -3/2} at (-1/2, -1/2)
  TropicalHypersurface a =
      hypersurface(polyn(2, {{{0, 0}, "0"}, {{1, 0}, "0"}, {{0, 1}, "0"}}));
  TropicalHypersurface b = hypersurface(
      polyn(2, {{{0, 0}, "1/2"}, {{1, 0}, "1"}, {{0, 1}, "2"}}));
  StableIntersection stable =
      stable_intersection_many({as_complex(a), as_complex(b)}, default_seeds());
  REQUIRE(stable.cells.size() == 1);
  CHECK(stable.cells[0].dim == 0);
  CHECK(stable.cells[0].multiplicity == 1);
  CHECK(stable.cells[0].interior == RatVec{Rat(-1, 2), Rat(-1, 2)});
  CHECK(stable.codim == 2);
}

TEST_CASE("stable intersection of lines sharing a ray: the vertex survives") {
  // min(0,x,y) and min(1,x,y) overlap along {x = y <= 0}; the stable
  // intersection is the single point (0,0) with multiplicity 1 regardless of
  // the displacement side
  TropicalHypersurface a =
      hypersurface(polyn(2, {{{0, 0}, "0"}, {{1, 0}, "0"}, {{0, 1}, "0"}}));
  TropicalHypersurface b =
      hypersurface(polyn(2, {{{0, 0}, "1"}, {{1, 0}, "0"}, {{0, 1}, "0"}}));
  for (long seed : {1L, 2L, 3L, 17L}) {
    StableIntersection stable =
        stable_intersection_many({as_complex(a), as_complex(b)}, {seed});
    REQUIRE(stable.cells.size() == 1);
    CHECK(stable.cells[0].multiplicity == 1);
    CHECK(stable.cells[0].interior == RatVec{Rat(0), Rat(0)});
  }
}

TEST_CASE("stable intersection with an empty complex is empty") {
  TropicalHypersurface line =
      hypersurface(polyn(2, {{{0, 0}, "0"}, {{1, 0}, "0"}, {{0, 1}, "0"}}));
  WeightedComplex empty;
  empty.ambient = 2;
  empty.pure_dim = 1;
  StableIntersection stable = stable_intersection(
      as_complex(line), empty, draw_perturbation(2, 1));
  CHECK(stable.empty());
  CHECK(stable.codim == 2);

  StableIntersection many =
      stable_intersection_many({as_complex(line), empty, as_complex(line)}, {5});
  CHECK(many.empty());
  CHECK(many.codim == 3);
}

TEST_CASE("stable_intersection_many with one complex is the identity") {
  TropicalHypersurface line =
      hypersurface(polyn(2, {{{0, 0}, "0"}, {{1, 0}, "0"}, {{0, 1}, "0"}}));
  StableIntersection stable = stable_intersection_many({as_complex(line)}, {1});
  CHECK(stable.cells.size() == 3);
  CHECK(stable.codim == 1);
  for (const StableCell& c : stable.cells) CHECK(c.multiplicity == 1);
}

TEST_CASE("three generic tropical planes meet in one point of multiplicity 1") {
  Instance inst = random_instance(3, 3, 1, 5, 7);
  std::vector<WeightedComplex> complexes;
  for (const TropicalPolynomial& f : inst.polynomials)
    complexes.push_back(as_complex(hypersurface(f)));
  StableIntersection stable = stable_intersection_many(complexes, default_seeds());
  CHECK(stable.total_multiplicity() == 1);
  CHECK(stable.codim == 3);
  for (const StableCell& c : stable.cells) CHECK(c.dim == 0);
}

TEST_CASE("associativity of the stable fold on a spatial instance") {
  Instance inst = random_instance(3, 3, 2, 4, 19);
  std::vector<WeightedComplex> complexes;
  for (const TropicalPolynomial& f : inst.polynomials)
    complexes.push_back(as_complex(hypersurface(f)));

  StableIntersection left =
      stable_intersection_many({complexes[0], complexes[1], complexes[2]},
                               default_seeds());
  StableIntersection right_inner =
      stable_intersection_many({complexes[1], complexes[2]}, default_seeds());
  StableIntersection right = stable_intersection_many(
      {complexes[0], right_inner.as_complex()}, default_seeds());

  REQUIRE(left.cells.size() == right.cells.size());
  for (std::size_t i = 0; i < left.cells.size(); ++i) {
    CHECK(canonical_key(left.cells[i].cell) == canonical_key(right.cells[i].cell));
    CHECK(left.cells[i].multiplicity == right.cells[i].multiplicity);
  }
}

TEST_CASE("Bernstein cross-check on a handful of planar instances") {
  for (long seed : {101L, 102L, 103L, 104L, 105L}) {
    for (int degree : {1, 2, 3}) {
      Instance inst = random_instance(2, 2, degree, 5, seed);
      std::vector<WeightedComplex> complexes;
      std::vector<Support> supports;
      for (const TropicalPolynomial& f : inst.polynomials) {
        complexes.push_back(as_complex(hypersurface(f)));
        supports.push_back(f.support);
      }
      StableIntersection stable =
          stable_intersection_many(complexes, default_seeds());
      CAPTURE(seed);
      CAPTURE(degree);
      CHECK(stable.total_multiplicity() == mixed_volume(supports, 2));
    }
  }
}

TEST_CASE("containment: stable cells lie on every input surface") {
  Instance inst = random_instance(2, 2, 2, 5, 301);
  std::vector<WeightedComplex> complexes;
  for (const TropicalPolynomial& f : inst.polynomials)
    complexes.push_back(as_complex(hypersurface(f)));
  StableIntersection stable = stable_intersection_many(complexes, default_seeds());
  REQUIRE_FALSE(stable.empty());
  for (const StableCell& c : stable.cells)
    for (const TropicalPolynomial& f : inst.polynomials)
      CHECK(eval_trop(f, c.interior).argmin.size() >= 2);
}

TEST_CASE("nonempty stable intersections are balanced") {
  for (long seed : {501L, 502L}) {
    Instance inst = random_instance(2, 2, 2, 4, seed);
    std::vector<WeightedComplex> complexes;
    for (const TropicalPolynomial& f : inst.polynomials)
      complexes.push_back(as_complex(hypersurface(f)));
    StableIntersection stable =
        stable_intersection_many(complexes, default_seeds());
    if (!stable.empty()) CHECK(is_balanced(stable.as_complex()).balanced);
  }
  // a positive-dimensional stable intersection in R^3
  Instance spatial = random_instance(3, 2, 2, 4, 503);
  std::vector<WeightedComplex> complexes;
  for (const TropicalPolynomial& f : spatial.polynomials)
    complexes.push_back(as_complex(hypersurface(f)));
  StableIntersection stable = stable_intersection_many(complexes, default_seeds());
  if (!stable.empty()) {
    CHECK(stable.codim == 2);
    CHECK(is_balanced(stable.as_complex()).balanced);
  }
}

TEST_CASE("mixed_volume on the contract examples") {
  // n unit simplices give 1
  CHECK(mixed_volume({support_of({{0}, {1}})}, 1) == 1);
  CHECK(mixed_volume({support_of({{0, 0}, {1, 0}, {0, 1}}),
                      support_of({{0, 0}, {1, 0}, {0, 1}})},
                     2) == 1);
  CHECK(mixed_volume({support_of({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                      support_of({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                      support_of({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})},
                     3) == 1);

  // dilated simplices: d * e
  auto dilated = [](long d) {
    return support_of({{0, 0}, {d, 0}, {0, d}});
  };
  CHECK(mixed_volume({dilated(2), dilated(3)}, 2) == 6);
  CHECK(mixed_volume({dilated(4), dilated(1)}, 2) == 4);

  // parallel segments are degenerate
  CHECK(mixed_volume({support_of({{0, 0}, {1, 0}}), support_of({{0, 0}, {1, 0}})},
                     2) == 0);

  // three dilated 3-simplices: 2*2*2
  auto dil3 = [](long d) {
    return support_of({{0, 0, 0}, {d, 0, 0}, {0, d, 0}, {0, 0, d}});
  };
  CHECK(mixed_volume({dil3(2), dil3(2), dil3(2)}, 3) == 8);

  CHECK_THROWS_AS(mixed_volume({dilated(1)}, 2), std::invalid_argument);
}

TEST_CASE("mixed_volume is symmetric and monotone under dilation") {
  Support a = support_of({{0, 0}, {2, 0}, {0, 1}, {1, 1}});
  Support b = support_of({{0, 0}, {1, 0}, {0, 3}});
  CHECK(mixed_volume({a, b}, 2) == mixed_volume({b, a}, 2));
  CHECK(mixed_volume({a, b}, 2) > 0);
}

TEST_CASE("yu_conditions on the contract examples") {
  Support simplex = support_of({{0, 0}, {1, 0}, {0, 1}});
  YuResult ok = yu_conditions({simplex, simplex}, 2);
  CHECK(ok.satisfied);
  CHECK_FALSE(ok.witness.has_value());

  Support seg = support_of({{0, 0}, {1, 0}});
  YuResult collinear = yu_conditions({seg, seg}, 2);
  CHECK_FALSE(collinear.satisfied);
  REQUIRE(collinear.witness.has_value());
  CHECK(*collinear.witness == std::vector<int>{0, 1});

  // {0, 2e1} already fails condition (2) on its own (lattice length 2), so
  // the first violating subset is the singleton {0}
  YuResult mv2 = yu_conditions(
      {support_of({{0, 0}, {2, 0}}), support_of({{0, 0}, {0, 1}})}, 2);
  CHECK_FALSE(mv2.satisfied);
  REQUIRE(mv2.witness.has_value());
  CHECK(*mv2.witness == std::vector<int>{0});

  // a pair-level violation with all singletons fine: MV(conv A1, conv A2) = 2
  YuResult pairwise = yu_conditions(
      {support_of({{0, 0}, {2, 0}, {0, 1}}), support_of({{0, 0}, {0, 1}})}, 2);
  CHECK_FALSE(pairwise.satisfied);
  REQUIRE(pairwise.witness.has_value());
  CHECK(*pairwise.witness == std::vector<int>{0, 1});

  CHECK_THROWS_AS(yu_conditions({seg, seg, seg}, 2), std::invalid_argument);
}

TEST_CASE("yu_conditions normalizes supports that avoid the origin") {
  // {e1, e1+e2} translates to {0, e2}: a transversal pair with {0, e1}
  Support shifted = support_of({{1, 0}, {1, 1}});
  Support seg = support_of({{0, 0}, {1, 0}});
  YuResult r = yu_conditions({shifted, seg}, 2);
  CHECK(r.satisfied);

  // single support on a line: condition (2) via the induced sublattice
  YuResult single = yu_conditions({support_of({{2, 4}, {3, 6}})}, 2);
  CHECK(single.satisfied);  // span dim 1 = |J|, lattice length 1
  YuResult single2 = yu_conditions({support_of({{0, 0}, {2, 4}})}, 2);
  CHECK_FALSE(single2.satisfied);  // lattice length 2 along (1,2)
}
