#include "trop/stable.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>

namespace trop {

PerturbationVector draw_perturbation(int n, long seed) {
  static constexpr long kDenominator = 1 << 20;
  std::mt19937_64 eng(static_cast<std::uint64_t>(seed));
  PerturbationVector pv;
  pv.seed = seed;
  pv.v.resize(n);
  for (int i = 0; i < n; ++i) {
    // nonzero numerator in [-(D-1), D-1]
    long k = static_cast<long>(eng() % (2 * (kDenominator - 1)));
    k -= kDenominator - 1;
    if (k >= 0) ++k;
    pv.v[i] = Rat(k, kDenominator);
    pv.v[i].canonicalize();
  }
  return pv;
}

bool epsilon_feasible(const Polyhedron& sigma1, const Polyhedron& sigma2,
                      const RatVec& v) {
  if (sigma1.ambient != sigma2.ambient)
    throw DimensionMismatchError("epsilon_feasible: ambient mismatch");
  const int n = sigma1.ambient;
  Polyhedron lifted;
  lifted.ambient = n + 1;
  auto lift = [&](const Constraint& c, bool shifted) {
    Constraint out;
    out.normal = c.normal;
    out.normal.push_back(shifted ? -dot(c.normal, v) : Rat(0));
    out.rhs = c.rhs;
    return out;
  };
  for (const Constraint& c : sigma1.eqs) lifted.eqs.push_back(lift(c, false));
  for (const Constraint& c : sigma2.eqs) lifted.eqs.push_back(lift(c, true));
  for (const Constraint& c : sigma1.ineqs) lifted.ineqs.push_back(lift(c, false));
  for (const Constraint& c : sigma2.ineqs) lifted.ineqs.push_back(lift(c, true));
  Constraint eps_nonneg;
  eps_nonneg.normal = RatVec(n + 1, Rat(0));
  eps_nonneg.normal.back() = 1;
  eps_nonneg.rhs = 0;
  lifted.ineqs.push_back(std::move(eps_nonneg));

  RatVec obj(n + 1, Rat(0));
  obj.back() = 1;
  LpResult lo = solve_lp(lifted, obj, false);
  if (lo.status == LpStatus::Infeasible) return false;
  if (lo.status == LpStatus::Optimal && lo.value > 0) return false;
  LpResult hi = solve_lp(lifted, obj, true);
  return hi.status == LpStatus::Unbounded || hi.value > 0;
}

namespace {

int pair_sum_dim(const WCell& a, const WCell& b, int n) {
  RatMat stacked = a.dir_basis;
  stacked.insert(stacked.end(), b.dir_basis.begin(), b.dir_basis.end());
  if (stacked.empty()) return 0;
  (void)n;
  return rank(stacked);
}

}  // namespace

Int StableIntersection::total_multiplicity() const {
  Int total = 0;
  for (const StableCell& c : cells) total += c.multiplicity;
  return total;
}

WeightedComplex StableIntersection::as_complex() const {
  WeightedComplex complex;
  complex.ambient = ambient;
  complex.pure_dim = pure_dim();
  for (const StableCell& c : cells) {
    WCell cell;
    cell.poly = c.cell;
    cell.weight = c.multiplicity;
    cell.interior = c.interior;
    cell.dim = c.dim;
    cell.dir_basis = c.dir_basis;
    cell.dir_lattice = c.dir_lattice;
    complex.cells.push_back(std::move(cell));
  }
  return complex;
}

bool verify_genericity(const WeightedComplex& s1, const WeightedComplex& s2,
                       const RatVec& v) {
  const int n = s1.ambient;
  for (const WCell& a : s1.cells)
    for (const WCell& b : s2.cells) {
      if (pair_sum_dim(a, b, n) >= n) continue;
      if (epsilon_feasible(a.poly, b.poly, v)) return false;
    }
  return true;
}

StableIntersection stable_intersection(const WeightedComplex& s1,
                                       const WeightedComplex& s2,
                                       const PerturbationVector& v) {
  if (s1.ambient != s2.ambient)
    throw DimensionMismatchError("stable_intersection: ambient mismatch");
  const int n = s1.ambient;
  StableIntersection out;
  out.ambient = n;
  out.codim = s1.codim() + s2.codim();
  if (s1.empty() || s2.empty()) return out;
  const int target_dim = n - out.codim;

  struct Survivor {
    int i, j;
    Polyhedron piece;
    Int local_mult;
  };
  std::vector<Survivor> survivors;
  for (int i = 0; i < static_cast<int>(s1.cells.size()); ++i) {
    const WCell& a = s1.cells[i];
    for (int j = 0; j < static_cast<int>(s2.cells.size()); ++j) {
      const WCell& b = s2.cells[j];
      if (pair_sum_dim(a, b, n) < n) {
        if (epsilon_feasible(a.poly, b.poly, v.v))
          throw GenericityError("displacement not generic (seed " +
                                std::to_string(v.seed) + ")");
        continue;
      }
      if (!epsilon_feasible(a.poly, b.poly, v.v)) continue;
      auto index = lattice_index(LatticeBasis{a.dir_lattice},
                                 LatticeBasis{b.dir_lattice}, n);
      assert(index.has_value());  // dim(sigma1 + sigma2) = n
      Survivor s;
      s.i = i;
      s.j = j;
      s.piece = intersect(a.poly, b.poly);
      s.local_mult = a.weight * b.weight * *index;
      survivors.push_back(std::move(s));
    }
  }

  // candidate cells of the target dimension; the semantic canonical form
  // makes set-equal pieces from different pairs collapse by key
  std::vector<StableCell> kept;
  std::set<std::string> seen;
  std::vector<Survivor> lower;  // strictly lower-dimensional survivors
  for (const Survivor& s : survivors) {
    AffineSpan span = affine_span(s.piece);
    assert(!span.empty);  // eps-interval is closed, so 0 belongs to it
    const int d = n - rank(span.normals);
    if (d < target_dim) {
      lower.push_back(s);
      continue;
    }
    if (d > target_dim)
      throw NonPureComplexError("stable intersection: cell above target dimension");
    StableCell cell;
    cell.cell = minimal_form(s.piece);
    if (!seen.insert(canonical_key(cell.cell)).second) continue;
    cell.interior = span.interior;
    cell.dim = d;
    cell.dir_basis = nullspace(span.normals, n);
    IntMat rows;
    for (const RatVec& normal : span.normals) {
      IntVec prim = primitive_integer(normal);
      if (content(prim) != 0) rows.push_back(std::move(prim));
    }
    cell.dir_lattice = integer_kernel(rows, n);
    kept.push_back(std::move(cell));
  }

  // drop kept cells strictly contained in another kept cell
  {
    std::vector<bool> dominated(kept.size(), false);
    for (std::size_t i = 0; i < kept.size(); ++i) {
      for (std::size_t j = 0; j < kept.size() && !dominated[i]; ++j) {
        if (i == j) continue;
        // set-equal cells were merged above, so subset here means proper
        if (contains(kept[j].cell, kept[i].interior) &&
            subset_of(kept[i].cell, kept[j].cell))
          dominated[i] = true;
      }
    }
    std::vector<StableCell> maximal;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (!dominated[i]) maximal.push_back(std::move(kept[i]));
    kept = std::move(maximal);
  }

  // every lower-dimensional survivor must sit inside a kept cell, otherwise
  // the result would not be pure
  for (const Survivor& s : lower) {
    RatVec p = relative_interior_point(s.piece);
    bool covered = false;
    for (const StableCell& c : kept)
      if (contains(c.cell, p)) {
        covered = true;
        break;
      }
    if (!covered)
      throw NonPureComplexError(
          "stable intersection: low-dimensional cell not covered");
  }

  // attribute contributors by relative-interior-point membership
  for (StableCell& c : kept) {
    c.multiplicity = 0;
    for (const Survivor& s : survivors) {
      if (!contains(s.piece, c.interior)) continue;
      c.contributors.push_back(Contributor{s.i, s.j, s.local_mult});
      c.multiplicity += s.local_mult;
    }
    assert(c.multiplicity > 0);
  }

  std::sort(kept.begin(), kept.end(), [](const StableCell& a, const StableCell& b) {
    return canonical_key(a.cell) < canonical_key(b.cell);
  });
  out.cells = std::move(kept);
  return out;
}

StableIntersection stable_intersection_many(
    const std::vector<WeightedComplex>& complexes, const std::vector<long>& seeds) {
  if (complexes.empty())
    throw std::invalid_argument("stable_intersection_many: no complexes");
  if (seeds.empty())
    throw std::invalid_argument("stable_intersection_many: no seeds");
  const int n = complexes.front().ambient;

  StableIntersection acc;
  acc.ambient = n;
  acc.codim = complexes.front().codim();
  for (const WCell& c : complexes.front().cells) {
    StableCell sc;
    sc.cell = c.poly;
    sc.multiplicity = c.weight;
    sc.interior = c.interior;
    sc.dim = c.dim;
    sc.dir_basis = c.dir_basis;
    sc.dir_lattice = c.dir_lattice;
    acc.cells.push_back(std::move(sc));
  }

  for (std::size_t step = 1; step < complexes.size(); ++step) {
    if (complexes[step].ambient != n)
      throw DimensionMismatchError("stable_intersection_many: ambient mismatch");
    const long base = seeds[(step - 1) % seeds.size()];
    WeightedComplex left = acc.as_complex();
    bool done = false;
    constexpr int kMaxAttempts = 16;
    for (int attempt = 0; attempt < kMaxAttempts && !done; ++attempt) {
      PerturbationVector pv = draw_perturbation(n, base + 7919L * attempt);
      try {
        acc = stable_intersection(left, complexes[step], pv);
        done = true;
      } catch (const GenericityError&) {
      }
    }
    if (!done)
      throw GenericityError("stable_intersection_many: no generic displacement after " +
                            std::to_string(kMaxAttempts) + " attempts");
    if (acc.empty()) {
      // codimensions still add for bookkeeping; support stays empty
      StableIntersection rest = acc;
      for (std::size_t later = step + 1; later < complexes.size(); ++later)
        rest.codim += complexes[later].codim();
      return rest;
    }
  }
  return acc;
}

Int mixed_volume(const std::vector<Support>& supports, int n) {
  if (static_cast<int>(supports.size()) != n)
    throw std::invalid_argument("mixed_volume: need exactly n supports");
  if (n < 1 || n > 3)
    throw std::invalid_argument("mixed_volume: only ambient dimension 1..3 supported");
  for (const Support& s : supports) {
    if (s.points.empty()) throw std::invalid_argument("mixed_volume: empty support");
    for (const IntVec& p : s.points)
      if (static_cast<int>(p.size()) != n)
        throw DimensionMismatchError("mixed_volume: exponent length mismatch");
  }

  Rat mv = 0;
  for (int mask = 1; mask < (1 << n); ++mask) {
    // Minkowski sum of the selected supports
    std::vector<RatVec> sums = {RatVec(n, Rat(0))};
    int count = 0;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1 << i))) continue;
      ++count;
      std::vector<RatVec> next;
      next.reserve(sums.size() * supports[i].points.size());
      for (const RatVec& base : sums)
        for (const IntVec& p : supports[i].points) {
          RatVec q = base;
          for (int c = 0; c < n; ++c) q[c] += Rat(p[c]);
          next.push_back(std::move(q));
        }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      sums = std::move(next);
    }
    const Rat vol = polytope_volume(std::move(sums), n);
    mv += ((n - count) % 2 == 0) ? vol : -vol;
  }
  assert(mv.get_den() == 1 && mv >= 0);
  return mv.get_num();
}

namespace {

std::vector<std::vector<int>> subsets_by_size(int k) {
  std::vector<std::vector<int>> out;
  for (int size = 1; size <= k; ++size) {
    std::vector<int> idx(size);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == size) {
        out.push_back(idx);
        return;
      }
      for (int i = start; i < k; ++i) {
        idx[depth] = i;
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
  }
  return out;
}

}  // namespace

YuResult yu_conditions(const std::vector<Support>& supports, int n) {
  const int k = static_cast<int>(supports.size());
  if (k > n) throw std::invalid_argument("yu_conditions: more supports than ambient dimension");

  // translate every support so that 0 lies in it
  std::vector<Support> shifted(supports);
  for (Support& s : shifted) {
    if (s.points.empty()) throw std::invalid_argument("yu_conditions: empty support");
    IntVec base = *std::min_element(s.points.begin(), s.points.end());
    for (IntVec& p : s.points)
      for (int c = 0; c < n; ++c) p[c] -= base[c];
    std::sort(s.points.begin(), s.points.end());
  }

  for (const std::vector<int>& subset : subsets_by_size(k)) {
    std::vector<IntVec> uni;
    for (int j : subset)
      uni.insert(uni.end(), shifted[j].points.begin(), shifted[j].points.end());
    std::sort(uni.begin(), uni.end());
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());

    const int span_dim = rank(to_rat(uni));
    const int size = static_cast<int>(subset.size());
    if (span_dim > size) continue;
    if (span_dim < size) return YuResult{false, subset};

    // mixed volume inside the saturated lattice of the span: change to
    // coordinates of an integral basis of Span n Z^n
    IntMat normals_int;
    for (const RatVec& row : nullspace(to_rat(uni), n)) {
      IntVec prim = primitive_integer(row);
      if (content(prim) != 0) normals_int.push_back(std::move(prim));
    }
    IntMat basis = integer_kernel(normals_int, n);  // size rows = span_dim
    assert(static_cast<int>(basis.size()) == span_dim);
    RatMat basis_t(n, RatVec(span_dim));
    for (int i = 0; i < span_dim; ++i)
      for (int c = 0; c < n; ++c) basis_t[c][i] = Rat(basis[i][c]);

    std::vector<Support> reduced;
    for (int j : subset) {
      Support r;
      for (const IntVec& p : shifted[j].points) {
        auto y = solve_linear(basis_t, to_rat(p));
        assert(y.has_value());
        IntVec q(span_dim);
        for (int i = 0; i < span_dim; ++i) {
          assert((*y)[i].get_den() == 1);
          q[i] = (*y)[i].get_num();
        }
        r.points.push_back(std::move(q));
      }
      std::sort(r.points.begin(), r.points.end());
      r.points.erase(std::unique(r.points.begin(), r.points.end()), r.points.end());
      reduced.push_back(std::move(r));
    }
    if (mixed_volume(reduced, span_dim) != 1) return YuResult{false, subset};
  }
  return YuResult{};
}

}  // namespace trop
