#include "trop/complexes.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace trop {

WCell make_wcell(Polyhedron p, Int weight, int expected_dim) {
  AffineSpan span = affine_span(p);
  if (span.empty) throw EmptyPolyhedronError("make_wcell: empty cell");
  WCell cell;
  cell.dim = p.ambient - rank(span.normals);
  if (expected_dim >= 0 && cell.dim != expected_dim)
    throw NonPureComplexError("cell dimension " + std::to_string(cell.dim) +
                              " differs from pure dimension " +
                              std::to_string(expected_dim));
  cell.poly = std::move(p);
  cell.weight = std::move(weight);
  cell.interior = span.interior;
  cell.dir_basis = nullspace(span.normals, cell.poly.ambient);
  IntMat rows;
  for (const RatVec& normal : span.normals) {
    IntVec prim = primitive_integer(normal);
    if (content(prim) != 0) rows.push_back(std::move(prim));
  }
  cell.dir_lattice = integer_kernel(rows, cell.poly.ambient);
  return cell;
}

WeightedComplex make_complex(int ambient, int pure_dim,
                             std::vector<std::pair<Polyhedron, Int>> cells) {
  WeightedComplex complex;
  complex.ambient = ambient;
  complex.pure_dim = pure_dim;
  for (auto& [poly, weight] : cells) {
    if (poly.ambient != ambient)
      throw DimensionMismatchError("make_complex: ambient mismatch");
    if (weight <= 0) throw std::invalid_argument("cell weight must be positive");
    complex.cells.push_back(make_wcell(std::move(poly), std::move(weight), pure_dim));
  }
  return complex;
}

WeightedComplex as_complex(const TropicalHypersurface& surface) {
  WeightedComplex complex;
  complex.ambient = surface.n;
  complex.pure_dim = surface.n - 1;
  for (const HyperCell& hc : surface.cells) {
    WCell cell;
    cell.poly = hc.cell;
    cell.weight = hc.weight;
    cell.interior = hc.interior;
    cell.dim = surface.n - 1;
    cell.dir_basis = hc.dir_basis;
    cell.dir_lattice = hc.dir_lattice;
    complex.cells.push_back(std::move(cell));
  }
  return complex;
}

std::vector<Polyhedron> support_intersection(
    const std::vector<TropicalHypersurface>& surfaces) {
  if (surfaces.empty())
    throw std::invalid_argument("support_intersection: no surfaces");
  const int n = surfaces.front().n;
  for (const TropicalHypersurface& s : surfaces)
    if (s.n != n)
      throw DimensionMismatchError("support_intersection: ambient mismatch");
  for (const TropicalHypersurface& s : surfaces)
    if (s.cells.empty()) return {};

  std::vector<Polyhedron> cover;
  std::vector<std::string> keys;
  auto push_unique = [&](std::vector<Polyhedron>& dst,
                         std::vector<std::string>& dst_keys, Polyhedron p) {
    std::string key = canonical_key(p);
    if (std::find(dst_keys.begin(), dst_keys.end(), key) != dst_keys.end())
      return;
    dst_keys.push_back(std::move(key));
    dst.push_back(std::move(p));
  };

  for (const HyperCell& c : surfaces.front().cells)
    push_unique(cover, keys, c.cell);
  for (std::size_t s = 1; s < surfaces.size(); ++s) {
    std::vector<Polyhedron> next;
    std::vector<std::string> next_keys;
    for (const Polyhedron& partial : cover) {
      for (const HyperCell& c : surfaces[s].cells) {
        Polyhedron piece = intersect(partial, c.cell);
        if (!lp_feasible(piece)) continue;
        push_unique(next, next_keys, canonicalize(piece));
      }
    }
    cover = std::move(next);
    keys = std::move(next_keys);
  }
  std::sort(cover.begin(), cover.end(), [](const Polyhedron& a, const Polyhedron& b) {
    return canonical_key(a) < canonical_key(b);
  });

  // prune cells contained in another cell; the union is unchanged and
  // intersecting a surface with itself yields exactly its own cells
  std::vector<RatVec> interiors;
  interiors.reserve(cover.size());
  for (const Polyhedron& c : cover) interiors.push_back(relative_interior_point(c));
  std::vector<bool> drop(cover.size(), false);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (drop[i]) continue;
    for (std::size_t j = 0; j < cover.size(); ++j) {
      if (i == j || drop[j]) continue;
      if (!contains(cover[j], interiors[i])) continue;  // cheap screen
      if (!subset_of(cover[i], cover[j])) continue;
      if (subset_of(cover[j], cover[i]) && i < j)
        drop[j] = true;  // equal sets: keep the first in canonical order
      else
        drop[i] = true;
      if (drop[i]) break;
    }
  }
  std::vector<Polyhedron> pruned;
  for (std::size_t i = 0; i < cover.size(); ++i)
    if (!drop[i]) pruned.push_back(std::move(cover[i]));
  return pruned;
}

ComponentPartition connected_components(const std::vector<Polyhedron>& cells) {
  const int m = static_cast<int>(cells.size());
  for (const Polyhedron& p : cells)
    if (!cells.empty() && p.ambient != cells.front().ambient)
      throw DimensionMismatchError("connected_components: ambient mismatch");

  // canonical processing order, so the partition does not depend on input order
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> key(m);
  for (int i = 0; i < m; ++i) key[i] = canonical_key(cells[i]);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return key[a] < key[b]; });

  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const int i = order[a], j = order[b];
      if (find(i) == find(j)) continue;
      if (lp_feasible(intersect(cells[i], cells[j]))) parent[find(i)] = find(j);
    }
  }

  ComponentPartition out;
  std::vector<int> group_of(m, -1);
  for (int a = 0; a < m; ++a) {
    const int i = order[a];
    const int root = find(i);
    if (group_of[root] < 0) {
      group_of[root] = static_cast<int>(out.groups.size());
      out.groups.emplace_back();
    }
    out.groups[group_of[root]].push_back(i);
  }
  for (auto& g : out.groups) std::sort(g.begin(), g.end());
  return out;
}

namespace {

struct Face {
  Polyhedron poly;
  RatVec interior;
  RatMat span_normals;  // affine span equalities of the face
};

// codim-1 faces discovered as pairwise intersections of maximal cells
std::vector<Face> codim1_faces(const WeightedComplex& complex) {
  std::vector<Face> faces;
  const int m = static_cast<int>(complex.cells.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Polyhedron t = intersect(complex.cells[i].poly, complex.cells[j].poly);
      InteriorProbe probe = strict_interior(t);
      if (probe.empty) continue;
      Face face;
      if (probe.strict) {
        for (const Constraint& c : t.eqs) face.span_normals.push_back(c.normal);
        face.interior = probe.point;
      } else {
        AffineSpan span = affine_span(t);
        face.span_normals = span.normals;
        face.interior = span.interior;
      }
      if (complex.ambient - rank(face.span_normals) != complex.pure_dim - 1)
        continue;
      face.poly = std::move(t);
      bool duplicate = false;
      for (const Face& known : faces) {
        if (contains(known.poly, face.interior) &&
            contains(face.poly, known.interior)) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) faces.push_back(std::move(face));
    }
  }
  return faces;
}

}  // namespace

BalanceReport is_balanced(const WeightedComplex& complex) {
  BalanceReport report;
  if (complex.pure_dim <= 0) return report;  // no codim-1 faces to audit
  for (const WCell& cell : complex.cells)
    if (cell.dim != complex.pure_dim)
      throw NonPureComplexError("is_balanced: complex is not pure");

  for (const Face& tau : codim1_faces(complex)) {
    IntMat tau_rows;
    for (const RatVec& normal : tau.span_normals) {
      IntVec prim = primitive_integer(normal);
      if (content(prim) != 0) tau_rows.push_back(std::move(prim));
    }
    IntMat tau_lattice = integer_kernel(tau_rows, complex.ambient);

    RatVec sum(complex.ambient, Rat(0));
    bool orientable = true;
    for (const WCell& sigma : complex.cells) {
      if (!contains(sigma.poly, tau.interior)) continue;
      IntVec u = quotient_generator(sigma.dir_lattice, tau_lattice);
      // orient u into sigma: nonnegative on every inequality active at tau
      int sign = 0;
      for (const Constraint& c : sigma.poly.ineqs) {
        if (dot(c.normal, tau.interior) != c.rhs) continue;
        Rat val = dot(c.normal, to_rat(u));
        if (val == 0) continue;
        const int s = val > 0 ? 1 : -1;
        if (sign == 0)
          sign = s;
        else if (sign != s)
          orientable = false;
      }
      if (sign == 0) sign = 1;  // tau not cut out by sigma's inequalities
      for (int c = 0; c < complex.ambient; ++c)
        sum[c] += Rat(sign) * Rat(u[c]) * Rat(sigma.weight);
    }

    bool ok = orientable;
    if (ok) {
      for (const RatVec& normal : tau.span_normals)
        if (dot(normal, sum) != 0) {
          ok = false;
          break;
        }
    }
    if (!ok) {
      report.balanced = false;
      report.violations.push_back(tau.poly);
    }
  }
  return report;
}

std::vector<Interval> project_to_complement(const WeightedComplex& complex,
                                            const LatticeBasis& directions) {
  const int n = complex.ambient;
  RatMat rows;
  for (const IntVec& g : directions.generators) {
    if (static_cast<int>(g.size()) != n)
      throw DimensionMismatchError("project_to_complement: generator length");
    rows.push_back(to_rat(g));
  }
  RatMat complement = nullspace(rows, n);
  if (complement.size() != 1)
    throw std::invalid_argument(
        "project_to_complement: orthogonal complement is not one-dimensional");
  RatVec u = to_rat(primitive_integer(complement[0]));

  std::vector<Interval> intervals;
  for (const WCell& cell : complex.cells) {
    Interval iv;
    LpResult lo = solve_lp(cell.poly, u, false);
    LpResult hi = solve_lp(cell.poly, u, true);
    assert(lo.status != LpStatus::Infeasible);
    if (lo.status == LpStatus::Optimal) iv.lo = lo.value;
    if (hi.status == LpStatus::Optimal) iv.hi = hi.value;
    intervals.push_back(std::move(iv));
  }
  return intervals;
}

ProjectionShape classify_projection(const std::vector<Interval>& intervals) {
  if (intervals.empty()) return ProjectionShape::FinitePoints;
  bool all_points = true;
  for (const Interval& iv : intervals)
    if (!iv.lo || !iv.hi || *iv.lo != *iv.hi) all_points = false;
  if (all_points) return ProjectionShape::FinitePoints;

  // merge closed intervals; the union must be the whole line
  std::vector<Interval> sorted = intervals;
  std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) {
    if (!a.lo) return b.lo.has_value();
    if (!b.lo) return false;
    return *a.lo < *b.lo;
  });
  if (sorted.front().lo) return ProjectionShape::Other;  // bounded below
  std::optional<Rat> covered_to = sorted.front().hi;     // nullopt = +inf
  for (std::size_t i = 1; i < sorted.size() && covered_to; ++i) {
    const Interval& iv = sorted[i];
    if (iv.lo && *iv.lo > *covered_to) return ProjectionShape::Other;  // gap
    if (!iv.hi)
      covered_to.reset();
    else if (*iv.hi > *covered_to)
      covered_to = iv.hi;
  }
  return covered_to ? ProjectionShape::Other : ProjectionShape::WholeLine;
}

}  // namespace trop
