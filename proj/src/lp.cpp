#include "trop/lp.hpp"

#include <cassert>
#include <map>

namespace trop {

namespace {

// Dense tableau simplex on  max c.z  s.t.  M z = rhs, z >= 0.
// Bland's rule throughout (lowest eligible index), which guarantees
// termination on degenerate instances.
struct Tableau {
  RatMat rows;             // m x (ncols + 1), last column is rhs
  std::vector<int> basis;  // basis[i] = column basic in row i
  int ncols = 0;

  int rhs_col() const { return ncols; }

  void pivot(int r, int c) {
    RatVec& prow = rows[r];
    const Rat piv = prow[c];
    for (Rat& x : prow) x /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      Rat f = rows[i][c];
      if (f == 0) continue;
      RatVec& row = rows[i];
      for (int j = 0; j <= ncols; ++j)
        if (prow[j] != 0) row[j] -= f * prow[j];
    }
    basis[r] = c;
  }

  // Maximizes c over the current basic feasible solution. `allowed[j]` masks
  // columns that may enter. Returns false if unbounded.
  bool optimize(const RatVec& cost, const std::vector<bool>& allowed) {
    const int m = static_cast<int>(rows.size());
    // reduced[j] = cost[j] - sum_i cost[basis[i]] * rows[i][j]
    RatVec reduced(cost);
    for (int i = 0; i < m; ++i) {
      const Rat& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (int j = 0; j < ncols; ++j)
        if (rows[i][j] != 0) reduced[j] -= cb * rows[i][j];
    }
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols; ++j) {
        if (allowed[j] && reduced[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best_ratio;
      for (int i = 0; i < m; ++i) {
        if (rows[i][enter] <= 0) continue;
        Rat ratio = rows[i][rhs_col()] / rows[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      const Rat factor = reduced[enter];
      pivot(leave, enter);
      const RatVec& prow = rows[leave];
      for (int j = 0; j < ncols; ++j)
        if (prow[j] != 0) reduced[j] -= factor * prow[j];
    }
  }

  RatVec solution(int nvars) const {
    RatVec z(nvars, Rat(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (basis[i] < nvars) z[basis[i]] = rows[i][ncols];
    return z;
  }
};

// Inequality-only LP: max obj.y s.t. rows[i].y >= rhs[i], y free.
// Returned point is feasible whenever status != Infeasible.
LpResult solve_reduced(const RatMat& g, const RatVec& h, const RatVec& obj) {
  const int m = static_cast<int>(g.size());
  const int v = static_cast<int>(obj.size());
  LpResult out;
  if (m == 0) {
    out.point = RatVec(v, Rat(0));
    out.value = 0;
    out.status = is_zero(obj) ? LpStatus::Optimal : LpStatus::Unbounded;
    if (out.status == LpStatus::Unbounded) return out;
    return out;
  }

  // standard form: y = u - w, slack s: G u - G w - s = h, all >= 0
  const int nreg = 2 * v + m;
  const int ncols = nreg + m;  // + artificials
  Tableau tab;
  tab.ncols = ncols;
  tab.rows.assign(m, RatVec(ncols + 1, Rat(0)));
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    const bool flip = h[i] < 0;
    const Rat sign = flip ? Rat(-1) : Rat(1);
    for (int j = 0; j < v; ++j) {
      tab.rows[i][j] = sign * g[i][j];
      tab.rows[i][v + j] = -sign * g[i][j];
    }
    tab.rows[i][2 * v + i] = -sign;  // slack: G y - s = h
    tab.rows[i][nreg + i] = 1;       // artificial
    tab.rows[i][ncols] = sign * h[i];
    tab.basis[i] = nreg + i;
  }

  // phase I: max -(sum of artificials)
  {
    RatVec cost(ncols, Rat(0));
    for (int i = 0; i < m; ++i) cost[nreg + i] = -1;
    std::vector<bool> allowed(ncols, true);
    bool bounded = tab.optimize(cost, allowed);
    assert(bounded);
    (void)bounded;
    Rat infeas = 0;
    for (int i = 0; i < m; ++i)
      if (tab.basis[i] >= nreg) infeas += tab.rows[i][tab.rhs_col()];
    if (infeas > 0) {
      out.status = LpStatus::Infeasible;
      return out;
    }
  }

  // drive artificials out of the basis (their value is 0 here)
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < nreg) continue;
    int enter = -1;
    for (int j = 0; j < nreg; ++j)
      if (tab.rows[i][j] != 0) {
        enter = j;
        break;
      }
    if (enter >= 0) tab.pivot(i, enter);
  }
  // rows still basic in an artificial are redundant: drop them
  {
    RatMat rows;
    std::vector<int> basis;
    for (int i = 0; i < m; ++i) {
      if (tab.basis[i] >= nreg) continue;
      rows.push_back(std::move(tab.rows[i]));
      basis.push_back(tab.basis[i]);
    }
    tab.rows = std::move(rows);
    tab.basis = std::move(basis);
  }

  // phase II
  RatVec cost(ncols, Rat(0));
  for (int j = 0; j < v; ++j) {
    cost[j] = obj[j];
    cost[v + j] = -obj[j];
  }
  std::vector<bool> allowed(ncols, true);
  for (int j = nreg; j < ncols; ++j) allowed[j] = false;
  const bool bounded = tab.optimize(cost, allowed);

  RatVec z = tab.solution(nreg);
  out.point = RatVec(v);
  for (int j = 0; j < v; ++j) out.point[j] = z[j] - z[v + j];
  out.value = dot(obj, out.point);
  out.status = bounded ? LpStatus::Optimal : LpStatus::Unbounded;
  return out;
}

struct Presolve {
  bool infeasible = false;
  RatVec x0;    // particular solution of the equality system
  RatMat dirs;  // nullspace basis rows of the equality system
};

Presolve eliminate_equalities(const Polyhedron& p) {
  Presolve out;
  RatMat normals;
  RatVec rhs;
  for (const Constraint& c : p.eqs) {
    normals.push_back(c.normal);
    rhs.push_back(c.rhs);
  }
  if (normals.empty()) {
    out.x0 = RatVec(p.ambient, Rat(0));
    out.dirs = nullspace({}, p.ambient);
    return out;
  }
  auto x0 = solve_linear(normals, rhs);
  if (!x0) {
    out.infeasible = true;
    return out;
  }
  out.x0 = std::move(*x0);
  out.dirs = nullspace(normals, p.ambient);
  return out;
}

}  // namespace

LpResult solve_lp(const Polyhedron& p, const RatVec& objective, bool maximize) {
  if (static_cast<int>(objective.size()) != p.ambient)
    throw DimensionMismatchError("solve_lp: objective length does not match");
  Presolve pre = eliminate_equalities(p);
  LpResult out;
  if (pre.infeasible) return out;

  const int v = static_cast<int>(pre.dirs.size());
  RatVec obj_red(v);
  for (int j = 0; j < v; ++j) {
    obj_red[j] = dot(pre.dirs[j], objective);
    if (!maximize) obj_red[j] = -obj_red[j];
  }

  RatMat g;
  RatVec h;
  for (const Constraint& c : p.ineqs) {
    RatVec row(v);
    bool zero = true;
    for (int j = 0; j < v; ++j) {
      row[j] = dot(pre.dirs[j], c.normal);
      if (row[j] != 0) zero = false;
    }
    Rat hh = c.rhs - dot(c.normal, pre.x0);
    if (zero) {
      if (hh > 0) return out;  // 0 >= positive: infeasible
      continue;
    }
    g.push_back(std::move(row));
    h.push_back(std::move(hh));
  }

  LpResult red = solve_reduced(g, h, obj_red);
  if (red.status == LpStatus::Infeasible) return out;

  out.status = red.status;
  out.point = pre.x0;
  for (int j = 0; j < v; ++j)
    if (red.point[j] != 0)
      out.point = add(out.point, scale(pre.dirs[j], red.point[j]));
  out.value = dot(objective, out.point);
  return out;
}

bool lp_feasible(const Polyhedron& p) {
  RatVec zero(p.ambient, Rat(0));
  return solve_lp(p, zero, true).status != LpStatus::Infeasible;
}

InteriorProbe strict_interior(const Polyhedron& p) {
  // lifted LP over (x, t)
  Polyhedron lifted;
  lifted.ambient = p.ambient + 1;
  for (const Constraint& c : p.eqs) {
    Constraint e;
    e.normal = c.normal;
    e.normal.push_back(0);
    e.rhs = c.rhs;
    lifted.eqs.push_back(std::move(e));
  }
  for (const Constraint& c : p.ineqs) {
    Constraint e;
    e.normal = c.normal;
    e.normal.push_back(-1);
    e.rhs = c.rhs;
    lifted.ineqs.push_back(std::move(e));
  }
  Constraint tlow, thigh;
  tlow.normal = RatVec(p.ambient + 1, Rat(0));
  tlow.normal.back() = 1;
  tlow.rhs = 0;
  thigh.normal = RatVec(p.ambient + 1, Rat(0));
  thigh.normal.back() = -1;
  thigh.rhs = -1;
  lifted.ineqs.push_back(tlow);
  lifted.ineqs.push_back(thigh);

  RatVec obj(p.ambient + 1, Rat(0));
  obj.back() = 1;
  LpResult r = solve_lp(lifted, obj, true);
  InteriorProbe probe;
  if (r.status == LpStatus::Infeasible) return probe;
  probe.empty = false;
  probe.strict = r.value > 0;
  probe.point = RatVec(r.point.begin(), r.point.end() - 1);
  return probe;
}

AffineSpan affine_span(const Polyhedron& p) {
  AffineSpan span;
  InteriorProbe probe = strict_interior(p);
  if (probe.empty) return span;
  span.empty = false;
  for (const Constraint& c : p.eqs) {
    span.normals.push_back(c.normal);
    span.rhs.push_back(c.rhs);
  }
  if (probe.strict) {
    span.interior = probe.point;
    return span;
  }
  // Some inequality is an implicit equality. Candidates are the ones tight
  // at the probe point; each is implicit iff its maximum over P equals rhs.
  Polyhedron strict_part = p;
  std::vector<Constraint> remaining;
  for (const Constraint& c : p.ineqs) {
    if (dot(c.normal, probe.point) > c.rhs) {
      remaining.push_back(c);
      continue;
    }
    LpResult r = solve_lp(p, c.normal, true);
    if (r.status == LpStatus::Optimal && r.value == c.rhs) {
      span.normals.push_back(c.normal);
      span.rhs.push_back(c.rhs);
    } else {
      remaining.push_back(c);
    }
  }
  strict_part.eqs.clear();
  for (std::size_t i = 0; i < span.normals.size(); ++i)
    strict_part.eqs.push_back(Constraint{span.normals[i], span.rhs[i]});
  strict_part.ineqs = std::move(remaining);
  InteriorProbe final_probe = strict_interior(strict_part);
  assert(!final_probe.empty && final_probe.strict);
  span.interior = final_probe.point;
  return span;
}

int dim(const Polyhedron& p) {
  AffineSpan span = affine_span(p);
  if (span.empty) return -1;
  return p.ambient - rank(span.normals);
}

RatVec relative_interior_point(const Polyhedron& p) {
  AffineSpan span = affine_span(p);
  if (span.empty)
    throw EmptyPolyhedronError("relative_interior_point: polyhedron is empty");
  return span.interior;
}

RatMat direction_basis(const Polyhedron& p) {
  AffineSpan span = affine_span(p);
  if (span.empty)
    throw EmptyPolyhedronError("direction_basis: polyhedron is empty");
  return nullspace(span.normals, p.ambient);
}

bool subset_of(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient != q.ambient)
    throw DimensionMismatchError("subset_of: ambient dimensions differ");
  for (const Constraint& c : q.eqs) {
    LpResult lo = solve_lp(p, c.normal, false);
    if (lo.status == LpStatus::Infeasible) return true;
    if (lo.status != LpStatus::Optimal || lo.value != c.rhs) return false;
    LpResult hi = solve_lp(p, c.normal, true);
    if (hi.status != LpStatus::Optimal || hi.value != c.rhs) return false;
  }
  for (const Constraint& c : q.ineqs) {
    LpResult lo = solve_lp(p, c.normal, false);
    if (lo.status == LpStatus::Infeasible) return true;
    if (lo.status != LpStatus::Optimal || lo.value < c.rhs) return false;
  }
  return true;
}

Polyhedron minimal_form(const Polyhedron& p) {
  AffineSpan span = affine_span(p);
  if (span.empty) throw EmptyPolyhedronError("minimal_form: empty polyhedron");
  const int n = p.ambient;

  // canonical equality system: rref of [normals | rhs]
  RatMat aug;
  for (std::size_t i = 0; i < span.normals.size(); ++i) {
    RatVec row = span.normals[i];
    row.push_back(span.rhs[i]);
    aug.push_back(std::move(row));
  }
  Rref rr = rref(std::move(aug));

  Polyhedron out;
  out.ambient = n;
  for (int i = 0; i < rr.rank; ++i) {
    // a pivot in the rhs column would mean an inconsistent system
    assert(rr.pivot_cols[i] < n);
    Constraint e;
    e.normal.assign(rr.mat[i].begin(), rr.mat[i].begin() + n);
    e.rhs = rr.mat[i][n];
    out.eqs.push_back(std::move(e));
  }

  // reduce inequalities modulo the equality rows, then normalize to a
  // primitive integer normal; equal facets collapse to one row
  std::map<std::vector<std::string>, std::pair<RatVec, Rat>> rows;
  for (const Constraint& c : p.ineqs) {
    RatVec a = c.normal;
    Rat b = c.rhs;
    for (int i = 0; i < rr.rank; ++i) {
      const Rat coef = a[rr.pivot_cols[i]];
      if (coef == 0) continue;
      for (int j = 0; j < n; ++j) a[j] -= coef * rr.mat[i][j];
      b -= coef * rr.mat[i][n];
    }
    if (is_zero(a)) continue;  // implied by the affine span
    IntVec prim = primitive_integer(a);
    Rat lambda = 0;
    for (int j = 0; j < n; ++j)
      if (a[j] != 0) {
        lambda = Rat(prim[j]) / a[j];
        break;
      }
    RatVec normal = to_rat(prim);
    Rat rhs = b * lambda;
    std::vector<std::string> key;
    key.reserve(n);
    for (const Int& x : prim) key.push_back(x.get_str());
    auto it = rows.find(key);
    if (it == rows.end())
      rows.emplace(std::move(key), std::make_pair(std::move(normal), rhs));
    else if (rhs > it->second.second)
      it->second.second = rhs;  // tighter bound wins
  }

  std::vector<Constraint> ineqs;
  for (auto& [key, row] : rows)
    ineqs.push_back(Constraint{std::move(row.first), std::move(row.second)});

  // redundancy elimination: a valid constraint that defines no facet is
  // implied by the others
  std::vector<bool> dropped(ineqs.size(), false);
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    Polyhedron rest;
    rest.ambient = n;
    rest.eqs = out.eqs;
    for (std::size_t j = 0; j < ineqs.size(); ++j)
      if (j != i && !dropped[j]) rest.ineqs.push_back(ineqs[j]);
    LpResult lo = solve_lp(rest, ineqs[i].normal, false);
    if (lo.status == LpStatus::Optimal && lo.value >= ineqs[i].rhs)
      dropped[i] = true;
  }
  for (std::size_t i = 0; i < ineqs.size(); ++i)
    if (!dropped[i]) out.ineqs.push_back(std::move(ineqs[i]));
  return out;
}

int minkowski_sum_dim(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient != q.ambient)
    throw DimensionMismatchError("minkowski_sum_dim: ambient dimensions differ");
  RatMat stacked = direction_basis(p);
  RatMat qdirs = direction_basis(q);
  stacked.insert(stacked.end(), qdirs.begin(), qdirs.end());
  if (stacked.empty()) return 0;
  return rank(stacked);
}

}  // namespace trop
