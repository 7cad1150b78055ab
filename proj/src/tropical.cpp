#include "trop/tropical.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace trop {

TropicalPolynomial make_polynomial(int n, std::vector<IntVec> points,
                                   RatVec coeffs) {
  if (points.empty()) throw std::invalid_argument("empty support");
  if (points.size() != coeffs.size())
    throw std::invalid_argument("coefficient count does not match support");
  for (const IntVec& p : points)
    if (static_cast<int>(p.size()) != n)
      throw std::invalid_argument("exponent vector length does not match n");
  // sort support, keep coefficients aligned
  std::vector<int> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return points[a] < points[b]; });
  TropicalPolynomial f;
  f.n = n;
  for (int i : order) {
    if (!f.support.points.empty() && f.support.points.back() == points[i])
      throw std::invalid_argument("duplicate support point");
    f.support.points.push_back(points[i]);
    f.coeffs.push_back(coeffs[i]);
  }
  return f;
}

Rat dot_iv(const IntVec& a, const RatVec& w) {
  assert(a.size() == w.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += Rat(a[i]) * w[i];
  return s;
}

EvalResult eval_trop(const TropicalPolynomial& f, const RatVec& w) {
  if (static_cast<int>(w.size()) != f.n)
    throw DimensionMismatchError("eval_trop: point length does not match");
  EvalResult out;
  for (std::size_t i = 0; i < f.support.points.size(); ++i) {
    Rat v = f.coeffs[i] + dot_iv(f.support.points[i], w);
    if (out.argmin.empty() || v < out.value) {
      out.value = v;
      out.argmin.assign(1, static_cast<int>(i));
    } else if (v == out.value) {
      out.argmin.push_back(static_cast<int>(i));
    }
  }
  return out;
}

bool on_hypersurface(const TropicalPolynomial& f, const RatVec& w) {
  return eval_trop(f, w).argmin.size() >= 2;
}

namespace {

// Dual region D(T) = { w : terms of T tie and are minimal among all terms }.
Polyhedron dual_region(const TropicalPolynomial& f, const std::vector<int>& t) {
  const int base = t.front();
  const IntVec& ab = f.support.points[base];
  Polyhedron p;
  p.ambient = f.n;
  for (std::size_t idx = 1; idx < t.size(); ++idx) {
    const IntVec& a = f.support.points[t[idx]];
    Constraint e;
    e.normal.resize(f.n);
    for (int j = 0; j < f.n; ++j) e.normal[j] = Rat(ab[j] - a[j]);
    e.rhs = f.coeffs[t[idx]] - f.coeffs[base];
    p.eqs.push_back(std::move(e));
  }
  std::set<int> in_t(t.begin(), t.end());
  for (std::size_t g = 0; g < f.support.points.size(); ++g) {
    if (in_t.count(static_cast<int>(g))) continue;
    const IntVec& a = f.support.points[g];
    Constraint c;
    c.normal.resize(f.n);
    for (int j = 0; j < f.n; ++j) c.normal[j] = Rat(a[j] - ab[j]);
    c.rhs = f.coeffs[base] - f.coeffs[g];
    p.ineqs.push_back(std::move(c));
  }
  return p;
}

void enumerate_subsets(int m, int max_size,
                       const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> stack;
  std::function<void(int)> rec = [&](int start) {
    if (!stack.empty()) fn(stack);
    if (static_cast<int>(stack.size()) == max_size) return;
    for (int i = start; i < m; ++i) {
      stack.push_back(i);
      rec(i + 1);
      stack.pop_back();
    }
  };
  rec(0);
  (void)m;
}

}  // namespace

DualSubdivision regular_subdivision(const TropicalPolynomial& f) {
  const int m = static_cast<int>(f.support.points.size());
  std::set<std::vector<int>> cells;
  enumerate_subsets(m, f.n + 1, [&](const std::vector<int>& t) {
    Polyhedron d = dual_region(f, t);
    AffineSpan span = affine_span(d);
    if (span.empty) return;
    cells.insert(eval_trop(f, span.interior).argmin);
  });
  // keep inclusion-maximal argmin sets
  DualSubdivision out;
  for (const auto& c : cells) {
    bool maximal = true;
    for (const auto& d : cells) {
      if (&c == &d || d.size() <= c.size()) continue;
      if (std::includes(d.begin(), d.end(), c.begin(), c.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.cells.push_back(c);
  }
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

TropicalHypersurface hypersurface(const TropicalPolynomial& f) {
  TropicalHypersurface surf;
  surf.n = f.n;
  surf.source = f;
  const int m = static_cast<int>(f.support.points.size());

  std::map<std::vector<int>, HyperCell> found;  // keyed by marked set
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Polyhedron d = dual_region(f, {i, j});
      InteriorProbe probe = strict_interior(d);
      if (probe.empty) continue;
      RatVec w;
      if (probe.strict) {
        w = probe.point;
      } else {
        // extra support points tie on all of D; the cell survives only if
        // they are collinear with the pair (affine span stays a hyperplane)
        AffineSpan span = affine_span(d);
        if (f.n - rank(span.normals) != f.n - 1) continue;
        w = span.interior;
      }
      std::vector<int> marked = eval_trop(f, w).argmin;
      assert(marked.size() >= 2);
      if (found.count(marked)) continue;

      // order the collinear marked points along their common direction
      const IntVec& a0 = f.support.points[marked[0]];
      const IntVec& a1 = f.support.points[marked[1]];
      IntVec dir(f.n);
      for (int c = 0; c < f.n; ++c) dir[c] = a1[c] - a0[c];
      dir = primitive_integer(dir);
      int lo = marked[0], hi = marked[0];
      Int tlo = 0, thi = 0;
      for (int idx : marked) {
        Int t = 0;
        for (int c = 0; c < f.n; ++c)
          t += dir[c] * (f.support.points[idx][c] - a0[c]);
        if (t < tlo) {
          tlo = t;
          lo = idx;
        }
        if (t > thi) {
          thi = t;
          hi = idx;
        }
      }

      HyperCell cell;
      cell.marked = marked;
      cell.dual_from = f.support.points[lo];
      cell.dual_to = f.support.points[hi];
      IntVec edge(f.n);
      for (int c = 0; c < f.n; ++c) edge[c] = cell.dual_to[c] - cell.dual_from[c];
      cell.weight = content(edge);
      cell.cell = canonicalize(dual_region(f, marked));
      cell.interior = std::move(w);
      // affine span is the single tie hyperplane spanned by the marked set
      RatMat normal_row(1, RatVec(f.n));
      for (int c = 0; c < f.n; ++c) normal_row[0][c] = Rat(edge[c]);
      cell.dir_basis = nullspace(normal_row, f.n);
      cell.dir_lattice = integer_kernel(IntMat{primitive_integer(edge)}, f.n);
      found.emplace(std::move(marked), std::move(cell));
    }
  }

  for (auto& [key, cell] : found) surf.cells.push_back(std::move(cell));
  std::sort(surf.cells.begin(), surf.cells.end(),
            [](const HyperCell& a, const HyperCell& b) {
              return canonical_key(a.cell) < canonical_key(b.cell);
            });
  return surf;
}

}  // namespace trop
