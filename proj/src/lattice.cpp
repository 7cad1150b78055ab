#include "trop/lattice.hpp"

#include <cassert>
#include <stdexcept>

namespace trop {

namespace {

IntMat identity(int n) {
  IntMat m(n, IntVec(n, Int(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

Snf smith_normal_form(IntMat a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  Snf out;
  out.u = identity(rows);
  out.v = identity(cols);

  auto swap_rows = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(out.u[i], out.u[j]);
  };
  auto swap_cols = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    for (int r = 0; r < cols; ++r) std::swap(out.v[r][i], out.v[r][j]);
  };
  auto add_row = [&](int dst, int src, const Int& f) {
    for (int j = 0; j < cols; ++j) a[dst][j] += f * a[src][j];
    for (int j = 0; j < rows; ++j) out.u[dst][j] += f * out.u[src][j];
  };
  auto add_col = [&](int dst, int src, const Int& f) {
    for (int i = 0; i < rows; ++i) a[i][dst] += f * a[i][src];
    for (int i = 0; i < cols; ++i) out.v[i][dst] += f * out.v[i][src];
  };
  auto negate_row = [&](int i) {
    for (int j = 0; j < cols; ++j) a[i][j] = -a[i][j];
    for (int j = 0; j < rows; ++j) out.u[i][j] = -out.u[i][j];
  };

  const int bound = std::min(rows, cols);
  int t = 0;
  while (t < bound) {
    // smallest nonzero entry in the trailing submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        if (pi < 0 || abs(a[i][j]) < abs(a[pi][pj])) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      Int q = a[i][t] / a[t][t];  // truncated division keeps |remainder| < |pivot|
      if (q != 0) add_row(i, t, -q);
      if (a[i][t] != 0) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      Int q = a[t][j] / a[t][t];
      if (q != 0) add_col(j, t, -q);
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders exist; pick a new pivot

    // divisibility: pivot must divide the rest of the submatrix
    bool divides = true;
    for (int i = t + 1; i < rows && divides; ++i)
      for (int j = t + 1; j < cols && divides; ++j)
        if (a[i][j] % a[t][t] != 0) {
          add_row(t, i, Int(1));
          divides = false;
        }
    if (!divides) continue;

    if (a[t][t] < 0) negate_row(t);
    ++t;
  }
  out.rank = t;
  out.s = std::move(a);
  return out;
}

IntMat integer_kernel(const IntMat& a, int ncols) {
  if (a.empty()) return identity(ncols);
  assert(static_cast<int>(a[0].size()) == ncols);
  Snf snf = smith_normal_form(a);
  IntMat basis;
  for (int j = snf.rank; j < ncols; ++j) {
    IntVec col(ncols);
    for (int i = 0; i < ncols; ++i) col[i] = snf.v[i][j];
    basis.push_back(std::move(col));
  }
  return basis;
}

std::optional<Int> lattice_index(const LatticeBasis& l1, const LatticeBasis& l2,
                                 int ambient) {
  IntMat stacked;
  for (const IntMat* gen : {&l1.generators, &l2.generators})
    for (const IntVec& g : *gen) {
      if (static_cast<int>(g.size()) != ambient)
        throw DimensionMismatchError("lattice_index: generator length mismatch");
      stacked.push_back(g);
    }
  if (stacked.empty()) {
    if (ambient == 0) return Int(1);
    return std::nullopt;
  }
  Snf snf = smith_normal_form(std::move(stacked));
  if (snf.rank < ambient) return std::nullopt;
  Int index = 1;
  for (int i = 0; i < ambient; ++i) index *= snf.s[i][i];
  return abs(index);
}

IntMat direction_lattice(const Polyhedron& p) {
  AffineSpan span = affine_span(p);
  if (span.empty)
    throw EmptyPolyhedronError("direction_lattice: polyhedron is empty");
  IntMat rows;
  for (const RatVec& normal : span.normals) {
    IntVec prim = primitive_integer(normal);
    if (content(prim) != 0) rows.push_back(std::move(prim));
  }
  return integer_kernel(rows, p.ambient);
}

IntVec quotient_generator(const IntMat& basis_sigma, const IntMat& basis_tau) {
  const int d = static_cast<int>(basis_sigma.size());
  const int n = d ? static_cast<int>(basis_sigma[0].size()) : 0;
  assert(static_cast<int>(basis_tau.size()) == d - 1);

  // coordinates of each tau generator with respect to the sigma basis
  RatMat sigma_t(n, RatVec(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j) sigma_t[j][i] = Rat(basis_sigma[i][j]);
  IntMat coords;
  for (const IntVec& trow : basis_tau) {
    auto y = solve_linear(sigma_t, to_rat(trow));
    assert(y.has_value());
    IntVec yi(d);
    for (int i = 0; i < d; ++i) {
      assert((*y)[i].get_den() == 1);
      yi[i] = (*y)[i].get_num();
    }
    coords.push_back(std::move(yi));
  }

  IntMat kernel = integer_kernel(coords, d);
  assert(kernel.size() == 1);
  const IntVec& phi = kernel[0];

  // z with <phi, z> = 1 via iterated extended gcd
  IntVec z(d, Int(0));
  Int g = 0;
  for (int i = 0; i < d; ++i) {
    if (phi[i] == 0) continue;
    if (g == 0) {
      // z[i] * phi[i] = |phi[i]|
      z.assign(d, Int(0));
      z[i] = phi[i] > 0 ? 1 : -1;
      g = abs(phi[i]);
      continue;
    }
    Int gg, s, t;
    mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
               phi[i].get_mpz_t());
    for (Int& zz : z) zz *= s;
    z[i] += t;
    g = gg;
    if (g == 1) break;
  }
  assert(g == 1);  // phi is primitive

  IntVec u(n, Int(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j) u[j] += z[i] * basis_sigma[i][j];
  return u;
}

}  // namespace trop
