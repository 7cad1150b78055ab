#include "trop/linalg.hpp"

#include <cassert>

namespace trop {

Rat dot(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const RatVec& a, const Rat& c) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

bool is_zero(const RatVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

RatMat to_rat(const IntMat& m) {
  RatMat r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = to_rat(m[i]);
  return r;
}

Rref rref(RatMat m) {
  Rref out;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    const Rat inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.mat = std::move(m);
  return out;
}

int rank(const RatMat& m) { return rref(m).rank; }

std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  RatMat aug(a);
  for (int i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  if (rows == 0) return RatVec(cols, Rat(0));
  Rref rr = rref(std::move(aug));
  for (int i = 0; i < rr.rank; ++i)
    if (rr.pivot_cols[i] == cols) return std::nullopt;  // row 0 ... 0 | 1
  RatVec x(cols, Rat(0));
  for (int i = 0; i < rr.rank; ++i) x[rr.pivot_cols[i]] = rr.mat[i][cols];
  return x;
}

RatMat nullspace(const RatMat& a, int ncols) {
  if (a.empty()) {
    RatMat basis;
    for (int i = 0; i < ncols; ++i) {
      RatVec e(ncols, Rat(0));
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  Rref rr = rref(a);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  RatMat basis;
  for (int freec = 0; freec < ncols; ++freec) {
    if (is_pivot[freec]) continue;
    RatVec v(ncols, Rat(0));
    v[freec] = 1;
    for (int i = 0; i < rr.rank; ++i) v[rr.pivot_cols[i]] = -rr.mat[i][freec];
    basis.push_back(std::move(v));
  }
  return basis;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;  // 0 for the zero vector
}

IntVec primitive_integer(const IntVec& v) {
  Int g = content(v);
  IntVec out(v.size());
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVec primitive_integer(const RatVec& v) {
  Int l = 1;
  for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(l);
    s.canonicalize();
    assert(s.get_den() == 1);
    w[i] = s.get_num();
  }
  return primitive_integer(w);
}

}  // namespace trop
