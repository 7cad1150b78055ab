#include "trop/polyhedron.hpp"

#include <algorithm>
#include <sstream>

namespace trop {

namespace {

void check_constraints(int ambient, const std::vector<Constraint>& cs,
                       const char* kind) {
  for (const Constraint& c : cs) {
    if (static_cast<int>(c.normal.size()) != ambient)
      throw DimensionMismatchError(std::string(kind) +
                                   " normal length does not match ambient dimension");
  }
}

// (primitive integer normal, rational rhs, is_equality) with equality
// normals sign-normalized so the first nonzero entry is positive.
struct CanonRow {
  IntVec normal;
  Rat rhs;
  bool equality;
};

CanonRow canon_row(const Constraint& c, bool equality) {
  CanonRow row;
  row.equality = equality;
  IntVec prim = primitive_integer(c.normal);
  // scale factor lambda > 0 with prim = lambda * normal; rhs scales the same.
  // Recover lambda from any nonzero coordinate.
  Rat lambda = 0;
  for (std::size_t i = 0; i < c.normal.size(); ++i) {
    if (c.normal[i] != 0) {
      lambda = Rat(prim[i]) / c.normal[i];
      break;
    }
  }
  if (lambda == 0) {  // zero normal: keep as 0 >= rhs / 0 == rhs
    row.normal = IntVec(c.normal.size(), Int(0));
    row.rhs = c.rhs;
    if (row.rhs != 0) {
      // normalize magnitude to +-1 for a canonical key
      row.rhs = row.rhs > 0 ? Rat(1) : Rat(-1);
      if (equality) row.rhs = 1;  // 0 == nonzero, any positive token
    }
    return row;
  }
  row.normal = std::move(prim);
  row.rhs = c.rhs * lambda;
  if (equality) {
    // sign-normalize
    for (const Int& x : row.normal) {
      if (x == 0) continue;
      if (x < 0) {
        for (Int& y : row.normal) y = -y;
        row.rhs = -row.rhs;
      }
      break;
    }
  }
  return row;
}

bool row_less(const CanonRow& a, const CanonRow& b) {
  if (a.equality != b.equality) return a.equality > b.equality;
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.rhs < b.rhs;
}

bool row_eq(const CanonRow& a, const CanonRow& b) {
  return a.equality == b.equality && a.normal == b.normal && a.rhs == b.rhs;
}

}  // namespace

Polyhedron whole_space(int ambient) {
  Polyhedron p;
  p.ambient = ambient;
  return p;
}

Polyhedron make_polyhedron(int ambient, std::vector<Constraint> eqs,
                           std::vector<Constraint> ineqs) {
  check_constraints(ambient, eqs, "equality");
  check_constraints(ambient, ineqs, "inequality");
  Polyhedron p;
  p.ambient = ambient;
  p.eqs = std::move(eqs);
  p.ineqs = std::move(ineqs);
  return p;
}

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient != q.ambient)
    throw DimensionMismatchError("intersect: ambient dimensions differ");
  Polyhedron r = p;
  r.eqs.insert(r.eqs.end(), q.eqs.begin(), q.eqs.end());
  r.ineqs.insert(r.ineqs.end(), q.ineqs.begin(), q.ineqs.end());
  return r;
}

Polyhedron translate(const Polyhedron& p, const RatVec& v) {
  if (static_cast<int>(v.size()) != p.ambient)
    throw DimensionMismatchError("translate: vector length does not match");
  Polyhedron r = p;
  for (Constraint& c : r.eqs) c.rhs += dot(c.normal, v);
  for (Constraint& c : r.ineqs) c.rhs += dot(c.normal, v);
  return r;
}

bool contains(const Polyhedron& p, const RatVec& x) {
  for (const Constraint& c : p.eqs)
    if (dot(c.normal, x) != c.rhs) return false;
  for (const Constraint& c : p.ineqs)
    if (dot(c.normal, x) < c.rhs) return false;
  return true;
}

Polyhedron canonicalize(const Polyhedron& p) {
  std::vector<CanonRow> rows;
  rows.reserve(p.eqs.size() + p.ineqs.size());
  for (const Constraint& c : p.eqs) rows.push_back(canon_row(c, true));
  for (const Constraint& c : p.ineqs) rows.push_back(canon_row(c, false));
  std::sort(rows.begin(), rows.end(), row_less);
  rows.erase(std::unique(rows.begin(), rows.end(), row_eq), rows.end());
  Polyhedron out;
  out.ambient = p.ambient;
  for (const CanonRow& r : rows) {
    Constraint c;
    c.normal = to_rat(r.normal);
    c.rhs = r.rhs;
    (r.equality ? out.eqs : out.ineqs).push_back(std::move(c));
  }
  return out;
}

std::string canonical_key(const Polyhedron& p) {
  Polyhedron c = canonicalize(p);
  std::ostringstream os;
  os << c.ambient << ";";
  auto emit = [&os](const std::vector<Constraint>& cs, char tag) {
    for (const Constraint& con : cs) {
      os << tag;
      for (const Rat& x : con.normal) os << " " << rat_to_string(x);
      os << " | " << rat_to_string(con.rhs) << ";";
    }
  };
  emit(c.eqs, '=');
  emit(c.ineqs, '>');
  return os.str();
}

}  // namespace trop
