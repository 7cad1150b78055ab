#include "trop/volume.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <stdexcept>

#include "trop/linalg.hpp"

namespace trop {

namespace {

Rat cross2(const RatVec& o, const RatVec& a, const RatVec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rat area2(const std::vector<RatVec>& pts) {
  // monotone chain; pts are sorted and distinct
  const int m = static_cast<int>(pts.size());
  std::vector<int> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (int ii = 0; ii < m; ++ii) {
      const int i = pass == 0 ? ii : m - 1 - ii;
      while (hull.size() >= base + 2 &&
             cross2(pts[hull[hull.size() - 2]], pts[hull.back()], pts[i]) <= 0)
        hull.pop_back();
      hull.push_back(i);
    }
    hull.pop_back();  // endpoint repeats as the start of the next pass
  }
  Rat twice = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const RatVec& a = pts[hull[i]];
    const RatVec& b = pts[hull[(i + 1) % hull.size()]];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return abs(twice) / 2;
}

Rat orient3(const RatVec& a, const RatVec& b, const RatVec& c, const RatVec& p) {
  const Rat u0 = b[0] - a[0], u1 = b[1] - a[1], u2 = b[2] - a[2];
  const Rat v0 = c[0] - a[0], v1 = c[1] - a[1], v2 = c[2] - a[2];
  const Rat w0 = p[0] - a[0], w1 = p[1] - a[1], w2 = p[2] - a[2];
  return u0 * (v1 * w2 - v2 * w1) - u1 * (v0 * w2 - v2 * w0) +
         u2 * (v0 * w1 - v1 * w0);
}

struct Tri {
  int a, b, c;
};

Rat volume3(const std::vector<RatVec>& pts) {
  const int m = static_cast<int>(pts.size());
  // initial affinely independent quadruple
  int i1 = -1, i2 = -1, i3 = -1;
  for (int i = 1; i < m && i1 < 0; ++i)
    if (pts[i] != pts[0]) i1 = i;
  for (int i = i1 + 1; i < m && i2 < 0; ++i) {
    RatMat rows = {sub(pts[i1], pts[0]), sub(pts[i], pts[0])};
    if (rank(rows) == 2) i2 = i;
  }
  if (i2 < 0) return 0;
  for (int i = i2 + 1; i < m && i3 < 0; ++i)
    if (orient3(pts[0], pts[i1], pts[i2], pts[i]) != 0) i3 = i;
  if (i3 < 0) return 0;

  std::vector<Tri> faces;
  auto add_face = [&](int a, int b, int c, int opposite) {
    if (orient3(pts[a], pts[b], pts[c], pts[opposite]) > 0) std::swap(b, c);
    faces.push_back(Tri{a, b, c});
  };
  add_face(0, i1, i2, i3);
  add_face(0, i1, i3, i2);
  add_face(0, i2, i3, i1);
  add_face(i1, i2, i3, 0);

  RatVec centroid(3, Rat(0));
  for (int idx : {0, i1, i2, i3}) centroid = add(centroid, pts[idx]);
  for (Rat& x : centroid) x /= 4;

  for (int p = 1; p < m; ++p) {
    if (p == i1 || p == i2 || p == i3) continue;
    std::vector<char> visible(faces.size(), 0);
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (orient3(pts[faces[f].a], pts[faces[f].b], pts[faces[f].c], pts[p]) > 0) {
        visible[f] = 1;
        any = true;
      }
    }
    if (!any) continue;
    // horizon = directed edges of visible faces not cancelled by another
    // visible face
    std::map<std::pair<int, int>, int> edges;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      const std::array<std::pair<int, int>, 3> es = {
          std::make_pair(faces[f].a, faces[f].b),
          std::make_pair(faces[f].b, faces[f].c),
          std::make_pair(faces[f].c, faces[f].a)};
      for (const auto& e : es) {
        auto rev = edges.find({e.second, e.first});
        if (rev != edges.end())
          edges.erase(rev);
        else
          edges[e] = 1;
      }
    }
    std::vector<Tri> next;
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (!visible[f]) next.push_back(faces[f]);
    for (const auto& [e, cnt] : edges) {
      (void)cnt;
      next.push_back(Tri{e.first, e.second, p});
    }
    faces = std::move(next);
  }

  Rat six_vol = 0;
  for (const Tri& f : faces)
    six_vol += abs(orient3(pts[f.a], pts[f.b], pts[f.c], centroid));
  return six_vol / 6;
}

}  // namespace

Rat polytope_volume(std::vector<RatVec> points, int n) {
  if (n < 1 || n > 3)
    throw std::invalid_argument("polytope_volume: only dimensions 1..3 supported");
  for (const RatVec& p : points)
    if (static_cast<int>(p.size()) != n)
      throw std::invalid_argument("polytope_volume: point length mismatch");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) return 0;

  RatMat rows;
  for (std::size_t i = 1; i < points.size(); ++i)
    rows.push_back(sub(points[i], points[0]));
  if (rank(rows) < n) return 0;

  if (n == 1) {
    return points.back()[0] - points.front()[0];
  }
  if (n == 2) return area2(points);
  return volume3(points);
}

}  // namespace trop
