#include "trop/svg.hpp"

#include <algorithm>
#include <sstream>

namespace trop {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 640;
constexpr int kMargin = 30;

const char* kPalette[] = {"#30559e", "#b03434", "#d9831a",
                          "#2e8066", "#7a4b9e", "#767676"};

struct SegmentGeometry {
  RatVec base;  // relative interior point
  RatVec dir;   // direction (empty for a point)
};

// t-range of { base + t*dir } inside the polyhedron and optional box
struct TRange {
  bool nonempty = true;
  std::optional<Rat> lo, hi;  // nullopt = unbounded

  void cut(const Rat& coeff, const Rat& bound) {
    // coeff * t >= bound
    if (coeff == 0) {
      if (bound > 0) nonempty = false;
      return;
    }
    Rat v = bound / coeff;
    if (coeff > 0) {
      if (!lo || v > *lo) lo = v;
    } else {
      if (!hi || v < *hi) hi = v;
    }
    if (lo && hi && *lo > *hi) nonempty = false;
  }
};

TRange trange(const Polyhedron& poly, const SegmentGeometry& geom) {
  TRange range;
  for (const Constraint& c : poly.ineqs)
    range.cut(dot(c.normal, geom.dir), c.rhs - dot(c.normal, geom.base));
  return range;
}

struct Box {
  Rat x0, x1, y0, y1;

  Polyhedron as_polyhedron() const {
    Polyhedron p;
    p.ambient = 2;
    p.ineqs = {Constraint{{Rat(1), Rat(0)}, x0}, Constraint{{Rat(-1), Rat(0)}, -x1},
               Constraint{{Rat(0), Rat(1)}, y0}, Constraint{{Rat(0), Rat(-1)}, -y1}};
    return p;
  }
};

class Canvas {
 public:
  explicit Canvas(const Box& box) : box_(box) {
    const Rat ex = box.x1 - box.x0;
    const Rat ey = box.y1 - box.y0;
    const Rat avail = Rat(std::min(kWidth, kHeight) - 2 * kMargin);
    scale_ = avail / std::max(ex, ey);
  }

  std::string x(const Rat& wx) const {
    return rat_to_decimal(Rat(kMargin) + (wx - box_.x0) * scale_, 3);
  }
  std::string y(const Rat& wy) const {
    return rat_to_decimal(Rat(kHeight - kMargin) - (wy - box_.y0) * scale_, 3);
  }

  void line(const RatVec& a, const RatVec& b, const std::string& color,
            const std::string& width, const std::string& extra = "") {
    body_ << "  <line x1=\"" << x(a[0]) << "\" y1=\"" << y(a[1]) << "\" x2=\""
          << x(b[0]) << "\" y2=\"" << y(b[1]) << "\" stroke=\"" << color
          << "\" stroke-width=\"" << width << "\"" << extra << "/>\n";
  }

  void circle(const RatVec& c, const char* radius, const std::string& fill) {
    body_ << "  <circle cx=\"" << x(c[0]) << "\" cy=\"" << y(c[1]) << "\" r=\""
          << radius << "\" fill=\"" << fill
          << "\" stroke=\"#111111\" stroke-width=\"1.5\"/>\n";
  }

  std::string finish() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" fill=\"#ffffff\"/>\n";
    out << body_.str();
    out << "</svg>\n";
    return out.str();
  }

 private:
  Box box_;
  Rat scale_;
  std::ostringstream body_;
};

std::optional<SegmentGeometry> cell_geometry(const Polyhedron& poly) {
  AffineSpan span = affine_span(poly);
  if (span.empty) return std::nullopt;
  SegmentGeometry geom;
  geom.base = span.interior;
  RatMat dirs = nullspace(span.normals, poly.ambient);
  if (dirs.size() > 1) return std::nullopt;  // not drawable as a segment
  if (dirs.size() == 1) geom.dir = dirs[0];
  return geom;
}

void collect_endpoints(const Polyhedron& poly, const SegmentGeometry& geom,
                       std::vector<RatVec>& vertices) {
  if (geom.dir.empty()) {
    vertices.push_back(geom.base);
    return;
  }
  TRange range = trange(poly, geom);
  if (!range.nonempty) return;
  if (range.lo)
    vertices.push_back(add(geom.base, scale(geom.dir, *range.lo)));
  if (range.hi)
    vertices.push_back(add(geom.base, scale(geom.dir, *range.hi)));
}

void draw_cell(Canvas& canvas, const Polyhedron& poly,
               const SegmentGeometry& geom, const Box& box,
               const std::string& color, const std::string& width,
               const std::string& extra = "") {
  if (geom.dir.empty()) return;  // points are drawn by their owners
  Polyhedron clipped = intersect(poly, box.as_polyhedron());
  TRange range = trange(clipped, geom);
  if (!range.nonempty || !range.lo || !range.hi || *range.lo > *range.hi) return;
  canvas.line(add(geom.base, scale(geom.dir, *range.lo)),
              add(geom.base, scale(geom.dir, *range.hi)), color, width, extra);
}

}  // namespace

std::string render_plot(const Instance& instance, const std::vector<long>& seeds) {
  if (instance.n != 2)
    throw std::invalid_argument("render_plot: only planar instances (n = 2)");
  const int k = static_cast<int>(instance.polynomials.size());

  std::vector<TropicalHypersurface> surfaces;
  for (const TropicalPolynomial& f : instance.polynomials)
    surfaces.push_back(hypersurface(f));
  std::vector<Polyhedron> cover = support_intersection(surfaces);

  // stable points: all k surfaces when k <= 2, else every 2-subset
  struct Point {
    RatVec at;
    bool on_all = false;
  };
  std::vector<Point> points;
  auto add_points = [&](const StableIntersection& stable) {
    for (const StableCell& cell : stable.cells) {
      if (cell.dim != 0) continue;
      Point p;
      p.at = cell.interior;
      p.on_all = false;
      for (const Polyhedron& c : cover)
        if (contains(c, p.at)) {
          p.on_all = true;
          break;
        }
      points.push_back(std::move(p));
    }
  };
  if (k <= 2) {
    std::vector<WeightedComplex> complexes;
    for (const TropicalHypersurface& s : surfaces) complexes.push_back(as_complex(s));
    add_points(stable_intersection_many(complexes, seeds));
  } else {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        add_points(stable_intersection_many(
            {as_complex(surfaces[i]), as_complex(surfaces[j])}, seeds));
  }
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return a.at < b.at;
  });

  // geometry caches and bounding box over all vertices
  std::vector<std::vector<SegmentGeometry>> surface_geoms(surfaces.size());
  std::vector<std::optional<SegmentGeometry>> cover_geoms;
  std::vector<RatVec> vertices;
  for (std::size_t s = 0; s < surfaces.size(); ++s)
    for (const HyperCell& cell : surfaces[s].cells) {
      SegmentGeometry geom;
      geom.base = cell.interior;
      if (!cell.dir_basis.empty()) geom.dir = cell.dir_basis[0];
      collect_endpoints(cell.cell, geom, vertices);
      surface_geoms[s].push_back(std::move(geom));
    }
  for (const Polyhedron& c : cover) {
    auto geom = cell_geometry(c);
    if (geom) collect_endpoints(c, *geom, vertices);
    cover_geoms.push_back(std::move(geom));
  }
  for (const Point& p : points) vertices.push_back(p.at);

  Box box;
  if (vertices.empty()) {
    box = Box{Rat(-2), Rat(2), Rat(-2), Rat(2)};
  } else {
    box.x0 = box.x1 = vertices[0][0];
    box.y0 = box.y1 = vertices[0][1];
    for (const RatVec& v : vertices) {
      box.x0 = std::min(box.x0, v[0]);
      box.x1 = std::max(box.x1, v[0]);
      box.y0 = std::min(box.y0, v[1]);
      box.y1 = std::max(box.y1, v[1]);
    }
    Rat pad_x = (box.x1 - box.x0) / 4;
    Rat pad_y = (box.y1 - box.y0) / 4;
    if (pad_x == 0) pad_x = 1;
    if (pad_y == 0) pad_y = 1;
    box.x0 -= pad_x;
    box.x1 += pad_x;
    box.y0 -= pad_y;
    box.y1 += pad_y;
  }

  Canvas canvas(box);
  for (std::size_t s = 0; s < surfaces.size(); ++s) {
    const std::string color = kPalette[s % 6];
    for (std::size_t c = 0; c < surfaces[s].cells.size(); ++c)
      draw_cell(canvas, surfaces[s].cells[c].cell, surface_geoms[s][c], box,
                color, "2");
  }
  for (std::size_t c = 0; c < cover.size(); ++c) {
    if (!cover_geoms[c]) continue;
    if (cover_geoms[c]->dir.empty()) continue;
    draw_cell(canvas, cover[c], *cover_geoms[c], box, "#111111", "4.5",
              " stroke-opacity=\"0.85\"");
  }
  for (const Point& p : points)
    canvas.circle(p.at, "5", p.on_all ? "#ffffff" : "#111111");
  return canvas.finish();
}

}  // namespace trop
