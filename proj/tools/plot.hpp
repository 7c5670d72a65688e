#pragma once

// SVG pictures of the projective simplex conv(Δ̂).
//
// Rank 3: the simplex is drawn as a fixed equilateral triangle. Rank 2: a horizontal segment.
// Rank 4: barycentric coordinates are sent through the fixed projection
//     α̂_0 -> (0, 0), α̂_1 -> (1, 0), α̂_2 -> (1/2, √3/2), α̂_3 -> (1/2, √3/6)
// (a tetrahedron seen from above its first face), so α̂_3 lands at the centre of that face.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "coxwo/imagcone.hpp"

namespace coxwo::plot {

struct Point {
  double x = 0, y = 0;
};

struct Highlight {
  std::vector<std::vector<double>> points;  // normalized
  std::string fill = "#f08080";
  std::string label;
};

struct Trail {
  std::vector<std::vector<double>> points;
  std::string stroke = "#1f4e9c";
};

struct Figure {
  std::vector<std::vector<double>> roots;  // normalized roots
  std::vector<int> depths;
  std::vector<Highlight> sets;
  std::vector<std::vector<double>> k_polygon;
  std::vector<std::vector<double>> orbit;
  std::vector<Trail> trails;
  bool conic = true;
  std::string title;
};

class Canvas {
 public:
  explicit Canvas(std::size_t rank) : rank_(rank) {
    const double h = std::sqrt(3.0) / 2;
    switch (rank) {
      case 2: corners_ = {{0, 0.5}, {1, 0.5}}; break;
      case 3: corners_ = {{0, h}, {1, h}, {0.5, 0}}; break;
      default: corners_ = {{0, h}, {1, h}, {0.5, 0}, {0.5, h - std::sqrt(3.0) / 6}}; break;
    }
  }

  Point map(const std::vector<double>& u) const {
    Point p;
    for (std::size_t s = 0; s < u.size() && s < corners_.size(); ++s) {
      p.x += u[s] * corners_[s].x;
      p.y += u[s] * corners_[s].y;
    }
    return {kMargin + p.x * kSize, kMargin + p.y * kSize};
  }

  const std::vector<Point>& corners() const { return corners_; }
  static constexpr double kSize = 500, kMargin = 40;

 private:
  std::size_t rank_;
  std::vector<Point> corners_;
};

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Monotone chain hull of the projected points.
inline std::vector<Point> hull(std::vector<Point> p) {
  std::sort(p.begin(), p.end(), [](const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  if (p.size() < 3) return p;
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<Point> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i - 1]) <= 0) --k;
    h[k++] = p[i - 1];
  }
  h.resize(k - 1);
  return h;
}

/// Polylines of Q̂ ∩ conv(Δ̂) in rank 3: rays from a point z with B(z,z) < 0 meet the conic once.
inline std::vector<std::vector<std::vector<double>>> conic_arcs(const CoxeterSystem& sys, const std::vector<double>& z,
                                                                int samples = 720) {
  std::vector<std::vector<std::vector<double>>> arcs;
  if (sys.rank() != 3) return arcs;
  std::vector<std::vector<double>> g(3, std::vector<double>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) g[i][j] = sys.gram(i, j).to_double();
  auto form = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) s += g[i][j] * a[i] * b[j];
    return s;
  };
  const double bzz = form(z, z);
  if (!(bzz < 0)) return arcs;
  std::vector<std::vector<double>> cur;
  for (int k = 0; k <= samples; ++k) {
    const double th = 2 * M_PI * k / samples;
    // zero-sum direction spanned by (1,-1,0) and (1,1,-2)
    const std::vector<double> d{std::cos(th) + std::sin(th) / std::sqrt(3.0), -std::cos(th) + std::sin(th) / std::sqrt(3.0),
                                -2 * std::sin(th) / std::sqrt(3.0)};
    const double a = form(d, d), b = form(z, d);
    const double disc = b * b - a * bzz;
    double t = -1;
    if (std::fabs(a) < 1e-14) {
      if (b > 0) t = -bzz / (2 * b);
    } else if (disc >= 0) {
      const double r1 = (-b + std::sqrt(disc)) / a, r2 = (-b - std::sqrt(disc)) / a;
      t = r1 > 0 ? (r2 > 0 ? std::min(r1, r2) : r1) : r2;
    }
    std::vector<double> x{z[0] + t * d[0], z[1] + t * d[1], z[2] + t * d[2]};
    const bool inside = t > 0 && x[0] >= -1e-12 && x[1] >= -1e-12 && x[2] >= -1e-12;
    if (inside) {
      cur.push_back(std::move(x));
    } else if (!cur.empty()) {
      arcs.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) arcs.push_back(std::move(cur));
  return arcs;
}

inline std::string render(const CoxeterSystem& sys, const Figure& fig, const std::vector<double>& conic_centre) {
  const std::size_t n = sys.rank();
  Canvas cv(n);
  const double side = Canvas::kSize + 2 * Canvas::kMargin;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << side << "\" height=\"" << side
      << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  if (!fig.title.empty()) out << "<title>" << fig.title << "</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // simplex outline
  std::vector<Point> corners;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<double> e(n, 0.0);
    e[s] = 1;
    corners.push_back(cv.map(e));
  }
  out << "<g id=\"simplex\" fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out << "<line x1=\"" << fmt(corners[i].x) << "\" y1=\"" << fmt(corners[i].y) << "\" x2=\"" << fmt(corners[j].x)
          << "\" y2=\"" << fmt(corners[j].y) << "\"/>\n";
  out << "</g>\n";

  if (!fig.k_polygon.empty()) {
    std::vector<Point> pts;
    for (const auto& u : fig.k_polygon) pts.push_back(cv.map(u));
    out << "<polygon id=\"K\" fill=\"#ffe066\" fill-opacity=\"0.5\" stroke=\"black\" points=\"";
    for (const auto& p : hull(pts)) out << fmt(p.x) << ',' << fmt(p.y) << ' ';
    out << "\"/>\n";
  }

  for (std::size_t k = 0; k < fig.sets.size(); ++k) {
    const auto& h = fig.sets[k];
    std::vector<Point> pts;
    for (const auto& u : h.points) pts.push_back(cv.map(u));
    out << "<g id=\"set" << k << "\">\n";
    if (pts.size() >= 3) {
      out << "<polygon fill=\"" << h.fill << "\" fill-opacity=\"0.45\" stroke=\"" << h.fill << "\" points=\"";
      for (const auto& p : hull(pts)) out << fmt(p.x) << ',' << fmt(p.y) << ' ';
      out << "\"/>\n";
    } else if (pts.size() == 2) {
      out << "<line stroke=\"" << h.fill << "\" stroke-width=\"3\" x1=\"" << fmt(pts[0].x) << "\" y1=\"" << fmt(pts[0].y)
          << "\" x2=\"" << fmt(pts[1].x) << "\" y2=\"" << fmt(pts[1].y) << "\"/>\n";
    }
    for (const auto& p : pts)
      out << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"4\" fill=\"" << h.fill << "\"/>\n";
    out << "</g>\n";
  }

  if (fig.conic && n == 3) {
    out << "<g id=\"isotropic\" fill=\"none\" stroke=\"#2a9d8f\" stroke-width=\"1.2\">\n";
    for (const auto& arc : conic_arcs(sys, conic_centre)) {
      out << "<polyline points=\"";
      for (const auto& u : arc) {
        const Point p = cv.map(u);
        out << fmt(p.x) << ',' << fmt(p.y) << ' ';
      }
      out << "\"/>\n";
    }
    out << "</g>\n";
  }

  out << "<g id=\"roots\" fill=\"black\">\n";
  for (std::size_t k = 0; k < fig.roots.size(); ++k) {
    const Point p = cv.map(fig.roots[k]);
    const double r = std::max(0.8, 3.5 - 0.35 * fig.depths[k]);
    out << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"" << fmt(r) << "\"/>\n";
  }
  out << "</g>\n";

  if (!fig.orbit.empty()) {
    out << "<g id=\"orbit\" fill=\"#e76f51\">\n";
    for (const auto& u : fig.orbit) {
      const Point p = cv.map(u);
      out << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"1.5\"/>\n";
    }
    out << "</g>\n";
  }

  for (const auto& t : fig.trails) {
    out << "<polyline fill=\"none\" stroke=\"" << t.stroke << "\" stroke-width=\"1\" points=\"";
    for (const auto& u : t.points) {
      const Point p = cv.map(u);
      out << fmt(p.x) << ',' << fmt(p.y) << ' ';
    }
    out << "\"/>\n";
  }

  out << "<g id=\"labels\" font-family=\"serif\" font-size=\"16\">\n";
  for (std::size_t s = 0; s < n; ++s) {
    const double dy = corners[s].y > Canvas::kMargin + Canvas::kSize / 2 ? 22 : -10;
    out << "<text x=\"" << fmt(corners[s].x - 6) << "\" y=\"" << fmt(corners[s].y + dy) << "\">" << sys.name(s)
        << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace coxwo::plot
