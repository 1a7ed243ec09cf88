#include "arrfree/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace arrfree {

namespace {

const Triple kUnit[3] = {
    {Scalar(1), Scalar(0), Scalar(0)},
    {Scalar(0), Scalar(1), Scalar(0)},
    {Scalar(0), Scalar(0), Scalar(1)},
};

double real(const Scalar& s) { return s.as_quad().to_double(); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

// Chart (X, Y) = (f1 . P, f2 . P) / (c . P) where c is the line at infinity.
struct Chart {
  Triple f1, f2, c;
  Triple col0, col1, col2;  // columns of the inverse, up to a common factor

  explicit Chart(const Triple& inf) : c(inf) {
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& p : pairs) {
      if (!det3(kUnit[p[0]], kUnit[p[1]], inf).is_zero()) {
        f1 = kUnit[p[0]];
        f2 = kUnit[p[1]];
        break;
      }
    }
    col0 = cross(f2, c);
    col1 = cross(c, f1);
    col2 = cross(f1, f2);
  }

  bool finite(const Point& p) const { return !dot(c, p.coords()).is_zero(); }

  std::pair<Scalar, Scalar> coords(const Point& p) const {
    Scalar w = dot(c, p.coords());
    return {dot(f1, p.coords()) / w, dot(f2, p.coords()) / w};
  }

  // a X + b Y + e = 0
  Triple affine_form(const Line& l) const {
    return {dot(l.coeffs(), col0), dot(l.coeffs(), col1), dot(l.coeffs(), col2)};
  }
};

std::optional<Segment> clip(int line, double a, double b, double e, const Viewport& v) {
  std::vector<std::pair<double, double>> hits;
  const double eps = 1e-12 * (1 + std::abs(v.xmax - v.xmin) + std::abs(v.ymax - v.ymin));
  auto keep = [&](double x, double y) {
    if (x >= v.xmin - eps && x <= v.xmax + eps && y >= v.ymin - eps && y <= v.ymax + eps) hits.emplace_back(x, y);
  };
  if (b != 0) {
    keep(v.xmin, -(a * v.xmin + e) / b);
    keep(v.xmax, -(a * v.xmax + e) / b);
  }
  if (a != 0) {
    keep(-(b * v.ymin + e) / a, v.ymin);
    keep(-(b * v.ymax + e) / a, v.ymax);
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  const auto& p = hits.front();
  const auto& q = hits.back();
  if (std::hypot(p.first - q.first, p.second - q.second) <= eps) return std::nullopt;
  return Segment{line, p.first, p.second, q.first, q.second};
}

// First of x + k y + k^2 z (k = 1, 2, ...) outside A and through no lattice point.
Line generic_line(const Arrangement& a, const LatticeData& l) {
  for (long k = 1;; ++k) {
    const Line cand(Scalar(1), Scalar(k), Scalar(k * k));
    bool clear = !a.contains(cand);
    for (const auto& p : l.points) clear = clear && !incident(p.point, cand);
    if (clear) return cand;
  }
}

}  // namespace

SvgScene build_scene(const Arrangement& a, const LatticeData& l, const RenderOptions& opts) {
  if (a.ctx().parametric) fail(ErrorKind::NotDrawable, "not drawable: symbolic parameter in the field");
  if (a.ctx().disc < 0) fail(ErrorKind::NotDrawable, "not drawable: complex field " + a.ctx().to_string());
  if (a.empty()) fail(ErrorKind::NotDrawable, "not drawable: empty arrangement");

  SvgScene s;
  if (opts.generic_chart) {
    s.infinity = generic_line(a, l);
  } else {
    if (opts.infinity_line) {
      s.infinity_line = *opts.infinity_line;
      if (s.infinity_line < 0 || s.infinity_line >= a.size()) fail(ErrorKind::InvalidArgument, "infinity line out of range");
    } else {
      s.infinity_line = std::max(0, a.find(Line(Scalar(0), Scalar(0), Scalar(1))));
    }
    s.infinity = a[s.infinity_line];
  }
  const Chart chart(s.infinity.coeffs());

  std::vector<std::pair<double, double>> finite(l.points.size());
  std::vector<char> is_finite(l.points.size(), 0);
  for (std::size_t p = 0; p < l.points.size(); ++p) {
    if (!chart.finite(l.points[p].point)) {
      s.points_at_infinity.push_back(static_cast<int>(p));
      continue;
    }
    auto [x, y] = chart.coords(l.points[p].point);
    finite[p] = {real(x), real(y)};
    is_finite[p] = 1;
  }

  if (opts.viewport) {
    s.view = *opts.viewport;
  } else {
    bool any = false;
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    for (std::size_t p = 0; p < finite.size(); ++p) {
      if (!is_finite[p]) continue;
      auto [x, y] = finite[p];
      if (!any) {
        x0 = x1 = x;
        y0 = y1 = y;
        any = true;
      }
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
    if (any) {
      const double span = std::max({x1 - x0, y1 - y0, 1.0});
      const double cx = (x0 + x1) / 2;
      const double cy = (y0 + y1) / 2;
      const double half = span * 0.65;
      s.view = {cx - half, cx + half, cy - half, cy + half};
    }
  }
  if (!(s.view.xmax > s.view.xmin) || !(s.view.ymax > s.view.ymin)) {
    fail(ErrorKind::InvalidArgument, "empty viewport");
  }

  for (int h = 0; h < a.size(); ++h) {
    if (h == s.infinity_line) continue;
    Triple f = chart.affine_form(a[h]);
    if (auto seg = clip(h, real(f[0]), real(f[1]), real(f[2]), s.view)) s.segments.push_back(*seg);
  }
  for (std::size_t p = 0; p < finite.size(); ++p) {
    if (!is_finite[p]) continue;
    auto [x, y] = finite[p];
    if (x < s.view.xmin || x > s.view.xmax || y < s.view.ymin || y > s.view.ymax) continue;
    s.markers.push_back({static_cast<int>(p), x, y, l.points[p].mu()});
  }
  return s;
}

std::string scene_to_svg(const SvgScene& s, int width) {
  const double w = width;
  const double h = w * (s.view.ymax - s.view.ymin) / (s.view.xmax - s.view.xmin);
  const double pad = 30;
  auto px = [&](double x) { return pad + (x - s.view.xmin) / (s.view.xmax - s.view.xmin) * w; };
  auto py = [&](double y) { return pad + (s.view.ymax - y) / (s.view.ymax - s.view.ymin) * h; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w + 2 * pad) << "\" height=\""
     << fmt(h + 2 * pad + 20) << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g stroke=\"black\" stroke-width=\"1.2\">\n";
  for (const auto& seg : s.segments) {
    os << "<line id=\"H" << seg.line + 1 << "\" x1=\"" << fmt(px(seg.x0)) << "\" y1=\"" << fmt(py(seg.y0))
       << "\" x2=\"" << fmt(px(seg.x1)) << "\" y2=\"" << fmt(py(seg.y1)) << "\"/>\n";
  }
  os << "</g>\n<g fill=\"#c0392b\">\n";
  for (const auto& m : s.markers) {
    os << "<circle cx=\"" << fmt(px(m.x)) << "\" cy=\"" << fmt(py(m.y)) << "\" r=\"" << fmt(1.5 + 1.5 * m.mu)
       << "\" data-mu=\"" << m.mu << "\"/>\n";
  }
  os << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#1f4e79\">\n";
  for (const auto& seg : s.segments) {
    os << "<text x=\"" << fmt(px(seg.x1) + 3) << "\" y=\"" << fmt(py(seg.y1) - 3) << "\">H" << seg.line + 1
       << "</text>\n";
  }
  os << "<text x=\"" << fmt(pad) << "\" y=\"" << fmt(h + 2 * pad + 12) << "\">";
  if (s.infinity_line >= 0) {
    os << "H" << s.infinity_line + 1 << " at infinity, " << s.points_at_infinity.size() << " points at infinity";
  } else {
    os << "generic chart, no line at infinity";
  }
  os << "</text>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_svg(const Arrangement& a, const RenderOptions& opts) {
  return scene_to_svg(build_scene(a, compute_lattice(a), opts), opts.width);
}

}  // namespace arrfree
