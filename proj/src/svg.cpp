#include "gkm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "gkm/error.hpp"
#include "gkm/moment_geometry.hpp"

namespace gkm {

namespace {

constexpr double kCanvas = 480.0;
constexpr double kMargin = 60.0;

// Fixed-precision formatting keeps the output independent of the stream locale.
std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const OrientedGkmGraph& og) {
  const auto& g = og.graph();
  if (g.rank() != 2) throw Error(ErrorKind::ScopeError, "rendering needs rank 2");

  // Only the drawing goes through doubles; every decision above is exact.
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const double x = g.mu(v)[0].to_double(), y = g.mu(v)[1].to_double();
    if (v == 0 || x < min_x) min_x = x;
    if (v == 0 || x > max_x) max_x = x;
    if (v == 0 || y < min_y) min_y = y;
    if (v == 0 || y > max_y) max_y = y;
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double scale = (kCanvas - 2 * kMargin) / span;
  auto sx = [&](std::size_t v) { return kMargin + (g.mu(v)[0].to_double() - min_x) * scale; };
  auto sy = [&](std::size_t v) { return kCanvas - kMargin - (g.mu(v)[1].to_double() - min_y) * scale; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kCanvas) << "\" height=\""
      << num(kCanvas) << "\" viewBox=\"0 0 " << num(kCanvas) << " " << num(kCanvas) << "\">\n"
      << "  <defs>\n"
      << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"8\" markerHeight=\"8\" "
         "orient=\"auto\">\n"
      << "      <path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/>\n"
      << "    </marker>\n"
      << "  </defs>\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const auto hull = convex_hull(g);
  if (hull.size() >= 3) {
    out << "  <polygon class=\"hull\" fill=\"#dde8f4\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < hull.size(); ++i) out << (i ? " " : "") << num(sx(hull[i])) << "," << num(sy(hull[i]));
    out << "\"/>\n";
  }

  const double radius = 5.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::size_t a = og.initial(e), b = og.terminal(e);
    const double x1 = sx(a), y1 = sy(a), x2 = sx(b), y2 = sy(b);
    const double len = std::hypot(x2 - x1, y2 - y1);
    const double trim = len > 0 ? (radius + 2) / len : 0;
    out << "  <line class=\"edge\" x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\""
        << num(x2 - (x2 - x1) * trim) << "\" y2=\"" << num(y2 - (y2 - y1) * trim)
        << "\" stroke=\"#333\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
  }

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  <circle class=\"vertex\" cx=\"" << num(sx(v)) << "\" cy=\"" << num(sy(v)) << "\" r=\"" << num(radius)
        << "\" fill=\"black\"/>\n"
        << "  <text x=\"" << num(sx(v) + 8) << "\" y=\"" << num(sy(v) - 8)
        << "\" font-family=\"sans-serif\" font-size=\"13\">" << escape(g.id(v)) << " (" << og.down_degree(v)
        << ")</text>\n";
  }

  const double xi_x = og.xi()[0].to_double(), xi_y = og.xi()[1].to_double();
  const double xi_len = std::hypot(xi_x, xi_y);
  const double ox = 30, oy = kCanvas - 20;
  out << "  <line class=\"xi\" x1=\"" << num(ox) << "\" y1=\"" << num(oy) << "\" x2=\"" << num(ox + 30 * xi_x / xi_len)
      << "\" y2=\"" << num(oy - 30 * xi_y / xi_len)
      << "\" stroke=\"#b03030\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n"
      << "  <text x=\"" << num(ox + 36) << "\" y=\"" << num(oy) << "\" font-family=\"sans-serif\" font-size=\"12\">xi = "
      << escape(og.xi().to_string()) << "</text>\n"
      << "</svg>\n";
  return out.str();
}

}  // namespace gkm
