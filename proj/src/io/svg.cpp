#include "mvse/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "mvse/core/errors.hpp"
#include "mvse/core/linalg.hpp"

namespace mvse::io {

namespace {

constexpr double kCanvas = 480.0;

struct Frame {
  double half = 1.0;  // world half-width shown
  double x(double wx) const { return (wx + half) / (2 * half) * kCanvas; }
  double y(double wy) const { return (half - wy) / (2 * half) * kCanvas; }
};

std::string header() {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas << "\" height=\""
      << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out.str();
}

std::string polygon(const std::vector<Vector>& verts, const Vector& shift, const Frame& f, const char* fill,
                    const char* stroke) {
  std::ostringstream out;
  out << "<polygon points=\"";
  char buf[64];
  for (const auto& v : verts) {
    std::snprintf(buf, sizeof buf, "%.4f,%.4f ", f.x(Rational(v[0] + shift[0]).get_d()), f.y(Rational(v[1] + shift[1]).get_d()));
    out << buf;
  }
  out << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"1\"/>\n";
  return out.str();
}

double extent(const std::vector<Vector>& verts) {
  double e = 0;
  for (const auto& v : verts) e = std::max({e, std::abs(v[0].get_d()), std::abs(v[1].get_d())});
  return e;
}

}  // namespace

std::string zonotope_svg(const Zonotope& z) {
  if (z.dim() != 2) throw PreconditionError("io", "SVG output needs d = 2");
  const auto verts = vertices2d(z);
  Frame f{1.1 * extent(verts)};
  return header() + polygon(verts, Vector{0, 0}, f, "#9ecae1", "#08519c") + "</svg>\n";
}

std::string tiling_svg(const Zonotope& z, const Lattice& lattice, const Rational& radius) {
  if (z.dim() != 2) throw PreconditionError("io", "SVG output needs d = 2");
  const auto verts = vertices2d(z);
  const double r = radius.get_d();
  const double reach = extent(verts);
  Frame f{1.05 * r};
  std::string body = header();
  // Translates B k whose bounding box meets the region.
  const Matrix inv = inverse(lattice.basis());
  long bound = 0;
  for (Index i = 0; i < 2; ++i) {
    double s = 0;
    for (Index j = 0; j < 2; ++j) s += std::abs(inv(i, j).get_d()) * (r + reach);
    bound = std::max(bound, static_cast<long>(std::ceil(s)) + 1);
  }
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      const Vector shift = lattice.basis() * Vector{Rational(a), Rational(b)};
      const double sx = shift[0].get_d(), sy = shift[1].get_d();
      if (std::abs(sx) > r + reach || std::abs(sy) > r + reach) continue;
      const bool origin = a == 0 && b == 0;
      body += polygon(verts, shift, f, origin ? "#fdae6b" : "#deebf7", "#08519c");
    }
  }
  std::ostringstream frame;
  frame << "<rect x=\"" << f.x(-r) << "\" y=\"" << f.y(r) << "\" width=\"" << f.x(r) - f.x(-r) << "\" height=\""
        << f.y(-r) - f.y(r) << "\" fill=\"none\" stroke=\"#636363\" stroke-dasharray=\"4 3\"/>\n";
  return body + frame.str() + "</svg>\n";
}

}  // namespace mvse::io
