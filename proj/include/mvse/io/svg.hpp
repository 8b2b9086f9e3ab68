#pragma once

#include <string>

#include "mvse/tiling/tiling.hpp"
#include "mvse/zonotope/zonotope.hpp"

namespace mvse::io {

/// SVG 1.1 document with the outline of a zonogon (d = 2).
std::string zonotope_svg(const Zonotope& z);

/// SVG 1.1 document with the lattice translates of a zonogon that meet the
/// square [-radius, radius]^2; the untranslated copy is highlighted.
std::string tiling_svg(const Zonotope& z, const Lattice& lattice, const Rational& radius);

}  // namespace mvse::io
