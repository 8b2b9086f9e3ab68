#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "mvse/bmdist/bmdist.hpp"
#include "mvse/core/matrix.hpp"
#include "mvse/core/minors.hpp"
#include "mvse/mvse/hexagon.hpp"
#include "mvse/tiling/tiling.hpp"
#include "mvse/tumat/tumat.hpp"
#include "mvse/zonotope/zonotope.hpp"

namespace mvse::io {

using Json = nlohmann::ordered_json;

// Rationals travel as strings ("p" or "p/q"); plain JSON integers are
// accepted on input.
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);
Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// {"rows": m, "cols": d, "data": [[...], ...]}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
/// Comma-separated rationals, one matrix row per line; blank lines and lines
/// starting with '#' are skipped.
Matrix matrix_from_csv(std::string_view text);

/// {"d": d, "generators": [[...], ...]}
Json zonotope_to_json(const Zonotope& z);
Zonotope zonotope_from_json(const Json& j);

/// {"basis": matrix JSON}
Json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const Json& j);

/// 1-based index list.
Json subset_to_json(const Subset& s);
Subset subset_from_json(const Json& j);

Json plucker_to_json(const PluckerVector& p);
Json witness_to_json(const TUWitness& w);
Json refusal_to_json(const Refusal& r);
Json gomory_to_json(const GomoryCertificate& c, const Matrix& d);
Json classification_to_json(const HexagonClassification& c);
Json hexagon_report_to_json(const HexagonReport& r);
Json verdict_to_json(const TileVerdict& v);
Json bm_to_json(const BMBound& b);

/// Parses JSON text, wrapping library errors in ParseError.
Json parse(std::string_view text);

}  // namespace mvse::io
