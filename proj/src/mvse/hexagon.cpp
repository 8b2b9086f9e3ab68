#include "mvse/mvse/hexagon.hpp"

#include <algorithm>

#include "mvse/core/errors.hpp"
#include "mvse/core/linalg.hpp"

namespace mvse {

HexagonReport hexagonal_subspace(const PolyhedralSpace& space, const Projection& witness) {
  if (volume_ratio(space, witness) != 1) {
    throw PreconditionError("mvse", "witness projection is not minimal (volume ratio != 1)");
  }
  const auto circuit = find_circuit(witness);
  if (!circuit) throw PreconditionError("mvse", "witness image is a parallelepiped");

  const Matrix& a = witness.coeffs();
  const Matrix& y = space.basis();
  const Index d = space.dim();
  const Index m = space.ambient();

  HexagonReport rep;
  rep.circuit = *circuit;
  rep.circuit_row = circuit->back();
  // The circuit minus its last member is independent; extend it to a basis
  // of the column space of A with the first columns that raise the rank.
  rep.basis_rows.assign(circuit->begin(), circuit->end() - 1);
  for (Index j = 0; j < m && rep.basis_rows.size() < d; ++j) {
    if (std::find(circuit->begin(), circuit->end(), j) != circuit->end()) continue;
    auto trial = rep.basis_rows;
    trial.push_back(j);
    if (rank(a.select_cols(trial)) == trial.size()) rep.basis_rows = std::move(trial);
  }
  if (rep.basis_rows.size() != d) throw DefectError("mvse", "projection columns do not span the space");

  // Basis change C_1: the circuit block reads [I; a] in these coordinates.
  rep.circuit_coefficients = solve(a.select_cols(rep.basis_rows), a.column(rep.circuit_row));
  if (rep.circuit_coefficients[0] == 0 || rep.circuit_coefficients[1] == 0) {
    throw DefectError("mvse", "circuit coefficients vanish");
  }

  Subset pivot = rep.basis_rows;
  std::sort(pivot.begin(), pivot.end());
  if (abs(space.minors().at(pivot)) != space.minors().max_abs()) {
    throw DefectError("mvse", "minimal projection is supported on a non-maximal minor");
  }

  // Basis change C_2: identity on the basis rows, all maximal minors <= 1.
  Matrix normalized = y * inverse(y.select_rows(rep.basis_rows));
  for (Index j = 0; j < 2; ++j) {
    const Rational& entry = normalized(rep.circuit_row, j);
    if (abs(entry) != 1) throw DefectError("mvse", "circuit row entry is not +-1");
    if (entry == -1) {
      for (Index r = 0; r < m; ++r) normalized(r, j) = -normalized(r, j);
    }
  }

  rep.row_order = rep.basis_rows;
  rep.row_order.push_back(rep.circuit_row);
  std::vector<Index> rest;
  for (Index r = 0; r < m; ++r) {
    if (std::find(rep.row_order.begin(), rep.row_order.end(), r) == rep.row_order.end()) rest.push_back(r);
  }
  rep.row_order.insert(rep.row_order.end(), rest.begin(), rest.end());
  rep.normalized_matrix = normalized.select_rows(rep.row_order);
  rep.basis_pair = {normalized.column(0), normalized.column(1)};

  rep.b_bounded = rep.c_bounded = rep.difference_bounded = true;
  for (Index r : rest) {
    const Rational& b = normalized(r, 0);
    const Rational& c = normalized(r, 1);
    rep.b_c_rows.emplace_back(b, c);
    rep.b_bounded = rep.b_bounded && abs(b) <= 1;
    rep.c_bounded = rep.c_bounded && abs(c) <= 1;
    rep.difference_bounded = rep.difference_bounded && abs(b - c) <= 1;
  }

  std::vector<Vector> slabs;
  for (Index r = 0; r < m; ++r) slabs.push_back({normalized(r, 0), normalized(r, 1)});
  rep.ball = classify_polygon(slab_polygon(slabs));

  if (!rep.b_bounded || !rep.c_bounded || !rep.difference_bounded ||
      rep.ball.kind != HexagonKind::hexagon_affinely_regular) {
    throw DefectError("mvse", "hexagonal subspace construction failed its output checks");
  }
  return rep;
}

std::optional<Projection> find_hexagon_witness(const PolyhedralSpace& space) {
  const auto maximal = enumerate_parallelepiped_mvse(space);
  std::vector<Matrix> coords;
  coords.reserve(maximal.size());
  for (const auto& s : maximal) coords.push_back(coordinate_projection(space, s).coeffs());

  auto try_average = [&](const std::vector<Index>& pick) -> std::optional<Projection> {
    Matrix sum = coords[pick[0]];
    for (Index i = 1; i < pick.size(); ++i) sum = sum + coords[pick[i]];
    Projection p = Projection::make(space, sum * Rational(1, static_cast<unsigned long>(pick.size())));
    if (volume_ratio(space, p) == 1 && !is_parallelepiped(p.image())) return p;
    return std::nullopt;
  };

  if (coords.size() < 2) return std::nullopt;
  std::vector<Index> everything(coords.size());
  for (Index i = 0; i < coords.size(); ++i) everything[i] = i;
  if (auto p = try_average(everything)) return p;

  constexpr std::size_t kMaxCandidates = 5000;
  std::size_t tried = 0;
  for (Index k = 2; k <= std::min<Index>(3, coords.size()); ++k) {
    for (const auto& pick : subsets(coords.size(), k)) {
      if (++tried > kMaxCandidates) return std::nullopt;
      if (auto p = try_average(pick)) return p;
    }
  }
  return std::nullopt;
}

}  // namespace mvse
