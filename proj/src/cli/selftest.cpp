#include "mvse/cli/selftest.hpp"

#include <cstdio>
#include <functional>
#include <sstream>

#include "mvse/bmdist/bmdist.hpp"
#include "mvse/core/errors.hpp"
#include "mvse/core/linalg.hpp"
#include "mvse/core/minors.hpp"
#include "mvse/core/random.hpp"
#include "mvse/mvse/hexagon.hpp"
#include "mvse/mvse/space.hpp"
#include "mvse/tiling/tiling.hpp"
#include "mvse/tumat/tumat.hpp"
#include "mvse/zonotope/polygon.hpp"

namespace mvse::cli {

namespace {

// A check returns an empty string on success, otherwise a counterexample.
using Check = std::function<std::string()>;
using VolumeFn = std::function<Rational(const Zonotope&)>;

std::string str(const Vector& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

std::string str(const Matrix& m) {
  std::string out = "[";
  for (Index r = 0; r < m.rows(); ++r) out += (r ? "," : "") + str(m.row_vector(r));
  return out + "]";
}

std::string expect(bool ok, const std::string& what) { return ok ? std::string{} : what; }

Zonotope gens(std::initializer_list<std::initializer_list<Rational>> list) {
  std::vector<Vector> g;
  for (const auto& v : list) g.emplace_back(v);
  const Index d = g.front().size();
  return Zonotope(d, std::move(g));
}

Matrix simplex_projection(const PolyhedralSpace& space, const Vector& t) {
  const Index d = space.dim();
  Matrix a(d, d + 1);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) a(i, j) = (i == j ? Rational(1) : Rational(0)) - t[i];
    a(i, d) = t[i];
  }
  return a;
}

Rational corrupted_volume(const Zonotope& z) {
  Rational sum = 0;
  const Matrix g = z.generator_matrix();
  for (const auto& s : subsets(z.size(), z.dim())) sum += abs(det(g.select_cols(s)));
  Rational factor = 1;
  for (Index i = 1; i < z.dim(); ++i) factor *= 2;
  return factor * sum;
}

std::vector<std::pair<std::string, Check>> corpus(std::uint64_t seed, const VolumeFn& vol) {
  const Matrix y3{{1, 0}, {0, 1}, {1, 1}};
  const Matrix y4{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  const Zonotope square = gens({{1, 0}, {0, 1}});
  const Zonotope hexagon = gens({{1, 0}, {0, 1}, {1, 1}});
  const Zonotope octagon = gens({{1, 0}, {0, 1}, {1, 1}, {1, -1}});
  const Rational third(1, 3);

  std::vector<std::pair<std::string, Check>> c;
  auto add = [&](std::string name, Check check) { c.emplace_back(std::move(name), std::move(check)); };

  add("core.det.examples", [] {
    return expect(det(Matrix::identity(3)) == 1 && det(Matrix{{1, 1}, {-1, 1}}) == 2, "det example mismatch");
  });
  add("core.plucker.examples", [=] {
    const auto u = plucker(y3);
    return expect(u.values == std::vector<Rational>{1, 1, -1} && plucker(Matrix::identity(3)).values.size() == 1,
                  "plucker(Y3) = " + str(Vector(u.values)));
  });
  add("core.laplace_sign.examples", [] {
    return expect(laplace_sign({0, 1}, 4) == 1 && laplace_sign({0, 2}, 3) == -1 && laplace_sign({1, 2}, 4) == 1,
                  "laplace sign mismatch");
  });
  add("core.laplace_expand.identity", [] {
    const Matrix i4 = Matrix::identity(4);
    return expect(laplace_expand(i4.select_cols(std::vector<Index>{0, 1}), i4.select_cols(std::vector<Index>{2, 3})) == 1,
                  "block identity does not expand to 1");
  });
  add("core.cauchy_binet.examples", [=] {
    const Matrix a{{0, -1, 1}, {-1, 0, 1}};
    const auto u = plucker(y3);
    const Rational v1 = cauchy_binet(u, plucker(a.transpose()));
    const Rational v2 = cauchy_binet(u, plucker((a * Rational(2)).transpose()));
    return expect(v1 == 1 && v2 == 4, "pairings " + to_string(v1) + ", " + to_string(v2));
  });
  add("core.complementary.givens", [] {
    Matrix q = Matrix::identity(4);
    q(0, 0) = Rational(3, 5);
    q(0, 1) = Rational(4, 5);
    q(1, 0) = Rational(-4, 5);
    q(1, 1) = Rational(3, 5);
    const auto r = complementary_check(q, 2);
    return expect(r.holds && r.sum_w_squared == 1, "compound identity fails on the Givens block");
  });
  add("core.det_perturb.example", [] {
    const auto r = det_perturb_bound({{1, 0}, {0, 1}}, {1, Rational(1, 2)}, Rational(1, 2), 1);
    return expect(r.holds && r.lhs == 0 && r.rhs == Rational(1, 2), "lhs = " + to_string(r.lhs));
  });
  add("core.random.laplace_cauchy_binet", [seed] {
    Rng rng(seed);
    for (int i = 0; i < 60; ++i) {
      const Index m = rng.uniform(2, 6), d = rng.uniform(1, std::min<std::int64_t>(3, m - 1));
      const Matrix f = rng.rational_matrix(m, d, 5, 4), g = rng.rational_matrix(m, m - d, 5, 4);
      if (laplace_expand(f, g) != det(f.hconcat(g))) return "laplace: F=" + str(f) + " G=" + str(g);
      const Matrix a = rng.rational_matrix(d, m, 5, 4);
      if (cauchy_binet(plucker(f), plucker(a.transpose())) != det(a * f)) return "cauchy-binet: Y=" + str(f);
    }
    return std::string{};
  });
  add("core.random.plucker_relations", [seed] {
    Rng rng(seed + 1);
    for (int i = 0; i < 20; ++i) {
      const Index d = rng.uniform(2, 3), m = d + 2 + rng.uniform(0, 1);
      const Matrix y = rng.rational_matrix(m, d, 4, 3);
      for (const auto& rows : subsets(m, d + 2)) {
        const std::vector<Index> gamma(rows.begin(), rows.begin() + (d - 2));
        const std::vector<Index> kappa(rows.begin() + (d - 2), rows.end());
        if (plucker_relation(y, gamma, kappa) != 0) return "nonzero relation for " + str(y);
      }
    }
    return std::string{};
  });

  add("zonotope.canonicalize.examples", [] {
    const auto z = canonicalize(gens({{Rational(1, 2), Rational(-1, 2)}, {Rational(-1, 2), Rational(1, 2)},
                                      {Rational(1, 2), Rational(1, 2)}}));
    const auto zero = canonicalize(gens({{1, 0}, {0, 0}}));
    return expect(z.size() == 2 && z.generator(0) == Vector{1, -1} && zero.size() == 1,
                  "merged form has " + std::to_string(z.size()) + " generators");
  });
  add("zonotope.support.example", [=] {
    return expect(support(hexagon, Vector{1, 0}) == 2 && support(hexagon, Vector{0, 0}) == 0, "support mismatch");
  });
  add("zonotope.volume.examples", [=] {
    return expect(vol(square) == 4 && vol(hexagon) == 12 && vol(scaled(hexagon, 3)) == 108,
                  "volumes " + to_string(vol(square)) + ", " + to_string(vol(hexagon)));
  });
  add("zonotope.vertices2d.hexagon", [=] {
    const std::vector<Vector> want{{2, 2}, {0, 2}, {-2, 0}, {-2, -2}, {0, -2}, {2, 0}};
    return expect(vertices2d(hexagon) == want, "unexpected vertex cycle");
  });
  add("zonotope.hrep.examples", [=] {
    return expect(hrep(square).size() == 4 && hrep(hexagon).size() == 6, "facet count mismatch");
  });
  add("zonotope.contains.examples", [=] {
    const Vector v{2, 2}, w{4, 4}, o{0, 0};
    return expect(contains(hexagon, o) == Location::interior && contains(hexagon, v) == Location::boundary &&
                      contains(hexagon, w) == Location::outside,
                  "location mismatch");
  });
  add("zonotope.is_parallelepiped.examples", [=] {
    return expect(is_parallelepiped(square) && !is_parallelepiped(hexagon) &&
                      is_parallelepiped(gens({{1, 0}, {2, 0}, {0, 1}})),
                  "parallelepiped test mismatch");
  });
  add("zonotope.classify.examples", [=] {
    const auto regular = classify_polygon({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
    const auto other = classify_hexagon(gens({{1, 0}, {0, 1}, {Rational(1, 2), Rational(1, 2)}}));
    return expect(regular.kind == HexagonKind::hexagon_affinely_regular && other.kind == HexagonKind::hexagon_other &&
                      classify_hexagon(square).kind == HexagonKind::parallelogram &&
                      classify_hexagon(octagon).kind == HexagonKind::not_hexagon,
                  "classification mismatch");
  });
  add("zonotope.random.volume_vs_shoelace", [seed, vol] {
    Rng rng(seed + 2);
    for (int i = 0; i < 40; ++i) {
      std::vector<Vector> g;
      const Index n = rng.uniform(2, 5);
      for (Index k = 0; k < n; ++k) g.push_back(rng.rational_vector(2, 5, 3));
      const Zonotope z(2, g);
      if (rank(z) < 2) continue;
      const Rational area = shoelace_area(vertices2d(z));
      if (vol(z) != area) return "generators " + str(z.generator_matrix()) + ": volume " + to_string(vol(z)) +
                                 " vs shoelace " + to_string(area);
    }
    return std::string{};
  });

  add("tumat.is_tu.examples", [] {
    return expect(is_tu(Matrix::identity(3)) && !is_tu(Matrix{{1, 1}, {-1, 1}}) && is_tu(Matrix{{1, 0, 1}, {0, 1, 1}}),
                  "is_tu mismatch");
  });
  add("tumat.violation.example", [] {
    const auto v = tu_violation(Matrix{{1, 0, 1, 1}, {0, 1, 1, -1}});
    return expect(v && v->cols == Subset{2, 3} && v->det == -2, "unexpected violation");
  });
  add("tumat.gomory.example", [] {
    const Matrix d{{1, 0, 1, 1}, {0, 1, 1, -1}};
    const auto cert = gomory_certificate(d);
    return expect(verify_gomory(d, cert) && cert.p_hat.size() == 4, "certificate fails its minor check");
  });
  add("tumat.forest_scaling.example", [] {
    const auto [g, rec] = forest_scaling(Matrix{{1, 0, 1}, {0, 1, 2}});
    return expect(g == Matrix{{1, 0, 1}, {0, 1, 1}} && rec.row_scales == std::vector<Rational>{1, Rational(1, 2)} &&
                      rec.col_scales == std::vector<Rational>{1, 2, 1},
                  "scaled matrix " + str(g));
  });
  add("tumat.membership.examples", [=] {
    const auto hex = td_membership(hexagon);
    const auto skew = td_membership(gens({{1, 0}, {0, 1}, {1, 2}}));
    const auto oct = td_membership(octagon);
    const auto* w = std::get_if<TUWitness>(&hex);
    const auto* w2 = std::get_if<TUWitness>(&skew);
    return expect(w && w->tu_matrix == Matrix{{1, 0, 1}, {0, 1, 1}} && verify_witness(*w) && w2 &&
                      verify_witness(*w2) && std::holds_alternative<Refusal>(oct),
                  "membership verdicts mismatch");
  });

  add("mvse.space.examples", [=] {
    return expect(PolyhedralSpace::make(y4).minors().values == std::vector<Rational>{1, 1, -1, 1} &&
                      mvse_volume(PolyhedralSpace::make(y3)) == 4 && mvse_volume(PolyhedralSpace::make(y4)) == 8,
                  "space minors or MVSE volume mismatch");
  });
  add("mvse.ratio.examples", [=] {
    const auto s3 = PolyhedralSpace::make(y3);
    const auto a = Projection::make(s3, simplex_projection(s3, {third, third}));
    const auto bad = Projection::make(s3, Matrix{{0, -1, 1}, {-1, 0, 1}});
    return expect(volume_ratio(s3, a) == 1 && volume_ratio(s3, bad) == 3, "ratio mismatch");
  });
  add("mvse.coordinate.examples", [=] {
    const auto s3 = PolyhedralSpace::make(y3);
    const auto s4 = PolyhedralSpace::make(y4);
    return expect(volume_ratio(s3, coordinate_projection(s3, {1, 2})) == 1 &&
                      volume_ratio(s4, coordinate_projection(s4, {0, 1, 2})) == 1 &&
                      enumerate_parallelepiped_mvse(s3).size() == 3 &&
                      enumerate_parallelepiped_mvse(PolyhedralSpace::make(Matrix::identity(3))).size() == 1,
                  "coordinate projection mismatch");
  });
  add("mvse.random.ratio_at_least_one", [=] {
    for (const Matrix& y : {y3, y4}) {
      const auto s = PolyhedralSpace::make(y);
      for (std::uint64_t k = 0; k < 100; ++k) {
        const auto p = random_projection(s, seed + k);
        if (volume_ratio(s, p) < 1) return "ratio below 1 for " + str(p.coeffs());
      }
    }
    return std::string{};
  });
  add("mvse.random.simplex_ratio_one", [=] {
    Rng rng(seed + 3);
    const auto s3 = PolyhedralSpace::make(y3);
    for (int k = 0; k < 30; ++k) {
      const std::int64_t den = rng.uniform(1, 12);
      const std::int64_t a = rng.uniform(0, den), b = rng.uniform(0, den - a);
      Vector t{Rational(a, den), Rational(b, den)};
      for (auto& x : t) x.canonicalize();
      const auto p = Projection::make(s3, simplex_projection(s3, t));
      if (volume_ratio(s3, p) != 1) return "simplex point " + str(t);
    }
    return std::string{};
  });
  add("mvse.circuit.examples", [=] {
    const auto s3 = PolyhedralSpace::make(y3);
    const auto c = find_circuit(Projection::make(s3, simplex_projection(s3, {third, third})));
    const auto none = find_circuit(Projection::make(s3, simplex_projection(s3, {0, 0})));
    return expect(c && *c == Subset{0, 1, 2} && !none, "circuit mismatch");
  });
  add("mvse.hexagonal_subspace.examples", [=] {
    for (const Matrix& y : {y3, y4}) {
      const auto s = PolyhedralSpace::make(y);
      const auto p = Projection::make(s, simplex_projection(s, Vector(y.cols(), third)));
      const auto r = hexagonal_subspace(s, p);
      if (!(r.b_bounded && r.c_bounded && r.difference_bounded &&
            r.ball.kind == HexagonKind::hexagon_affinely_regular))
        return "report checks fail for Y = " + str(y);
    }
    return expect(!find_hexagon_witness(PolyhedralSpace::make(Matrix::identity(3))), "witness found for the cube");
  });

  add("tiling.examples", [=] {
    const auto l2 = Lattice::make(Matrix{{2, 0}, {0, 2}});
    const auto l3 = Lattice::make(Matrix{{3, 0}, {0, 3}});
    const auto lh = Lattice::make(Matrix{{4, 2}, {2, 4}});
    return expect(det_volume_check(square, l2) && det_volume_check(hexagon, lh) && !det_volume_check(square, l3) &&
                      tile_verify(square, l2, 4, 200, seed).passed && tile_verify(hexagon, lh, 6, 200, seed).passed &&
                      !tile_verify(square, l3, 4, 200, seed).passed,
                  "tiling verdict mismatch");
  });
  add("tiling.pipeline.examples", [=] {
    SearchBudget budget;
    budget.samples = 200;
    budget.seed = seed;
    const auto hex = td_tiling_pipeline(hexagon, budget);
    const auto oct = td_tiling_pipeline(octagon, budget);
    return expect(hex.member() && hex.tiles() && hex.det_volume_ok && !oct.member() && !oct.lattice,
                  "pipeline verdict mismatch");
  });
  add("tiling.determinism", [=] {
    const auto lh = Lattice::make(Matrix{{4, 2}, {2, 4}});
    return expect(tile_verify(hexagon, lh, 6, 100, seed).trace_digest ==
                      tile_verify(hexagon, lh, 6, 100, seed).trace_digest,
                  "sample trace differs between runs");
  });

  add("bmdist.examples", [=] {
    const auto same = bm_upper_bound(hexagon, hexagon);
    const auto scaled2 = bm_upper_bound(hexagon, scaled(hexagon, 2));
    const auto sq = bm_upper_bound(square, hexagon);
    return expect(same.upper_bound == 1 && scaled2.upper_bound == 1 && sq.upper_bound == 2,
                  "bounds " + to_string(same.upper_bound) + ", " + to_string(scaled2.upper_bound) + ", " +
                      to_string(sq.upper_bound));
  });
  return c;
}

}  // namespace

bool SelftestReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string SelftestReport::table() const {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    char line[128];
    std::snprintf(line, sizeof line, "%-40s %s\n", c.name.c_str(), c.passed ? "PASS" : "FAIL");
    out << line;
    if (!c.passed) ++failed;
  }
  out << checks.size() - failed << " passed, " << failed << " failed\n";
  return out.str();
}

std::vector<std::string> selftest_mutations() { return {"volume"}; }

SelftestReport run_selftest(const SelftestOptions& options) {
  VolumeFn vol = [](const Zonotope& z) { return volume(z); };
  if (options.mutation == "volume") vol = corrupted_volume;
  else if (!options.mutation.empty()) throw PreconditionError("cli", "unknown mutation '" + options.mutation + "'");

  SelftestReport report;
  for (auto& [name, check] : corpus(options.seed, vol)) {
    CheckOutcome outcome{name, false, {}};
    try {
      outcome.detail = check();
      outcome.passed = outcome.detail.empty();
    } catch (const std::exception& e) {
      outcome.detail = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(outcome));
  }
  return report;
}

}  // namespace mvse::cli
