#include "mvse/tiling/tiling.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "mvse/core/errors.hpp"
#include "mvse/core/linalg.hpp"
#include "mvse/core/minors.hpp"
#include "mvse/core/parallel.hpp"
#include "mvse/core/random.hpp"

namespace mvse {

namespace {

constexpr std::int64_t kGridSteps = 1048573;  // odd prime; keeps boundary hits rare
constexpr std::size_t kBatch = 64;

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

void require_tiling_dims(const Zonotope& z) {
  if (z.dim() < 2 || z.dim() > 3) throw PreconditionError("tiling", "tiling is limited to d in {2, 3}");
  if (!full_dimensional(z)) throw PreconditionError("tiling", "zonotope is not full-dimensional");
}

struct Cover {
  bool boundary = false;
  std::size_t count = 0;
};

class CoverCounter {
 public:
  CoverCounter(const Zonotope& z, const Lattice& lattice)
      : facets_(hrep(z)), basis_(lattice.basis()), inverse_(inverse(lattice.basis())) {
    // p - B k lies in Z only if k lies in B^{-1} p - box(B^{-1} Z).
    const Zonotope c = canonicalize(z);
    reach_.assign(z.dim(), Rational(0));
    for (const auto& g : c.generators()) {
      const Vector local = inverse_ * g;
      for (Index i = 0; i < local.size(); ++i) reach_[i] += abs(local[i]);
    }
  }

  Cover count(const Vector& p) const {
    const Index d = p.size();
    const Vector centre = inverse_ * p;
    std::vector<Integer> lo(d), hi(d);
    for (Index i = 0; i < d; ++i) {
      lo[i] = floor_of(centre[i] - reach_[i]);
      hi[i] = ceil_of(centre[i] + reach_[i]);
    }
    Cover cover;
    std::vector<Integer> k = lo;
    while (true) {
      Vector kv(d);
      for (Index i = 0; i < d; ++i) kv[i] = Rational(k[i]);
      const Vector local = sub(p, basis_ * kv);
      switch (locate(facets_, local)) {
        case Location::interior: ++cover.count; break;
        case Location::boundary: cover.boundary = true; return cover;
        case Location::outside: break;
      }
      Index i = 0;
      while (i < d && k[i] == hi[i]) {
        k[i] = lo[i];
        ++i;
      }
      if (i == d) break;
      ++k[i];
    }
    return cover;
  }

 private:
  std::vector<Facet> facets_;
  Matrix basis_;
  Matrix inverse_;
  Vector reach_;
};

void fnv1a(std::uint64_t& h, const std::string& s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  h ^= 0xff;
  h *= 1099511628211ull;
}

}  // namespace

Lattice Lattice::make(Matrix basis) {
  if (!basis.square()) throw ShapeError("tiling", "lattice basis must be square");
  Rational dt = abs(det(basis));
  if (dt == 0) throw PreconditionError("tiling", "lattice basis is degenerate");
  return Lattice(std::move(basis), std::move(dt));
}

bool det_volume_check(const Zonotope& z, const Lattice& lattice) {
  if (z.dim() != lattice.dim()) throw ShapeError("tiling", "lattice and zonotope dimensions differ");
  return lattice.determinant() == volume(z);
}

Rational default_radius(const Zonotope& z) {
  Rational best = 0;
  for (Index j = 0; j < z.dim(); ++j) {
    Rational e = 0;
    for (const auto& g : z.generators()) e += abs(g[j]);
    best = std::max(best, e);
  }
  return 2 * best;
}

TileVerdict tile_verify(const Zonotope& z, const Lattice& lattice, const Rational& radius, std::size_t samples,
                        std::uint64_t seed) {
  require_tiling_dims(z);
  if (lattice.dim() != z.dim()) throw ShapeError("tiling", "lattice and zonotope dimensions differ");
  if (radius <= 0) throw PreconditionError("tiling", "sampling radius must be positive");
  const Index d = z.dim();
  const CoverCounter counter(z, lattice);
  Rng rng(seed);
  TileVerdict verdict;
  std::uint64_t digest = 1469598103934665603ull;
  const std::size_t max_discards = 10 * samples + 100;

  while (verdict.samples_tested < samples) {
    std::vector<Vector> batch(kBatch);
    for (auto& p : batch) {
      p.resize(d);
      for (auto& x : p) x = rng.grid_point(radius, kGridSteps);
    }
    std::vector<Cover> covers(batch.size());
    parallel_for(batch.size(), [&](std::size_t i) { covers[i] = counter.count(batch[i]); });
    for (Index i = 0; i < batch.size() && verdict.samples_tested < samples; ++i) {
      if (covers[i].boundary) {
        if (++verdict.discarded > max_discards) {
          throw PreconditionError("tiling", "too many samples landed on translate boundaries");
        }
        continue;
      }
      ++verdict.samples_tested;
      for (const auto& x : batch[i]) fnv1a(digest, to_string(x));
      if (covers[i].count != 1) {
        verdict.passed = false;
        verdict.failure_point = batch[i];
        verdict.failure_count = covers[i].count;
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
        verdict.trace_digest = buf;
        return verdict;
      }
    }
  }
  verdict.passed = true;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  verdict.trace_digest = buf;
  if (!det_volume_check(z, lattice)) {
    throw DefectError("tiling", "sampled tiling passed although d(lattice) != vol(Z)");
  }
  return verdict;
}

Matrix lattice_key(const Matrix& basis) {
  const Index d = basis.rows();
  Integer scale = 1;
  for (const auto& x : basis.data()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  std::vector<std::vector<Integer>> b(d, std::vector<Integer>(basis.cols()));
  for (Index r = 0; r < d; ++r)
    for (Index c = 0; c < basis.cols(); ++c) b[r][c] = Rational(basis(r, c) * scale).get_num();

  const Index n = basis.cols();
  auto combine = [&](Index c1, Index c2, const Integer& a, const Integer& bb, const Integer& c, const Integer& dd) {
    // (col c1, col c2) <- (a*c1 + bb*c2, c*c1 + dd*c2), unimodular.
    for (Index r = 0; r < d; ++r) {
      Integer x = a * b[r][c1] + bb * b[r][c2];
      Integer y = c * b[r][c1] + dd * b[r][c2];
      b[r][c1] = x;
      b[r][c2] = y;
    }
  };
  for (Index i = 0; i < d && i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (b[i][j] == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[i][i].get_mpz_t(), b[i][j].get_mpz_t());
      const Integer u = b[i][i] / g;
      const Integer v = b[i][j] / g;
      combine(i, j, s, t, -v, u);
    }
    if (b[i][i] < 0) {
      for (Index r = 0; r < d; ++r) b[r][i] = -b[r][i];
    }
    if (b[i][i] == 0) continue;
    for (Index j = 0; j < i; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), b[i][j].get_mpz_t(), b[i][i].get_mpz_t());
      for (Index r = 0; r < d; ++r) b[r][j] -= q * b[r][i];
    }
  }
  Matrix key(d, n);
  for (Index r = 0; r < d; ++r)
    for (Index c = 0; c < n; ++c) key(r, c) = Rational(b[r][c]) / Rational(scale);
  return key;
}

namespace {

// Coefficient vectors with entries in [-bound, bound], first nonzero entry
// positive, ordered by max |c_i| and then lexicographically.
std::vector<std::vector<int>> coefficient_vectors(Index n, int bound, std::size_t cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(n, -bound);
  while (true) {
    auto first = std::find_if(c.begin(), c.end(), [](int x) { return x != 0; });
    if (first != c.end() && *first > 0) out.push_back(c);
    Index i = n;
    while (i > 0 && c[i - 1] == bound) c[--i] = -bound;
    if (i == 0) break;
    ++c[i - 1];
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    auto mx = [](const std::vector<int>& v) {
      int m = 0;
      for (int x : v) m = std::max(m, std::abs(x));
      return m;
    };
    return mx(a) < mx(b);
  });
  if (out.size() > cap) out.resize(cap);
  return out;
}

}  // namespace

std::optional<Lattice> lattice_search(const Zonotope& z, const SearchBudget& budget) {
  require_tiling_dims(z);
  const Zonotope c = canonicalize(z);
  const Index d = c.dim();
  const Index n = c.size();
  const Rational vol = volume(c);
  const Rational radius = budget.radius > 0 ? budget.radius : default_radius(c);

  std::vector<std::vector<Vector>> passes;
  {
    // Doubled facet centres: 2 * sum_i sign(<normal, z_i>) z_i.
    std::vector<Vector> centres;
    for (const auto& f : hrep(c)) {
      Vector v(d);
      for (const auto& g : c.generators()) {
        const int s = sign(dot(f.normal, g));
        if (s != 0) v = add(v, scaled(g, 2 * s));
      }
      v = positive_orientation(v);
      if (std::find(centres.begin(), centres.end(), v) == centres.end()) centres.push_back(std::move(v));
    }
    passes.push_back(std::move(centres));
  }
  for (int bound : {2, 3}) {
    std::vector<Vector> vs;
    for (const auto& coeff : coefficient_vectors(n, bound, budget.max_vectors)) {
      Vector v(d);
      for (Index i = 0; i < n; ++i)
        if (coeff[i] != 0) v = add(v, scaled(c.generator(i), coeff[i]));
      if (!is_zero(v)) vs.push_back(std::move(v));
    }
    passes.push_back(std::move(vs));
  }

  std::set<std::vector<std::string>> seen;
  std::size_t bases = 0;
  for (const auto& vs : passes) {
    std::size_t tuples = 0;
    if (vs.size() < d) continue;
    std::vector<Index> pick(d);
    for (Index i = 0; i < d; ++i) pick[i] = i;
    while (true) {
      if (++tuples > budget.max_tuples) break;
      std::vector<Vector> cols;
      for (Index i : pick) cols.push_back(vs[i]);
      const Matrix basis = Matrix::from_columns(cols, d);
      if (abs(det(basis)) == vol) {
        const Matrix key = lattice_key(basis);
        std::vector<std::string> text;
        for (const auto& x : key.data()) text.push_back(to_string(x));
        if (seen.insert(text).second) {
          if (++bases > budget.max_bases) return std::nullopt;
          Lattice lattice = Lattice::make(basis);
          if (tile_verify(c, lattice, radius, budget.samples, budget.seed).passed) return lattice;
        }
      }
      Index i = d;
      while (i > 0 && pick[i - 1] == vs.size() - d + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (Index j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

TilingReport td_tiling_pipeline(const Zonotope& z, const SearchBudget& budget) {
  require_tiling_dims(z);
  TilingReport report{td_membership(z), std::nullopt, std::nullopt, false};
  if (!report.member()) return report;
  report.lattice = lattice_search(z, budget);
  if (report.lattice) {
    const Rational radius = budget.radius > 0 ? budget.radius : default_radius(canonicalize(z));
    report.verdict = tile_verify(z, *report.lattice, radius, budget.samples, budget.seed);
    report.det_volume_ok = det_volume_check(z, *report.lattice);
  }
  return report;
}

}  // namespace mvse
