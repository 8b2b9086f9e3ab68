#include "mvse/mvse/space.hpp"

#include <algorithm>

#include "mvse/core/errors.hpp"
#include "mvse/core/linalg.hpp"
#include "mvse/core/random.hpp"

namespace mvse {

PolyhedralSpace PolyhedralSpace::make(Matrix basis) {
  if (basis.rows() < basis.cols()) throw ShapeError("mvse", "space basis needs rows >= cols");
  const Index r = rank(basis);
  if (r < basis.cols()) {
    throw PreconditionError("mvse", "space basis is rank deficient: rank " + std::to_string(r) + " < " +
                                        std::to_string(basis.cols()));
  }
  PluckerVector u = plucker(basis);
  return PolyhedralSpace(std::move(basis), std::move(u));
}

Projection Projection::make(const PolyhedralSpace& space, Matrix coeffs) {
  const Index d = space.dim();
  const Index m = space.ambient();
  if (coeffs.rows() != d || coeffs.cols() != m) {
    throw ShapeError("mvse", "projection must be " + std::to_string(d) + " x " + std::to_string(m));
  }
  const Matrix prod = coeffs * space.basis();
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) {
      const Rational expected = r == c ? 1 : 0;
      if (prod(r, c) != expected) {
        throw PreconditionError("mvse", "A * Y != I at entry (" + std::to_string(r + 1) + "," +
                                            std::to_string(c + 1) + "): " + to_string(prod(r, c)));
      }
    }
  }
  PluckerVector w = plucker(coeffs.transpose());
  return Projection(std::move(coeffs), std::move(w));
}

Zonotope Projection::image() const { return canonicalize(Zonotope::from_columns(coeffs_)); }

Rational volume_ratio(const PolyhedralSpace& space, const Projection& proj) {
  const auto& u = space.minors();
  const auto& w = proj.minors();
  const Rational pairing = cauchy_binet(u, w);
  if (pairing == 0) throw DefectError("mvse", "projection pairs to zero with the space");
  Rational total = 0;
  for (const auto& x : w.values) total += abs(x);
  return u.max_abs() * total / abs(pairing);
}

Rational mvse_volume(const PolyhedralSpace& space) {
  Rational scale = 1;
  for (Index i = 0; i < space.dim(); ++i) scale *= 2;
  return scale / space.minors().max_abs();
}

PolyhedralSpace normalize_at(const PolyhedralSpace& space, const Subset& pivot) {
  const Matrix block = space.basis().select_rows(pivot);
  if (det(block) == 0) throw PreconditionError("mvse", "pivot rows are singular");
  return PolyhedralSpace::make(space.basis() * inverse(block));
}

PolyhedralSpace normalize_laa(const PolyhedralSpace& space) {
  return normalize_at(space, enumerate_parallelepiped_mvse(space).front());
}

Projection coordinate_projection(const PolyhedralSpace& space, const Subset& s) {
  const Index d = space.dim();
  if (s.size() != d) throw ShapeError("mvse", "coordinate subset must have d elements");
  for (Index i = 0; i < s.size(); ++i) {
    if (s[i] >= space.ambient() || (i > 0 && s[i] <= s[i - 1])) {
      throw PreconditionError("mvse", "coordinate subset must be strictly increasing and in range");
    }
  }
  const Matrix block = space.basis().select_rows(s);
  if (det(block) == 0) throw PreconditionError("mvse", "rows of Y on the chosen coordinates are singular");
  const Matrix inv = inverse(block);
  Matrix a(d, space.ambient());
  for (Index j = 0; j < d; ++j)
    for (Index r = 0; r < d; ++r) a(r, s[j]) = inv(r, j);
  return Projection::make(space, std::move(a));
}

std::vector<Subset> enumerate_parallelepiped_mvse(const PolyhedralSpace& space) {
  const auto& u = space.minors();
  const Rational best = u.max_abs();
  const auto all = subsets(u.m, u.d);
  std::vector<Subset> out;
  for (Index i = 0; i < all.size(); ++i) {
    if (abs(u.values[i]) == best) out.push_back(all[i]);
  }
  return out;
}

Projection random_projection(const PolyhedralSpace& space, std::uint64_t seed) {
  const Projection base = coordinate_projection(space, enumerate_parallelepiped_mvse(space).front());
  const Matrix null_rows = left_null_space(space.basis());
  if (null_rows.rows() == 0) return base;
  Rng rng(seed);
  const Matrix mix = rng.rational_matrix(space.dim(), null_rows.rows(), 3, 4);
  return Projection::make(space, base.coeffs() + mix * null_rows);
}

Rational plucker_relation(const Matrix& m, const std::vector<Index>& gamma, const std::vector<Index>& kappa) {
  const Index d = m.cols();
  if (d < 2) throw PreconditionError("mvse", "Plucker relation needs d >= 2");
  if (gamma.size() != d - 2 || kappa.size() != 4) {
    throw ShapeError("mvse", "Plucker relation needs d - 2 gamma rows and 4 kappa rows");
  }
  std::vector<Index> all = gamma;
  all.insert(all.end(), kappa.begin(), kappa.end());
  for (Index r : all) {
    if (r >= m.rows()) throw PreconditionError("mvse", "row index out of range");
  }
  auto sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("mvse", "row indices collide");
  }
  auto t = [&](Index a, Index b) {
    std::vector<Index> rows = gamma;
    rows.push_back(kappa[a - 1]);
    rows.push_back(kappa[b - 1]);
    return det(m.select_rows(rows));
  };
  return t(1, 2) * t(3, 4) - t(1, 4) * t(3, 2) + t(2, 4) * t(3, 1);
}

SearchResult minimize_ratio_search(const PolyhedralSpace& space, std::size_t restarts, std::uint64_t seed) {
  const auto& u = space.minors();
  const auto all = subsets(u.m, u.d);
  std::optional<SearchResult> best;
  std::size_t evaluations = 0;
  for (Index i = 0; i < all.size(); ++i) {
    if (u.values[i] == 0) continue;
    Projection p = coordinate_projection(space, all[i]);
    Rational r = volume_ratio(space, p);
    ++evaluations;
    if (!best || r < best->ratio) best = SearchResult{std::move(p), std::move(r), true, 0};
  }

  const Matrix null_rows = left_null_space(space.basis());
  if (null_rows.rows() > 0) {
    const Matrix base = coordinate_projection(space, enumerate_parallelepiped_mvse(space).front()).coeffs();
    const Rational min_step(1, 1024);
    constexpr std::size_t kEvaluationsPerRestart = 4000;
    Rng rng(seed);
    for (std::size_t restart = 0; restart < restarts; ++restart) {
      Matrix mix = rng.rational_matrix(space.dim(), null_rows.rows(), 3, 4);
      auto evaluate = [&](const Matrix& c) {
        ++evaluations;
        Projection p = Projection::make(space, base + c * null_rows);
        Rational r = volume_ratio(space, p);
        return std::make_pair(std::move(p), std::move(r));
      };
      auto current = evaluate(mix);
      std::size_t used = 1;
      Rational step = 1;
      while (step >= min_step && used < kEvaluationsPerRestart) {
        bool improved = false;
        for (Index i = 0; i < mix.rows(); ++i) {
          for (Index j = 0; j < mix.cols(); ++j) {
            for (int dir : {1, -1}) {
              Matrix trial = mix;
              trial(i, j) += dir * step;
              auto candidate = evaluate(trial);
              ++used;
              if (candidate.second < current.second) {
                mix = std::move(trial);
                current = std::move(candidate);
                improved = true;
                break;
              }
            }
          }
        }
        if (!improved) step /= 2;
      }
      if (current.second < best->ratio) best = SearchResult{std::move(current.first), std::move(current.second), false, 0};
    }
  }
  best->evaluations = evaluations;
  return std::move(*best);
}

std::optional<Subset> find_circuit(const Projection& proj) {
  const Matrix& a = proj.coeffs();
  const Index d = a.rows();
  std::vector<Index> nonzero;
  for (Index c = 0; c < a.cols(); ++c) {
    if (!is_zero(a.column(c))) nonzero.push_back(c);
  }
  for (Index k = 3; k <= std::min(d + 1, nonzero.size()); ++k) {
    for (const auto& pick : subsets(nonzero.size(), k)) {
      Subset cols(k);
      for (Index i = 0; i < k; ++i) cols[i] = nonzero[pick[i]];
      if (rank(a.select_cols(cols)) != k - 1) continue;
      bool minimal = true;
      for (Index drop = 0; drop < k && minimal; ++drop) {
        Subset rest;
        for (Index i = 0; i < k; ++i)
          if (i != drop) rest.push_back(cols[i]);
        minimal = rank(a.select_cols(rest)) == k - 1;
      }
      if (minimal) return cols;
    }
  }
  return std::nullopt;
}

}  // namespace mvse
