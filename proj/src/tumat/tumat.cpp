#include "mvse/tumat/tumat.hpp"

#include <algorithm>
#include <deque>

#include "mvse/core/errors.hpp"
#include "mvse/core/linalg.hpp"

namespace mvse {

namespace {

bool is_unit_entry(const Rational& x) { return x == 0 || x == 1 || x == -1; }

void require_unit_entries(const Matrix& m) {
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (!is_unit_entry(m(r, c))) {
        throw PreconditionError("tumat", "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                             ") = " + to_string(m(r, c)) + " is not in {-1,0,1}");
      }
}

void require_size(const Matrix& m) {
  if (std::min(m.rows(), m.cols()) > kMaxTuOrder) {
    throw SizeLimitError("tumat", "brute-force TU check is limited to min(rows, cols) <= " +
                                      std::to_string(kMaxTuOrder));
  }
}

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix to_int(const Matrix& m) {
  IntMatrix out(m.rows(), std::vector<int>(m.cols()));
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) out[r][c] = static_cast<int>(m(r, c).get_num().get_si());
  return out;
}

// Row index i when column c of m is the unit vector e_i.
std::optional<Index> unit_row(const IntMatrix& m, Index c) {
  std::optional<Index> hit;
  for (Index r = 0; r < m.size(); ++r) {
    if (m[r][c] == 0) continue;
    if (m[r][c] != 1 || hit) return std::nullopt;
    hit = r;
  }
  return hit;
}

std::optional<Index> column_of_unit(const IntMatrix& m, Index row) {
  const Index cols = m.empty() ? 0 : m.front().size();
  for (Index c = 0; c < cols; ++c) {
    if (unit_row(m, c) == row) return c;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> tu_violation(const Matrix& m) {
  require_unit_entries(m);
  require_size(m);
  const Index top = std::min(m.rows(), m.cols());
  for (Index k = 2; k <= top; ++k) {
    const auto row_sets = subsets(m.rows(), k);
    const auto col_sets = subsets(m.cols(), k);
    for (const auto& rs : row_sets) {
      for (const auto& cs : col_sets) {
        Rational dt = det(m.submatrix(rs, cs));
        if (abs(dt) >= 2) return Violation{rs, cs, std::move(dt)};
      }
    }
  }
  return std::nullopt;
}

bool is_tu(const Matrix& m) { return !tu_violation(m).has_value(); }

std::vector<Rational> gomory_minors(const Matrix& d, const GomoryCertificate& cert) {
  if (cert.p_hat.size() != 4 || cert.x_hat.size() + 2 != d.rows()) {
    throw ShapeError("tumat", "certificate needs d - 2 frame columns and 4 pivot columns");
  }
  std::vector<Rational> out;
  for (Index a = 0; a < 4; ++a) {
    for (Index b = a + 1; b < 4; ++b) {
      std::vector<Index> cols = cert.x_hat;
      cols.push_back(cert.p_hat[a]);
      cols.push_back(cert.p_hat[b]);
      out.push_back(det(d.select_cols(cols)));
    }
  }
  return out;
}

bool verify_gomory(const Matrix& d, const GomoryCertificate& cert) {
  for (const auto& v : gomory_minors(d, cert)) {
    if (v == 0) return false;
  }
  return true;
}

GomoryCertificate gomory_certificate(const Matrix& input) {
  require_unit_entries(input);
  const Index d = input.rows();
  if (d < 2) throw PreconditionError("tumat", "Gomory certificate needs at least two rows");
  IntMatrix m = to_int(input);
  for (Index i = 0; i < d; ++i) {
    if (!column_of_unit(m, i)) {
      throw PreconditionError("tumat", "matrix does not contain the identity: e_" + std::to_string(i + 1) +
                                           " is missing");
    }
  }
  const auto violation = tu_violation(input);
  if (!violation) throw PreconditionError("tumat", "matrix is totally unimodular; no certificate exists");

  // Frame of d columns whose determinant is +-det(S): the columns of the
  // violating submatrix S plus e_i for every row i outside S.
  std::vector<Index> frame = violation->cols;
  for (Index i = 0; i < d; ++i) {
    if (!std::binary_search(violation->rows.begin(), violation->rows.end(), i)) frame.push_back(*column_of_unit(m, i));
  }

  const Index cols = input.cols();
  // Each successful pivot adds a unit column to the frame; at most d - 1 fit.
  for (Index step = 0; step < d; ++step) {
    auto frame_has_unit = [&](Index row) {
      return std::any_of(frame.begin(), frame.end(), [&](Index c) { return unit_row(m, c) == row; });
    };
    const auto r_it = std::find_if(frame.begin(), frame.end(), [&](Index c) { return !unit_row(m, c); });
    if (r_it == frame.end()) throw DefectError("tumat", "frame became unimodular during pivoting");
    const Index r = *r_it;

    std::vector<Index> support;
    for (Index i = 0; i < d; ++i)
      if (m[i][r] != 0) support.push_back(i);
    const auto i1_it = std::find_if(support.begin(), support.end(), [&](Index i) { return !frame_has_unit(i); });
    if (i1_it == support.end()) throw DefectError("tumat", "frame columns are dependent");
    const Index i1 = *i1_it;

    for (Index is : support) {
      if (is == i1) continue;
      const int f = m[is][r] * m[i1][r];
      for (Index t = 0; t < cols; ++t) {
        const int updated = m[is][t] - f * m[i1][t];
        if (updated < -1 || updated > 1) {
          GomoryCertificate cert;
          cert.p_hat = {r, t, *column_of_unit(m, i1), *column_of_unit(m, is)};
          for (Index j = 0; j < d; ++j) {
            if (j != i1 && j != is) cert.x_hat.push_back(*column_of_unit(m, j));
          }
          if (!verify_gomory(input, cert)) throw DefectError("tumat", "Gomory certificate failed its minor check");
          return cert;
        }
      }
    }
    for (Index is : support) {
      if (is == i1) continue;
      const int f = m[is][r] * m[i1][r];
      for (Index t = 0; t < cols; ++t) m[is][t] -= f * m[i1][t];
    }
    if (m[i1][r] == -1) {
      for (Index i = 0; i < d; ++i) m[i][r] = -m[i][r];
    }
  }
  throw DefectError("tumat", "pivoting ended without an obstruction");
}

std::pair<Matrix, ScalingRecord> forest_scaling(const Matrix& g) {
  const Index rows = g.rows();
  const Index cols = g.cols();
  if (rank(g) < rows) throw PreconditionError("tumat", "forest scaling needs full row rank");
  ScalingRecord rec;
  rec.row_scales.assign(rows, 0);
  rec.col_scales.assign(cols, 0);
  std::vector<bool> row_seen(rows, false), col_seen(cols, false);
  struct Node {
    bool is_row;
    Index index;
  };
  for (Index start = 0; start < rows; ++start) {
    if (row_seen[start]) continue;
    row_seen[start] = true;
    rec.row_scales[start] = 1;
    std::deque<Node> queue{{true, start}};
    while (!queue.empty()) {
      const Node node = queue.front();
      queue.pop_front();
      if (node.is_row) {
        const Index r = node.index;
        for (Index c = 0; c < cols; ++c) {
          if (g(r, c) == 0 || col_seen[c]) continue;
          col_seen[c] = true;
          rec.col_scales[c] = 1 / abs(rec.row_scales[r] * g(r, c));
          rec.forest_edges.emplace_back(r, c);
          queue.push_back({false, c});
        }
      } else {
        const Index c = node.index;
        for (Index r = 0; r < rows; ++r) {
          if (g(r, c) == 0 || row_seen[r]) continue;
          row_seen[r] = true;
          rec.row_scales[r] = 1 / abs(g(r, c) * rec.col_scales[c]);
          rec.forest_edges.emplace_back(r, c);
          queue.push_back({true, r});
        }
      }
    }
  }
  for (Index c = 0; c < cols; ++c) {
    if (!col_seen[c]) rec.col_scales[c] = 1;
  }
  Matrix scaled_g(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) scaled_g(r, c) = rec.row_scales[r] * g(r, c) * rec.col_scales[c];
  return {std::move(scaled_g), std::move(rec)};
}

MembershipResult td_membership(const Zonotope& z) {
  const Zonotope canon = canonicalize(z);
  const Index d = canon.dim();
  if (!full_dimensional(canon)) throw PreconditionError("tumat", "membership needs a full-dimensional zonotope");
  if (d > kMaxTuOrder) {
    throw SizeLimitError("tumat", "membership is limited to d <= " + std::to_string(kMaxTuOrder));
  }
  const Matrix gens = canon.generator_matrix();
  const auto basis_idx = independent_columns(gens);
  const Matrix basis_inv = inverse(gens.select_cols(basis_idx));
  auto [scaled_g, rec] = forest_scaling(basis_inv * gens);

  for (Index r = 0; r < scaled_g.rows(); ++r) {
    for (Index c = 0; c < scaled_g.cols(); ++c) {
      if (!is_unit_entry(scaled_g(r, c))) {
        Refusal no;
        no.reason = "scaled entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") = " +
                    to_string(scaled_g(r, c)) + " is not in {-1,0,1}";
        no.entry = std::make_pair(r, c);
        return no;
      }
    }
  }
  if (auto v = tu_violation(scaled_g)) {
    Refusal no;
    no.reason = "scaled matrix has a square minor of modulus " + to_string(abs(v->det));
    no.violation = std::move(v);
    return no;
  }

  TUWitness w;
  Matrix row_diag(d, d);
  for (Index i = 0; i < d; ++i) row_diag(i, i) = rec.row_scales[i];
  w.basis_change = row_diag * basis_inv;
  for (const auto& s : rec.col_scales) w.generator_scales.push_back(1 / s);
  w.tu_matrix = std::move(scaled_g);
  w.canonical = canon;
  if (!verify_witness(w)) throw DefectError("tumat", "membership witness does not reproduce the generators");
  return w;
}

bool verify_witness(const TUWitness& w) {
  const Index d = w.canonical.dim();
  if (w.basis_change.rows() != d || w.basis_change.cols() != d) return false;
  if (w.tu_matrix.rows() != d || w.tu_matrix.cols() != w.canonical.size()) return false;
  if (w.generator_scales.size() != w.canonical.size()) return false;
  for (const auto& a : w.generator_scales) {
    if (a <= 0) return false;
  }
  if (!is_tu(w.tu_matrix)) return false;
  const Matrix back = inverse(w.basis_change);
  for (Index i = 0; i < w.canonical.size(); ++i) {
    const Vector image = back * scaled(w.tu_matrix.column(i), w.generator_scales[i]);
    const Vector& z = w.canonical.generator(i);
    if (image != z && image != scaled(z, -1)) return false;
  }
  return true;
}

}  // namespace mvse
