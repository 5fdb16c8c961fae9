#include "hkt/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hkt {

namespace {

// Clear a row to Gaussian-integer entries (common denominator).
void clear_denominators(std::vector<Gaussian>& row) {
  mpz_class lcm = 1;
  for (const auto& g : row) {
    if (sgn(g.re) != 0)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), g.re.get_den().get_mpz_t());
    if (sgn(g.im) != 0)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), g.im.get_den().get_mpz_t());
  }
  if (lcm == 1) return;
  Gaussian f((Rational(lcm)));
  for (auto& g : row)
    if (!g.is_zero()) g *= f;
}

// Exact division in Z[i]; caller guarantees divisibility (Bareiss minors).
Gaussian exact_div(const Gaussian& a, const Gaussian& b) { return a / b; }

}  // namespace

Echelon bareiss_echelon(const Matrix& m) {
  const int nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Gaussian>> rows(nr, std::vector<Gaussian>(nc));
  for (int r = 0; r < nr; ++r) {
    for (int c = 0; c < nc; ++c) rows[r][c] = m(r, c);
    clear_denominators(rows[r]);
  }

  Echelon e;
  e.ncols = nc;
  Gaussian prev_pivot(1);
  int row = 0;
  for (int col = 0; col < nc && row < nr; ++col) {
    // Pivot with the smallest bit length in this column.
    int best = -1;
    size_t best_size = 0;
    for (int r = row; r < nr; ++r) {
      if (rows[r][col].is_zero()) continue;
      size_t s = bit_size(rows[r][col]);
      if (best < 0 || s < best_size) {
        best = r;
        best_size = s;
      }
    }
    if (best < 0) continue;
    std::swap(rows[row], rows[best]);
    const Gaussian pivot = rows[row][col];
    for (int r = row + 1; r < nr; ++r) {
      if (rows[r][col].is_zero()) {
        // Still rescale so the fraction-free invariant is preserved.
        for (int c = col + 1; c < nc; ++c)
          if (!rows[r][c].is_zero())
            rows[r][c] = exact_div(rows[r][c] * pivot, prev_pivot);
        continue;
      }
      const Gaussian factor = rows[r][col];
      for (int c = col + 1; c < nc; ++c) {
        Gaussian v = rows[r][c] * pivot - factor * rows[row][c];
        rows[r][c] = v.is_zero() ? Gaussian(0) : exact_div(v, prev_pivot);
      }
      rows[r][col] = Gaussian(0);
    }
    prev_pivot = pivot;
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.rank = row;
  rows.resize(row);
  e.rows = std::move(rows);
  return e;
}

int rank_of(const Matrix& m) { return bareiss_echelon(m).rank; }

std::vector<std::vector<Gaussian>> kernel_basis(const Matrix& m) {
  Echelon e = bareiss_echelon(m);
  const int nc = e.ncols;
  std::vector<bool> is_pivot(nc, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Gaussian>> basis;
  for (int fc = 0; fc < nc; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Gaussian> v(nc);
    v[fc] = Gaussian(1);
    // Back-substitute through the echelon rows.
    for (int r = e.rank - 1; r >= 0; --r) {
      int pc = e.pivot_cols[r];
      Gaussian acc(0);
      for (int c = pc + 1; c < nc; ++c)
        if (!v[c].is_zero() && !e.rows[r][c].is_zero())
          acc += e.rows[r][c] * v[c];
      v[pc] = -acc / e.rows[r][pc];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Gaussian>> solve_linear(
    const Matrix& m, const std::vector<Gaussian>& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows())
    throw std::invalid_argument("solve_linear: rhs size mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  Echelon e = bareiss_echelon(aug);
  const int nc = m.cols();
  // Inconsistent iff some pivot lands in the rhs column.
  for (int c : e.pivot_cols)
    if (c == nc) return std::nullopt;

  std::vector<Gaussian> x(nc);
  for (int r = e.rank - 1; r >= 0; --r) {
    int pc = e.pivot_cols[r];
    Gaussian acc = e.rows[r][nc];
    for (int c = pc + 1; c < nc; ++c)
      if (!x[c].is_zero() && !e.rows[r][c].is_zero())
        acc -= e.rows[r][c] * x[c];
    x[pc] = acc / e.rows[r][pc];
  }
  return x;
}

Matrix inverse_of(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const int n = m.rows();
  Matrix inv(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Gaussian> e(n);
    e[j] = Gaussian(1);
    auto col = solve_linear(m, e);
    if (!col) throw std::domain_error("inverse: singular matrix");
    for (int i = 0; i < n; ++i) inv(i, j) = (*col)[i];
  }
  // rank check: solve_linear can return a particular solution for a
  // rank-deficient consistent system, so verify.
  if (!(m * inv == Matrix::identity(n)))
    throw std::domain_error("inverse: singular matrix");
  return inv;
}

Inertia hermitian_inertia(Matrix h) {
  const int n = h.rows();
  if (h.cols() != n) throw std::invalid_argument("inertia: not square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (h(i, j) != h(j, i).conj())
        throw std::invalid_argument("inertia: matrix not Hermitian");

  Inertia res;
  std::vector<bool> done(n, false);
  int remaining = n;
  while (remaining > 0) {
    // Find a usable (nonzero real) diagonal pivot.
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && !h(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) {
      // All remaining diagonal entries vanish. If any off-diagonal entry in
      // the remaining block is nonzero, the block [[0,a],[conj(a),0]] is a
      // principal submatrix with negative determinant: one positive and one
      // negative eigenvalue.
      bool found = false;
      for (int i = 0; i < n && !found; ++i) {
        if (done[i]) continue;
        for (int j = 0; j < n; ++j) {
          if (done[j] || j == i) continue;
          if (!h(i, j).is_zero()) {
            // Split off the 2x2 hyperbolic pair exactly:
            // restrict and eliminate both rows.
            res.positive += 1;
            res.negative += 1;
            const Gaussian a = h(i, j);
            // Schur complement of the 2x2 block [[0,a],[a*,0]].
            for (int r = 0; r < n; ++r) {
              if (done[r] || r == i || r == j) continue;
              for (int c = 0; c < n; ++c) {
                if (done[c] || c == i || c == j) continue;
                // inverse of [[0,a],[a*,0]] is [[0,1/a*],[1/a,0]]
                Gaussian corr = h(r, j) * (Gaussian(1) / a) * h(i, c) +
                                h(r, i) * (Gaussian(1) / a.conj()) * h(j, c);
                h(r, c) -= corr;
              }
            }
            for (int r = 0; r < n; ++r) {
              h(r, i) = h(i, r) = Gaussian(0);
              h(r, j) = h(j, r) = Gaussian(0);
            }
            done[i] = done[j] = true;
            remaining -= 2;
            found = true;
            break;
          }
        }
      }
      if (!found) {
        for (int i = 0; i < n; ++i)
          if (!done[i]) {
            done[i] = true;
            res.zero += 1;
            --remaining;
          }
      }
      continue;
    }
    const Gaussian d = h(p, p);
    if (sgn(d.im) != 0)
      throw std::invalid_argument("inertia: non-real diagonal");
    if (sgn(d.re) > 0)
      res.positive += 1;
    else
      res.negative += 1;
    for (int r = 0; r < n; ++r) {
      if (done[r] || r == p) continue;
      for (int c = 0; c < n; ++c) {
        if (done[c] || c == p) continue;
        h(r, c) -= h(r, p) * h(p, c) / d;
      }
    }
    for (int r = 0; r < n; ++r) h(r, p) = h(p, r) = Gaussian(0);
    done[p] = true;
    --remaining;
  }
  return res;
}

Definiteness classify_hermitian(const Matrix& h) {
  Inertia in = hermitian_inertia(h);
  const int n = h.rows();
  if (in.zero == n) return Definiteness::Zero;
  if (in.positive == n) return Definiteness::PositiveDefinite;
  if (in.negative == n) return Definiteness::NegativeDefinite;
  if (in.negative == 0) return Definiteness::PositiveSemidefinite;
  if (in.positive == 0) return Definiteness::NegativeSemidefinite;
  return Definiteness::Indefinite;
}

std::vector<std::vector<Gaussian>> independent_subset(
    const std::vector<std::vector<Gaussian>>& vecs) {
  std::vector<std::vector<Gaussian>> out;
  SpanTracker span;
  for (const auto& v : vecs)
    if (span.insert(v)) out.push_back(v);
  return out;
}

int rank_of_vectors(const std::vector<std::vector<Gaussian>>& vecs) {
  SpanTracker span;
  for (const auto& v : vecs) span.insert(v);
  return span.dim();
}

bool SpanTracker::insert(std::vector<Gaussian> v) {
  std::vector<Gaussian> combo(inserted_ + 1);
  combo[inserted_] = Gaussian(1);
  for (const auto& row : rows_) {
    if (row.pivot >= static_cast<int>(v.size())) continue;
    const Gaussian c = v[row.pivot];
    if (c.is_zero()) continue;
    for (size_t i = 0; i < row.v.size(); ++i)
      if (!row.v[i].is_zero()) v[i] -= c * row.v[i];
    for (size_t i = 0; i < row.combo.size(); ++i)
      if (!row.combo[i].is_zero()) {
        if (combo.size() <= i) combo.resize(i + 1);
        combo[i] -= c * row.combo[i];
      }
  }
  int pivot = -1;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      pivot = int(i);
      break;
    }
  ++inserted_;
  if (pivot < 0) return false;
  const Gaussian inv = v[pivot].inv();
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  for (auto& x : combo)
    if (!x.is_zero()) x *= inv;
  rows_.push_back(Row{pivot, std::move(v), std::move(combo)});
  return true;
}

std::optional<std::vector<Gaussian>> SpanTracker::coordinates(
    std::vector<Gaussian> v) const {
  std::vector<Gaussian> coeff(inserted_);
  std::vector<Gaussian> acc;  // accumulated combo of echelon rows
  acc.assign(inserted_, Gaussian(0));
  for (const auto& row : rows_) {
    if (row.pivot >= static_cast<int>(v.size())) continue;
    const Gaussian c = v[row.pivot];
    if (c.is_zero()) continue;
    for (size_t i = 0; i < row.v.size(); ++i)
      if (!row.v[i].is_zero()) v[i] -= c * row.v[i];
    for (size_t i = 0; i < row.combo.size(); ++i)
      if (!row.combo[i].is_zero()) acc[i] += c * row.combo[i];
  }
  for (const auto& x : v)
    if (!x.is_zero()) return std::nullopt;
  return acc;
}

}  // namespace hkt
