#pragma once

#include <optional>
#include <vector>

#include "hkt/rational.hpp"

namespace hkt {

// Dense matrix over the Gaussian rationals. Sizes in this project stay small
// (a few hundred rows at most); everything heavier goes through sparse paths.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Gaussian(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Gaussian& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const Gaussian& operator()(int r, int c) const {
    return data_[size_t(r) * cols_ + c];
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }
  Matrix conj_transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Gaussian& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Gaussian& bkj = b(k, j);
          if (!bkj.is_zero()) r(i, j) += aik * bkj;
        }
      }
    return r;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix size mismatch");
    Matrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i)
      r.data_[i] = a.data_[i] + b.data_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix size mismatch");
    Matrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i)
      r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }
  Matrix scaled(const Gaussian& c) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  bool is_zero() const {
    for (const auto& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  std::vector<Gaussian> apply(const std::vector<Gaussian>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw std::invalid_argument("matrix apply size mismatch");
    std::vector<Gaussian> r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero())
          r[i] += (*this)(i, j) * v[j];
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<Gaussian> data_;
};

// Result of fraction-free elimination.
struct Echelon {
  int rank = 0;
  std::vector<int> pivot_cols;          // one per pivot row
  std::vector<std::vector<Gaussian>> rows;  // echelon rows (over Z[i])
  int ncols = 0;
};

// Bareiss-style fraction-free elimination. Rows are first cleared to Gaussian
// integers; pivots are chosen by smallest bit length to limit growth. The
// two-step division in the Bareiss update is exact over Z[i].
Echelon bareiss_echelon(const Matrix& m);

int rank_of(const Matrix& m);

// Basis of the right kernel (exact).
std::vector<std::vector<Gaussian>> kernel_basis(const Matrix& m);

// One exact solution of M x = rhs, or nullopt when inconsistent.
std::optional<std::vector<Gaussian>> solve_linear(const Matrix& m,
                                                  const std::vector<Gaussian>& rhs);

// Exact inverse; throws for singular input.
Matrix inverse_of(const Matrix& m);

// Inertia of a Hermitian matrix, computed by exact symmetric elimination.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Throws if the input is not Hermitian.
Inertia hermitian_inertia(Matrix h);

enum class Definiteness {
  PositiveDefinite,
  NegativeDefinite,
  PositiveSemidefinite,
  NegativeSemidefinite,
  Zero,
  Indefinite,
};

Definiteness classify_hermitian(const Matrix& h);

// Reduce a spanning set to a basis (subset of the input vectors).
std::vector<std::vector<Gaussian>> independent_subset(
    const std::vector<std::vector<Gaussian>>& vecs);

int rank_of_vectors(const std::vector<std::vector<Gaussian>>& vecs);

// Incremental row-echelon span tracker used for closure computations.
class SpanTracker {
 public:
  // Returns true (and absorbs the vector) if v was not already in the span.
  bool insert(std::vector<Gaussian> v);
  // Expresses v in terms of the inserted vectors; nullopt if outside the span.
  std::optional<std::vector<Gaussian>> coordinates(
      std::vector<Gaussian> v) const;
  int dim() const { return int(rows_.size()); }

 private:
  struct Row {
    int pivot;
    std::vector<Gaussian> v;       // echelon row, pivot normalized to 1
    std::vector<Gaussian> combo;   // expression in terms of inserted vectors
  };
  std::vector<Row> rows_;
  int inserted_ = 0;
};

}  // namespace hkt
