#include "cwlab/exact_matrix.hpp"

#include <utility>

#include "cwlab/error.hpp"

namespace cwlab {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  ExactMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw Error(ErrorCode::kDimensionMismatch, "from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::diagonal(const Vec& diag) {
  ExactMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ExactMatrix ExactMatrix::outer(const Vec& u, const Vec& v) {
  ExactMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

Vec ExactMatrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec ExactMatrix::col(std::size_t j) const {
  Vec out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool ExactMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorCode::kDimensionMismatch, "matrix add: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorCode::kDimensionMismatch, "matrix sub: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ExactMatrix operator*(const Scalar& s, const ExactMatrix& m) {
  ExactMatrix out(m);
  for (auto& e : out.data_) e *= s;
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::kDimensionMismatch, "matrix product: shape mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

Vec operator*(const ExactMatrix& a, const Vec& x) {
  if (a.cols_ != x.size())
    throw Error(ErrorCode::kDimensionMismatch, "matrix-vector: shape mismatch");
  Vec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!a(i, j).is_zero() && !x[j].is_zero()) out[i] += a(i, j) * x[j];
  return out;
}

Scalar ExactMatrix::quadratic_form(const Vec& x) const {
  return dot(x, (*this) * x);
}

EchelonForm bareiss_echelon(ExactMatrix m) {
  EchelonForm out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Scalar prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Scalar pivot = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Scalar lead = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Scalar v = pivot * m(i, j);
        if (!lead.is_zero() && !m(r, j).is_zero()) v -= lead * m(r, j);
        v /= prev;
        m(i, j) = std::move(v);
      }
      m(i, c) = 0;
    }
    prev = pivot;
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ExactMatrix& m) {
  return bareiss_echelon(m).pivot_cols.size();
}

std::vector<Vec> null_space(const ExactMatrix& m) {
  const EchelonForm ech = bareiss_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(cols);
    x[f] = 1;
    for (std::size_t r = ech.pivot_cols.size(); r-- > 0;) {
      const std::size_t p = ech.pivot_cols[r];
      Scalar sum;
      for (std::size_t j = p + 1; j < cols; ++j)
        if (!x[j].is_zero() && !ech.reduced(r, j).is_zero())
          sum += ech.reduced(r, j) * x[j];
      x[p] = -sum / ech.reduced(r, p);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Scalar determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::kDimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ExactMatrix a(m);
  Scalar prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

namespace {

ExactMatrix leading_block(const ExactMatrix& m, std::size_t k) {
  ExactMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

std::vector<Scalar> leading_principal_minors(const ExactMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::kDimensionMismatch, "minors of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Scalar> minors;
  minors.reserve(n);
  // Without pivoting, the k-th Bareiss pivot is the k-th leading minor.
  ExactMatrix a(m);
  Scalar prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      minors.push_back(0);
      for (std::size_t j = k + 2; j <= n; ++j)
        minors.push_back(determinant(leading_block(m, j)));
      return minors;
    }
    minors.push_back(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return minors;
}

bool is_positive_definite(const ExactMatrix& m) {
  if (!m.is_symmetric())
    throw Error(ErrorCode::kNotSymmetric, "is_positive_definite: matrix not symmetric");
  const std::size_t n = m.rows();
  ExactMatrix a(m);
  Scalar prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).sign() <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return true;
}

std::optional<Vec> solve(const ExactMatrix& a, const Vec& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw Error(ErrorCode::kDimensionMismatch, "solve: shape mismatch");
  ExactMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  // Gauss-Jordan over the field
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && aug(p, k).is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != k)
      for (std::size_t j = 0; j <= n; ++j) std::swap(aug(p, j), aug(k, j));
    const Scalar inv = aug(k, k).inverse();
    for (std::size_t j = k; j <= n; ++j) aug(k, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || aug(i, k).is_zero()) continue;
      const Scalar f = aug(i, k);
      for (std::size_t j = k; j <= n; ++j)
        if (!aug(k, j).is_zero()) aug(i, j) -= f * aug(k, j);
    }
  }
  return aug.col(n);
}

std::size_t affine_rank(std::span<const Vec> points) {
  if (points.empty())
    throw Error(ErrorCode::kInvalidArgument, "affine_rank: empty point list");
  RowReducer reducer(points.front().size());
  for (std::size_t i = 1; i < points.size(); ++i) {
    reducer.add(points[i] - points[0]);
    if (reducer.rank() == reducer.cols()) break;
  }
  return reducer.rank();
}

bool RowReducer::add(Vec row) {
  if (row.size() != cols_)
    throw Error(ErrorCode::kDimensionMismatch, "RowReducer: row length mismatch");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar f = row[pivots_[k]];
    if (!f.is_zero()) axpy(row, -f, basis_[k]);
  }
  std::size_t p = 0;
  while (p < cols_ && row[p].is_zero()) ++p;
  if (p == cols_) return false;
  const Scalar inv = row[p].inverse();
  for (auto& e : row)
    if (!e.is_zero()) e *= inv;
  // keep the basis fully reduced in the new pivot column
  for (auto& b : basis_) {
    const Scalar f = b[p];
    if (!f.is_zero()) axpy(b, -f, row);
  }
  basis_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

std::vector<Vec> RowReducer::null_space() const {
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec x(cols_);
    x[f] = 1;
    for (std::size_t k = 0; k < basis_.size(); ++k) x[pivots_[k]] = -basis_[k][f];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace cwlab
