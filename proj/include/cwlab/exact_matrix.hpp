#pragma once

// Dense matrices over Q(sqrt 3) with fraction-free elimination.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cwlab/scalar.hpp"

namespace cwlab {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<Vec>& rows);
  static ExactMatrix diagonal(const Vec& diag);
  /// Outer product u v^T.
  static ExactMatrix outer(const Vec& u, const Vec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  ExactMatrix transpose() const;
  bool is_symmetric() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const Scalar& s, const ExactMatrix& m);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend Vec operator*(const ExactMatrix& a, const Vec& x);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  /// x^T M x
  Scalar quadratic_form(const Vec& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Row echelon form from Bareiss elimination with row pivoting.
struct EchelonForm {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

EchelonForm bareiss_echelon(ExactMatrix m);

std::size_t rank(const ExactMatrix& m);

/// Basis of {x : M x = 0}; cols - rank vectors.
std::vector<Vec> null_space(const ExactMatrix& m);

/// Leading principal minors det(M[0..k, 0..k]) for k = 1..n.
std::vector<Scalar> leading_principal_minors(const ExactMatrix& m);

/// Sylvester's criterion; throws kNotSymmetric on asymmetric input.
bool is_positive_definite(const ExactMatrix& m);

Scalar determinant(const ExactMatrix& m);

/// Unique solution of A x = b, or nullopt when A is singular.
std::optional<Vec> solve(const ExactMatrix& a, const Vec& b);

/// Rank of {p_i - p_0}. Throws kInvalidArgument on empty input.
std::size_t affine_rank(std::span<const Vec> points);

/// Incremental reduced row echelon basis. Rows are fed one at a time;
/// each call costs O(rank * cols) scalar operations.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  /// Returns true when the row increased the rank.
  bool add(Vec row);

  std::size_t rank() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<Vec> null_space() const;

 private:
  std::size_t cols_;
  std::vector<Vec> basis_;  // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
};

}  // namespace cwlab
