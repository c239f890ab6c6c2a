#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "scrollsec/field.hpp"

namespace scrollsec {

using Vec = std::vector<Fe>;

/// Dense row-major matrix of field elements.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat identity(const Field& field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fe& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Fe& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Fe> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Fe> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }

  void append_row(std::span<const Fe> values);
  Mat transposed() const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fe> data_;
};

Mat mat_mul(const Field& field, const Mat& a, const Mat& b);
Vec mat_vec(const Field& field, const Mat& a, std::span<const Fe> v);
Fe dot(const Field& field, std::span<const Fe> a, std::span<const Fe> b);

struct RowReduction {
  std::size_t rank = 0;
  /// Reduced row echelon form, nonzero rows only.
  Mat echelon;
  /// Rows spanning {v : m v = 0}.
  Mat kernel;
  std::vector<std::size_t> pivots;
};

RowReduction row_reduce(const Field& field, const Mat& m);
std::size_t rank(const Field& field, const Mat& m);
/// Determinant of a square matrix by elimination.
Fe determinant(const Field& field, Mat m);

bool is_zero_vec(std::span<const Fe> v);
/// Scales v so that its first nonzero entry is 1 (projective representative).
Vec normalized(const Field& field, std::span<const Fe> v);

/// Projective linear subspace of P^N stored as an RREF basis. Equal subspaces
/// have identical bases, so equality is structural.
class LinearSubspace {
 public:
  explicit LinearSubspace(std::size_t ambient_dim = 0)
      : ambient_(ambient_dim), basis_(0, ambient_dim + 1) {}

  /// Smallest subspace containing all points; throws DimensionMismatch.
  static LinearSubspace span(const Field& field, const std::vector<Vec>& points,
                             std::size_t ambient_dim);
  static LinearSubspace from_basis(const Field& field, const Mat& rows, std::size_t ambient_dim);
  static LinearSubspace full(const Field& field, std::size_t ambient_dim);
  /// Span of the given coordinate vectors e_i.
  static LinearSubspace coordinate(const Field& field, std::size_t ambient_dim,
                                   const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const { return ambient_; }
  /// Projective dimension; -1 for the empty subspace.
  int dim() const { return static_cast<int>(basis_.rows()) - 1; }
  bool empty() const { return basis_.rows() == 0; }
  const Mat& basis() const { return basis_; }

  bool contains(const Field& field, std::span<const Fe> p) const;
  bool contains(const Field& field, const LinearSubspace& other) const;
  LinearSubspace join(const Field& field, const LinearSubspace& other) const;
  LinearSubspace intersect(const Field& field, const LinearSubspace& other) const;
  /// Linear forms cutting out the subspace.
  Mat annihilator(const Field& field) const;

  friend bool operator==(const LinearSubspace&, const LinearSubspace&) = default;

 private:
  std::size_t ambient_;
  Mat basis_;
};

/// All points of a subspace over the given field (normalized representatives).
std::vector<Vec> enumerate_points(const Field& field, const LinearSubspace& s);

}  // namespace scrollsec
