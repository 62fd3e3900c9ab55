#pragma once

#include "divtorus/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace divtorus {

/// Dense matrix over Q, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatVec apply(const RatVec& x) const;  // M x
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix& operator+=(const RatMatrix& rhs);
  RatMatrix& operator-=(const RatMatrix& rhs);
  void add_scaled(const RatMatrix& rhs, const Rat& c);  // *this += c * rhs
  RatMatrix& scale(const Rat& c);
  bool operator==(const RatMatrix& rhs) const;
  bool is_zero() const;
  Rat trace() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

bool is_zero_vec(const RatVec& v);
RatVec scaled_vec(const RatVec& v, const Rat& c);
void axpy(RatVec& y, const Rat& c, const RatVec& x);  // y += c x
Rat dot(const RatVec& a, const RatVec& b);

/// A subspace kept as a reduced row-echelon basis. Rows are ordered by pivot
/// column, every pivot is 1 and is the only nonzero entry in its column, so
/// equal spaces have identical row lists.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<RatVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Inserts a vector; returns true iff the rank grew.
  bool insert(RatVec v);
  /// Residual of v after elimination against the rows.
  RatVec reduce(RatVec v) const;
  bool contains(const RatVec& v) const;
  bool contains_space(const RowSpace& other) const;
  bool same_space(const RowSpace& other) const;

 private:
  std::size_t cols_;
  std::vector<RatVec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of the span of a set of vectors.
std::size_t rank_of(const std::vector<RatVec>& vectors, std::size_t cols);

/// RowSpace variant that also tracks how each reduced row combines the
/// inserted independent vectors, so members of the span can be expressed in
/// that basis (used when growing a module basis and solving for operator
/// matrices in it).
class SpanSolver {
 public:
  explicit SpanSolver(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t basis_size() const { return nbasis_; }

  /// Returns true iff v was independent of the span so far; v then becomes
  /// basis vector number basis_size()-1.
  bool insert(const RatVec& v);
  /// Coordinates of v in the inserted basis, or nullopt if v is outside.
  std::optional<RatVec> express(const RatVec& v) const;

 private:
  std::size_t cols_;
  std::size_t nbasis_ = 0;
  std::vector<RatVec> rows_;    // RREF rows
  std::vector<RatVec> coords_;  // rows_[i] = sum_j coords_[i][j] * basis_j
  std::vector<std::size_t> pivots_;
};

}  // namespace divtorus
