#include "divtorus/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace divtorus {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVec RatMatrix::apply(const RatVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("RatMatrix::apply: size mismatch");
  RatVec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat acc;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat& m = a_[i * cols_ + j];
      if (m != 0 && x[j] != 0) acc += m * x[j];
    }
    y[i] = acc;
  }
  return y;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("RatMatrix::operator*: size mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& m = a_[i * cols_ + k];
      if (m == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rat& r = rhs(k, j);
        if (r != 0) out(i, j) += m * r;
      }
    }
  return out;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& rhs) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& rhs) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

void RatMatrix::add_scaled(const RatMatrix& rhs, const Rat& c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (rhs.a_[i] != 0) a_[i] += c * rhs.a_[i];
}

RatMatrix& RatMatrix::scale(const Rat& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

bool RatMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

Rat RatMatrix::trace() const {
  Rat t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += a_[i * cols_ + i];
  return t;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out = a * b;
  out -= b * a;
  return out;
}

bool is_zero_vec(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

RatVec scaled_vec(const RatVec& v, const Rat& c) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out[i] = c * v[i];
  return out;
}

void axpy(RatVec& y, const Rat& c, const RatVec& x) {
  if (c == 0) return;
  if (y.size() != x.size()) throw std::invalid_argument("axpy: size mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] += c * x[i];
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat acc;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  return acc;
}

namespace {

std::size_t first_nonzero(const RatVec& v) {
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) return j;
  return v.size();
}

}  // namespace

bool RowSpace::insert(RatVec v) {
  if (v.size() != cols_) throw std::invalid_argument("RowSpace::insert: size mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat& c = v[pivots_[i]];
    if (c != 0) {
      Rat f = c;  // rows are pivot-normalized to 1
      for (std::size_t j = 0; j < cols_; ++j)
        if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
    }
  }
  const std::size_t p = first_nonzero(v);
  if (p == cols_) return false;
  Rat inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  // keep full RREF: clear the new pivot column in existing rows
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat c = rows_[i][p];
    if (c != 0)
      for (std::size_t j = 0; j < cols_; ++j)
        if (v[j] != 0) rows_[i][j] -= c * v[j];
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  return true;
}

RatVec RowSpace::reduce(RatVec v) const {
  if (v.size() != cols_) throw std::invalid_argument("RowSpace::reduce: size mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat c = v[pivots_[i]];
    if (c != 0)
      for (std::size_t j = 0; j < cols_; ++j)
        if (rows_[i][j] != 0) v[j] -= c * rows_[i][j];
  }
  return v;
}

bool RowSpace::contains(const RatVec& v) const { return is_zero_vec(reduce(v)); }

bool RowSpace::contains_space(const RowSpace& other) const {
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

bool RowSpace::same_space(const RowSpace& other) const {
  return rank() == other.rank() && contains_space(other);
}

std::size_t rank_of(const std::vector<RatVec>& vectors, std::size_t cols) {
  RowSpace sp(cols);
  for (const auto& v : vectors) sp.insert(v);
  return sp.rank();
}

bool SpanSolver::insert(const RatVec& v) {
  if (v.size() != cols_) throw std::invalid_argument("SpanSolver::insert: size mismatch");
  RatVec r = v;
  RatVec c(nbasis_ + 1);
  c[nbasis_] = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat f = r[pivots_[i]];
    if (f != 0) {
      for (std::size_t j = 0; j < cols_; ++j)
        if (rows_[i][j] != 0) r[j] -= f * rows_[i][j];
      for (std::size_t j = 0; j < coords_[i].size(); ++j)
        if (coords_[i][j] != 0) c[j] -= f * coords_[i][j];
    }
  }
  const std::size_t p = first_nonzero(r);
  if (p == cols_) return false;
  const Rat inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  for (auto& x : c) x *= inv;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat f = rows_[i][p];
    if (f != 0) {
      for (std::size_t j = 0; j < cols_; ++j)
        if (r[j] != 0) rows_[i][j] -= f * r[j];
      coords_[i].resize(nbasis_ + 1);
      for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) coords_[i][j] -= f * c[j];
    }
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
  coords_.insert(coords_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(c));
  ++nbasis_;
  return true;
}

std::optional<RatVec> SpanSolver::express(const RatVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("SpanSolver::express: size mismatch");
  RatVec r = v;
  RatVec c(nbasis_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat f = r[pivots_[i]];
    if (f != 0) {
      for (std::size_t j = 0; j < cols_; ++j)
        if (rows_[i][j] != 0) r[j] -= f * rows_[i][j];
      for (std::size_t j = 0; j < coords_[i].size(); ++j)
        if (coords_[i][j] != 0) c[j] += f * coords_[i][j];
    }
  }
  if (!is_zero_vec(r)) return std::nullopt;
  return c;
}

}  // namespace divtorus
