#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "orthodim/error.hpp"
#include "orthodim/exactalg/field.hpp"

namespace orthodim {

/// Vector in F^t. All coordinates share the vector's field.
class ExactVector {
 public:
  ExactVector() : field_(Field::rationals()) {}
  ExactVector(Field f, std::vector<FieldScalar> coords) : field_(f), c_(std::move(coords)) {
    for (const auto& x : c_) detail::require(x.field() == field_, "vector: coordinate from a different field");
  }
  ExactVector(Field f, std::initializer_list<long long> ints) : ExactVector(f, std::vector<long long>(ints)) {}
  ExactVector(Field f, const std::vector<long long>& ints) : field_(f) {
    c_.reserve(ints.size());
    for (auto x : ints) c_.emplace_back(f, x);
  }

  static ExactVector zero(Field f, std::size_t t) { return ExactVector(f, std::vector<long long>(t, 0)); }
  static ExactVector unit(Field f, std::size_t t, std::size_t i) {
    detail::require(i < t, "unit vector index out of range");
    std::vector<long long> v(t, 0);
    v[i] = 1;
    return ExactVector(f, v);
  }

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return c_.size(); }
  const FieldScalar& operator[](std::size_t i) const { return c_.at(i); }
  const std::vector<FieldScalar>& coords() const noexcept { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  ExactVector operator+(const ExactVector& o) const {
    same_shape(o);
    std::vector<FieldScalar> r;
    r.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.push_back(c_[i] + o.c_[i]);
    return ExactVector(field_, std::move(r));
  }
  ExactVector operator-(const ExactVector& o) const {
    same_shape(o);
    std::vector<FieldScalar> r;
    r.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.push_back(c_[i] - o.c_[i]);
    return ExactVector(field_, std::move(r));
  }
  ExactVector scaled(const FieldScalar& a) const {
    std::vector<FieldScalar> r;
    r.reserve(dim());
    for (const auto& x : c_) r.push_back(a * x);
    return ExactVector(field_, std::move(r));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? " " : "") + c_[i].to_string();
    return s;
  }

  friend bool operator==(const ExactVector& a, const ExactVector& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  void same_shape(const ExactVector& o) const {
    if (!(field_ == o.field_)) throw InvalidArgument("vector field mismatch: " + field_.name() + " vs " + o.field_.name());
    if (dim() != o.dim())
      throw InvalidArgument("vector dimension mismatch: " + std::to_string(dim()) + " vs " + std::to_string(o.dim()));
  }

 private:
  Field field_;
  std::vector<FieldScalar> c_;
};

/// Standard bilinear form sum_i u_i w_i, with no conjugation and no
/// nondegeneracy assumption.
inline FieldScalar inner_product(const ExactVector& u, const ExactVector& w) {
  u.same_shape(w);
  const Field& f = u.field();
  if (f.is_prime_field()) {
    const std::uint64_t p = f.characteristic();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < u.dim(); ++i) acc = (acc + u[i].residue() * w[i].residue()) % p;
    return FieldScalar(f, static_cast<long long>(acc));
  }
  Rational acc = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) acc += u[i].rational() * w[i].rational();
  return FieldScalar(f, acc);
}

/// u ⊗ w with index (i, i') at i * dim(w) + i'.
inline ExactVector tensor_product(const ExactVector& u, const ExactVector& w) {
  if (!(u.field() == w.field()))
    throw InvalidArgument("tensor_product: field mismatch " + u.field().name() + " vs " + w.field().name());
  std::vector<FieldScalar> r;
  r.reserve(u.dim() * w.dim());
  for (const auto& a : u.coords())
    for (const auto& b : w.coords()) r.push_back(a * b);
  return ExactVector(u.field(), std::move(r));
}

/// u ⊗ u ⊗ ... ⊗ u (k factors), associated to the left.
inline ExactVector tensor_power(const ExactVector& u, int k) {
  detail::require(k >= 1, "tensor_power: exponent must be at least 1");
  ExactVector r = u;
  for (int i = 1; i < k; ++i) r = tensor_product(r, u);
  return r;
}

/// Dense row-major matrix over a Field.
class ExactMatrix {
 public:
  ExactMatrix() : field_(Field::rationals()) {}
  ExactMatrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, FieldScalar::zero(f)) {}
  ExactMatrix(Field f, const std::vector<std::vector<long long>>& rows) : field_(f), rows_(rows.size()) {
    cols_ = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows) {
      detail::require(r.size() == cols_, "matrix: ragged rows");
      for (auto x : r) a_.emplace_back(f, x);
    }
  }

  static ExactMatrix identity(Field f, std::size_t n) {
    ExactMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldScalar::one(f);
    return m;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  FieldScalar& at(std::size_t i, std::size_t j) {
    detail::require(i < rows_ && j < cols_, "matrix: index out of range");
    return a_[i * cols_ + j];
  }
  const FieldScalar& at(std::size_t i, std::size_t j) const {
    detail::require(i < rows_ && j < cols_, "matrix: index out of range");
    return a_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, const FieldScalar& x) {
    detail::require(x.field() == field_, "matrix: entry from a different field");
    at(i, j) = x;
  }

  ExactMatrix operator*(const ExactMatrix& o) const {
    detail::require(field_ == o.field_, "matrix product: field mismatch");
    detail::require(cols_ == o.rows_, "matrix product: shape mismatch");
    ExactMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& x = a_[i * cols_ + k];
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.a_[i * o.cols_ + j] += x * o.a_[k * o.cols_ + j];
      }
    return r;
  }

  /// Number of nonzero entries.
  std::size_t nonzeros() const {
    std::size_t c = 0;
    for (const auto& x : a_) c += x.is_zero() ? 0 : 1;
    return c;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldScalar> a_;
};

/// Exact rank by Gaussian elimination (first nonzero pivot in each column).
inline std::size_t rank(ExactMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    const FieldScalar inv = m.at(r, c).inverse();
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, c).is_zero()) continue;
      const FieldScalar factor = m.at(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace orthodim
