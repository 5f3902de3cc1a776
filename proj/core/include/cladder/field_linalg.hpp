#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cladder/errors.hpp"

namespace cladder {

// Modular arithmetic in F_p, p prime and < 2^16 so products fit in uint32_t.
class Field {
 public:
  explicit Field(uint32_t p = 2);

  uint32_t prime() const { return p_; }
  uint32_t reduce(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    return static_cast<uint32_t>(r < 0 ? r + p_ : r);
  }
  uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p_; }
  uint32_t sub(uint32_t a, uint32_t b) const { return (a + p_ - b) % p_; }
  uint32_t mul(uint32_t a, uint32_t b) const { return (a * b) % p_; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t inv(uint32_t a) const;
  bool operator==(const Field&) const = default;

 private:
  uint32_t p_;
};

// Dense matrix over F_p. Row-major, entries already reduced mod p.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), field_(2) {}
  Matrix(int rows, int cols, uint32_t p);
  Matrix(int rows, int cols, uint32_t p, std::vector<uint32_t> entries);

  static Matrix identity(int n, uint32_t p);
  static Matrix zero(int rows, int cols, uint32_t p) { return Matrix(rows, cols, p); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint32_t prime() const { return field_.prime(); }
  const Field& field() const { return field_; }

  uint32_t operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, int64_t v) { a_[static_cast<size_t>(r) * cols_ + c] = field_.reduce(v); }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const = default;

  Matrix transpose() const;
  bool is_zero() const;
  Matrix column(int c) const;
  Matrix columns(const std::vector<int>& idx) const;

  std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const;

 private:
  int rows_, cols_;
  Field field_;
  std::vector<uint32_t> a_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
// Block-diagonal sum.
Matrix dsum(const Matrix& a, const Matrix& b);

// Reduced row echelon form; pivot columns appended to *pivots if non-null.
// Pivoting is deterministic: scan rows top-down, pick the leftmost nonzero column.
Matrix rref(const Matrix& m, std::vector<int>* pivots = nullptr);
int rank(const Matrix& m);
// Columns span ker(m); (cols x nullity), in reduced deterministic form.
Matrix kernel_basis(const Matrix& m);
// Basis of the column space: the pivot columns of m, in order.
Matrix column_space_basis(const Matrix& m);
// x with a x = b, or nullopt if inconsistent.
std::optional<std::vector<uint32_t>> solve(const Matrix& a, const std::vector<uint32_t>& b);
// X with a X = b (columnwise solve), or nullopt if any column is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
// Q with Q m = 0, Q of shape (rows - rank) x rows and full row rank;
// projection of F_p^rows onto a complement of the column space of m.
Matrix cokernel_projection(const Matrix& m);

}  // namespace cladder
