#include "cladder/field_linalg.hpp"

#include <algorithm>

namespace cladder {

namespace {

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field::Field(uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 16)) throw error(errc::usage, "field modulus must be a prime < 2^16");
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw error(errc::internal, "division by zero in F_p");
  // extended Euclid
  int64_t t = 0, new_t = 1;
  int64_t r = p_, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  return reduce(t);
}

Matrix::Matrix(int rows, int cols, uint32_t p)
    : rows_(rows), cols_(cols), field_(p), a_(static_cast<size_t>(rows) * cols, 0) {}

Matrix::Matrix(int rows, int cols, uint32_t p, std::vector<uint32_t> entries)
    : rows_(rows), cols_(cols), field_(p), a_(std::move(entries)) {
  if (a_.size() != static_cast<size_t>(rows) * cols) throw error(errc::internal, "matrix entry count mismatch");
  for (auto& v : a_) v %= field_.prime();
}

Matrix Matrix::identity(int n, uint32_t p) {
  Matrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_ || prime() != rhs.prime()) throw error(errc::internal, "matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_, prime());
  const uint64_t p = prime();
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      uint64_t v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        uint64_t cur = out(i, j);
        out.a_[static_cast<size_t>(i) * rhs.cols_ + j] = static_cast<uint32_t>((cur + v * rhs(k, j)) % p);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw error(errc::internal, "matrix sum shape mismatch");
  Matrix out(rows_, cols_, prime());
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.add(a_[i], rhs.a_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw error(errc::internal, "matrix difference shape mismatch");
  Matrix out(rows_, cols_, prime());
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.sub(a_[i], rhs.a_[i]);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, prime());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, (*this)(i, j));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](uint32_t v) { return v == 0; });
}

Matrix Matrix::column(int c) const {
  Matrix out(rows_, 1, prime());
  for (int i = 0; i < rows_; ++i) out.set(i, 0, (*this)(i, c));
  return out;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
  Matrix out(rows_, static_cast<int>(idx.size()), prime());
  for (int j = 0; j < static_cast<int>(idx.size()); ++j)
    for (int i = 0; i < rows_; ++i) out.set(i, j, (*this)(i, idx[j]));
  return out;
}

std::vector<uint32_t> Matrix::apply(const std::vector<uint32_t>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw error(errc::internal, "matrix apply shape mismatch");
  std::vector<uint32_t> out(rows_, 0);
  const uint64_t p = prime();
  for (int i = 0; i < rows_; ++i) {
    uint64_t acc = 0;
    for (int j = 0; j < cols_; ++j) acc += static_cast<uint64_t>((*this)(i, j)) * v[j] % p;
    out[i] = static_cast<uint32_t>(acc % p);
  }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw error(errc::internal, "hstack row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols(), a.prime());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
    for (int j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b(i, j));
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw error(errc::internal, "vstack column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols(), a.prime());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b(i, j));
  return out;
}

Matrix dsum(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.prime());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b(i, j));
  return out;
}

Matrix rref(const Matrix& m, std::vector<int>* pivots) {
  Matrix r = m;
  const Field& f = r.field();
  int lead = 0;
  for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
    int piv = -1;
    for (int i = lead; i < r.rows(); ++i)
      if (r(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < r.cols(); ++j) {
        uint32_t t = r(lead, j);
        r.set(lead, j, r(piv, j));
        r.set(piv, j, t);
      }
    uint32_t s = f.inv(r(lead, col));
    for (int j = 0; j < r.cols(); ++j) r.set(lead, j, f.mul(r(lead, j), s));
    for (int i = 0; i < r.rows(); ++i) {
      if (i == lead || r(i, col) == 0) continue;
      uint32_t c = r(i, col);
      for (int j = 0; j < r.cols(); ++j) r.set(i, j, f.sub(r(i, j), f.mul(c, r(lead, j))));
    }
    if (pivots) pivots->push_back(col);
    ++lead;
  }
  return r;
}

int rank(const Matrix& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return static_cast<int>(piv.size());
}

Matrix kernel_basis(const Matrix& m) {
  std::vector<int> piv;
  Matrix r = rref(m, &piv);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  Matrix out(m.cols(), static_cast<int>(free_cols.size()), m.prime());
  const Field& f = r.field();
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    int fc = free_cols[k];
    out.set(fc, k, 1);
    for (int i = 0; i < static_cast<int>(piv.size()); ++i) out.set(piv[i], k, f.neg(r(i, fc)));
  }
  return out;
}

Matrix column_space_basis(const Matrix& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return m.columns(piv);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw error(errc::internal, "solve shape mismatch");
  std::vector<int> piv;
  Matrix r = rref(hstack(a, b), &piv);
  // Any pivot in the augmented block means inconsistency.
  for (int c : piv)
    if (c >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols(), a.prime());
  for (int i = 0; i < static_cast<int>(piv.size()); ++i)
    for (int j = 0; j < b.cols(); ++j) x.set(piv[i], j, r(i, a.cols() + j));
  return x;
}

std::optional<std::vector<uint32_t>> solve(const Matrix& a, const std::vector<uint32_t>& b) {
  Matrix bm(a.rows(), 1, a.prime());
  for (int i = 0; i < a.rows(); ++i) bm.set(i, 0, b[i]);
  auto x = solve(a, bm);
  if (!x) return std::nullopt;
  std::vector<uint32_t> out(a.cols());
  for (int i = 0; i < a.cols(); ++i) out[i] = (*x)(i, 0);
  return out;
}

Matrix cokernel_projection(const Matrix& m) {
  // rows of Q = basis of the left null space of m.
  return kernel_basis(m.transpose()).transpose();
}

}  // namespace cladder
