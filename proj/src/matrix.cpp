/*
 * Copyright 2026 The mseg authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mseg/matrix.hpp"

#include "mseg/arith.hpp"

namespace mseg {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError("field order must be prime, got " + std::to_string(p));
  if (p >= (std::uint64_t{1} << 31)) throw DomainError("prime field too large");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  a %= p_;
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::pow_signed(std::uint64_t a, std::int64_t e) const {
  if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
  return pow(inv(a), static_cast<std::uint64_t>(-e));
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  a %= p_;
  if (a == 0) throw DomainError("inverse of zero");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::element_order(std::uint64_t a) const {
  a %= p_;
  if (a == 0) throw DomainError("zero has no multiplicative order");
  std::uint64_t x = a, k = 1;
  while (x != 1) {
    x = mul(x, a);
    ++k;
    if (k > p_) throw DomainError("order computation ran out of range");
  }
  return k;
}

std::uint64_t PrimeField::element_of_order(std::uint64_t k) const {
  if (k == 0 || (p_ - 1) % k != 0)
    throw DomainError("no element of order " + std::to_string(k) + " in F_" +
                      std::to_string(p_));
  for (std::uint64_t a = 1; a < p_; ++a)
    if (element_order(a) == k) return a;
  throw DomainError("no element of the requested order");
}

FpMat FpMat::identity(const PrimeField& F, std::size_t n) {
  FpMat m(F, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMat FpMat::scalar(const PrimeField& F, std::size_t n, std::uint64_t c) {
  FpMat m(F, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c % F.p();
  return m;
}

FpMat FpMat::operator*(const FpMat& other) const {
  if (cols_ != other.rows_ || p_ != other.p_) throw DomainError("matrix product shape mismatch");
  PrimeField F(p_);
  FpMat out(F, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) = (out.at(i, j) + x * other.at(k, j)) % p_;
    }
  return out;
}

FpMat FpMat::operator+(const FpMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || p_ != other.p_)
    throw DomainError("matrix sum shape mismatch");
  FpMat out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + other.a_[i]) % p_;
  return out;
}

FpMat FpMat::operator-(const FpMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || p_ != other.p_)
    throw DomainError("matrix difference shape mismatch");
  FpMat out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + p_ - other.a_[i]) % p_;
  return out;
}

FpMat FpMat::scaled(std::uint64_t c) const {
  FpMat out = *this;
  c %= p_;
  for (auto& x : out.a_) x = x * c % p_;
  return out;
}

FpMat FpMat::transposed() const {
  PrimeField F(p_);
  FpMat out(F, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

FpMat FpMat::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw DomainError("matrix power needs a square matrix");
  PrimeField F(p_);
  FpMat r = identity(F, rows_);
  FpMat b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool FpMat::is_scalar(std::uint64_t* value) const {
  if (rows_ != cols_) return false;
  std::uint64_t c = rows_ ? at(0, 0) : 0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? c : 0)) return false;
  if (value) *value = c;
  return true;
}

bool FpMat::is_zero() const {
  for (auto x : a_)
    if (x) return false;
  return true;
}

namespace {

// Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::uint64_t p, std::vector<std::uint64_t>& a,
                              std::size_t rows, std::size_t cols) {
  PrimeField F(p);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i * cols + c] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    std::uint64_t iv = F.inv(a[r * cols + c]);
    for (std::size_t j = 0; j < cols; ++j) a[r * cols + j] = a[r * cols + j] * iv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint64_t f = a[i * cols + c];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        a[i * cols + j] = (a[i * cols + j] + (p - f) * a[r * cols + j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t FpMat::rank() const {
  auto a = a_;
  return rref(p_, a, rows_, cols_).size();
}

std::vector<std::vector<std::uint64_t>> FpMat::kernel_basis() const {
  auto a = a_;
  auto pivots = rref(p_, a, rows_, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t freec = 0; freec < cols_; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<std::uint64_t> v(cols_, 0);
    v[freec] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      std::uint64_t coeff = a[r * cols_ + freec];
      if (coeff) v[pivots[r]] = p_ - coeff;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FpMat FpMat::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse needs a square matrix");
  PrimeField F(p_);
  std::size_t n = rows_;
  std::vector<std::uint64_t> aug(n * 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * 2 * n + j] = at(i, j);
    aug[i * 2 * n + n + i] = 1;
  }
  auto pivots = rref(p_, aug, n, 2 * n);
  if (pivots.size() != n || pivots[n - 1] >= n) throw DomainError("matrix is singular");
  FpMat out(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug[i * 2 * n + n + j];
  return out;
}

std::vector<std::uint64_t> FpMat::charpoly() const {
  if (rows_ != cols_) throw DomainError("characteristic polynomial needs a square matrix");
  PrimeField F(p_);
  std::size_t n = rows_;
  if (n == 0) return {1};

  // Reduce to upper Hessenberg form by similarity transforms.
  std::vector<std::vector<std::uint64_t>> h(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = at(i, j);
  for (std::size_t c = 0; c + 2 <= n; ++c) {
    std::size_t piv = 0;
    for (std::size_t r = c + 1; r < n; ++r)
      if (h[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == 0) continue;  // column already clear below the subdiagonal
    if (piv != c + 1) {
      std::swap(h[piv], h[c + 1]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][c + 1]);
    }
    std::uint64_t ivp = F.inv(h[c + 1][c]);
    for (std::size_t r = c + 2; r < n; ++r) {
      std::uint64_t f = F.mul(h[r][c], ivp);
      if (f == 0) continue;
      // row_r -= f * row_{c+1};  col_{c+1} += f * col_r keeps similarity.
      for (std::size_t j = 0; j < n; ++j) h[r][j] = F.sub(h[r][j], F.mul(f, h[c + 1][j]));
      for (std::size_t i = 0; i < n; ++i) h[i][c + 1] = F.add(h[i][c + 1], F.mul(f, h[i][r]));
    }
  }

  // Charpoly of a Hessenberg matrix by the leading-minor recurrence.
  // polys[m] is the characteristic polynomial of the leading m x m block,
  // ascending coefficients.
  std::vector<std::vector<std::uint64_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    // (x - h[m-1][m-1]) * polys[m-1]
    std::vector<std::uint64_t> cur(m + 1, 0);
    for (std::size_t k = 0; k < polys[m - 1].size(); ++k) {
      cur[k + 1] = F.add(cur[k + 1], polys[m - 1][k]);
      cur[k] = F.sub(cur[k], F.mul(h[m - 1][m - 1], polys[m - 1][k]));
    }
    std::uint64_t subprod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      subprod = F.mul(subprod, h[i + 1][i]);
      std::uint64_t coeff = F.mul(h[i][m - 1], subprod);
      if (coeff == 0) continue;
      for (std::size_t k = 0; k < polys[i].size(); ++k)
        cur[k] = F.sub(cur[k], F.mul(coeff, polys[i][k]));
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

FpMat FpMat::kron(const FpMat& other) const {
  if (p_ != other.p_) throw DomainError("kron over different fields");
  PrimeField F(p_);
  FpMat out(F, rows_ * other.rows_, cols_ * other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      std::uint64_t x = at(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < other.rows_; ++k)
        for (std::size_t l = 0; l < other.cols_; ++l)
          out.at(i * other.rows_ + k, j * other.cols_ + l) = x * other.at(k, l) % p_;
    }
  return out;
}

bool RowSpace::insert(std::vector<std::uint64_t> v) {
  PrimeField F(p_);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::uint64_t c = v[pivots_[k]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) v[j] = F.sub(v[j], F.mul(c, rows_[k][j]));
  }
  std::size_t piv = dim_;
  for (std::size_t j = 0; j < dim_; ++j)
    if (v[j] != 0) {
      piv = j;
      break;
    }
  if (piv == dim_) return false;
  std::uint64_t iv = F.inv(v[piv]);
  for (auto& x : v) x = F.mul(x, iv);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

std::vector<std::uint64_t> mat_vec(const FpMat& m, const std::vector<std::uint64_t>& v) {
  if (v.size() != m.cols()) throw DomainError("matrix-vector shape mismatch");
  std::uint64_t p = m.field().p();
  std::vector<std::uint64_t> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc = (acc + m.at(i, j) * v[j]) % p;
    out[i] = acc;
  }
  return out;
}

std::uint64_t poly_eval(const PrimeField& F, const std::vector<std::uint64_t>& coeffs,
                        std::uint64_t x) {
  std::uint64_t acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = F.add(F.mul(acc, x), coeffs[k]);
  return acc;
}

}  // namespace mseg
