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

#pragma once

#include <cstdint>
#include <vector>

#include "mseg/error.hpp"

namespace mseg {

/// Arithmetic in F_p for a prime p < 2^31.  Elements are residues in
/// [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  std::uint64_t reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t pow_signed(std::uint64_t a, std::int64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(std::uint64_t a) const;

  /// Smallest element of the given multiplicative order, if one exists.
  std::uint64_t element_of_order(std::uint64_t k) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Dense matrix over F_p, row major.
class FpMat {
 public:
  FpMat() : p_(2), rows_(0), cols_(0) {}
  FpMat(const PrimeField& F, std::size_t rows, std::size_t cols)
      : p_(F.p()), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static FpMat identity(const PrimeField& F, std::size_t n);
  static FpMat scalar(const PrimeField& F, std::size_t n, std::uint64_t c);

  PrimeField field() const { return PrimeField(p_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint64_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  FpMat operator*(const FpMat& other) const;
  FpMat operator+(const FpMat& other) const;
  FpMat operator-(const FpMat& other) const;
  FpMat scaled(std::uint64_t c) const;
  FpMat transposed() const;
  FpMat pow(std::uint64_t e) const;

  friend bool operator==(const FpMat&, const FpMat&) = default;

  bool is_scalar(std::uint64_t* value = nullptr) const;
  bool is_zero() const;

  /// Row echelon rank (destructive on a copy).
  std::size_t rank() const;

  /// Basis of the right kernel, as rows.
  std::vector<std::vector<std::uint64_t>> kernel_basis() const;

  /// Inverse; throws if singular.
  FpMat inverse() const;

  /// Characteristic polynomial coefficients, ascending degree
  /// (c[0] + c[1] x + ... + x^n), via Hessenberg reduction.
  std::vector<std::uint64_t> charpoly() const;

  /// Kronecker product (this ⊗ other).
  FpMat kron(const FpMat& other) const;

  const std::vector<std::uint64_t>& data() const { return a_; }

 private:
  std::uint64_t p_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> a_;
};

/// Echelonized row space with incremental insertion: used for spinning
/// vectors under matrix actions.
class RowSpace {
 public:
  explicit RowSpace(const PrimeField& F, std::size_t dim) : p_(F.p()), dim_(dim) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return dim_; }

  /// Reduces v against the basis; if a nonzero remainder survives it is
  /// added and true is returned.
  bool insert(std::vector<std::uint64_t> v);

  const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }

 private:
  std::uint64_t p_;
  std::size_t dim_;
  std::vector<std::vector<std::uint64_t>> rows_;  // echelonized, pivot 1
  std::vector<std::size_t> pivots_;
};

std::vector<std::uint64_t> mat_vec(const FpMat& m, const std::vector<std::uint64_t>& v);

/// Horner evaluation of a polynomial (ascending coefficients) at x.
std::uint64_t poly_eval(const PrimeField& F, const std::vector<std::uint64_t>& coeffs,
                        std::uint64_t x);

}  // namespace mseg
