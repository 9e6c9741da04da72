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
#include <map>
#include <string>
#include <vector>

#include "mseg/matrix.hpp"

namespace mseg {

/// Permutation of {0, ..., n-1} in one-line notation.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint8_t> img) : img_(std::move(img)) {}
  static Perm identity(std::size_t n);
  /// Adjacent transposition of i and i+1 (0-based) in S_n.
  static Perm transposition(std::size_t n, std::size_t i);

  std::size_t n() const { return img_.size(); }
  std::uint8_t operator()(std::size_t k) const { return img_[k]; }
  const std::vector<std::uint8_t>& one_line() const { return img_; }

  /// Function composition: (a.after(b))(k) = a(b(k)).
  Perm after(const Perm& b) const;
  Perm inverse() const;
  std::size_t length() const;  // inversion count
  bool is_identity() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  std::string str() const;

 private:
  std::vector<std::uint8_t> img_;
};

/// Lexicographically smallest reduced word (0-based generator indices i for
/// the transposition of i, i+1); w equals the composition of its letters,
/// leftmost letter applied last.
std::vector<std::size_t> lex_min_reduced_word(const Perm& w);

std::vector<Perm> all_perms(std::size_t n);

/// Basis monomial X^lambda T_w of the normal form.
struct HeckeMono {
  std::vector<std::int32_t> lam;
  Perm w;

  friend bool operator==(const HeckeMono&, const HeckeMono&) = default;
  friend auto operator<=>(const HeckeMono&, const HeckeMono&) = default;
};

class HeckeAlgebra;

/// Element in normal form: finitely many monomials X^lambda T_w with nonzero
/// coefficients in F_p.
class HeckeElement {
 public:
  HeckeElement() : p_(2), xi_(1), rank_(1) {}
  HeckeElement(std::uint64_t p, std::uint64_t xi, std::uint32_t rank)
      : p_(p), xi_(xi), rank_(rank) {}

  std::uint64_t p() const { return p_; }
  std::uint64_t xi() const { return xi_; }
  std::uint32_t rank() const { return rank_; }
  const std::map<HeckeMono, std::uint64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void accumulate(const HeckeMono& m, std::uint64_t coeff);

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  std::string str() const;

 private:
  std::uint64_t p_, xi_;
  std::uint32_t rank_;
  std::map<HeckeMono, std::uint64_t> terms_;
};

/// The affine Hecke algebra of type A on generators S_1..S_{n-1} and
/// X_1^{±1}..X_n^{±1} over F_p with parameter xi, computed in the normal
/// form basis X^lambda T_w.  Generator indices are 1-based as in the
/// presentation.
class HeckeAlgebra {
 public:
  HeckeAlgebra(std::uint64_t p, std::uint64_t xi, std::uint32_t rank);

  const PrimeField& field() const { return F_; }
  std::uint64_t p() const { return F_.p(); }
  std::uint64_t xi() const { return xi_; }
  std::uint32_t rank() const { return rank_; }

  HeckeElement zero() const;
  HeckeElement one() const;
  HeckeElement S(std::uint32_t i) const;                        // 1 <= i <= n-1
  HeckeElement X(std::uint32_t j, std::int64_t power = 1) const;  // 1 <= j <= n
  HeckeElement monomial(std::vector<std::int32_t> lam, Perm w,
                        std::uint64_t coeff = 1) const;
  HeckeElement T(const Perm& w) const { return monomial(std::vector<std::int32_t>(rank_, 0), w); }

  HeckeElement add(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement sub(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement scale(const HeckeElement& a, std::uint64_t c) const;
  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;

  /// S_i X^lambda in normal form through the closed-form commutation
  /// (the geometric correction string).  0-based i.
  HeckeElement commute_closed(std::size_t i, const std::vector<std::int32_t>& lam) const;

  /// Same product computed by peeling one X^{±1} generator at a time with
  /// the single-variable relations only; used to cross-check the closed
  /// form.
  HeckeElement commute_stepwise(std::size_t i, const std::vector<std::int32_t>& lam) const;

 private:
  HeckeElement lmul_S(std::size_t i, const HeckeElement& el) const;  // 0-based i
  void check_element(const HeckeElement& el) const;

  PrimeField F_;
  std::uint64_t xi_;
  std::uint32_t rank_;
};

struct RelationReport {
  bool ok = true;
  std::uint64_t identities_checked = 0;
  std::uint64_t commutation_trials = 0;
  std::vector<std::string> failures;
};

/// Verifies the defining relations as normal-form identities and runs
/// randomized commutation cross-checks (closed form vs stepwise).
RelationReport check_relations(std::uint32_t n, std::uint64_t p, std::uint64_t xi,
                               std::uint64_t trials, std::uint64_t seed);

}  // namespace mseg
