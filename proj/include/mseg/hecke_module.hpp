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
#include <optional>
#include <string>
#include <vector>

#include "mseg/hecke.hpp"
#include "mseg/matrix.hpp"

namespace mseg {

/// Finite-dimensional module over the affine Hecke algebra, given by the
/// matrices of the generators.  Construction validates every defining
/// relation as a matrix identity.
class HeckeModule {
 public:
  HeckeModule(std::uint64_t p, std::uint64_t xi, std::uint32_t rank,
              std::vector<FpMat> s_mats, std::vector<FpMat> x_mats,
              std::vector<FpMat> xinv_mats);

  std::uint64_t p() const { return p_; }
  std::uint64_t xi() const { return xi_; }
  std::uint32_t rank() const { return rank_; }
  std::size_t dim() const { return dim_; }

  const FpMat& S_mat(std::uint32_t i) const;     // 1 <= i <= rank-1
  const FpMat& X_mat(std::uint32_t j) const;     // 1 <= j <= rank
  const FpMat& Xinv_mat(std::uint32_t j) const;  // 1 <= j <= rank

  /// Matrix of a normal-form element on this module.
  FpMat rep(const HeckeElement& el) const;

 private:
  std::uint64_t p_, xi_;
  std::uint32_t rank_;
  std::size_t dim_;
  std::vector<FpMat> s_, x_, xinv_;
};

/// The two one-dimensional characters attached to a segment [a, b]:
/// the trivial-type character (S -> xi, X_j -> xi^{a+j-1}) and the
/// sign-type character (S -> -1, X_j -> xi^{b-j+1}).
HeckeModule char_Z(std::uint64_t p, std::uint64_t xi, std::int64_t a, std::int64_t b);
HeckeModule char_L(std::uint64_t p, std::uint64_t xi, std::int64_t a, std::int64_t b);

/// Rank-1 module sending X_1 to an arbitrary nonzero scalar.
HeckeModule char_point(std::uint64_t p, std::uint64_t xi, std::uint64_t z);

/// True iff the trivial-type and sign-type characters coincide; equivalent
/// to rank 1, or (xi = -1 and the rank is odd), or p = 2.
bool z_equals_l(std::uint64_t p, std::uint64_t xi, std::int64_t a, std::int64_t b);
bool z_equals_l_criterion(std::uint64_t p, std::uint64_t xi, std::uint64_t n);

/// Module induced from the parabolic subalgebra of a composition: functions
/// on minimal-length coset representatives with values in the tensor product
/// of the factors, with the right-translation action.
HeckeModule induce(const std::vector<std::uint32_t>& alpha,
                   const std::vector<HeckeModule>& factors);

/// The induced module from the Laurent restriction of the trivial-type
/// character: dimension (b-a+1)!.
HeckeModule standard_module(std::uint64_t p, std::uint64_t xi, std::int64_t a,
                            std::int64_t b);

/// One-dimensional character occurrence inside a module.
struct CharOccurrence {
  std::optional<std::uint64_t> s_value;  // absent when rank = 1
  std::vector<std::uint64_t> x_values;
  std::size_t multiplicity = 0;

  bool matches(const HeckeModule& one_dim) const;
  std::string str() const;
};

struct OneDimReport {
  std::vector<CharOccurrence> submodules;
  std::vector<CharOccurrence> quotients;
};

/// All one-dimensional submodules (joint eigenvectors of the generator
/// matrices) and quotients (same on the transposes), with geometric
/// multiplicities.
OneDimReport one_dim_sub_quot(const HeckeModule& m);

/// The multiset of scalars through which the symmetric Laurent center acts.
/// Requires every elementary symmetric function of the X matrices to act by
/// a scalar and the spectrum to split over F_p.
std::vector<std::uint64_t> central_character(const HeckeModule& m);

/// Randomized exact irreducibility test (singular-element criterion with the
/// dual module; Burnside dimension confirmation for small modules).
/// Deterministic for a fixed seed.
bool is_irreducible(const HeckeModule& m, std::uint64_t seed = 0);

/// Dimension of the space of module homomorphisms.
std::size_t hom_dim(const HeckeModule& a, const HeckeModule& b);

struct BridgeResult {
  bool linked = false;
  bool induced_irreducible = false;
  std::uint64_t line_order = 0;
  std::uint64_t line_e = 0;
};

/// Runs the two sides of the linkage/irreducibility correspondence for two
/// segments [a1,b1], [a2,b2] on the line of xi in F_p: combinatorial linkage
/// on the order-o line, and irreducibility of the module induced from the
/// two trivial-type characters.
BridgeResult linkage_bridge(std::int64_t a1, std::int64_t b1, std::int64_t a2,
                            std::int64_t b2, std::uint64_t p, std::uint64_t xi,
                            std::uint64_t seed = 0);

}  // namespace mseg
