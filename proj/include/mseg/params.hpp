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

#include <compare>
#include <cstdint>
#include <string>

#include "mseg/arith.hpp"
#include "mseg/error.hpp"

namespace mseg {

/// Coefficient characteristic: 0 or a prime.
struct Characteristic {
  std::uint64_t ell = 0;

  Characteristic() = default;
  explicit Characteristic(std::uint64_t l) : ell(l) {
    if (l != 0 && !is_prime(l))
      throw DomainError("characteristic must be 0 or a prime, got " + std::to_string(l));
  }

  bool is_zero() const { return ell == 0; }
  friend bool operator==(const Characteristic&, const Characteristic&) = default;
};

/// A cuspidal line: the ambient characteristic, the order of the line (the
/// number of distinct classes under the unit shift; infinite in characteristic
/// zero) and the degree of a point on the line.
struct CuspidalLine {
  Characteristic characteristic;
  ExtNat order;            // number of classes on the line
  std::uint64_t degree = 1;

  CuspidalLine() = default;
  CuspidalLine(Characteristic ch, ExtNat o, std::uint64_t deg = 1)
      : characteristic(ch), order(o), degree(deg) {
    if (deg == 0) throw DomainError("line degree must be positive");
    if (ch.is_zero() && order.is_finite())
      throw DomainError("a characteristic-0 line has infinite order");
  }

  friend bool operator==(const CuspidalLine&, const CuspidalLine&) = default;
};

/// The two-branch rule for the derived invariant e of a line: e = ℓ when the
/// order is 1, e = order otherwise, and e = ∞ in characteristic 0.
ExtNat effective_e(const CuspidalLine& line);

/// A supercuspidal line together with its derived cuspidal levels. Level -1
/// is the base; level r >= 0 is a line of order 1 and degree
/// base.degree * e(base) * ell^r.
class Tower {
 public:
  Tower() : ch_(0), o0_(ExtNat::inf()), degree_(1) {}
  Tower(Characteristic ch, ExtNat o0, std::uint64_t degree = 1);

  const Characteristic& characteristic() const { return ch_; }
  const ExtNat& base_order() const { return o0_; }
  std::uint64_t base_degree() const { return degree_; }

  CuspidalLine base() const { return CuspidalLine(ch_, o0_, degree_); }

  /// Line at a level: -1 for the base, r >= 0 for the derived levels.
  /// Derived levels exist only in positive characteristic.
  CuspidalLine line(std::int32_t level) const;

  /// Number of supercuspidal shifts a level-r segment expands to:
  /// e(base) * ell^r.
  std::uint64_t expansion_count(std::int32_t level) const;

  friend bool operator==(const Tower&, const Tower&) = default;
  friend auto operator<=>(const Tower&, const Tower&) = default;

  std::string str() const;
  static Tower parse(const std::string& text);

 private:
  Characteristic ch_;
  ExtNat o0_;
  std::uint64_t degree_;
};

/// Invariants attached to an irreducible cuspidal: the fixed-point count n of
/// the unramified twist action, the residue-degree exponent f, the order o of
/// the line, the derived e, and the orbit/stabilizer sizes b and s.
struct CuspidalInvariants {
  std::uint64_t n = 1;
  std::uint64_t f = 1;
  ExtNat o;
  ExtNat e;
  std::uint64_t b = 1;
  std::uint64_t s = 1;

  friend bool operator==(const CuspidalInvariants&, const CuspidalInvariants&) = default;
};

/// Checks that e agrees with (o, ell) under the two-branch rule.
void validate_invariants(const CuspidalInvariants& inv, Characteristic ell);

/// Invariants of the level-r cuspidal built on a supercuspidal with the given
/// invariants: n' = n*o, f' = f*e*ell^r, o' = 1, e' = ell, b and s unchanged.
CuspidalInvariants st_invariants(const CuspidalInvariants& inv, Characteristic ell,
                                 std::uint64_t r);

/// True iff an induced tower of n twisted copies can carry a cuspidal:
/// n = 1, or ell != 0 and n = e * ell^r for some r >= 0.
bool cuspidal_lengths(ExtNat e, Characteristic ell, std::uint64_t n);

}  // namespace mseg
