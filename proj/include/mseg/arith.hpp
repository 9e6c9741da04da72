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
#include <string>
#include <vector>

#include "mseg/error.hpp"

namespace mseg {

/// An element of the extended naturals {1, 2, 3, ...} ∪ {∞}, used for the
/// order of a cuspidal line and the derived invariant e.  Infinity compares
/// greater than every finite value.
class ExtNat {
 public:
  ExtNat() : v_(1) {}
  explicit ExtNat(std::uint64_t v) : v_(v) {
    if (v == kInfSentinel) throw DomainError("ExtNat: value out of range");
    if (v == 0) throw DomainError("ExtNat: value must be positive");
  }

  static ExtNat inf() {
    ExtNat e;
    e.v_ = kInfSentinel;
    return e;
  }

  bool is_inf() const { return v_ == kInfSentinel; }
  bool is_finite() const { return !is_inf(); }

  std::uint64_t value() const {
    if (is_inf()) throw DomainError("ExtNat: infinite value has no finite representation");
    return v_;
  }

  friend bool operator==(const ExtNat&, const ExtNat&) = default;
  friend auto operator<=>(const ExtNat& a, const ExtNat& b) { return a.v_ <=> b.v_; }

  bool operator==(std::uint64_t x) const { return is_finite() && v_ == x; }

  std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }

 private:
  // kInfSentinel is the largest uint64 so the default comparison treats
  // infinity as the maximum.
  static constexpr std::uint64_t kInfSentinel = ~std::uint64_t{0};
  std::uint64_t v_;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Base-b digits of n, least significant first.  n = 0 gives an empty list.
inline std::vector<std::uint64_t> digits_base(std::uint64_t n, std::uint64_t b) {
  if (b < 2) throw DomainError("digits_base: base must be at least 2");
  std::vector<std::uint64_t> out;
  while (n != 0) {
    out.push_back(n % b);
    n /= b;
  }
  return out;
}

}  // namespace mseg
