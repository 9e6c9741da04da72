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

#include "mseg/arith.hpp"

namespace mseg {

/// A partition: weakly decreasing positive parts.  The empty partition is the
/// partition of 0.  Construction sorts its input and rejects zero parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::uint64_t> parts);

  const std::vector<std::uint64_t>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  std::uint64_t total() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  std::string str() const;                       // "(3,1,1)", "()" when empty
  static Partition parse(const std::string& s);  // inverse of str

 private:
  std::vector<std::uint64_t> parts_;
};

/// Transpose of the Young diagram; an involution.
Partition conjugate(const Partition& mu);

/// True iff mu is below nu: every prefix sum of mu is at most the matching
/// prefix sum of nu.  Requires equal totals.
bool dominates(const Partition& mu, const Partition& nu);

/// Componentwise sum, shorter argument padded with zeros.
Partition add(const Partition& mu, const Partition& nu);

/// True iff no part value occurs e or more times.  e = ∞ accepts everything.
bool is_e_regular(const Partition& mu, ExtNat e);

/// All partitions of n, in descending lexicographic order.
std::vector<Partition> enumerate_partitions(std::uint64_t n);

/// The e-regular partitions of n, in descending lexicographic order.
std::vector<Partition> enumerate_e_regular(std::uint64_t n, ExtNat e);

std::uint64_t count_partitions(std::uint64_t n);
std::uint64_t count_e_regular(std::uint64_t n, ExtNat e);

/// The partition whose parts are the given values (zeros dropped, sorted).
Partition partition_of_values(std::vector<std::uint64_t> values);

}  // namespace mseg
