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

#include <string>
#include <vector>

#include "mseg/params.hpp"
#include "mseg/partition.hpp"

namespace mseg {

/// A cuspidal of the finite-group side, identified by an opaque label and
/// its invariants.
struct FiniteCuspidal {
  std::string label;
  ExtNat e;
  Characteristic ell;
};

/// Symbolic label of an irreducible on the finite-group side: a cuspidal and
/// a partition shape.
struct JamesLabel {
  FiniteCuspidal base;
  Partition shape;

  friend bool operator==(const JamesLabel& a, const JamesLabel& b) {
    return a.base.label == b.base.label && a.base.e == b.base.e &&
           a.base.ell == b.base.ell && a.shape == b.shape;
  }
};

/// Whether the totally degenerate label on n copies is cuspidal:
/// n = 1 or n = e * ell^r.
bool st_is_cuspidal(const FiniteCuspidal& sigma, std::uint64_t n);

/// The level-r cuspidal label: shape (1^{e * ell^r}).  Positive
/// characteristic only.
JamesLabel cuspidal_label(const FiniteCuspidal& sigma, std::uint64_t r);

/// The shapes admitted as subquotients of the induced product for mu: all nu
/// of the same total with mu below nu in dominance.  mu itself is always
/// admitted (with multiplicity one).
std::vector<Partition> subquotient_shapes(const Partition& mu);
bool subquotient_admits(const Partition& mu, const Partition& nu);

/// Whether the label of shape mu appears as a quotient: e-regularity of mu.
bool is_quotient_label(const Partition& mu, const FiniteCuspidal& sigma);

/// Whether the totally degenerate and sign labels agree: n < e.
bool st_equals_l(const FiniteCuspidal& sigma, std::uint64_t n);

/// Number of irreducible labels with supercuspidal support n copies of a
/// fixed supercuspidal: the number of partitions of n.
std::uint64_t count_by_scusp(std::uint64_t n);

}  // namespace mseg
