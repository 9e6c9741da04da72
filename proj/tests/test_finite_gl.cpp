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

#include "mseg/finite_gl.hpp"

#include <set>

#include "doctest.h"

using namespace mseg;

namespace {
const FiniteCuspidal kSigma32{"s", ExtNat(3), Characteristic(2)};
const FiniteCuspidal kSigma0{"s0", ExtNat::inf(), Characteristic(0)};
}  // namespace

TEST_CASE("cuspidality of the totally degenerate label") {
  CHECK(st_is_cuspidal(kSigma32, 3));
  CHECK_FALSE(st_is_cuspidal(kSigma32, 4));
  CHECK(st_is_cuspidal(kSigma32, 1));
  CHECK(st_is_cuspidal(kSigma32, 6));
  CHECK(st_is_cuspidal(kSigma0, 1));
  CHECK_FALSE(st_is_cuspidal(kSigma0, 2));
}

TEST_CASE("cuspidal labels") {
  auto lab = cuspidal_label(kSigma32, 1);
  CHECK(lab.shape == Partition(std::vector<std::uint64_t>(6, 1)));
  FiniteCuspidal s22{"t", ExtNat(2), Characteristic(2)};
  CHECK(cuspidal_label(s22, 0).shape == Partition({1, 1}));
  CHECK_THROWS_AS(cuspidal_label(kSigma0, 0), DomainError);

  // Distinct (sigma, r) pairs give distinct labels, and each is cuspidal but
  // never of shape (1).
  std::set<std::string> seen;
  for (std::uint64_t r = 0; r <= 3; ++r) {
    auto l = cuspidal_label(kSigma32, r);
    CHECK(st_is_cuspidal(kSigma32, l.shape.total()));
    CHECK(l.shape.total() > 1);
    seen.insert(l.shape.str());
  }
  CHECK(seen.size() == 4);
}

TEST_CASE("subquotient shapes") {
  auto got = subquotient_shapes(Partition({2, 2}));
  REQUIRE(got.size() == 3);
  CHECK(got[0] == Partition({4}));
  CHECK(got[1] == Partition({3, 1}));
  CHECK(got[2] == Partition({2, 2}));

  CHECK(subquotient_shapes(Partition({5})).size() == 1);
  CHECK(subquotient_shapes(Partition({1, 1, 1, 1})).size() ==
        enumerate_partitions(4).size());

  // mu itself and the maximal shape are always admitted.
  for (const auto& mu : enumerate_partitions(6)) {
    CHECK(subquotient_admits(mu, mu));
    CHECK(subquotient_admits(mu, Partition({6})));
  }
  CHECK_FALSE(subquotient_admits(Partition({2, 2}), Partition({3})));
}

TEST_CASE("quotient labels and the sign comparison") {
  CHECK(is_quotient_label(Partition({1, 1}), kSigma32));
  CHECK(st_equals_l(kSigma32, 2));
  CHECK_FALSE(is_quotient_label(Partition({1, 1, 1}), kSigma32));
  CHECK_FALSE(st_equals_l(kSigma32, 3));
  CHECK(is_quotient_label(Partition({1, 1, 1}), kSigma0));
  CHECK(st_equals_l(kSigma0, 3));

  // Consistency of the two predicates through the shape (1^n).
  for (std::uint64_t n = 1; n <= 20; ++n)
    CHECK(st_equals_l(kSigma32, n) ==
          is_quotient_label(Partition(std::vector<std::uint64_t>(n, 1)), kSigma32));
}

TEST_CASE("counting by supercuspidal support") {
  CHECK(count_by_scusp(4) == 5);
  CHECK(count_by_scusp(0) == 1);
  CHECK(count_by_scusp(5) == 7);
}
