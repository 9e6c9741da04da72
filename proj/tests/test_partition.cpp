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

#include "mseg/partition.hpp"

#include "doctest.h"
#include "mseg/error.hpp"
#include "oracles.hpp"

using namespace mseg;

namespace {
Partition P(std::vector<std::uint64_t> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("conjugation") {
  CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(P({2, 2})) == P({2, 2}));
  for (std::uint64_t n = 0; n <= 8; ++n)
    for (const auto& mu : enumerate_partitions(n)) CHECK(conjugate(conjugate(mu)) == mu);
}

TEST_CASE("dominance") {
  CHECK(dominates(P({2, 2}), P({3, 1})));
  CHECK_FALSE(dominates(P({3, 1}), P({2, 2})));
  CHECK(dominates(P({2, 1}), P({2, 1})));
  CHECK_THROWS_AS(dominates(P({2}), P({1})), DomainError);

  // Conjugation is antitone, exhaustively for n <= 8.
  for (std::uint64_t n = 1; n <= 8; ++n) {
    auto all = enumerate_partitions(n);
    for (const auto& mu : all)
      for (const auto& nu : all)
        CHECK(dominates(mu, nu) == dominates(conjugate(nu), conjugate(mu)));
    // (n) is the maximum, (1,...,1) the minimum.
    Partition top = P({n});
    Partition bottom = P(std::vector<std::uint64_t>(n, 1));
    for (const auto& mu : all) {
      CHECK(dominates(mu, top));
      CHECK(dominates(bottom, mu));
    }
  }
}

TEST_CASE("addition") {
  CHECK(add(P({2, 1}), P({1, 1})) == P({3, 2}));
  CHECK(add(P({3, 1}), Partition()) == P({3, 1}));
  CHECK(add(P({1, 1}), P({2})) == P({3, 1}));
}

TEST_CASE("e-regularity") {
  CHECK_FALSE(is_e_regular(P({1, 1, 1}), ExtNat(3)));
  CHECK(is_e_regular(P({3, 2}), ExtNat(2)));
  CHECK_FALSE(is_e_regular(P({2, 2, 1}), ExtNat(2)));
  CHECK(is_e_regular(P({2, 2, 1, 1}), ExtNat(3)));
  CHECK(is_e_regular(P({1, 1, 1}), ExtNat::inf()));
}

TEST_CASE("e-regular enumeration") {
  auto reg52 = enumerate_e_regular(5, ExtNat(2));
  REQUIRE(reg52.size() == 3);
  CHECK(reg52[0] == P({5}));
  CHECK(reg52[1] == P({4, 1}));
  CHECK(reg52[2] == P({3, 2}));

  CHECK(enumerate_e_regular(6, ExtNat(3)).size() == 7);
  for (std::uint64_t n = 0; n <= 10; ++n)
    CHECK(enumerate_e_regular(n, ExtNat::inf()).size() == count_partitions(n));
}

TEST_CASE("counts match the generating function") {
  for (std::uint64_t e : {2ull, 3ull, 5ull}) {
    auto series = oracles::e_regular_series(30, e);
    for (std::uint64_t n = 0; n <= 30; ++n)
      CHECK(static_cast<std::int64_t>(count_e_regular(n, ExtNat(e))) == series[n]);
  }
}

TEST_CASE("partition count recurrence agrees with enumeration") {
  for (std::uint64_t n = 0; n <= 18; ++n)
    CHECK(count_partitions(n) == enumerate_partitions(n).size());
}

TEST_CASE("text form") {
  CHECK(P({3, 1, 1}).str() == "(3,1,1)");
  CHECK(Partition().str() == "()");
  CHECK(Partition::parse("(3,1,1)") == P({3, 1, 1}));
  CHECK(Partition::parse("()") == Partition());
  CHECK(Partition::parse(" ( 4 , 2 ) ") == P({4, 2}));
  CHECK_THROWS_AS(Partition::parse("(1,2)"), ParseError);  // not weakly decreasing
  CHECK_THROWS_AS(Partition::parse("(3,0)"), DomainError);
  CHECK_THROWS_AS(Partition::parse("3,1"), ParseError);
  for (std::uint64_t n = 0; n <= 7; ++n)
    for (const auto& mu : enumerate_partitions(n))
      CHECK(Partition::parse(mu.str()) == mu);
}

TEST_CASE("enumeration order is descending lexicographic") {
  auto all = enumerate_partitions(6);
  for (std::size_t i = 0; i + 1 < all.size(); ++i)
    CHECK(all[i].parts() > all[i + 1].parts());
}
