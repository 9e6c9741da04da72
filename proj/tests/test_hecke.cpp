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

#include "mseg/hecke.hpp"

#include "doctest.h"
#include "mseg/error.hpp"

using namespace mseg;

TEST_CASE("permutations") {
  Perm id = Perm::identity(3);
  Perm s1 = Perm::transposition(3, 0);
  Perm s2 = Perm::transposition(3, 1);
  CHECK(id.length() == 0);
  CHECK(s1.length() == 1);
  CHECK(s1.after(s1) == id);
  Perm w = s1.after(s2);  // 0->1->..., one-line (1,2,0)
  CHECK(w.length() == 2);
  CHECK(w.inverse().after(w) == id);
  CHECK(lex_min_reduced_word(w) == std::vector<std::size_t>{0, 1});
  // The longest element of S_3 has the lex-min word s1 s2 s1.
  Perm w0(std::vector<std::uint8_t>{2, 1, 0});
  CHECK(lex_min_reduced_word(w0) == std::vector<std::size_t>{0, 1, 0});
  CHECK(all_perms(4).size() == 24);
  // Reduced words compose back to the permutation.
  for (const auto& p : all_perms(4)) {
    auto word = lex_min_reduced_word(p);
    CHECK(word.size() == p.length());
    Perm acc = Perm::identity(4);
    for (auto i : word) acc = acc.after(Perm::transposition(4, i));
    CHECK(acc == p);
  }
}

TEST_CASE("quadratic relation rearranged") {
  HeckeAlgebra H(7, 2, 2);
  auto lhs = H.mul(H.S(1), H.S(1));
  auto rhs = H.add(H.scale(H.S(1), 1), H.scale(H.one(), 2));  // (xi-1) S + xi
  CHECK(lhs == rhs);
}

TEST_CASE("distant generators commute with Laurent part") {
  HeckeAlgebra H(7, 2, 3);
  CHECK(H.mul(H.S(1), H.X(3)) == H.mul(H.X(3), H.S(1)));
  CHECK(H.mul(H.S(2), H.X(1)) == H.mul(H.X(1), H.S(2)));
}

TEST_CASE("S X S = xi X' on adjacent indices") {
  for (std::uint64_t p : {7ull, 13ull})
    for (std::uint64_t xi = 1; xi < 5; ++xi) {
      HeckeAlgebra H(p, xi, 2);
      auto lhs = H.mul(H.mul(H.S(1), H.X(1)), H.S(1));
      CHECK(lhs == H.scale(H.X(2), xi));
    }
}

TEST_CASE("normal form multiplication is associative on samples") {
  HeckeAlgebra H(7, 2, 3);
  std::vector<HeckeElement> els{H.S(1), H.S(2), H.X(1), H.X(2, -1),
                                H.add(H.S(1), H.X(3))};
  for (const auto& a : els)
    for (const auto& b : els)
      for (const auto& c : els)
        CHECK(H.mul(H.mul(a, b), c) == H.mul(a, H.mul(b, c)));
}

TEST_CASE("closed-form commutation agrees with stepwise chasing") {
  HeckeAlgebra H(13, 5, 3);
  for (std::int32_t a = -2; a <= 2; ++a)
    for (std::int32_t b = -2; b <= 2; ++b)
      for (std::size_t i = 0; i < 2; ++i) {
        std::vector<std::int32_t> lam{a, b, 1};
        CHECK(H.commute_closed(i, lam) == H.commute_stepwise(i, lam));
      }
}

TEST_CASE("check_relations passes on sample parameters") {
  for (auto [n, p, xi] :
       {std::tuple<std::uint32_t, std::uint64_t, std::uint64_t>{2, 7, 2},
        {3, 7, 2},
        {3, 7, 6},
        {3, 2, 1},
        {4, 13, 5}}) {
    auto rep = check_relations(n, p, xi, 25, 42);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());
    CHECK(rep.commutation_trials == 25);
  }
}

TEST_CASE("rank mismatch is rejected") {
  HeckeAlgebra H2(7, 2, 2);
  HeckeAlgebra H3(7, 2, 3);
  CHECK_THROWS_AS(H2.mul(H2.S(1), H3.S(1)), DomainError);
  CHECK_THROWS_AS(H2.S(2), DomainError);
  CHECK_THROWS_AS(H2.X(3), DomainError);
  CHECK_THROWS_AS(HeckeAlgebra(7, 0, 2), DomainError);
}

TEST_CASE("element text form") {
  HeckeAlgebra H(7, 2, 2);
  CHECK(H.zero().str() == "0");
  CHECK_FALSE(H.one().str().empty());
}
