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

#include "mseg/hecke_module.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "mseg/error.hpp"

using namespace mseg;

TEST_CASE("characters take the stated values") {
  auto z = char_Z(7, 2, 0, 1);
  CHECK(z.dim() == 1);
  CHECK(z.S_mat(1).at(0, 0) == 2);
  CHECK(z.X_mat(1).at(0, 0) == 1);
  CHECK(z.X_mat(2).at(0, 0) == 2);

  auto l = char_L(7, 2, 0, 1);
  CHECK(l.S_mat(1).at(0, 0) == 6);
  CHECK(l.X_mat(1).at(0, 0) == 2);
  CHECK(l.X_mat(2).at(0, 0) == 1);

  // Rank 1: both characters send X_1 to xi^a.
  CHECK(z_equals_l(7, 2, 3, 3));
  CHECK(char_Z(7, 2, 3, 3).X_mat(1).at(0, 0) == char_L(7, 2, 3, 3).X_mat(1).at(0, 0));

  CHECK_THROWS_AS(char_Z(7, 2, 2, 1), DomainError);
}

TEST_CASE("construction validates the relations") {
  PrimeField F(7);
  // Deliberately wrong S matrix: violates the quadratic relation.
  std::vector<FpMat> s{FpMat::scalar(F, 1, 3)};
  std::vector<FpMat> x{FpMat::scalar(F, 1, 1), FpMat::scalar(F, 1, 2)};
  std::vector<FpMat> xinv{FpMat::scalar(F, 1, 1), FpMat::scalar(F, 1, 4)};
  CHECK_THROWS_AS(HeckeModule(7, 2, 2, s, x, xinv), DomainError);
  // Wrong inverse.
  std::vector<FpMat> s2{FpMat::scalar(F, 1, 2)};
  std::vector<FpMat> bad_inv{FpMat::scalar(F, 1, 1), FpMat::scalar(F, 1, 3)};
  CHECK_THROWS_AS(HeckeModule(7, 2, 2, s2, x, bad_inv), DomainError);
}

TEST_CASE("the equality criterion for the two characters") {
  for (std::uint64_t p : {2ull, 7ull, 13ull}) {
    PrimeField F(p);
    for (std::uint64_t xi = 1; xi < p; ++xi)
      for (std::uint64_t n = 1; n <= 5; ++n)
        CHECK(z_equals_l(p, xi, 0, static_cast<std::int64_t>(n) - 1) ==
              z_equals_l_criterion(p, xi, n));
  }
}

TEST_CASE("identity induction returns the factor") {
  auto z = char_Z(7, 2, 0, 2);
  auto ind = induce({3}, {z});
  CHECK(ind.dim() == 1);
  for (std::uint32_t i = 1; i < 3; ++i) CHECK(ind.S_mat(i) == z.S_mat(i));
  for (std::uint32_t j = 1; j <= 3; ++j) CHECK(ind.X_mat(j) == z.X_mat(j));
}

TEST_CASE("standard module dimension and multiplicity one") {
  auto m2 = standard_module(7, 2, 0, 1);
  CHECK(m2.dim() == 2);
  auto m3 = standard_module(7, 2, 0, 2);
  CHECK(m3.dim() == 6);

  auto report = one_dim_sub_quot(m2);
  std::size_t z_sub = 0, l_quot = 0;
  for (const auto& occ : report.submodules)
    if (occ.matches(char_Z(7, 2, 0, 1))) z_sub += occ.multiplicity;
  for (const auto& occ : report.quotients)
    if (occ.matches(char_L(7, 2, 0, 1))) l_quot += occ.multiplicity;
  CHECK(z_sub == 1);
  CHECK(l_quot == 1);

  // The modular boundary case: the segment length equals e (xi has order 3).
  auto report3 = one_dim_sub_quot(m3);
  std::size_t z3 = 0, l3 = 0;
  for (const auto& occ : report3.submodules)
    if (occ.matches(char_Z(7, 2, 0, 2))) z3 += occ.multiplicity;
  for (const auto& occ : report3.quotients)
    if (occ.matches(char_L(7, 2, 0, 2))) l3 += occ.multiplicity;
  CHECK(z3 == 1);
  CHECK(l3 == 1);
}

TEST_CASE("a one-dimensional module is its own sub and quotient") {
  auto z = char_Z(7, 2, 0, 1);
  auto rep = one_dim_sub_quot(z);
  REQUIRE(rep.submodules.size() == 1);
  REQUIRE(rep.quotients.size() == 1);
  CHECK(rep.submodules[0].matches(z));
  CHECK(rep.quotients[0].matches(z));
  CHECK(rep.submodules[0].multiplicity == 1);
}

TEST_CASE("central characters") {
  // Characters: the multiset of X eigenvalues xi^a..xi^b.
  auto z = char_Z(7, 2, 0, 2);
  std::vector<std::uint64_t> expect{1, 2, 4};
  std::sort(expect.begin(), expect.end());
  CHECK(central_character(z) == expect);
  CHECK(central_character(char_L(7, 2, 0, 2)) == expect);

  // Induction adds the central characters of the factors.
  auto ind = induce({1, 1}, {char_point(7, 2, 1), char_point(7, 2, 3)});
  CHECK(central_character(ind) == std::vector<std::uint64_t>{1, 3});

  // Non-scalar central action is rejected: a rank-1 module that is a direct
  // sum of two different characters.
  PrimeField F(7);
  FpMat x1(F, 2, 2);
  x1.at(0, 0) = 1;
  x1.at(1, 1) = 3;
  HeckeModule sum(7, 2, 1, {}, {x1}, {x1.inverse()});
  CHECK_THROWS_AS(central_character(sum), DomainError);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(char_Z(7, 2, 0, 3), 1));
  CHECK_FALSE(is_irreducible(standard_module(7, 2, 0, 1), 1));
  CHECK(is_irreducible(induce({1, 1}, {char_point(7, 2, 1), char_point(7, 2, 3)}), 1));
  // Determinism for a fixed seed, across seeds.
  auto m = standard_module(7, 2, 0, 2);
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) CHECK_FALSE(is_irreducible(m, seed));
}

TEST_CASE("hom spaces and induced-module isomorphism classes") {
  // n = 2 over F_7, xi = 2 (order 3): cosets of <2> = {1,2,4} and {3,6,5}.
  auto m13 = induce({1, 1}, {char_point(7, 2, 1), char_point(7, 2, 3)});
  auto m31 = induce({1, 1}, {char_point(7, 2, 3), char_point(7, 2, 1)});
  auto m16 = induce({1, 1}, {char_point(7, 2, 1), char_point(7, 2, 6)});
  CHECK(hom_dim(m13, m13) == 1);   // absolutely irreducible
  CHECK(hom_dim(m13, m31) == 1);   // factors in either order: isomorphic
  CHECK(hom_dim(m13, m16) == 0);   // different central characters
  CHECK(central_character(m13) != central_character(m16));

  // n = 3 over F_13, xi = 3 (order 3): three pairwise inequivalent classes.
  auto m124 = induce({1, 1, 1},
                     {char_point(13, 3, 1), char_point(13, 3, 2), char_point(13, 3, 4)});
  CHECK(m124.dim() == 6);
  CHECK(is_irreducible(m124, 5));
  CHECK(central_character(m124) == std::vector<std::uint64_t>{1, 2, 4});

  // A rank-2 factor against an inequivalent point.
  auto m_mixed = induce({2, 1}, {char_Z(13, 3, 0, 1), char_point(13, 3, 2)});
  CHECK(m_mixed.dim() == 3);
  CHECK(is_irreducible(m_mixed, 5));
  std::vector<std::uint64_t> cc{1, 3, 2};
  std::sort(cc.begin(), cc.end());
  CHECK(central_character(m_mixed) == cc);

  // Linked same-coset characters give a reducible induction.
  auto linked_pair = induce({1, 1}, {char_point(7, 2, 1), char_point(7, 2, 2)});
  CHECK_FALSE(is_irreducible(linked_pair, 5));
}

TEST_CASE("composition mismatches are rejected") {
  CHECK_THROWS_AS(induce({2}, {char_point(7, 2, 1)}), DomainError);
  CHECK_THROWS_AS(induce({1, 1}, {char_point(7, 2, 1)}), DomainError);
  CHECK_THROWS_AS(induce({1, 1}, {char_point(7, 2, 1), char_point(5, 2, 1)}),
                  DomainError);
}

TEST_CASE("the normal form is compatible with module representations") {
  // rep(a * b) = rep(a) rep(b) on the standard module, for random elements:
  // an independent check of the normal-form multiplication.
  std::mt19937_64 rng(99);
  for (auto [p, xi] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {7, 2}, {13, 5}, {2, 1}}) {
    const std::uint32_t n = 3;
    HeckeAlgebra H(p, xi, n);
    auto M = standard_module(p, xi, 0, n - 1);
    auto random_element = [&] {
      HeckeElement acc = H.zero();
      for (int s = 0; s < 3; ++s) {
        HeckeElement word = H.one();
        for (int k = 0; k < 3; ++k) {
          switch (rng() % 4) {
            case 0:
              word = H.mul(word, H.S(1 + rng() % (n - 1)));
              break;
            case 1:
              word = H.mul(word, H.X(1 + rng() % n));
              break;
            case 2:
              word = H.mul(word, H.X(1 + rng() % n, -1));
              break;
            default:
              break;
          }
        }
        acc = H.add(acc, H.scale(word, 1 + rng() % (p - 1 ? p - 1 : 1)));
      }
      return acc;
    };
    for (int trial = 0; trial < 15; ++trial) {
      HeckeElement a = random_element();
      HeckeElement b = random_element();
      CHECK(M.rep(H.mul(a, b)) == M.rep(a) * M.rep(b));
    }
  }
}

TEST_CASE("linkage bridge examples") {
  auto b1 = linkage_bridge(0, 0, 1, 1, 7, 2, 1);
  CHECK(b1.linked);
  CHECK_FALSE(b1.induced_irreducible);
  CHECK(b1.line_order == 3);
  CHECK(b1.line_e == 3);

  // Class 3 is class 0 on the order-3 line: equal one-point segments are
  // unlinked there, and the induced module is irreducible.
  auto b2 = linkage_bridge(0, 0, 3, 3, 7, 2, 1);
  CHECK(b2.linked != b2.induced_irreducible);
  CHECK_FALSE(b2.linked);

  auto b3 = linkage_bridge(0, 0, 0, 0, 3, 1, 1);
  CHECK(b3.linked);
  CHECK_FALSE(b3.induced_irreducible);
  CHECK(b3.line_order == 1);
  CHECK(b3.line_e == 3);
}
