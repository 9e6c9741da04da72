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

#include "mseg/params.hpp"

#include "doctest.h"

using namespace mseg;

TEST_CASE("effective e follows the two-branch rule") {
  CHECK(effective_e(CuspidalLine(Characteristic(3), ExtNat(1))) == ExtNat(3));
  CHECK(effective_e(CuspidalLine(Characteristic(0), ExtNat::inf())).is_inf());
  CHECK(effective_e(CuspidalLine(Characteristic(5), ExtNat(4))) == ExtNat(4));

  // Exhaustive grid, infinite order included.
  for (std::uint64_t ell : {2ull, 3ull, 5ull, 7ull}) {
    for (std::uint64_t o = 1; o <= 12; ++o) {
      ExtNat e = effective_e(CuspidalLine(Characteristic(ell), ExtNat(o)));
      if (o == 1)
        CHECK(e == ExtNat(ell));
      else
        CHECK(e == ExtNat(o));
    }
    CHECK(effective_e(CuspidalLine(Characteristic(ell), ExtNat::inf())).is_inf());
  }
}

TEST_CASE("line invariants") {
  CHECK_THROWS_AS(CuspidalLine(Characteristic(0), ExtNat(3)), DomainError);
  CHECK_THROWS_AS(Characteristic(6), DomainError);
  CHECK_NOTHROW(Characteristic(0));
  CHECK_NOTHROW(Characteristic(13));
}

TEST_CASE("tower levels have order 1 and the right degree") {
  Tower t(Characteristic(3), ExtNat(4), 2);
  CHECK(t.line(-1).order == ExtNat(4));
  for (std::int32_t r = 0; r <= 3; ++r) {
    CuspidalLine line = t.line(r);
    CHECK(line.order == ExtNat(1));
    CHECK(effective_e(line) == ExtNat(3));
    std::uint64_t mult = 4;  // e(base) = o = 4
    for (std::int32_t i = 0; i < r; ++i) mult *= 3;
    CHECK(line.degree == 2 * mult);
  }
  Tower t0(Characteristic(0), ExtNat::inf());
  CHECK_THROWS_AS(t0.line(0), DomainError);
}

TEST_CASE("tower literal round trip") {
  for (const char* text : {"tower(o0=1,l=2)", "tower(o0=inf,l=0)", "tower(o0=3,l=5,deg=2)"}) {
    Tower t = Tower::parse(text);
    CHECK(Tower::parse(t.str()) == t);
  }
  CHECK_THROWS_AS(Tower::parse("tower(o0=1)"), ParseError);
  CHECK_THROWS_AS(Tower::parse("tower(o0=2,l=4)"), DomainError);  // 4 not prime
  // An infinite-order base in positive characteristic is a line without
  // derived levels.
  Tower odd = Tower::parse("tower(o0=inf,l=3)");
  CHECK(effective_e(odd.base()).is_inf());
  CHECK_THROWS_AS(odd.line(0), DomainError);
}

TEST_CASE("st invariants propagation") {
  Characteristic l3(3);
  CuspidalInvariants base{2, 1, ExtNat(3), ExtNat(3), 1, 1};
  CuspidalInvariants lifted = st_invariants(base, l3, 0);
  CHECK(lifted.n == 6);
  CHECK(lifted.f == 3);
  CHECK(lifted.o == ExtNat(1));
  CHECK(lifted.e == ExtNat(3));
  CHECK(lifted.b == 1);
  CHECK(lifted.s == 1);

  Characteristic l2(2);
  CuspidalInvariants base2{1, 1, ExtNat(1), ExtNat(2), 1, 1};
  CuspidalInvariants lifted2 = st_invariants(base2, l2, 1);
  CHECK(lifted2.n == 1);
  CHECK(lifted2.f == 4);
  CHECK(lifted2.o == ExtNat(1));
  CHECK(lifted2.e == ExtNat(2));

  // o = 1 at r = 0 multiplies f by exactly e = l.
  for (std::uint64_t ell : {2ull, 3ull, 5ull}) {
    CuspidalInvariants inv{4, 7, ExtNat(1), ExtNat(ell), 2, 3};
    CuspidalInvariants out = st_invariants(inv, Characteristic(ell), 0);
    CHECK(out.f == 7 * ell);
    CHECK(out.n == 4);
    CHECK(out.b == 2);
    CHECK(out.s == 3);
  }

  // Characteristic 0 has no such level.
  CuspidalInvariants inf_inv{1, 1, ExtNat::inf(), ExtNat::inf(), 1, 1};
  CHECK_THROWS_AS(st_invariants(inf_inv, Characteristic(0), 0), DomainError);
  // Inconsistent e is rejected.
  CuspidalInvariants bad{1, 1, ExtNat(3), ExtNat(5), 1, 1};
  CHECK_THROWS_AS(st_invariants(bad, Characteristic(2), 0), DomainError);
}

TEST_CASE("cuspidal lengths") {
  CHECK(cuspidal_lengths(ExtNat(3), Characteristic(2), 6));
  CHECK_FALSE(cuspidal_lengths(ExtNat(3), Characteristic(2), 2));
  CHECK(cuspidal_lengths(ExtNat::inf(), Characteristic(0), 1));
  CHECK_FALSE(cuspidal_lengths(ExtNat::inf(), Characteristic(0), 5));

  // Exactly 1 + #{r : e l^r <= N} admissible lengths below any bound.
  const std::uint64_t N = 500;
  for (std::uint64_t ell : {2ull, 3ull})
    for (std::uint64_t e : {2ull, 3ull, 4ull, 5ull}) {
      std::uint64_t expected = 1;
      for (std::uint64_t v = e; v <= N; v *= ell) ++expected;
      std::uint64_t got = 0;
      for (std::uint64_t n = 1; n <= N; ++n)
        if (cuspidal_lengths(ExtNat(e), Characteristic(ell), n)) ++got;
      CHECK(got == expected);
    }
}
