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

#include "mseg/segment.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace mseg;

namespace {

const Tower kChar0(Characteristic(0), ExtNat::inf());

Tower tower_o(std::uint64_t o, std::uint64_t ell = 2) {
  return Tower(Characteristic(ell), ExtNat(o));
}

}  // namespace

TEST_CASE("segment support") {
  auto s1 = segment_support(kChar0, SegmentClass{-1, 0, 3});
  CHECK(s1.size() == 3);
  CHECK(s1.at(0) == 1);
  CHECK(s1.at(1) == 1);
  CHECK(s1.at(2) == 1);

  Tower t3 = tower_o(3);
  auto s2 = segment_support(t3, SegmentClass{-1, 2, 4});
  CHECK(s2.at(2) == 2);
  CHECK(s2.at(0) == 1);
  CHECK(s2.at(1) == 1);

  Tower t1 = tower_o(1);
  auto s3 = segment_support(t1, SegmentClass{-1, 0, 5});
  CHECK(s3.size() == 1);
  CHECK(s3.at(0) == 5);
}

TEST_CASE("linkage examples") {
  CHECK(precedes(kChar0, {-1, 0, 1}, {-1, 1, 1}));
  CHECK(linked(kChar0, {-1, 0, 1}, {-1, 1, 1}));
  CHECK_FALSE(linked(kChar0, {-1, 0, 1}, {-1, 2, 1}));
  Tower t1 = tower_o(1);
  CHECK(linked(t1, {-1, 0, 1}, {-1, 0, 1}));
  CHECK(linked(kChar0, {-1, 0, 2}, {-1, 2, 2}));
  // Nested segments are not linked.
  CHECK_FALSE(linked(kChar0, {-1, 0, 3}, {-1, 1, 1}));
  // Distinct levels are never linked.
  Tower t12 = tower_o(1, 2);
  CHECK_FALSE(linked(t12, {-1, 0, 1}, {0, 0, 1}));
}

TEST_CASE("linkage symmetry and self-linkage") {
  for (std::uint64_t o : {0ull, 1ull, 2ull, 3ull, 4ull}) {
    Tower tw = o == 0 ? kChar0 : tower_o(o);
    std::int64_t span = o == 0 ? 5 : static_cast<std::int64_t>(o);
    for (std::uint64_t la = 1; la <= 4; ++la)
      for (std::uint64_t lb = 1; lb <= 4; ++lb)
        for (std::int64_t sb = 0; sb < span; ++sb) {
          SegmentClass a{-1, 0, la}, b{-1, sb, lb};
          CHECK(linked(tw, a, b) == linked(tw, b, a));
        }
    if (o == 0)
      for (std::uint64_t len = 1; len <= 4; ++len)
        CHECK_FALSE(linked(tw, {-1, 0, len}, {-1, 0, len}));
  }
}

TEST_CASE("linkage DP equals the all-subsequences oracle") {
  for (std::uint64_t o : {0ull, 1ull, 2ull, 3ull, 4ull}) {
    ExtNat order = o == 0 ? ExtNat::inf() : ExtNat(o);
    std::int64_t lo = o == 0 ? -6 : 0;
    std::int64_t hi = o == 0 ? 6 : static_cast<std::int64_t>(o) - 1;
    for (std::uint64_t la = 1; la <= 5; ++la)
      for (std::uint64_t lb = 1; la + lb <= 6; ++lb)
        for (std::int64_t sb = lo; sb <= hi; ++sb) {
          bool dp = precedes_on_line(order, 0, la, sb, lb);
          bool brute = oracles::precedes_bruteforce(order, 0, la, sb, lb);
          CHECK(dp == brute);
        }
  }
}

TEST_CASE("duality and truncation") {
  SegmentClass d = dual(kChar0, SegmentClass{-1, 1, 3});
  CHECK(d.start == -3);
  CHECK(d.length == 3);
  CHECK(dual(kChar0, d) == SegmentClass{-1, 1, 3});

  auto lt = left_trunc(kChar0, SegmentClass{-1, 0, 3});
  REQUIRE(lt.has_value());
  CHECK(*lt == SegmentClass{-1, 1, 2});
  auto rt = right_trunc(kChar0, SegmentClass{-1, 0, 3});
  REQUIRE(rt.has_value());
  CHECK(*rt == SegmentClass{-1, 0, 2});
  CHECK_FALSE(left_trunc(kChar0, SegmentClass{-1, 5, 1}).has_value());
  CHECK_FALSE(right_trunc(kChar0, SegmentClass{-1, 5, 1}).has_value());

  // Dual negates the support classwise.
  for (std::uint64_t o : {3ull, 4ull}) {
    Tower tw = tower_o(o);
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(o); ++a)
      for (std::uint64_t len = 1; len <= 5; ++len) {
        SegmentClass seg{-1, a, len};
        auto sup = segment_support(tw, seg);
        auto dsup = segment_support(tw, dual(tw, seg));
        for (const auto& [cls, mult] : sup) {
          std::int64_t neg = ((-cls) % static_cast<std::int64_t>(o) +
                              static_cast<std::int64_t>(o)) %
                             static_cast<std::int64_t>(o);
          CHECK(dsup.at(neg) == mult);
        }
      }
  }
}

TEST_CASE("two unlinked-segments facts") {
  // For unlinked segments with len(a) >= len(b):
  //  (1) if their final classes differ, the final class of a is not in the
  //      support of b;
  //  (2) a stays unlinked with the left truncation of b.
  for (std::uint64_t o : {0ull, 1ull, 2ull, 3ull, 4ull}) {
    Tower tw = o == 0 ? kChar0 : tower_o(o);
    std::int64_t lo = o == 0 ? -8 : 0;
    std::int64_t hi = o == 0 ? 8 : static_cast<std::int64_t>(o) - 1;
    for (std::uint64_t la = 1; la <= 7; ++la)
      for (std::uint64_t lb = 1; lb <= la && la + lb <= 8; ++lb)
        for (std::int64_t sb = lo; sb <= hi; ++sb) {
          SegmentClass a{-1, 0, la}, b{-1, sb, lb};
          if (linked(tw, a, b)) continue;
          if (final_class(tw, a) != final_class(tw, b)) {
            auto sup = segment_support(tw, b);
            CHECK(sup.find(final_class(tw, a)) == sup.end());
          }
          if (auto tb = left_trunc(tw, b)) CHECK_FALSE(linked(tw, a, *tb));
        }
  }
}

TEST_CASE("supercuspidal expansion") {
  Tower t12 = tower_o(1, 2);
  auto ex1 = sc_expand(t12, SegmentClass{0, 0, 1});
  REQUIRE(ex1.size() == 2);
  CHECK(ex1[0] == SegmentClass{-1, 0, 1});
  CHECK(ex1[1] == SegmentClass{-1, 0, 1});

  Tower t32 = tower_o(3, 2);
  auto ex2 = sc_expand(t32, SegmentClass{0, 0, 2});
  REQUIRE(ex2.size() == 3);
  CHECK(ex2[0] == SegmentClass{-1, 0, 2});
  CHECK(ex2[1] == SegmentClass{-1, 1, 2});
  CHECK(ex2[2] == SegmentClass{-1, 2, 2});

  auto ex3 = sc_expand(t32, SegmentClass{-1, 1, 4});
  REQUIRE(ex3.size() == 1);
  CHECK(ex3[0] == SegmentClass{-1, 1, 4});

  // Expansion preserves total degree.
  for (std::int32_t level : {0, 1})
    for (std::uint64_t len = 1; len <= 4; ++len) {
      SegmentClass seg{level, 0, len};
      std::uint64_t total = 0;
      for (const auto& piece : sc_expand(t32, seg)) total += segment_degree(t32, piece);
      CHECK(total == segment_degree(t32, seg));
    }
}

TEST_CASE("canonicalization and text form") {
  Tower t3 = tower_o(3);
  CHECK(canonical(t3, SegmentClass{-1, 5, 2}) == SegmentClass{-1, 2, 2});
  CHECK(canonical(t3, SegmentClass{-1, -1, 2}) == SegmentClass{-1, 2, 2});
  CHECK(canonical(t3, SegmentClass{0, 7, 2}) == SegmentClass{0, 0, 2});
  CHECK(segment_str(SegmentClass{-1, 2, 4}) == "[2,5]@sc");
  CHECK(segment_str(SegmentClass{1, 0, 1}) == "[0,0]@c1");
  CHECK(segment_degree(t3, SegmentClass{0, 0, 2}) == 6);  // level-0 line degree 3
}
