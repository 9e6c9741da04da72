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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mseg/params.hpp"

namespace mseg {

/// Equivalence class of a segment on a tower: the level it lives on, the
/// class of its initial point, and its length.  On a line of finite order o
/// the start is the canonical residue in [0, o); on an order-1 line it is
/// always 0.
struct SegmentClass {
  std::int32_t level = -1;   // -1: supercuspidal base; r >= 0: derived level
  std::int64_t start = 0;
  std::uint64_t length = 1;

  friend bool operator==(const SegmentClass&, const SegmentClass&) = default;

  // Ledger/report order: by level, then longer segments first, then start.
  friend bool operator<(const SegmentClass& a, const SegmentClass& b) {
    if (a.level != b.level) return a.level < b.level;
    if (a.length != b.length) return a.length > b.length;
    return a.start < b.start;
  }
};

/// Canonical representative: start reduced modulo the order of the level
/// line.  Throws if the level does not exist on the tower.
SegmentClass canonical(const Tower& tower, SegmentClass seg);

/// Final class b(Δ) = start + length - 1, reduced on finite lines.
std::int64_t final_class(const Tower& tower, const SegmentClass& seg);

/// deg(Δ) = length * degree of the level line.
std::uint64_t segment_degree(const Tower& tower, const SegmentClass& seg);

/// Multiset of classes covered by the segment, with wrap-around accumulation
/// on finite lines.
std::map<std::int64_t, std::uint64_t> segment_support(const Tower& tower,
                                                      const SegmentClass& seg);

/// Linkage geometry of a line: only the order matters.
/// `precedes`: the concatenated class sequence of a then b admits a
/// subsequence of consecutive classes strictly longer than both lengths.
bool precedes_on_line(ExtNat order, std::int64_t start_a, std::uint64_t len_a,
                      std::int64_t start_b, std::uint64_t len_b);

/// Segments on different levels are never linked.
bool precedes(const Tower& tower, const SegmentClass& a, const SegmentClass& b);
bool linked(const Tower& tower, const SegmentClass& a, const SegmentClass& b);

/// Contragredient segment: start negated through the far end; an involution.
SegmentClass dual(const Tower& tower, const SegmentClass& seg);

/// Remove the initial (resp. final) point; empty when length is 1.
std::optional<SegmentClass> left_trunc(const Tower& tower, const SegmentClass& seg);
std::optional<SegmentClass> right_trunc(const Tower& tower, const SegmentClass& seg);

/// Supercuspidal expansion of a single segment: the base-level shifts
/// (start + k mod o0, same length) for k = 0..expansion_count(level)-1.
/// A base-level segment expands to itself.
std::vector<SegmentClass> sc_expand(const Tower& tower, const SegmentClass& seg);

/// Text form "[a,b]@sc" or "[a,b]@c<r>"; lengths derived as b - a + 1.
std::string segment_str(const SegmentClass& seg);

}  // namespace mseg
