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

#include <algorithm>

namespace mseg {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

SegmentClass canonical(const Tower& tower, SegmentClass seg) {
  if (seg.length == 0) throw DomainError("segment length must be positive");
  CuspidalLine line = tower.line(seg.level);
  if (line.order.is_finite())
    seg.start = floor_mod(seg.start, static_cast<std::int64_t>(line.order.value()));
  return seg;
}

std::int64_t final_class(const Tower& tower, const SegmentClass& seg) {
  CuspidalLine line = tower.line(seg.level);
  std::int64_t b = seg.start + static_cast<std::int64_t>(seg.length) - 1;
  if (line.order.is_finite())
    b = floor_mod(b, static_cast<std::int64_t>(line.order.value()));
  return b;
}

std::uint64_t segment_degree(const Tower& tower, const SegmentClass& seg) {
  return seg.length * tower.line(seg.level).degree;
}

std::map<std::int64_t, std::uint64_t> segment_support(const Tower& tower,
                                                      const SegmentClass& seg) {
  CuspidalLine line = tower.line(seg.level);
  std::map<std::int64_t, std::uint64_t> out;
  for (std::uint64_t k = 0; k < seg.length; ++k) {
    std::int64_t c = seg.start + static_cast<std::int64_t>(k);
    if (line.order.is_finite())
      c = floor_mod(c, static_cast<std::int64_t>(line.order.value()));
    ++out[c];
  }
  return out;
}

bool precedes_on_line(ExtNat order, std::int64_t start_a, std::uint64_t len_a,
                      std::int64_t start_b, std::uint64_t len_b) {
  // Concatenated class sequence of a then b.
  std::vector<std::int64_t> seq;
  seq.reserve(len_a + len_b);
  for (std::uint64_t k = 0; k < len_a; ++k) seq.push_back(start_a + static_cast<std::int64_t>(k));
  for (std::uint64_t k = 0; k < len_b; ++k) seq.push_back(start_b + static_cast<std::int64_t>(k));
  std::int64_t o = 0;
  if (order.is_finite()) {
    o = static_cast<std::int64_t>(order.value());
    for (auto& c : seq) c = floor_mod(c, o);
  }
  // best[i]: length of the longest subsequence of consecutive classes ending
  // at position i.  "Consecutive" is taken modulo the order when finite.
  std::vector<std::uint64_t> best(seq.size(), 1);
  std::uint64_t top = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      bool step = order.is_finite() ? floor_mod(seq[j] + 1, o) == seq[i]
                                    : seq[j] + 1 == seq[i];
      if (step) best[i] = std::max(best[i], best[j] + 1);
    }
    top = std::max(top, best[i]);
  }
  return top > len_a && top > len_b;
}

bool precedes(const Tower& tower, const SegmentClass& a, const SegmentClass& b) {
  if (a.level != b.level) return false;  // distinct lines are never linked
  CuspidalLine line = tower.line(a.level);
  return precedes_on_line(line.order, a.start, a.length, b.start, b.length);
}

bool linked(const Tower& tower, const SegmentClass& a, const SegmentClass& b) {
  return precedes(tower, a, b) || precedes(tower, b, a);
}

SegmentClass dual(const Tower& tower, const SegmentClass& seg) {
  SegmentClass out = seg;
  out.start = -(seg.start + static_cast<std::int64_t>(seg.length) - 1);
  return canonical(tower, out);
}

std::optional<SegmentClass> left_trunc(const Tower& tower, const SegmentClass& seg) {
  if (seg.length == 1) return std::nullopt;
  SegmentClass out = seg;
  out.start += 1;
  out.length -= 1;
  return canonical(tower, out);
}

std::optional<SegmentClass> right_trunc(const Tower& tower, const SegmentClass& seg) {
  if (seg.length == 1) return std::nullopt;
  SegmentClass out = seg;
  out.length -= 1;
  return canonical(tower, out);
}

std::vector<SegmentClass> sc_expand(const Tower& tower, const SegmentClass& seg) {
  SegmentClass c = canonical(tower, seg);
  if (c.level == -1) return {c};
  std::uint64_t n = tower.expansion_count(c.level);
  std::vector<SegmentClass> out;
  out.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    SegmentClass s;
    s.level = -1;
    s.start = static_cast<std::int64_t>(k);
    s.length = c.length;
    out.push_back(canonical(tower, s));
  }
  return out;
}

std::string segment_str(const SegmentClass& seg) {
  std::int64_t b = seg.start + static_cast<std::int64_t>(seg.length) - 1;
  std::string s = "[" + std::to_string(seg.start) + "," + std::to_string(b) + "]@";
  if (seg.level == -1)
    s += "sc";
  else
    s += "c" + std::to_string(seg.level);
  return s;
}

}  // namespace mseg
