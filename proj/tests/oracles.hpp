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

// Test-only independent oracles.  These deliberately avoid the library code
// paths they are used to check.

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "mseg/multisegment.hpp"
#include "mseg/partition.hpp"
#include "mseg/segment.hpp"

namespace mseg::oracles {

// Exhaustive all-subsequences reading of the linkage definition: some
// subsequence of the concatenated class sequence forms a run of consecutive
// classes strictly longer than both segments.
inline bool precedes_bruteforce(ExtNat order, std::int64_t start_a, std::uint64_t len_a,
                                std::int64_t start_b, std::uint64_t len_b) {
  std::vector<std::int64_t> seq;
  for (std::uint64_t k = 0; k < len_a; ++k) seq.push_back(start_a + static_cast<std::int64_t>(k));
  for (std::uint64_t k = 0; k < len_b; ++k) seq.push_back(start_b + static_cast<std::int64_t>(k));
  std::int64_t o = 0;
  if (order.is_finite()) {
    o = static_cast<std::int64_t>(order.value());
    for (auto& c : seq) c = ((c % o) + o) % o;
  }
  const std::size_t n = seq.size();
  std::uint64_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::int64_t> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) sub.push_back(seq[i]);
    bool run = true;
    for (std::size_t i = 0; i + 1 < sub.size() && run; ++i) {
      std::int64_t want = order.is_finite() ? (sub[i] + 1) % o : sub[i] + 1;
      if (sub[i + 1] != want) run = false;
    }
    if (run) best = std::max<std::uint64_t>(best, sub.size());
  }
  return best > len_a && best > len_b;
}

// Coefficients of prod_{k>=1} (1 - x^{e k}) / (1 - x^k) up to degree n: the
// generating function of e-regular partitions.
inline std::vector<std::int64_t> e_regular_series(std::uint64_t n, std::uint64_t e) {
  std::vector<std::int64_t> s(n + 1, 0);
  s[0] = 1;
  for (std::uint64_t k = 1; k <= n; ++k)  // multiply by 1 / (1 - x^k)
    for (std::uint64_t j = k; j <= n; ++j) s[j] += s[j - k];
  for (std::uint64_t k = 1; k * e <= n; ++k)  // multiply by (1 - x^{e k})
    for (std::uint64_t j = n; j >= k * e; --j) s[j] -= s[j - k * e];
  return s;
}

// Every multisegment on the tower with degree between 1 and max_degree.
inline std::vector<Multisegment> all_multisegments(const Tower& tower,
                                                   std::uint64_t max_degree,
                                                   bool supercuspidal_only = false) {
  std::vector<SegmentClass> candidates;
  auto add_level = [&](std::int32_t level) {
    CuspidalLine line = tower.line(level);
    if (line.degree > max_degree) return false;
    std::uint64_t starts = line.order.is_finite() ? line.order.value() : 1;
    for (std::uint64_t a = 0; a < starts; ++a)
      for (std::uint64_t L = 1; L * line.degree <= max_degree; ++L)
        candidates.push_back(SegmentClass{level, static_cast<std::int64_t>(a), L});
    return true;
  };
  add_level(-1);
  if (!supercuspidal_only && !tower.characteristic().is_zero())
    for (std::int32_t r = 0; add_level(r); ++r) {
    }
  std::vector<Multisegment> out;
  Multisegment cur(tower);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t idx,
                                                            std::uint64_t deg_left) {
    if (idx == candidates.size()) {
      if (!cur.is_zero()) out.push_back(cur);
      return;
    }
    std::uint64_t d = segment_degree(tower, candidates[idx]);
    rec(idx + 1, deg_left);
    Multisegment saved = cur;
    std::uint64_t used = 0;
    while (used + d <= deg_left) {
      cur.add(candidates[idx]);
      used += d;
      rec(idx + 1, deg_left - used);
    }
    cur = saved;
  };
  rec(0, max_degree);
  return out;
}

// All aperiodic multisegments whose supercuspidal expansion equals x,
// by exhaustive search over level multiplicities; independent of the digit
// construction inside ap().
inline std::vector<Multisegment> aperiodic_preimages_bruteforce(const Multisegment& x) {
  const Tower& tw = x.tower();
  std::map<std::uint64_t, std::map<std::int64_t, std::uint64_t>> by_len;
  for (const auto& [seg, mult] : x.terms()) by_len[seg.length][seg.start] += mult;

  // Per length, enumerate how many level-r segments to use.
  struct LengthChoice {
    std::uint64_t length;
    std::vector<std::vector<std::uint64_t>> options;  // each: u_0..u_rmax
  };
  std::vector<LengthChoice> choices;
  for (const auto& [length, counts] : by_len) {
    std::uint64_t total = 0;
    for (const auto& [a, v] : counts) total += v;
    std::vector<std::uint64_t> expansion;  // copies produced by one level-r segment
    for (std::int32_t r = 0;; ++r) {
      std::uint64_t n = tw.expansion_count(r);
      if (n > total) break;
      expansion.push_back(n);
    }
    LengthChoice lc{length, {}};
    std::vector<std::uint64_t> cur(expansion.size(), 0);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t r,
                                                              std::uint64_t used) {
      if (r == expansion.size()) {
        lc.options.push_back(cur);
        return;
      }
      for (std::uint64_t u = 0; used + u * expansion[r] <= total; ++u) {
        cur[r] = u;
        rec(r + 1, used + u * expansion[r]);
      }
      cur[r] = 0;
    };
    rec(0, 0);
    choices.push_back(std::move(lc));
  }

  std::vector<Multisegment> found;
  std::function<void(std::size_t, Multisegment)> assemble = [&](std::size_t idx,
                                                                Multisegment acc) {
    if (idx == choices.size()) {
      if (sc(acc) == x && is_aperiodic(acc)) found.push_back(std::move(acc));
      return;
    }
    const auto& lc = choices[idx];
    for (const auto& opt : lc.options) {
      Multisegment next = acc;
      Multisegment lifted(tw);
      bool ok = true;
      for (std::size_t r = 0; r < opt.size() && ok; ++r)
        if (opt[r])
          lifted.add(SegmentClass{static_cast<std::int32_t>(r), 0, lc.length}, opt[r]);
      // Residual at the base: x restricted to this length minus sc(lifted).
      Multisegment expanded = sc(lifted);
      for (const auto& [a, v] : by_len.at(lc.length)) {
        std::uint64_t used = expanded.mult(SegmentClass{-1, a, lc.length});
        if (used > v) {
          ok = false;
          break;
        }
        next.add(SegmentClass{-1, a, lc.length}, v - used);
      }
      if (!ok) continue;
      next += lifted;
      assemble(idx + 1, std::move(next));
    }
  };
  assemble(0, Multisegment(tw));
  return found;
}

// Seeded random multisegment on a tower.
inline Multisegment random_multisegment(const Tower& tower, std::mt19937_64& rng,
                                        bool supercuspidal_only = false,
                                        std::size_t max_segments = 6,
                                        std::uint64_t max_length = 5) {
  Multisegment m(tower);
  std::size_t count = 1 + rng() % max_segments;
  for (std::size_t k = 0; k < count; ++k) {
    std::int32_t level = -1;
    if (!supercuspidal_only && !tower.characteristic().is_zero() && rng() % 3 == 0)
      level = static_cast<std::int32_t>(rng() % 2);
    CuspidalLine line = tower.line(level);
    std::int64_t start = line.order.is_finite()
                             ? static_cast<std::int64_t>(rng() % line.order.value())
                             : static_cast<std::int64_t>(rng() % 11) - 5;
    std::uint64_t length = 1 + rng() % max_length;
    m.add(SegmentClass{level, start, length});
  }
  return m;
}

}  // namespace mseg::oracles
