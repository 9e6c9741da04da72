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
#include <utility>
#include <vector>

#include "mseg/partition.hpp"
#include "mseg/segment.hpp"

namespace mseg {

class Multisegment;

/// Multiset of cuspidal points of a tower, keyed by (level, class).
class Support {
 public:
  explicit Support(Tower tower) : tower_(std::move(tower)) {}

  const Tower& tower() const { return tower_; }
  const std::map<std::pair<std::int32_t, std::int64_t>, std::uint64_t>& points() const {
    return points_;
  }

  void add(std::int32_t level, std::int64_t cls, std::uint64_t mult = 1);
  std::uint64_t mult(std::int32_t level, std::int64_t cls) const;
  bool empty() const { return points_.empty(); }
  std::uint64_t degree() const;
  std::uint64_t point_count() const;

  /// Embeds each point as a length-1 segment.
  Multisegment as_point_multisegment() const;

  friend bool operator==(const Support&, const Support&) = default;

  std::string str() const;  // printed as the point multisegment

 private:
  Tower tower_;
  std::map<std::pair<std::int32_t, std::int64_t>, std::uint64_t> points_;
};

/// Finite multiset ledger of segment classes over one tower.
class Multisegment {
 public:
  explicit Multisegment(Tower tower) : tower_(std::move(tower)) {}

  const Tower& tower() const { return tower_; }
  const std::map<SegmentClass, std::uint64_t>& terms() const { return terms_; }

  void add(SegmentClass seg, std::uint64_t mult = 1);
  std::uint64_t mult(const SegmentClass& seg) const;

  bool is_zero() const { return terms_.empty(); }
  std::uint64_t degree() const;
  std::uint64_t length() const;
  std::uint64_t segment_count() const;
  Support support() const;
  bool is_supercuspidal() const;

  Multisegment& operator+=(const Multisegment& other);

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  friend bool operator<(const Multisegment& a, const Multisegment& b) {
    return a.terms_ < b.terms_;
  }

  /// Canonical DSL text; the zero multisegment prints "0".
  std::string str() const;
  /// DSL: <term> ('+' <term>)*, term (INT '*')? '[' INT ',' INT ']' '@'
  /// ('sc' | 'c' INT); "0" parses as the zero multisegment.
  static Multisegment parse(const Tower& tower, const std::string& text);

 private:
  Tower tower_;
  std::map<SegmentClass, std::uint64_t> terms_;
};

/// m^-: every segment loses its final point; length-1 segments vanish.
Multisegment minus(const Multisegment& m);

/// m^(1): the multiset of final classes.
Support endpoints(const Multisegment& m);

/// (m^(1), m^(2), ...) down to the zero multisegment.
std::vector<Support> derived_sequence(const Multisegment& m);

/// Inverse of derived_sequence; rejects input that is not a derived sequence.
Multisegment reconstruct(const Tower& tower, const std::vector<Support>& seq);

/// μ_m: degrees along the derived sequence; rejects the zero multisegment.
Partition mu_partition(const Multisegment& m);

/// m ⊢ n: n picks, segment by segment, the segment itself or its right
/// truncation (emptied segments deleted).
bool vdash(const Multisegment& m, const Multisegment& n);

/// δ(m, n) = deg(m) - deg(n); requires m ⊢ n.
std::uint64_t delta(const Multisegment& m, const Multisegment& n);

/// All n with m ⊢ n (duplicate-free, canonical order).
std::vector<Multisegment> vdash_enumerate(const Multisegment& m);

/// A contained run of e(line)*ell^r consecutive shifts of one segment, if
/// any.  In characteristic 0 there are no periods.
std::optional<Multisegment> find_period(const Multisegment& m);
bool is_aperiodic(const Multisegment& m);

/// m_sc: additive supercuspidal expansion; identity on supercuspidal input.
Multisegment sc(const Multisegment& m);

/// m_ap: the unique aperiodic preimage of a supercuspidal multisegment under
/// sc.  Rejects non-supercuspidal input; identity in characteristic 0.
Multisegment ap(const Multisegment& m);

/// t_sc and t_ap on supports, via the length-1 embedding.
Support support_sc(const Support& t);
Support support_ap(const Support& t);

/// All multisegments with the given support, canonical order; optionally
/// only the aperiodic ones.
std::vector<Multisegment> enumerate_mult(const Support& s, bool aperiodic_only = false);

/// Classification data: sc(m) as equality key, the cuspidal support
/// supp(ap(sc(m))) and the supercuspidal support supp(sc(m)).
struct ClassificationKeys {
  Multisegment z_key;
  Support cusp;
  Support scusp;
};
ClassificationKeys classification_keys(const Multisegment& m);
bool classify_equal(const Multisegment& a, const Multisegment& b);

/// Contragredient, segment by segment.
Multisegment dual(const Multisegment& m);

}  // namespace mseg
