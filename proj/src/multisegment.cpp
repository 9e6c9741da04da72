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

#include "mseg/multisegment.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace mseg {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void require_same_tower(const Tower& a, const Tower& b) {
  if (!(a == b)) throw DomainError("operands live on different towers");
}

}  // namespace

// ---------------------------------------------------------------------------
// Support

void Support::add(std::int32_t level, std::int64_t cls, std::uint64_t mult) {
  if (mult == 0) return;
  CuspidalLine line = tower_.line(level);
  if (line.order.is_finite())
    cls = floor_mod(cls, static_cast<std::int64_t>(line.order.value()));
  points_[{level, cls}] += mult;
}

std::uint64_t Support::mult(std::int32_t level, std::int64_t cls) const {
  auto it = points_.find({level, cls});
  return it == points_.end() ? 0 : it->second;
}

std::uint64_t Support::degree() const {
  std::uint64_t d = 0;
  for (const auto& [pt, mult] : points_) d += mult * tower_.line(pt.first).degree;
  return d;
}

std::uint64_t Support::point_count() const {
  std::uint64_t d = 0;
  for (const auto& [pt, mult] : points_) d += mult;
  return d;
}

Multisegment Support::as_point_multisegment() const {
  Multisegment m(tower_);
  for (const auto& [pt, mult] : points_)
    m.add(SegmentClass{pt.first, pt.second, 1}, mult);
  return m;
}

std::string Support::str() const { return as_point_multisegment().str(); }

// ---------------------------------------------------------------------------
// Multisegment

void Multisegment::add(SegmentClass seg, std::uint64_t mult) {
  if (mult == 0) return;
  terms_[canonical(tower_, seg)] += mult;
}

std::uint64_t Multisegment::mult(const SegmentClass& seg) const {
  auto it = terms_.find(canonical(tower_, seg));
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t Multisegment::degree() const {
  std::uint64_t d = 0;
  for (const auto& [seg, mult] : terms_) d += mult * segment_degree(tower_, seg);
  return d;
}

std::uint64_t Multisegment::length() const {
  std::uint64_t n = 0;
  for (const auto& [seg, mult] : terms_) n += mult * seg.length;
  return n;
}

std::uint64_t Multisegment::segment_count() const {
  std::uint64_t n = 0;
  for (const auto& [seg, mult] : terms_) n += mult;
  return n;
}

Support Multisegment::support() const {
  Support s(tower_);
  for (const auto& [seg, mult] : terms_)
    for (const auto& [cls, k] : segment_support(tower_, seg))
      s.add(seg.level, cls, k * mult);
  return s;
}

bool Multisegment::is_supercuspidal() const {
  for (const auto& [seg, mult] : terms_)
    if (seg.level != -1) return false;
  return true;
}

Multisegment& Multisegment::operator+=(const Multisegment& other) {
  require_same_tower(tower_, other.tower_);
  for (const auto& [seg, mult] : other.terms_) terms_[seg] += mult;
  return *this;
}

std::string Multisegment::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [seg, mult] : terms_) {
    if (!s.empty()) s += " + ";
    if (mult != 1) s += std::to_string(mult) + "*";
    s += segment_str(seg);
  }
  return s;
}

namespace {

struct MCursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i);
  }
  std::int64_t integer() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected an integer", i);
    std::int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > (std::int64_t{1} << 48)) throw ParseError("integer too large", i);
      ++i;
    }
    return neg ? -v : v;
  }
};

}  // namespace

Multisegment Multisegment::parse(const Tower& tower, const std::string& text) {
  Multisegment out(tower);
  MCursor c{text};
  c.skip_ws();
  if (c.peek('0')) {
    ++c.i;
    c.skip_ws();
    if (c.i != text.size()) throw ParseError("trailing input", c.i);
    return out;
  }
  for (;;) {
    c.skip_ws();
    std::uint64_t mult = 1;
    if (c.i < text.size() && std::isdigit(static_cast<unsigned char>(text[c.i]))) {
      std::int64_t m = c.integer();
      if (m <= 0) throw ParseError("multiplicity must be positive", c.i);
      mult = static_cast<std::uint64_t>(m);
      c.expect('*');
    }
    c.expect('[');
    std::int64_t a = c.integer();
    c.expect(',');
    std::int64_t b = c.integer();
    c.expect(']');
    c.expect('@');
    std::int32_t level;
    c.skip_ws();
    if (c.i + 1 < text.size() && text[c.i] == 's' && text[c.i + 1] == 'c') {
      level = -1;
      c.i += 2;
    } else if (c.i < text.size() && text[c.i] == 'c') {
      ++c.i;
      std::int64_t r = c.integer();
      if (r < 0) throw ParseError("level must be a natural number", c.i);
      level = static_cast<std::int32_t>(r);
    } else {
      throw ParseError("expected 'sc' or 'c<level>'", c.i);
    }
    if (a > b) throw DomainError("segment endpoints must satisfy a <= b");
    if (level >= 0 && effective_e(tower.base()).is_inf())
      throw DomainError("this tower has no cuspidal levels above the base");
    out.add(SegmentClass{level, a, static_cast<std::uint64_t>(b - a + 1)}, mult);
    c.skip_ws();
    if (c.i == text.size()) break;
    c.expect('+');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Derived sequence and reconstruction

Multisegment minus(const Multisegment& m) {
  Multisegment out(m.tower());
  for (const auto& [seg, mult] : m.terms())
    if (auto t = right_trunc(m.tower(), seg)) out.add(*t, mult);
  return out;
}

Support endpoints(const Multisegment& m) {
  Support s(m.tower());
  for (const auto& [seg, mult] : m.terms())
    s.add(seg.level, final_class(m.tower(), seg), mult);
  return s;
}

std::vector<Support> derived_sequence(const Multisegment& m) {
  std::vector<Support> out;
  Multisegment cur = m;
  while (!cur.is_zero()) {
    out.push_back(endpoints(cur));
    cur = minus(cur);
  }
  return out;
}

Multisegment reconstruct(const Tower& tower, const std::vector<Support>& seq) {
  Multisegment out(tower);
  std::size_t t = seq.size();
  for (std::size_t idx = 0; idx < t; ++idx)
    require_same_tower(tower, seq[idx].tower());
  // Count of segments with exact length L starting at class y:
  // N_L(y) - N_{L+1}(y - 1), where N_i is the multiplicity in seq[i-1].
  for (std::size_t L = 1; L <= t; ++L) {
    std::set<std::pair<std::int32_t, std::int64_t>> keys;
    for (const auto& [pt, mult] : seq[L - 1].points()) keys.insert(pt);
    if (L < t) {
      for (const auto& [pt, mult] : seq[L].points()) {
        CuspidalLine line = tower.line(pt.first);
        std::int64_t y = pt.second + 1;
        if (line.order.is_finite())
          y = floor_mod(y, static_cast<std::int64_t>(line.order.value()));
        keys.insert({pt.first, y});
      }
    }
    for (const auto& [level, y] : keys) {
      std::uint64_t n_here = seq[L - 1].mult(level, y);
      std::uint64_t n_next = 0;
      if (L < t) {
        CuspidalLine line = tower.line(level);
        std::int64_t prev = y - 1;
        if (line.order.is_finite())
          prev = floor_mod(prev, static_cast<std::int64_t>(line.order.value()));
        n_next = seq[L].mult(level, prev);
      }
      if (n_here < n_next)
        throw DomainError("not a derived sequence: negative segment count");
      out.add(SegmentClass{level, y, static_cast<std::uint64_t>(L)}, n_here - n_next);
    }
  }
  if (!(derived_sequence(out) == seq))
    throw DomainError("not a derived sequence: round trip mismatch");
  return out;
}

Partition mu_partition(const Multisegment& m) {
  if (m.is_zero()) throw DomainError("mu is undefined for the zero multisegment");
  std::vector<std::uint64_t> degs;
  for (const auto& s : derived_sequence(m)) degs.push_back(s.degree());
  for (std::size_t i = 0; i + 1 < degs.size(); ++i)
    if (degs[i] < degs[i + 1]) throw DomainError("derived degrees are not decreasing");
  return Partition(std::move(degs));
}

// ---------------------------------------------------------------------------
// The truncation relation

bool vdash(const Multisegment& m, const Multisegment& n) {
  require_same_tower(m.tower(), n.tower());
  // Per (level, start) the classes form chains under right truncation; the
  // number of truncated copies at each length is forced, longest first.
  std::map<std::pair<std::int32_t, std::int64_t>, std::uint64_t> maxlen;
  for (const auto& [seg, mult] : m.terms()) {
    auto& L = maxlen[{seg.level, seg.start}];
    L = std::max(L, seg.length);
  }
  for (const auto& [seg, mult] : n.terms()) {
    auto it = maxlen.find({seg.level, seg.start});
    if (it == maxlen.end()) return false;  // class group absent from m
    it->second = std::max(it->second, seg.length);
  }
  for (const auto& [key, top] : maxlen) {
    std::uint64_t carried = 0;  // copies truncated down from length L+1
    for (std::uint64_t L = top; L >= 1; --L) {
      SegmentClass c{key.first, key.second, L};
      std::uint64_t have = m.mult(c);
      std::uint64_t want = n.mult(c);
      // want = (have - t) + carried, so t = have + carried - want.
      if (have + carried < want) return false;
      std::uint64_t t = have + carried - want;
      if (t > have) return false;
      carried = t;
      if (L == 1) break;
    }
    // Truncated length-1 copies simply vanish; any carried value is fine.
  }
  return true;
}

std::uint64_t delta(const Multisegment& m, const Multisegment& n) {
  if (!vdash(m, n)) throw DomainError("delta requires the truncation relation to hold");
  return m.degree() - n.degree();
}

std::vector<Multisegment> vdash_enumerate(const Multisegment& m) {
  std::vector<std::pair<SegmentClass, std::uint64_t>> items(m.terms().begin(),
                                                            m.terms().end());
  std::vector<Multisegment> out;
  Multisegment cur(m.tower());
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == items.size()) {
      out.push_back(cur);
      return;
    }
    const auto& [seg, mult] = items[idx];
    auto trunc = right_trunc(m.tower(), seg);
    for (std::uint64_t t = 0; t <= mult; ++t) {
      Multisegment saved = cur;
      if (mult - t > 0) cur.add(seg, mult - t);
      if (t > 0 && trunc) cur.add(*trunc, t);
      rec(idx + 1);
      cur = std::move(saved);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Periods, sc and ap

std::optional<Multisegment> find_period(const Multisegment& m) {
  const Tower& tw = m.tower();
  if (tw.characteristic().is_zero()) return std::nullopt;

  // Group multiplicities by (level, length); a period consists of
  // e(line)*ell^r consecutive shifts of a single segment.  On a line of
  // finite order o the shifts of the smallest period (r = 0) cover every
  // class exactly e/o times, which is 1 for o >= 2 and ell for o = 1.
  std::map<std::pair<std::int32_t, std::uint64_t>, std::map<std::int64_t, std::uint64_t>>
      by_len;
  for (const auto& [seg, mult] : m.terms())
    by_len[{seg.level, seg.length}][seg.start] += mult;

  for (const auto& [key, counts] : by_len) {
    auto [level, length] = key;
    CuspidalLine line = tw.line(level);
    if (line.order.is_inf()) continue;  // e = infinity: no periods on this line
    std::uint64_t o = line.order.value();
    std::uint64_t e = effective_e(line).value();
    std::uint64_t need = e / o;  // e = o for o >= 2, e = ell for o = 1
    bool full = true;
    for (std::uint64_t c = 0; c < o && full; ++c) {
      auto it = counts.find(static_cast<std::int64_t>(c));
      if (it == counts.end() || it->second < need) full = false;
    }
    if (!full) continue;
    Multisegment period(tw);
    for (std::uint64_t k = 0; k < e; ++k)
      period.add(SegmentClass{level, static_cast<std::int64_t>(k), length});
    return period;
  }
  return std::nullopt;
}

bool is_aperiodic(const Multisegment& m) { return !find_period(m).has_value(); }

Multisegment sc(const Multisegment& m) {
  Multisegment out(m.tower());
  for (const auto& [seg, mult] : m.terms())
    for (const auto& piece : sc_expand(m.tower(), seg)) out.add(piece, mult);
  return out;
}

Multisegment ap(const Multisegment& m) {
  if (!m.is_supercuspidal())
    throw DomainError("ap takes a supercuspidal multisegment");
  const Tower& tw = m.tower();
  // With an infinite e on the base there are no periods and no levels:
  // every supercuspidal multisegment is its own aperiodic form.
  if (effective_e(tw.base()).is_inf()) return m;
  std::uint64_t ell = tw.characteristic().ell;
  std::uint64_t o0 = tw.base_order().value();

  std::map<std::uint64_t, std::map<std::int64_t, std::uint64_t>> by_len;
  for (const auto& [seg, mult] : m.terms()) by_len[seg.length][seg.start] += mult;

  Multisegment out(tw);
  for (const auto& [length, counts] : by_len) {
    std::uint64_t lifted;  // total multiplicity moved to derived levels
    if (o0 == 1) {
      std::uint64_t v = counts.count(0) ? counts.at(0) : 0;
      std::uint64_t w = v % ell;
      out.add(SegmentClass{-1, 0, length}, w);
      lifted = (v - w) / ell;
    } else {
      std::uint64_t c = ~std::uint64_t{0};
      for (std::uint64_t a = 0; a < o0; ++a) {
        auto it = counts.find(static_cast<std::int64_t>(a));
        c = std::min(c, it == counts.end() ? 0 : it->second);
      }
      for (std::uint64_t a = 0; a < o0; ++a) {
        auto it = counts.find(static_cast<std::int64_t>(a));
        std::uint64_t v = it == counts.end() ? 0 : it->second;
        out.add(SegmentClass{-1, static_cast<std::int64_t>(a), length}, v - c);
      }
      lifted = c;
    }
    auto digits = digits_base(lifted, ell);
    for (std::size_t r = 0; r < digits.size(); ++r)
      out.add(SegmentClass{static_cast<std::int32_t>(r), 0, length}, digits[r]);
  }
  return out;
}

Support support_sc(const Support& t) { return sc(t.as_point_multisegment()).support(); }

Support support_ap(const Support& t) {
  Multisegment pts = t.as_point_multisegment();
  if (!pts.is_supercuspidal())
    throw DomainError("support_ap takes a supercuspidal support");
  return ap(pts).support();
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Multisegment> enumerate_mult(const Support& s, bool aperiodic_only) {
  const Tower& tw = s.tower();

  // Candidate segments: every (level, start, length) whose support can fit
  // inside s.  Lengths beyond the order wrap around and consume classes with
  // multiplicity.
  std::map<std::int32_t, std::uint64_t> level_total;
  for (const auto& [pt, mult] : s.points()) level_total[pt.first] += mult;

  std::vector<SegmentClass> candidates;
  for (const auto& [level, total] : level_total) {
    std::vector<std::int64_t> starts;
    for (const auto& [pt, mult] : s.points())
      if (pt.first == level) starts.push_back(pt.second);
    for (std::int64_t a : starts)
      for (std::uint64_t L = 1; L <= total; ++L) {
        SegmentClass seg{level, a, L};
        bool fits = true;
        for (const auto& [cls, k] : segment_support(tw, seg))
          if (s.mult(level, cls) < k) {
            fits = false;
            break;
          }
        if (fits) candidates.push_back(canonical(tw, seg));
      }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto take = [&](const Support& rest, const SegmentClass& seg) -> std::optional<Support> {
    auto supp = segment_support(tw, seg);
    Support next(tw);
    for (const auto& [pt, mult] : rest.points()) {
      std::uint64_t used = 0;
      if (pt.first == seg.level) {
        auto it = supp.find(pt.second);
        if (it != supp.end()) used = it->second;
      }
      if (mult < used) return std::nullopt;
      if (mult > used) next.add(pt.first, pt.second, mult - used);
    }
    // Classes demanded by seg but absent from rest.
    for (const auto& [cls, k] : supp)
      if (rest.mult(seg.level, cls) < k) return std::nullopt;
    return next;
  };

  std::vector<Multisegment> out;
  std::function<void(std::size_t, Support, Multisegment)> rec =
      [&](std::size_t idx, Support rest, Multisegment cur) {
        if (rest.empty()) {
          out.push_back(std::move(cur));
          return;
        }
        if (idx == candidates.size()) return;
        const SegmentClass& seg = candidates[idx];
        rec(idx + 1, rest, cur);  // zero copies of this candidate
        for (;;) {
          auto next = take(rest, seg);
          if (!next) break;
          rest = std::move(*next);
          cur.add(seg, 1);
          rec(idx + 1, rest, cur);
        }
      };
  rec(0, s, Multisegment(tw));

  if (aperiodic_only) {
    std::vector<Multisegment> filtered;
    for (auto& m : out)
      if (is_aperiodic(m)) filtered.push_back(std::move(m));
    out = std::move(filtered);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Classification keys

ClassificationKeys classification_keys(const Multisegment& m) {
  Multisegment z = sc(m);
  Support scusp = z.support();
  Support cusp = ap(z).support();
  return ClassificationKeys{std::move(z), std::move(cusp), std::move(scusp)};
}

bool classify_equal(const Multisegment& a, const Multisegment& b) {
  require_same_tower(a.tower(), b.tower());
  return sc(a) == sc(b);
}

Multisegment dual(const Multisegment& m) {
  Multisegment out(m.tower());
  for (const auto& [seg, mult] : m.terms()) out.add(dual(m.tower(), seg), mult);
  return out;
}

}  // namespace mseg
