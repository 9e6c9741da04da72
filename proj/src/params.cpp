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

#include <cctype>

namespace mseg {

ExtNat effective_e(const CuspidalLine& line) {
  if (line.characteristic.is_zero()) return ExtNat::inf();
  if (line.order == 1) return ExtNat(line.characteristic.ell);
  return line.order;
}

Tower::Tower(Characteristic ch, ExtNat o0, std::uint64_t degree)
    : ch_(ch), o0_(o0), degree_(degree) {
  // Delegate the consistency checks to the line constructor.
  (void)CuspidalLine(ch, o0, degree);
}

CuspidalLine Tower::line(std::int32_t level) const {
  if (level < -1) throw DomainError("tower level must be -1 or a natural number");
  if (level == -1) return base();
  return CuspidalLine(ch_, ExtNat(1), degree_ * expansion_count(level));
}

std::uint64_t Tower::expansion_count(std::int32_t level) const {
  if (level == -1) return 1;
  if (level < -1) throw DomainError("tower level must be -1 or a natural number");
  if (effective_e(base()).is_inf())
    throw DomainError("this tower has no cuspidal levels above the base");
  std::uint64_t n = effective_e(base()).value();
  for (std::int32_t i = 0; i < level; ++i) {
    if (n > (std::uint64_t{1} << 48)) throw DomainError("tower level out of range");
    n *= ch_.ell;
  }
  return n;
}

std::string Tower::str() const {
  std::string s = "tower(o0=" + o0_.str() + ",l=" + std::to_string(ch_.ell);
  if (degree_ != 1) s += ",deg=" + std::to_string(degree_);
  return s + ")";
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "'", i);
  }
  bool eat_word(const char* w) {
    skip_ws();
    std::size_t j = i;
    for (const char* p = w; *p; ++p, ++j)
      if (j >= s.size() || s[j] != *p) return false;
    i = j;
    return true;
  }
  std::uint64_t integer() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected an integer", i);
    std::uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (v > (std::uint64_t{1} << 62)) throw ParseError("integer too large", i);
      ++i;
    }
    return v;
  }
  void end() {
    skip_ws();
    if (i != s.size()) throw ParseError("trailing input", i);
  }
};

}  // namespace

Tower Tower::parse(const std::string& text) {
  Cursor c{text};
  if (!c.eat_word("tower")) throw ParseError("expected 'tower'", c.i);
  c.expect('(');
  if (!c.eat_word("o0")) throw ParseError("expected 'o0'", c.i);
  c.expect('=');
  ExtNat o0 = c.eat_word("inf") ? ExtNat::inf() : ExtNat(c.integer());
  c.expect(',');
  if (!c.eat_word("l")) throw ParseError("expected 'l'", c.i);
  c.expect('=');
  Characteristic ch(c.integer());
  std::uint64_t deg = 1;
  if (c.eat(',')) {
    if (!c.eat_word("deg")) throw ParseError("expected 'deg'", c.i);
    c.expect('=');
    deg = c.integer();
  }
  c.expect(')');
  c.end();
  return Tower(ch, o0, deg);
}

void validate_invariants(const CuspidalInvariants& inv, Characteristic ell) {
  if (inv.n == 0 || inv.f == 0 || inv.b == 0 || inv.s == 0)
    throw DomainError("cuspidal invariants must be positive");
  CuspidalLine line(ell, inv.o, 1);
  if (effective_e(line) != inv.e)
    throw DomainError("invariant e is inconsistent with (o, l)");
}

CuspidalInvariants st_invariants(const CuspidalInvariants& inv, Characteristic ell,
                                 std::uint64_t r) {
  validate_invariants(inv, ell);
  if (inv.o.is_inf() || ell.is_zero())
    throw DomainError("characteristic-0 towers have no cuspidal non-supercuspidal level");
  std::uint64_t mult = inv.e.value();
  for (std::uint64_t i = 0; i < r; ++i) {
    if (mult > (std::uint64_t{1} << 48)) throw DomainError("tower level out of range");
    mult *= ell.ell;
  }
  CuspidalInvariants out;
  out.n = inv.n * inv.o.value();
  out.f = inv.f * mult;
  out.o = ExtNat(1);
  out.e = ExtNat(ell.ell);
  out.b = inv.b;
  out.s = inv.s;
  return out;
}

bool cuspidal_lengths(ExtNat e, Characteristic ell, std::uint64_t n) {
  if (n == 0) throw DomainError("length must be positive");
  if (n == 1) return true;
  if (ell.is_zero() || e.is_inf()) return false;
  std::uint64_t acc = e.value();
  while (acc < n) {
    if (acc > n / ell.ell) return false;  // next step would overshoot n
    acc *= ell.ell;
  }
  return acc == n;
}

}  // namespace mseg
