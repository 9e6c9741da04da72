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

#include <algorithm>
#include <numeric>
#include <random>

#include "mseg/error.hpp"

namespace mseg {

// ---------------------------------------------------------------------------
// Permutations

Perm Perm::identity(std::size_t n) {
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::transposition(std::size_t n, std::size_t i) {
  Perm w = identity(n);
  std::swap(w.img_[i], w.img_[i + 1]);
  return w;
}

Perm Perm::after(const Perm& b) const {
  if (n() != b.n()) throw DomainError("permutation rank mismatch");
  std::vector<std::uint8_t> img(n());
  for (std::size_t k = 0; k < n(); ++k) img[k] = img_[b.img_[k]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> img(n());
  for (std::size_t k = 0; k < n(); ++k) img[img_[k]] = static_cast<std::uint8_t>(k);
  return Perm(std::move(img));
}

std::size_t Perm::length() const {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = i + 1; j < n(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Perm::is_identity() const {
  for (std::size_t k = 0; k < n(); ++k)
    if (img_[k] != k) return false;
  return true;
}

std::string Perm::str() const {
  std::string s;
  for (std::size_t k = 0; k < n(); ++k) {
    if (k) s += ".";
    s += std::to_string(static_cast<int>(img_[k]) + 1);
  }
  return s;
}

std::vector<std::size_t> lex_min_reduced_word(const Perm& w) {
  std::vector<std::size_t> word;
  Perm cur = w;
  Perm curinv = w.inverse();
  while (!cur.is_identity()) {
    // Smallest left descent: i with position of i after position of i+1.
    std::size_t pick = cur.n();
    for (std::size_t i = 0; i + 1 < cur.n(); ++i)
      if (curinv(i) > curinv(i + 1)) {
        pick = i;
        break;
      }
    if (pick == cur.n()) throw DomainError("descent search failed");
    word.push_back(pick);
    cur = Perm::transposition(cur.n(), pick).after(cur);
    curinv = cur.inverse();
  }
  return word;
}

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Elements

void HeckeElement::accumulate(const HeckeMono& m, std::uint64_t coeff) {
  coeff %= p_;
  if (coeff == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
    return;
  }
  it->second = (it->second + coeff) % p_;
  if (it->second == 0) terms_.erase(it);
}

std::string HeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + "*X^(";
    for (std::size_t k = 0; k < m.lam.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(m.lam[k]);
    }
    s += ")T(" + m.w.str() + ")";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Algebra

HeckeAlgebra::HeckeAlgebra(std::uint64_t p, std::uint64_t xi, std::uint32_t rank)
    : F_(p), xi_(xi % p), rank_(rank) {
  if (rank_ == 0) throw DomainError("rank must be positive");
  if (xi_ == 0) throw DomainError("the Hecke parameter must be invertible");
}

void HeckeAlgebra::check_element(const HeckeElement& el) const {
  if (el.p() != F_.p() || el.xi() != xi_ || el.rank() != rank_)
    throw DomainError("element belongs to a different Hecke algebra");
}

HeckeElement HeckeAlgebra::zero() const { return HeckeElement(F_.p(), xi_, rank_); }

HeckeElement HeckeAlgebra::one() const {
  return monomial(std::vector<std::int32_t>(rank_, 0), Perm::identity(rank_));
}

HeckeElement HeckeAlgebra::S(std::uint32_t i) const {
  if (i < 1 || i >= rank_) throw DomainError("S index out of range");
  return monomial(std::vector<std::int32_t>(rank_, 0), Perm::transposition(rank_, i - 1));
}

HeckeElement HeckeAlgebra::X(std::uint32_t j, std::int64_t power) const {
  if (j < 1 || j > rank_) throw DomainError("X index out of range");
  std::vector<std::int32_t> lam(rank_, 0);
  lam[j - 1] = static_cast<std::int32_t>(power);
  return monomial(std::move(lam), Perm::identity(rank_));
}

HeckeElement HeckeAlgebra::monomial(std::vector<std::int32_t> lam, Perm w,
                                    std::uint64_t coeff) const {
  if (lam.size() != rank_ || w.n() != rank_)
    throw DomainError("monomial rank mismatch");
  HeckeElement el = zero();
  el.accumulate(HeckeMono{std::move(lam), std::move(w)}, coeff);
  return el;
}

HeckeElement HeckeAlgebra::add(const HeckeElement& a, const HeckeElement& b) const {
  check_element(a);
  check_element(b);
  HeckeElement out = a;
  for (const auto& [m, c] : b.terms()) out.accumulate(m, c);
  return out;
}

HeckeElement HeckeAlgebra::sub(const HeckeElement& a, const HeckeElement& b) const {
  check_element(a);
  check_element(b);
  HeckeElement out = a;
  for (const auto& [m, c] : b.terms()) out.accumulate(m, F_.neg(c));
  return out;
}

HeckeElement HeckeAlgebra::scale(const HeckeElement& a, std::uint64_t c) const {
  check_element(a);
  HeckeElement out = zero();
  for (const auto& [m, x] : a.terms()) out.accumulate(m, F_.mul(x, c % F_.p()));
  return out;
}

HeckeElement HeckeAlgebra::lmul_S(std::size_t i, const HeckeElement& el) const {
  HeckeElement out = zero();
  const std::uint64_t ximinus1 = F_.sub(xi_, 1);
  const Perm si = Perm::transposition(rank_, i);
  for (const auto& [m, c] : el.terms()) {
    // Swap part: X^{s_i lambda} (S_i T_w).
    std::vector<std::int32_t> lam2 = m.lam;
    std::swap(lam2[i], lam2[i + 1]);
    Perm siw = si.after(m.w);
    Perm winv = m.w.inverse();
    bool lengthens = winv(i) < winv(i + 1);
    if (lengthens) {
      out.accumulate(HeckeMono{lam2, siw}, c);
    } else {
      out.accumulate(HeckeMono{lam2, siw}, F_.mul(c, xi_));
      out.accumulate(HeckeMono{lam2, m.w}, F_.mul(c, ximinus1));
    }
    // Correction string: (xi - 1) * Theta_i(lambda) T_w.
    std::int64_t a = m.lam[i], b = m.lam[i + 1];
    if (a > b) {
      for (std::int64_t k = 0; k < a - b; ++k) {
        std::vector<std::int32_t> lam3 = m.lam;
        lam3[i] = static_cast<std::int32_t>(b + k);
        lam3[i + 1] = static_cast<std::int32_t>(a - k);
        out.accumulate(HeckeMono{std::move(lam3), m.w}, F_.neg(F_.mul(c, ximinus1)));
      }
    } else if (a < b) {
      for (std::int64_t k = 0; k < b - a; ++k) {
        std::vector<std::int32_t> lam3 = m.lam;
        lam3[i] = static_cast<std::int32_t>(a + k);
        lam3[i + 1] = static_cast<std::int32_t>(b - k);
        out.accumulate(HeckeMono{std::move(lam3), m.w}, F_.mul(c, ximinus1));
      }
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& a, const HeckeElement& b) const {
  check_element(a);
  check_element(b);
  HeckeElement out = zero();
  for (const auto& [m1, c1] : a.terms()) {
    // T_{w1} * b: apply the reduced word of w1 from its last letter.
    HeckeElement t = b;
    auto word = lex_min_reduced_word(m1.w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = lmul_S(*it, t);
    // X^{lam1} * (...) and the coefficient.
    for (const auto& [m2, c2] : t.terms()) {
      HeckeMono m = m2;
      for (std::size_t k = 0; k < rank_; ++k) m.lam[k] += m1.lam[k];
      out.accumulate(m, F_.mul(c1, c2));
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::commute_closed(std::size_t i,
                                          const std::vector<std::int32_t>& lam) const {
  return lmul_S(i, monomial(lam, Perm::identity(rank_)));
}

HeckeElement HeckeAlgebra::commute_stepwise(std::size_t i,
                                            const std::vector<std::int32_t>& lam) const {
  // Peel X^{±1} factors one at a time, using only the one-variable moves
  // S_i X_i   = X_{i+1} S_i - (xi-1) X_{i+1}
  // S_i X_i^-1   = X_{i+1}^-1 S_i + (xi-1) X_i^-1
  // S_i X_{i+1}  = X_i S_i + (xi-1) X_{i+1}
  // S_i X_{i+1}^-1 = X_i^-1 S_i - (xi-1) X_i^-1
  // and plain commutation for the other X_j.
  if (lam.size() != rank_) throw DomainError("rank mismatch");
  struct Item {
    std::vector<std::int32_t> mu;  // X part already moved to the left
    bool has_s;
    std::uint64_t c;
  };
  const std::uint64_t ximinus1 = F_.sub(xi_, 1);
  std::vector<Item> items{{std::vector<std::int32_t>(rank_, 0), true, 1}};
  for (std::size_t j = 0; j < rank_; ++j) {
    std::int32_t count = lam[j] >= 0 ? lam[j] : -lam[j];
    std::int32_t sign = lam[j] >= 0 ? 1 : -1;
    for (std::int32_t rep = 0; rep < count; ++rep) {
      std::vector<Item> next;
      for (const auto& item : items) {
        if (!item.has_s || (j != i && j != i + 1)) {
          Item moved = item;
          moved.mu[j] += sign;
          next.push_back(std::move(moved));
          continue;
        }
        if (j == i && sign > 0) {
          Item sw = item;
          sw.mu[i + 1] += 1;
          next.push_back(sw);
          Item corr = item;
          corr.mu[i + 1] += 1;
          corr.has_s = false;
          corr.c = F_.neg(F_.mul(corr.c, ximinus1));
          if (corr.c) next.push_back(std::move(corr));
        } else if (j == i && sign < 0) {
          Item sw = item;
          sw.mu[i + 1] -= 1;
          next.push_back(sw);
          Item corr = item;
          corr.mu[i] -= 1;
          corr.has_s = false;
          corr.c = F_.mul(corr.c, ximinus1);
          if (corr.c) next.push_back(std::move(corr));
        } else if (j == i + 1 && sign > 0) {
          Item sw = item;
          sw.mu[i] += 1;
          next.push_back(sw);
          Item corr = item;
          corr.mu[i + 1] += 1;
          corr.has_s = false;
          corr.c = F_.mul(corr.c, ximinus1);
          if (corr.c) next.push_back(std::move(corr));
        } else {  // j == i + 1, sign < 0
          Item sw = item;
          sw.mu[i] -= 1;
          next.push_back(sw);
          Item corr = item;
          corr.mu[i] -= 1;
          corr.has_s = false;
          corr.c = F_.neg(F_.mul(corr.c, ximinus1));
          if (corr.c) next.push_back(std::move(corr));
        }
      }
      items = std::move(next);
    }
  }
  HeckeElement out = zero();
  const Perm si = Perm::transposition(rank_, i);
  const Perm id = Perm::identity(rank_);
  for (const auto& item : items)
    out.accumulate(HeckeMono{item.mu, item.has_s ? si : id}, item.c);
  return out;
}

// ---------------------------------------------------------------------------
// Relation checking

RelationReport check_relations(std::uint32_t n, std::uint64_t p, std::uint64_t xi,
                               std::uint64_t trials, std::uint64_t seed) {
  HeckeAlgebra H(p, xi, n);
  const PrimeField& F = H.field();
  RelationReport report;

  auto expect = [&](const HeckeElement& lhs, const HeckeElement& rhs,
                    const std::string& name) {
    ++report.identities_checked;
    if (!(lhs == rhs)) {
      report.ok = false;
      report.failures.push_back(name + ": " + lhs.str() + " != " + rhs.str());
    }
  };

  // Quadratic relation (S_i + 1)(S_i - xi) = 0, as S_i^2 = (xi-1) S_i + xi.
  for (std::uint32_t i = 1; i < n; ++i) {
    auto lhs = H.mul(H.S(i), H.S(i));
    auto rhs = H.add(H.scale(H.S(i), F.sub(xi % p, 1)), H.scale(H.one(), xi));
    expect(lhs, rhs, "quadratic S_" + std::to_string(i));
  }
  // Distant braid commutation.
  for (std::uint32_t i = 1; i < n; ++i)
    for (std::uint32_t j = i + 2; j < n; ++j)
      expect(H.mul(H.S(i), H.S(j)), H.mul(H.S(j), H.S(i)),
             "commuting S_" + std::to_string(i) + " S_" + std::to_string(j));
  // Braid relation.
  for (std::uint32_t i = 1; i + 1 < n; ++i)
    expect(H.mul(H.mul(H.S(i), H.S(i + 1)), H.S(i)),
           H.mul(H.mul(H.S(i + 1), H.S(i)), H.S(i + 1)),
           "braid S_" + std::to_string(i) + " S_" + std::to_string(i + 1));
  // Laurent commutativity and invertibility.
  for (std::uint32_t a = 1; a <= n; ++a) {
    for (std::uint32_t b = a + 1; b <= n; ++b)
      expect(H.mul(H.X(a), H.X(b)), H.mul(H.X(b), H.X(a)),
             "commuting X_" + std::to_string(a) + " X_" + std::to_string(b));
    expect(H.mul(H.X(a), H.X(a, -1)), H.one(), "X_" + std::to_string(a) + " inverse");
    expect(H.mul(H.X(a, -1), H.X(a)), H.one(), "X_" + std::to_string(a) + " inverse'");
  }
  // X_j S_i = S_i X_j for j outside {i, i+1}.
  for (std::uint32_t i = 1; i < n; ++i)
    for (std::uint32_t j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      expect(H.mul(H.X(j), H.S(i)), H.mul(H.S(i), H.X(j)),
             "X_" + std::to_string(j) + " S_" + std::to_string(i));
    }
  // S_i X_i S_i = xi X_{i+1}.
  for (std::uint32_t i = 1; i < n; ++i)
    expect(H.mul(H.mul(H.S(i), H.X(i)), H.S(i)), H.scale(H.X(i + 1), xi),
           "S_" + std::to_string(i) + " X_" + std::to_string(i) + " S_" +
               std::to_string(i));

  // Randomized cross-check of the closed-form commutation against stepwise
  // relation chasing.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int32_t> exp_dist(-3, 3);
  std::uniform_int_distribution<std::size_t> gen_dist(0, n >= 2 ? n - 2 : 0);
  for (std::uint64_t t = 0; t < trials && n >= 2; ++t) {
    std::vector<std::int32_t> lam(n);
    for (auto& x : lam) x = exp_dist(rng);
    std::size_t i = gen_dist(rng);
    auto closed = H.commute_closed(i, lam);
    auto stepwise = H.commute_stepwise(i, lam);
    ++report.commutation_trials;
    if (!(closed == stepwise)) {
      report.ok = false;
      std::string lamstr;
      for (auto x : lam) lamstr += std::to_string(x) + ",";
      report.failures.push_back("commutation mismatch at i=" + std::to_string(i + 1) +
                                " lambda=(" + lamstr + "): closed " + closed.str() +
                                " vs stepwise " + stepwise.str());
    }
  }
  return report;
}

}  // namespace mseg
