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

#include "mseg/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "mseg/error.hpp"

namespace mseg {

Partition::Partition(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
  for (auto p : parts_)
    if (p == 0) throw DomainError("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::uint64_t Partition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition Partition::parse(const std::string& s) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  if (i >= s.size() || s[i] != '(') throw ParseError("expected '('", i);
  ++i;
  std::vector<std::uint64_t> parts;
  skip();
  if (i < s.size() && s[i] == ')') {
    ++i;
  } else {
    for (;;) {
      skip();
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("expected a part", i);
      std::uint64_t v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
        ++i;
      }
      parts.push_back(v);
      skip();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ')'", i);
    }
  }
  skip();
  if (i != s.size()) throw ParseError("trailing input", i);
  for (std::size_t k = 0; k + 1 < parts.size(); ++k)
    if (parts[k] < parts[k + 1])
      throw ParseError("partition parts must be weakly decreasing", 0);
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& mu) {
  const auto& p = mu.parts();
  if (p.empty()) return Partition();
  std::vector<std::uint64_t> out(p[0], 0);
  for (std::uint64_t j = 0; j < p[0]; ++j)
    out[j] = static_cast<std::uint64_t>(
        std::count_if(p.begin(), p.end(), [&](std::uint64_t x) { return x >= j + 1; }));
  return Partition(std::move(out));
}

bool dominates(const Partition& mu, const Partition& nu) {
  if (mu.total() != nu.total())
    throw DomainError("dominance compares partitions of the same integer");
  std::uint64_t smu = 0, snu = 0;
  std::size_t k = std::max(mu.size(), nu.size());
  for (std::size_t i = 0; i < k; ++i) {
    smu += i < mu.size() ? mu.parts()[i] : 0;
    snu += i < nu.size() ? nu.parts()[i] : 0;
    if (smu > snu) return false;
  }
  return true;
}

Partition add(const Partition& mu, const Partition& nu) {
  std::vector<std::uint64_t> out;
  std::size_t k = std::max(mu.size(), nu.size());
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t a = i < mu.size() ? mu.parts()[i] : 0;
    std::uint64_t b = i < nu.size() ? nu.parts()[i] : 0;
    out.push_back(a + b);
  }
  return Partition(std::move(out));
}

bool is_e_regular(const Partition& mu, ExtNat e) {
  if (e.is_inf()) return true;
  const auto& p = mu.parts();
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (j - i >= e.value()) return false;
    i = j;
  }
  return true;
}

std::vector<Partition> enumerate_partitions(std::uint64_t n) {
  std::vector<Partition> out;
  std::vector<std::uint64_t> cur;
  // Descending lexicographic order falls out of choosing the largest next
  // part first.
  std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t rest,
                                                              std::uint64_t maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (std::uint64_t part = std::min(rest, maxpart); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
  return out;
}

std::vector<Partition> enumerate_e_regular(std::uint64_t n, ExtNat e) {
  std::vector<Partition> out;
  for (auto& mu : enumerate_partitions(n))
    if (is_e_regular(mu, e)) out.push_back(std::move(mu));
  return out;
}

std::uint64_t count_partitions(std::uint64_t n) {
  // Euler recurrence with generalized pentagonal numbers.
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    std::uint64_t acc = 0;
    bool plus = true;
    for (std::uint64_t k = 1;; ++k) {
      std::uint64_t g1 = k * (3 * k - 1) / 2;
      std::uint64_t g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      if (plus) {
        acc += p[m - g1];
        if (g2 <= m) acc += p[m - g2];
      } else {
        acc -= p[m - g1];
        if (g2 <= m) acc -= p[m - g2];
      }
      plus = !plus;
    }
    p[m] = acc;
  }
  return p[n];
}

std::uint64_t count_e_regular(std::uint64_t n, ExtNat e) {
  if (e.is_inf()) return count_partitions(n);
  return enumerate_e_regular(n, e).size();
}

Partition partition_of_values(std::vector<std::uint64_t> values) {
  std::erase(values, 0);
  return Partition(std::move(values));
}

}  // namespace mseg
