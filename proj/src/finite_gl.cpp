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

#include "mseg/finite_gl.hpp"

namespace mseg {

bool st_is_cuspidal(const FiniteCuspidal& sigma, std::uint64_t n) {
  return cuspidal_lengths(sigma.e, sigma.ell, n);
}

JamesLabel cuspidal_label(const FiniteCuspidal& sigma, std::uint64_t r) {
  if (sigma.ell.is_zero() || sigma.e.is_inf())
    throw DomainError("cuspidal labels above the base need positive characteristic");
  std::uint64_t n = sigma.e.value();
  for (std::uint64_t i = 0; i < r; ++i) {
    if (n > (std::uint64_t{1} << 40)) throw DomainError("label shape out of range");
    n *= sigma.ell.ell;
  }
  return JamesLabel{sigma, Partition(std::vector<std::uint64_t>(n, 1))};
}

bool subquotient_admits(const Partition& mu, const Partition& nu) {
  if (mu.total() != nu.total()) return false;
  return dominates(mu, nu);
}

std::vector<Partition> subquotient_shapes(const Partition& mu) {
  std::vector<Partition> out;
  for (auto& nu : enumerate_partitions(mu.total()))
    if (subquotient_admits(mu, nu)) out.push_back(std::move(nu));
  return out;
}

bool is_quotient_label(const Partition& mu, const FiniteCuspidal& sigma) {
  return is_e_regular(mu, sigma.e);
}

bool st_equals_l(const FiniteCuspidal& sigma, std::uint64_t n) {
  if (sigma.e.is_inf()) return true;
  return n < sigma.e.value();
}

std::uint64_t count_by_scusp(std::uint64_t n) { return count_partitions(n); }

}  // namespace mseg
