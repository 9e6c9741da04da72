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

#include "mseg/hecke_module.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include "mseg/error.hpp"
#include "mseg/segment.hpp"

namespace mseg {

namespace {

void check_relation(bool ok, const std::string& name) {
  if (!ok) throw DomainError("module matrices violate the relation: " + name);
}

}  // namespace

HeckeModule::HeckeModule(std::uint64_t p, std::uint64_t xi, std::uint32_t rank,
                         std::vector<FpMat> s_mats, std::vector<FpMat> x_mats,
                         std::vector<FpMat> xinv_mats)
    : p_(p), xi_(xi % p), rank_(rank), s_(std::move(s_mats)), x_(std::move(x_mats)),
      xinv_(std::move(xinv_mats)) {
  PrimeField F(p_);
  if (xi_ == 0) throw DomainError("the Hecke parameter must be invertible");
  if (rank_ == 0) throw DomainError("rank must be positive");
  if (s_.size() != rank_ - 1 || x_.size() != rank_ || xinv_.size() != rank_)
    throw DomainError("generator matrix counts do not match the rank");
  dim_ = x_[0].rows();
  if (dim_ == 0) throw DomainError("module dimension must be positive");
  for (const auto& m : s_)
    if (m.rows() != dim_ || m.cols() != dim_) throw DomainError("matrix shape mismatch");
  for (const auto& m : x_)
    if (m.rows() != dim_ || m.cols() != dim_) throw DomainError("matrix shape mismatch");
  for (const auto& m : xinv_)
    if (m.rows() != dim_ || m.cols() != dim_) throw DomainError("matrix shape mismatch");

  FpMat id = FpMat::identity(F, dim_);
  for (std::uint32_t j = 0; j < rank_; ++j) {
    check_relation(x_[j] * xinv_[j] == id, "X inverse");
    check_relation(xinv_[j] * x_[j] == id, "X inverse");
  }
  std::uint64_t xim1 = F.sub(xi_, 1);
  for (std::uint32_t i = 0; i + 1 < rank_; ++i) {
    check_relation(s_[i] * s_[i] == s_[i].scaled(xim1) + id.scaled(xi_), "quadratic");
    for (std::uint32_t j = i + 2; j + 1 < rank_; ++j)
      check_relation(s_[i] * s_[j] == s_[j] * s_[i], "distant commutation");
    if (i + 2 < rank_)
      check_relation(s_[i] * s_[i + 1] * s_[i] == s_[i + 1] * s_[i] * s_[i + 1], "braid");
    check_relation(s_[i] * x_[i] * s_[i] == x_[i + 1].scaled(xi_), "S X S");
    for (std::uint32_t j = 0; j < rank_; ++j) {
      if (j == i || j == i + 1) continue;
      check_relation(x_[j] * s_[i] == s_[i] * x_[j], "X S commutation");
    }
  }
  for (std::uint32_t a = 0; a < rank_; ++a)
    for (std::uint32_t b = a + 1; b < rank_; ++b)
      check_relation(x_[a] * x_[b] == x_[b] * x_[a], "Laurent commutativity");
}

const FpMat& HeckeModule::S_mat(std::uint32_t i) const {
  if (i < 1 || i >= rank_) throw DomainError("S index out of range");
  return s_[i - 1];
}

const FpMat& HeckeModule::X_mat(std::uint32_t j) const {
  if (j < 1 || j > rank_) throw DomainError("X index out of range");
  return x_[j - 1];
}

const FpMat& HeckeModule::Xinv_mat(std::uint32_t j) const {
  if (j < 1 || j > rank_) throw DomainError("X index out of range");
  return xinv_[j - 1];
}

FpMat HeckeModule::rep(const HeckeElement& el) const {
  if (el.p() != p_ || el.xi() != xi_ || el.rank() != rank_)
    throw DomainError("element belongs to a different Hecke algebra");
  PrimeField F(p_);
  FpMat acc(F, dim_, dim_);
  for (const auto& [mono, c] : el.terms()) {
    FpMat term = FpMat::identity(F, dim_);
    for (std::size_t j = 0; j < rank_; ++j) {
      if (mono.lam[j] == 0) continue;
      const FpMat& base = mono.lam[j] > 0 ? x_[j] : xinv_[j];
      term = term * base.pow(static_cast<std::uint64_t>(
                 mono.lam[j] > 0 ? mono.lam[j] : -mono.lam[j]));
    }
    for (auto i : lex_min_reduced_word(mono.w)) term = term * s_[i];
    acc = acc + term.scaled(c);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Characters

namespace {

HeckeModule one_dim_module(std::uint64_t p, std::uint64_t xi, std::uint64_t s_value,
                           const std::vector<std::uint64_t>& x_values) {
  PrimeField F(p);
  std::uint32_t n = static_cast<std::uint32_t>(x_values.size());
  std::vector<FpMat> s, x, xinv;
  for (std::uint32_t i = 0; i + 1 < n; ++i) s.push_back(FpMat::scalar(F, 1, s_value));
  for (std::uint32_t j = 0; j < n; ++j) {
    x.push_back(FpMat::scalar(F, 1, x_values[j]));
    xinv.push_back(FpMat::scalar(F, 1, F.inv(x_values[j])));
  }
  return HeckeModule(p, xi, n, std::move(s), std::move(x), std::move(xinv));
}

}  // namespace

HeckeModule char_Z(std::uint64_t p, std::uint64_t xi, std::int64_t a, std::int64_t b) {
  if (a > b) throw DomainError("segment endpoints must satisfy a <= b");
  PrimeField F(p);
  std::vector<std::uint64_t> xs;
  for (std::int64_t j = 1; j <= b - a + 1; ++j) xs.push_back(F.pow_signed(xi, a + j - 1));
  return one_dim_module(p, xi, xi % p, xs);
}

HeckeModule char_L(std::uint64_t p, std::uint64_t xi, std::int64_t a, std::int64_t b) {
  if (a > b) throw DomainError("segment endpoints must satisfy a <= b");
  PrimeField F(p);
  std::vector<std::uint64_t> xs;
  for (std::int64_t j = 1; j <= b - a + 1; ++j) xs.push_back(F.pow_signed(xi, b - j + 1));
  return one_dim_module(p, xi, F.neg(1), xs);
}

HeckeModule char_point(std::uint64_t p, std::uint64_t xi, std::uint64_t z) {
  PrimeField F(p);
  if (z % p == 0) throw DomainError("character value must be invertible");
  return one_dim_module(p, xi, 0, {z % p});
}

bool z_equals_l(std::uint64_t p, std::uint64_t xi, std::int64_t a, std::int64_t b) {
  HeckeModule z = char_Z(p, xi, a, b);
  HeckeModule l = char_L(p, xi, a, b);
  for (std::uint32_t i = 1; i < z.rank(); ++i)
    if (!(z.S_mat(i) == l.S_mat(i))) return false;
  for (std::uint32_t j = 1; j <= z.rank(); ++j)
    if (!(z.X_mat(j) == l.X_mat(j))) return false;
  return true;
}

bool z_equals_l_criterion(std::uint64_t p, std::uint64_t xi, std::uint64_t n) {
  if (n == 1) return true;  // no S generators and a single shared X value
  if (p == 2) return true;
  return xi % p == p - 1 && n % 2 == 1;
}

// ---------------------------------------------------------------------------
// Induction

namespace {

// Parabolic data for a composition alpha of n.
struct AlphaData {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> alpha;
  std::vector<std::uint32_t> offset;    // block start, 0-based, per factor
  std::vector<bool> in_subgroup;        // 0-based generator index i: s_i in W_alpha

  explicit AlphaData(const std::vector<std::uint32_t>& a) : alpha(a) {
    for (auto ni : alpha) {
      if (ni == 0) throw DomainError("composition parts must be positive");
      offset.push_back(n);
      n += ni;
    }
    in_subgroup.assign(n >= 1 ? n - 1 : 0, false);
    for (std::size_t t = 0; t < alpha.size(); ++t)
      for (std::uint32_t k = 1; k < alpha[t]; ++k) in_subgroup[offset[t] + k - 1] = true;
  }

  std::size_t factor_of_x(std::uint32_t j0) const {  // 0-based X index
    for (std::size_t t = alpha.size(); t-- > 0;)
      if (j0 >= offset[t]) return t;
    throw DomainError("index out of range");
  }
};

// Minimal-length representatives of the right cosets of W_alpha, ordered by
// length then one-line lexicographic order.
std::vector<Perm> minimal_coset_reps(const AlphaData& ad) {
  std::vector<Perm> reps;
  for (auto& w : all_perms(ad.n)) {
    Perm winv = w.inverse();
    bool minimal = true;
    for (std::size_t i = 0; i + 1 < ad.n && minimal; ++i)
      if (ad.in_subgroup[i] && winv(i) > winv(i + 1)) minimal = false;
    if (minimal) reps.push_back(w);
  }
  std::stable_sort(reps.begin(), reps.end(), [](const Perm& a, const Perm& b) {
    std::size_t la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a.one_line() < b.one_line();
  });
  return reps;
}

// x = u * w with u in W_alpha and w the minimal coset representative;
// returns the reduced word of u (letters in W_alpha) and w.
std::pair<std::vector<std::size_t>, Perm> decompose(const AlphaData& ad, Perm x) {
  std::vector<std::size_t> u_word;
  for (;;) {
    Perm xinv = x.inverse();
    std::size_t pick = ad.n;
    for (std::size_t i = 0; i + 1 < ad.n; ++i)
      if (ad.in_subgroup[i] && xinv(i) > xinv(i + 1)) {
        pick = i;
        break;
      }
    if (pick == ad.n) break;
    u_word.push_back(pick);
    x = Perm::transposition(ad.n, pick).after(x);
  }
  return {std::move(u_word), std::move(x)};
}

// Generator matrices of the tensor product of the factors, as a module over
// the parabolic subalgebra.
struct TensorGens {
  std::vector<FpMat> s;  // only slots with in_subgroup set are meaningful
  std::vector<FpMat> x, xinv;
  std::size_t dim = 1;
};

TensorGens tensor_generators(const AlphaData& ad, const std::vector<HeckeModule>& factors,
                             const PrimeField& F) {
  TensorGens tg;
  std::vector<std::size_t> dims;
  for (const auto& f : factors) {
    dims.push_back(f.dim());
    tg.dim *= f.dim();
  }
  auto lift = [&](std::size_t t, const FpMat& local) {
    FpMat acc = FpMat::identity(F, 1);
    for (std::size_t k = 0; k < factors.size(); ++k)
      acc = acc.kron(k == t ? local : FpMat::identity(F, dims[k]));
    return acc;
  };
  tg.s.assign(ad.n >= 1 ? ad.n - 1 : 0, FpMat());
  for (std::size_t i = 0; i + 1 < ad.n; ++i) {
    if (!ad.in_subgroup[i]) continue;
    std::size_t t = ad.factor_of_x(static_cast<std::uint32_t>(i));
    std::uint32_t local = static_cast<std::uint32_t>(i - ad.offset[t]) + 1;
    tg.s[i] = lift(t, factors[t].S_mat(local));
  }
  for (std::uint32_t j = 0; j < ad.n; ++j) {
    std::size_t t = ad.factor_of_x(j);
    std::uint32_t local = j - ad.offset[t] + 1;
    tg.x.push_back(lift(t, factors[t].X_mat(local)));
    tg.xinv.push_back(lift(t, factors[t].Xinv_mat(local)));
  }
  return tg;
}

// Action of X^lambda T_u (u given by a reduced word inside W_alpha) on the
// tensor module.
FpMat parabolic_action(const TensorGens& tg, const PrimeField& F,
                       const std::vector<std::int32_t>& lam,
                       const std::vector<std::size_t>& u_word) {
  FpMat acc = FpMat::identity(F, tg.dim);
  for (std::size_t j = 0; j < lam.size(); ++j) {
    if (lam[j] == 0) continue;
    const FpMat& base = lam[j] > 0 ? tg.x[j] : tg.xinv[j];
    std::uint64_t e = static_cast<std::uint64_t>(lam[j] > 0 ? lam[j] : -lam[j]);
    acc = acc * base.pow(e);
  }
  for (auto i : u_word) acc = acc * tg.s[i];
  return acc;
}

}  // namespace

HeckeModule induce(const std::vector<std::uint32_t>& alpha,
                   const std::vector<HeckeModule>& factors) {
  if (alpha.empty() || alpha.size() != factors.size())
    throw DomainError("composition and factor list sizes differ");
  const std::uint64_t p = factors[0].p();
  const std::uint64_t xi = factors[0].xi();
  for (std::size_t t = 0; t < factors.size(); ++t) {
    if (factors[t].p() != p || factors[t].xi() != xi)
      throw DomainError("factors live over different parameters");
    if (factors[t].rank() != alpha[t])
      throw DomainError("factor rank does not match the composition part");
  }
  AlphaData ad(alpha);
  PrimeField F(p);
  HeckeAlgebra H(p, xi, ad.n);

  std::vector<Perm> reps = minimal_coset_reps(ad);
  std::map<Perm, std::size_t> rep_index;
  for (std::size_t k = 0; k < reps.size(); ++k) rep_index[reps[k]] = k;

  TensorGens tg = tensor_generators(ad, factors, F);
  const std::size_t dm = tg.dim;
  const std::size_t dim = reps.size() * dm;

  // phi_{(w,m)}(T_u) = [u = w] m; (g phi)(T_u) = phi(T_u g).  Writing
  // T_u g = sum c X^lam T_{u'} T_{w'} gives the block column w' at block row
  // u the parabolic action of c X^lam T_{u'}.
  auto induced_gen = [&](const HeckeElement& g) {
    FpMat big(F, dim, dim);
    for (std::size_t ui = 0; ui < reps.size(); ++ui) {
      HeckeElement prod = H.mul(H.T(reps[ui]), g);
      for (const auto& [mono, c] : prod.terms()) {
        auto [u_word, wprime] = decompose(ad, mono.w);
        auto it = rep_index.find(wprime);
        if (it == rep_index.end()) throw DomainError("coset decomposition failed");
        FpMat block = parabolic_action(tg, F, mono.lam, u_word).scaled(c);
        for (std::size_t r = 0; r < dm; ++r)
          for (std::size_t cidx = 0; cidx < dm; ++cidx) {
            auto& cell = big.at(ui * dm + r, it->second * dm + cidx);
            cell = (cell + block.at(r, cidx)) % p;
          }
      }
    }
    return big;
  };

  std::vector<FpMat> s_mats, x_mats, xinv_mats;
  for (std::uint32_t i = 1; i < ad.n; ++i) s_mats.push_back(induced_gen(H.S(i)));
  for (std::uint32_t j = 1; j <= ad.n; ++j) x_mats.push_back(induced_gen(H.X(j)));
  for (std::uint32_t j = 1; j <= ad.n; ++j) xinv_mats.push_back(induced_gen(H.X(j, -1)));

  return HeckeModule(p, xi, ad.n, std::move(s_mats), std::move(x_mats),
                     std::move(xinv_mats));
}

HeckeModule standard_module(std::uint64_t p, std::uint64_t xi, std::int64_t a,
                            std::int64_t b) {
  if (a > b) throw DomainError("segment endpoints must satisfy a <= b");
  PrimeField F(p);
  std::uint32_t n = static_cast<std::uint32_t>(b - a + 1);
  std::vector<std::uint32_t> alpha(n, 1);
  std::vector<HeckeModule> factors;
  for (std::uint32_t j = 0; j < n; ++j)
    factors.push_back(char_point(p, xi, F.pow_signed(xi, a + j)));
  return induce(alpha, factors);
}

// ---------------------------------------------------------------------------
// One-dimensional subs and quotients

namespace {

constexpr std::uint64_t kMaxFieldScan = 65536;

// Basis (as rows) of the intersection of the row space V with ker(A - z I).
std::vector<std::vector<std::uint64_t>> intersect_eigen(
    const PrimeField& F, const std::vector<std::vector<std::uint64_t>>& v_basis,
    const FpMat& a, std::uint64_t z) {
  if (v_basis.empty()) return {};
  const std::size_t d = a.rows();
  const std::size_t k = v_basis.size();
  // Solve (A - zI) (sum_j c_j v_j) = 0 for the coefficients c.
  FpMat sys(F, d, k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::uint64_t> av = mat_vec(a, v_basis[j]);
    for (std::size_t r = 0; r < d; ++r)
      sys.at(r, j) = F.sub(av[r], F.mul(z, v_basis[j][r]));
  }
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& coeff : sys.kernel_basis()) {
    std::vector<std::uint64_t> v(d, 0);
    for (std::size_t j = 0; j < k; ++j) {
      if (coeff[j] == 0) continue;
      for (std::size_t r = 0; r < d; ++r)
        v[r] = F.add(v[r], F.mul(coeff[j], v_basis[j][r]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<CharOccurrence> one_dim_invariants(const HeckeModule& m, bool transpose) {
  PrimeField F(m.p());
  if (F.p() > kMaxFieldScan)
    throw DomainError("field too large for the eigenvalue scan");
  const std::size_t d = m.dim();
  auto mat = [&](const FpMat& g) { return transpose ? g.transposed() : g; };

  std::vector<CharOccurrence> out;
  std::vector<std::uint64_t> s_candidates;
  if (m.rank() >= 2) {
    s_candidates.push_back(m.xi());
    if (F.neg(1) != m.xi()) s_candidates.push_back(F.neg(1));
  } else {
    s_candidates.push_back(0);  // placeholder, no S generators
  }

  for (std::uint64_t t : s_candidates) {
    // V_t: common eigenspace of all S generators with eigenvalue t.
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t r = 0; r < d; ++r) {
      std::vector<std::uint64_t> e(d, 0);
      e[r] = 1;
      basis.push_back(std::move(e));
    }
    for (std::uint32_t i = 1; i < m.rank() && !basis.empty(); ++i)
      basis = intersect_eigen(F, basis, mat(m.S_mat(i)), t);
    if (basis.empty()) continue;

    // Refine through the X generators, eigenvalue by eigenvalue.
    struct Node {
      std::vector<std::vector<std::uint64_t>> basis;
      std::vector<std::uint64_t> xs;
    };
    std::vector<Node> frontier{{std::move(basis), {}}};
    for (std::uint32_t j = 1; j <= m.rank(); ++j) {
      std::vector<Node> next;
      for (auto& node : frontier) {
        for (std::uint64_t z = 1; z < F.p(); ++z) {
          auto sub = intersect_eigen(F, node.basis, mat(m.X_mat(j)), z);
          if (sub.empty()) continue;
          Node nn{std::move(sub), node.xs};
          nn.xs.push_back(z);
          next.push_back(std::move(nn));
        }
      }
      frontier = std::move(next);
    }
    for (auto& node : frontier) {
      CharOccurrence occ;
      if (m.rank() >= 2) occ.s_value = t;
      occ.x_values = node.xs;
      occ.multiplicity = node.basis.size();
      out.push_back(std::move(occ));
    }
  }
  std::sort(out.begin(), out.end(), [](const CharOccurrence& a, const CharOccurrence& b) {
    if (a.s_value != b.s_value) return a.s_value < b.s_value;
    return a.x_values < b.x_values;
  });
  return out;
}

}  // namespace

bool CharOccurrence::matches(const HeckeModule& one_dim) const {
  if (one_dim.dim() != 1) throw DomainError("expected a one-dimensional module");
  if (one_dim.rank() != x_values.size()) return false;
  if (one_dim.rank() >= 2) {
    if (!s_value) return false;
    if (one_dim.S_mat(1).at(0, 0) != *s_value) return false;
  }
  for (std::uint32_t j = 1; j <= one_dim.rank(); ++j)
    if (one_dim.X_mat(j).at(0, 0) != x_values[j - 1]) return false;
  return true;
}

std::string CharOccurrence::str() const {
  std::string s = "(S->";
  s += s_value ? std::to_string(*s_value) : std::string("-");
  s += "; X->";
  for (std::size_t k = 0; k < x_values.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(x_values[k]);
  }
  s += ") x" + std::to_string(multiplicity);
  return s;
}

OneDimReport one_dim_sub_quot(const HeckeModule& m) {
  OneDimReport report;
  report.submodules = one_dim_invariants(m, false);
  report.quotients = one_dim_invariants(m, true);
  return report;
}

// ---------------------------------------------------------------------------
// Central character

std::vector<std::uint64_t> central_character(const HeckeModule& m) {
  PrimeField F(m.p());
  if (F.p() > kMaxFieldScan)
    throw DomainError("field too large for the eigenvalue scan");
  const std::size_t d = m.dim();
  const std::uint32_t n = m.rank();
  // Elementary symmetric functions of the X matrices by the product
  // recurrence; they commute, so the result is unambiguous.
  std::vector<FpMat> e(n + 1, FpMat(F, d, d));
  e[0] = FpMat::identity(F, d);
  for (std::uint32_t j = 1; j <= n; ++j)
    for (std::uint32_t k = std::min(j, n); k >= 1; --k)
      e[k] = e[k] + m.X_mat(j) * e[k - 1];

  std::vector<std::uint64_t> coeffs(n + 1);  // of prod (t - z_i), ascending
  coeffs[n] = 1;
  for (std::uint32_t k = 1; k <= n; ++k) {
    std::uint64_t c;
    if (!e[k].is_scalar(&c))
      throw DomainError("module is not absolutely irreducible over this field: "
                        "central element acts non-scalarly");
    coeffs[n - k] = (k % 2 == 0) ? c : F.neg(c);
  }

  std::vector<std::uint64_t> roots;
  std::vector<std::uint64_t> poly = coeffs;
  for (std::uint64_t z = 1; z < F.p() && poly.size() > 1; ++z) {
    while (poly.size() > 1 && poly_eval(F, poly, z) == 0) {
      roots.push_back(z);
      // Synthetic division by (t - z).
      std::vector<std::uint64_t> q(poly.size() - 1, 0);
      std::uint64_t carry = 0;
      for (std::size_t k = poly.size(); k-- > 1;) {
        carry = F.add(poly[k], F.mul(carry, z));
        q[k - 1] = carry;
      }
      poly = std::move(q);
    }
  }
  if (roots.size() != n)
    throw DomainError("central character does not split over this field");
  std::sort(roots.begin(), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// Irreducibility

namespace {

std::vector<FpMat> generator_list(const HeckeModule& m, bool transpose) {
  std::vector<FpMat> gens;
  for (std::uint32_t i = 1; i < m.rank(); ++i)
    gens.push_back(transpose ? m.S_mat(i).transposed() : m.S_mat(i));
  for (std::uint32_t j = 1; j <= m.rank(); ++j)
    gens.push_back(transpose ? m.X_mat(j).transposed() : m.X_mat(j));
  return gens;
}

bool spin_is_full(const PrimeField& F, const std::vector<FpMat>& gens,
                  const std::vector<std::uint64_t>& v) {
  const std::size_t d = v.size();
  RowSpace space(F, d);
  std::deque<std::vector<std::uint64_t>> work;
  if (space.insert(v)) work.push_back(v);
  while (!work.empty() && space.dim() < d) {
    auto cur = std::move(work.front());
    work.pop_front();
    for (const auto& g : gens) {
      auto img = mat_vec(g, cur);
      if (space.insert(img)) {
        if (space.dim() == d) return true;
        work.push_back(std::move(img));
      }
    }
  }
  return space.dim() == d;
}

// Dimension of the unital matrix algebra generated by the generators.
std::size_t algebra_dimension(const PrimeField& F, const std::vector<FpMat>& gens,
                              std::size_t d) {
  RowSpace space(F, d * d);
  std::deque<FpMat> work;
  FpMat id = FpMat::identity(F, d);
  space.insert(id.data());
  work.push_back(id);
  while (!work.empty() && space.dim() < d * d) {
    FpMat cur = std::move(work.front());
    work.pop_front();
    for (const auto& g : gens) {
      FpMat img = g * cur;
      if (space.insert(img.data())) work.push_back(std::move(img));
    }
  }
  return space.dim();
}

}  // namespace

bool is_irreducible(const HeckeModule& m, std::uint64_t seed) {
  PrimeField F(m.p());
  if (F.p() > kMaxFieldScan)
    throw DomainError("field too large for the eigenvalue scan");
  const std::size_t d = m.dim();
  if (d == 1) return true;

  std::vector<FpMat> gens = generator_list(m, false);
  std::vector<FpMat> gens_t = generator_list(m, true);

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto rand_coeff = [&] { return 1 + rng() % (F.p() - 1); };
  auto random_element = [&] {
    FpMat acc(F, d, d);
    std::size_t summands = 2 + rng() % 3;
    for (std::size_t s = 0; s < summands; ++s) {
      FpMat word = FpMat::identity(F, d);
      std::size_t len = 1 + rng() % 3;
      for (std::size_t k = 0; k < len; ++k) word = word * gens[rng() % gens.size()];
      acc = acc + word.scaled(rand_coeff());
    }
    return acc;
  };

  bool all_spins_full = false;
  for (int attempt = 0; attempt < 200; ++attempt) {
    FpMat theta = random_element();
    auto poly = theta.charpoly();
    for (std::uint64_t z = 0; z < F.p(); ++z) {
      if (poly_eval(F, poly, z) != 0) continue;
      FpMat shifted = theta - FpMat::scalar(F, d, z);
      auto kernel = shifted.kernel_basis();
      if (kernel.empty()) continue;
      for (const auto& v : kernel)
        if (!spin_is_full(F, gens, v)) return false;
      auto kernel_t = shifted.transposed().kernel_basis();
      for (const auto& w : kernel_t)
        if (!spin_is_full(F, gens_t, w)) return false;
      if (kernel.size() == 1) return true;  // singular-element certificate
      // Higher nullity: also spin random kernel combinations on both sides.
      for (int extra = 0; extra < 8; ++extra) {
        std::vector<std::uint64_t> v(d, 0);
        for (const auto& kv : kernel) {
          std::uint64_t c = rng() % F.p();
          for (std::size_t r = 0; r < d; ++r) v[r] = F.add(v[r], F.mul(c, kv[r]));
        }
        bool nonzero = std::any_of(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
        if (nonzero && !spin_is_full(F, gens, v)) return false;
      }
      all_spins_full = true;
    }
    if (all_spins_full && d <= 12 && algebra_dimension(F, gens, d) == d * d)
      return true;  // split matrix algebra certificate
  }
  if (all_spins_full) {
    if (d <= 12) {
      if (algebra_dimension(F, gens, d) == d * d) return true;
      throw DomainError("irreducibility undecided: module may be non-split over this field");
    }
    return true;
  }
  throw DomainError("irreducibility test found no singular algebra element");
}

std::size_t hom_dim(const HeckeModule& a, const HeckeModule& b) {
  if (a.p() != b.p() || a.xi() != b.xi() || a.rank() != b.rank())
    throw DomainError("hom space between modules over different algebras");
  PrimeField F(a.p());
  const std::size_t dm = a.dim(), dn = b.dim();
  std::vector<FpMat> ga = generator_list(a, false);
  std::vector<FpMat> gb = generator_list(b, false);
  // Unknown X with X A_g = B_g X; unknowns indexed i * dm + k (X[i][k]).
  FpMat sys(F, ga.size() * dn * dm, dn * dm);
  std::size_t row = 0;
  for (std::size_t g = 0; g < ga.size(); ++g)
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t j = 0; j < dm; ++j) {
        for (std::size_t k = 0; k < dm; ++k)
          sys.at(row, i * dm + k) = F.add(sys.at(row, i * dm + k), ga[g].at(k, j));
        for (std::size_t k = 0; k < dn; ++k)
          sys.at(row, k * dm + j) = F.sub(sys.at(row, k * dm + j), gb[g].at(i, k));
        ++row;
      }
  return sys.kernel_basis().size();
}

// ---------------------------------------------------------------------------
// The linkage bridge

BridgeResult linkage_bridge(std::int64_t a1, std::int64_t b1, std::int64_t a2,
                            std::int64_t b2, std::uint64_t p, std::uint64_t xi,
                            std::uint64_t seed) {
  if (a1 > b1 || a2 > b2) throw DomainError("segment endpoints must satisfy a <= b");
  PrimeField F(p);
  if (xi % p == 0) throw DomainError("the Hecke parameter must be invertible");
  BridgeResult out;
  out.line_order = F.element_order(xi % p);
  out.line_e = out.line_order == 1 ? p : out.line_order;

  ExtNat order(out.line_order);
  std::uint64_t n1 = static_cast<std::uint64_t>(b1 - a1 + 1);
  std::uint64_t n2 = static_cast<std::uint64_t>(b2 - a2 + 1);
  out.linked = precedes_on_line(order, a1, n1, a2, n2) ||
               precedes_on_line(order, a2, n2, a1, n1);

  std::vector<std::uint32_t> alpha{static_cast<std::uint32_t>(n1),
                                   static_cast<std::uint32_t>(n2)};
  std::vector<HeckeModule> factors{char_Z(p, xi, a1, b1), char_Z(p, xi, a2, b2)};
  HeckeModule induced = induce(alpha, factors);
  out.induced_irreducible = is_irreducible(induced, seed);
  return out;
}

}  // namespace mseg
