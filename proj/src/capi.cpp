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

#include "mseg.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "mseg/finite_gl.hpp"
#include "mseg/hecke.hpp"
#include "mseg/hecke_module.hpp"
#include "mseg/multisegment.hpp"

using json = nlohmann::ordered_json;

namespace {

thread_local std::string g_last_error;

template <typename F>
mseg_status guard(F&& fn) {
  try {
    fn();
    return MSEG_OK;
  } catch (const mseg::ParseError& e) {
    g_last_error = e.what();
    return MSEG_ERR_PARSE;
  } catch (const mseg::DomainError& e) {
    g_last_error = e.what();
    return MSEG_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MSEG_ERR_DOMAIN;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mseg_status bad_arg(const char* what) {
  g_last_error = what;
  return MSEG_ERR_ARG;
}

mseg::ExtNat ext_from(int64_t v, const char* what) {
  if (v < 0) throw mseg::DomainError(std::string(what) + " must be nonnegative");
  if (v == 0) return mseg::ExtNat::inf();
  return mseg::ExtNat(static_cast<std::uint64_t>(v));
}

int64_t ext_to(const mseg::ExtNat& e) {
  return e.is_inf() ? 0 : static_cast<int64_t>(e.value());
}

std::uint64_t require_nonneg(int64_t v, const char* what) {
  if (v < 0) throw mseg::DomainError(std::string(what) + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

std::uint64_t require_pos(int64_t v, const char* what) {
  if (v <= 0) throw mseg::DomainError(std::string(what) + " must be positive");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

struct mseg_tower {
  mseg::Tower value;
};

struct mseg_mult {
  mseg::Multisegment value;
};

extern "C" {

const char* mseg_version(void) { return "0.1.0"; }

const char* mseg_last_error(void) { return g_last_error.c_str(); }

void mseg_string_free(char* s) { std::free(s); }

/* ------------------------------------------------------------------ */

mseg_status mseg_tower_create(int64_t o0, int64_t ell, int64_t degree,
                              mseg_tower** out) {
  if (!out) return bad_arg("null out pointer");
  return guard([&] {
    mseg::Tower t(mseg::Characteristic(require_nonneg(ell, "l")),
                  ext_from(o0, "o0"), require_pos(degree, "degree"));
    *out = new mseg_tower{std::move(t)};
  });
}

mseg_status mseg_tower_parse(const char* text, mseg_tower** out) {
  if (!text || !out) return bad_arg("null argument");
  return guard([&] { *out = new mseg_tower{mseg::Tower::parse(text)}; });
}

mseg_status mseg_tower_format(const mseg_tower* t, char** out) {
  if (!t || !out) return bad_arg("null argument");
  return guard([&] { *out = dup_string(t->value.str()); });
}

void mseg_tower_free(mseg_tower* t) { delete t; }

mseg_status mseg_tower_effective_e(const mseg_tower* t, int64_t* out_e) {
  if (!t || !out_e) return bad_arg("null argument");
  return guard([&] { *out_e = ext_to(mseg::effective_e(t->value.base())); });
}

mseg_status mseg_cuspidal_lengths(int64_t e, int64_t ell, int64_t n, int* out) {
  if (!out) return bad_arg("null out pointer");
  return guard([&] {
    *out = mseg::cuspidal_lengths(ext_from(e, "e"),
                                  mseg::Characteristic(require_nonneg(ell, "l")),
                                  require_pos(n, "n"))
               ? 1
               : 0;
  });
}

mseg_status mseg_st_invariants(const mseg_invariants* base, int64_t ell, int64_t r,
                               mseg_invariants* out) {
  if (!base || !out) return bad_arg("null argument");
  return guard([&] {
    mseg::CuspidalInvariants inv;
    inv.n = require_pos(base->n, "n");
    inv.f = require_pos(base->f, "f");
    inv.o = ext_from(base->o, "o");
    inv.e = ext_from(base->e, "e");
    inv.b = require_pos(base->b, "b");
    inv.s = require_pos(base->s, "s");
    auto res = mseg::st_invariants(inv, mseg::Characteristic(require_nonneg(ell, "l")),
                                   require_nonneg(r, "r"));
    out->n = static_cast<int64_t>(res.n);
    out->f = static_cast<int64_t>(res.f);
    out->o = ext_to(res.o);
    out->e = ext_to(res.e);
    out->b = static_cast<int64_t>(res.b);
    out->s = static_cast<int64_t>(res.s);
  });
}

/* ------------------------------------------------------------------ */

mseg_status mseg_partition_conjugate(const char* mu, char** out) {
  if (!mu || !out) return bad_arg("null argument");
  return guard([&] {
    *out = dup_string(mseg::conjugate(mseg::Partition::parse(mu)).str());
  });
}

mseg_status mseg_partition_dominates(const char* mu, const char* nu, int* out) {
  if (!mu || !nu || !out) return bad_arg("null argument");
  return guard([&] {
    *out = mseg::dominates(mseg::Partition::parse(mu), mseg::Partition::parse(nu)) ? 1 : 0;
  });
}

mseg_status mseg_partition_add(const char* mu, const char* nu, char** out) {
  if (!mu || !nu || !out) return bad_arg("null argument");
  return guard([&] {
    *out = dup_string(
        mseg::add(mseg::Partition::parse(mu), mseg::Partition::parse(nu)).str());
  });
}

mseg_status mseg_partition_is_e_regular(const char* mu, int64_t e, int* out) {
  if (!mu || !out) return bad_arg("null argument");
  return guard([&] {
    *out = mseg::is_e_regular(mseg::Partition::parse(mu), ext_from(e, "e")) ? 1 : 0;
  });
}

mseg_status mseg_partition_enum_e_regular(int64_t n, int64_t e, char** out_json,
                                          int64_t* out_count) {
  if (!out_json || !out_count) return bad_arg("null argument");
  return guard([&] {
    auto list = mseg::enumerate_e_regular(require_nonneg(n, "n"), ext_from(e, "e"));
    json arr = json::array();
    for (const auto& mu : list) arr.push_back(mu.str());
    *out_json = dup_string(arr.dump());
    *out_count = static_cast<int64_t>(list.size());
  });
}

/* ------------------------------------------------------------------ */

mseg_status mseg_mult_parse(const mseg_tower* t, const char* text, mseg_mult** out) {
  if (!t || !text || !out) return bad_arg("null argument");
  return guard([&] {
    *out = new mseg_mult{mseg::Multisegment::parse(t->value, text)};
  });
}

mseg_status mseg_mult_format(const mseg_mult* m, char** out) {
  if (!m || !out) return bad_arg("null argument");
  return guard([&] { *out = dup_string(m->value.str()); });
}

void mseg_mult_free(mseg_mult* m) { delete m; }

mseg_status mseg_mult_degree(const mseg_mult* m, int64_t* out) {
  if (!m || !out) return bad_arg("null argument");
  return guard([&] { *out = static_cast<int64_t>(m->value.degree()); });
}

mseg_status mseg_mult_sc(const mseg_mult* m, mseg_mult** out) {
  if (!m || !out) return bad_arg("null argument");
  return guard([&] { *out = new mseg_mult{mseg::sc(m->value)}; });
}

mseg_status mseg_mult_ap(const mseg_mult* m, mseg_mult** out) {
  if (!m || !out) return bad_arg("null argument");
  return guard([&] { *out = new mseg_mult{mseg::ap(m->value)}; });
}

mseg_status mseg_mult_is_aperiodic(const mseg_mult* m, int* out) {
  if (!m || !out) return bad_arg("null argument");
  return guard([&] { *out = mseg::is_aperiodic(m->value) ? 1 : 0; });
}

mseg_status mseg_mult_mu(const mseg_mult* m, char** out_partition) {
  if (!m || !out_partition) return bad_arg("null argument");
  return guard([&] { *out_partition = dup_string(mseg::mu_partition(m->value).str()); });
}

mseg_status mseg_mult_dual(const mseg_mult* m, mseg_mult** out) {
  if (!m || !out) return bad_arg("null argument");
  return guard([&] { *out = new mseg_mult{mseg::dual(m->value)}; });
}

mseg_status mseg_mult_support(const mseg_mult* m, mseg_mult** out) {
  if (!m || !out) return bad_arg("null argument");
  return guard([&] {
    *out = new mseg_mult{m->value.support().as_point_multisegment()};
  });
}

mseg_status mseg_mult_classify_equal(const mseg_mult* a, const mseg_mult* b, int* out) {
  if (!a || !b || !out) return bad_arg("null argument");
  return guard([&] { *out = mseg::classify_equal(a->value, b->value) ? 1 : 0; });
}

mseg_status mseg_mult_classify_json(const mseg_mult* m, char** out_json) {
  if (!m || !out_json) return bad_arg("null argument");
  return guard([&] {
    auto keys = mseg::classification_keys(m->value);
    mseg::Multisegment m_ap = mseg::ap(keys.z_key);
    json doc;
    doc["tower"] = m->value.tower().str();
    doc["input"] = m->value.str();
    doc["sc"] = keys.z_key.str();
    doc["ap"] = m_ap.str();
    doc["mu"] = m->value.is_zero() ? "()" : mseg::mu_partition(m->value).str();
    doc["cusp"] = keys.cusp.str();
    doc["scusp"] = keys.scusp.str();
    *out_json = dup_string(doc.dump());
  });
}

mseg_status mseg_mult_linked(const mseg_mult* a, const mseg_mult* b, int* out_linked,
                             int* out_precedes_ab, int* out_precedes_ba) {
  if (!a || !b || !out_linked || !out_precedes_ab || !out_precedes_ba)
    return bad_arg("null argument");
  return guard([&] {
    if (!(a->value.tower() == b->value.tower()))
      throw mseg::DomainError("segments live on different towers");
    auto single = [](const mseg::Multisegment& m) {
      if (m.terms().size() != 1 || m.terms().begin()->second != 1)
        throw mseg::DomainError("linkage takes single segments");
      return m.terms().begin()->first;
    };
    mseg::SegmentClass sa = single(a->value);
    mseg::SegmentClass sb = single(b->value);
    const mseg::Tower& tw = a->value.tower();
    int pab = mseg::precedes(tw, sa, sb) ? 1 : 0;
    int pba = mseg::precedes(tw, sb, sa) ? 1 : 0;
    *out_precedes_ab = pab;
    *out_precedes_ba = pba;
    *out_linked = (pab || pba) ? 1 : 0;
  });
}

mseg_status mseg_mult_enum(const mseg_tower* t, const char* support_text,
                           int aperiodic_only, char** out_json, int64_t* out_count) {
  if (!t || !support_text || !out_json || !out_count) return bad_arg("null argument");
  return guard([&] {
    mseg::Multisegment carrier = mseg::Multisegment::parse(t->value, support_text);
    auto list = mseg::enumerate_mult(carrier.support(), aperiodic_only != 0);
    json arr = json::array();
    for (const auto& m : list) arr.push_back(m.str());
    *out_json = dup_string(arr.dump());
    *out_count = static_cast<int64_t>(list.size());
  });
}

/* ------------------------------------------------------------------ */

namespace {

json matrix_to_json(const mseg::FpMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json module_matrices(const mseg::HeckeModule& m) {
  json out;
  for (std::uint32_t i = 1; i < m.rank(); ++i)
    out["S" + std::to_string(i)] = matrix_to_json(m.S_mat(i));
  for (std::uint32_t j = 1; j <= m.rank(); ++j)
    out["X" + std::to_string(j)] = matrix_to_json(m.X_mat(j));
  return out;
}

json occurrences_json(const std::vector<mseg::CharOccurrence>& occs) {
  json arr = json::array();
  for (const auto& o : occs) {
    json e;
    if (o.s_value)
      e["s"] = *o.s_value;
    else
      e["s"] = nullptr;
    e["x"] = o.x_values;
    e["multiplicity"] = o.multiplicity;
    arr.push_back(std::move(e));
  }
  return arr;
}

struct CharSpec {
  char kind;  // 'Z', 'L', 'X'
  std::int64_t a = 0, b = 0;
  std::uint64_t z = 0;
  std::uint32_t rank() const { return kind == 'X' ? 1 : static_cast<std::uint32_t>(b - a + 1); }
  std::string str() const {
    if (kind == 'X') return "X(" + std::to_string(z) + ")";
    return std::string(1, kind) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
};

std::vector<CharSpec> parse_char_specs(const std::string& text) {
  std::vector<CharSpec> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ';' ||
            text[i] == ','))
      ++i;
  };
  auto integer = [&]() -> std::int64_t {
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw mseg::ParseError("expected an integer in character list", i);
    std::int64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return neg ? -v : v;
  };
  skip();
  while (i < text.size()) {
    char kind = text[i];
    if (kind != 'Z' && kind != 'L' && kind != 'X')
      throw mseg::ParseError("expected Z(a,b), L(a,b) or X(z)", i);
    ++i;
    if (i >= text.size() || text[i] != '(')
      throw mseg::ParseError("expected '('", i);
    ++i;
    CharSpec spec;
    spec.kind = kind;
    if (kind == 'X') {
      std::int64_t z = integer();
      if (z <= 0) throw mseg::DomainError("character value must be positive");
      spec.z = static_cast<std::uint64_t>(z);
    } else {
      spec.a = integer();
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i >= text.size() || text[i] != ',')
        throw mseg::ParseError("expected ','", i);
      ++i;
      spec.b = integer();
    }
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != ')')
      throw mseg::ParseError("expected ')'", i);
    ++i;
    out.push_back(spec);
    skip();
  }
  if (out.empty()) throw mseg::ParseError("empty character list", 0);
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_plain_segment(const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto integer = [&]() -> std::int64_t {
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw mseg::ParseError("expected an integer", i);
    std::int64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return neg ? -v : v;
  };
  skip();
  if (i >= text.size() || text[i] != '[') throw mseg::ParseError("expected '['", i);
  ++i;
  std::int64_t a = integer();
  skip();
  if (i >= text.size() || text[i] != ',') throw mseg::ParseError("expected ','", i);
  ++i;
  std::int64_t b = integer();
  skip();
  if (i >= text.size() || text[i] != ']') throw mseg::ParseError("expected ']'", i);
  ++i;
  skip();
  if (i != text.size()) throw mseg::ParseError("trailing input", i);
  if (a > b) throw mseg::DomainError("segment endpoints must satisfy a <= b");
  return {a, b};
}

}  // namespace

mseg_status mseg_hecke_check_relations(int64_t n, int64_t p, int64_t xi,
                                       int64_t trials, uint64_t seed,
                                       char** out_json) {
  if (!out_json) return bad_arg("null out pointer");
  return guard([&] {
    auto rep = mseg::check_relations(
        static_cast<std::uint32_t>(require_pos(n, "n")), require_pos(p, "p"),
        require_pos(xi, "xi"), require_nonneg(trials, "trials"), seed);
    json doc;
    doc["n"] = n;
    doc["p"] = p;
    doc["xi"] = xi;
    doc["seed"] = seed;
    doc["identities_checked"] = rep.identities_checked;
    doc["commutation_trials"] = rep.commutation_trials;
    doc["ok"] = rep.ok;
    doc["failures"] = rep.failures;
    *out_json = dup_string(doc.dump());
  });
}

mseg_status mseg_hecke_standard_module(int64_t a, int64_t b, int64_t p, int64_t xi,
                                       int dump_matrices, char** out_json) {
  if (!out_json) return bad_arg("null out pointer");
  return guard([&] {
    std::uint64_t pp = require_pos(p, "p"), xx = require_pos(xi, "xi");
    auto M = mseg::standard_module(pp, xx, a, b);
    auto rep = mseg::one_dim_sub_quot(M);
    auto zc = mseg::char_Z(pp, xx, a, b);
    auto lc = mseg::char_L(pp, xx, a, b);
    json doc;
    doc["a"] = a;
    doc["b"] = b;
    doc["p"] = p;
    doc["xi"] = xi;
    doc["n"] = b - a + 1;
    doc["dim"] = M.dim();
    doc["submodules"] = occurrences_json(rep.submodules);
    doc["quotients"] = occurrences_json(rep.quotients);
    std::size_t z_sub = 0, l_quot = 0;
    for (const auto& o : rep.submodules)
      if (o.matches(zc)) z_sub += o.multiplicity;
    for (const auto& o : rep.quotients)
      if (o.matches(lc)) l_quot += o.multiplicity;
    doc["z_submodule_multiplicity"] = z_sub;
    doc["l_quotient_multiplicity"] = l_quot;
    doc["z_equals_l"] = mseg::z_equals_l(pp, xx, a, b);
    if (dump_matrices) doc["matrices"] = module_matrices(M);
    *out_json = dup_string(doc.dump());
  });
}

mseg_status mseg_hecke_induce(int64_t p, int64_t xi, const char* alpha_csv,
                              const char* chars, uint64_t seed, int dump_matrices,
                              char** out_json) {
  if (!chars || !out_json) return bad_arg("null argument");
  return guard([&] {
    std::uint64_t pp = require_pos(p, "p"), xx = require_pos(xi, "xi");
    auto specs = parse_char_specs(chars);
    std::vector<std::uint32_t> alpha;
    if (alpha_csv && *alpha_csv) {
      std::string s(alpha_csv);
      std::size_t i = 0;
      while (i < s.size()) {
        while (i < s.size() && (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i]))))
          ++i;
        if (i >= s.size()) break;
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
          throw mseg::ParseError("expected an integer in alpha", i);
        std::uint32_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          v = v * 10 + static_cast<std::uint32_t>(s[i++] - '0');
        alpha.push_back(v);
      }
    } else {
      for (const auto& spec : specs) alpha.push_back(spec.rank());
    }
    std::vector<mseg::HeckeModule> factors;
    json factor_names = json::array();
    for (const auto& spec : specs) {
      factor_names.push_back(spec.str());
      if (spec.kind == 'Z')
        factors.push_back(mseg::char_Z(pp, xx, spec.a, spec.b));
      else if (spec.kind == 'L')
        factors.push_back(mseg::char_L(pp, xx, spec.a, spec.b));
      else
        factors.push_back(mseg::char_point(pp, xx, spec.z));
    }
    auto M = mseg::induce(alpha, factors);
    json doc;
    doc["p"] = p;
    doc["xi"] = xi;
    doc["alpha"] = alpha;
    doc["factors"] = factor_names;
    doc["dim"] = M.dim();
    doc["seed"] = seed;
    doc["irreducible"] = mseg::is_irreducible(M, seed);
    try {
      doc["central_character"] = mseg::central_character(M);
    } catch (const mseg::DomainError&) {
      doc["central_character"] = nullptr;
    }
    if (dump_matrices) doc["matrices"] = module_matrices(M);
    *out_json = dup_string(doc.dump());
  });
}

mseg_status mseg_hecke_bridge(const char* seg1, const char* seg2, int64_t p,
                              int64_t xi, uint64_t seed, char** out_json) {
  if (!seg1 || !seg2 || !out_json) return bad_arg("null argument");
  return guard([&] {
    auto [a1, b1] = parse_plain_segment(seg1);
    auto [a2, b2] = parse_plain_segment(seg2);
    auto res = mseg::linkage_bridge(a1, b1, a2, b2, require_pos(p, "p"),
                                    require_pos(xi, "xi"), seed);
    json doc;
    doc["p"] = p;
    doc["xi"] = xi;
    doc["o"] = res.line_order;
    doc["e"] = res.line_e;
    doc["seg1"] = std::string(seg1);
    doc["seg2"] = std::string(seg2);
    doc["seed"] = seed;
    doc["linked"] = res.linked;
    doc["induced_irreducible"] = res.induced_irreducible;
    doc["consistent"] = res.linked != res.induced_irreducible;
    *out_json = dup_string(doc.dump());
  });
}

/* ------------------------------------------------------------------ */

mseg_status mseg_finite_st_cuspidal(int64_t e, int64_t ell, int64_t n, int* out) {
  if (!out) return bad_arg("null out pointer");
  return guard([&] {
    mseg::FiniteCuspidal sigma{"sigma", ext_from(e, "e"),
                               mseg::Characteristic(require_nonneg(ell, "l"))};
    *out = mseg::st_is_cuspidal(sigma, require_pos(n, "n")) ? 1 : 0;
  });
}

mseg_status mseg_finite_subquotients(const char* mu, char** out_json) {
  if (!mu || !out_json) return bad_arg("null argument");
  return guard([&] {
    mseg::Partition m = mseg::Partition::parse(mu);
    json doc;
    doc["mu"] = m.str();
    json arr = json::array();
    for (const auto& nu : mseg::subquotient_shapes(m)) arr.push_back(nu.str());
    doc["admitted"] = arr;
    doc["count"] = arr.size();
    doc["multiplicity_one"] = m.str();
    *out_json = dup_string(doc.dump());
  });
}

mseg_status mseg_finite_count_scusp(int64_t n, int64_t* out) {
  if (!out) return bad_arg("null out pointer");
  return guard([&] {
    *out = static_cast<int64_t>(mseg::count_by_scusp(require_nonneg(n, "n")));
  });
}

} /* extern "C" */
