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

// Command-line front end.  All computation goes through the C API in
// mseg.h; this file only parses arguments and renders output.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mseg.h"

namespace {

using json = nlohmann::ordered_json;

// Exit codes: 0 success, 1 parse error, 2 domain error.
int status_exit_code(mseg_status st) {
  switch (st) {
    case MSEG_OK:
      return 0;
    case MSEG_ERR_PARSE:
      return 1;
    default:
      return 2;
  }
}

int fail(mseg_status st) {
  json err;
  err["error"] = mseg_last_error();
  err["kind"] = st == MSEG_ERR_PARSE ? "parse" : "domain";
  std::fprintf(stderr, "%s\n", err.dump().c_str());
  return status_exit_code(st);
}

void render_table(const json& doc, const std::string& indent = "") {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array()) {
      std::printf("%s%-28s", indent.c_str(), key.c_str());
      if (value.empty()) {
        std::printf("(none)\n");
        continue;
      }
      std::printf("\n");
      for (const auto& item : value)
        std::printf("%s    %s\n", indent.c_str(),
                    item.is_string() ? item.get<std::string>().c_str()
                                     : item.dump().c_str());
    } else if (value.is_object()) {
      std::printf("%s%s:\n", indent.c_str(), key.c_str());
      render_table(value, indent + "  ");
    } else {
      std::printf("%s%-28s%s\n", indent.c_str(), key.c_str(),
                  value.is_string() ? value.get<std::string>().c_str()
                                    : value.dump().c_str());
    }
  }
}

int emit(const json& doc, bool table) {
  if (table)
    render_table(doc);
  else
    std::printf("%s\n", doc.dump().c_str());
  return 0;
}

struct TowerHandle {
  mseg_tower* t = nullptr;
  ~TowerHandle() { mseg_tower_free(t); }
};

struct MultHandle {
  mseg_mult* m = nullptr;
  ~MultHandle() { mseg_mult_free(m); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { mseg_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

// Parses "inf" or a nonnegative integer; infinity encodes as 0.
bool parse_ext(const std::string& text, int64_t& out) {
  if (text == "inf") {
    out = 0;
    return true;
  }
  try {
    std::size_t pos = 0;
    long long v = std::stoll(text, &pos);
    if (pos != text.size() || v <= 0) return false;
    out = v;
    return true;
  } catch (...) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multisegment and affine Hecke algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after subcommand names
  bool table = false;
  app.add_flag("--table", table, "render human-readable tables instead of JSON");

  std::string tower_text, mult_text, mult2_text, seg1_text, seg2_text, mu_text;
  std::string support_text, chars_text, alpha_text, e_text = "inf";
  std::int64_t n = 0, p = 0, xi = 0, a = 0, b = 0, ell = 0, trials = 100;
  std::uint64_t seed = 0;
  bool ap_only = false, dump_matrices = false;

  int rc = 0;
  std::function<void()> action;

  auto add_tower_mult = [&](CLI::App* cmd) {
    cmd->add_option("--tower", tower_text, "tower literal, e.g. tower(o0=1,l=2)")
        ->required();
    cmd->add_option("--mult", mult_text, "multisegment, e.g. 2*[0,0]@sc + [1,1]@c0")
        ->required();
  };

  auto with_tower = [&](const std::function<int(mseg_tower*)>& fn) {
    TowerHandle th;
    mseg_status st = mseg_tower_parse(tower_text.c_str(), &th.t);
    if (st != MSEG_OK) return fail(st);
    return fn(th.t);
  };

  auto with_mult = [&](const std::string& text,
                       const std::function<int(mseg_tower*, mseg_mult*)>& fn) {
    return with_tower([&](mseg_tower* t) {
      MultHandle mh;
      mseg_status st = mseg_mult_parse(t, text.c_str(), &mh.m);
      if (st != MSEG_OK) return fail(st);
      return fn(t, mh.m);
    });
  };

  // ---- multisegment subcommands -----------------------------------------
  auto* cmd_normalize = app.add_subcommand("normalize", "canonical form of a multisegment");
  add_tower_mult(cmd_normalize);
  cmd_normalize->callback([&] {
    action = [&] {
      rc = with_mult(mult_text, [&](mseg_tower*, mseg_mult* m) {
        StringHandle s;
        mseg_status st = mseg_mult_format(m, &s.s);
        if (st != MSEG_OK) return fail(st);
        json doc;
        doc["tower"] = tower_text;
        doc["input"] = mult_text;
        doc["normalized"] = s.str();
        return emit(doc, table);
      });
    };
  });

  auto simple_mult_op = [&](const char* name, const char* help,
                            std::function<mseg_status(mseg_mult*, char**)> op,
                            const char* key) {
    auto* cmd = app.add_subcommand(name, help);
    add_tower_mult(cmd);
    cmd->callback([&, op, key] {
      action = [&, op, key] {
        rc = with_mult(mult_text, [&](mseg_tower*, mseg_mult* m) {
          StringHandle s;
          mseg_status st = op(m, &s.s);
          if (st != MSEG_OK) return fail(st);
          json doc;
          doc["tower"] = tower_text;
          doc["input"] = mult_text;
          doc[key] = s.str();
          return emit(doc, table);
        });
      };
    });
  };

  simple_mult_op(
      "sc", "supercuspidal expansion",
      [](mseg_mult* m, char** out) {
        MultHandle r;
        mseg_status st = mseg_mult_sc(m, &r.m);
        if (st != MSEG_OK) return st;
        return mseg_mult_format(r.m, out);
      },
      "sc");
  simple_mult_op(
      "ap", "aperiodic form ap(sc(m))",
      [](mseg_mult* m, char** out) {
        MultHandle s, r;
        mseg_status st = mseg_mult_sc(m, &s.m);
        if (st != MSEG_OK) return st;
        st = mseg_mult_ap(s.m, &r.m);
        if (st != MSEG_OK) return st;
        return mseg_mult_format(r.m, out);
      },
      "ap");
  simple_mult_op("mu", "partition of derived-sequence degrees", mseg_mult_mu, "mu");

  auto* cmd_classify = app.add_subcommand("classify", "full classification document");
  add_tower_mult(cmd_classify);
  cmd_classify->callback([&] {
    action = [&] {
      rc = with_mult(mult_text, [&](mseg_tower*, mseg_mult* m) {
        StringHandle s;
        mseg_status st = mseg_mult_classify_json(m, &s.s);
        if (st != MSEG_OK) return fail(st);
        return emit(json::parse(s.str()), table);
      });
    };
  });

  auto* cmd_linked = app.add_subcommand("linked", "linkage of two segments");
  cmd_linked->add_option("--tower", tower_text)->required();
  cmd_linked->add_option("--seg1", seg1_text, "segment, e.g. [0,2]@sc")->required();
  cmd_linked->add_option("--seg2", seg2_text)->required();
  cmd_linked->callback([&] {
    action = [&] {
      rc = with_tower([&](mseg_tower* t) {
        MultHandle m1, m2;
        mseg_status st = mseg_mult_parse(t, seg1_text.c_str(), &m1.m);
        if (st != MSEG_OK) return fail(st);
        st = mseg_mult_parse(t, seg2_text.c_str(), &m2.m);
        if (st != MSEG_OK) return fail(st);
        int linked = 0, pab = 0, pba = 0;
        st = mseg_mult_linked(m1.m, m2.m, &linked, &pab, &pba);
        if (st != MSEG_OK) return fail(st);
        json doc;
        doc["tower"] = tower_text;
        doc["seg1"] = seg1_text;
        doc["seg2"] = seg2_text;
        doc["precedes_12"] = pab != 0;
        doc["precedes_21"] = pba != 0;
        doc["linked"] = linked != 0;
        return emit(doc, table);
      });
    };
  });

  auto* cmd_eq = app.add_subcommand("classify-equal",
                                    "equality of classification keys (sc parts)");
  cmd_eq->add_option("--tower", tower_text)->required();
  cmd_eq->add_option("--m1", mult_text)->required();
  cmd_eq->add_option("--m2", mult2_text)->required();
  cmd_eq->callback([&] {
    action = [&] {
      rc = with_tower([&](mseg_tower* t) {
        MultHandle m1, m2;
        mseg_status st = mseg_mult_parse(t, mult_text.c_str(), &m1.m);
        if (st != MSEG_OK) return fail(st);
        st = mseg_mult_parse(t, mult2_text.c_str(), &m2.m);
        if (st != MSEG_OK) return fail(st);
        int eq = 0;
        st = mseg_mult_classify_equal(m1.m, m2.m, &eq);
        if (st != MSEG_OK) return fail(st);
        json doc;
        doc["tower"] = tower_text;
        doc["m1"] = mult_text;
        doc["m2"] = mult2_text;
        doc["equal"] = eq != 0;
        return emit(doc, table);
      });
    };
  });

  auto add_enum_opts = [&](CLI::App* cmd) {
    cmd->add_option("--tower", tower_text)->required();
    cmd->add_option("--support", support_text,
                    "multisegment whose support is enumerated, e.g. 5*[0,0]@sc")
        ->required();
    cmd->add_flag("--ap", ap_only, "restrict to aperiodic multisegments");
  };
  auto enum_action = [&](bool list) {
    return [&, list] {
      rc = with_tower([&](mseg_tower* t) {
        StringHandle s;
        int64_t count = 0;
        mseg_status st =
            mseg_mult_enum(t, support_text.c_str(), ap_only ? 1 : 0, &s.s, &count);
        if (st != MSEG_OK) return fail(st);
        json doc;
        doc["tower"] = tower_text;
        doc["support"] = support_text;
        doc["aperiodic"] = ap_only;
        doc["count"] = count;
        if (list) doc["multisegments"] = json::parse(s.str());
        return emit(doc, table);
      });
    };
  };
  auto* cmd_enum = app.add_subcommand("enum", "enumerate multisegments with a support");
  add_enum_opts(cmd_enum);
  cmd_enum->callback([&] { action = enum_action(true); });
  auto* cmd_count = app.add_subcommand("count", "count multisegments with a support");
  add_enum_opts(cmd_count);
  cmd_count->callback([&] { action = enum_action(false); });

  auto* cmd_reg = app.add_subcommand("regular-partitions", "e-regular partitions of n");
  cmd_reg->add_option("--n", n)->required();
  cmd_reg->add_option("--e", e_text, "positive integer or 'inf'")->required();
  cmd_reg->callback([&] {
    action = [&] {
      int64_t e = 0;
      if (!parse_ext(e_text, e)) {
        json err;
        err["error"] = "invalid --e value: " + e_text;
        err["kind"] = "parse";
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        rc = 1;
        return;
      }
      StringHandle s;
      int64_t count = 0;
      mseg_status st = mseg_partition_enum_e_regular(n, e, &s.s, &count);
      if (st != MSEG_OK) {
        rc = fail(st);
        return;
      }
      json doc;
      doc["n"] = n;
      doc["e"] = e_text;
      doc["count"] = count;
      doc["partitions"] = json::parse(s.str());
      rc = emit(doc, table);
    };
  });

  // ---- hecke subcommands -------------------------------------------------
  auto* hecke = app.add_subcommand("hecke", "affine Hecke algebra computations");
  hecke->require_subcommand(1);

  auto* hk_rel = hecke->add_subcommand("check-relations", "verify the presentation");
  hk_rel->add_option("--n", n)->required();
  hk_rel->add_option("--p", p)->required();
  hk_rel->add_option("--xi", xi)->required();
  hk_rel->add_option("--trials", trials);
  hk_rel->add_option("--seed", seed);
  hk_rel->callback([&] {
    action = [&] {
      StringHandle s;
      mseg_status st = mseg_hecke_check_relations(n, p, xi, trials, seed, &s.s);
      rc = st == MSEG_OK ? emit(json::parse(s.str()), table) : fail(st);
    };
  });

  auto* hk_std = hecke->add_subcommand("standard-module",
                                       "induced module from the Laurent restriction");
  hk_std->add_option("--a", a)->required();
  hk_std->add_option("--b", b)->required();
  hk_std->add_option("--p", p)->required();
  hk_std->add_option("--xi", xi)->required();
  hk_std->add_flag("--dump-matrices", dump_matrices);
  hk_std->callback([&] {
    action = [&] {
      StringHandle s;
      mseg_status st =
          mseg_hecke_standard_module(a, b, p, xi, dump_matrices ? 1 : 0, &s.s);
      rc = st == MSEG_OK ? emit(json::parse(s.str()), table) : fail(st);
    };
  });

  auto* hk_ind = hecke->add_subcommand("induce", "induce from one-dimensional factors");
  hk_ind->add_option("--p", p)->required();
  hk_ind->add_option("--xi", xi)->required();
  hk_ind->add_option("--chars", chars_text, "e.g. \"Z(0,1);X(3)\"")->required();
  hk_ind->add_option("--alpha", alpha_text, "composition, e.g. 2,1 (defaults to ranks)");
  hk_ind->add_option("--seed", seed);
  hk_ind->add_flag("--dump-matrices", dump_matrices);
  hk_ind->callback([&] {
    action = [&] {
      StringHandle s;
      mseg_status st =
          mseg_hecke_induce(p, xi, alpha_text.empty() ? nullptr : alpha_text.c_str(),
                            chars_text.c_str(), seed, dump_matrices ? 1 : 0, &s.s);
      rc = st == MSEG_OK ? emit(json::parse(s.str()), table) : fail(st);
    };
  });

  auto* hk_br = hecke->add_subcommand("bridge",
                                      "linkage vs irreducibility of the induced module");
  hk_br->add_option("--seg1", seg1_text, "segment [a,b] on the line of xi")->required();
  hk_br->add_option("--seg2", seg2_text)->required();
  hk_br->add_option("--p", p)->required();
  hk_br->add_option("--xi", xi)->required();
  hk_br->add_option("--seed", seed);
  hk_br->callback([&] {
    action = [&] {
      StringHandle s;
      mseg_status st =
          mseg_hecke_bridge(seg1_text.c_str(), seg2_text.c_str(), p, xi, seed, &s.s);
      rc = st == MSEG_OK ? emit(json::parse(s.str()), table) : fail(st);
    };
  });

  // ---- finite subcommands -------------------------------------------------
  auto* finite = app.add_subcommand("finite", "finite-group side labels");
  finite->require_subcommand(1);

  auto* fin_st = finite->add_subcommand("st-cuspidal",
                                        "is the totally degenerate label cuspidal");
  fin_st->add_option("--e", e_text, "positive integer or 'inf'")->required();
  fin_st->add_option("--l", ell)->required();
  fin_st->add_option("--n", n)->required();
  fin_st->callback([&] {
    action = [&] {
      int64_t e = 0;
      if (!parse_ext(e_text, e)) {
        json err;
        err["error"] = "invalid --e value: " + e_text;
        err["kind"] = "parse";
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        rc = 1;
        return;
      }
      int out = 0;
      mseg_status st = mseg_finite_st_cuspidal(e, ell, n, &out);
      if (st != MSEG_OK) {
        rc = fail(st);
        return;
      }
      json doc;
      doc["e"] = e_text;
      doc["l"] = ell;
      doc["n"] = n;
      doc["cuspidal"] = out != 0;
      rc = emit(doc, table);
    };
  });

  auto* fin_sub = finite->add_subcommand("subquotients", "shapes admitted above mu");
  fin_sub->add_option("--mu", mu_text, "partition, e.g. (2,2)")->required();
  fin_sub->callback([&] {
    action = [&] {
      StringHandle s;
      mseg_status st = mseg_finite_subquotients(mu_text.c_str(), &s.s);
      rc = st == MSEG_OK ? emit(json::parse(s.str()), table) : fail(st);
    };
  });

  auto* fin_cnt = finite->add_subcommand("count-scusp",
                                         "labels with a fixed supercuspidal support");
  fin_cnt->add_option("--n", n)->required();
  fin_cnt->callback([&] {
    action = [&] {
      int64_t out = 0;
      mseg_status st = mseg_finite_count_scusp(n, &out);
      if (st != MSEG_OK) {
        rc = fail(st);
        return;
      }
      json doc;
      doc["n"] = n;
      doc["count"] = out;
      rc = emit(doc, table);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    json err;
    err["error"] = std::string(e.what());
    err["kind"] = "parse";
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return 1;
  }
  if (action) action();
  return rc;
}
