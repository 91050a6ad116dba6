// Copyright 2026 The hessaut Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  Exit codes: 0 success, 1 verification failure,
// 2 usage or precondition error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hessaut/acceptance.h"
#include "hessaut/aut.h"
#include "hessaut/curve.h"
#include "hessaut/detrep.h"
#include "hessaut/exact.h"
#include "hessaut/iso.h"
#include "hessaut/scan.h"

namespace {

using nlohmann::json;
using namespace hessaut;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string point_text(const FieldCtx& k, const CurvePoint& P) {
  if (P.infinity) return "O";
  return "(" + k.render(P.x) + "," + k.render(P.y) + ")";
}

json matrix_json(const FieldCtx& k, const FMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(k.render(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json factors_json(const AutOrder& o) {
  return {{"galois", o.factors.galois},
          {"gcd_factor", o.factors.gcd_factor},
          {"gl2", o.factors.gl2.get_str()},
          {"q_pow18", o.factors.q_pow18.get_str()},
          {"torsion", o.factors.torsion}};
}

int sign_of(const std::string& s) {
  if (s == "+") return 1;
  if (s == "-") return -1;
  throw std::invalid_argument("root sign must be + or -");
}

std::vector<std::uint64_t> parse_moduli(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoull(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphisms of groups built from Hessian representations of elliptic curves"};
  app.require_subcommand(1);

  // torsion
  std::int64_t t_S = 1;
  std::uint64_t t_p = 0;
  int t_f = 1;
  bool t_json = false;
  auto* torsion = app.add_subcommand("torsion", "3-torsion of E_S over F_q");
  torsion->add_option("--s", t_S, "S")->required();
  torsion->add_option("--p", t_p, "characteristic")->required();
  torsion->add_option("--f", t_f, "extension degree");
  torsion->add_flag("--json", t_json, "JSON output");

  // aut-order
  int a_i = 1;
  std::int64_t a_S = 1;
  std::uint64_t a_p = 0;
  int a_f = 1;
  bool a_oracle = false;
  bool a_json = false;
  auto* aut = app.add_subcommand("aut-order", "automorphism group orders");
  aut->add_option("--i", a_i, "representation index 1..3")->required();
  aut->add_option("--s", a_S, "S")->required();
  aut->add_option("--p", a_p, "characteristic")->required();
  aut->add_option("--f", a_f, "extension degree");
  aut->add_flag("--oracle", a_oracle, "also run the exhaustive count over GL_3");
  aut->add_flag("--json", a_json, "JSON output");

  // iso
  int s_i = 1, s_j = 1;
  std::int64_t s_S = 1, s_S2 = 1;
  std::string s_sign_i = "+", s_sign_j = "+";
  std::uint64_t s_p = 0;
  bool s_oracle = false;
  auto* iso = app.add_subcommand("iso", "isomorphism between two algebras");
  iso->add_option("--i", s_i, "first index")->required();
  iso->add_option("--j", s_j, "second index")->required();
  iso->add_option("--s", s_S, "first S")->required();
  iso->add_option("--sp", s_S2, "second S")->required();
  iso->add_option("--sign-i", s_sign_i, "root sign for the first algebra (+ or -)");
  iso->add_option("--sign-j", s_sign_j, "root sign for the second algebra (+ or -)");
  iso->add_option("--p", s_p, "prime")->required();
  iso->add_flag("--oracle", s_oracle, "also run the exhaustive search");

  // hessian-solve
  std::int64_t h_S = 1;
  std::optional<std::uint64_t> h_p;
  int h_f = 1;
  auto* hs = app.add_subcommand("hessian-solve", "solve a f_S = Hes(b f_S + Hes f_S)");
  hs->add_option("--s", h_S, "S")->required();
  hs->add_option("--p", h_p, "work over F_q instead of Q(sqrt S)");
  hs->add_option("--f", h_f, "extension degree");

  // scan
  std::int64_t c_S = 1;
  std::uint64_t c_pmax = 100;
  std::string c_out;
  std::string c_format = "csv";
  std::string c_mods;
  bool c_pofs = false;
  auto* scan = app.add_subcommand("scan", "per-prime records");
  scan->add_option("--s", c_S, "S")->required();
  scan->add_option("--pmax", c_pmax, "largest prime")->required();
  scan->add_option("--out", c_out, "output path")->required();
  scan->add_option("--format", c_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--porc-mods", c_mods, "comma-separated moduli for the residue-class report");
  scan->add_flag("--pofs", c_pofs, "print the Frobenius-set partition");

  // verify
  std::string v_suite = "all";
  bool v_extended = false;
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--suite", v_suite, "all|forms|curve|detrep|algebra|aut|iso|scan");
  verify->add_flag("--extended", v_extended, "include the slower cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*torsion) {
      const FieldCtx k(t_p, t_f);
      const Curve E = Curve::family(k, t_S);
      const auto pts = E.torsion_points(3);
      if (t_json) {
        json list = json::array();
        for (const auto& P : pts) list.push_back(point_text(k, P));
        std::cout << json{{"p", t_p}, {"f", t_f}, {"s", t_S}, {"e", pts.size()}, {"points", list}}.dump()
                  << "\n";
      } else {
        std::cout << "e = " << pts.size() << "\n";
        for (const auto& P : pts) std::cout << point_text(k, P) << "\n";
      }
      return kOk;
    }

    if (*aut) {
      const FieldCtx k(a_p, a_f);
      const AutOrder lie = lie_aut_order_formula(k, a_i, a_S);
      const AutOrder group = group_aut_order_formula(k, a_i, a_S);
      json out{{"p", a_p},
               {"f", a_f},
               {"i", a_i},
               {"s", a_S},
               {"factors", factors_json(lie)},
               {"exact", lie.exact.get_str()},
               {"group_exact", group.exact.get_str()}};
      bool agrees = true;
      if (a_oracle) {
        const RepContext rep = make_rep(k, a_i, a_S);
        const AutVeq v = enumerate_autVeq(rep);
        agrees = aut_order_from_oracle(rep, v.size).exact == lie.exact;
        out["oracle"] = {{"autVeq", v.size}, {"agrees", agrees}};
      }
      if (a_json) {
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "|Aut(g)| = " << lie.exact.get_str() << "\n"
                  << "|Aut(G)| = " << group.exact.get_str() << "\n"
                  << "factors: f=" << lie.factors.galois << " gcd=" << lie.factors.gcd_factor
                  << " |GL2|=" << lie.factors.gl2.get_str() << " q^18 |E[3]|="
                  << lie.factors.torsion << "\n";
        if (a_oracle) {
          std::cout << "oracle |Aut_V^=| = " << out["oracle"]["autVeq"] << ", agrees: "
                    << (agrees ? "yes" : "no") << "\n";
        }
      }
      return agrees ? kOk : kFail;
    }

    if (*iso) {
      const FieldCtx k = make_field(s_p);
      const IsoQuery q =
          make_iso_query(k, s_i, s_S, sign_of(s_sign_i), s_j, s_S2, sign_of(s_sign_j));
      const IsoVerdict v = iso_classify(q);
      const IsoVerdict t = iso_classify_twisted(q);
      json out{{"isomorphic", v.isomorphic},
               {"rule", v.rule},
               {"witness", v.witness ? matrix_json(k, *v.witness) : json(nullptr)},
               {"twisted", {{"isomorphic", t.isomorphic},
                            {"rule", t.rule},
                            {"witness", t.witness ? matrix_json(k, *t.witness) : json(nullptr)}}}};
      int rc = kOk;
      if (s_oracle) {
        const auto w = iso_oracle(q);
        out["oracle"] = {{"isomorphic", w.has_value()},
                         {"witness", w ? matrix_json(k, *w) : json(nullptr)}};
        if (w.has_value() != t.isomorphic) rc = kFail;
      }
      std::cout << out.dump() << "\n";
      return rc;
    }

    if (*hs) {
      json sols = json::array();
      bool smooth = false;
      if (h_p) {
        const FieldCtx k(*h_p, h_f);
        const FieldElem S = k.from_int(h_S);
        const auto res = hessian_equation_solve(k, build_fS(k, S));
        smooth = res.smooth;
        for (const auto& s : res.solutions) {
          sols.push_back({{"alpha", k.render(s.alpha)}, {"beta", k.render(s.beta)}});
        }
      } else {
        const SqrtRing ring(h_S);
        const auto res = hessian_equation_solve(ring, build_fS(ring, ring.from_int(h_S)));
        smooth = res.smooth;
        for (const auto& s : res.solutions) {
          sols.push_back({{"alpha", ring.render(s.alpha)}, {"beta", ring.render(s.beta)}});
        }
      }
      std::cout << json{{"smooth", smooth}, {"solutions", sols}}.dump() << "\n";
      return kOk;
    }

    if (*scan) {
      const PrimeScan result = classify_primes(c_S, c_pmax);
      for (const auto& s : result.skipped) std::cerr << "skipped p=" << s.p << ": " << s.reason << "\n";
      emit(result.records, c_format, c_out);
      std::cout << result.records.size() << " records written to " << c_out << "\n";
      if (!c_mods.empty()) {
        for (const auto& rep : porc_violation_report(result, parse_moduli(c_mods))) {
          std::cout << "mod " << rep.modulus << ": " << rep.mixed.size() << " mixed classes";
          for (const auto& [res, es] : rep.mixed) {
            std::cout << " [" << res << ":";
            for (auto e : es) std::cout << " e=" << e;
            std::cout << "]";
          }
          std::cout << "\n";
        }
      }
      if (c_pofs) {
        for (int i = 1; i <= 3; ++i) {
          const PofsPartition part = pofs_partition(result, i);
          std::cout << "i=" << i << ": " << part.sets.size() << " sets"
                    << (part.empirical ? " (cells from observed e)" : "") << "\n";
          for (const auto& set : part.sets) {
            std::cout << "  " << set.coefficient << "*(p^2-1)(p^2-p)p^18 on";
            for (const auto& c : set.cells) std::cout << " {" << c << "}";
            std::cout << " : " << set.primes.size() << " primes, "
                      << (set.fits_all ? "fits" : "DOES NOT FIT") << "\n";
          }
        }
      }
      return kOk;
    }

    if (*verify) {
      AcceptanceOptions opts;
      opts.extended = v_extended;
      const auto results = run_suite(v_suite, opts, &std::cout);
      for (const auto& r : results) {
        if (!r.passed) return kFail;
      }
      return kOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
