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

#include "hessaut/acceptance.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "hessaut/algebra.h"
#include "hessaut/aut.h"
#include "hessaut/curve.h"
#include "hessaut/detrep.h"
#include "hessaut/exact.h"
#include "hessaut/iso.h"
#include "hessaut/scan.h"

namespace hessaut {
namespace {

struct Case {
  int i;
  std::int64_t S;
  std::uint64_t p;
};

bool has_root(std::uint64_t p, std::int64_t S) {
  const FieldCtx k = make_field(p);
  const FieldElem s = k.from_int(S);
  return !k.is_zero(s) && k.sqrt(s).has_value();
}

// i in {1,2,3}, S in {1,2,3,5}, p in the list, p not dividing 2S and S a
// square mod p.
std::vector<Case> order_grid(const std::vector<std::uint64_t>& primes) {
  std::vector<Case> out;
  for (std::uint64_t p : primes) {
    for (std::int64_t S : {1, 2, 3, 5}) {
      if (!has_root(p, S)) continue;
      for (int i = 1; i <= 3; ++i) out.push_back({i, S, p});
    }
  }
  return out;
}

std::string case_name(const Case& c) {
  return "(i=" + std::to_string(c.i) + ",S=" + std::to_string(c.S) + ",p=" + std::to_string(c.p) +
         ")";
}

void note(std::vector<std::string>& failures, const std::string& msg) {
  if (failures.size() < 8) failures.push_back(msg);
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : "; ") + x;
  return out;
}

CriterionResult start(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

CriterionResult finish(CriterionResult r, std::size_t failures_total,
                       const std::vector<std::string>& failures, const std::string& summary) {
  r.passed = failures_total == 0;
  r.detail = summary;
  if (!failures.empty()) r.detail += "; failures: " + join(failures);
  return r;
}

// 1. Oracle count of Aut_V^= against (p-1) gcd(p-1, ceil(4/i)) e.
CriterionResult formula_oracle(const AcceptanceOptions& opts) {
  CriterionResult r = start(1, "formula-oracle equivalence");
  std::vector<std::uint64_t> primes{5, 7};
  if (opts.extended) primes.push_back(11);
  std::vector<std::string> failures;
  std::size_t bad = 0;
  std::size_t cases = 0;
  for (const Case& c : order_grid(primes)) {
    const RepContext rep = make_rep(make_field(c.p), c.i, c.S);
    const AutVeq v = enumerate_autVeq(rep, {opts.threads, false});
    const std::uint64_t want = (c.p - 1) * gcd_factor(c.p, c.i) * three_torsion_order(rep.curve);
    const AutOrder from_oracle = aut_order_from_oracle(rep, v.size);
    const AutOrder formula = lie_aut_order_formula(rep.ctx, c.i, c.S);
    ++cases;
    if (v.size != want || from_oracle.exact != formula.exact) {
      ++bad;
      note(failures, case_name(c) + " oracle " + std::to_string(v.size) + " vs " +
                         std::to_string(want));
    }
  }
  if (opts.extended) {
    const RepContext rep = make_rep(make_field(11), 1, 1);
    if (enumerate_autVeq(rep, {opts.threads, false}).size != 60) {
      ++bad;
      note(failures, "(1,1,11) differs from 60");
    }
  }
  return finish(r, bad, failures, std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches");
}

// 2. |E_S[3]| by enumeration, by the 3-division quartic and by flexes.
CriterionResult torsion_triple(const AcceptanceOptions&) {
  CriterionResult r = start(2, "torsion triple agreement");
  std::vector<std::string> failures;
  std::size_t bad = 0;
  std::size_t cases = 0;
  for (std::uint64_t p : primes_up_to(199)) {
    if (p < 5) continue;
    const FieldCtx k = make_field(p);
    for (std::int64_t S : {1, 2, 3, 5}) {
      if (static_cast<std::uint64_t>(S) % p == 0) continue;
      const Curve E = Curve::family(k, S);
      const std::uint64_t a = E.torsion_count(3);
      const std::uint64_t b = three_torsion_via_quartic(E);
      const std::uint64_t c = flex_points(E).size();
      ++cases;
      if (a != b || a != c) {
        ++bad;
        note(failures, "p=" + std::to_string(p) + " S=" + std::to_string(S));
      }
    }
  }
  return finish(r, bad, failures, std::to_string(cases) + " curves, " + std::to_string(bad) + " disagreements");
}

// 3. e(p) for S = 1 from the three-case formula.
CriterionResult e_formula_S1(const AcceptanceOptions&) {
  CriterionResult r = start(3, "three-torsion formula for S = 1");
  std::vector<std::string> failures;
  std::size_t bad = 0;
  std::size_t cases = 0;
  std::map<std::uint64_t, std::size_t> histogram;
  for (std::uint64_t p : primes_up_to(499)) {
    if (p < 5) continue;
    const std::uint64_t e = Curve::family(make_field(p), 1).torsion_count(3);
    ++histogram[e];
    ++cases;
    if (e != expected_e_S1(p, quartic_solvable_S1(p))) {
      ++bad;
      note(failures, "p=" + std::to_string(p));
    }
  }
  std::string summary = std::to_string(cases) + " primes; e histogram";
  for (const auto& [e, n] : histogram) summary += " " + std::to_string(e) + ":" + std::to_string(n);
  return finish(r, bad, failures, summary);
}

// 4. Distribution of e over residue classes mod 12.
CriterionResult e_distribution(const AcceptanceOptions&) {
  CriterionResult r = start(4, "three-torsion distribution mod 12");
  std::vector<std::string> failures;
  std::size_t bad = 0;
  std::size_t cases = 0;
  for (std::int64_t S : {1, 2, 3, 5}) {
    for (const PrimeRecord& rec : classify_primes(S, 999).records) {
      ++cases;
      const int m = rec.p_mod12;
      const bool ok = ((rec.e == 3) == (m == 11)) && (rec.e == 1 || m == 1 || m == 11) &&
                      (m != 1 || rec.e == 1 || rec.e == 9);
      if (!ok) {
        ++bad;
        note(failures, "S=" + std::to_string(S) + " p=" + std::to_string(rec.p) + " e=" +
                           std::to_string(rec.e));
      }
    }
  }
  return finish(r, bad, failures, std::to_string(cases) + " (S, p) pairs, " + std::to_string(bad) + " violations");
}

// 5. Determinant identities and the Hessian equation over Q(sqrt S).
CriterionResult exact_identities(const AcceptanceOptions&) {
  CriterionResult r = start(5, "exact determinantal identities");
  std::vector<std::string> failures;
  std::size_t bad = 0;
  for (std::int64_t S = 1; S <= 10; ++S) {
    const SqrtRing ring(S);
    const ExactCoef s = ring.sqrt_S();
    const ExactCoef Se = ring.from_int(S);
    for (int i = 1; i <= 3; ++i) {
      const auto rep = build_B(ring, i, Se, i == 1 ? std::nullopt : std::optional<ExactCoef>(s));
      const DetReport d = verify_det_identities(ring, rep);
      if (!d.det_ok || !d.symmetric || !d.self_dual) {
        ++bad;
        note(failures, "S=" + std::to_string(S) + " i=" + std::to_string(i) + " det/duality");
      }
    }
    const auto res = hessian_equation_solve(ring, build_fS(ring, Se));
    const ExactCoef c = ring.from_int(48 * S * S);
    const ExactCoef c3 = ring.pow(c, 3);
    const ExactCoef b = ring.mul(ring.from_int(24 * S), s);
    const std::vector<std::pair<ExactCoef, ExactCoef>> want{
        {c3, ring.zero()}, {ring.mul(ring.from_int(4), c3), b},
        {ring.mul(ring.from_int(4), c3), ring.neg(b)}};
    bool ok = res.smooth && !res.partial && res.solutions.size() == 3;
    for (const auto& [a, be] : want) {
      ok = ok && std::any_of(res.solutions.begin(), res.solutions.end(), [&](const auto& sol) {
             return sol.alpha == a && sol.beta == be;
           });
    }
    if (!ok) {
      ++bad;
      note(failures, "S=" + std::to_string(S) + " Hessian equation");
    }
  }
  return finish(r, bad, failures, "S = 1..10, i = 1..3; " + std::to_string(bad) + " failures");
}

// 6. Rank of B(u) and centralizer dimensions over all of F_p^3.
CriterionResult rank_centralizer(const AcceptanceOptions&) {
  CriterionResult r = start(6, "rank and centralizer profiles");
  std::vector<std::string> failures;
  std::size_t bad = 0;
  std::uint64_t scanned = 0;
  for (std::uint64_t p : {5, 7, 11}) {
    const FieldCtx k = make_field(p);
    for (int i = 1; i <= 3; ++i) {
      const RepContext rep = make_rep(k, i, 1);
      const RankProfile prof = rank_profile(k, rep.alg.B());
      if (prof.violations != 0 || prof.det_mismatches != 0) {
        ++bad;
        note(failures, "rank profile p=" + std::to_string(p) + " i=" + std::to_string(i));
      }
      const std::uint64_t q = k.q();
      for (std::uint64_t n = 0; n < q * q * q; ++n) {
        const Vec3 u{k.from_index(n % q), k.from_index((n / q) % q), k.from_index(n / (q * q))};
        int want = 3;
        if (n == 0) {
          want = 6;
        } else if (k.is_zero(det(k, evaluate(k, rep.alg.B(), u)))) {
          want = 4;
        }
        const int got = rep.alg.centralizer_dim(u, Vec3{});
        const int via_dual = rep.alg.centralizer_dim_via_dual(u, Vec3{});
        ++scanned;
        if (got != want || via_dual != want) {
          ++bad;
          note(failures, "centralizer p=" + std::to_string(p) + " i=" + std::to_string(i));
        }
      }
    }
  }
  return finish(r, bad, failures, std::to_string(scanned) + " vectors u, " + std::to_string(bad) + " violations");
}

// 7. Presentation of G_{1,1}, exponent p and the Heisenberg model.
CriterionResult presentation(const AcceptanceOptions&) {
  CriterionResult r = start(7, "presentation and group laws");
  std::vector<std::string> failures;
  std::size_t bad = 0;
  for (std::uint64_t p : {5, 7, 11}) {
    const RepContext rep = make_rep(make_field(p), 1, 1);
    const PresentationReport pr = check_presentation_G11(rep.alg, 10000, 1000 + p);
    const HeisenbergReport hr = heisenberg_cross_check(rep.alg, 1000, 2000 + p);
    const bool ok = pr.commutator_relations && pr.u_abelian && pr.w_abelian && pr.class_two &&
                    pr.exponent_p && hr.identity_ok && hr.products_ok && hr.commutators_central;
    if (!ok) {
      ++bad;
      note(failures, "p=" + std::to_string(p) + " " + join(pr.failures));
    }
  }
  return finish(r, bad, failures, "p = 5, 7, 11; 10^4 power samples, 10^3 Heisenberg pairs");
}

// 8. Abelian 3-dimensional subspaces of V at q = 5.
CriterionResult abelian_scan(const AcceptanceOptions&) {
  CriterionResult r = start(8, "abelian 3-dim subspaces of V");
  std::vector<std::string> failures;
  std::size_t bad = 0;
  std::uint64_t scanned = 0;
  const FieldCtx k = make_field(5);
  for (int i = 1; i <= 3; ++i) {
    const RepContext rep = make_rep(k, i, 1);
    const AbelianScan scan = enumerate_abelian_3dim_in_V(rep.alg);
    scanned += scan.subspaces_scanned;
    const bool all_psi = std::all_of(scan.psi_witness.begin(), scan.psi_witness.end(),
                                     [](const auto& w) { return w.has_value(); });
    if (scan.abelian.size() != 6 || !all_psi) {
      ++bad;
      note(failures, "i=" + std::to_string(i) + " found " + std::to_string(scan.abelian.size()));
    }
  }
  return finish(r, bad, failures, std::to_string(scanned) + " subspaces scanned");
}

// 9. Translation and isogeny lifts, and the image of c-bar.
CriterionResult lift_suite(const AcceptanceOptions& opts) {
  CriterionResult r = start(9, "lift suite");
  std::vector<std::string> failures;
  std::size_t bad = 0;
  std::size_t translations = 0;
  std::vector<Case> cases = order_grid({5, 7});
  std::vector<Case> extra;
  for (std::uint64_t p : {11, 13, 23, 37}) {
    for (int i = 1; i <= 3; ++i) extra.push_back({i, 1, p});
  }
  auto check_lifts = [&](const RepContext& rep, const Case& c) {
    const CurveAut id = identity_aut(rep.ctx);
    for (const CurvePoint& Q : rep.curve.torsion_points(3)) {
      if (Q.infinity) continue;
      ++translations;
      const FMatrix A = lift_translation(rep, Q);
      const bool ok = !rep.ctx.is_zero(det(rep.ctx, A)) && passes_kstar_test(rep, A) &&
                      cbar_decompose(rep, A) == CurveAut{Q, id.omega};
      if (!ok) {
        ++bad;
        note(failures, "translation " + case_name(c));
      }
    }
    for (const FieldElem& w : fourth_roots_of_unity(rep.ctx)) {
      const auto A = lift_isogeny(rep, w);
      const bool expect = rep.ctx.pow(w, ceil_four_over(rep.i)) == rep.ctx.one();
      bool ok = A.has_value() == expect;
      if (A) ok = ok && passes_kstar_test(rep, *A) && cbar_decompose(rep, *A) == CurveAut{{}, w};
      if (!ok) {
        ++bad;
        note(failures, "isogeny " + case_name(c));
      }
    }
  };
  for (const Case& c : cases) {
    const RepContext rep = make_rep(make_field(c.p), c.i, c.S);
    check_lifts(rep, c);
    const AutVeq v = enumerate_autVeq(rep, {opts.threads, false});
    const CbarImage img = image_of_cbar(rep, v);
    const std::uint64_t want = gcd_factor(c.p, c.i) * three_torsion_order(rep.curve);
    bool two_torsion = false;
    for (const CurveAut& g : img.elements) {
      if (!g.translation.infinity && rep.curve.scalar_mul(2, g.translation).infinity) two_torsion = true;
    }
    if (img.size != want || !img.closed || !img.scalar_kernel || !img.translations_in_E3 ||
        two_torsion) {
      ++bad;
      note(failures, "c-bar image " + case_name(c));
    }
  }
  for (const Case& c : extra) check_lifts(make_rep(make_field(c.p), c.i, c.S), c);
  return finish(r, bad, failures,
                std::to_string(cases.size()) + " oracle cases, " + std::to_string(translations) +
                    " translation lifts");
}

// 10. Isomorphism classifier against the exhaustive search.
CriterionResult iso_grid(const AcceptanceOptions& opts) {
  CriterionResult r = start(10, "isomorphism grid");
  std::vector<std::string> failures;
  std::size_t literal_bad = 0;
  std::size_t twisted_bad = 0;
  std::size_t witness_bad = 0;
  std::size_t pairs = 0;
  std::set<std::tuple<std::uint64_t, std::int64_t, std::int64_t>> literal_ratio_examples;
  std::vector<std::uint64_t> primes{5, 7};
  if (opts.extended) primes.push_back(11);
  for (std::uint64_t p : primes) {
    const FieldCtx k = make_field(p);
    std::vector<std::int64_t> Ss;
    for (std::int64_t S : {1, 2, 4}) {
      if (has_root(p, S)) Ss.push_back(S);
    }
    for (std::int64_t S : Ss) {
      for (std::int64_t S2 : Ss) {
        for (int i = 1; i <= 3; ++i) {
          for (int j = 1; j <= 3; ++j) {
            for (int si : {1, -1}) {
              for (int sj : {1, -1}) {
                const IsoQuery q = make_iso_query(k, i, S, si, j, S2, sj);
                const IsoVerdict lit = iso_classify(q);
                const IsoVerdict tw = iso_classify_twisted(q);
                const auto oracle = iso_oracle(q, opts.threads);
                ++pairs;
                const std::string name = "p=" + std::to_string(p) + " (" + std::to_string(i) +
                                         "," + std::to_string(S) + (si > 0 ? ",+" : ",-") +
                                         ")~(" + std::to_string(j) + "," + std::to_string(S2) +
                                         (sj > 0 ? ",+" : ",-") + ")";
                if (lit.isomorphic != oracle.has_value()) {
                  ++literal_bad;
                  literal_ratio_examples.insert({p, S, S2});
                  note(failures, name + " case analysis says " + (lit.isomorphic ? "iso" : "non-iso"));
                }
                if (tw.isomorphic != oracle.has_value()) ++twisted_bad;
                for (const IsoVerdict* v : {&lit, &tw}) {
                  if (v->isomorphic &&
                      (!v->witness || !preserves_brackets(q.src.alg, q.tgt.alg, *v->witness))) {
                    ++witness_bad;
                    note(failures, name + " witness");
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  // (2, 1, +) against (3, 1, +).
  std::size_t notable_bad = 0;
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const IsoQuery q = make_iso_query(make_field(p), 2, 1, 1, 3, 1, 1);
    const bool want = p % 4 == 1;
    if (iso_oracle(q, opts.threads).has_value() != want || iso_classify(q).isomorphic != want) {
      ++notable_bad;
      note(failures, "2~3 same root at p=" + std::to_string(p));
    }
  }
  std::string summary = std::to_string(pairs) + " pairs; case-analysis classifier disagrees on " +
                        std::to_string(literal_bad) + "; fourth-power-twist classifier disagrees on " +
                        std::to_string(twisted_bad) + "; bad witnesses " + std::to_string(witness_bad);
  if (!literal_ratio_examples.empty()) {
    summary += "; every case-analysis disagreement has S != S' with S/S' a fourth power";
    const bool all_fourth = std::all_of(
        literal_ratio_examples.begin(), literal_ratio_examples.end(), [](const auto& t) {
          const auto& [p, S, S2] = t;
          if (S == S2) return false;
          const FieldCtx k = make_field(p);
          const FieldElem ratio = k.div(k.from_int(S), k.from_int(S2));
          const std::vector<FieldElem> quartic{k.neg(ratio), k.zero(), k.zero(), k.zero(), k.one()};
          return !univariate_roots(k, quartic).empty();
        });
    if (!all_fourth) summary += " (NOT: some have S = S')";
  }
  return finish(r, literal_bad + witness_bad + notable_bad, failures, summary);
}

// 11. Integrality of the descendants count.
CriterionResult descendants(const AcceptanceOptions&) {
  CriterionResult r = start(11, "descendants formula");
  std::vector<std::string> failures;
  std::size_t bad = 0;
  std::size_t cases = 0;
  for (std::uint64_t p : primes_up_to(999)) {
    if (p < 5) continue;
    ++cases;
    try {
      if (descendants_n11(p) == 0) {
        ++bad;
        note(failures, "p=" + std::to_string(p) + " zero");
      }
    } catch (const std::logic_error& e) {
      ++bad;
      note(failures, e.what());
    }
  }
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> spots{{5, 12}, {7, 34}, {11, 30}};
  for (const auto& [p, want] : spots) {
    if (descendants_n11(p) != want) {
      ++bad;
      note(failures, "n(" + std::to_string(p) + ") = " + std::to_string(descendants_n11(p)));
    }
  }
  return finish(r, bad, failures, std::to_string(cases) + " primes; n(5)=12, n(7)=34, n(11)=30 checked");
}

// 12. Frobenius-set partition for S = 1.
CriterionResult pofs(const AcceptanceOptions&) {
  CriterionResult r = start(12, "Frobenius-set partition");
  std::vector<std::string> failures;
  std::size_t bad = 0;
  const PrimeScan scan = classify_primes(1, 999);
  std::string summary;
  for (int i = 1; i <= 3; ++i) {
    const PofsPartition part = pofs_partition(scan, i);
    const std::size_t want = i == 1 ? 4 : 3;
    const bool fits = std::all_of(part.sets.begin(), part.sets.end(),
                                  [](const FrobeniusSet& s) { return s.fits_all; });
    if (part.sets.size() != want || !fits || !part.is_partition) {
      ++bad;
      note(failures, "i=" + std::to_string(i) + " sets=" + std::to_string(part.sets.size()));
    }
    summary += (summary.empty() ? "" : ", ") + std::string("i=") + std::to_string(i) + ": " +
               std::to_string(part.sets.size()) + " sets";
  }
  return finish(r, bad, failures, summary);
}

using CriterionFn = std::function<CriterionResult(const AcceptanceOptions&)>;

const std::map<int, CriterionFn>& registry() {
  static const std::map<int, CriterionFn> table{
      {1, formula_oracle}, {2, torsion_triple},   {3, e_formula_S1}, {4, e_distribution},
      {5, exact_identities}, {6, rank_centralizer}, {7, presentation}, {8, abelian_scan},
      {9, lift_suite},     {10, iso_grid},        {11, descendants}, {12, pofs},
  };
  return table;
}

}  // namespace

std::vector<int> suite_criteria(const std::string& suite) {
  static const std::map<std::string, std::vector<int>> suites{
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
      {"forms", {5, 6}},
      {"curve", {2, 3, 4}},
      {"detrep", {5}},
      {"algebra", {6, 7, 8}},
      {"aut", {1, 9, 11}},
      {"iso", {10}},
      {"scan", {3, 4, 11, 12}},
  };
  const auto it = suites.find(suite);
  if (it == suites.end()) throw std::invalid_argument("unknown suite: " + suite);
  return it->second;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument("unknown criterion " + std::to_string(id));
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = it->second(opts);
  } catch (const std::exception& e) {
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_suite(const std::string& suite, const AcceptanceOptions& opts,
                                       std::ostream* log) {
  std::vector<CriterionResult> out;
  for (int id : suite_criteria(suite)) {
    out.push_back(run_criterion(id, opts));
    if (log) *log << format_result(out.back()) << std::endl;
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title +
         ": " + r.detail + " (" + secs + " s)";
}

}  // namespace hessaut
