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

#include "hessaut/scan.h"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

#include "hessaut/aut.h"
#include "hessaut/curve.h"
#include "hessaut/ff.h"

namespace hessaut {
namespace {

mpz_class aut_polynomial(std::uint64_t coefficient, std::uint64_t p) {
  const mpz_class P(std::to_string(p));
  mpz_class p18;
  mpz_ui_pow_ui(p18.get_mpz_t(), p, 18);
  return mpz_class(std::to_string(coefficient)) * (P * P - 1) * (P * P - P) * p18;
}

bool is_perfect_square(std::int64_t S) {
  if (S < 0) return false;
  const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(S))));
  for (std::int64_t c = std::max<std::int64_t>(0, r - 1); c <= r + 1; ++c) {
    if (c * c == S) return true;
  }
  return false;
}

std::string opt_str(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= n; ++k) {
    if (composite[k]) continue;
    out.push_back(k);
    for (std::uint64_t m = k * k; m <= n; m += k) composite[m] = true;
  }
  return out;
}

bool quartic_solvable_S1(std::uint64_t p) {
  const FieldCtx k = make_field(p);
  const std::int64_t quartic[] = {-3, 0, 6, 0, 1};
  for (const FieldElem& x : univariate_roots(k, std::span<const std::int64_t>(quartic))) {
    if (k.legendre(k.sub(k.pow(x, 3), x)) >= 0) return true;
  }
  return false;
}

std::uint64_t expected_e_S1(std::uint64_t p, bool quartic_solvable) {
  if (p % 12 == 1 && quartic_solvable) return 9;
  if (p % 12 == 11) return 3;
  return 1;
}

PrimeScan classify_primes(std::int64_t S, std::uint64_t p_max) {
  if (p_max > 100000) throw std::invalid_argument("prime scans stop at 10^5");
  if (S == 0) throw std::invalid_argument("S must be nonzero");
  PrimeScan out;
  for (std::uint64_t p : primes_up_to(p_max)) {
    if (p < 5) {
      out.skipped.push_back({p, "characteristic below 5"});
      continue;
    }
    const std::int64_t sm = ((S % static_cast<std::int64_t>(p)) + p) % p;
    if (sm == 0) {
      out.skipped.push_back({p, "p divides S"});
      continue;
    }
    const FieldCtx k = make_field(p);
    const Curve E = Curve::family(k, S);
    PrimeRecord r;
    r.p = p;
    r.p_mod12 = static_cast<int>(p % 12);
    r.p_mod4 = static_cast<int>(p % 4);
    r.S = S;
    r.sqrtS_exists = E.sqrt_S().has_value();
    r.e = three_torsion_order(E);
    r.m = std::gcd(p - 1, std::uint64_t{4});
    if (S == 1) {
      r.quartic_solvable = quartic_solvable_S1(p);
      r.n11 = descendants_n11(p);
    }
    if (r.sqrtS_exists) {
      for (int i = 1; i <= 3; ++i) {
        r.aut[i - 1] = aut_polynomial(gcd_factor(p, i) * r.e, p).get_str();
      }
    }
    out.records.push_back(std::move(r));
  }
  return out;
}

std::vector<ResidueClassReport> porc_violation_report(const PrimeScan& scan,
                                                      const std::vector<std::uint64_t>& moduli) {
  std::vector<ResidueClassReport> out;
  for (std::uint64_t M : moduli) {
    if (M == 0) throw std::invalid_argument("modulus must be positive");
    std::map<std::uint64_t, std::set<std::uint64_t>> values;
    for (const PrimeRecord& r : scan.records) values[r.p % M].insert(r.e);
    ResidueClassReport rep;
    rep.modulus = M;
    for (const auto& [res, es] : values) {
      rep.residues_seen.push_back(res);
      if (es.size() > 1) rep.mixed[res] = es;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

PofsPartition pofs_partition(const PrimeScan& scan, int i) {
  PofsPartition out;
  out.i = i;
  if (scan.records.empty()) {
    out.is_partition = true;
    return out;
  }
  out.S = scan.records.front().S;
  if (!is_perfect_square(out.S)) throw std::invalid_argument("Frobenius partition needs square S");
  out.empirical = out.S != 1;
  std::map<std::uint64_t, std::size_t> by_coefficient;
  std::map<std::uint64_t, std::set<std::string>> cells;
  std::size_t assigned = 0;
  for (const PrimeRecord& r : scan.records) {
    std::uint64_t e = 0;
    std::string cell = "p = " + std::to_string(r.p_mod12) + " mod 12";
    if (!out.empirical) {
      const bool solvable = r.quartic_solvable.value_or(false);
      e = expected_e_S1(r.p, solvable);
      if (r.p_mod12 == 1) cell += solvable ? ", quartic solvable" : ", quartic not solvable";
    } else {
      e = r.e;
      cell += ", e = " + std::to_string(e);
    }
    const std::uint64_t c = gcd_factor(r.p, i) * e;
    auto [it, fresh] = by_coefficient.try_emplace(c, out.sets.size());
    if (fresh) {
      out.sets.emplace_back();
      out.sets.back().coefficient = c;
      out.sets.back().fits_all = true;
    }
    FrobeniusSet& set = out.sets[it->second];
    set.primes.push_back(r.p);
    cells[c].insert(cell);
    ++assigned;
    const bool fits = r.aut[i - 1] && *r.aut[i - 1] == aut_polynomial(c, r.p).get_str();
    if (!fits) set.fits_all = false;
  }
  for (FrobeniusSet& set : out.sets) {
    set.cells.assign(cells[set.coefficient].begin(), cells[set.coefficient].end());
  }
  std::size_t total = 0;
  for (const FrobeniusSet& set : out.sets) total += set.primes.size();
  out.is_partition = total == assigned && assigned == scan.records.size();
  return out;
}

std::string to_csv(const std::vector<PrimeRecord>& records) {
  std::ostringstream os;
  os << "p,pmod12,S,e,m,n11,aut_i1,aut_i2,aut_i3\n";
  for (const PrimeRecord& r : records) {
    os << r.p << ',' << r.p_mod12 << ',' << r.S << ',' << r.e << ',' << r.m << ',' << opt_str(r.n11);
    for (const auto& a : r.aut) os << ',' << a.value_or("");
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const PrimeRecord& r) {
  nlohmann::json j;
  j["p"] = r.p;
  j["p_mod12"] = r.p_mod12;
  j["p_mod4"] = r.p_mod4;
  j["S"] = r.S;
  j["sqrtS_exists"] = r.sqrtS_exists;
  j["e"] = r.e;
  j["m"] = r.m;
  j["quartic_solvable"] = r.quartic_solvable ? nlohmann::json(*r.quartic_solvable) : nullptr;
  j["n11"] = r.n11 ? nlohmann::json(*r.n11) : nullptr;
  nlohmann::json aut = nlohmann::json::array();
  for (const auto& a : r.aut) aut.push_back(a ? nlohmann::json(*a) : nlohmann::json(nullptr));
  j["aut"] = aut;
  return j;
}

PrimeRecord record_from_json(const nlohmann::json& j) {
  PrimeRecord r;
  r.p = j.at("p").get<std::uint64_t>();
  r.p_mod12 = j.at("p_mod12").get<int>();
  r.p_mod4 = j.at("p_mod4").get<int>();
  r.S = j.at("S").get<std::int64_t>();
  r.sqrtS_exists = j.at("sqrtS_exists").get<bool>();
  r.e = j.at("e").get<std::uint64_t>();
  r.m = j.at("m").get<std::uint64_t>();
  if (!j.at("quartic_solvable").is_null()) r.quartic_solvable = j["quartic_solvable"].get<bool>();
  if (!j.at("n11").is_null()) r.n11 = j["n11"].get<std::uint64_t>();
  const auto& aut = j.at("aut");
  for (std::size_t k = 0; k < 3 && k < aut.size(); ++k) {
    if (!aut[k].is_null()) r.aut[k] = aut[k].get<std::string>();
  }
  return r;
}

nlohmann::json to_json(const std::vector<PrimeRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const PrimeRecord& r : records) arr.push_back(to_json(r));
  return arr;
}

std::vector<PrimeRecord> records_from_json(const nlohmann::json& j) {
  std::vector<PrimeRecord> out;
  for (const auto& item : j) out.push_back(record_from_json(item));
  return out;
}

void emit(const std::vector<PrimeRecord>& records, const std::string& format,
          const std::string& path) {
  std::string body;
  if (format == "csv") {
    body = to_csv(records);
  } else if (format == "json") {
    body = to_json(records).dump(2) + "\n";
  } else {
    throw std::invalid_argument("format must be csv or json");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << body;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace hessaut
