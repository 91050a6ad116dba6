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

#ifndef HESSAUT_SCAN_H_
#define HESSAUT_SCAN_H_

// Per-prime arithmetic of E_S and of the automorphism orders, residue-class
// reports, the Frobenius-set partition, and flat-file output.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace hessaut {

struct PrimeRecord {
  std::uint64_t p = 0;
  int p_mod12 = 0;
  int p_mod4 = 0;
  std::int64_t S = 1;
  bool sqrtS_exists = false;
  std::uint64_t e = 0;  // |E_S[3](F_p)|
  std::uint64_t m = 0;  // gcd(p - 1, 4)
  // S = 1 only: x^4 + 6x^2 - 3 = 0 and y^2 = x^3 - x solvable over F_p.
  std::optional<bool> quartic_solvable;
  std::optional<std::uint64_t> n11;
  // |Aut(g_{i,S}(F_p))| for i = 1, 2, 3 as decimal strings, when sqrt S exists.
  std::array<std::optional<std::string>, 3> aut;

  friend bool operator==(const PrimeRecord&, const PrimeRecord&) = default;
};

struct SkippedPrime {
  std::uint64_t p;
  std::string reason;
};

struct PrimeScan {
  std::vector<PrimeRecord> records;
  std::vector<SkippedPrime> skipped;
};

// Primes 2 <= p <= p_max in increasing order; 2, 3 and divisors of S are
// skipped with a reason.  p_max must be at most 10^5.
PrimeScan classify_primes(std::int64_t S, std::uint64_t p_max);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// The three-case value of |E_1[3](F_p)| from p mod 12 and the quartic.
std::uint64_t expected_e_S1(std::uint64_t p, bool quartic_solvable);
bool quartic_solvable_S1(std::uint64_t p);

struct ResidueClassReport {
  std::uint64_t modulus = 0;
  // Residues whose primes show more than one value of e, with those values.
  std::map<std::uint64_t, std::set<std::uint64_t>> mixed;
  std::vector<std::uint64_t> residues_seen;
};

std::vector<ResidueClassReport> porc_violation_report(const PrimeScan& scan,
                                                      const std::vector<std::uint64_t>& moduli);

struct FrobeniusSet {
  // Defining cells "p mod 12 = r" plus, where relevant, solvability of the
  // quartic system (S = 1) or the observed e (other S).
  std::vector<std::string> cells;
  // |Aut| = coefficient (p^2 - 1)(p^2 - p) p^18 on the set.
  std::uint64_t coefficient = 0;
  std::vector<std::uint64_t> primes;
  bool fits_all = false;
};

struct PofsPartition {
  int i = 1;
  std::int64_t S = 1;
  bool empirical = false;  // S != 1: cells taken from observed e
  std::vector<FrobeniusSet> sets;
  bool is_partition = false;
};

// Requires S to be a perfect square integer.
PofsPartition pofs_partition(const PrimeScan& scan, int i);

std::string to_csv(const std::vector<PrimeRecord>& records);
nlohmann::json to_json(const PrimeRecord& r);
PrimeRecord record_from_json(const nlohmann::json& j);
nlohmann::json to_json(const std::vector<PrimeRecord>& records);
std::vector<PrimeRecord> records_from_json(const nlohmann::json& j);

// Writes CSV or JSON; throws std::runtime_error naming the path on failure.
void emit(const std::vector<PrimeRecord>& records, const std::string& format,
          const std::string& path);

}  // namespace hessaut

#endif  // HESSAUT_SCAN_H_
