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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

namespace hessaut {
namespace {

const PrimeRecord& record_for(const PrimeScan& scan, std::uint64_t p) {
  for (const PrimeRecord& r : scan.records) {
    if (r.p == p) return r;
  }
  throw std::out_of_range("prime not in scan");
}

TEST(ClassifyPrimes, UpToFifty) {
  const PrimeScan scan = classify_primes(1, 50);
  EXPECT_EQ(scan.records.size(), 13u);
  ASSERT_EQ(scan.skipped.size(), 2u);
  EXPECT_EQ(scan.skipped[0].p, 2u);
  EXPECT_EQ(scan.skipped[1].p, 3u);
  EXPECT_EQ(record_for(scan, 11).e, 3u);
  EXPECT_EQ(record_for(scan, 23).e, 3u);
  EXPECT_EQ(record_for(scan, 13).e, 1u);
  EXPECT_EQ(record_for(scan, 5).e, 1u);
  EXPECT_EQ(record_for(scan, 7).e, 1u);
  EXPECT_EQ(record_for(scan, 5).n11, 12u);
  EXPECT_EQ(record_for(scan, 5).m, 4u);
  EXPECT_EQ(*record_for(scan, 5).aut[0], "7324218750000000");
}

TEST(ClassifyPrimes, SkipsDivisorsOfS) {
  const PrimeScan scan = classify_primes(35, 20);
  for (const PrimeRecord& r : scan.records) {
    EXPECT_NE(r.p, 5u);
    EXPECT_NE(r.p, 7u);
    EXPECT_FALSE(r.n11.has_value());
    EXPECT_EQ(r.aut[0].has_value(), r.sqrtS_exists);
  }
  EXPECT_EQ(scan.skipped.size(), 4u);
  EXPECT_THROW(classify_primes(1, 100001), std::invalid_argument);
  EXPECT_THROW(classify_primes(0, 10), std::invalid_argument);
}

TEST(ThreeTorsion, ThreeCaseFormulaUpTo2000) {
  const PrimeScan scan = classify_primes(1, 2000);
  int nine = 0;
  for (const PrimeRecord& r : scan.records) {
    EXPECT_EQ(r.e, expected_e_S1(r.p, *r.quartic_solvable)) << "p=" << r.p;
    nine += r.e == 9;
  }
  EXPECT_GT(nine, 0);
}

TEST(Porc, MixedOnlyInResidueOneModTwelve) {
  const PrimeScan scan = classify_primes(1, 1000);
  const auto reports = porc_violation_report(scan, {12, 4});
  ASSERT_EQ(reports.size(), 2u);
  ASSERT_EQ(reports[0].mixed.size(), 1u);
  EXPECT_EQ(reports[0].mixed.begin()->first, 1u);
  EXPECT_EQ(reports[0].mixed.begin()->second, (std::set<std::uint64_t>{1, 9}));
  EXPECT_FALSE(reports[1].mixed.empty());
  EXPECT_THROW(porc_violation_report(scan, {0}), std::invalid_argument);
}

TEST(Pofs, PartitionForSOne) {
  const PrimeScan scan = classify_primes(1, 400);
  for (int i = 1; i <= 3; ++i) {
    const PofsPartition part = pofs_partition(scan, i);
    EXPECT_TRUE(part.is_partition);
    EXPECT_FALSE(part.empirical);
    for (const FrobeniusSet& s : part.sets) EXPECT_TRUE(s.fits_all) << s.coefficient;
  }
  EXPECT_EQ(pofs_partition(scan, 1).sets.size(), 4u);
  EXPECT_EQ(pofs_partition(scan, 2).sets.size(), 3u);
  EXPECT_THROW(pofs_partition(classify_primes(2, 30), 1), std::invalid_argument);
  EXPECT_TRUE(pofs_partition(classify_primes(4, 100), 1).empirical);
}

TEST(Output, CsvHeaderOnlyForEmptyList) {
  EXPECT_EQ(to_csv({}), "p,pmod12,S,e,m,n11,aut_i1,aut_i2,aut_i3\n");
}

TEST(Output, CsvRowsAndJsonRoundTrip) {
  const PrimeScan scan = classify_primes(2, 40);
  const std::string csv = to_csv(scan.records);
  std::istringstream in(csv);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 1 + static_cast<int>(scan.records.size()));
  EXPECT_EQ(records_from_json(to_json(scan.records)), scan.records);
  EXPECT_EQ(records_from_json(nlohmann::json::parse(to_json(scan.records).dump())), scan.records);
}

TEST(Output, EmitWritesAndReportsErrors) {
  const auto path = std::filesystem::temp_directory_path() / "hessaut_scan_test.json";
  const PrimeScan scan = classify_primes(1, 30);
  emit(scan.records, "json", path.string());
  std::ifstream f(path);
  EXPECT_EQ(records_from_json(nlohmann::json::parse(f)), scan.records);
  std::filesystem::remove(path);
  EXPECT_THROW(emit(scan.records, "xml", path.string()), std::invalid_argument);
  EXPECT_THROW(emit(scan.records, "csv", "/nonexistent-dir/x.csv"), std::runtime_error);
}

}  // namespace
}  // namespace hessaut
