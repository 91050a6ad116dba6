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

#include "hessaut/search.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <optional>
#include <thread>

namespace hessaut {
namespace {

struct Term {
  int slot_i;
  int slot_j;
  FieldElem coef;
};
using SparseTensor = std::vector<Term>;

// Basis of span(tensors) intersected with the tensors supported on pairs of
// assigned columns: RREF with the forbidden coordinates ordered first keeps
// exactly the rows that avoid them.
std::vector<KernelTensor> supported_part(const FieldCtx& ctx,
                                         const std::vector<KernelTensor>& tensors,
                                         const std::vector<bool>& allowed) {
  std::vector<int> order;
  for (int c = 0; c < 9; ++c) {
    if (!allowed[c]) order.push_back(c);
  }
  const std::size_t forbidden = order.size();
  for (int c = 0; c < 9; ++c) {
    if (allowed[c]) order.push_back(c);
  }
  FMatrix m(ctx, tensors.size(), 9);
  for (std::size_t r = 0; r < tensors.size(); ++r) {
    for (int k = 0; k < 9; ++k) m(r, k) = tensors[r].a[order[k]];
  }
  const auto pivots = rref(ctx, m);
  std::vector<KernelTensor> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] < forbidden) continue;
    KernelTensor t;
    for (int k = 0; k < 9; ++k) t.a[order[k]] = m(r, k);
    out.push_back(t);
  }
  return out;
}

std::vector<bool> allowed_pairs(const std::vector<int>& cols) {
  std::vector<bool> allowed(9, false);
  for (int i : cols) {
    for (int j : cols) allowed[3 * i + j] = true;
  }
  return allowed;
}

class Engine {
 public:
  Engine(const AlgebraData& target, const std::vector<KernelTensor>& span)
      : ctx_(target.ctx()) {
    choose_order(span);
    const std::uint64_t q = ctx_.q();
    for (std::uint64_t n = 1; n < q * q * q; ++n) {
      Vec3 v{ctx_.from_index(n % q), ctx_.from_index((n / q) % q), ctx_.from_index(n / (q * q))};
      columns_.push_back(v);
    }
    // rows_[a][k][j] = sum_i c_a[i] B^(k)_ij.
    rows_.resize(columns_.size());
    for (std::size_t a = 0; a < columns_.size(); ++a) {
      for (int k = 0; k < 3; ++k) {
        for (int j = 0; j < 3; ++j) {
          FieldElem acc{};
          for (int i = 0; i < 3; ++i) {
            acc = ctx_.add(acc, ctx_.mul(columns_[a][i], target.B().coef[k][i][j]));
          }
          rows_[a][k][j] = acc;
        }
      }
    }
  }

  std::size_t shard_count() const { return columns_.size(); }

  // Runs one shard; returns the hits in enumeration order.
  std::vector<FMatrix> run_shard(std::size_t a, bool first_only, std::uint64_t& full_tests) const {
    std::vector<FMatrix> hits;
    std::array<std::size_t, 3> cur{a, 0, 0};
    if (!stage_ok(0, cur)) return hits;
    for (std::size_t b = 0; b < columns_.size(); ++b) {
      cur[1] = b;
      if (!stage_ok(1, cur)) continue;
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        cur[2] = c;
        ++full_tests;
        if (!stage_ok(2, cur)) continue;
        FMatrix A(ctx_, 3, 3);
        for (int slot = 0; slot < 3; ++slot) {
          for (int r = 0; r < 3; ++r) A(r, order_[slot]) = columns_[cur[slot]][r];
        }
        if (ctx_.is_zero(det(ctx_, A))) continue;
        hits.push_back(std::move(A));
        if (first_only) return hits;
      }
    }
    return hits;
  }

 private:
  void choose_order(const std::vector<KernelTensor>& span) {
    std::array<int, 3> perm{0, 1, 2};
    std::size_t best = 0;
    bool have = false;
    do {
      const std::size_t r =
          supported_part(ctx_, span, allowed_pairs({perm[0], perm[1]})).size() * 4 +
          supported_part(ctx_, span, allowed_pairs({perm[0]})).size();
      if (!have || r > best) {
        best = r;
        order_ = perm;
        have = true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::array<int, 3> slot_of{};
    for (int s = 0; s < 3; ++s) slot_of[order_[s]] = s;
    for (int stage = 0; stage < 3; ++stage) {
      std::vector<int> cols(order_.begin(), order_.begin() + stage + 1);
      for (const KernelTensor& t : supported_part(ctx_, span, allowed_pairs(cols))) {
        SparseTensor st;
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) {
            if (!ctx_.is_zero(t.a[3 * i + j])) st.push_back({slot_of[i], slot_of[j], t.a[3 * i + j]});
          }
        }
        stages_[stage].push_back(std::move(st));
      }
    }
  }

  bool stage_ok(int stage, const std::array<std::size_t, 3>& cur) const {
    for (const SparseTensor& st : stages_[stage]) {
      for (int k = 0; k < 3; ++k) {
        FieldElem acc{};
        for (const Term& term : st) {
          const auto& row = rows_[cur[term.slot_i]][k];
          const Vec3& col = columns_[cur[term.slot_j]];
          FieldElem val = ctx_.add(ctx_.add(ctx_.mul(row[0], col[0]), ctx_.mul(row[1], col[1])),
                                   ctx_.mul(row[2], col[2]));
          acc = ctx_.add(acc, ctx_.mul(term.coef, val));
        }
        if (!ctx_.is_zero(acc)) return false;
      }
    }
    return true;
  }

  const FieldCtx& ctx_;
  std::array<int, 3> order_{0, 1, 2};
  std::array<std::vector<SparseTensor>, 3> stages_;
  std::vector<Vec3> columns_;
  std::vector<std::array<Vec3, 3>> rows_;
};

}  // namespace

SearchResult search_gl3(const AlgebraData& target, const std::vector<KernelTensor>& span,
                        const SearchOptions& opts) {
  const Engine engine(target, span);
  const std::size_t shards = engine.shard_count();
  std::vector<std::vector<FMatrix>> per_shard(shards);
  std::vector<std::uint64_t> tests(shards, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    for (;;) {
      const std::size_t s = next.fetch_add(1);
      if (s >= shards) return;
      if (opts.first_only && s > best.load()) continue;
      per_shard[s] = engine.run_shard(s, opts.first_only, tests[s]);
      if (opts.first_only && !per_shard[s].empty()) {
        std::size_t cur = best.load();
        while (s < cur && !best.compare_exchange_weak(cur, s)) {
        }
      }
    }
  };

  unsigned n = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
  n = std::max(1u, n);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }

  SearchResult out;
  out.shards = shards;
  out.full_tests = std::accumulate(tests.begin(), tests.end(), std::uint64_t{0});
  for (auto& hits : per_shard) {
    for (auto& A : hits) {
      out.matrices.push_back(std::move(A));
      if (opts.first_only) return out;
    }
  }
  return out;
}

bool maps_into_kernel(const AlgebraData& target, const FMatrix& A,
                      const std::vector<KernelTensor>& tensors) {
  for (const KernelTensor& v : tensors) {
    if (!target.in_kernel(tensor_image(target.ctx(), A, v))) return false;
  }
  return true;
}

}  // namespace hessaut
