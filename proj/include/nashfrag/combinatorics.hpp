// Copyright 2026 The nashfrag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NASHFRAG_COMBINATORICS_HPP_
#define NASHFRAG_COMBINATORICS_HPP_

#include <cstddef>
#include <vector>

namespace nashfrag::detail {

// All k-element subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n,
                                                       std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k == 0 || k > n) return out;
  std::vector<std::size_t> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  for (;;) {
    out.push_back(current);
    std::size_t i = k;
    while (i-- > 0) {
      if (current[i] < n - k + i) break;
    }
    if (i == static_cast<std::size_t>(-1)) break;
    ++current[i];
    for (std::size_t j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

// Subsets of sizes kmin..kmax, ordered by size and then lexicographically.
inline std::vector<std::vector<std::size_t>> subsets_by_size(std::size_t n,
                                                             std::size_t kmin,
                                                             std::size_t kmax) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = kmin; k <= kmax && k <= n; ++k) {
    auto level = k_subsets(n, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// Number of subsets of sizes kmin..kmax, saturating at SIZE_MAX.
inline std::size_t subset_count(std::size_t n, std::size_t kmin,
                                std::size_t kmax) {
  constexpr std::size_t kMax = static_cast<std::size_t>(-1);
  std::size_t total = 0;
  for (std::size_t k = kmin; k <= kmax && k <= n; ++k) {
    // C(n, k) built incrementally; each partial product is itself binomial.
    std::size_t c = 1;
    for (std::size_t j = 1; j <= k; ++j) {
      if (c > kMax / (n - k + j)) return kMax;
      c = c * (n - k + j) / j;
    }
    if (total > kMax - c) return kMax;
    total += c;
  }
  return total;
}

}  // namespace nashfrag::detail

#endif  // NASHFRAG_COMBINATORICS_HPP_
