// Copyright 2026 Bonsai Toolkit Contributors
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

#include "bonsai/metrics.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "bonsai/verify.hpp"

namespace bonsai {

namespace {

// True when the mode's pair reads its occupation from one qubit: the even
// string is X at a single qubit with Z elsewhere, the odd string is Y at the
// same qubit with the same shape. For tree mappings this holds exactly for
// the qubits whose root path uses only Z links.
bool locally_read_pair(const PauliString& even, const PauliString& odd) {
  if (even.x_mask().count() != 1) return false;
  if (even.y_count() != 0) return false;
  if (odd.x_mask() != even.x_mask()) return false;
  const auto u = odd.x_mask().first_set();
  return u && odd.z_mask().test(*u);
}

}  // namespace

MappingReport report(const MajoranaMapping& mapping, const HardwareGraph* g,
                     const ReportOptions& options) {
  MappingReport out;
  out.n_modes = mapping.n_modes;
  out.n_qubits = mapping.n_qubits();
  out.virtual_edges = static_cast<int>(mapping.virtual_edges.size());

  const auto strings = mapping.flat_strings();
  out.weights.reserve(strings.size());
  long long weight_sum = 0;
  for (const auto& s : strings) {
    const int w = static_cast<int>(s.weight());
    out.weights.push_back(w);
    weight_sum += w;
  }
  if (!out.weights.empty()) {
    out.weight_min = *std::min_element(out.weights.begin(), out.weights.end());
    out.weight_max = *std::max_element(out.weights.begin(), out.weights.end());
    out.weight_mean =
        static_cast<double>(weight_sum) / static_cast<double>(out.weights.size());
  }

  long long deloc_sum = 0;
  for (int j = 0; j < mapping.n_modes; ++j) {
    const int d = delocalisation(mapping, j);
    out.deloc.push_back(d);
    deloc_sum += d;
    if (locally_read_pair(mapping.even[j], mapping.odd[j])) ++out.h_z;
  }
  if (mapping.n_modes > 0) {
    out.deloc_mean =
        static_cast<double>(deloc_sum) / static_cast<double>(mapping.n_modes);
  }

  out.nto_class = classify_nto(mapping);

  if (g != nullptr) {
    if (g->n_vertices() != mapping.n_qubits()) {
      throw std::invalid_argument("graph size must match the mapping");
    }
    SwapSummary swap;
    const int n = mapping.n_modes;

    long long singles_sum = 0;
    long long singles_count = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int overhead = excitation_cost(mapping, *g, {i, j}).total_overhead;
        swap.singles_max = std::max(swap.singles_max,
                                    static_cast<double>(overhead));
        singles_sum += overhead;
        ++singles_count;
      }
    }
    if (singles_count > 0) {
      swap.singles_mean = static_cast<double>(singles_sum) /
                          static_cast<double>(singles_count);
    }

    if (n >= 4) {
      long long doubles_sum = 0;
      const auto record = [&](const std::vector<int>& modes) {
        const int overhead = excitation_cost(mapping, *g, modes).total_overhead;
        swap.doubles_max = std::max(swap.doubles_max,
                                    static_cast<double>(overhead));
        doubles_sum += overhead;
        ++swap.doubles_samples;
      };
      if (options.full_doubles) {
        swap.doubles_exhaustive = true;
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
              for (int l = k + 1; l < n; ++l) record({i, j, k, l});
            }
          }
        }
      } else {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<int> dist(0, n - 1);
        for (int s = 0; s < options.double_samples; ++s) {
          std::vector<int> modes;
          while (modes.size() < 4) {
            const int m = dist(rng);
            if (std::find(modes.begin(), modes.end(), m) == modes.end()) {
              modes.push_back(m);
            }
          }
          std::sort(modes.begin(), modes.end());
          record(modes);
        }
      }
      if (swap.doubles_samples > 0) {
        swap.doubles_mean = static_cast<double>(doubles_sum) /
                            static_cast<double>(swap.doubles_samples);
      }
    }
    out.swap = swap;
  }
  return out;
}

}  // namespace bonsai
