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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bonsai/mapping.hpp"
#include "bonsai/topology.hpp"

namespace bonsai {

/// SWAP-overhead aggregates for a mapping laid out on a device graph.
struct SwapSummary {
  double singles_max = 0.0;   // over all mode pairs
  double singles_mean = 0.0;
  double doubles_max = 0.0;   // over sampled (or enumerated) mode quadruples
  double doubles_mean = 0.0;
  int doubles_samples = 0;
  bool doubles_exhaustive = false;
};

/// Aggregate quality metrics of a Majorana mapping.
struct MappingReport {
  int n_modes = 0;
  int n_qubits = 0;
  std::vector<int> weights;  // per string, [even_0, odd_0, even_1, ...]
  int weight_min = 0;
  double weight_mean = 0.0;
  int weight_max = 0;
  std::vector<int> deloc;  // per mode
  double deloc_mean = 0.0;
  /// Number of qubits whose occupation is read out locally: modes whose
  /// string pair is Z-prefix + X/Y at one qubit (for a tree mapping, exactly
  /// the qubits reaching the root through Z-labelled edges, root included).
  int h_z = 0;
  int nto_class = 0;
  std::optional<SwapSummary> swap;  // present when a device graph was given
  int virtual_edges = 0;
};

struct ReportOptions {
  /// Seed for the sampled double-excitation quadruples.
  std::uint64_t seed = 0;
  int double_samples = 200;
  /// Enumerate every mode quadruple instead of sampling (intended for
  /// n_modes <= 16).
  bool full_doubles = false;
};

/// Compute all metrics; the SWAP section only when `g` is given (it must
/// match the mapping's qubit count). Single-excitation overheads cover all
/// mode pairs; double-excitation overheads are sampled (or enumerated with
/// `full_doubles`).
MappingReport report(const MajoranaMapping& mapping,
                     const HardwareGraph* g = nullptr,
                     const ReportOptions& options = {});

}  // namespace bonsai
