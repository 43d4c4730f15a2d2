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

#include "bonsai/mapping.hpp"
#include "bonsai/tree.hpp"

namespace bonsai {

/// The paradigmatic fermion-to-qubit mappings, realised as ternary trees.
enum class MappingKind {
  JordanWigner,     // path with Z links: weight-O(n) strings, fully localised
  Parity,           // path with X links: weight-O(n), delocalisation (1,..,1,0)
  BravyiKitaev,     // complete binary tree, X/Y links: O(log2 n) weight
  BalancedTernary,  // complete ternary tree: optimal O(log3 n) weight
};

/// The labelled ternary tree realising a classic mapping on n modes.
QubitTree classic_tree(MappingKind kind, int n);

/// pair_modes applied to classic_tree.
MajoranaMapping classic_mapping(MappingKind kind, int n,
                                bool real_variant = false);

/// Built-in worked examples and stress fixtures.
enum class FixtureKind {
  ExampleTree11,       // 11-qubit labelled tree used in the documentation
  HeavyHex37Tree,      // unlabelled spanning-tree structure of the 37-qubit
                       // heavy-hexagon device (label it with a strategy)
  Exotic3NTO,          // 4-mode mapping with triple non-trivial overlaps
  Exotic1NTONonTree,   // 3-mode 1-NTO mapping no labelled tree can produce
};

/// Labelled fixture trees (ExampleTree11 only).
QubitTree fixture_tree(FixtureKind kind);

/// Unlabelled fixture structures (HeavyHex37Tree only).
GrownTree fixture_structure(FixtureKind kind);

/// Fixture mappings: ExampleTree11 via pair_modes, the exotic fixtures as
/// hard-coded strings. HeavyHex37Tree requires a labelling strategy first;
/// requesting its mapping here throws.
MajoranaMapping fixture_mapping(FixtureKind kind);

}  // namespace bonsai
