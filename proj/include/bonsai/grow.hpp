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

#include "bonsai/mapping.hpp"
#include "bonsai/topology.hpp"
#include "bonsai/tree.hpp"

namespace bonsai {

enum class RootPolicy {
  Center,       // lowest-index vertex of minimum eccentricity
  DiameterEnd,  // first endpoint of the canonical diameter path
};

enum class Labelling {
  Homogeneous,    // free edges labelled X, then Y, then Z
  Heterogeneous,  // free edges labelled Z first (if unused), then X, then Y
};

struct GrowthConfig {
  /// Explicit root; when absent the root_policy picks one.
  std::optional<int> root;
  RootPolicy root_policy = RootPolicy::Center;
  /// Seed for the random neighbour choice during growth. Absent means the
  /// deterministic default rule (lowest index first). Every documented
  /// random choice is driven by this seed, so equal seeds give identical
  /// trees.
  std::optional<std::uint64_t> seed;
  Labelling labelling = Labelling::Homogeneous;
};

/// Grow a degree-constrained spanning tree on the device graph: layered
/// greedy growth from the root, each node adopting up to three unassigned
/// neighbours (lowest-index first, or seeded uniform choice); vertices the
/// sweep cannot reach ("stragglers") are attached afterwards, one at a time
/// in ascending order, to the nearest node that still has a free child slot
/// (ties to the lowest index). Attachments that are not device edges are
/// recorded as virtual edges. Throws std::invalid_argument for an
/// out-of-range root.
GrownTree grow_tree(const HardwareGraph& g, const GrowthConfig& cfg = {});

/// Label a grown tree: the deepest root-to-leaf path (ties to the largest
/// leaf index) is labelled all-Z, then every node's remaining downward edges
/// take labels by strategy preference - homogeneous X, Y, Z; heterogeneous
/// Z (when still free), X, Y - with the chosen labels assigned to the
/// node's unlabelled children in ascending (child index, label) order.
/// The unused labels become legs.
QubitTree label_tree(const GrownTree& tree, Labelling strategy);

/// Same, after erasing the labels of an already-labelled tree.
QubitTree label_tree(const QubitTree& tree, Labelling strategy);

/// The full pipeline: grow, label, and pair into a Majorana mapping. The
/// result carries the source tree and any virtual edges.
MajoranaMapping bonsai(const HardwareGraph& g, const GrowthConfig& cfg = {});

}  // namespace bonsai
