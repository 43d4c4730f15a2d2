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

#include "bonsai/grow.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace bonsai {

namespace {

int pick_root(const HardwareGraph& g, const GrowthConfig& cfg) {
  if (cfg.root) {
    if (*cfg.root < 0 || *cfg.root >= g.n_vertices()) {
      throw std::invalid_argument("root out of range");
    }
    return *cfg.root;
  }
  if (cfg.root_policy == RootPolicy::DiameterEnd) {
    return g.diameter_path().front();
  }
  return g.center().front();
}

}  // namespace

GrownTree grow_tree(const HardwareGraph& g, const GrowthConfig& cfg) {
  const int n = g.n_vertices();
  const int root = pick_root(g, cfg);

  GrownTree tree;
  tree.n_qubits = n;
  tree.root = root;
  tree.parent.assign(n, -1);
  tree.children.assign(n, {});

  std::vector<char> assigned(n, 0);
  assigned[root] = 1;

  std::optional<std::mt19937_64> rng;
  if (cfg.seed) rng.emplace(*cfg.seed);

  std::vector<int> layer{root};
  while (!layer.empty()) {
    std::vector<int> next;
    for (int u : layer) {
      std::vector<int> candidates;
      for (int w : g.neighbours(u)) {
        if (!assigned[w]) candidates.push_back(w);
      }
      while (static_cast<int>(tree.children[u].size()) < 3 &&
             !candidates.empty()) {
        std::size_t pick = 0;
        if (rng) {
          std::uniform_int_distribution<std::size_t> dist(
              0, candidates.size() - 1);
          pick = dist(*rng);
        }
        const int c = candidates[pick];
        candidates.erase(candidates.begin() +
                         static_cast<std::ptrdiff_t>(pick));
        assigned[c] = 1;
        tree.parent[c] = u;
        tree.children[u].push_back(c);
        next.push_back(c);
      }
      std::sort(tree.children[u].begin(), tree.children[u].end());
    }
    layer = std::move(next);
  }

  // Vertices the layered sweep could not reach: every neighbour was already
  // assigned by a saturated node. Attach each, ascending, to the nearest
  // node with a free child slot (ties to the lowest index); non-device
  // attachments become virtual edges.
  for (int s = 0; s < n; ++s) {
    if (assigned[s]) continue;
    int best = -1;
    int best_d = std::numeric_limits<int>::max();
    for (int a = 0; a < n; ++a) {
      if (!assigned[a] || static_cast<int>(tree.children[a].size()) >= 3) {
        continue;
      }
      const int d = g.distance(s, a);
      if (d < best_d) {
        best_d = d;
        best = a;
      }
    }
    assigned[s] = 1;
    tree.parent[s] = best;
    auto& siblings = tree.children[best];
    siblings.insert(std::lower_bound(siblings.begin(), siblings.end(), s), s);
    if (!g.has_edge(best, s)) tree.virtual_edges.emplace_back(best, s);
  }
  return tree;
}

QubitTree label_tree(const GrownTree& tree, Labelling strategy) {
  const auto issues = tree.validate();
  if (!issues.empty()) {
    throw std::invalid_argument("cannot label an invalid tree: " +
                                issues.front());
  }
  const int n = tree.n_qubits;

  std::vector<int> depth(n, 0);
  std::vector<int> order{tree.root};
  order.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int c : tree.children[order[i]]) {
      depth[c] = depth[order[i]] + 1;
      order.push_back(c);
    }
  }

  // The all-Z spine runs to a deepest leaf, ties broken towards the largest
  // index.
  int endpoint = tree.root;
  for (int v = 0; v < n; ++v) {
    if (depth[v] > depth[endpoint] ||
        (depth[v] == depth[endpoint] && v > endpoint)) {
      endpoint = v;
    }
  }

  std::vector<Pauli> edge_label(static_cast<std::size_t>(n), Pauli::I);
  for (int v = endpoint; v != tree.root; v = tree.parent[v]) {
    edge_label[v] = Pauli::Z;
  }

  for (int u : order) {
    std::vector<int> unlabelled;
    bool z_used = false;
    for (int c : tree.children[u]) {
      if (edge_label[c] == Pauli::Z) z_used = true;
      if (edge_label[c] == Pauli::I) unlabelled.push_back(c);
    }
    if (unlabelled.empty()) continue;
    const std::vector<Pauli> prefs =
        strategy == Labelling::Homogeneous
            ? std::vector<Pauli>{Pauli::X, Pauli::Y, Pauli::Z}
            : std::vector<Pauli>{Pauli::Z, Pauli::X, Pauli::Y};
    std::vector<Pauli> picked;
    for (Pauli p : prefs) {
      if (picked.size() == unlabelled.size()) break;
      if (p == Pauli::Z && z_used) continue;
      picked.push_back(p);
    }
    std::sort(picked.begin(), picked.end(), [](Pauli a, Pauli b) {
      return static_cast<int>(a) < static_cast<int>(b);
    });
    for (std::size_t i = 0; i < unlabelled.size(); ++i) {
      edge_label[unlabelled[i]] = picked[i];
    }
  }

  std::vector<TreeEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int v = 0; v < n; ++v) {
    if (v == tree.root) continue;
    edges.push_back({tree.parent[v], v, edge_label[v]});
  }
  return QubitTree(n, tree.root, edges);
}

QubitTree label_tree(const QubitTree& tree, Labelling strategy) {
  GrownTree erased;
  erased.n_qubits = tree.n_qubits();
  erased.root = tree.root();
  erased.parent.assign(static_cast<std::size_t>(tree.n_qubits()), -1);
  erased.children.assign(static_cast<std::size_t>(tree.n_qubits()), {});
  for (const TreeEdge& e : tree.edges()) {
    erased.parent[e.child] = e.parent;
    erased.children[e.parent].push_back(e.child);
  }
  for (auto& siblings : erased.children) {
    std::sort(siblings.begin(), siblings.end());
  }
  return label_tree(erased, strategy);
}

MajoranaMapping bonsai(const HardwareGraph& g, const GrowthConfig& cfg) {
  const GrownTree grown = grow_tree(g, cfg);
  const QubitTree tree = label_tree(grown, cfg.labelling);
  MajoranaMapping mapping = pair_modes(tree);
  mapping.virtual_edges = grown.virtual_edges;
  return mapping;
}

}  // namespace bonsai
