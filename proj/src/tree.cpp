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

#include "bonsai/tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bonsai {

namespace {

constexpr std::array<Pauli, 3> kLinkOrder = {Pauli::X, Pauli::Y, Pauli::Z};

int link_index(Pauli label) {
  switch (label) {
    case Pauli::X: return 0;
    case Pauli::Y: return 1;
    case Pauli::Z: return 2;
    default:
      throw std::invalid_argument("tree link label must be X, Y or Z");
  }
}

}  // namespace

std::vector<std::string> validate_tree(int n_qubits, int root,
                                       const std::vector<TreeEdge>& edges) {
  std::vector<std::string> issues;
  if (n_qubits < 1) {
    issues.push_back("tree must have at least one qubit");
    return issues;
  }
  if (root < 0 || root >= n_qubits) {
    std::ostringstream msg;
    msg << "root " << root << " out of range [0, " << n_qubits << ")";
    issues.push_back(msg.str());
    return issues;
  }
  if (edges.size() != static_cast<std::size_t>(n_qubits) - 1) {
    std::ostringstream msg;
    msg << "expected " << n_qubits - 1 << " edges for " << n_qubits
        << " qubits, got " << edges.size();
    issues.push_back(msg.str());
  }

  std::vector<std::array<bool, 3>> link_used(n_qubits, {false, false, false});
  std::vector<int> parent(n_qubits, -1);
  std::vector<std::vector<int>> children(n_qubits);
  bool structure_ok = true;
  for (const TreeEdge& e : edges) {
    if (e.parent < 0 || e.parent >= n_qubits || e.child < 0 || e.child >= n_qubits) {
      std::ostringstream msg;
      msg << "edge " << e.parent << "->" << e.child << " references a qubit out of range";
      issues.push_back(msg.str());
      structure_ok = false;
      continue;
    }
    if (e.label == Pauli::I) {
      std::ostringstream msg;
      msg << "edge " << e.parent << "->" << e.child << " has identity label";
      issues.push_back(msg.str());
      structure_ok = false;
      continue;
    }
    if (link_used[e.parent][link_index(e.label)]) {
      std::ostringstream msg;
      msg << "node " << e.parent << " has two children on link " << pauli_char(e.label);
      issues.push_back(msg.str());
      structure_ok = false;
      continue;
    }
    link_used[e.parent][link_index(e.label)] = true;
    if (e.child == root) {
      std::ostringstream msg;
      msg << "root " << root << " appears as a child";
      issues.push_back(msg.str());
      structure_ok = false;
      continue;
    }
    if (parent[e.child] != -1) {
      std::ostringstream msg;
      msg << "node " << e.child << " has two parents";
      issues.push_back(msg.str());
      structure_ok = false;
      continue;
    }
    parent[e.child] = e.parent;
    children[e.parent].push_back(e.child);
  }
  if (!structure_ok) return issues;

  // Reachability from the root; with single parents and the root excluded as
  // a child, full reachability also rules out cycles.
  std::vector<bool> seen(n_qubits, false);
  std::vector<int> stack = {root};
  seen[root] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int c : children[u]) {
      if (!seen[c]) {
        seen[c] = true;
        stack.push_back(c);
      }
    }
  }
  for (int u = 0; u < n_qubits; ++u) {
    if (!seen[u]) {
      std::ostringstream msg;
      msg << "node " << u << " is not reachable from the root";
      issues.push_back(msg.str());
    }
  }
  return issues;
}

QubitTree::QubitTree(int n_qubits, int root, const std::vector<TreeEdge>& edges)
    : n_qubits_(n_qubits), root_(root) {
  const auto issues = validate_tree(n_qubits, root, edges);
  if (!issues.empty()) {
    std::ostringstream msg;
    msg << "invalid tree:";
    for (const auto& issue : issues) msg << ' ' << issue << ';';
    throw std::invalid_argument(msg.str());
  }
  children_.assign(n_qubits_, {-1, -1, -1});
  parent_.assign(n_qubits_, -1);
  parent_label_.assign(n_qubits_, Pauli::I);
  for (const TreeEdge& e : edges) {
    children_[e.parent][link_index(e.label)] = e.child;
    parent_[e.child] = e.parent;
    parent_label_[e.child] = e.label;
  }
  depth_.assign(n_qubits_, 0);
  std::vector<int> stack = {root_};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int c : children_[u]) {
      if (c >= 0) {
        depth_[c] = depth_[u] + 1;
        stack.push_back(c);
      }
    }
  }
}

std::optional<int> QubitTree::child(int node, Pauli label) const {
  if (node < 0 || node >= n_qubits_) {
    throw std::invalid_argument("tree node index out of range");
  }
  const int c = children_[node][link_index(label)];
  if (c < 0) return std::nullopt;
  return c;
}

std::optional<std::pair<int, Pauli>> QubitTree::parent_edge(int node) const {
  if (node < 0 || node >= n_qubits_) {
    throw std::invalid_argument("tree node index out of range");
  }
  if (node == root_) return std::nullopt;
  return std::make_pair(parent_[node], parent_label_[node]);
}

std::vector<std::pair<Pauli, int>> QubitTree::children(int node) const {
  if (node < 0 || node >= n_qubits_) {
    throw std::invalid_argument("tree node index out of range");
  }
  std::vector<std::pair<Pauli, int>> out;
  for (Pauli label : kLinkOrder) {
    const int c = children_[node][link_index(label)];
    if (c >= 0) out.emplace_back(label, c);
  }
  return out;
}

std::vector<TreeEdge> QubitTree::edges() const {
  std::vector<TreeEdge> out;
  for (int u = 0; u < n_qubits_; ++u) {
    for (Pauli label : kLinkOrder) {
      const int c = children_[u][link_index(label)];
      if (c >= 0) out.push_back({u, c, label});
    }
  }
  return out;
}

int QubitTree::node_depth(int node) const {
  if (node < 0 || node >= n_qubits_) {
    throw std::invalid_argument("tree node index out of range");
  }
  return depth_[node];
}

int QubitTree::depth() const {
  return *std::max_element(depth_.begin(), depth_.end());
}

std::vector<Leg> QubitTree::legs() const {
  std::vector<Leg> out;
  for (int u = 0; u < n_qubits_; ++u) {
    for (Pauli label : kLinkOrder) {
      if (children_[u][link_index(label)] < 0) out.push_back({u, label});
    }
  }
  return out;
}

PauliString QubitTree::leg_string(const Leg& leg) const {
  if (leg.node < 0 || leg.node >= n_qubits_) {
    throw std::invalid_argument("leg node index out of range");
  }
  if (leg.label == Pauli::I) {
    throw std::invalid_argument("leg label must be X, Y or Z");
  }
  if (children_[leg.node][link_index(leg.label)] >= 0) {
    throw std::invalid_argument("link is not a leg: it leads to a child");
  }
  PauliString s(static_cast<std::size_t>(n_qubits_));
  s.set_factor(static_cast<std::size_t>(leg.node), leg.label);
  int u = leg.node;
  while (u != root_) {
    const int p = parent_[u];
    s.set_factor(static_cast<std::size_t>(p), parent_label_[u]);
    u = p;
  }
  return s;
}

QubitTree::AllStrings QubitTree::all_strings() const {
  AllStrings out;
  const auto all_legs = legs();
  out.strings.reserve(all_legs.size());
  for (const Leg& leg : all_legs) out.strings.push_back(leg_string(leg));
  // The all-Z leg is the one reached from the root by Z links alone.
  int u = root_;
  while (children_[u][link_index(Pauli::Z)] >= 0) u = children_[u][link_index(Pauli::Z)];
  const Leg all_z{u, Pauli::Z};
  out.all_z_index = 0;
  for (std::size_t i = 0; i < all_legs.size(); ++i) {
    if (all_legs[i] == all_z) {
      out.all_z_index = i;
      break;
    }
  }
  return out;
}

int GrownTree::depth() const {
  std::vector<int> depth(n_qubits, 0);
  int best = 0;
  std::vector<int> stack = {root};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int c : children[u]) {
      depth[c] = depth[u] + 1;
      best = std::max(best, depth[c]);
      stack.push_back(c);
    }
  }
  return best;
}

std::vector<std::string> GrownTree::validate() const {
  std::vector<std::string> issues;
  if (n_qubits < 1) {
    issues.push_back("tree must have at least one qubit");
    return issues;
  }
  if (root < 0 || root >= n_qubits) {
    issues.push_back("root out of range");
    return issues;
  }
  if (parent.size() != static_cast<std::size_t>(n_qubits) ||
      children.size() != static_cast<std::size_t>(n_qubits)) {
    issues.push_back("parent/children arrays must have one entry per qubit");
    return issues;
  }
  for (int u = 0; u < n_qubits; ++u) {
    if (children[u].size() > 3) {
      std::ostringstream msg;
      msg << "node " << u << " has " << children[u].size() << " children (max 3)";
      issues.push_back(msg.str());
    }
    for (int c : children[u]) {
      if (c < 0 || c >= n_qubits || parent[c] != u) {
        std::ostringstream msg;
        msg << "child list of node " << u << " disagrees with parent array";
        issues.push_back(msg.str());
        break;
      }
    }
  }
  if (parent[root] != -1) issues.push_back("root must have parent -1");
  std::vector<bool> seen(n_qubits, false);
  std::vector<int> stack = {root};
  seen[root] = true;
  int visited = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int c : children[u]) {
      if (c >= 0 && c < n_qubits && !seen[c]) {
        seen[c] = true;
        ++visited;
        stack.push_back(c);
      }
    }
  }
  if (visited != n_qubits) issues.push_back("not all nodes reachable from the root");
  return issues;
}

}  // namespace bonsai
