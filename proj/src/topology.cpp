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

#include "bonsai/topology.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bonsai {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

}  // namespace

// --- HardwareGraph -------------------------------------------------------

HardwareGraph::HardwareGraph(int n_vertices,
                             std::vector<std::pair<int, int>> edge_list)
    : n_(n_vertices), cache_(std::make_shared<Cache>()) {
  if (n_ < 1) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  for (auto& [u, v] : edge_list) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      std::ostringstream msg;
      msg << "edge (" << u << ", " << v << ") out of range for " << n_
          << " vertices";
      throw std::invalid_argument(msg.str());
    }
    if (u == v) {
      std::ostringstream msg;
      msg << "self-loop at vertex " << u;
      throw std::invalid_argument(msg.str());
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  const auto dup = std::adjacent_find(edge_list.begin(), edge_list.end());
  if (dup != edge_list.end()) {
    std::ostringstream msg;
    msg << "duplicate edge (" << dup->first << ", " << dup->second << ")";
    throw std::invalid_argument(msg.str());
  }
  edges_ = std::move(edge_list);
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

  // Connectivity.
  std::vector<char> seen(n_, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != n_) {
    throw std::invalid_argument("graph is not connected");
  }
}

const std::vector<int>& HardwareGraph::neighbours(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  return adj_[v];
}

int HardwareGraph::degree(int v) const {
  return static_cast<int>(neighbours(v).size());
}

bool HardwareGraph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw std::invalid_argument("vertex out of range");
  }
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<int> HardwareGraph::distances_from(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  std::vector<int> dist(n_, kInf);
  std::deque<int> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : adj_[u]) {
      if (dist[w] == kInf) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

const HardwareGraph::Metrics& HardwareGraph::metrics() const {
  std::call_once(cache_->once, [this] {
    auto data = std::make_unique<Metrics>();
    data->dist.reserve(n_);
    for (int v = 0; v < n_; ++v) data->dist.push_back(distances_from(v));
    data->ecc.resize(n_);
    for (int v = 0; v < n_; ++v) {
      data->ecc[v] = *std::max_element(data->dist[v].begin(), data->dist[v].end());
    }
    const int diam = *std::max_element(data->ecc.begin(), data->ecc.end());
    // Lexicographically smallest endpoint pair realising the diameter.
    int a = -1, b = -1;
    for (int u = 0; u < n_ && a < 0; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (data->dist[u][v] == diam) {
          a = u;
          b = v;
          break;
        }
      }
    }
    if (a < 0) {
      a = b = 0;  // single vertex: diameter 0
    }
    data->path.push_back(a);
    int cur = a;
    while (cur != b) {
      for (int w : adj_[cur]) {
        if (data->dist[w][b] == data->dist[cur][b] - 1) {
          data->path.push_back(w);
          cur = w;
          break;
        }
      }
    }
    cache_->data = std::move(data);
  });
  return *cache_->data;
}

int HardwareGraph::distance(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw std::invalid_argument("vertex out of range");
  }
  return metrics().dist[u][v];
}

const std::vector<int>& HardwareGraph::eccentricities() const {
  return metrics().ecc;
}

int HardwareGraph::radius() const {
  const auto& ecc = eccentricities();
  return *std::min_element(ecc.begin(), ecc.end());
}

int HardwareGraph::diameter() const {
  const auto& ecc = eccentricities();
  return *std::max_element(ecc.begin(), ecc.end());
}

std::vector<int> HardwareGraph::center() const {
  const auto& ecc = eccentricities();
  const int r = radius();
  std::vector<int> out;
  for (int v = 0; v < n_; ++v) {
    if (ecc[v] == r) out.push_back(v);
  }
  return out;
}

const std::vector<int>& HardwareGraph::diameter_path() const {
  return metrics().path;
}

// --- Generators ----------------------------------------------------------

namespace {

// The published 37-qubit device: three hexagonal sub-units sharing a central
// degree-3 qubit. Spelled as a BFS spanning tree plus the three edges that
// close the hexagon cycles.
HardwareGraph heavy_hexagon_37() {
  std::vector<std::pair<int, int>> edges = {
      {0, 1},   {0, 2},   {0, 3},   {1, 4},   {2, 5},   {3, 6},
      {4, 7},   {4, 8},   {5, 9},   {5, 10},  {6, 11},  {6, 12},
      {7, 13},  {8, 14},  {9, 15},  {10, 16}, {11, 17}, {12, 18},
      {13, 19}, {13, 20}, {14, 21}, {14, 22}, {15, 23}, {15, 24},
      {16, 25}, {16, 26}, {17, 27}, {17, 28}, {18, 29}, {18, 30},
      {22, 31}, {26, 32}, {30, 33}, {31, 34}, {32, 35}, {33, 36},
      // cycle closures
      {21, 32}, {25, 33}, {29, 31}};
  return HardwareGraph(37, std::move(edges));
}

// Abstract vertex keys for the honeycomb patch builder. Corners come in two
// classes per cell: N (top) and S (bottom); every other corner of a hexagon
// is the N or S corner of a neighbouring cell.
using Key = std::vector<int>;

Key corner_key(int kind, int q, int r) { return {0, kind, q, r}; }

Key bridge_key(const Key& a, const Key& b) {
  const Key& lo = std::min(a, b);
  const Key& hi = std::max(a, b);
  Key k{1};
  k.insert(k.end(), lo.begin() + 1, lo.end());
  k.insert(k.end(), hi.begin() + 1, hi.end());
  return k;
}

// Planar heavy-hexagon patch: k-1 cell rings grown around the three cells
// that share the corner N(0,0); corner-corner links subdivided by an edge
// qubit; each missing corner slot filled with a boundary stub qubit.
HardwareGraph heavy_hexagon_patch(int k) {
  std::set<std::pair<int, int>> cells = {{0, 0}, {0, 1}, {-1, 1}};
  std::vector<std::pair<int, int>> frontier(cells.begin(), cells.end());
  static const int kDirs[6][2] = {{1, 0},  {-1, 0}, {0, 1},
                                  {0, -1}, {1, -1}, {-1, 1}};
  for (int ring = 1; ring < k; ++ring) {
    std::vector<std::pair<int, int>> next;
    for (const auto& [q, r] : frontier) {
      for (const auto& d : kDirs) {
        const std::pair<int, int> c{q + d[0], r + d[1]};
        if (cells.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }

  // Corner cycle of cell (q, r), clockwise from the top corner.
  const auto cell_corners = [](int q, int r) {
    return std::vector<Key>{corner_key(0, q, r),         // N(q, r)
                            corner_key(1, q, r + 1),     // S(q, r+1)
                            corner_key(0, q + 1, r - 1),  // N(q+1, r-1)
                            corner_key(1, q, r),         // S(q, r)
                            corner_key(0, q, r - 1),     // N(q, r-1)
                            corner_key(1, q - 1, r + 1)};  // S(q-1, r+1)
  };

  std::set<std::pair<Key, Key>> corner_edges;
  std::set<Key> corners;
  for (const auto& [q, r] : cells) {
    const auto ring = cell_corners(q, r);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Key& a = ring[i];
      const Key& b = ring[(i + 1) % ring.size()];
      corners.insert(a);
      corner_edges.insert({std::min(a, b), std::max(a, b)});
    }
  }

  std::map<Key, std::set<Key>> adj;
  std::map<Key, int> corner_degree;
  for (const auto& [a, b] : corner_edges) {
    const Key m = bridge_key(a, b);
    adj[a].insert(m);
    adj[m].insert(a);
    adj[b].insert(m);
    adj[m].insert(b);
    ++corner_degree[a];
    ++corner_degree[b];
  }
  for (const Key& c : corners) {
    const int missing = 3 - corner_degree[c];
    for (int slot = 0; slot < missing; ++slot) {
      Key stub{2};
      stub.insert(stub.end(), c.begin() + 1, c.end());
      stub.push_back(slot);
      adj[c].insert(stub);
      adj[stub].insert(c);
    }
  }

  // Canonical numbering: BFS from the central corner, neighbours in key
  // order.
  const Key origin = corner_key(0, 0, 0);
  std::map<Key, int> id;
  std::deque<Key> queue{origin};
  id[origin] = 0;
  while (!queue.empty()) {
    const Key v = queue.front();
    queue.pop_front();
    for (const Key& w : adj[v]) {
      if (id.emplace(w, static_cast<int>(id.size())).second) {
        queue.push_back(w);
      }
    }
  }

  std::vector<std::pair<int, int>> edges;
  for (const auto& [v, nbrs] : adj) {
    for (const Key& w : nbrs) {
      if (v < w) edges.emplace_back(id.at(v), id.at(w));
    }
  }
  return HardwareGraph(static_cast<int>(id.size()), std::move(edges));
}

}  // namespace

HardwareGraph heavy_hexagon(int k) {
  if (k < 1) throw std::invalid_argument("heavy_hexagon needs k >= 1");
  if (k == 1) return heavy_hexagon_37();
  return heavy_hexagon_patch(k);
}

HardwareGraph linear_chain(int n) {
  if (n < 1) throw std::invalid_argument("linear_chain needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return HardwareGraph(n, std::move(edges));
}

HardwareGraph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star_graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return HardwareGraph(n, std::move(edges));
}

HardwareGraph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("grid_graph needs rows, cols >= 1");
  }
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return HardwareGraph(rows * cols, std::move(edges));
}

HardwareGraph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return HardwareGraph(n, std::move(edges));
}

// --- Steiner trees -------------------------------------------------------

namespace {

// Deterministic shortest path from a to b: lowest-index neighbour that still
// shortens the remaining distance.
std::vector<int> walk_path(const HardwareGraph& g, int a, int b) {
  std::vector<int> path{a};
  int cur = a;
  while (cur != b) {
    for (int w : g.neighbours(cur)) {
      if (g.distance(w, b) == g.distance(cur, b) - 1) {
        path.push_back(w);
        cur = w;
        break;
      }
    }
  }
  return path;
}

bool induces_connected(const HardwareGraph& g, const std::vector<int>& nodes) {
  std::set<int> in(nodes.begin(), nodes.end());
  std::set<int> seen{nodes.front()};
  std::deque<int> queue{nodes.front()};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbours(v)) {
      if (in.count(w) && seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen.size() == in.size();
}

// Exact minimal Steiner tree by dynamic programming over terminal subsets:
// dp[mask][v] = fewest edges of a tree containing terminals(mask) and v,
// built by merging sub-trees at v and relaxing along graph edges.
SteinerResult steiner_exact(const HardwareGraph& g,
                            const std::vector<int>& terminals) {
  const int n = g.n_vertices();
  const int t = static_cast<int>(terminals.size());
  const int full = (1 << t) - 1;
  struct Back {
    int kind = 0;  // 0 leaf, 1 edge step from vertex a, 2 merge of submask a
    int a = -1;
  };
  std::vector<std::vector<int>> dp(full + 1, std::vector<int>(n, kInf));
  std::vector<std::vector<Back>> back(full + 1, std::vector<Back>(n));
  for (int i = 0; i < t; ++i) dp[1 << i][terminals[i]] = 0;

  using State = std::pair<int, int>;  // (cost, vertex)
  for (int mask = 1; mask <= full; ++mask) {
    for (int sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
      const int rest = mask ^ sub;
      if (sub < rest) continue;  // each split once
      for (int v = 0; v < n; ++v) {
        if (dp[sub][v] == kInf || dp[rest][v] == kInf) continue;
        const int cost = dp[sub][v] + dp[rest][v];
        if (cost < dp[mask][v]) {
          dp[mask][v] = cost;
          back[mask][v] = {2, sub};
        }
      }
    }
    std::priority_queue<State, std::vector<State>, std::greater<State>> heap;
    for (int v = 0; v < n; ++v) {
      if (dp[mask][v] < kInf) heap.emplace(dp[mask][v], v);
    }
    while (!heap.empty()) {
      const auto [cost, v] = heap.top();
      heap.pop();
      if (cost != dp[mask][v]) continue;
      for (int w : g.neighbours(v)) {
        if (cost + 1 < dp[mask][w]) {
          dp[mask][w] = cost + 1;
          back[mask][w] = {1, v};
          heap.emplace(cost + 1, w);
        }
      }
    }
  }

  int best_v = 0;
  for (int v = 1; v < n; ++v) {
    if (dp[full][v] < dp[full][best_v]) best_v = v;
  }

  std::set<int> nodes;
  std::vector<std::pair<int, int>> stack{{full, best_v}};
  while (!stack.empty()) {
    const auto [mask, v] = stack.back();
    stack.pop_back();
    nodes.insert(v);
    const Back& b = back[mask][v];
    if (b.kind == 1) {
      stack.emplace_back(mask, b.a);
    } else if (b.kind == 2) {
      stack.emplace_back(b.a, v);
      stack.emplace_back(mask ^ b.a, v);
    }
  }

  SteinerResult result;
  result.terminals = terminals;
  result.nodes.assign(nodes.begin(), nodes.end());
  result.overhead = static_cast<int>(result.nodes.size()) - t;
  return result;
}

// 2-approximation: spanning tree of the metric closure over the terminals
// (Prim), edges expanded to shortest paths, then non-terminal dangling nodes
// pruned.
SteinerResult steiner_approx(const HardwareGraph& g,
                             const std::vector<int>& terminals) {
  const int t = static_cast<int>(terminals.size());
  std::vector<char> in_tree(t, 0);
  std::vector<int> best_d(t, kInf), best_from(t, terminals[0]);
  in_tree[0] = 1;
  for (int i = 1; i < t; ++i) {
    best_d[i] = g.distance(terminals[0], terminals[i]);
  }

  std::set<std::pair<int, int>> tree_edges;
  std::set<int> nodes(terminals.begin(), terminals.end());
  for (int step = 1; step < t; ++step) {
    int pick = -1;
    for (int i = 0; i < t; ++i) {
      if (!in_tree[i] && (pick < 0 || best_d[i] < best_d[pick])) pick = i;
    }
    const auto path = walk_path(g, best_from[pick], terminals[pick]);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      nodes.insert(path[i]);
      nodes.insert(path[i + 1]);
      tree_edges.insert({std::min(path[i], path[i + 1]),
                         std::max(path[i], path[i + 1])});
    }
    in_tree[pick] = 1;
    for (int i = 0; i < t; ++i) {
      if (in_tree[i]) continue;
      const int d = g.distance(terminals[pick], terminals[i]);
      if (d < best_d[i]) {
        best_d[i] = d;
        best_from[i] = terminals[pick];
      }
    }
  }

  // Prune non-terminal dangling nodes.
  const std::set<int> term_set(terminals.begin(), terminals.end());
  std::map<int, std::set<int>> deg;
  for (const auto& [u, v] : tree_edges) {
    deg[u].insert(v);
    deg[v].insert(u);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = nodes.begin(); it != nodes.end();) {
      const int v = *it;
      if (!term_set.count(v) && deg[v].size() <= 1) {
        for (int w : deg[v]) deg[w].erase(v);
        deg.erase(v);
        it = nodes.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }

  SteinerResult result;
  result.terminals = terminals;
  result.nodes.assign(nodes.begin(), nodes.end());
  result.overhead = static_cast<int>(result.nodes.size()) - t;
  return result;
}

}  // namespace

SteinerResult steiner_cost(const HardwareGraph& g,
                           const std::vector<int>& support) {
  if (support.empty()) {
    throw std::invalid_argument("steiner_cost needs a nonempty support");
  }
  std::vector<int> terminals = support;
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()),
                  terminals.end());
  if (terminals.front() < 0 || terminals.back() >= g.n_vertices()) {
    throw std::invalid_argument("support vertex out of range");
  }
  if (terminals.size() == 1 || induces_connected(g, terminals)) {
    SteinerResult result;
    result.terminals = terminals;
    result.nodes = terminals;
    result.overhead = 0;
    return result;
  }
  if (terminals.size() <= 10) return steiner_exact(g, terminals);
  return steiner_approx(g, terminals);
}

SwapCost excitation_cost(const MajoranaMapping& mapping,
                         const HardwareGraph& g,
                         const std::vector<int>& modes) {
  if (modes.size() != 2 && modes.size() != 4) {
    throw std::invalid_argument("excitation_cost takes 2 or 4 modes");
  }
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (modes[i] < 0 || modes[i] >= mapping.n_modes) {
      throw std::invalid_argument("mode index out of range");
    }
    for (std::size_t j = i + 1; j < modes.size(); ++j) {
      if (modes[i] == modes[j]) {
        throw std::invalid_argument("excitation modes must be distinct");
      }
    }
  }
  if (g.n_vertices() != mapping.n_qubits()) {
    throw std::invalid_argument("graph size must match the mapping");
  }

  SwapCost cost;
  const std::size_t combos = std::size_t{1} << modes.size();
  for (std::size_t pick = 0; pick < combos; ++pick) {
    // Bit b of `pick` selects even (0) or odd (1) for modes[b]; iteration
    // order is lexicographic with even before odd.
    PauliString op = PauliString::identity(mapping.n_qubits());
    for (std::size_t b = 0; b < modes.size(); ++b) {
      const bool odd = (pick >> (modes.size() - 1 - b)) & 1;
      op = op * (odd ? mapping.odd[modes[b]] : mapping.even[modes[b]]);
    }
    StringCost entry{op, {}, {}, 0};
    for (std::size_t u : op.support()) entry.support.push_back(static_cast<int>(u));
    if (!entry.support.empty()) {
      auto steiner = steiner_cost(g, entry.support);
      entry.steiner_nodes = std::move(steiner.nodes);
      entry.overhead = steiner.overhead;
    }
    cost.total_overhead += entry.overhead;
    cost.per_string.push_back(std::move(entry));
  }
  return cost;
}

}  // namespace bonsai
