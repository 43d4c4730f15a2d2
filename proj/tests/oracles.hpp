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
//
// Independent reference implementations used only by the test suite. They
// deliberately share no code with the library: Pauli algebra is done on
// character maps with an explicit complex phase, matrices are built by
// Kronecker products, and the combinatorial answers come from exhaustive
// enumeration.

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace testoracle {

using Complex = std::complex<double>;

// --- Character-map Pauli algebra -----------------------------------------

struct SymbolicPauli {
  Complex phase{1.0, 0.0};
  std::map<int, char> factors;  // qubit -> 'X' | 'Y' | 'Z'
};

// Parses the canonical text form: optional "+i" / "-" / "-i" prefix, then
// either "I" or space-separated letter+index factors in ascending order.
inline SymbolicPauli parse_symbolic(const std::string& text) {
  SymbolicPauli p;
  std::size_t pos = 0;
  if (text.rfind("+i", 0) == 0) {
    p.phase = Complex{0.0, 1.0};
    pos = 2;
  } else if (text.rfind("-i", 0) == 0) {
    p.phase = Complex{0.0, -1.0};
    pos = 2;
  } else if (!text.empty() && text[0] == '-') {
    p.phase = Complex{-1.0, 0.0};
    pos = 1;
  }
  std::istringstream in(text.substr(pos));
  std::string token;
  while (in >> token) {
    if (token == "I") continue;
    p.factors[std::stoi(token.substr(1))] = token[0];
  }
  return p;
}

// Single-qubit product a*b -> (phase, letter or 'I').
inline std::pair<Complex, char> single_product(char a, char b) {
  if (a == 'I') return {Complex{1.0, 0.0}, b};
  if (b == 'I') return {Complex{1.0, 0.0}, a};
  if (a == b) return {Complex{1.0, 0.0}, 'I'};
  static const std::string cycle = "XYZ";
  const int ia = static_cast<int>(cycle.find(a));
  const int ib = static_cast<int>(cycle.find(b));
  const char c = cycle[3 - ia - ib];
  // XY=iZ, YZ=iX, ZX=iY; reversed order conjugates the phase.
  const bool forward = (ib - ia + 3) % 3 == 1;
  return {forward ? Complex{0.0, 1.0} : Complex{0.0, -1.0}, c};
}

inline SymbolicPauli multiply(const SymbolicPauli& a, const SymbolicPauli& b) {
  SymbolicPauli c;
  c.phase = a.phase * b.phase;
  std::map<int, char> merged = a.factors;
  for (const auto& [qubit, letter] : b.factors) {
    const char existing =
        merged.count(qubit) != 0 ? merged[qubit] : 'I';
    const auto [phase, out] = single_product(existing, letter);
    c.phase *= phase;
    if (out == 'I') {
      merged.erase(qubit);
    } else {
      merged[qubit] = out;
    }
  }
  c.factors = merged;
  return c;
}

inline std::string render_symbolic(const SymbolicPauli& p) {
  std::ostringstream out;
  const double re = p.phase.real();
  const double im = p.phase.imag();
  if (im > 0.5) {
    out << "+i";
  } else if (im < -0.5) {
    out << "-i";
  } else if (re < -0.5) {
    out << "-";
  }
  if (p.factors.empty()) {
    out << "I";
    return out.str();
  }
  bool first = true;
  for (const auto& [qubit, letter] : p.factors) {
    if (!first) out << ' ';
    out << letter << qubit;
    first = false;
  }
  return out.str();
}

// Multiplies two canonical-text Pauli strings and renders the result in the
// same canonical text form.
inline std::string multiply_text(const std::string& a, const std::string& b) {
  return render_symbolic(multiply(parse_symbolic(a), parse_symbolic(b)));
}

// --- Kronecker-product matrices ------------------------------------------

using Matrix = std::vector<std::vector<Complex>>;

inline Matrix single_matrix(char letter) {
  const Complex one{1.0, 0.0};
  const Complex i{0.0, 1.0};
  switch (letter) {
    case 'X': return {{Complex{}, one}, {one, Complex{}}};
    case 'Y': return {{Complex{}, -i}, {i, Complex{}}};
    case 'Z': return {{one, Complex{}}, {Complex{}, -one}};
    default: return {{one, Complex{}}, {Complex{}, one}};
  }
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t ra = a.size(), ca = a[0].size();
  const std::size_t rb = b.size(), cb = b[0].size();
  Matrix out(ra * rb, std::vector<Complex>(ca * cb));
  for (std::size_t i = 0; i < ra; ++i) {
    for (std::size_t j = 0; j < ca; ++j) {
      for (std::size_t k = 0; k < rb; ++k) {
        for (std::size_t l = 0; l < cb; ++l) {
          out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
        }
      }
    }
  }
  return out;
}

// 2^n x 2^n matrix of a canonical-text Pauli string. Qubit 0 is the most
// significant bit of the basis index.
inline Matrix text_to_matrix(const std::string& text, int n_qubits) {
  const SymbolicPauli p = parse_symbolic(text);
  Matrix m = {{Complex{1.0, 0.0}}};
  for (int q = 0; q < n_qubits; ++q) {
    const char letter =
        p.factors.count(q) != 0 ? p.factors.at(q) : 'I';
    m = kron(m, single_matrix(letter));
  }
  for (auto& row : m) {
    for (auto& entry : row) entry *= p.phase;
  }
  return m;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    }
  }
  return worst;
}

// --- Exhaustive GF(2) dependency -----------------------------------------

// Each vector is a bit row; returns a nonempty subset XOR-summing to zero if
// one exists (smallest subset mask wins), nullopt when the family is
// independent. Usable for up to ~20 vectors.
inline std::optional<std::vector<int>> brute_force_dependency(
    const std::vector<std::vector<std::uint64_t>>& rows) {
  const int k = static_cast<int>(rows.size());
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::uint64_t> acc(rows.empty() ? 0 : rows[0].size(), 0);
    for (int i = 0; i < k; ++i) {
      if (((mask >> i) & 1u) == 0) continue;
      for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= rows[i][w];
    }
    if (std::all_of(acc.begin(), acc.end(),
                    [](std::uint64_t w) { return w == 0; })) {
      std::vector<int> subset;
      for (int i = 0; i < k; ++i) {
        if ((mask >> i) & 1u) subset.push_back(i);
      }
      return subset;
    }
  }
  return std::nullopt;
}

// --- Exhaustive Steiner trees --------------------------------------------

// Smallest connected vertex superset of `terminals` in an n-vertex graph
// (n <= ~16), found by scanning all vertex subsets. Returns |S| - |terminals|.
inline int brute_force_steiner_overhead(
    int n, const std::vector<std::pair<int, int>>& edges,
    std::vector<int> terminals) {
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()),
                  terminals.end());
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::uint32_t term_mask = 0;
  for (int t : terminals) term_mask |= 1u << t;

  int best = n + 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if ((mask & term_mask) != term_mask) continue;
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    // Connectivity of the induced subgraph, from the lowest member.
    const int start = __builtin_ctz(mask);
    std::uint32_t seen = 1u << start;
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int w : adj[v]) {
        const std::uint32_t bit = 1u << w;
        if ((mask & bit) != 0 && (seen & bit) == 0) {
          seen |= bit;
          frontier.push(w);
        }
      }
    }
    if (seen == mask) best = size;
  }
  return best - static_cast<int>(terminals.size());
}

}  // namespace testoracle
