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

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bonsai/mapping.hpp"
#include "bonsai/pauli.hpp"

namespace bonsai {

/// Result of the structural validity criteria for a Majorana mapping:
///   A: well-formed input (counts, widths, bijection);
///   B: all string pairs anticommute;
///   C: the strings are GF(2)-independent;
///   D: every lowering operator annihilates the vacuum candidate
///      (evaluated only when a candidate state is known).
/// String indices in witnesses refer to the flat order
/// [even_0, odd_0, even_1, odd_1, ...].
struct CriteriaReport {
  bool a_ok = false;
  bool b_ok = false;
  bool c_ok = false;
  std::optional<bool> d_ok;  // nullopt: no vacuum candidate available

  std::vector<std::string> a_issues;
  std::optional<std::pair<int, int>> b_witness;   // first commuting pair
  std::optional<std::vector<int>> c_witness;      // a dependent subset
  std::optional<int> d_witness;                   // first non-annihilating mode

  bool ok() const { return a_ok && b_ok && c_ok && d_ok.value_or(true); }
};

/// Evaluate criteria A-D. The vacuum candidate is taken from `vacuum` when
/// given; otherwise mappings with a source tree use the all-zeros state, and
/// criterion D is left unevaluated for the rest.
CriteriaReport check_mapping(const MajoranaMapping& mapping,
                             const std::optional<BitVec>& vacuum = std::nullopt);

/// Largest number of sites where any two strings of the mapping act both
/// non-trivially and differently. Tree mappings give 1.
int classify_nto(const MajoranaMapping& mapping);

/// Dense-matrix reference implementation of the mode operators, for
/// cross-checking the symbolic algebra at small qubit counts.
class DenseOracle {
 public:
  using Complex = std::complex<double>;
  using Matrix = std::vector<Complex>;  // row-major, dim x dim
  using Vector = std::vector<Complex>;

  /// Dense 2^n x 2^n matrix of a Pauli string. Requires n_qubits <= 12.
  static Matrix matrix(const PauliString& s);

  /// Apply a Pauli string to a state vector of length 2^n.
  static Vector apply(const PauliString& s, const Vector& state);

  static Matrix identity(std::size_t dim);
  static Matrix mul(const Matrix& a, const Matrix& b, std::size_t dim);
  static Matrix add(const Matrix& a, const Matrix& b);
  static Matrix scale(Complex c, const Matrix& a);
  static Matrix adjoint(const Matrix& a, std::size_t dim);
  static double max_abs_diff(const Matrix& a, const Matrix& b);

  explicit DenseOracle(const MajoranaMapping& mapping);

  /// (even_j + i*odd_j)/2, the annihilation operator's image.
  Matrix lowering(int mode) const;
  /// (even_j - i*odd_j)/2, the creation operator's image.
  Matrix raising(int mode) const;

  std::size_t dim() const { return dim_; }

 private:
  const MajoranaMapping& mapping_;
  std::size_t dim_;
};

/// Dense cross-check of a mapping (n_qubits <= 4): canonical anticommutation
/// relations within `tol`, vacuum annihilation, and Fock basis images being
/// computational basis states (matching fock_to_bits when a source tree is
/// present).
struct OracleReport {
  bool car_ok = false;
  bool vacuum_ok = false;
  bool fock_ok = false;
  double max_car_residual = 0.0;
  double tol = 0.0;

  bool ok() const { return car_ok && vacuum_ok && fock_ok; }
};

OracleReport oracle_check(const MajoranaMapping& mapping, double tol = 1e-12);

}  // namespace bonsai
