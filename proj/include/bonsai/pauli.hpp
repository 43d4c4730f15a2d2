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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bonsai {

/// Dynamically sized bit vector backed by 64-bit words. Used for the X/Z
/// halves of a Pauli string and for symplectic (x|z) vectors over GF(2).
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n_bits) : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {}

  std::size_t size() const { return n_bits_; }

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }

  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  bool any() const;
  bool none() const { return !any(); }

  /// Number of set bits.
  std::size_t count() const;

  /// Index of the lowest set bit, or std::nullopt when empty.
  std::optional<std::size_t> first_set() const;

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  BitVec& operator|=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  bool operator==(const BitVec& other) const {
    return n_bits_ == other.n_bits_ && words_ == other.words_;
  }
  bool operator!=(const BitVec& other) const { return !(*this == other); }

  /// popcount(a & b) without materialising the intermediate vector.
  static std::size_t and_count(const BitVec& a, const BitVec& b);

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t n_bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Single-qubit Pauli factor.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
std::optional<Pauli> pauli_from_char(char c);

/// An n-qubit Pauli string with an explicit phase, value = i^phase_exp * F,
/// where F is the tensor product of the per-qubit factors (Y means the
/// literal Pauli Y). Factors are stored symplectically: qubit u carries X
/// iff x bit u is set, Z iff z bit u is set, Y iff both, I iff neither.
class PauliString {
 public:
  /// Identity on n qubits (phase 0).
  explicit PauliString(std::size_t n_qubits)
      : phase_exp_(0), x_(n_qubits), z_(n_qubits) {}

  static PauliString identity(std::size_t n_qubits) { return PauliString(n_qubits); }

  /// Single-factor string, e.g. single(5, Pauli::Y, 3) == Y_3 on 5 qubits.
  static PauliString single(std::size_t n_qubits, Pauli p, std::size_t qubit);

  /// Build from (qubit, factor) pairs; qubits must be distinct and in range.
  static PauliString from_factors(
      std::size_t n_qubits,
      const std::vector<std::pair<std::size_t, Pauli>>& factors,
      int phase_exp = 0);

  /// Parse the canonical text form produced by str(): an optional phase
  /// prefix "+i", "-" or "-i" followed by either "I" or space-separated
  /// factors such as "X0 Z1 Z2" with strictly ascending qubit indices.
  static PauliString parse(const std::string& text, std::size_t n_qubits);

  std::size_t n_qubits() const { return x_.size(); }

  /// Phase exponent k in {0,1,2,3}; the string's scalar prefactor is i^k.
  int phase_exp() const { return phase_exp_; }
  void set_phase_exp(int k);

  Pauli factor(std::size_t qubit) const;
  void set_factor(std::size_t qubit, Pauli p);

  /// Number of non-identity factors.
  std::size_t weight() const { return (x_ | z_).count(); }

  /// Ascending list of qubits with a non-identity factor.
  std::vector<std::size_t> support() const;

  /// True when every factor is I (the phase may still be non-trivial).
  bool is_identity() const { return x_.none() && z_.none(); }

  std::size_t y_count() const { return BitVec::and_count(x_, z_); }

  PauliString operator*(const PauliString& other) const;

  bool commutes_with(const PauliString& other) const;
  bool anticommutes_with(const PauliString& other) const { return !commutes_with(other); }

  /// The (x|z) concatenation as a 2n-bit vector (phase discarded).
  BitVec symplectic() const;

  const BitVec& x_mask() const { return x_; }
  const BitVec& z_mask() const { return z_; }

  /// Canonical text form, e.g. "I", "-Z3", "+iX0 Z1 Z2".
  std::string str() const;

  /// Equality of phase and factors.
  bool operator==(const PauliString& other) const {
    return phase_exp_ == other.phase_exp_ && x_ == other.x_ && z_ == other.z_;
  }
  bool operator!=(const PauliString& other) const { return !(*this == other); }

  /// Equality of factors only, ignoring the phase.
  bool same_factors(const PauliString& other) const {
    return x_ == other.x_ && z_ == other.z_;
  }

 private:
  int phase_exp_ = 0;  // 0..3
  BitVec x_, z_;
};

/// Qubits where the two strings carry different non-identity factors
/// ("non-trivial overlap" sites). Sites where either factor is I do not
/// count, nor do sites where the factors agree.
std::vector<std::size_t> nto_sites(const PauliString& a, const PauliString& b);

/// True when the symplectic (x|z) vectors of the strings are linearly
/// independent over GF(2), i.e. no non-empty subset multiplies to a scalar
/// multiple of the identity. The empty set is independent.
bool gf2_independent(const std::vector<PauliString>& strings);

/// When the strings are dependent, returns the indices of one dependent
/// subset (whose product is proportional to the identity); std::nullopt when
/// independent.
std::optional<std::vector<std::size_t>> gf2_dependency(
    const std::vector<PauliString>& strings);

}  // namespace bonsai
