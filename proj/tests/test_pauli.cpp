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

#include <random>
#include <string>
#include <vector>

#include "bonsai/pauli.hpp"
#include "doctest.h"
#include "oracles.hpp"

using bonsai::BitVec;
using bonsai::Pauli;
using bonsai::PauliString;

namespace {

PauliString random_string(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> factor(0, 3);
  PauliString s(n);
  for (std::size_t q = 0; q < n; ++q) {
    s.set_factor(q, static_cast<Pauli>(factor(rng)));
  }
  s.set_phase_exp(factor(rng));
  return s;
}

// Every phase/factor combination on a fixed small qubit count.
std::vector<PauliString> all_two_qubit_strings() {
  std::vector<PauliString> all;
  for (int f0 = 0; f0 < 4; ++f0) {
    for (int f1 = 0; f1 < 4; ++f1) {
      for (int phase = 0; phase < 4; ++phase) {
        PauliString s(2);
        s.set_factor(0, static_cast<Pauli>(f0));
        s.set_factor(1, static_cast<Pauli>(f1));
        s.set_phase_exp(phase);
        all.push_back(s);
      }
    }
  }
  return all;
}

}  // namespace

TEST_CASE("bit vector basics") {
  BitVec b(130);
  CHECK(b.none());
  CHECK(b.count() == 0);
  CHECK(!b.first_set().has_value());
  b.set(0, true);
  b.set(64, true);
  b.set(129, true);
  CHECK(b.count() == 3);
  CHECK(b.test(64));
  CHECK(!b.test(63));
  CHECK(b.first_set() == std::size_t{0});
  b.flip(0);
  CHECK(b.first_set() == std::size_t{64});
  BitVec c(130);
  c.set(64, true);
  CHECK(BitVec::and_count(b, c) == 1);
  CHECK((b ^ c).count() == 1);
  CHECK((b & c).count() == 1);
  CHECK((b | c).count() == 2);
}

TEST_CASE("single-qubit products with phases") {
  const std::size_t n = 1;
  const auto X = PauliString::single(n, Pauli::X, 0);
  const auto Y = PauliString::single(n, Pauli::Y, 0);
  const auto Z = PauliString::single(n, Pauli::Z, 0);
  CHECK((X * Y).str() == "+iZ0");
  CHECK((Y * X).str() == "-iZ0");
  CHECK((Y * Z).str() == "+iX0");
  CHECK((Z * Y).str() == "-iX0");
  CHECK((Z * X).str() == "+iY0");
  CHECK((X * Z).str() == "-iY0");
  CHECK((X * X).str() == "I");
  CHECK((Y * Y).str() == "I");
  CHECK((Z * Z).str() == "I");
}

TEST_CASE("a frozen multi-qubit product") {
  const auto a = PauliString::parse("X0 Z1", 11);
  const auto b = PauliString::parse("Y0 Z2 Z8 Z10", 11);
  CHECK((a * b).str() == "+iZ0 Z1 Z2 Z8 Z10");
  CHECK((a * b).weight() == 5);
  CHECK(a.anticommutes_with(b));
}

TEST_CASE("two-qubit products match the symbolic and matrix oracles") {
  const auto all = all_two_qubit_strings();
  for (const auto& a : all) {
    for (const auto& b : all) {
      const PauliString c = a * b;
      CHECK(c.str() == testoracle::multiply_text(a.str(), b.str()));
      const auto ma = testoracle::text_to_matrix(a.str(), 2);
      const auto mb = testoracle::text_to_matrix(b.str(), 2);
      const auto mc = testoracle::text_to_matrix(c.str(), 2);
      REQUIRE(testoracle::max_abs_diff(testoracle::matmul(ma, mb), mc) <
              1e-12);
    }
  }
}

TEST_CASE("product is associative on random triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_string(rng, 23);
    const auto b = random_string(rng, 23);
    const auto c = random_string(rng, 23);
    CHECK(((a * b) * c) == (a * (b * c)));
  }
}

TEST_CASE("random products agree with the symbolic oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_string(rng, 37);
    const auto b = random_string(rng, 37);
    CHECK((a * b).str() == testoracle::multiply_text(a.str(), b.str()));
  }
}

TEST_CASE("commutation matches the matrix commutator") {
  const auto all = all_two_qubit_strings();
  for (std::size_t i = 0; i < all.size(); i += 4) {  // one phase per factor set
    for (std::size_t j = 0; j < all.size(); j += 4) {
      const auto& a = all[i];
      const auto& b = all[j];
      const auto ab = testoracle::matmul(testoracle::text_to_matrix(a.str(), 2),
                                         testoracle::text_to_matrix(b.str(), 2));
      const auto ba = testoracle::matmul(testoracle::text_to_matrix(b.str(), 2),
                                         testoracle::text_to_matrix(a.str(), 2));
      const bool commute = testoracle::max_abs_diff(ab, ba) < 1e-12;
      CHECK(a.commutes_with(b) == commute);
      CHECK(a.anticommutes_with(b) == !commute);
    }
  }
}

TEST_CASE("canonical text round-trips") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_string(rng, 19);
    const auto back = PauliString::parse(s.str(), 19);
    CHECK(back == s);
  }
  CHECK(PauliString::parse("I", 4) == PauliString::identity(4));
  CHECK(PauliString::parse("-I", 4).phase_exp() == 2);
  CHECK(PauliString::parse("+iX0 Z1 Z2", 3).str() == "+iX0 Z1 Z2");
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(PauliString::parse("", 3), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("A0", 3), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("X3", 3), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("Z1 X0", 3), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("X0 X0", 3), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("X", 3), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("X0extra", 3), std::invalid_argument);
}

TEST_CASE("weight, support, y_count and identity flags") {
  const auto s = PauliString::parse("X0 Y2 Z5 Y6", 8);
  CHECK(s.weight() == 4);
  CHECK(s.support() == std::vector<std::size_t>{0, 2, 5, 6});
  CHECK(s.y_count() == 2);
  CHECK(!s.is_identity());
  CHECK(PauliString::identity(8).is_identity());
  auto minus_one = PauliString::identity(2);
  minus_one.set_phase_exp(2);
  CHECK(minus_one.is_identity());
  CHECK(minus_one.str() == "-I");
}

TEST_CASE("symplectic vector packs x bits then z bits") {
  const auto s = PauliString::parse("X0 Z1 Y2", 3);
  const BitVec v = s.symplectic();
  CHECK(v != BitVec(6));  // right length, not all zero
  CHECK(v.test(0));   // X on qubit 0
  CHECK(!v.test(1));
  CHECK(v.test(2));   // Y has an x bit
  CHECK(!v.test(3));
  CHECK(v.test(4));   // Z on qubit 1
  CHECK(v.test(5));   // Y has a z bit
}

TEST_CASE("non-trivial overlap sites") {
  const auto a = PauliString::parse("X0 X1 Z2", 4);
  const auto b = PauliString::parse("Y0 X1 X3", 4);
  CHECK(bonsai::nto_sites(a, b) == std::vector<std::size_t>{0});
  CHECK(bonsai::nto_sites(a, a).empty());
  const auto c = PauliString::parse("Z0 Z1 X2", 4);
  CHECK(bonsai::nto_sites(a, c) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("independence matches exhaustive subset search") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> count(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4;
    const int k = count(rng);
    std::vector<PauliString> strings;
    for (int i = 0; i < k; ++i) {
      auto s = random_string(rng, n);
      s.set_phase_exp(0);
      strings.push_back(s);
    }
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& s : strings) rows.push_back(s.symplectic().words());
    const auto brute = testoracle::brute_force_dependency(rows);
    CHECK(bonsai::gf2_independent(strings) == !brute.has_value());
    const auto dep = bonsai::gf2_dependency(strings);
    CHECK(dep.has_value() == brute.has_value());
    if (dep) {
      // The reported subset must itself multiply to a scalar.
      PauliString prod = PauliString::identity(n);
      for (std::size_t idx : *dep) prod = prod * strings[idx];
      CHECK(prod.is_identity());
      CHECK(!dep->empty());
    }
  }
}

TEST_CASE("duplicated string forms a two-element dependency") {
  const auto a = PauliString::parse("X0 Z1", 3);
  const auto b = PauliString::parse("Y1 Z2", 3);
  const std::vector<PauliString> strings = {a, b, a};
  CHECK(!bonsai::gf2_independent(strings));
  const auto dep = bonsai::gf2_dependency(strings);
  REQUIRE(dep.has_value());
  PauliString prod = PauliString::identity(3);
  for (std::size_t idx : *dep) prod = prod * strings[idx];
  CHECK(prod.is_identity());
}
