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

#include "bonsai/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bonsai {

namespace {

// Phase exponent e (i^e) of S acting on basis state |b>: S|b> = i^e |b ^ x>.
// X contributes 1; Z contributes -1 on a set bit; Y contributes i on a clear
// bit and -i on a set bit; plus the string's own phase.
int action_phase_exp(const PauliString& s, const BitVec& b) {
  int e = s.phase_exp();
  for (std::size_t u = 0; u < s.n_qubits(); ++u) {
    const bool x = s.x_mask().test(u);
    const bool z = s.z_mask().test(u);
    if (x && z) {
      e += b.test(u) ? 3 : 1;
    } else if (z) {
      e += b.test(u) ? 2 : 0;
    }
  }
  return e % 4;
}

}  // namespace

CriteriaReport check_mapping(const MajoranaMapping& mapping,
                             const std::optional<BitVec>& vacuum) {
  CriteriaReport report;

  // --- A: well-formed input ---------------------------------------------
  if (mapping.n_modes < 1) {
    report.a_issues.push_back("mapping must have at least one mode");
  }
  if (mapping.even.size() != static_cast<std::size_t>(mapping.n_modes) ||
      mapping.odd.size() != static_cast<std::size_t>(mapping.n_modes)) {
    report.a_issues.push_back("even/odd string counts must equal n_modes");
  }
  const int nq = mapping.n_qubits();
  if (nq < 1 && mapping.n_modes >= 1) {
    report.a_issues.push_back("mapping must act on at least one qubit");
  }
  for (std::size_t j = 0; j < mapping.even.size() && j < mapping.odd.size(); ++j) {
    if (static_cast<int>(mapping.even[j].n_qubits()) != nq ||
        static_cast<int>(mapping.odd[j].n_qubits()) != nq) {
      std::ostringstream msg;
      msg << "mode " << j << " strings disagree on qubit count";
      report.a_issues.push_back(msg.str());
    }
    if (mapping.even[j].is_identity() || mapping.odd[j].is_identity()) {
      std::ostringstream msg;
      msg << "mode " << j << " has an identity Majorana string";
      report.a_issues.push_back(msg.str());
    }
  }
  if (!mapping.mode_to_qubit.empty()) {
    if (mapping.mode_to_qubit.size() != static_cast<std::size_t>(mapping.n_modes)) {
      report.a_issues.push_back("mode_to_qubit must list one qubit per mode");
    } else {
      std::vector<bool> used(std::max(nq, mapping.n_modes), false);
      for (int q : mapping.mode_to_qubit) {
        if (q < 0 || q >= static_cast<int>(used.size()) || used[q]) {
          report.a_issues.push_back("mode_to_qubit is not a bijection");
          break;
        }
        used[q] = true;
      }
    }
  }
  report.a_ok = report.a_issues.empty();
  if (!report.a_ok) return report;  // the other criteria assume shape

  const auto strings = mapping.flat_strings();

  // --- B: pairwise anticommutation --------------------------------------
  report.b_ok = true;
  for (std::size_t i = 0; i < strings.size() && report.b_ok; ++i) {
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      if (strings[i].commutes_with(strings[j])) {
        report.b_ok = false;
        report.b_witness = {static_cast<int>(i), static_cast<int>(j)};
        break;
      }
    }
  }

  // --- C: GF(2) independence --------------------------------------------
  const auto dependency = gf2_dependency(strings);
  report.c_ok = !dependency.has_value();
  if (dependency) {
    report.c_witness = std::vector<int>(dependency->begin(), dependency->end());
  }

  // --- D: vacuum annihilation -------------------------------------------
  std::optional<BitVec> candidate = vacuum;
  if (!candidate && mapping.source_tree) {
    candidate = BitVec(static_cast<std::size_t>(nq));
  }
  if (candidate) {
    if (candidate->size() != static_cast<std::size_t>(nq)) {
      throw std::invalid_argument("vacuum candidate has wrong qubit count");
    }
    bool ok = true;
    for (int j = 0; j < mapping.n_modes && ok; ++j) {
      const PauliString& e = mapping.even[j];
      const PauliString& o = mapping.odd[j];
      // (e + i o)|b> = 0 needs both strings to flip |b> to the same state
      // with amplitudes cancelling exactly: phase(o) = phase(e) + 1 (mod 4).
      if (e.x_mask() != o.x_mask() ||
          (action_phase_exp(e, *candidate) + 1) % 4 !=
              action_phase_exp(o, *candidate)) {
        ok = false;
        report.d_witness = j;
      }
    }
    report.d_ok = ok;
  }
  return report;
}

int classify_nto(const MajoranaMapping& mapping) {
  const auto strings = mapping.flat_strings();
  std::size_t best = 0;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      best = std::max(best, nto_sites(strings[i], strings[j]).size());
    }
  }
  return static_cast<int>(best);
}

// --- DenseOracle ---------------------------------------------------------

DenseOracle::Matrix DenseOracle::matrix(const PauliString& s) {
  if (s.n_qubits() > 12) {
    throw std::invalid_argument("DenseOracle::matrix requires n_qubits <= 12");
  }
  const std::size_t dim = std::size_t{1} << s.n_qubits();
  Matrix m(dim * dim, Complex{0.0, 0.0});
  static const Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t col = 0; col < dim; ++col) {
    BitVec b(s.n_qubits());
    std::size_t row = col;
    int e = s.phase_exp();
    for (std::size_t u = 0; u < s.n_qubits(); ++u) {
      const bool bit = (col >> u) & 1;
      if (bit) b.set(u);
      const bool x = s.x_mask().test(u);
      const bool z = s.z_mask().test(u);
      if (x) row ^= std::size_t{1} << u;
      if (x && z) {
        e += bit ? 3 : 1;
      } else if (z && bit) {
        e += 2;
      }
    }
    m[row * dim + col] = i_pow[e % 4];
  }
  return m;
}

DenseOracle::Vector DenseOracle::apply(const PauliString& s, const Vector& state) {
  const std::size_t dim = std::size_t{1} << s.n_qubits();
  if (state.size() != dim) {
    throw std::invalid_argument("state vector length must be 2^n");
  }
  static const Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Vector out(dim, Complex{0.0, 0.0});
  for (std::size_t col = 0; col < dim; ++col) {
    if (state[col] == Complex{0.0, 0.0}) continue;
    std::size_t row = col;
    int e = s.phase_exp();
    for (std::size_t u = 0; u < s.n_qubits(); ++u) {
      const bool bit = (col >> u) & 1;
      const bool x = s.x_mask().test(u);
      const bool z = s.z_mask().test(u);
      if (x) row ^= std::size_t{1} << u;
      if (x && z) {
        e += bit ? 3 : 1;
      } else if (z && bit) {
        e += 2;
      }
    }
    out[row] += i_pow[e % 4] * state[col];
  }
  return out;
}

DenseOracle::Matrix DenseOracle::identity(std::size_t dim) {
  Matrix m(dim * dim, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = Complex{1.0, 0.0};
  return m;
}

DenseOracle::Matrix DenseOracle::mul(const Matrix& a, const Matrix& b, std::size_t dim) {
  Matrix out(dim * dim, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      const Complex aik = a[i * dim + k];
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        out[i * dim + j] += aik * b[k * dim + j];
      }
    }
  }
  return out;
}

DenseOracle::Matrix DenseOracle::add(const Matrix& a, const Matrix& b) {
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

DenseOracle::Matrix DenseOracle::scale(Complex c, const Matrix& a) {
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

DenseOracle::Matrix DenseOracle::adjoint(const Matrix& a, std::size_t dim) {
  Matrix out(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      out[j * dim + i] = std::conj(a[i * dim + j]);
    }
  }
  return out;
}

double DenseOracle::max_abs_diff(const Matrix& a, const Matrix& b) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

DenseOracle::DenseOracle(const MajoranaMapping& mapping) : mapping_(mapping) {
  if (mapping.n_qubits() > 12) {
    throw std::invalid_argument("DenseOracle requires n_qubits <= 12");
  }
  dim_ = std::size_t{1} << mapping.n_qubits();
}

DenseOracle::Matrix DenseOracle::lowering(int mode) const {
  if (mode < 0 || mode >= mapping_.n_modes) {
    throw std::invalid_argument("mode index out of range");
  }
  const Matrix e = matrix(mapping_.even[mode]);
  const Matrix o = matrix(mapping_.odd[mode]);
  return scale(Complex{0.5, 0.0}, add(e, scale(Complex{0.0, 1.0}, o)));
}

DenseOracle::Matrix DenseOracle::raising(int mode) const {
  if (mode < 0 || mode >= mapping_.n_modes) {
    throw std::invalid_argument("mode index out of range");
  }
  const Matrix e = matrix(mapping_.even[mode]);
  const Matrix o = matrix(mapping_.odd[mode]);
  return scale(Complex{0.5, 0.0}, add(e, scale(Complex{0.0, -1.0}, o)));
}

OracleReport oracle_check(const MajoranaMapping& mapping, double tol) {
  if (mapping.n_qubits() > 4) {
    throw std::invalid_argument("oracle_check requires n_qubits <= 4");
  }
  OracleReport report;
  report.tol = tol;

  const DenseOracle oracle(mapping);
  const std::size_t dim = oracle.dim();
  const int n = mapping.n_modes;

  std::vector<DenseOracle::Matrix> low(n), high(n);
  for (int j = 0; j < n; ++j) {
    low[j] = oracle.lowering(j);
    high[j] = oracle.raising(j);
  }

  // Canonical anticommutation relations.
  const auto zero = DenseOracle::Matrix(dim * dim, DenseOracle::Complex{0.0, 0.0});
  const auto id = DenseOracle::identity(dim);
  double residual = 0.0;

  // Majorana pair relations: R_k R_l + R_l R_k = 2 delta_kl I.
  const auto flat = mapping.flat_strings();
  std::vector<DenseOracle::Matrix> majorana(flat.size());
  for (std::size_t k = 0; k < flat.size(); ++k) {
    majorana[k] = DenseOracle::matrix(flat[k]);
  }
  const auto two_id = DenseOracle::scale(DenseOracle::Complex{2.0, 0.0}, id);
  for (std::size_t k = 0; k < flat.size(); ++k) {
    for (std::size_t l = k; l < flat.size(); ++l) {
      const auto anti =
          DenseOracle::add(DenseOracle::mul(majorana[k], majorana[l], dim),
                           DenseOracle::mul(majorana[l], majorana[k], dim));
      residual = std::max(residual,
                          DenseOracle::max_abs_diff(anti, k == l ? two_id : zero));
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const auto anti_ll = DenseOracle::add(DenseOracle::mul(low[i], low[j], dim),
                                            DenseOracle::mul(low[j], low[i], dim));
      residual = std::max(residual, DenseOracle::max_abs_diff(anti_ll, zero));
    }
    for (int j = 0; j < n; ++j) {
      const auto anti_lh = DenseOracle::add(DenseOracle::mul(low[i], high[j], dim),
                                            DenseOracle::mul(high[j], low[i], dim));
      residual = std::max(residual,
                          DenseOracle::max_abs_diff(anti_lh, i == j ? id : zero));
    }
  }
  report.max_car_residual = residual;
  report.car_ok = residual <= tol;

  // Vacuum annihilation on the all-zeros state.
  DenseOracle::Vector vacuum(dim, DenseOracle::Complex{0.0, 0.0});
  vacuum[0] = DenseOracle::Complex{1.0, 0.0};
  report.vacuum_ok = true;
  for (int j = 0; j < n; ++j) {
    DenseOracle::Vector image(dim, DenseOracle::Complex{0.0, 0.0});
    for (std::size_t col = 0; col < dim; ++col) {
      if (vacuum[col] == DenseOracle::Complex{0.0, 0.0}) continue;
      for (std::size_t row = 0; row < dim; ++row) {
        image[row] += low[j][row * dim + col] * vacuum[col];
      }
    }
    for (const auto& amp : image) {
      if (std::abs(amp) > tol) {
        report.vacuum_ok = false;
        break;
      }
    }
  }

  // Fock basis states: every product of distinct raising operators applied
  // to the vacuum must land on a single computational basis state.
  report.fock_ok = true;
  const bool check_bits = mapping.source_tree.has_value();
  for (std::size_t subset = 0; subset < (std::size_t{1} << n) && report.fock_ok;
       ++subset) {
    DenseOracle::Vector state = vacuum;
    std::vector<int> occupied;
    for (int j = n - 1; j >= 0; --j) {  // apply ascending modes right-to-left
      if (!((subset >> j) & 1)) continue;
      occupied.push_back(j);
      DenseOracle::Vector next(dim, DenseOracle::Complex{0.0, 0.0});
      for (std::size_t col = 0; col < dim; ++col) {
        if (state[col] == DenseOracle::Complex{0.0, 0.0}) continue;
        for (std::size_t row = 0; row < dim; ++row) {
          next[row] += high[j][row * dim + col] * state[col];
        }
      }
      state = std::move(next);
    }
    std::size_t nonzero = 0;
    std::size_t position = 0;
    for (std::size_t row = 0; row < dim; ++row) {
      const double mag = std::abs(state[row]);
      if (mag > tol) {
        ++nonzero;
        position = row;
        if (std::abs(mag - 1.0) > tol) report.fock_ok = false;
      }
    }
    if (nonzero != 1) {
      report.fock_ok = false;
      continue;
    }
    if (check_bits) {
      const BitVec bits = fock_to_bits(mapping, occupied);
      std::size_t expected = 0;
      for (std::size_t u = 0; u < bits.size(); ++u) {
        if (bits.test(u)) expected |= std::size_t{1} << u;
      }
      if (expected != position) report.fock_ok = false;
    }
  }
  return report;
}

}  // namespace bonsai
