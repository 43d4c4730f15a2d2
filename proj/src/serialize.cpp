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

#include "bonsai/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bonsai {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("missing integer field \"") + key +
                                "\"");
  }
  return j.at(key).get<int>();
}

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw std::invalid_argument(std::string("missing string field \"") + key +
                                "\"");
  }
  return j.at(key).get<std::string>();
}

const json& require_array(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw std::invalid_argument(std::string("missing array field \"") + key +
                                "\"");
  }
  return j.at(key);
}

json tree_to_obj(const QubitTree& tree) {
  json j;
  j["n"] = tree.n_qubits();
  j["root"] = tree.root();
  json links = json::array();
  for (const TreeEdge& e : tree.edges()) {
    links.push_back({{"parent", e.parent},
                     {"child", e.child},
                     {"label", std::string(1, pauli_char(e.label))}});
  }
  j["links"] = links;
  return j;
}

QubitTree tree_from_obj(const json& j) {
  const int n = require_int(j, "n");
  const int root = require_int(j, "root");
  std::vector<TreeEdge> edges;
  for (const json& link : require_array(j, "links")) {
    const int parent = require_int(link, "parent");
    const int child = require_int(link, "child");
    const std::string label = require_string(link, "label");
    std::optional<Pauli> p;
    if (label.size() == 1) p = pauli_from_char(label[0]);
    if (!p || *p == Pauli::I) {
      throw std::invalid_argument("link label must be \"X\", \"Y\" or \"Z\"");
    }
    edges.push_back({parent, child, *p});
  }
  return QubitTree(n, root, edges);
}

std::vector<std::pair<int, int>> edge_pairs_from(const json& arr) {
  std::vector<std::pair<int, int>> edges;
  for (const json& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw std::invalid_argument("edges must be [u, v] integer pairs");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return edges;
}

std::string pauli_factors(const std::vector<std::pair<int, Pauli>>& factors) {
  std::ostringstream out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out << ' ';
    out << pauli_char(factors[i].second) << factors[i].first;
  }
  return out.str();
}

void replace_all(std::string& text, const std::string& from,
                 const std::string& to) {
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
}

}  // namespace

// --- JSON ----------------------------------------------------------------

std::string tree_to_json(const QubitTree& tree) {
  return tree_to_obj(tree).dump(2) + "\n";
}

QubitTree tree_from_json(const std::string& text) {
  return tree_from_obj(parse_text(text));
}

std::string mapping_to_json(const MajoranaMapping& mapping) {
  json j;
  j["n"] = mapping.n_qubits();
  json modes = json::array();
  for (int m = 0; m < mapping.n_modes; ++m) {
    const int qubit =
        mapping.mode_to_qubit.size() == static_cast<std::size_t>(mapping.n_modes)
            ? mapping.mode_to_qubit[m]
            : m;
    modes.push_back({{"qubit", qubit},
                     {"even", mapping.even[m].str()},
                     {"odd", mapping.odd[m].str()}});
  }
  j["modes"] = modes;
  if (mapping.discarded) j["discarded"] = mapping.discarded->str();
  if (mapping.source_tree) j["tree"] = tree_to_obj(*mapping.source_tree);
  if (!mapping.virtual_edges.empty()) {
    json ve = json::array();
    for (const auto& [u, v] : mapping.virtual_edges) {
      ve.push_back(json::array({u, v}));
    }
    j["virtual_edges"] = ve;
  }
  return j.dump(2) + "\n";
}

MajoranaMapping mapping_from_json(const std::string& text) {
  const json j = parse_text(text);
  const int n = require_int(j, "n");
  if (n < 1) throw std::invalid_argument("mapping needs n >= 1");

  MajoranaMapping mapping;
  for (const json& mode : require_array(j, "modes")) {
    const int qubit = require_int(mode, "qubit");
    if (qubit < 0 || qubit >= n) {
      throw std::invalid_argument("mode qubit out of range");
    }
    mapping.mode_to_qubit.push_back(qubit);
    mapping.even.push_back(
        PauliString::parse(require_string(mode, "even"), n));
    mapping.odd.push_back(PauliString::parse(require_string(mode, "odd"), n));
  }
  mapping.n_modes = static_cast<int>(mapping.even.size());
  if (mapping.n_modes == 0) {
    throw std::invalid_argument("mapping needs at least one mode");
  }
  if (j.contains("discarded")) {
    mapping.discarded = PauliString::parse(require_string(j, "discarded"), n);
  }
  if (j.contains("tree")) {
    mapping.source_tree = tree_from_obj(j.at("tree"));
  }
  if (j.contains("virtual_edges")) {
    mapping.virtual_edges = edge_pairs_from(require_array(j, "virtual_edges"));
  }
  return mapping;
}

std::string graph_to_json(const HardwareGraph& g) {
  json j;
  j["n"] = g.n_vertices();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

HardwareGraph graph_from_json(const std::string& text) {
  const json j = parse_text(text);
  const int n = require_int(j, "n");
  return HardwareGraph(n, edge_pairs_from(require_array(j, "edges")));
}

std::string criteria_to_json(const CriteriaReport& report) {
  json j;
  j["a_ok"] = report.a_ok;
  j["a_issues"] = report.a_issues;
  j["b_ok"] = report.b_ok;
  if (report.b_witness) {
    j["b_witness"] = json::array({report.b_witness->first,
                                  report.b_witness->second});
  }
  j["c_ok"] = report.c_ok;
  if (report.c_witness) j["c_witness"] = *report.c_witness;
  if (report.d_ok) {
    j["d_ok"] = *report.d_ok;
  } else {
    j["d_ok"] = nullptr;  // no vacuum candidate to test against
  }
  if (report.d_witness) j["d_witness"] = *report.d_witness;
  j["ok"] = report.ok();
  return j.dump(2) + "\n";
}

std::string oracle_report_to_json(const OracleReport& report) {
  json j;
  j["car_ok"] = report.car_ok;
  j["vacuum_ok"] = report.vacuum_ok;
  j["fock_ok"] = report.fock_ok;
  j["max_car_residual"] = report.max_car_residual;
  j["tolerance"] = report.tol;
  j["ok"] = report.ok();
  return j.dump(2) + "\n";
}

std::string report_to_json(const MappingReport& report) {
  json j;
  j["n_modes"] = report.n_modes;
  j["n_qubits"] = report.n_qubits;
  j["weights"] = {{"per_string", report.weights},
                  {"min", report.weight_min},
                  {"mean", report.weight_mean},
                  {"max", report.weight_max}};
  j["deloc"] = {{"per_mode", report.deloc}, {"mean", report.deloc_mean}};
  j["h_z"] = report.h_z;
  j["nto_class"] = report.nto_class;
  j["virtual_edges"] = report.virtual_edges;
  if (report.swap) {
    j["swap"] = {{"singles_max", report.swap->singles_max},
                 {"singles_mean", report.swap->singles_mean},
                 {"doubles_max", report.swap->doubles_max},
                 {"doubles_mean", report.swap->doubles_mean},
                 {"doubles_samples", report.swap->doubles_samples},
                 {"doubles_exhaustive", report.swap->doubles_exhaustive}};
  } else {
    j["swap"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string swap_cost_to_json(const SwapCost& cost) {
  json j;
  json per = json::array();
  for (const StringCost& entry : cost.per_string) {
    per.push_back({{"op", entry.op.str()},
                   {"support", entry.support},
                   {"steiner_nodes", entry.steiner_nodes},
                   {"overhead", entry.overhead}});
  }
  j["per_string"] = per;
  j["total_overhead"] = cost.total_overhead;
  return j.dump(2) + "\n";
}

// --- DOT -----------------------------------------------------------------

std::string graph_to_dot(const HardwareGraph& g) {
  std::ostringstream out;
  out << "graph device {\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < g.n_vertices(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) {
    out << "  " << u << " -- " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string tree_to_dot(const QubitTree& tree) {
  std::ostringstream out;
  out << "digraph tree {\n";
  out << "  node [shape=circle];\n";
  out << "  " << tree.root() << " [shape=doublecircle];\n";
  for (const TreeEdge& e : tree.edges()) {
    out << "  " << e.parent << " -> " << e.child << " [label=\""
        << pauli_char(e.label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

// --- Operator tables -----------------------------------------------------

std::string mode_operator_row(const MajoranaMapping& mapping, int mode,
                              bool utf8) {
  if (mode < 0 || mode >= mapping.n_modes) {
    throw std::invalid_argument("mode index out of range");
  }
  const PauliString& even = mapping.even[mode];
  const PauliString& odd = mapping.odd[mode];
  const int n = static_cast<int>(even.n_qubits());
  const int mode_qubit =
      mapping.mode_to_qubit.size() == static_cast<std::size_t>(mapping.n_modes)
          ? mapping.mode_to_qubit[mode]
          : mode;

  std::vector<std::pair<int, Pauli>> shared, even_rest, odd_rest;
  for (int q = 0; q < n; ++q) {
    const Pauli fe = even.factor(static_cast<std::size_t>(q));
    const Pauli fo = odd.factor(static_cast<std::size_t>(q));
    if (fe != Pauli::I && fe == fo) {
      shared.emplace_back(q, fe);
    } else {
      if (fe != Pauli::I) even_rest.emplace_back(q, fe);
      if (fo != Pauli::I) odd_rest.emplace_back(q, fo);
    }
  }

  // The P+- shorthand applies only when both strings agree everywhere except
  // at the mode's own qubit, where they read X and Y with no trailing tail.
  const bool contractible =
      even.phase_exp() == 0 && odd.phase_exp() == 0 && even_rest.size() == 1 &&
      odd_rest.size() == 1 && even_rest[0].first == mode_qubit &&
      odd_rest[0].first == mode_qubit && even_rest[0].second == Pauli::X &&
      odd_rest[0].second == Pauli::Y;

  std::string row;
  const std::string prefix = pauli_factors(shared);
  if (contractible) {
    row = prefix;
    if (!row.empty()) row += ' ';
    row += "P+-" + std::to_string(even_rest[0].first);
  } else {
    // Phases other than +1 are carried into the bracket verbatim.
    static const char* kPhase[4] = {"", "+i", "-", "-i"};
    std::string left = std::string(kPhase[even.phase_exp()]) +
                       pauli_factors(even_rest);
    std::string right = std::string(kPhase[odd.phase_exp()]) +
                        pauli_factors(odd_rest);
    row = "1/2 ";
    if (!prefix.empty()) row += prefix + ' ';
    row += '(' + left + " +-i " + right + ')';
  }
  if (utf8) {
    replace_all(row, "+-i", "∓i");
    replace_all(row, "P+-", "P±");
  }
  return row;
}

std::string mapping_table(const MajoranaMapping& mapping, bool utf8) {
  std::ostringstream out;
  out << "mode\tqubit\toperator\n";
  for (int m = 0; m < mapping.n_modes; ++m) {
    const int qubit =
        mapping.mode_to_qubit.size() == static_cast<std::size_t>(mapping.n_modes)
            ? mapping.mode_to_qubit[m]
            : m;
    out << m << '\t' << qubit << '\t' << mode_operator_row(mapping, m, utf8)
        << '\n';
  }
  return out.str();
}

std::string mapping_csv(const MajoranaMapping& mapping) {
  std::ostringstream out;
  out << "mode,qubit,even,odd\n";
  for (int m = 0; m < mapping.n_modes; ++m) {
    const int qubit =
        mapping.mode_to_qubit.size() == static_cast<std::size_t>(mapping.n_modes)
            ? mapping.mode_to_qubit[m]
            : m;
    out << m << ',' << qubit << ',' << mapping.even[m].str() << ','
        << mapping.odd[m].str() << '\n';
  }
  return out.str();
}

std::string report_table(const MappingReport& report) {
  std::ostringstream out;
  out << "modes:          " << report.n_modes << '\n';
  out << "qubits:         " << report.n_qubits << '\n';
  out << "weight min:     " << report.weight_min << '\n';
  out << "weight mean:    " << report.weight_mean << '\n';
  out << "weight max:     " << report.weight_max << '\n';
  out << "deloc mean:     " << report.deloc_mean << '\n';
  out << "h_Z:            " << report.h_z << '\n';
  out << "NTO class:      " << report.nto_class << '\n';
  out << "virtual edges:  " << report.virtual_edges << '\n';
  if (report.swap) {
    out << "swap singles:   max " << report.swap->singles_max << ", mean "
        << report.swap->singles_mean << '\n';
    out << "swap doubles:   max " << report.swap->doubles_max << ", mean "
        << report.swap->doubles_mean << " ("
        << report.swap->doubles_samples
        << (report.swap->doubles_exhaustive ? " enumerated" : " sampled")
        << ")\n";
  }
  return out.str();
}

std::string report_csv(const MappingReport& report) {
  std::ostringstream out;
  out << "metric,value\n";
  out << "n_modes," << report.n_modes << '\n';
  out << "n_qubits," << report.n_qubits << '\n';
  out << "weight_min," << report.weight_min << '\n';
  out << "weight_mean," << report.weight_mean << '\n';
  out << "weight_max," << report.weight_max << '\n';
  out << "deloc_mean," << report.deloc_mean << '\n';
  out << "h_z," << report.h_z << '\n';
  out << "nto_class," << report.nto_class << '\n';
  out << "virtual_edges," << report.virtual_edges << '\n';
  if (report.swap) {
    out << "swap_singles_max," << report.swap->singles_max << '\n';
    out << "swap_singles_mean," << report.swap->singles_mean << '\n';
    out << "swap_doubles_max," << report.swap->doubles_max << '\n';
    out << "swap_doubles_mean," << report.swap->doubles_mean << '\n';
    out << "swap_doubles_samples," << report.swap->doubles_samples << '\n';
  }
  return out.str();
}

}  // namespace bonsai
