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

#include <string>

#include "bonsai/mapping.hpp"
#include "bonsai/metrics.hpp"
#include "bonsai/topology.hpp"
#include "bonsai/tree.hpp"
#include "bonsai/verify.hpp"

namespace bonsai {

// JSON text forms. The readers throw std::invalid_argument with a
// description of the first problem found.
//
// Tree:    {"n": int, "root": int,
//           "links": [{"parent": int, "child": int, "label": "X|Y|Z"}, ...]}
// Mapping: {"n": int,
//           "modes": [{"qubit": int, "even": "<string>", "odd": "<string>"},
//                     ...ordered by mode...],
//           "discarded": "<string>"?, "tree": <tree>?,
//           "virtual_edges": [[u, v], ...]?}
// Graph:   {"n": int, "edges": [[u, v], ...]}
std::string tree_to_json(const QubitTree& tree);
QubitTree tree_from_json(const std::string& text);
std::string mapping_to_json(const MajoranaMapping& mapping);
MajoranaMapping mapping_from_json(const std::string& text);
std::string graph_to_json(const HardwareGraph& g);
HardwareGraph graph_from_json(const std::string& text);

std::string criteria_to_json(const CriteriaReport& report);
std::string oracle_report_to_json(const OracleReport& report);
std::string report_to_json(const MappingReport& report);
std::string swap_cost_to_json(const SwapCost& cost);

// Graphviz DOT.
std::string graph_to_dot(const HardwareGraph& g);
std::string tree_to_dot(const QubitTree& tree);

/// One mode's creation/annihilation operator as printed in an operator
/// table. The generic form is "1/2 G (X<u> <tail> +-i Y<u> <tail>)" with G
/// the factors shared by the two strings; when the strings differ only at
/// the mode's qubit (X vs Y) and carry no further factors below it, the pair
/// contracts to "G P+-<u>". With utf8, "+-i" becomes a minus-plus sign and
/// "P+-" a plus-minus sign.
std::string mode_operator_row(const MajoranaMapping& mapping, int mode,
                              bool utf8 = false);

/// Text table of all modes: mode, qubit, operator.
std::string mapping_table(const MajoranaMapping& mapping, bool utf8 = false);

/// CSV with columns mode,qubit,even,odd.
std::string mapping_csv(const MajoranaMapping& mapping);

std::string report_table(const MappingReport& report);
std::string report_csv(const MappingReport& report);

}  // namespace bonsai
