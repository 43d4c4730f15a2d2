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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bonsai/classic.hpp"
#include "bonsai/grow.hpp"
#include "bonsai/mapping.hpp"
#include "bonsai/metrics.hpp"
#include "bonsai/serialize.hpp"
#include "bonsai/topology.hpp"
#include "bonsai/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: " + csv);
    }
    if (used != item.size()) {
      throw std::invalid_argument("not an integer list: " + csv);
    }
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("empty integer list");
  return values;
}

// --seed wins; otherwise the BONSAI_SEED environment variable, if set.
std::optional<std::uint64_t> effective_seed(
    const std::optional<std::uint64_t>& flag) {
  if (flag) return flag;
  const char* env = std::getenv("BONSAI_SEED");
  if (env == nullptr || *env == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (env[used] != '\0') throw std::invalid_argument("");
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("BONSAI_SEED must be a non-negative integer");
  }
}

bonsai::Labelling parse_strategy(const std::string& name) {
  if (name == "homogeneous") return bonsai::Labelling::Homogeneous;
  if (name == "heterogeneous") return bonsai::Labelling::Heterogeneous;
  throw std::invalid_argument("unknown strategy: " + name);
}

std::string render_mapping(const bonsai::MajoranaMapping& m,
                           const std::string& format, bool utf8) {
  if (format == "json") return bonsai::mapping_to_json(m);
  if (format == "table") return bonsai::mapping_table(m, utf8);
  if (format == "csv") return bonsai::mapping_csv(m);
  if (format == "dot") {
    if (!m.source_tree) {
      throw std::invalid_argument(
          "mapping has no source tree; DOT export needs one");
    }
    return bonsai::tree_to_dot(*m.source_tree);
  }
  throw std::invalid_argument("unknown format: " + format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ternary-tree fermion-to-qubit mapping toolkit"};
  app.require_subcommand(1);

  // ---- topo gen ----------------------------------------------------------
  auto* topo = app.add_subcommand("topo", "Hardware coupling graphs");
  topo->require_subcommand(1);
  auto* topo_gen = topo->add_subcommand("gen", "Generate a coupling graph");
  std::string tg_kind;
  int tg_size = 1, tg_n = 0, tg_rows = 0, tg_cols = 0;
  std::string tg_format = "json", tg_out;
  topo_gen->add_option("--kind", tg_kind, "Graph family")
      ->required()
      ->check(CLI::IsMember(
          {"heavy-hexagon", "linear", "star", "grid", "complete"}));
  topo_gen->add_option("--size", tg_size,
                       "Heavy-hexagon size parameter (1 = 37-qubit device)");
  topo_gen->add_option("--n", tg_n, "Vertex count for linear/star/complete");
  topo_gen->add_option("--rows", tg_rows, "Grid rows");
  topo_gen->add_option("--cols", tg_cols, "Grid columns");
  topo_gen->add_option("--format", tg_format, "Output format")
      ->check(CLI::IsMember({"json", "dot"}));
  topo_gen->add_option("--out", tg_out, "Output file (default stdout)");

  // ---- map ---------------------------------------------------------------
  auto* map = app.add_subcommand("map", "Create, inspect and verify mappings");
  map->require_subcommand(1);

  auto* map_grow = map->add_subcommand(
      "grow", "Grow a hardware-tailored mapping on a coupling graph");
  std::string mg_graph, mg_strategy = "homogeneous", mg_policy = "center";
  std::string mg_perm, mg_format = "json", mg_out;
  std::optional<std::uint64_t> mg_seed;
  std::optional<int> mg_root;
  bool mg_real = false, mg_utf8 = false;
  map_grow->add_option("--graph,--in", mg_graph, "Coupling graph JSON")
      ->required();
  map_grow->add_option("--strategy", mg_strategy, "Labelling strategy")
      ->check(CLI::IsMember({"homogeneous", "heterogeneous"}));
  map_grow->add_option("--root-policy", mg_policy, "Root selection")
      ->check(CLI::IsMember({"center", "diameter-end"}));
  map_grow->add_option("--root", mg_root, "Explicit root vertex");
  map_grow->add_option("--seed", mg_seed, "Random-candidate seed");
  map_grow->add_option("--perm", mg_perm,
                       "Mode-to-qubit permutation, e.g. 0,2,1");
  map_grow->add_flag("--real", mg_real,
                     "Swap pairs so every even string has even Y parity");
  map_grow->add_option("--format", mg_format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "table", "csv"}));
  map_grow->add_flag("--utf8", mg_utf8, "Render tables with UTF-8 symbols");
  map_grow->add_option("--out", mg_out, "Output file (default stdout)");

  auto* map_classic =
      map->add_subcommand("classic", "Emit a textbook mapping");
  std::string mc_kind, mc_perm, mc_format = "json", mc_out;
  int mc_n = 0;
  bool mc_real = false, mc_utf8 = false;
  map_classic->add_option("--kind", mc_kind, "Mapping family")
      ->required()
      ->check(CLI::IsMember(
          {"jordan-wigner", "parity", "bravyi-kitaev", "balanced-ternary"}));
  map_classic->add_option("--n", mc_n, "Number of fermionic modes")
      ->required();
  map_classic->add_option("--perm", mc_perm,
                          "Mode-to-qubit permutation, e.g. 0,2,1");
  map_classic->add_flag("--real", mc_real,
                        "Swap pairs so every even string has even Y parity");
  map_classic->add_option("--format", mc_format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "table", "csv"}));
  map_classic->add_flag("--utf8", mc_utf8, "Render tables with UTF-8 symbols");
  map_classic->add_option("--out", mc_out, "Output file (default stdout)");

  auto* map_fixture =
      map->add_subcommand("fixture", "Emit a built-in example mapping");
  std::string mf_name, mf_strategy = "homogeneous", mf_format = "json", mf_out;
  bool mf_utf8 = false;
  map_fixture->add_option("--name,--kind", mf_name, "Fixture name")
      ->required()
      ->check(CLI::IsMember({"example-tree", "heavy-hex-37", "exotic-3nto",
                             "exotic-1nto-nontree"}));
  map_fixture
      ->add_option("--strategy", mf_strategy,
                   "Labelling strategy (heavy-hex-37 only)")
      ->check(CLI::IsMember({"homogeneous", "heterogeneous"}));
  map_fixture->add_option("--format", mf_format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "table", "csv"}));
  map_fixture->add_flag("--utf8", mf_utf8, "Render tables with UTF-8 symbols");
  map_fixture->add_option("--out", mf_out, "Output file (default stdout)");

  auto* map_verify =
      map->add_subcommand("verify", "Check the mapping criteria");
  std::string mv_in, mv_vacuum, mv_out;
  bool mv_oracle = false;
  map_verify->add_option("--in", mv_in, "Mapping JSON")->required();
  map_verify->add_option("--vacuum", mv_vacuum,
                         "Vacuum candidate as a bit string, qubit 0 first");
  map_verify->add_flag("--oracle", mv_oracle,
                       "Also run the dense matrix oracle (up to 4 qubits)");
  map_verify->add_option("--out", mv_out, "Output file (default stdout)");

  auto* map_report =
      map->add_subcommand("report", "Weight/locality/cost statistics");
  std::string mr_in, mr_graph, mr_format = "json", mr_out;
  std::optional<std::uint64_t> mr_seed;
  int mr_samples = 200;
  bool mr_full = false;
  map_report->add_option("--in", mr_in, "Mapping JSON")->required();
  map_report->add_option("--graph", mr_graph,
                         "Coupling graph JSON for the SWAP summary");
  map_report->add_option("--seed", mr_seed, "Double-excitation sampling seed");
  map_report->add_option("--samples", mr_samples,
                         "Number of sampled double excitations");
  map_report->add_flag("--full-doubles", mr_full,
                       "Enumerate every double excitation (small n only)");
  map_report->add_option("--format", mr_format, "Output format")
      ->check(CLI::IsMember({"json", "table", "csv"}));
  map_report->add_option("--out", mr_out, "Output file (default stdout)");

  auto* map_export =
      map->add_subcommand("export", "Re-emit a mapping in another format");
  std::string me_in, me_format = "json", me_out;
  bool me_utf8 = false;
  map_export->add_option("--in", me_in, "Mapping JSON")->required();
  map_export->add_option("--format", me_format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "table", "csv"}));
  map_export->add_flag("--utf8", me_utf8, "Render tables with UTF-8 symbols");
  map_export->add_option("--out", me_out, "Output file (default stdout)");

  // ---- cost excitation ---------------------------------------------------
  auto* cost = app.add_subcommand("cost", "Routing-cost estimates");
  cost->require_subcommand(1);
  auto* cost_exc = cost->add_subcommand(
      "excitation", "SWAP overhead of a single or double excitation");
  std::string ce_map, ce_graph, ce_modes, ce_out;
  cost_exc->add_option("--map,--in", ce_map, "Mapping JSON")->required();
  cost_exc->add_option("--graph", ce_graph, "Coupling graph JSON")->required();
  cost_exc->add_option("--modes", ce_modes, "Mode list i,j or i,j,k,l")
      ->required();
  cost_exc->add_option("--out", ce_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (topo_gen->parsed()) {
      std::optional<bonsai::HardwareGraph> g;
      if (tg_kind == "heavy-hexagon") {
        g = bonsai::heavy_hexagon(tg_size);
      } else if (tg_kind == "linear") {
        g = bonsai::linear_chain(tg_n);
      } else if (tg_kind == "star") {
        g = bonsai::star_graph(tg_n);
      } else if (tg_kind == "grid") {
        g = bonsai::grid_graph(tg_rows, tg_cols);
      } else {
        g = bonsai::complete_graph(tg_n);
      }
      emit(tg_out, tg_format == "dot" ? bonsai::graph_to_dot(*g)
                                      : bonsai::graph_to_json(*g));
      return 0;
    }

    if (map_grow->parsed()) {
      const bonsai::HardwareGraph g =
          bonsai::graph_from_json(read_file(mg_graph));
      bonsai::GrowthConfig cfg;
      cfg.root = mg_root;
      cfg.root_policy = mg_policy == "center"
                            ? bonsai::RootPolicy::Center
                            : bonsai::RootPolicy::DiameterEnd;
      cfg.seed = effective_seed(mg_seed);
      cfg.labelling = parse_strategy(mg_strategy);
      const bonsai::GrownTree grown = bonsai::grow_tree(g, cfg);
      const bonsai::QubitTree tree = bonsai::label_tree(grown, cfg.labelling);
      std::optional<std::vector<int>> perm;
      if (!mg_perm.empty()) perm = parse_int_list(mg_perm);
      bonsai::MajoranaMapping m = bonsai::pair_modes(tree, perm, mg_real);
      m.virtual_edges = grown.virtual_edges;
      emit(mg_out, render_mapping(m, mg_format, mg_utf8));
      return 0;
    }

    if (map_classic->parsed()) {
      bonsai::MappingKind kind = bonsai::MappingKind::JordanWigner;
      if (mc_kind == "parity") kind = bonsai::MappingKind::Parity;
      if (mc_kind == "bravyi-kitaev") kind = bonsai::MappingKind::BravyiKitaev;
      if (mc_kind == "balanced-ternary") {
        kind = bonsai::MappingKind::BalancedTernary;
      }
      bonsai::MajoranaMapping m;
      if (mc_perm.empty()) {
        m = bonsai::classic_mapping(kind, mc_n, mc_real);
      } else {
        m = bonsai::pair_modes(bonsai::classic_tree(kind, mc_n),
                               parse_int_list(mc_perm), mc_real);
      }
      emit(mc_out, render_mapping(m, mc_format, mc_utf8));
      return 0;
    }

    if (map_fixture->parsed()) {
      bonsai::MajoranaMapping m;
      if (mf_name == "example-tree") {
        m = bonsai::fixture_mapping(bonsai::FixtureKind::ExampleTree11);
      } else if (mf_name == "heavy-hex-37") {
        const bonsai::GrownTree grown =
            bonsai::fixture_structure(bonsai::FixtureKind::HeavyHex37Tree);
        m = bonsai::pair_modes(
            bonsai::label_tree(grown, parse_strategy(mf_strategy)));
      } else if (mf_name == "exotic-3nto") {
        m = bonsai::fixture_mapping(bonsai::FixtureKind::Exotic3NTO);
      } else {
        m = bonsai::fixture_mapping(bonsai::FixtureKind::Exotic1NTONonTree);
      }
      emit(mf_out, render_mapping(m, mf_format, mf_utf8));
      return 0;
    }

    if (map_verify->parsed()) {
      const bonsai::MajoranaMapping m =
          bonsai::mapping_from_json(read_file(mv_in));
      std::optional<bonsai::BitVec> vacuum;
      if (!mv_vacuum.empty()) {
        if (mv_vacuum.size() != static_cast<std::size_t>(m.n_qubits())) {
          throw std::invalid_argument("vacuum length must equal qubit count");
        }
        bonsai::BitVec bits(static_cast<std::size_t>(m.n_qubits()));
        for (std::size_t i = 0; i < mv_vacuum.size(); ++i) {
          if (mv_vacuum[i] == '1') {
            bits.set(i, true);
          } else if (mv_vacuum[i] != '0') {
            throw std::invalid_argument("vacuum must be a 0/1 string");
          }
        }
        vacuum = bits;
      }
      const bonsai::CriteriaReport rep = bonsai::check_mapping(m, vacuum);
      std::string out = bonsai::criteria_to_json(rep);
      bool ok = rep.ok();
      if (mv_oracle) {
        const bonsai::OracleReport orep = bonsai::oracle_check(m);
        out += bonsai::oracle_report_to_json(orep);
        ok = ok && orep.ok();
      }
      emit(mv_out, out);
      return ok ? 0 : 1;
    }

    if (map_report->parsed()) {
      const bonsai::MajoranaMapping m =
          bonsai::mapping_from_json(read_file(mr_in));
      std::optional<bonsai::HardwareGraph> g;
      if (!mr_graph.empty()) {
        g = bonsai::graph_from_json(read_file(mr_graph));
      }
      bonsai::ReportOptions options;
      options.seed = effective_seed(mr_seed).value_or(0);
      options.double_samples = mr_samples;
      options.full_doubles = mr_full;
      const bonsai::MappingReport rep =
          bonsai::report(m, g ? &*g : nullptr, options);
      std::string out;
      if (mr_format == "table") {
        out = bonsai::report_table(rep);
      } else if (mr_format == "csv") {
        out = bonsai::report_csv(rep);
      } else {
        out = bonsai::report_to_json(rep);
      }
      emit(mr_out, out);
      return 0;
    }

    if (map_export->parsed()) {
      const bonsai::MajoranaMapping m =
          bonsai::mapping_from_json(read_file(me_in));
      emit(me_out, render_mapping(m, me_format, me_utf8));
      return 0;
    }

    if (cost_exc->parsed()) {
      const bonsai::MajoranaMapping m =
          bonsai::mapping_from_json(read_file(ce_map));
      const bonsai::HardwareGraph g =
          bonsai::graph_from_json(read_file(ce_graph));
      const bonsai::SwapCost c =
          bonsai::excitation_cost(m, g, parse_int_list(ce_modes));
      emit(ce_out, bonsai::swap_cost_to_json(c));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
