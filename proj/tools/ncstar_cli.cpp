/*
 * Copyright 2026 The ncstar Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "ncstar/json_io.hpp"

using namespace ncstar;

namespace {

long long oracle_budget() {
  if (const char* env = std::getenv("HYP_BUDGET")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      throw input_error("HYP_BUDGET must be a positive integer");
    }
  }
  return kDefaultOracleBudget;
}

ordered_json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw input_error("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

GraphPtr load_graph(const std::string& path) { return graph_from_json(load_json(path)); }

Subcontinuum load_subcontinuum(const GraphPtr& g, const std::string& path) {
  return subcontinuum_from_json(g, load_json(path));
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out;
}

void emit_adjacency_dot(const HyperspaceSample& sample, const ClusterReport& rep) {
  std::cout << "graph eps_adjacency {\n";
  for (int i = 0; i < rep.member_count; ++i)
    std::cout << "  m" << i << " [label=\"m" << i << "/c" << rep.assignment[i] << "\"];\n";
  for (int i = 0; i < rep.member_count; ++i)
    for (int j = i + 1; j < rep.member_count; ++j)
      if (sample.member_distance(i, j) <= rep.eps) std::cout << "  m" << i << " -- m" << j << ";\n";
  std::cout << "}\n";
}

void emit_model_dot(const TreeModel& model) {
  std::cout << "graph ncstar_model {\n";
  int pi = 0;
  for (const auto& piece : model.pieces) {
    std::string prev;
    if (piece.kind == ModelPiece::Kind::Core) {
      std::string core = "p" + std::to_string(pi) + "_X";
      std::cout << "  " << core << " [label=\"X\",shape=doublecircle];\n";
      // each chart hangs off the core
      std::map<int, std::string> last_per_chart;
      int si = 0;
      for (const auto& s : piece.samples) {
        if (s.chart < 0) {
          ++si;
          continue;
        }
        std::string id = "p" + std::to_string(pi) + "_s" + std::to_string(si);
        std::cout << "  " << id << " [label=\"" << dot_escape(s.param.str()) << "\"];\n";
        std::string from = last_per_chart.count(s.chart) ? last_per_chart[s.chart] : core;
        std::cout << "  " << from << " -- " << id << ";\n";
        last_per_chart[s.chart] = id;
        ++si;
      }
    } else {
      int si = 0;
      for (const auto& s : piece.samples) {
        std::string id = "p" + std::to_string(pi) + "_s" + std::to_string(si);
        std::cout << "  " << id << " [label=\"" << dot_escape(s.param.str()) << "\"];\n";
        if (!prev.empty()) std::cout << "  " << prev << " -- " << id << ";\n";
        prev = id;
        ++si;
      }
      std::string lim = "p" + std::to_string(pi) + "_lim";
      std::cout << "  " << lim << " [label=\"limit (not a member)\",shape=box];\n";
      if (!prev.empty()) std::cout << "  " << prev << " -- " << lim << " [style=dotted];\n";
    }
    ++pi;
  }
  std::cout << "}\n";
}

struct DendriteOptions {
  int s = 3;
  int d = 4;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the hyperspace of non-cut subcontinua of metric finite "
               "graphs and dendrite approximants"};
  app.require_subcommand(1);

  std::string graph_path, sub_path, sub_path_b, basepoint, format = "json";
  std::string case_arg, p_arg, q_arg, y_endpoint = "abh0t0";
  int k = 8, steps = 8, seq_len = 8, samples = 16, n_max = 8;
  std::string eps_arg = "1/4", target_arg = "1/4";
  DendriteOptions dopt;

  auto* classify = app.add_subcommand("classify", "classify the space of a metric graph");
  classify->add_option("graph", graph_path, "graph JSON file")->required();

  auto* ncstar_cmd = app.add_subcommand("ncstar", "classification structure of NC*(T)");
  ncstar_cmd->require_subcommand(1);
  auto* nc_enum = ncstar_cmd->add_subcommand("enumerate", "finite clause description for a tree");
  nc_enum->add_option("graph", graph_path)->required();
  auto* nc_model = ncstar_cmd->add_subcommand("model", "sampled piece model for a tree");
  nc_model->add_option("graph", graph_path)->required();
  nc_model->add_option("--samples", samples, "samples per piece");
  nc_model->add_option("--format", format, "json | dot");

  auto* components = app.add_subcommand("components", "component count of NC*(T)");
  components->add_option("graph", graph_path)->required();
  bool with_oracle = false;
  components->add_flag("--oracle", with_oracle, "cross-check with the grid oracle");
  components->add_option("-k", k, "subdivision resolution");
  components->add_option("--eps", eps_arg, "clustering radius (rational)");
  components->add_option("--format", format, "json | dot");

  auto* properties = app.add_subcommand("properties", "global properties of NC*(X)");
  properties->add_option("graph", graph_path)->required();
  bool no_oracle = false;
  properties->add_flag("--no-oracle", no_oracle, "skip the empirical connectedness run");
  properties->add_option("-k", k, "oracle resolution for general graphs");
  properties->add_option("--eps", eps_arg, "oracle clustering radius");

  auto* witness = app.add_subcommand("witness", "non-compactness witnesses");
  witness->require_subcommand(1);
  auto* wit_nc = witness->add_subcommand("noncompact", "member sequence with non-member limit");
  wit_nc->add_option("graph", graph_path)->required();
  wit_nc->add_option("-N", seq_len, "sequence length");
  wit_nc->add_option("-k", k, "search resolution for the fallback");

  auto* lc = app.add_subcommand("lc", "local connectedness toolkit");
  lc->require_subcommand(1);
  auto* lc_delta = lc->add_subcommand("delta", "neighborhood budget at a member");
  lc_delta->add_option("graph", graph_path)->required();
  lc_delta->add_option("--subcontinuum", sub_path, "member JSON file")->required();
  lc_delta->add_option("--basepoint", basepoint, "node id or edge@t (required unless A = X)");
  auto* lc_chain = lc->add_subcommand("chain", "member chain between nearby members");
  lc_chain->add_option("graph", graph_path)->required();
  lc_chain->add_option("--a", sub_path, "first member JSON file")->required();
  lc_chain->add_option("--b", sub_path_b, "second member JSON file")->required();
  lc_chain->add_option("--eps", eps_arg, "ball radius (rational)");
  lc_chain->add_option("--steps", steps, "gap divisor");

  auto* oracle = app.add_subcommand("oracle", "grid hyperspace oracle");
  oracle->require_subcommand(1);
  auto* o_sample = oracle->add_subcommand("sample", "enumerate grid subcontinua and members");
  o_sample->add_option("graph", graph_path)->required();
  o_sample->add_option("-k", k, "subdivision resolution");

  auto* dendrite = app.add_subcommand("dendrite", "dendrite approximant laboratory");
  dendrite->require_subcommand(1);
  auto* d_build = dendrite->add_subcommand("build", "build a nested approximant");
  d_build->add_option("-s", dopt.s, "branching order (>= 3)");
  d_build->add_option("-d", dopt.d, "depth");
  auto* d_witness = dendrite->add_subcommand("witness", "nowhere-compactness witness");
  d_witness->add_option("--case", case_arg, "1 | 2 | 3")->required();
  d_witness->add_option("--eps", eps_arg, "ball radius");
  d_witness->add_option("-N", seq_len, "sequence length");
  d_witness->add_option("-s", dopt.s, "branching order");
  d_witness->add_option("-d", dopt.d, "depth");
  d_witness->add_option("--endpoint", y_endpoint, "endpoint node for case 1");
  auto* d_clopen = dendrite->add_subcommand("clopen", "clopen family check");
  d_clopen->add_option("-s", dopt.s);
  d_clopen->add_option("-d", dopt.d);
  d_clopen->add_option("-k", k, "grid resolution");
  d_clopen->add_option("--p", p_arg, "base position of p (rational)");
  d_clopen->add_option("--q", q_arg, "base position of q (rational)");
  auto* d_basis = dendrite->add_subcommand("basis", "shrinking clopen basis");
  d_basis->add_option("-s", dopt.s);
  d_basis->add_option("-d", dopt.d);
  d_basis->add_option("--case", case_arg, "ordinary | ram");
  d_basis->add_option("--eps", target_arg, "target diameter");
  d_basis->add_option("--n-max", n_max, "maximum stages");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    ordered_json err;
    err["error"] = e.what();
    err["kind"] = "input";
    emit(err);
    return 2;
  }

  try {
    long long budget = oracle_budget();
    if (classify->parsed()) {
      auto g = load_graph(graph_path);
      ordered_json j;
      j["classification"] = to_string(g->classify_space());
      j["endpoints"] = static_cast<int>(g->endpoints().size());
      j["ramification_points"] = static_cast<int>(g->ramification_points().size());
      j["topological_edges"] = static_cast<int>(g->topological_edges().size());
      emit(j);
    } else if (nc_enum->parsed()) {
      auto g = load_graph(graph_path);
      emit(enumeration_to_json(enumerate_ncstar(g)));
    } else if (nc_model->parsed()) {
      auto g = load_graph(graph_path);
      auto model = build_model(g, samples);
      if (format == "dot")
        emit_model_dot(model);
      else
        emit(model_to_json(model));
    } else if (components->parsed()) {
      auto g = load_graph(graph_path);
      ordered_json j;
      j["formula"] = component_count(g);
      j["rationale"] = g->ramification_points().empty()
                           ? "arc: the non-cut hyperspace is connected"
                           : "tree: component count 2|R|+|E|-1";
      if (with_oracle) {
        auto sample = sample_ncstar(g, k, budget);
        auto rep = cluster_components(sample, Rational::parse(eps_arg));
        if (format == "dot") {
          emit_adjacency_dot(sample, rep);
          return 0;
        }
        j["oracle_clusters"] = rep.cluster_count;
        auto cj = cluster_report_to_json(rep);
        j["gaps"] = cj["gaps"];
        j["enumeration"] = cj["enumeration"];
        j["member_count"] = rep.member_count;
      }
      emit(j);
    } else if (properties->parsed()) {
      auto g = load_graph(graph_path);
      OracleParams params;
      params.k = k;
      params.eps = Rational::parse(eps_arg);
      params.budget = budget;
      emit(property_report_to_json(decide_properties(g, !no_oracle, params)));
    } else if (wit_nc->parsed()) {
      auto g = load_graph(graph_path);
      emit(witness_to_json(noncompact_witness(g, seq_len, budget, k)));
    } else if (lc_delta->parsed()) {
      auto g = load_graph(graph_path);
      auto A = load_subcontinuum(g, sub_path);
      std::optional<GraphPoint> p0;
      if (!basepoint.empty()) p0 = point_from_string(g, basepoint);
      emit(delta_budget_to_json(g, local_delta(g, A, p0)));
    } else if (lc_chain->parsed()) {
      auto g = load_graph(graph_path);
      auto A = load_subcontinuum(g, sub_path);
      auto B = load_subcontinuum(g, sub_path_b);
      auto chain = connect_chain(g, A, B, Rational::parse(eps_arg), steps);
      ordered_json j;
      j["length"] = static_cast<int>(chain.size());
      j["eps"] = eps_arg;
      j["steps"] = steps;
      j["chain"] = ordered_json::array();
      for (const auto& s : chain) j["chain"].push_back(subcontinuum_to_json(s));
      Rational maxgap(0);
      for (size_t i = 0; i + 1 < chain.size(); ++i)
        maxgap = max(maxgap, hausdorff_distance(chain[i], chain[i + 1]));
      j["max_consecutive_gap"] = rational_to_json(maxgap);
      emit(j);
    } else if (o_sample->parsed()) {
      auto g = load_graph(graph_path);
      auto sample = sample_ncstar(g, k, budget);
      ordered_json j;
      j["k"] = k;
      j["enumeration"] = to_string(sample.mode);
      j["element_count"] = sample.element_count;
      j["member_count"] = sample.member_count();
      j["members"] = ordered_json::array();
      for (const auto& m : sample.members) j["members"].push_back(subcontinuum_to_json(m));
      emit(j);
    } else if (d_build->parsed()) {
      emit(approximant_to_json(build_approximant(dopt.s, dopt.d)));
    } else if (d_witness->parsed()) {
      auto ap = build_approximant(dopt.s, dopt.d);
      Rational eps = Rational::parse(eps_arg);
      WitnessSequence ws;
      if (case_arg == "1") {
        ws = nowhere_compact_witness(
            ap, Subcontinuum::singleton(ap.graph, ap.graph->node_point(y_endpoint)), eps, seq_len);
      } else if (case_arg == "2") {
        auto Y = branch_cut_member(ap.graph, ap.node_a(), ap.base_point(Rational(1, 3)));
        ws = nowhere_compact_witness(ap, Y, eps, seq_len);
      } else if (case_arg == "3") {
        ws = nowhere_compact_witness(ap, Subcontinuum::whole(ap.graph), eps, seq_len);
      } else {
        throw input_error("--case must be 1, 2 or 3");
      }
      ordered_json j = witness_to_json(ws);
      j["proxy"] = true;
      j["proxy_note"] =
          "nowhere-compactness of the limit hyperspace is witnessed here only by finite member "
          "sequences with verified non-member limits";
      emit(j);
    } else if (d_clopen->parsed()) {
      auto ap = build_approximant(dopt.s, dopt.d);
      // default p, q: the extreme interior ramification points of the base arc
      Rational p_pos = p_arg.empty() ? Rational(1, std::int64_t(1) << dopt.d)
                                     : Rational::parse(p_arg);
      Rational q_pos = q_arg.empty()
                           ? Rational(1) - Rational(1, std::int64_t(1) << dopt.d)
                           : Rational::parse(q_arg);
      auto fam = make_branch_cut_family(ap, ap.base_point(p_pos), ap.base_point(q_pos));
      auto rep = clopen_family_check(ap, fam, k, budget);
      emit(clopen_report_to_json(rep));
      if (!rep.sufficient) return 4;
    } else if (d_basis->parsed()) {
      auto ap = build_approximant(dopt.s, dopt.d);
      GraphPoint p = case_arg == "ram" ? ap.base_point(Rational(1, 2))
                                       : ap.base_point(Rational(1, 3));
      if (!case_arg.empty() && case_arg != "ram" && case_arg != "ordinary")
        throw input_error("--case must be ordinary or ram");
      auto Y = branch_cut_member(ap.graph, ap.node_a(), p);
      auto rep = shrinking_basis(ap, Y, n_max, Rational::parse(target_arg));
      emit(basis_report_to_json(rep));
      if (rep.need_more_depth) return 4;
    }
    return 0;
  } catch (const resource_error& e) {
    ordered_json err;
    err["error"] = e.what();
    err["kind"] = "resource";
    emit(err);
    return 3;
  } catch (const resolution_error& e) {
    ordered_json err;
    err["error"] = e.what();
    err["kind"] = "resolution";
    emit(err);
    return 4;
  } catch (const std::exception& e) {
    ordered_json err;
    err["error"] = e.what();
    err["kind"] = "input";
    emit(err);
    return 2;
  }
}
