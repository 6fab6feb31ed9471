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

#pragma once

#include <json.hpp>

#include "ncstar/dendrite_lab.hpp"
#include "ncstar/graph_ncstar.hpp"

namespace ncstar {

using ordered_json = nlohmann::ordered_json;

inline Rational rational_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw input_error("rational must be an integer or a \"p/q\" string");
}

inline ordered_json rational_to_json(const Rational& r) { return r.str(); }

/// Graph interchange: {"nodes": [...], "edges": [{"id","from","to","length"}]}.
inline GraphPtr graph_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
    throw input_error("graph document needs \"nodes\" and \"edges\"");
  for (const auto& [key, val] : j.items())
    if (key != "nodes" && key != "edges") throw input_error("unknown graph field: " + key);
  std::vector<std::string> nodes;
  for (const auto& n : j.at("nodes")) nodes.push_back(n.get<std::string>());
  std::vector<MetricGraph::EdgeSpec> edges;
  for (const auto& e : j.at("edges")) {
    MetricGraph::EdgeSpec spec;
    spec.id = e.at("id").get<std::string>();
    spec.from = e.at("from").get<std::string>();
    spec.to = e.at("to").get<std::string>();
    spec.length = e.contains("length") ? rational_from_json(e.at("length")) : Rational(1);
    edges.push_back(spec);
  }
  return MetricGraph::create(nodes, edges);
}

inline ordered_json graph_to_json(const GraphPtr& g) {
  ordered_json j;
  j["nodes"] = ordered_json::array();
  for (int i = 0; i < g->node_count(); ++i) j["nodes"].push_back(g->node_id(i));
  j["edges"] = ordered_json::array();
  for (const auto& e : g->edges()) {
    ordered_json je;
    je["id"] = e.id;
    je["from"] = g->node_id(e.from);
    je["to"] = g->node_id(e.to);
    je["length"] = rational_to_json(e.length);
    j["edges"].push_back(je);
  }
  return j;
}

/// Subcontinuum interchange: {"edge_intervals": {"e0": [["0","1/2"]], ...}};
/// serialization emits the full closed trace per edge.
inline Subcontinuum subcontinuum_from_json(const GraphPtr& g, const ordered_json& j) {
  if (!j.is_object() || !j.contains("edge_intervals"))
    throw input_error("subcontinuum document needs \"edge_intervals\"");
  std::map<std::string, std::vector<std::pair<Rational, Rational>>> raw;
  for (const auto& [eid, ivs] : j.at("edge_intervals").items()) {
    for (const auto& iv : ivs) {
      if (!iv.is_array() || iv.size() != 2)
        throw input_error("interval must be a [lo, hi] pair on edge " + eid);
      raw[eid].push_back({rational_from_json(iv[0]), rational_from_json(iv[1])});
    }
  }
  return Subcontinuum::from_closed_intervals(g, raw);
}

inline ordered_json subcontinuum_to_json(const Subcontinuum& s) {
  ordered_json ivs = ordered_json::object();
  const GraphPtr& g = s.graph();
  for (int e = 0; e < g->edge_count(); ++e) {
    auto trace = s.closed_trace(e);
    if (trace.empty()) continue;
    ordered_json list = ordered_json::array();
    for (const auto& [lo, hi] : trace)
      list.push_back(ordered_json::array({rational_to_json(lo), rational_to_json(hi)}));
    ivs[g->edge(e).id] = list;
  }
  ordered_json j;
  j["edge_intervals"] = ivs;
  return j;
}

inline ordered_json point_to_json(const GraphPtr& g, const GraphPoint& p) {
  ordered_json j;
  if (p.is_node()) {
    j["node"] = g->node_id(p.node);
  } else {
    j["edge"] = g->edge(p.edge).id;
    j["t"] = rational_to_json(p.t);
  }
  return j;
}

/// Compact CLI spelling: a node id, or "edge@t".
inline GraphPoint point_from_string(const GraphPtr& g, const std::string& s) {
  auto at = s.find('@');
  if (at == std::string::npos) {
    if (!g->has_node(s)) throw input_error("unknown node id: " + s);
    return g->node_point(s);
  }
  return g->edge_point(s.substr(0, at), Rational::parse(s.substr(at + 1)));
}

inline ordered_json property_report_to_json(const PropertyReport& r) {
  ordered_json j;
  j["classification"] = to_string(r.kind);
  j["compact"] = r.compact;
  if (r.connected)
    j["connected"] = *r.connected;
  else
    j["connected"] = nullptr;
  j["connected_empirical"] = r.connected_empirical;
  if (r.continuum)
    j["continuum"] = *r.continuum;
  else
    j["continuum"] = nullptr;
  j["equals_CX"] = r.equals_CX;
  j["homeo_to_X"] = r.homeo_to_X;
  j["locally_connected"] = r.locally_connected;
  if (r.tree_component_count) j["component_count"] = *r.tree_component_count;
  j["rationale"] = r.rationale;
  return j;
}

inline ordered_json cluster_report_to_json(const ClusterReport& r) {
  ordered_json j;
  j["eps"] = rational_to_json(r.eps);
  j["clusters"] = r.cluster_count;
  j["member_count"] = r.member_count;
  j["element_count"] = r.element_count;
  j["enumeration"] = to_string(r.mode);
  ordered_json gaps;
  gaps["grid_step"] = rational_to_json(r.grid_step);
  gaps["max_intra_cluster_gap"] = rational_to_json(r.max_intra_consecutive_gap);
  gaps["min_inter_cluster_gap"] = rational_to_json(r.min_inter_cluster_gap);
  gaps["adequate"] = r.adequate;
  j["gaps"] = gaps;
  j["assignment"] = r.assignment;
  return j;
}

inline ordered_json delta_budget_to_json(const GraphPtr& g, const DeltaBudget& b) {
  ordered_json j;
  j["eps1"] = rational_to_json(b.eps1);
  j["eps2"] = rational_to_json(b.eps2);
  j["eps3"] = rational_to_json(b.eps3);
  j["delta"] = rational_to_json(b.delta);
  j["whole_space"] = b.whole_space;
  if (b.basepoint) j["basepoint"] = point_to_json(g, *b.basepoint);
  return j;
}

inline ordered_json witness_to_json(const WitnessSequence& w) {
  ordered_json j;
  j["method"] = w.method;
  j["empirical"] = w.empirical;
  j["members"] = ordered_json::array();
  for (const auto& m : w.members) j["members"].push_back(subcontinuum_to_json(m));
  if (w.limit) j["limit"] = subcontinuum_to_json(*w.limit);
  j["limit_is_member"] = w.limit_is_member;
  j["distances"] = ordered_json::array();
  for (const auto& d : w.distances) j["distances"].push_back(rational_to_json(d));
  return j;
}

inline const char* to_string(ModelPiece::Kind k) {
  switch (k) {
    case ModelPiece::Kind::Core: return "core_nod";
    case ModelPiece::Kind::HairInitial: return "hair_initial";
    case ModelPiece::Kind::InternalLeft: return "internal_left";
    default: return "internal_right";
  }
}

inline ordered_json model_to_json(const TreeModel& m) {
  ordered_json j;
  j["samples_per_piece"] = m.samples_per_piece;
  j["piece_count"] = static_cast<int>(m.pieces.size());
  j["pieces"] = ordered_json::array();
  for (const auto& piece : m.pieces) {
    ordered_json jp;
    jp["kind"] = to_string(piece.kind);
    jp["samples"] = ordered_json::array();
    for (const auto& s : piece.samples) {
      ordered_json js;
      if (piece.kind == ModelPiece::Kind::Core) js["chart"] = s.chart;
      js["t"] = rational_to_json(s.param);
      js["member"] = true;
      js["set"] = subcontinuum_to_json(s.set);
      jp["samples"].push_back(js);
    }
    if (piece.open_end_limit) {
      jp["open_end_limit"] = subcontinuum_to_json(*piece.open_end_limit);
      jp["open_end_limit_is_member"] = false;
    }
    j["pieces"].push_back(jp);
  }
  return j;
}

inline const char* family_kind_name(NcFamily::Kind k) {
  switch (k) {
    case NcFamily::Kind::HairInitial: return "hair_initial";
    case NcFamily::Kind::HairComplement: return "hair_complement";
    case NcFamily::Kind::InternalLeft: return "internal_left";
    default: return "internal_right";
  }
}

inline ordered_json enumeration_to_json(const NcStarEnumeration& en) {
  const GraphPtr& g = en.tree;
  ordered_json j;
  j["whole_space"] = true;
  j["endpoint_singletons"] = ordered_json::array();
  for (int e : en.endpoint_nodes) j["endpoint_singletons"].push_back(g->node_id(e));
  j["families"] = ordered_json::array();
  for (const auto& f : en.families) {
    ordered_json jf;
    jf["kind"] = family_kind_name(f.kind);
    const auto& te = g->topological_edges()[f.topo_index];
    ordered_json steps = ordered_json::array();
    for (const auto& st : te.steps) steps.push_back(g->edge(st.edge).id);
    jf["edges"] = steps;
    jf["anchor_vertex"] = g->node_id(f.anchor_vertex(*g));
    jf["parameter_domain"] = ordered_json::array(
        {rational_to_json(f.dom_lo), rational_to_json(f.dom_hi)});
    jf["domain_closed"] = ordered_json::array({f.lo_closed, f.hi_closed});
    j["families"].push_back(jf);
  }
  j["family_count"] = static_cast<int>(en.families.size());
  return j;
}

inline ordered_json clopen_report_to_json(const ClopenReport& r) {
  ordered_json j;
  j["k"] = r.k;
  j["sufficient_resolution"] = r.sufficient;
  if (r.sufficient) {
    j["vietoris_exact"] = r.vietoris_exact;
    j["gap"] = rational_to_json(r.gap);
    j["family_size"] = r.family_size;
    j["member_count"] = r.member_count;
    j["clopen_at_sample_scale"] = r.verdict_clopen;
  } else {
    j["verdict"] = "insufficient resolution";
  }
  j["enumeration"] = to_string(r.mode);
  j["proxy"] = true;
  j["proxy_note"] =
      "clopenness of the family in the limit dendrite is witnessed here only by the exact "
      "Vietoris agreement and a positive sample-scale gap";
  return j;
}

inline ordered_json basis_report_to_json(const BasisReport& r) {
  ordered_json j;
  j["case"] = r.ramification_case ? "ramification" : "ordinary";
  j["stages"] = ordered_json::array();
  for (const auto& s : r.stages) {
    ordered_json js;
    js["cut_interval"] = ordered_json::array(
        {rational_to_json(s.lo_pos), rational_to_json(s.hi_pos)});
    js["diameter"] = rational_to_json(s.diameter);
    j["stages"].push_back(js);
  }
  if (r.first_within)
    j["first_stage_within_target"] = *r.first_within;
  else
    j["first_stage_within_target"] = nullptr;
  j["need_more_depth"] = r.need_more_depth;
  j["proxy"] = true;
  j["proxy_note"] =
      "zero-dimensionality of the limit hyperspace is witnessed here only by nested families "
      "with shrinking exact diameters";
  return j;
}

inline ordered_json approximant_to_json(const DendriteApproximant& ap) {
  ordered_json j;
  j["branching"] = ap.branching;
  j["depth"] = ap.depth;
  j["graph"] = graph_to_json(ap.graph);
  j["endpoints"] = ap.endpoint_count;
  j["ramification_points"] = ap.ramification_count;
  j["component_count"] = component_count(ap.graph);
  ordered_json base = ordered_json::array();
  for (const auto& st : ap.base_arc.steps) {
    ordered_json js;
    js["edge"] = ap.graph->edge(st.edge).id;
    js["forward"] = st.forward;
    base.push_back(js);
  }
  j["base_arc"] = base;
  j["ram_mesh"] = rational_to_json(ap.ram_mesh);
  ordered_json mesh = ordered_json::object();
  for (const auto& [id, bound] : ap.edge_mesh) mesh[id] = rational_to_json(bound);
  j["edge_mesh"] = mesh;
  // ids are stable hierarchical addresses; the nesting map into the next
  // depth follows from them
  ordered_json addr;
  addr["edge_children"] = "edge E splits at its midpoint node Em into E0 and E1";
  addr["hairs"] = "hair edges Eh<i> run from Em to the fresh tips Et<i>";
  addr["nesting"] = "a point of edge E at offset t maps to (E0, 2t) for t < 1/2, "
                    "(E1, 2t-1) for t > 1/2, and to the node Em at t = 1/2";
  j["addressing"] = addr;
  return j;
}

inline ordered_json arc_witness_to_json(const ArcWitness& w) {
  ordered_json j;
  j["edge"] = w.edge_id;
  j["window"] = ordered_json::array({rational_to_json(w.lo), rational_to_json(w.hi)});
  j["chain_length"] = static_cast<int>(w.chain.size());
  j["max_consecutive_gap"] = rational_to_json(w.max_consecutive_gap);
  j["chain"] = ordered_json::array();
  for (const auto& m : w.chain) j["chain"].push_back(subcontinuum_to_json(m));
  return j;
}

inline ordered_json limit_report_to_json(const LimitReport& r) {
  ordered_json j;
  j["cauchy"] = r.cauchy;
  j["consecutive_gaps"] = ordered_json::array();
  for (const auto& gsp : r.consecutive_gaps) j["consecutive_gaps"].push_back(rational_to_json(gsp));
  if (r.limit) {
    j["limit"] = subcontinuum_to_json(*r.limit);
    j["limit_is_member"] = *r.limit_is_member;
    j["distances_to_limit"] = ordered_json::array();
    for (const auto& d : r.distances_to_limit)
      j["distances_to_limit"].push_back(rational_to_json(d));
  } else {
    j["limit"] = nullptr;
  }
  return j;
}

}  // namespace ncstar
