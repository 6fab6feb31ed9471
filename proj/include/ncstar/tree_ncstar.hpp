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

#include <optional>
#include <string>
#include <vector>

#include "ncstar/subcontinuum.hpp"

namespace ncstar {

/// One-parameter family of non-cut members cut along a topological edge.
///
///   HairInitial      segments [e, cut] growing from an endpoint; cut interior
///   HairComplement   X minus the half-open initial hair segment [e, cut)
///   InternalLeft     X minus the component beyond the cut toward the far end
///   InternalRight    mirror family of the same internal edge
///
/// The parameter is arclength from the family's anchor vertex along the
/// oriented chain. On an arc both families are of kind HairInitial anchored
/// at the two endpoints.
struct NcFamily {
  enum class Kind { HairInitial, HairComplement, InternalLeft, InternalRight };
  Kind kind;
  int topo_index;     // index into graph->topological_edges()
  bool reversed;      // chain is walked from end_vertex to start_vertex
  Rational dom_lo, dom_hi;
  bool lo_closed, hi_closed;

  int anchor_vertex(const MetricGraph& g) const {
    const auto& te = g.topological_edges()[topo_index];
    return reversed ? te.end_vertex : te.start_vertex;
  }
  int far_vertex(const MetricGraph& g) const {
    const auto& te = g.topological_edges()[topo_index];
    return reversed ? te.start_vertex : te.end_vertex;
  }
  bool in_domain(const Rational& t) const {
    if (t < dom_lo || t > dom_hi) return false;
    if (t == dom_lo && !lo_closed) return false;
    if (t == dom_hi && !hi_closed) return false;
    return true;
  }
};

/// Where a member sits in the classification: the whole space, an endpoint
/// singleton, or an instance of one of the families.
struct MemberId {
  enum class Clause { Whole, EndpointSingleton, Family };
  Clause clause;
  int endpoint_node = -1;  // for EndpointSingleton
  int family = -1;         // for Family
  Rational param;          // for Family
};

/// Finite description of NC*(T) for a tree: the whole space, the endpoint
/// singletons, and the one-parameter families.
struct NcStarEnumeration {
  GraphPtr tree;
  std::vector<int> endpoint_nodes;
  std::vector<NcFamily> families;
};

namespace detail {

inline void require_tree(const GraphPtr& g, const char* op) {
  if (!g->is_acyclic()) throw domain_error(std::string(op) + " requires a tree");
}

inline GraphPoint chain_point(const GraphPtr& g, const TopoEdge& te, bool reversed,
                              const Rational& t) {
  return g->point_at(te, reversed ? te.length - t : t);
}

/// Strictly-inside probe for the germ of a chain near one of its ends.
inline GraphPoint germ_probe(const GraphPtr& g, const TopoEdge& te, bool at_end) {
  if (!at_end) {
    const auto& e = g->edge(te.steps.front().edge);
    return g->point_at(te, e.length / Rational(2));
  }
  const auto& e = g->edge(te.steps.back().edge);
  return g->point_at(te, te.length - e.length / Rational(2));
}

}  // namespace detail

/// X minus one complement component of a single cut point. The cut point
/// must not be an endpoint; the region must be a component of X minus {p}.
inline Subcontinuum branch_complement(const GraphPtr& tree, const GraphPoint& p,
                                      const OpenRegion& region) {
  detail::require_tree(tree, "branch_complement");
  tree->validate_point(p);
  if (tree->point_order(p) == 1) throw domain_error("cut point must not be an endpoint");
  auto comps = Subcontinuum::singleton(tree, p).complement_components();
  bool found = false;
  for (const auto& c : comps)
    if (c == region) found = true;
  if (!found) throw input_error("region is not a component of the complement of the cut point");
  return complement_of_region(region);
}

/// Number of components of NC*(T): 1 for the arc, else 2|R| + |E| - 1.
inline int component_count(const GraphPtr& tree) {
  detail::require_tree(tree, "component_count");
  int m = static_cast<int>(tree->ramification_points().size());
  int n = static_cast<int>(tree->endpoints().size());
  if (m == 0) return 1;
  return 2 * m + n - 1;
}

/// The classification of NC*(T) as a finite parameterized description.
inline NcStarEnumeration enumerate_ncstar(const GraphPtr& tree) {
  detail::require_tree(tree, "enumerate_ncstar");
  NcStarEnumeration out;
  out.tree = tree;
  out.endpoint_nodes = tree->endpoints();
  const auto& chains = tree->topological_edges();
  for (int i = 0; i < static_cast<int>(chains.size()); ++i) {
    const auto& te = chains[i];
    int o_start = tree->node_order(te.start_vertex);
    int o_end = tree->node_order(te.end_vertex);
    if (o_start == 1 && o_end == 1) {
      // the arc: two open families of initial segments, one per endpoint
      out.families.push_back({NcFamily::Kind::HairInitial, i, false, Rational(0), te.length,
                              false, false});
      out.families.push_back({NcFamily::Kind::HairInitial, i, true, Rational(0), te.length,
                              false, false});
    } else if (o_start == 1 || o_end == 1) {
      // hair, anchored at its endpoint
      bool rev = o_end == 1;
      out.families.push_back({NcFamily::Kind::HairInitial, i, rev, Rational(0), te.length,
                              false, false});
      out.families.push_back({NcFamily::Kind::HairComplement, i, rev, Rational(0), te.length,
                              false, true});
    } else {
      // internal edge
      out.families.push_back({NcFamily::Kind::InternalLeft, i, false, Rational(0), te.length,
                              true, false});
      out.families.push_back({NcFamily::Kind::InternalRight, i, true, Rational(0), te.length,
                              true, false});
    }
  }
  return out;
}

/// Realizes one family member: cut the tree at arclength t from the anchor
/// and remove the complement component on the appropriate side.
inline Subcontinuum instantiate_family(const NcStarEnumeration& en, int family,
                                       const Rational& t) {
  const auto& g = en.tree;
  const NcFamily& f = en.families[family];
  if (!f.in_domain(t)) throw input_error("family parameter outside its domain");
  const auto& te = g->topological_edges()[f.topo_index];
  GraphPoint cut = detail::chain_point(g, te, f.reversed, t);
  // every family removes the component on the far side of the cut, except the
  // hair-complement charts which remove the endpoint side they are anchored at
  int removed_rep = f.kind == NcFamily::Kind::HairComplement ? f.anchor_vertex(*g)
                                                             : f.far_vertex(*g);
  auto comps = Subcontinuum::singleton(g, cut).complement_components();
  for (const auto& c : comps)
    if (c.contains_node(removed_rep)) return complement_of_region(c);
  throw domain_error("no complement component contains the removed-side representative");
}

/// Decides which clause a member belongs to; nullopt when the set is not a
/// classification instance (which for true members cannot happen).
inline std::optional<MemberId> classify_member(const NcStarEnumeration& en,
                                               const Subcontinuum& S) {
  const auto& g = en.tree;
  if (S.is_whole()) return MemberId{MemberId::Clause::Whole, -1, -1, Rational(0)};
  if (S.is_singleton()) {
    GraphPoint p = S.the_point();
    if (p.is_node() && g->node_order(p.node) == 1)
      return MemberId{MemberId::Clause::EndpointSingleton, p.node, -1, Rational(0)};
    return std::nullopt;
  }
  auto bd = S.boundary();
  if (bd.size() != 1) return std::nullopt;
  GraphPoint p = bd[0];
  auto comps = S.complement_components();
  if (comps.size() != 1) return std::nullopt;
  const OpenRegion& C = comps[0];
  // C must be a full complement component of the cut point
  bool is_cut_comp = false;
  for (const auto& r : Subcontinuum::singleton(g, p).complement_components())
    if (r == C) is_cut_comp = true;
  if (!is_cut_comp) return std::nullopt;

  const auto& chains = g->topological_edges();
  if (!p.is_node() || g->node_order(p.node) == 2) {
    // interior cut: find its chain and side
    for (int i = 0; i < static_cast<int>(chains.size()); ++i) {
      auto pos = g->position_on(chains[i], p);
      if (!pos) continue;
      bool removed_far = C.contains_node(chains[i].end_vertex);
      for (int fi = 0; fi < static_cast<int>(en.families.size()); ++fi) {
        const NcFamily& f = en.families[fi];
        if (f.topo_index != i) continue;
        bool far_side = f.kind != NcFamily::Kind::HairComplement;
        // orientation: the family's "far" end in chain coordinates
        bool removes_chain_end = f.reversed ? !far_side : far_side;
        if (removes_chain_end != removed_far) continue;
        Rational t = f.reversed ? chains[i].length - *pos : *pos;
        if (!f.in_domain(t)) continue;
        return MemberId{MemberId::Clause::Family, -1, fi, t};
      }
      return std::nullopt;
    }
    return std::nullopt;
  }
  // vertex cut: identify which chain germ the removed component hangs from
  for (int i = 0; i < static_cast<int>(chains.size()); ++i) {
    const auto& te = chains[i];
    bool at_start = te.start_vertex == p.node;
    bool at_end = te.end_vertex == p.node;
    if (!at_start && !at_end) continue;
    bool hangs = C.contains(detail::germ_probe(g, te, at_end));
    if (!hangs) continue;
    // the family of chain i whose closed end sits at p
    for (int fi = 0; fi < static_cast<int>(en.families.size()); ++fi) {
      const NcFamily& f = en.families[fi];
      if (f.topo_index != i) continue;
      Rational t;
      if (f.kind == NcFamily::Kind::HairComplement)
        t = f.dom_hi;
      else if (f.kind == NcFamily::Kind::InternalLeft || f.kind == NcFamily::Kind::InternalRight)
        t = f.dom_lo;
      else
        continue;  // HairInitial has no vertex instance
      GraphPoint cut = detail::chain_point(g, te, f.reversed, t);
      if (!(cut.is_node() && cut.node == p.node)) continue;
      // check the family removes this germ, not the opposite one
      int rep = f.kind == NcFamily::Kind::HairComplement ? f.anchor_vertex(*g)
                                                         : f.far_vertex(*g);
      if (!C.contains_node(rep)) continue;
      if (!f.in_domain(t)) continue;
      return MemberId{MemberId::Clause::Family, -1, fi, t};
    }
  }
  return std::nullopt;
}

/// One chart piece of the tree model.
struct ModelPiece {
  enum class Kind { Core, HairInitial, InternalLeft, InternalRight };
  struct Sample {
    int chart;        // hair index for Core pieces, else 0
    Rational param;   // arclength parameter of the chart
    Subcontinuum set;
  };
  Kind kind;
  int family = -1;  // index into the enumeration's families, -1 for Core
  std::vector<Sample> samples;
  std::optional<Subcontinuum> open_end_limit;  // absent for the compact core
};

/// Sampled realization of the tree model: a simple n-od core glued from the
/// hair-complement charts at X, plus n + 2m - 2 half-open arc pieces, each
/// recording the non-member limit at its open end.
struct TreeModel {
  GraphPtr tree;
  NcStarEnumeration enumeration;
  std::vector<ModelPiece> pieces;
  int samples_per_piece;
};

inline TreeModel build_model(const GraphPtr& tree, int samples_per_piece) {
  detail::require_tree(tree, "build_model");
  if (samples_per_piece < 1) throw input_error("samples_per_piece must be positive");
  if (tree->ramification_points().empty())
    throw domain_error("the model requires a tree different from the interval");
  TreeModel model;
  model.tree = tree;
  model.enumeration = enumerate_ncstar(tree);
  model.samples_per_piece = samples_per_piece;
  const auto& en = model.enumeration;
  const int s = samples_per_piece;

  ModelPiece core;
  core.kind = ModelPiece::Kind::Core;
  core.samples.push_back({-1, Rational(0), Subcontinuum::whole(tree)});
  int hair_chart = 0;
  for (int fi = 0; fi < static_cast<int>(en.families.size()); ++fi) {
    const NcFamily& f = en.families[fi];
    const auto& te = tree->topological_edges()[f.topo_index];
    switch (f.kind) {
      case NcFamily::Kind::HairComplement: {
        for (int j = 1; j <= s; ++j) {
          Rational t = te.length * Rational(j, s);
          core.samples.push_back({hair_chart, t, instantiate_family(en, fi, t)});
        }
        ++hair_chart;
        break;
      }
      case NcFamily::Kind::HairInitial: {
        ModelPiece piece;
        piece.kind = ModelPiece::Kind::HairInitial;
        piece.family = fi;
        for (int j = 0; j < s; ++j) {
          Rational t = te.length * Rational(j, s);
          Subcontinuum member = j == 0
                                    ? Subcontinuum::singleton(
                                          tree, tree->node_point(f.anchor_vertex(*tree)))
                                    : instantiate_family(en, fi, t);
          piece.samples.push_back({0, t, member});
        }
        // open-end limit: the closed hair [e, r], not a member
        PiecewiseSet hair(tree);
        for (const auto& st : te.steps)
          hair.add_raw(st.edge, {Rational(0), Rational(1), true, true});
        hair.canonicalize();
        piece.open_end_limit = Subcontinuum::from_pointset(std::move(hair));
        model.pieces.push_back(std::move(piece));
        break;
      }
      case NcFamily::Kind::InternalLeft:
      case NcFamily::Kind::InternalRight: {
        ModelPiece piece;
        piece.kind = f.kind == NcFamily::Kind::InternalLeft ? ModelPiece::Kind::InternalLeft
                                                            : ModelPiece::Kind::InternalRight;
        piece.family = fi;
        // both internal charts are closed at parameter 0 (their anchor vertex)
        // and open toward the far vertex
        for (int j = 0; j < s; ++j) {
          Rational t = te.length * Rational(j, s);
          piece.samples.push_back({0, t, instantiate_family(en, fi, t)});
        }
        // open-end limit: closure of the complement component of the far
        // vertex cut containing the anchor side
        int open_vertex = f.far_vertex(*tree);
        int kept_vertex = f.anchor_vertex(*tree);
        auto comps =
            Subcontinuum::singleton(tree, tree->node_point(open_vertex)).complement_components();
        bool set = false;
        for (const auto& c : comps)
          if (c.contains_node(kept_vertex)) {
            piece.open_end_limit = region_closure(c);
            set = true;
          }
        if (!set) throw domain_error("internal-edge limit component not found");
        model.pieces.push_back(std::move(piece));
        break;
      }
    }
  }
  model.pieces.insert(model.pieces.begin(), std::move(core));
  return model;
}

}  // namespace ncstar
