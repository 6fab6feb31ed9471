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

#include <string>
#include <vector>

#include "ncstar/graph_ncstar.hpp"

namespace ncstar {

/// Finite tree stage of the nested approximant scheme for a dendrite with
/// dense endpoints. Stage j splits every edge at its midpoint and attaches
/// s - 2 fresh hairs of one third of the split edge's length there, so every
/// ramification point has order s and all coordinates stay rational.
struct DendriteApproximant {
  int branching = 3;
  int depth = 0;
  GraphPtr graph;
  TopoEdge base_arc;  // the original arc from node "a" to node "b", length 1
  Rational ram_mesh;  // max over X of the distance to the nearest ramification point
  std::vector<std::pair<std::string, Rational>> edge_mesh;  // per-edge bound
  int endpoint_count = 0;
  int ramification_count = 0;

  GraphPoint node_a() const { return graph->node_point("a"); }
  GraphPoint node_b() const { return graph->node_point("b"); }

  /// Arclength position of a point on the base arc, if it lies there.
  std::optional<Rational> base_position(const GraphPoint& p) const {
    return graph->position_on(base_arc, p);
  }
  GraphPoint base_point(const Rational& pos) const { return graph->point_at(base_arc, pos); }
};

inline DendriteApproximant build_approximant(int branching, int depth,
                                             long long max_edges = 200000) {
  if (branching < 3) throw input_error("branching must be at least 3");
  if (depth < 0) throw input_error("depth must be nonnegative");
  long long edges = 1;
  for (int j = 0; j < depth; ++j) {
    edges *= branching;
    if (edges > max_edges)
      throw resource_error("approximant would exceed the edge budget at depth " +
                           std::to_string(depth));
  }
  struct E {
    std::string id, from, to;
    Rational len;
  };
  std::vector<std::string> nodes{"a", "b"};
  std::vector<E> cur{{"ab", "a", "b", Rational(1)}};
  std::vector<std::pair<std::string, bool>> base{{"ab", true}};  // id, forward along a->b
  for (int j = 0; j < depth; ++j) {
    std::vector<E> next;
    std::map<std::string, std::pair<std::string, std::string>> children;  // id -> (left, right)
    for (const auto& e : cur) {
      std::string mid = e.id + "m";
      nodes.push_back(mid);
      next.push_back({e.id + "0", e.from, mid, e.len / Rational(2)});
      next.push_back({e.id + "1", mid, e.to, e.len / Rational(2)});
      children[e.id] = {e.id + "0", e.id + "1"};
      for (int h = 0; h + 2 < branching; ++h) {
        std::string tip = e.id + "t" + std::to_string(h);
        nodes.push_back(tip);
        next.push_back({e.id + "h" + std::to_string(h), mid, tip, e.len / Rational(3)});
      }
    }
    std::vector<std::pair<std::string, bool>> base_next;
    for (const auto& [id, fwd] : base) {
      const auto& [left, right] = children.at(id);
      if (fwd) {
        base_next.push_back({left, true});
        base_next.push_back({right, true});
      } else {
        base_next.push_back({right, false});
        base_next.push_back({left, false});
      }
    }
    cur = std::move(next);
    base = std::move(base_next);
  }
  std::vector<MetricGraph::EdgeSpec> specs;
  for (const auto& e : cur) specs.push_back({e.id, e.from, e.to, e.len});
  DendriteApproximant ap;
  ap.branching = branching;
  ap.depth = depth;
  ap.graph = MetricGraph::create(nodes, specs);
  ap.base_arc.start_vertex = ap.graph->node_index("a");
  ap.base_arc.end_vertex = ap.graph->node_index("b");
  ap.base_arc.length = Rational(1);
  for (const auto& [id, fwd] : base)
    ap.base_arc.steps.push_back({ap.graph->edge_idx(id), fwd});
  ap.endpoint_count = static_cast<int>(ap.graph->endpoints().size());
  ap.ramification_count = static_cast<int>(ap.graph->ramification_points().size());
  // per-edge distance-to-ramification mesh
  std::vector<std::pair<int, Rational>> offers;
  for (int rnode : ap.graph->ramification_points()) offers.emplace_back(rnode, Rational(0));
  if (!offers.empty()) {
    auto dr = ap.graph->node_distances(offers);
    ap.ram_mesh = Rational(0);
    for (const auto& e : ap.graph->edges()) {
      // max over the edge of min(t L + dr[from], (1-t) L + dr[to]); the peak
      // sits at the crossing, which the triangle inequality keeps inside
      Rational peak = (dr[e.from] + dr[e.to] + e.length) / Rational(2);
      ap.edge_mesh.emplace_back(e.id, peak);
      ap.ram_mesh = max(ap.ram_mesh, peak);
    }
  } else {
    ap.ram_mesh = ap.graph->infinite_bound();
  }
  return ap;
}

/// Lifts a point of T_d into T_{d+1} through the isometric nesting map.
inline GraphPoint lift_point(const DendriteApproximant& from, const DendriteApproximant& to,
                             const GraphPoint& p) {
  if (to.depth != from.depth + 1) throw input_error("lift_point expects consecutive depths");
  if (p.is_node()) return to.graph->node_point(from.graph->node_id(p.node));
  const auto& e = from.graph->edge(p.edge);
  if (p.t < Rational(1, 2)) return to.graph->edge_point(e.id + "0", p.t * Rational(2));
  if (p.t > Rational(1, 2))
    return to.graph->edge_point(e.id + "1", p.t * Rational(2) - Rational(1));
  return to.graph->node_point(e.id + "m");
}

/// Component of the complement of {x} containing the anchor node a.
inline OpenRegion a_side_component(const GraphPtr& g, const GraphPoint& anchor,
                                   const GraphPoint& x) {
  if (anchor == x) throw input_error("cut point equals the anchor");
  auto comps = Subcontinuum::singleton(g, x).complement_components();
  for (auto& c : comps)
    if (c.contains(anchor)) return c;
  throw domain_error("anchor not found in any complement component");
}

/// B_x = X minus the component of X minus {x} containing the anchor.
inline Subcontinuum branch_cut_member(const GraphPtr& g, const GraphPoint& anchor,
                                      const GraphPoint& x) {
  return complement_of_region(a_side_component(g, anchor, x));
}

/// The family {B_x : x in pq minus {p}} for ramification points p, q on the
/// base arc with a < p < q < b, together with the excluded side components.
struct BranchCutFamily {
  GraphPoint anchor;  // node a
  GraphPoint p, q;
  Rational p_pos, q_pos;  // arclength along the base arc
  OpenRegion C_p, C_q;    // hair components at p and q, off the base arc
  Subcontinuum B_p, B_q;
};

inline BranchCutFamily make_branch_cut_family(const DendriteApproximant& ap, const GraphPoint& p,
                                              const GraphPoint& q) {
  const GraphPtr& g = ap.graph;
  auto pp = ap.base_position(p), qp = ap.base_position(q);
  if (!pp || !qp) throw input_error("p and q must lie on the base arc");
  if (!(*pp > Rational(0)) || !(*qp < ap.base_arc.length) || !(*pp < *qp))
    throw input_error("need a < p < q < b with q separating b from p");
  if (g->point_order(p) < 3 || g->point_order(q) < 3)
    throw input_error("p and q must be ramification points");
  GraphPoint a = ap.node_a();
  GraphPoint b = ap.node_b();

  auto pick_side = [&](const GraphPoint& cut, const GraphPoint& ex1, const GraphPoint& ex2) {
    auto comps = Subcontinuum::singleton(g, cut).complement_components();
    const OpenRegion* best = nullptr;
    for (const auto& c : comps) {
      if (c.contains(ex1) || c.contains(ex2)) continue;
      if (!best) best = &c;
    }
    if (!best) throw domain_error("no excluded-side component at the cut");
    return *best;
  };
  BranchCutFamily fam{a,
                      p,
                      q,
                      *pp,
                      *qp,
                      pick_side(p, a, q),
                      pick_side(q, p, b),
                      branch_cut_member(g, a, p),
                      branch_cut_member(g, a, q)};
  return fam;
}

/// Is a member of the grid sample one of the B_x with x in pq minus {p}?
inline bool in_branch_cut_family(const DendriteApproximant& ap, const BranchCutFamily& fam,
                                 const Subcontinuum& B) {
  if (B.is_whole()) return false;
  auto bd = B.boundary();
  if (bd.size() != 1) return false;
  auto pos = ap.base_position(bd[0]);
  if (!pos) return false;
  if (!(*pos > fam.p_pos) || !(*pos <= fam.q_pos)) return false;
  return !B.contains(fam.anchor);
}

/// Sample-scale clopenness report for the family.
struct ClopenReport {
  bool sufficient = false;      // the family is nonempty at this resolution
  bool vietoris_exact = false;  // Vietoris membership coincides with the family
  Rational gap;                 // min H-distance family vs non-family members
  int family_size = 0;
  int member_count = 0;
  bool verdict_clopen = false;
  EnumerationMode mode = EnumerationMode::Exhaustive;
  int k = 0;
};

/// Checks, over the grid NC* sample at resolution k, that the Vietoris set
/// U = <B_p minus {p}, B_q minus closure(C_q), C_q> captures exactly the
/// family (openness) and that the family sits at a strictly positive
/// Hausdorff gap from the other members (closedness at sample scale).
inline ClopenReport clopen_family_check(const DendriteApproximant& ap,
                                        const BranchCutFamily& fam, int k,
                                        long long budget = kDefaultOracleBudget) {
  const GraphPtr& g = ap.graph;
  ClopenReport rep;
  rep.k = k;
  auto sample = sample_ncstar(g, k, budget);
  rep.mode = sample.mode;
  rep.member_count = static_cast<int>(sample.members.size());

  PiecewiseSet u1 = fam.B_p.pointset().set_difference(PiecewiseSet::single_point(g, fam.p));
  PiecewiseSet cq_closure = fam.C_q.pointset().closure();
  PiecewiseSet u2 = fam.B_q.pointset().set_difference(cq_closure);
  const PiecewiseSet& u3 = fam.C_q.pointset();
  PiecewiseSet u_all = u1.set_union(u2).set_union(u3);

  std::vector<char> in_fam(sample.members.size(), 0), in_u(sample.members.size(), 0);
  for (size_t i = 0; i < sample.members.size(); ++i) {
    const auto& m = sample.members[i];
    in_fam[i] = in_branch_cut_family(ap, fam, m) ? 1 : 0;
    in_u[i] = (m.pointset().is_subset_of(u_all) && m.pointset().intersects(u1) &&
               m.pointset().intersects(u2) && m.pointset().intersects(u3))
                  ? 1
                  : 0;
    if (in_fam[i]) ++rep.family_size;
  }
  if (rep.family_size == 0) {
    rep.sufficient = false;
    return rep;  // insufficient resolution; never a clopen claim
  }
  rep.sufficient = true;
  rep.vietoris_exact = true;
  for (size_t i = 0; i < sample.members.size(); ++i)
    if (in_fam[i] != in_u[i]) rep.vietoris_exact = false;

  rep.gap = g->infinite_bound();
  const auto& fields = sample.member_fields();
  for (size_t i = 0; i < sample.members.size(); ++i) {
    if (!in_fam[i]) continue;
    for (size_t j = 0; j < sample.members.size(); ++j) {
      if (in_fam[j]) continue;
      if (!(hausdorff_lower_bound(fields[i], fields[j], rep.gap) < rep.gap)) continue;
      rep.gap = min(rep.gap, hausdorff_distance_cached(sample.members[i], fields[i],
                                                       sample.members[j], fields[j]));
    }
  }
  rep.verdict_clopen = rep.vietoris_exact && rep.gap > Rational(0);
  return rep;
}

/// One stage of the shrinking clopen basis around Y = B_p.
struct BasisStage {
  Rational lo_pos, hi_pos;  // the cut interval (lo, hi] along the base arc
  Rational diameter;        // exact H-diameter of the family closure
};

struct BasisReport {
  bool ramification_case = false;
  std::vector<BasisStage> stages;
  std::optional<int> first_within;  // 1-based stage index with diameter <= target
  bool need_more_depth = false;
};

/// Nested families B_n around a branch-complement member Y = B_p, following
/// the monotone scheme: flanking ramification points marching into p, with
/// exact diameters computed from the family closures.
inline BasisReport shrinking_basis(const DendriteApproximant& ap, const Subcontinuum& Y,
                                   int n_max, const Rational& target) {
  const GraphPtr& g = ap.graph;
  if (Y.is_whole() || Y.is_singleton())
    throw domain_error("the basis construction applies to branch-complement members");
  auto bd = Y.boundary();
  if (bd.size() != 1) throw domain_error("Y must have a one-point boundary");
  GraphPoint p = bd[0];
  auto ppos_opt = ap.base_position(p);
  if (!ppos_opt) throw domain_error("the cut point of Y must lie on the base arc");
  Rational ppos = *ppos_opt;
  if (Y.contains(ap.node_a())) throw domain_error("Y must be the branch cut away from the anchor");

  BasisReport rep;
  rep.ramification_case = g->point_order(p) >= 3;

  // ramification points along the base arc, by position
  std::vector<Rational> below, above;
  for (int rn : g->ramification_points()) {
    auto pos = ap.base_position(g->node_point(rn));
    if (!pos) continue;
    if (*pos < ppos) below.push_back(*pos);
    if (*pos > ppos) above.push_back(*pos);
  }
  std::sort(below.begin(), below.end());
  std::sort(above.begin(), above.end(), std::greater<Rational>());

  int stages = rep.ramification_case ? static_cast<int>(below.size())
                                     : static_cast<int>(std::min(below.size(), above.size()));
  if (stages > n_max) stages = n_max;
  if (stages == 0) {
    rep.need_more_depth = true;
    return rep;
  }
  // q_n marches toward p from below: use the `stages` closest points, ordered
  // from the farthest to the nearest so the families are nested
  std::vector<Rational> qs(below.end() - stages, below.end());
  std::vector<Rational> rs;
  if (!rep.ramification_case)
    rs.assign(above.end() - stages, above.end());  // descending toward p
  for (int n = 0; n < stages; ++n) {
    Rational qpos = qs[n];
    Rational rpos = rep.ramification_case ? ppos : rs[n];
    // family {B_x : x in (q, r]}; sup member = closure of the b-side
    // component at q, inf member = B_r
    GraphPoint qpt = ap.base_point(qpos);
    auto comps = Subcontinuum::singleton(g, qpt).complement_components();
    const OpenRegion* bside = nullptr;
    for (const auto& c : comps)
      if (c.contains(ap.node_b())) bside = &c;
    if (!bside) throw domain_error("no b-side component at the basis cut");
    Subcontinuum sup = region_closure(*bside);
    Subcontinuum inf = branch_cut_member(g, ap.node_a(), ap.base_point(rpos));
    rep.stages.push_back({qpos, rpos, hausdorff_distance(sup, inf)});
  }
  // nestedness and monotone diameters
  for (size_t i = 0; i + 1 < rep.stages.size(); ++i) {
    if (rep.stages[i + 1].lo_pos < rep.stages[i].lo_pos ||
        rep.stages[i + 1].hi_pos > rep.stages[i].hi_pos)
      throw domain_error("basis families are not nested");
    if (rep.stages[i + 1].diameter > rep.stages[i].diameter)
      throw domain_error("basis diameters are not nonincreasing");
  }
  for (size_t i = 0; i < rep.stages.size(); ++i)
    if (rep.stages[i].diameter <= target) {
      rep.first_within = static_cast<int>(i) + 1;
      break;
    }
  if (!rep.first_within) rep.need_more_depth = true;
  return rep;
}

namespace detail {

/// Members marching toward a ramification point y from inside the edge that
/// leads toward the kept side; the exact limit is the closure of the kept
/// component at y.
inline WitnessSequence case2_witness(const GraphPtr& g, const Subcontinuum& Y,
                                     const GraphPoint& cut, const Rational& eps, int N) {
  // find a ramification node y inside the removed side with the closure of
  // the kept component at y within eps of Y
  auto comps = Subcontinuum::singleton(g, cut).complement_components();
  const OpenRegion* removed = nullptr;
  for (const auto& c : comps)
    if (!Y.pointset().intersects(c.pointset())) {
      if (!removed) removed = &c;
    }
  if (!removed) throw domain_error("case 2: removed component not found");
  // candidate ramification nodes inside the removed component, nearest first
  std::vector<std::pair<Rational, int>> cands;
  std::vector<Rational> field = Y.node_distance_field();
  for (int rn : g->ramification_points())
    if (removed->contains_node(rn)) cands.emplace_back(field[rn], rn);
  std::sort(cands.begin(), cands.end());
  for (const auto& [dist_to_Y, yn] : cands) {
    GraphPoint y = g->node_point(yn);
    auto ycomps = Subcontinuum::singleton(g, y).complement_components();
    const OpenRegion* kept = nullptr;
    for (const auto& c : ycomps)
      if (c.contains(cut)) kept = &c;  // the side holding Y
    if (!kept) continue;
    Subcontinuum Z = region_closure(*kept);
    if (!(hausdorff_distance(Z, Y) < eps)) continue;
    if (Z.is_noncut()) continue;  // needs >= 3 branches at y
    // the edge leaving y into the kept side (its interior lies in one piece)
    int march_edge = -1, march_end = -1;
    for (const auto& [ei, end] : g->incident_slots(yn)) {
      if (kept->contains(g->edge_point(ei, Rational(1, 2)))) {
        march_edge = ei;
        march_end = end;
        break;
      }
    }
    if (march_edge < 0) continue;
    // keep the march strictly between y and the cut when they share the edge
    Rational cap(1);
    if (!cut.is_node() && cut.edge == march_edge)
      cap = march_end == 0 ? cut.t : Rational(1) - cut.t;
    std::vector<Subcontinuum> members;
    bool ok = true;
    for (int n = 1; n <= N && ok; ++n) {
      Rational t = cap / Rational(std::int64_t(1) << (n + 1));
      GraphPoint yk = g->edge_point(march_edge, march_end == 0 ? t : Rational(1) - t);
      auto kcomps = Subcontinuum::singleton(g, yk).complement_components();
      const OpenRegion* keep = nullptr;
      for (const auto& c : kcomps)
        if (c.contains(cut)) keep = &c;
      if (!keep) {
        ok = false;
        break;
      }
      Subcontinuum m = region_closure(*keep);
      if (!(hausdorff_distance(m, Y) < eps)) {
        ok = false;
        break;
      }
      members.push_back(std::move(m));
    }
    if (!ok || members.size() != static_cast<size_t>(N)) continue;
    return finish_witness(std::move(members), Z, "dendrite_case2", false);
  }
  throw resolution_error(
      "insufficient depth: no ramification point close enough to the cut (deepen the "
      "approximant)");
}

}  // namespace detail

/// Nowhere-compactness witness around a member Y of the approximant, per the
/// three classification clauses: endpoint singleton, branch complement, or
/// the whole space.
inline WitnessSequence nowhere_compact_witness(const DendriteApproximant& ap,
                                               const Subcontinuum& Y, const Rational& eps,
                                               int N) {
  const GraphPtr& g = ap.graph;
  if (!(eps > Rational(0))) throw input_error("eps must be positive");
  if (!Y.is_noncut()) throw input_error("Y must be a member");

  if (Y.is_singleton()) {
    // Case 1: endpoint singletons converging to a nearby ramification singleton
    GraphPoint e = Y.the_point();
    if (!e.is_node() || g->node_order(e.node) != 1)
      throw domain_error("a singleton member must be an endpoint");
    std::vector<Rational> de = Subcontinuum::singleton(g, e).node_distance_field();
    int t_node = -1;
    for (int rn : g->ramification_points())
      if (t_node < 0 || de[rn] < de[t_node]) t_node = rn;
    if (t_node < 0 || !(de[t_node] < eps))
      throw resolution_error("insufficient depth: no ramification point within eps of the endpoint");
    std::vector<Rational> dt =
        Subcontinuum::singleton(g, g->node_point(t_node)).node_distance_field();
    // endpoint tips inside the eps-ball around {e}, approaching t
    std::vector<std::pair<Rational, int>> tips;
    for (int en : g->endpoints()) {
      if (en == e.node) continue;
      if (de[en] < eps) tips.emplace_back(dt[en], en);
    }
    std::sort(tips.begin(), tips.end(),
              [](const auto& x, const auto& y) { return y.first < x.first; });
    std::vector<Subcontinuum> members;
    Rational last = g->infinite_bound();
    for (const auto& [d, en] : tips) {
      if (!(d < last)) continue;
      last = d;
      members.push_back(Subcontinuum::singleton(g, g->node_point(en)));
      if (static_cast<int>(members.size()) == N) break;
    }
    if (static_cast<int>(members.size()) < N)
      throw resolution_error("insufficient depth: only " + std::to_string(members.size()) +
                             " endpoint tips converge within eps; deepen the approximant");
    return detail::finish_witness(std::move(members),
                                  Subcontinuum::singleton(g, g->node_point(t_node)),
                                  "dendrite_case1", false);
  }

  if (Y.is_whole()) {
    // Case 3: reduce to case 2 around a branch complement close to X
    for (int j = 2; j < 40; ++j) {
      Rational pos = Rational(1) - Rational(1, std::int64_t(1) << j);
      GraphPoint x = ap.base_point(pos);
      auto comps = Subcontinuum::singleton(g, x).complement_components();
      const OpenRegion* bside = nullptr;
      for (const auto& c : comps)
        if (c.contains(ap.node_b())) bside = &c;
      if (!bside) continue;
      Subcontinuum Yp = complement_of_region(*bside);
      Rational d0 = hausdorff_distance(Yp, Subcontinuum::whole(g));
      if (!(d0 < eps)) continue;
      auto bd = Yp.boundary();
      try {
        auto ws = detail::case2_witness(g, Yp, bd[0], eps - d0, N);
        // re-anchor the distances to the ball around X: members stay within
        // eps of X by the triangle inequality, checked exactly below
        for (const auto& m : ws.members)
          if (!(hausdorff_distance(m, Subcontinuum::whole(g)) < eps))
            throw domain_error("case 3 member escaped the eps-ball around X");
        ws.method = "dendrite_case3";
        return ws;
      } catch (const resolution_error&) {
        continue;
      }
    }
    throw resolution_error("insufficient depth for the whole-space witness");
  }

  // Case 2 proper
  auto bd = Y.boundary();
  if (bd.size() != 1) throw domain_error("Y must be a branch-complement member");
  return detail::case2_witness(g, Y, bd[0], eps, N);
}

/// A sampled arc inside NC*(T): branch complements cut along a
/// ramification-free sub-arc of an edge. Works for every finite tree and
/// exhibits that NC*(T) has nondegenerate connected subsets.
struct ArcWitness {
  std::vector<Subcontinuum> chain;
  Rational max_consecutive_gap;
  std::string edge_id;
  Rational lo, hi;  // parameter window inside the edge
};

inline ArcWitness arc_in_ncstar_witness(const GraphPtr& tree, int count = 32) {
  if (!tree->is_acyclic()) throw domain_error("arc_in_ncstar_witness requires a tree");
  if (count < 2) throw input_error("need at least two chain samples");
  // longest edge, ties by id: its interior is ramification-free
  int best = 0;
  for (int e = 1; e < tree->edge_count(); ++e) {
    if (tree->edge(e).length > tree->edge(best).length ||
        (tree->edge(e).length == tree->edge(best).length &&
         tree->edge(e).id < tree->edge(best).id))
      best = e;
  }
  ArcWitness out;
  out.edge_id = tree->edge(best).id;
  out.lo = Rational(1, 4);
  out.hi = Rational(3, 4);
  int from_node = tree->edge(best).from;
  for (int j = 0; j < count; ++j) {
    Rational x = out.lo + (out.hi - out.lo) * Rational(j, count - 1);
    GraphPoint cut = tree->edge_point(best, x);
    auto comps = Subcontinuum::singleton(tree, cut).complement_components();
    const OpenRegion* far_side = nullptr;
    for (const auto& c : comps)
      if (!c.contains_node(from_node)) far_side = &c;
    if (!far_side) throw domain_error("arc witness: far side not found");
    Subcontinuum m = complement_of_region(*far_side);
    if (!m.is_noncut()) throw domain_error("arc witness element is not a member");
    out.chain.push_back(std::move(m));
  }
  out.max_consecutive_gap = Rational(0);
  for (size_t i = 0; i + 1 < out.chain.size(); ++i)
    out.max_consecutive_gap =
        max(out.max_consecutive_gap, hausdorff_distance(out.chain[i], out.chain[i + 1]));
  return out;
}

}  // namespace ncstar
