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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncstar/hyperspace_oracle.hpp"
#include "ncstar/tree_ncstar.hpp"

namespace ncstar {

/// Global structural properties of NC*(X) for a finite graph X.
struct PropertyReport {
  SpaceKind kind;
  bool compact = false;
  std::optional<bool> connected;
  bool connected_empirical = false;  // decided by oracle clustering, not by theory
  std::optional<bool> continuum;
  bool equals_CX = false;
  bool homeo_to_X = false;
  bool locally_connected = true;
  std::optional<int> tree_component_count;
  std::vector<std::string> rationale;
};

struct OracleParams {
  int k = 4;
  Rational eps = Rational(1, 4);
  long long budget = kDefaultOracleBudget;
};

inline PropertyReport decide_properties(const GraphPtr& g, bool run_oracle_for_general = true,
                                        const OracleParams& params = {}) {
  PropertyReport rep;
  rep.kind = g->classify_space();
  rep.locally_connected = true;
  rep.rationale.push_back("local-connectedness holds for every finite graph");
  switch (rep.kind) {
    case SpaceKind::Arc:
      rep.compact = true;
      rep.connected = true;
      rep.continuum = true;
      rep.equals_CX = false;
      rep.homeo_to_X = true;
      rep.tree_component_count = 1;
      rep.rationale.push_back("arc: the non-cut hyperspace is again an arc");
      break;
    case SpaceKind::Circle:
      rep.compact = true;
      rep.connected = true;
      rep.continuum = true;
      rep.equals_CX = true;
      rep.homeo_to_X = false;
      rep.rationale.push_back("circle: every subcontinuum has connected complement");
      break;
    case SpaceKind::Tree: {
      rep.compact = false;
      int count = component_count(g);
      rep.tree_component_count = count;
      rep.connected = count == 1;
      rep.continuum = false;
      rep.equals_CX = false;
      rep.homeo_to_X = false;
      rep.rationale.push_back("tree: component count 2|R|+|E|-1 = " + std::to_string(count));
      rep.rationale.push_back("compactness fails off the arc and the circle");
      break;
    }
    case SpaceKind::GeneralGraph: {
      rep.compact = false;
      rep.equals_CX = false;
      rep.homeo_to_X = false;
      rep.rationale.push_back("compactness fails off the arc and the circle");
      if (run_oracle_for_general) {
        auto sample = sample_ncstar(g, params.k, params.budget);
        auto clusters = cluster_components(sample, params.eps);
        rep.connected = clusters.cluster_count == 1;
        rep.connected_empirical = true;
        rep.rationale.push_back(
            "connectedness judged empirically from the grid sample (k=" +
            std::to_string(params.k) + ", clusters=" + std::to_string(clusters.cluster_count) +
            (clusters.adequate ? ", gaps adequate)" : ", gaps inadequate)"));
        rep.continuum = rep.compact && *rep.connected;
      } else {
        rep.rationale.push_back("connectedness undecided (oracle not run)");
      }
      break;
    }
  }
  return rep;
}

/// A finite sequence of members converging to a computed limit, the core
/// exhibit of every non-compactness argument.
struct WitnessSequence {
  std::vector<Subcontinuum> members;
  std::optional<Subcontinuum> limit;
  bool limit_is_member = false;
  std::vector<Rational> distances;  // H(member_i, limit)
  std::string method;
  bool empirical = false;
};

/// Exact validity check: all members non-cut, the limit not, distances to the
/// limit strictly decreasing.
inline void validate_witness(const WitnessSequence& ws) {
  if (!ws.limit) throw domain_error("witness sequence has no limit");
  for (const auto& m : ws.members)
    if (!m.is_noncut()) throw domain_error("witness member fails the non-cut test");
  if (ws.limit->is_noncut() != ws.limit_is_member)
    throw domain_error("witness limit membership flag is wrong");
  if (ws.limit_is_member) throw domain_error("witness limit must not be a member");
  if (ws.distances.size() != ws.members.size())
    throw domain_error("witness distance list is inconsistent");
  for (size_t i = 0; i + 1 < ws.distances.size(); ++i)
    if (!(ws.distances[i + 1] < ws.distances[i]))
      throw domain_error("witness distances are not strictly decreasing");
}

namespace detail {

inline WitnessSequence finish_witness(std::vector<Subcontinuum> members, Subcontinuum limit,
                                      std::string method, bool empirical) {
  WitnessSequence ws;
  ws.members = std::move(members);
  ws.method = std::move(method);
  ws.empirical = empirical;
  for (const auto& m : ws.members) ws.distances.push_back(hausdorff_distance(m, limit));
  ws.limit_is_member = limit.is_noncut();
  ws.limit = std::move(limit);
  validate_witness(ws);
  return ws;
}

/// Tries to build a member sequence by shaving a geometric sliver off a
/// non-member grid set at one of its boundary-side trace ends.
inline std::optional<WitnessSequence> try_shave_witness(const GraphPtr& g, const Subcontinuum& Z,
                                                        int N) {
  for (int e = 0; e < g->edge_count(); ++e) {
    auto trace = Z.closed_trace(e);
    for (const auto& [a, b] : trace) {
      if (a == b) continue;
      Rational delta = (b - a) / Rational(2);
      for (int side = 0; side < 2; ++side) {
        std::vector<Subcontinuum> members;
        bool ok = true;
        for (int n = 1; n <= N && ok; ++n) {
          Rational d = delta / Rational(std::int64_t(1) << n);
          PiecewiseSet sliver(g);
          if (side == 0)
            sliver.add_raw(e, {a, a + d, true, false});
          else
            sliver.add_raw(e, {b - d, b, false, true});
          sliver.canonicalize();
          PiecewiseSet rest = Z.pointset().set_difference(sliver);
          try {
            Subcontinuum m = Subcontinuum::from_pointset(std::move(rest));
            if (!m.is_noncut()) {
              ok = false;
              break;
            }
            members.push_back(std::move(m));
          } catch (const input_error&) {
            ok = false;
          }
        }
        if (!ok || members.size() != static_cast<size_t>(N)) continue;
        // distances must strictly decrease; verified by the finisher
        try {
          return finish_witness(std::move(members), Z, "grid_search", true);
        } catch (const domain_error&) {
          continue;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Constructive non-compactness witness: a sequence of N members whose exact
/// Hausdorff limit fails the non-cut test. Selection order: loop case, hair
/// case (split by the component count at the ramification point), then an
/// oracle search near grid non-members (labeled empirical).
inline WitnessSequence noncompact_witness(const GraphPtr& g, int N,
                                          long long budget = kDefaultOracleBudget,
                                          int search_k = 4) {
  if (N < 1) throw input_error("witness length must be positive");
  SpaceKind kind = g->classify_space();
  if (kind == SpaceKind::Arc || kind == SpaceKind::Circle)
    throw domain_error("NC* is compact for the arc and the circle");

  const auto& chains = g->topological_edges();
  // loop case
  int best_loop = -1;
  for (int i = 0; i < static_cast<int>(chains.size()); ++i) {
    if (!chains[i].is_loop()) continue;
    if (best_loop < 0 || g->edge(chains[i].steps[0].edge).id <
                             g->edge(chains[best_loop].steps[0].edge).id)
      best_loop = i;
  }
  if (best_loop >= 0) {
    const auto& L = chains[best_loop];
    GraphPoint r = g->node_point(L.start_vertex);
    std::vector<Subcontinuum> members;
    for (int n = 1; n <= N; ++n) {
      Rational offset = L.length / Rational(std::int64_t(1) << (n + 1));
      members.push_back(Subcontinuum::singleton(g, g->point_at(L, offset)));
    }
    return detail::finish_witness(std::move(members), Subcontinuum::singleton(g, r), "loop",
                                  false);
  }

  // hair case
  int best_hair = -1;
  bool best_rev = false;
  for (int i = 0; i < static_cast<int>(chains.size()); ++i) {
    const auto& te = chains[i];
    bool s1 = g->node_order(te.start_vertex) == 1;
    bool e1 = g->node_order(te.end_vertex) == 1;
    if (s1 == e1) continue;  // internal edge, or an arc component (impossible here)
    if (best_hair < 0 || g->edge(te.steps[0].edge).id < g->edge(chains[best_hair].steps[0].edge).id) {
      best_hair = i;
      best_rev = e1;  // anchor the parameterization at the endpoint
    }
  }
  if (best_hair >= 0) {
    const auto& te = chains[best_hair];
    int ram = best_rev ? te.start_vertex : te.end_vertex;
    GraphPoint r = g->node_point(ram);
    auto r_comps = Subcontinuum::singleton(g, r).complement_components();
    if (r_comps.size() >= 3) {
      // members [e, t_n] with t_n -> ram; limit = the closed hair
      std::vector<Subcontinuum> members;
      for (int n = 1; n <= N; ++n) {
        Rational t = te.length - te.length / Rational(std::int64_t(1) << n);
        members.push_back(best_rev ? chain_interval(g, te, te.length - t, te.length)
                                   : chain_interval(g, te, Rational(0), t));
      }
      return detail::finish_witness(std::move(members),
                                    chain_interval(g, te, Rational(0), te.length),
                                    "hair_branching", false);
    }
    // exactly two components: singleton members marching in from a non-hair germ
    Rational delta = g->infinite_bound();
    int germ_edge = -1, germ_end = -1;
    for (const auto& [ei, end] : g->incident_slots(ram)) {
      // skip the hair's own step at the ramification end
      int hair_step = best_rev ? te.steps.front().edge : te.steps.back().edge;
      if (ei == hair_step) continue;
      if (germ_edge < 0 || g->edge(ei).id < g->edge(germ_edge).id) {
        germ_edge = ei;
        germ_end = end;
      }
    }
    if (germ_edge < 0) throw domain_error("hair case: no non-hair germ at the ramification point");
    delta = g->edge(germ_edge).length / Rational(2);
    std::vector<Subcontinuum> members;
    for (int n = 1; n <= N; ++n) {
      Rational d = delta / Rational(std::int64_t(1) << n);
      Rational t = d / g->edge(germ_edge).length;
      GraphPoint z = g->edge_point(germ_edge, germ_end == 0 ? t : Rational(1) - t);
      Subcontinuum zn = Subcontinuum::singleton(g, z);
      if (!zn.is_noncut())
        throw domain_error("hair case: boundary singleton unexpectedly cuts the graph");
      members.push_back(std::move(zn));
    }
    return detail::finish_witness(std::move(members), Subcontinuum::singleton(g, r),
                                  "hair_two_sided", false);
  }

  // fallback: oracle search over grid non-members
  auto sample = enumerate_grid_subcontinua(g, search_k, budget);
  SubdivisionMap map = subdivide(g, search_k);
  for (size_t i = 0; i < sample.segment_elements.size(); ++i) {
    if (sample.segment_member[i]) continue;
    Subcontinuum Z = detail::mask_to_base(map, sample.segment_elements[i]);
    auto ws = detail::try_shave_witness(g, Z, N);
    if (ws) return *ws;
  }
  throw resolution_error("no witness found at this resolution (k=" + std::to_string(search_k) +
                         ")");
}

/// The neighborhood budget at a member A.
struct DeltaBudget {
  Rational eps1, eps2, eps3, delta;
  std::optional<GraphPoint> basepoint;
  bool whole_space = false;
};

/// Exact eps1/eps2/eps3/delta. For A = X the budget is the constant 1/10 and
/// no basepoint is accepted; otherwise the basepoint is required and must lie
/// outside A.
inline DeltaBudget local_delta(const GraphPtr& g, const Subcontinuum& A,
                               const std::optional<GraphPoint>& p0 = std::nullopt) {
  if (!A.is_noncut()) throw domain_error("local_delta requires a non-cut member");
  DeltaBudget b;
  if (A.is_whole()) {
    if (p0) throw input_error("basepoint must be absent when A is the whole space");
    b.eps1 = b.eps2 = b.eps3 = b.delta = Rational(1, 10);
    b.whole_space = true;
    return b;
  }
  if (!p0) throw input_error("basepoint required when A is a proper member");
  g->validate_point(*p0);
  if (A.contains(*p0)) throw input_error("basepoint must lie outside A");
  b.basepoint = *p0;
  auto bd = A.boundary();
  Rational m1(1);
  for (size_t i = 0; i < bd.size(); ++i)
    for (size_t j = i + 1; j < bd.size(); ++j)
      m1 = min(m1, g->geodesic_distance(bd[i], bd[j]));
  b.eps1 = m1 / Rational(4);
  Rational m2(1);
  for (const auto& x : bd)
    for (int v : g->vertices()) {
      GraphPoint vp = g->node_point(v);
      if (vp == x) continue;
      m2 = min(m2, g->geodesic_distance(x, vp));
    }
  b.eps2 = m2 / Rational(4);
  Rational d0 = point_to_set_distance(*p0, A);
  b.eps3 = min(d0 / Rational(4), Rational(1, 10));
  b.delta = min(b.eps1, min(b.eps2, b.eps3));
  return b;
}

/// Budget with the canonical basepoint (the point of X farthest from A);
/// this is the delta that connect_chain validates against.
inline DeltaBudget local_delta_canonical(const GraphPtr& g, const Subcontinuum& A) {
  if (A.is_whole()) return local_delta(g, A);
  auto [p, d] = farthest_point(A);
  return local_delta(g, A, p);
}

namespace detail {

/// Extracts the finitely many points of a degenerate point set.
inline std::vector<GraphPoint> finite_points(const PiecewiseSet& s) {
  std::vector<GraphPoint> out;
  for (const auto& [e, v] : s.pieces())
    for (const auto& p : v) {
      if (!p.degenerate())
        throw domain_error("expected a finite point set");
      out.push_back(s.graph()->edge_point(e, p.lo));
    }
  for (int n : s.nodes()) out.push_back(s.graph()->node_point(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Growth plan for one component of (target minus base): an intrinsic
/// distance field from the attachment points over the component's closure.
struct GrowthPlan {
  // mini network: canonical points with pairwise piece segments
  std::vector<GraphPoint> verts;
  std::map<GraphPoint, int> index;
  std::vector<Rational> dist;                      // from the attachment set
  std::vector<std::tuple<int, Rational, Rational, int, int>> pieces;
  // (edge, lo, hi, vert_lo, vert_hi) of the component closure
  std::vector<int> comp_nodes;                     // graph nodes in the closure
  Rational radius;                                 // max intrinsic distance
};

inline GrowthPlan make_growth_plan(const GraphPtr& g, const PiecewiseSet& comp) {
  GrowthPlan plan;
  PiecewiseSet closure = comp.closure();
  PiecewiseSet attach_set = closure.set_difference(comp);
  std::vector<GraphPoint> attach = finite_points(attach_set);
  if (attach.empty()) throw domain_error("growth component does not touch the base");
  auto vert_id = [&](const GraphPoint& p) {
    auto it = plan.index.find(p);
    if (it != plan.index.end()) return it->second;
    int id = static_cast<int>(plan.verts.size());
    plan.index[p] = id;
    plan.verts.push_back(p);
    return id;
  };
  for (const auto& [e, v] : closure.pieces()) {
    for (const auto& piece : v) {
      int a = vert_id(g->edge_point(e, piece.lo));
      int b = vert_id(g->edge_point(e, piece.hi));
      plan.pieces.emplace_back(e, piece.lo, piece.hi, a, b);
    }
  }
  for (int n : closure.nodes()) {
    vert_id(g->node_point(n));
    plan.comp_nodes.push_back(n);
  }
  // Dijkstra over the mini network
  const Rational inf = g->infinite_bound();
  plan.dist.assign(plan.verts.size(), inf);
  for (const auto& p : attach) {
    auto it = plan.index.find(p);
    if (it == plan.index.end()) throw domain_error("attachment point missing from the network");
    plan.dist[it->second] = Rational(0);
  }
  std::vector<char> done(plan.verts.size(), 0);
  for (size_t iter = 0; iter < plan.verts.size(); ++iter) {
    int pick = -1;
    for (size_t i = 0; i < plan.verts.size(); ++i)
      if (!done[i] && (pick < 0 || plan.dist[i] < plan.dist[pick])) pick = static_cast<int>(i);
    if (pick < 0 || !(plan.dist[pick] < inf)) break;
    done[pick] = 1;
    for (const auto& [e, lo, hi, a, b] : plan.pieces) {
      Rational len = (hi - lo) * g->edge(e).length;
      if (a == pick && plan.dist[pick] + len < plan.dist[b]) plan.dist[b] = plan.dist[pick] + len;
      if (b == pick && plan.dist[pick] + len < plan.dist[a]) plan.dist[a] = plan.dist[pick] + len;
    }
  }
  plan.radius = Rational(0);
  for (const auto& [e, lo, hi, a, b] : plan.pieces) {
    Rational len = (hi - lo) * g->edge(e).length;
    // interior peak of the two-sided distance along the piece
    Rational peak = (plan.dist[a] + plan.dist[b] + len) / Rational(2);
    peak = min(peak, max(plan.dist[a], plan.dist[b]) + len);
    plan.radius = max(plan.radius, peak);
  }
  for (const auto& d : plan.dist) plan.radius = max(plan.radius, d);
  return plan;
}

/// The sublevel of the growth plan at intrinsic radius s, as raw intervals
/// and nodes to union with the base.
inline void add_sublevel(const GraphPtr& g, const GrowthPlan& plan, const Rational& s,
                         PiecewiseSet& acc) {
  for (const auto& [e, lo, hi, a, b] : plan.pieces) {
    Rational L = g->edge(e).length;
    Rational da = plan.dist[a], db = plan.dist[b];
    if (hi == lo) {
      if (da <= s) acc.add_raw(e, {lo, hi, true, true});
      continue;
    }
    // from the lo end
    if (da <= s) {
      Rational reach = lo + (s - da) / L;
      acc.add_raw(e, {lo, min(hi, reach), true, true});
    }
    if (db <= s) {
      Rational reach = hi - (s - db) / L;
      acc.add_raw(e, {max(lo, reach), hi, true, true});
    }
  }
  for (int n : plan.comp_nodes) {
    auto it = plan.index.find(g->node_point(n));
    if (it != plan.index.end() && plan.dist[it->second] <= s) acc.add_node_raw(n);
  }
}

/// Monotone member chain from `from` up to `to` (inclusive), sampled densely
/// enough that consecutive gaps stay below `gap_bound`. Every element is
/// verified non-cut.
inline std::vector<Subcontinuum> grow_chain(const Subcontinuum& from, const Subcontinuum& to,
                                            const Rational& gap_bound) {
  const GraphPtr& g = from.graph();
  PiecewiseSet diff = to.pointset().set_difference(from.pointset());
  if (diff.is_empty()) return {from};
  std::vector<GrowthPlan> plans;
  Rational rad(0);
  for (const auto& comp : diff.connected_components()) {
    plans.push_back(make_growth_plan(g, comp));
    rad = max(rad, plans.back().radius);
  }
  long long M = 1;
  if (rad > Rational(0)) {
    Rational ratio = rad / gap_bound;
    M = ratio.num() / ratio.den() + (ratio.num() % ratio.den() == 0 ? 0 : 1);
    if (M < 1) M = 1;
  }
  std::vector<Subcontinuum> chain;
  for (long long j = 0; j <= M; ++j) {
    if (j == 0) {
      chain.push_back(from);
      continue;
    }
    if (j == M) {
      chain.push_back(to);
      continue;
    }
    PiecewiseSet acc = from.pointset();
    for (const auto& plan : plans) add_sublevel(g, plan, plan.radius * Rational(j, M), acc);
    acc.canonicalize();
    Subcontinuum stage = Subcontinuum::from_pointset(std::move(acc));
    if (!stage.is_noncut())
      throw domain_error("order-arc stage failed the non-cut test");
    chain.push_back(std::move(stage));
  }
  return chain;
}

}  // namespace detail

/// Finite member chain from A to B inside the closed eps-ball around A, with
/// consecutive Hausdorff gaps at most eps/steps. Construction: order arcs
/// A -> A union B and B -> A union B when the members intersect; through the
/// irreducible interval of the shared edge when they are disjoint (which
/// forces A to be a singleton within the budget).
inline std::vector<Subcontinuum> connect_chain(const GraphPtr& g, const Subcontinuum& A,
                                               const Subcontinuum& B, const Rational& eps,
                                               int steps) {
  if (steps < 1) throw input_error("steps must be positive");
  if (!A.is_noncut() || !B.is_noncut()) throw input_error("chain endpoints must be members");
  DeltaBudget budget = local_delta_canonical(g, A);
  if (eps > budget.delta)
    throw input_error("eps exceeds the local delta budget " + budget.delta.str());
  Rational h = hausdorff_distance(A, B);
  if (!(h < eps)) throw input_error("precondition H(A,B) < eps fails");
  if (A == B) return {A};

  Rational gap_bound = eps / Rational(steps);
  std::vector<Subcontinuum> chain;
  if (A.intersects(B)) {
    Subcontinuum U = subcontinuum_union(A, B);
    if (!U.is_noncut()) throw domain_error("union of the members is not a member");
    auto leg1 = detail::grow_chain(A, U, gap_bound);
    auto leg2 = detail::grow_chain(B, U, gap_bound);
    chain = leg1;
    for (auto it = leg2.rbegin(); it != leg2.rend(); ++it)
      if (!(*it == chain.back())) chain.push_back(*it);
  } else {
    if (!A.is_singleton())
      throw input_error(
          "disjoint members with a non-singleton A lie outside the valid budget");
    // find the topological edge containing both members
    const auto& chains = g->topological_edges();
    int host = -1;
    Rational apos, blo, bhi;
    for (int i = 0; i < static_cast<int>(chains.size()); ++i) {
      PiecewiseSet chain_set(g);
      for (const auto& st : chains[i].steps)
        chain_set.add_raw(st.edge, {Rational(0), Rational(1), true, true});
      chain_set.canonicalize();
      if (!A.pointset().is_subset_of(chain_set) || !B.pointset().is_subset_of(chain_set))
        continue;
      auto pa = g->position_on(chains[i], A.the_point());
      if (!pa) continue;
      // extent of B along the chain
      Rational lo = chains[i].length, hi = Rational(0);
      bool all_on = true;
      for (int e2 = 0; e2 < g->edge_count(); ++e2) {
        for (const auto& [x, y] : B.closed_trace(e2)) {
          GraphPoint p1 = g->edge_point(e2, x), p2 = g->edge_point(e2, y);
          auto q1 = g->position_on(chains[i], p1), q2 = g->position_on(chains[i], p2);
          if (!q1 || !q2) {
            all_on = false;
            break;
          }
          lo = min(lo, min(*q1, *q2));
          hi = max(hi, max(*q1, *q2));
        }
        if (!all_on) break;
      }
      if (!all_on) continue;
      host = i;
      apos = *pa;
      blo = lo;
      bhi = hi;
      break;
    }
    if (host < 0)
      throw input_error("disjoint members do not share an edge; eps exceeds the valid budget");
    Rational klo = min(apos, blo), khi = max(apos, bhi);
    Subcontinuum K = chain_interval(g, chains[host], klo, khi);
    if (!K.is_noncut()) throw domain_error("irreducible interval is not a member");
    auto leg1 = detail::grow_chain(A, K, gap_bound);
    auto leg2 = detail::grow_chain(B, K, gap_bound);
    chain = leg1;
    for (auto it = leg2.rbegin(); it != leg2.rend(); ++it)
      if (!(*it == chain.back())) chain.push_back(*it);
  }
  // exact post-conditions
  for (const auto& s : chain) {
    if (!s.is_noncut()) throw domain_error("chain element failed the non-cut test");
    if (hausdorff_distance(s, A) > eps)
      throw domain_error("chain element escaped the eps-ball around A");
  }
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (hausdorff_distance(chain[i], chain[i + 1]) > gap_bound)
      throw domain_error("consecutive chain gap exceeds eps/steps");
  return chain;
}

}  // namespace ncstar
