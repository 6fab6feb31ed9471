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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncstar/pointset.hpp"

namespace ncstar {

/// A connected component of the complement of a subcontinuum: an open,
/// connected union of edge intervals and nodes.
class OpenRegion {
public:
  explicit OpenRegion(PiecewiseSet set) : set_(std::move(set)) {}
  const PiecewiseSet& pointset() const { return set_; }
  const GraphPtr& graph() const { return set_.graph(); }
  bool contains(const GraphPoint& p) const { return set_.contains(p); }
  bool contains_node(int n) const { return set_.nodes().count(n) > 0; }

  friend bool operator==(const OpenRegion& a, const OpenRegion& b) { return a.set_ == b.set_; }

private:
  PiecewiseSet set_;
};

/// Nonempty closed connected subset of a metric finite graph, stored as
/// canonical per-edge closed intervals plus the node membership they imply.
/// Values are immutable; all operations are pure.
class Subcontinuum {
public:
  /// Validating constructor from an arbitrary point set.
  static Subcontinuum from_pointset(PiecewiseSet set) {
    if (set.is_empty()) throw input_error("subcontinuum must be nonempty");
    if (!(set == set.closure())) throw input_error("subcontinuum must be closed");
    if (!set.is_connected_set()) throw input_error("subcontinuum must be connected");
    return Subcontinuum(std::move(set));
  }

  /// From closed intervals keyed by edge id, the interchange convention:
  /// an interval touching an edge end contains the end node.
  static Subcontinuum from_closed_intervals(
      const GraphPtr& g,
      const std::map<std::string, std::vector<std::pair<Rational, Rational>>>& raw) {
    std::map<int, std::vector<std::pair<Rational, Rational>>> by_idx;
    for (const auto& [id, ivs] : raw) by_idx[g->edge_idx(id)] = ivs;
    return from_pointset(PiecewiseSet::from_closed_intervals(g, by_idx));
  }

  static Subcontinuum singleton(const GraphPtr& g, const GraphPoint& p) {
    return from_pointset(PiecewiseSet::single_point(g, p));
  }

  static Subcontinuum whole(const GraphPtr& g) {
    return Subcontinuum(PiecewiseSet::whole(g));
  }

  const GraphPtr& graph() const { return set_.graph(); }
  const PiecewiseSet& pointset() const { return set_; }
  const std::set<int>& nodes() const { return set_.nodes(); }

  bool contains(const GraphPoint& p) const { return set_.contains(p); }
  bool is_whole() const { return set_ == PiecewiseSet::whole(graph()); }
  bool is_singleton() const {
    if (set_.pieces().empty()) return set_.nodes().size() == 1;
    if (!set_.nodes().empty()) return false;
    if (set_.pieces().size() != 1) return false;
    const auto& v = set_.pieces().begin()->second;
    return v.size() == 1 && v.front().degenerate();
  }
  /// The unique point of a singleton.
  GraphPoint the_point() const {
    if (!is_singleton()) throw domain_error("not a singleton subcontinuum");
    if (!set_.nodes().empty()) return graph()->node_point(*set_.nodes().begin());
    const auto& [e, v] = *set_.pieces().begin();
    return graph()->edge_point(e, v.front().lo);
  }

  bool is_subset_of(const Subcontinuum& o) const { return set_.is_subset_of(o.set_); }
  bool intersects(const Subcontinuum& o) const { return set_.intersects(o.set_); }

  friend bool operator==(const Subcontinuum& a, const Subcontinuum& b) {
    return a.set_ == b.set_;
  }
  friend bool operator!=(const Subcontinuum& a, const Subcontinuum& b) { return !(a == b); }

  /// Closed trace on an edge: the intervals of the subcontinuum there,
  /// including the degenerate contribution of member end nodes.
  std::vector<std::pair<Rational, Rational>> closed_trace(int edge) const {
    std::vector<std::pair<Rational, Rational>> out;
    const auto& e = graph()->edge(edge);
    auto it = set_.pieces().find(edge);
    if (it != set_.pieces().end())
      for (const auto& p : it->second) out.push_back({p.lo, p.hi});
    if (set_.nodes().count(e.from)) {
      if (out.empty() || out.front().first > Rational(0))
        out.insert(out.begin(), {Rational(0), Rational(0)});
    }
    if (set_.nodes().count(e.to)) {
      if (out.empty() || out.back().second < Rational(1)) out.push_back({Rational(1), Rational(1)});
    }
    // merge a leading/trailing degenerate into an adjacent interval
    std::vector<std::pair<Rational, Rational>> merged;
    for (const auto& iv : out) {
      if (!merged.empty() && merged.back().second == iv.first)
        merged.back().second = iv.second;
      else
        merged.push_back(iv);
    }
    return merged;
  }

  /// Maximal connected open regions of the complement; empty iff S = X.
  std::vector<OpenRegion> complement_components() const {
    PiecewiseSet comp = set_.set_complement();
    std::vector<OpenRegion> out;
    if (comp.is_empty()) return out;
    for (auto& c : comp.connected_components()) out.emplace_back(std::move(c));
    return out;
  }

  /// Non-cut test: the complement is connected (the empty complement counts
  /// as connected, so the whole space is non-cut).
  bool is_noncut() const {
    PiecewiseSet comp = set_.set_complement();
    if (comp.is_empty()) return true;
    return comp.is_connected_set();
  }

  /// Topological boundary, a finite point set.
  std::vector<GraphPoint> boundary() const { return set_.boundary_points(); }

  /// Distance from every node of the graph to this set.
  std::vector<Rational> node_distance_field() const {
    std::vector<std::pair<int, Rational>> offers;
    const GraphPtr& g = graph();
    for (int n : set_.nodes()) offers.emplace_back(n, Rational(0));
    for (const auto& [e, v] : set_.pieces()) {
      const auto& edge = g->edge(e);
      if (!v.empty()) {
        offers.emplace_back(edge.from, v.front().lo * edge.length);
        offers.emplace_back(edge.to, (Rational(1) - v.back().hi) * edge.length);
      }
    }
    return g->node_distances(offers);
  }

private:
  explicit Subcontinuum(PiecewiseSet set) : set_(std::move(set)) {}
  PiecewiseSet set_;
};

/// Connectivity check on raw interval data.
inline bool is_connected(const GraphPtr& g,
                         const std::map<std::string, std::vector<std::pair<Rational, Rational>>>& raw) {
  std::map<int, std::vector<std::pair<Rational, Rational>>> by_idx;
  for (const auto& [id, ivs] : raw) by_idx[g->edge_idx(id)] = ivs;
  PiecewiseSet s = PiecewiseSet::from_closed_intervals(g, by_idx);
  if (s.is_empty()) throw input_error("empty interval data");
  return s.is_connected_set();
}

/// X minus an open region, as a subcontinuum. Valid whenever the region is a
/// complement component of a connected set (then the result is connected).
inline Subcontinuum complement_of_region(const OpenRegion& r) {
  PiecewiseSet rest = PiecewiseSet::whole(r.graph()).set_difference(r.pointset());
  return Subcontinuum::from_pointset(std::move(rest));
}

/// Closure of an open region, as a subcontinuum.
inline Subcontinuum region_closure(const OpenRegion& r) {
  return Subcontinuum::from_pointset(r.pointset().closure());
}

/// Union of two intersecting subcontinua.
inline Subcontinuum subcontinuum_union(const Subcontinuum& a, const Subcontinuum& b) {
  return Subcontinuum::from_pointset(a.pointset().set_union(b.pointset()));
}

/// Exact distance from a point to a subcontinuum.
inline Rational point_to_set_distance(const GraphPoint& p, const Subcontinuum& s,
                                      const std::vector<Rational>* field = nullptr) {
  const GraphPtr& g = s.graph();
  g->validate_point(p);
  std::vector<Rational> local;
  if (!field) {
    local = s.node_distance_field();
    field = &local;
  }
  if (p.is_node()) return (*field)[p.node];
  const auto& e = g->edge(p.edge);
  Rational best = min(p.t * e.length + (*field)[e.from],
                      (Rational(1) - p.t) * e.length + (*field)[e.to]);
  for (const auto& [lo, hi] : s.closed_trace(p.edge)) {
    Rational within = p.t < lo ? (lo - p.t) * e.length : (p.t > hi ? (p.t - hi) * e.length : Rational(0));
    best = min(best, within);
  }
  return best;
}

namespace detail {

/// sup over one closed interval [a,b] of edge e of the distance function
/// d(., T). The function is a min of finitely many branches of slope -L, 0,
/// +L, so the sup is attained at a, b or a crossing of an increasing branch
/// with a decreasing one; all candidates are enumerated exactly.
inline std::pair<Rational, Rational> sup_distance_on_interval(
    const GraphPtr& g, int edge, const Rational& a, const Rational& b, const Subcontinuum& T,
    const std::vector<Rational>& dvT) {
  const auto& e = g->edge(edge);
  const Rational L = e.length;
  const Rational A0 = dvT[e.from];
  const Rational B0 = dvT[e.to];
  auto traceT = T.closed_trace(edge);

  auto dfun = [&](const Rational& t) {
    Rational d = min(t * L + A0, (Rational(1) - t) * L + B0);
    for (const auto& [c, dd] : traceT) {
      Rational within = t < c ? (c - t) * L : (t > dd ? (t - dd) * L : Rational(0));
      d = min(d, within);
    }
    return d;
  };

  std::vector<Rational> cand{a, b};
  for (const auto& [c, d] : traceT) {
    if (c > a && c < b) cand.push_back(c);
    if (d > a && d < b) cand.push_back(d);
  }
  // crossings of increasing branches (L t + p) with decreasing ones (-L t + q)
  std::vector<Rational> inc{A0}, dec{L + B0};
  for (const auto& [c, d] : traceT) {
    inc.push_back(-(d * L));
    dec.push_back(c * L);
  }
  for (const auto& p : inc)
    for (const auto& q : dec) {
      Rational t = (q - p) / (L * Rational(2));
      if (t > a && t < b) cand.push_back(t);
    }
  Rational best(-1);
  Rational arg = a;
  for (const auto& t : cand) {
    Rational v = dfun(t);
    if (v > best) {
      best = v;
      arg = t;
    }
  }
  return {best, arg};
}

}  // namespace detail

/// Directed Hausdorff distance sup_{x in S} d(x, T), with a witness point.
inline std::pair<Rational, GraphPoint> directed_hausdorff_witness(
    const Subcontinuum& S, const Subcontinuum& T, const std::vector<Rational>* fieldT = nullptr) {
  if (S.graph() != T.graph()) throw input_error("hausdorff distance across different graphs");
  const GraphPtr& g = S.graph();
  std::vector<Rational> local;
  if (!fieldT) {
    local = T.node_distance_field();
    fieldT = &local;
  }
  Rational best(-1);
  GraphPoint arg;
  for (int e = 0; e < g->edge_count(); ++e) {
    auto trace = S.closed_trace(e);
    for (const auto& [a, b] : trace) {
      auto [v, t] = detail::sup_distance_on_interval(g, e, a, b, T, *fieldT);
      if (v > best) {
        best = v;
        arg = g->edge_point(e, t);
      }
    }
  }
  for (int n : S.nodes()) {
    if ((*fieldT)[n] > best) {
      best = (*fieldT)[n];
      arg = g->node_point(n);
    }
  }
  return {best, arg};
}

inline Rational directed_hausdorff(const Subcontinuum& S, const Subcontinuum& T,
                                   const std::vector<Rational>* fieldT = nullptr) {
  return directed_hausdorff_witness(S, T, fieldT).first;
}

/// Exact Hausdorff distance between two subcontinua of the same graph.
inline Rational hausdorff_distance(const Subcontinuum& S1, const Subcontinuum& S2) {
  return max(directed_hausdorff(S1, S2), directed_hausdorff(S2, S1));
}

/// Hausdorff distance with caller-provided node distance fields (used by the
/// oracle to avoid recomputing per-set Dijkstra runs in pairwise loops).
inline Rational hausdorff_distance_cached(const Subcontinuum& S1, const std::vector<Rational>& f1,
                                          const Subcontinuum& S2, const std::vector<Rational>& f2) {
  return max(directed_hausdorff(S1, S2, &f2), directed_hausdorff(S2, S1, &f1));
}

/// Exact lower bound max_n |d(n,S1) - d(n,S2)| <= H(S1,S2), with early exit
/// once the bound exceeds `stop_above`. Cheap pruning for pairwise loops.
inline Rational hausdorff_lower_bound(const std::vector<Rational>& f1,
                                      const std::vector<Rational>& f2,
                                      const Rational& stop_above) {
  Rational lb(0);
  for (size_t n = 0; n < f1.size(); ++n) {
    Rational d = (f1[n] - f2[n]).abs();
    if (d > lb) {
      lb = d;
      if (lb > stop_above) return lb;
    }
  }
  return lb;
}

/// The point of X farthest from S and its distance (ties broken by the
/// canonical point order).
inline std::pair<GraphPoint, Rational> farthest_point(const Subcontinuum& S) {
  auto [d, p] = directed_hausdorff_witness(Subcontinuum::whole(S.graph()), S);
  return {p, d};
}

/// Closed sub-arc of a topological chain between two arclength positions
/// (in the chain's own coordinates).
inline Subcontinuum chain_interval(const GraphPtr& g, const TopoEdge& te, const Rational& lo,
                                   const Rational& hi) {
  if (lo > hi || lo < Rational(0) || hi > te.length)
    throw input_error("chain interval outside the chain");
  PiecewiseSet s(g);
  Rational acc(0);
  bool any = false;
  for (const auto& st : te.steps) {
    const auto& ed = g->edge(st.edge);
    Rational a = max(lo, acc), b = min(hi, acc + ed.length);
    if (a <= b) {
      Rational pa = (a - acc) / ed.length, pb = (b - acc) / ed.length;
      if (!st.forward) {
        Rational na = Rational(1) - pb, nb = Rational(1) - pa;
        pa = na;
        pb = nb;
      }
      s.add_raw(st.edge, {pa, pb, true, true});
      any = true;
    }
    acc += ed.length;
  }
  if (!any) throw input_error("empty chain interval");
  s.canonicalize();
  return Subcontinuum::from_pointset(std::move(s));
}

/// Unique geodesic arc between two points of a tree, as a subcontinuum.
inline Subcontinuum geodesic_arc(const GraphPtr& g, const GraphPoint& p, const GraphPoint& q) {
  if (!g->is_acyclic()) throw domain_error("geodesic_arc requires a tree");
  g->validate_point(p);
  g->validate_point(q);
  if (p == q) return Subcontinuum::singleton(g, p);
  if (!p.is_node() && !q.is_node() && p.edge == q.edge) {
    PiecewiseSet s(g);
    s.add_raw(p.edge, {min(p.t, q.t), max(p.t, q.t), true, true});
    s.canonicalize();
    return Subcontinuum::from_pointset(std::move(s));
  }
  // distance field from q
  std::vector<std::pair<int, Rational>> offers;
  if (q.is_node())
    offers.emplace_back(q.node, Rational(0));
  else {
    const auto& eq = g->edge(q.edge);
    offers.emplace_back(eq.from, q.t * eq.length);
    offers.emplace_back(eq.to, (Rational(1) - q.t) * eq.length);
  }
  std::vector<Rational> dv = g->node_distances(offers);

  PiecewiseSet s(g);
  int cur;
  if (p.is_node()) {
    cur = p.node;
  } else {
    const auto& ep = g->edge(p.edge);
    Rational via_from = p.t * ep.length + dv[ep.from];
    Rational via_to = (Rational(1) - p.t) * ep.length + dv[ep.to];
    if (via_from <= via_to) {
      s.add_raw(p.edge, {Rational(0), p.t, true, true});
      cur = ep.from;
    } else {
      s.add_raw(p.edge, {p.t, Rational(1), true, true});
      cur = ep.to;
    }
  }
  // walk down the distance field to q
  while (true) {
    if (q.is_node() && cur == q.node) break;
    if (!q.is_node()) {
      const auto& eq = g->edge(q.edge);
      if (cur == eq.from && dv[cur] == q.t * eq.length) {
        s.add_raw(q.edge, {Rational(0), q.t, true, true});
        break;
      }
      if (cur == eq.to && dv[cur] == (Rational(1) - q.t) * eq.length) {
        s.add_raw(q.edge, {q.t, Rational(1), true, true});
        break;
      }
    }
    bool stepped = false;
    for (const auto& [ei, end] : g->incident_slots(cur)) {
      const auto& e = g->edge(ei);
      int other = end == 0 ? e.to : e.from;
      if (dv[cur] == e.length + dv[other]) {
        s.add_raw(ei, {Rational(0), Rational(1), true, true});
        cur = other;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw domain_error("geodesic walk failed (graph is not a tree?)");
  }
  s.canonicalize();
  return Subcontinuum::from_pointset(std::move(s));
}

/// Smallest subcontinuum of a tree containing the given points: the union of
/// the geodesic arcs from the first point to every other.
inline Subcontinuum convex_hull(const GraphPtr& g, const std::vector<GraphPoint>& pts) {
  if (!g->is_acyclic()) throw domain_error("convex_hull requires a tree");
  if (pts.empty()) throw input_error("convex_hull of an empty point set");
  PiecewiseSet acc = PiecewiseSet::single_point(g, pts.front());
  for (size_t i = 1; i < pts.size(); ++i)
    acc = acc.set_union(geodesic_arc(g, pts.front(), pts[i]).pointset());
  return Subcontinuum::from_pointset(std::move(acc));
}

}  // namespace ncstar
