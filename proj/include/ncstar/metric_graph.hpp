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

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ncstar/errors.hpp"
#include "ncstar/rational.hpp"

namespace ncstar {

class MetricGraph;
using GraphPtr = std::shared_ptr<const MetricGraph>;

/// A point of a metric finite graph: either a node, or an interior point of
/// an edge at offset t in (0,1), measured as a fraction of the edge length
/// from the edge's from-node. Canonical form never stores t in {0,1}.
struct GraphPoint {
  int node = -1;   // >= 0 iff this is a node point
  int edge = -1;   // >= 0 iff this is an interior point
  Rational t;      // only meaningful for interior points

  bool is_node() const { return node >= 0; }

  friend bool operator==(const GraphPoint& a, const GraphPoint& b) {
    return a.node == b.node && a.edge == b.edge && a.t == b.t;
  }
  friend bool operator!=(const GraphPoint& a, const GraphPoint& b) { return !(a == b); }
  friend bool operator<(const GraphPoint& a, const GraphPoint& b) {
    return std::tie(a.node, a.edge, a.t) < std::tie(b.node, b.edge, b.t);
  }
};

enum class SpaceKind { Arc, Circle, Tree, GeneralGraph };

inline const char* to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::Arc: return "arc";
    case SpaceKind::Circle: return "circle";
    case SpaceKind::Tree: return "tree";
    default: return "general_graph";
  }
}

/// A maximal arc of the graph running between two topological vertices
/// (points of order != 2) through ordinary nodes only. For a loop the two
/// end vertices coincide.
struct TopoEdge {
  struct Step {
    int edge;      // combinatorial edge index
    bool forward;  // true when traversed from its from-node to its to-node
  };
  int start_vertex = -1;
  int end_vertex = -1;
  std::vector<Step> steps;
  Rational length;
  bool is_loop() const { return start_vertex == end_vertex; }
};

/// Exact metric finite graph: a connected multigraph (loops and parallel
/// edges allowed) with positive rational edge lengths. Immutable after
/// construction; all member functions are const and thread-safe.
class MetricGraph : public std::enable_shared_from_this<MetricGraph> {
public:
  struct Edge {
    std::string id;
    int from;
    int to;
    Rational length;
  };

  struct NodeSpec {
    std::string id;
  };
  struct EdgeSpec {
    std::string id;
    std::string from;
    std::string to;
    Rational length = Rational(1);
  };

  static GraphPtr create(const std::vector<std::string>& node_ids,
                         const std::vector<EdgeSpec>& edge_specs) {
    auto g = std::shared_ptr<MetricGraph>(new MetricGraph());
    for (const auto& nid : node_ids) {
      if (g->node_index_.count(nid)) throw input_error("duplicate node id: " + nid);
      g->node_index_[nid] = static_cast<int>(g->node_ids_.size());
      g->node_ids_.push_back(nid);
    }
    for (const auto& es : edge_specs) {
      if (g->edge_index_.count(es.id)) throw input_error("duplicate edge id: " + es.id);
      if (!(es.length > Rational(0))) throw input_error("edge length must be positive: " + es.id);
      auto fit = g->node_index_.find(es.from);
      auto tit = g->node_index_.find(es.to);
      if (fit == g->node_index_.end() || tit == g->node_index_.end())
        throw input_error("edge " + es.id + " references unknown node");
      g->edge_index_[es.id] = static_cast<int>(g->edges_.size());
      g->edges_.push_back(Edge{es.id, fit->second, tit->second, es.length});
    }
    if (g->edges_.empty()) throw input_error("graph must have at least one edge");
    g->finish();
    return g;
  }

  int node_count() const { return static_cast<int>(node_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& node_id(int i) const { return node_ids_[i]; }
  const Edge& edge(int i) const { return edges_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }

  int node_index(const std::string& id) const {
    auto it = node_index_.find(id);
    if (it == node_index_.end()) throw input_error("unknown node id: " + id);
    return it->second;
  }
  int edge_idx(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw input_error("unknown edge id: " + id);
    return it->second;
  }
  bool has_node(const std::string& id) const { return node_index_.count(id) > 0; }

  GraphPoint node_point(int node) const {
    if (node < 0 || node >= node_count()) throw input_error("node index out of range");
    GraphPoint p;
    p.node = node;
    return p;
  }
  GraphPoint node_point(const std::string& id) const { return node_point(node_index(id)); }

  /// Canonicalizing point factory: t = 0 and t = 1 collapse to the end nodes.
  GraphPoint edge_point(int edge, const Rational& t) const {
    if (edge < 0 || edge >= edge_count()) throw input_error("edge index out of range");
    if (t < Rational(0) || t > Rational(1)) throw input_error("edge offset outside [0,1]");
    if (t == Rational(0)) return node_point(edges_[edge].from);
    if (t == Rational(1)) return node_point(edges_[edge].to);
    GraphPoint p;
    p.edge = edge;
    p.t = t;
    return p;
  }
  GraphPoint edge_point(const std::string& id, const Rational& t) const {
    return edge_point(edge_idx(id), t);
  }

  /// Menger-Urysohn order of a point, computed combinatorially: interior
  /// points have order 2, a node has order = degree with loops counted twice.
  int point_order(const GraphPoint& p) const {
    validate_point(p);
    if (!p.is_node()) return 2;
    return node_order_[p.node];
  }
  int node_order(int node) const { return node_order_[node]; }

  bool is_acyclic() const { return acyclic_; }

  SpaceKind classify_space() const {
    if (acyclic_) {
      bool all_le2 = true;
      for (int o : node_order_)
        if (o > 2) all_le2 = false;
      return all_le2 ? SpaceKind::Arc : SpaceKind::Tree;
    }
    bool all_eq2 = true;
    for (int o : node_order_)
      if (o != 2) all_eq2 = false;
    return all_eq2 ? SpaceKind::Circle : SpaceKind::GeneralGraph;
  }

  /// Topological vertex set V(X): nodes of order != 2.
  std::vector<int> vertices() const {
    std::vector<int> v;
    for (int i = 0; i < node_count(); ++i)
      if (node_order_[i] != 2) v.push_back(i);
    return v;
  }
  /// Endpoints E(X) as node indices (order-1 points are always nodes).
  std::vector<int> endpoints() const {
    std::vector<int> v;
    for (int i = 0; i < node_count(); ++i)
      if (node_order_[i] == 1) v.push_back(i);
    return v;
  }
  /// Ramification points R(X) as node indices.
  std::vector<int> ramification_points() const {
    std::vector<int> v;
    for (int i = 0; i < node_count(); ++i)
      if (node_order_[i] >= 3) v.push_back(i);
    return v;
  }

  /// Incident (edge, end) slots at a node; end 0 = from side, end 1 = to side.
  /// A loop contributes both of its ends.
  const std::vector<std::pair<int, int>>& incident_slots(int node) const {
    return incidence_[node];
  }

  /// Geodesic (shortest-path) distance between two points, exact.
  Rational geodesic_distance(const GraphPoint& p, const GraphPoint& q) const {
    validate_point(p);
    validate_point(q);
    if (p == q) return Rational(0);
    std::vector<std::pair<int, Rational>> offers;
    if (q.is_node()) {
      offers.emplace_back(q.node, Rational(0));
    } else {
      const Edge& e = edges_[q.edge];
      offers.emplace_back(e.from, q.t * e.length);
      offers.emplace_back(e.to, (Rational(1) - q.t) * e.length);
    }
    std::vector<Rational> dv = node_distances(offers);
    Rational best = infinite_bound();
    if (p.is_node()) {
      best = dv[p.node];
    } else {
      const Edge& e = edges_[p.edge];
      best = min(p.t * e.length + dv[e.from], (Rational(1) - p.t) * e.length + dv[e.to]);
      if (!q.is_node() && q.edge == p.edge)
        best = min(best, (p.t - q.t).abs() * e.length);
    }
    return best;
  }

  /// Multi-source Dijkstra over nodes. `offers` lists (node, initial
  /// distance); returns the distance from every node to the offered sources
  /// through the metric graph.
  std::vector<Rational> node_distances(const std::vector<std::pair<int, Rational>>& offers) const {
    const Rational inf = infinite_bound();
    std::vector<Rational> dist(node_count(), inf);
    using Item = std::pair<Rational, int>;
    auto cmp = [](const Item& a, const Item& b) { return b.first < a.first; };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
    for (const auto& [n, d] : offers) {
      if (d < dist[n]) {
        dist[n] = d;
        pq.push({d, n});
      }
    }
    std::vector<char> done(node_count(), 0);
    while (!pq.empty()) {
      auto [d, n] = pq.top();
      pq.pop();
      if (done[n]) continue;
      done[n] = 1;
      for (const auto& [ei, end] : incidence_[n]) {
        const Edge& e = edges_[ei];
        int other = end == 0 ? e.to : e.from;
        Rational nd = d + e.length;
        if (nd < dist[other]) {
          dist[other] = nd;
          pq.push({nd, other});
        }
      }
    }
    return dist;
  }

  /// A distance upper bound strictly above any geodesic distance in the graph.
  Rational infinite_bound() const { return total_length_ + Rational(1); }
  Rational total_length() const { return total_length_; }

  /// Maximal free-arc decomposition. Empty when the graph is a circle
  /// (no topological vertex exists to anchor a chain).
  const std::vector<TopoEdge>& topological_edges() const { return topo_edges_; }

  /// Position of a point along a topological edge: arclength from the chain's
  /// start vertex, if the point lies on that chain.
  std::optional<Rational> position_on(const TopoEdge& te, const GraphPoint& p) const {
    Rational acc(0);
    for (const auto& st : te.steps) {
      const Edge& e = edges_[st.edge];
      Rational lo = acc, hi = acc + e.length;
      if (p.is_node()) {
        int entry = st.forward ? e.from : e.to;
        int exit = st.forward ? e.to : e.from;
        if (p.node == entry) return lo;
        if (p.node == exit) return hi;
      } else if (p.edge == st.edge) {
        Rational local = st.forward ? p.t : Rational(1) - p.t;
        return lo + local * e.length;
      }
      acc = acc + e.length;
    }
    return std::nullopt;
  }

  /// The point at arclength `pos` from the start vertex of the chain.
  GraphPoint point_at(const TopoEdge& te, const Rational& pos) const {
    if (pos < Rational(0) || pos > te.length) throw input_error("position outside topological edge");
    Rational acc(0);
    for (const auto& st : te.steps) {
      const Edge& e = edges_[st.edge];
      if (pos <= acc + e.length) {
        Rational local = (pos - acc) / e.length;
        return edge_point(st.edge, st.forward ? local : Rational(1) - local);
      }
      acc = acc + e.length;
    }
    return node_point(te.end_vertex);
  }

  /// Copy of the graph with every edge length set to one.
  GraphPtr with_unit_lengths() const {
    std::vector<EdgeSpec> specs;
    for (const auto& e : edges_)
      specs.push_back({e.id, node_ids_[e.from], node_ids_[e.to], Rational(1)});
    return create(node_ids_, specs);
  }

  void validate_point(const GraphPoint& p) const {
    if (p.is_node()) {
      if (p.node >= node_count()) throw input_error("point references unknown node");
      return;
    }
    if (p.edge < 0 || p.edge >= edge_count()) throw input_error("point references unknown edge");
    if (!(p.t > Rational(0)) || !(p.t < Rational(1)))
      throw input_error("interior point offset must lie strictly in (0,1)");
  }

private:
  MetricGraph() = default;

  void finish() {
    incidence_.assign(node_ids_.size(), {});
    node_order_.assign(node_ids_.size(), 0);
    total_length_ = Rational(0);
    for (int i = 0; i < edge_count(); ++i) {
      const Edge& e = edges_[i];
      incidence_[e.from].push_back({i, 0});
      incidence_[e.to].push_back({i, 1});
      node_order_[e.from] += 1;
      node_order_[e.to] += 1;
      total_length_ += e.length;
    }
    // connectivity of the underlying multigraph
    std::vector<char> seen(node_count(), 0);
    std::vector<int> stack{edges_[0].from};
    seen[edges_[0].from] = 1;
    while (!stack.empty()) {
      int n = stack.back();
      stack.pop_back();
      for (const auto& [ei, end] : incidence_[n]) {
        int other = end == 0 ? edges_[ei].to : edges_[ei].from;
        if (!seen[other]) {
          seen[other] = 1;
          stack.push_back(other);
        }
      }
    }
    for (int i = 0; i < node_count(); ++i)
      if (!seen[i]) throw input_error("graph is not connected (node " + node_ids_[i] + ")");
    acyclic_ = edge_count() == node_count() - 1;
    build_topo_edges();
  }

  void build_topo_edges() {
    topo_edges_.clear();
    std::vector<char> used(edge_count(), 0);
    for (int v = 0; v < node_count(); ++v) {
      if (node_order_[v] == 2) continue;
      for (const auto& [ei, end] : incidence_[v]) {
        if (used[ei]) continue;
        // walk from the vertex through ordinary nodes until the next vertex
        TopoEdge te;
        te.start_vertex = v;
        te.length = Rational(0);
        int cur_edge = ei;
        bool forward = end == 0;
        int cur_node = v;
        while (true) {
          used[cur_edge] = 1;
          te.steps.push_back({cur_edge, forward});
          te.length += edges_[cur_edge].length;
          int next = forward ? edges_[cur_edge].to : edges_[cur_edge].from;
          if (node_order_[next] != 2) {
            te.end_vertex = next;
            break;
          }
          // continue through the ordinary node along its other slot
          const auto& slots = incidence_[next];
          int nxt_edge = -1, nxt_end = -1;
          for (const auto& [ej, endj] : slots) {
            if (ej == cur_edge && ((endj == 1) == forward)) continue;
            nxt_edge = ej;
            nxt_end = endj;
          }
          cur_edge = nxt_edge;
          forward = nxt_end == 0;
          cur_node = next;
          (void)cur_node;
        }
        topo_edges_.push_back(std::move(te));
      }
    }
  }

  std::vector<std::string> node_ids_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> node_index_;
  std::unordered_map<std::string, int> edge_index_;
  std::vector<std::vector<std::pair<int, int>>> incidence_;
  std::vector<int> node_order_;
  std::vector<TopoEdge> topo_edges_;
  Rational total_length_;
  bool acyclic_ = false;
};

/// Correspondence between a graph and its k-fold subdivision; maps points
/// both ways and underlies every oracle-vs-exact comparison.
class SubdivisionMap {
public:
  SubdivisionMap(GraphPtr base, GraphPtr fine, int k, std::vector<GraphPoint> sub_node_in_base,
                 std::vector<std::pair<int, int>> sub_edge_origin)
      : base_(std::move(base)),
        fine_(std::move(fine)),
        k_(k),
        sub_node_in_base_(std::move(sub_node_in_base)),
        sub_edge_origin_(std::move(sub_edge_origin)) {}

  const GraphPtr& base() const { return base_; }
  const GraphPtr& fine() const { return fine_; }
  int k() const { return k_; }

  GraphPoint to_base(const GraphPoint& p) const {
    if (p.is_node()) return sub_node_in_base_[p.node];
    auto [be, seg] = sub_edge_origin_[p.edge];
    Rational t = (Rational(seg) + p.t) / Rational(k_);
    return base_->edge_point(be, t);
  }

  GraphPoint from_base(const GraphPoint& p) const {
    if (p.is_node()) return fine_->node_point(base_->node_id(p.node));
    // offset t on base edge e lands in segment floor(t*k)
    Rational scaled = p.t * Rational(k_);
    std::int64_t seg = scaled.num() / scaled.den();
    if (Rational(seg) == scaled) {
      // exactly on a subdivision node
      return fine_->node_point(sub_node_id(base_->edge(p.edge).id, static_cast<int>(seg)));
    }
    int fine_edge = fine_->edge_idx(sub_edge_id(base_->edge(p.edge).id, static_cast<int>(seg)));
    return fine_->edge_point(fine_edge, scaled - Rational(seg));
  }

  /// Base edge index and segment number of a fine edge.
  std::pair<int, int> edge_origin(int fine_edge) const { return sub_edge_origin_[fine_edge]; }

  static std::string sub_edge_id(const std::string& base_edge, int seg) {
    return base_edge + "#" + std::to_string(seg);
  }
  static std::string sub_node_id(const std::string& base_edge, int i) {
    return base_edge + "@" + std::to_string(i);
  }

private:
  GraphPtr base_;
  GraphPtr fine_;
  int k_;
  std::vector<GraphPoint> sub_node_in_base_;   // indexed by fine node
  std::vector<std::pair<int, int>> sub_edge_origin_;  // fine edge -> (base edge, segment)
};

/// Replaces each edge by k edges of length (original)/k. The result is
/// isometric to the input; the returned map carries the coordinate change.
inline SubdivisionMap subdivide(const GraphPtr& g, int k) {
  if (k < 1) throw input_error("subdivision factor must be >= 1");
  std::vector<std::string> nodes;
  std::vector<MetricGraph::EdgeSpec> edges;
  for (int i = 0; i < g->node_count(); ++i) nodes.push_back(g->node_id(i));
  for (const auto& e : g->edges()) {
    for (int i = 1; i < k; ++i) nodes.push_back(SubdivisionMap::sub_node_id(e.id, i));
    for (int s = 0; s < k; ++s) {
      std::string from = s == 0 ? g->node_id(e.from) : SubdivisionMap::sub_node_id(e.id, s);
      std::string to = s == k - 1 ? g->node_id(e.to) : SubdivisionMap::sub_node_id(e.id, s + 1);
      edges.push_back({SubdivisionMap::sub_edge_id(e.id, s), from, to, e.length / Rational(k)});
    }
  }
  GraphPtr fine = MetricGraph::create(nodes, edges);
  std::vector<GraphPoint> node_map(fine->node_count());
  for (int i = 0; i < g->node_count(); ++i) node_map[i] = g->node_point(i);
  for (const auto& e : g->edges()) {
    for (int i = 1; i < k; ++i) {
      int fn = fine->node_index(SubdivisionMap::sub_node_id(e.id, i));
      int be = g->edge_idx(e.id);
      node_map[fn] = g->edge_point(be, Rational(i, k));
    }
  }
  std::vector<std::pair<int, int>> edge_origin(fine->edge_count());
  for (const auto& e : g->edges()) {
    int be = g->edge_idx(e.id);
    for (int s = 0; s < k; ++s)
      edge_origin[fine->edge_idx(SubdivisionMap::sub_edge_id(e.id, s))] = {be, s};
  }
  return SubdivisionMap(g, fine, k, std::move(node_map), std::move(edge_origin));
}

}  // namespace ncstar
