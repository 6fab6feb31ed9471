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

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "ncstar/metric_graph.hpp"

namespace ncstar {

/// One maximal interval of a point set on a single edge, parameters in [0,1].
/// Canonical form: nonempty, sorted, pairwise non-touching; closedness at the
/// edge ends 0 and 1 is never stored here (membership of an end point is
/// exactly membership of the corresponding node).
struct IntervalPiece {
  Rational lo, hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool degenerate() const { return lo == hi; }
};

/// Finite union of edge intervals and nodes of a fixed metric graph, with
/// exact rational endpoints and full open/closed bookkeeping. This is the
/// set algebra behind complements, boundaries and the Vietoris membership
/// tests; all operations are exact.
class PiecewiseSet {
public:
  PiecewiseSet() = default;
  explicit PiecewiseSet(GraphPtr g) : graph_(std::move(g)) {}

  static PiecewiseSet empty(GraphPtr g) { return PiecewiseSet(std::move(g)); }

  static PiecewiseSet whole(GraphPtr g) {
    PiecewiseSet s(g);
    for (int e = 0; e < g->edge_count(); ++e)
      s.pieces_[e].push_back({Rational(0), Rational(1), false, false});
    for (int n = 0; n < g->node_count(); ++n) s.nodes_.insert(n);
    return s;
  }

  static PiecewiseSet single_point(GraphPtr g, const GraphPoint& p) {
    g->validate_point(p);
    PiecewiseSet s(g);
    if (p.is_node())
      s.nodes_.insert(p.node);
    else
      s.pieces_[p.edge].push_back({p.t, p.t, true, true});
    return s;
  }

  /// Builds from closed intervals (the subcontinuum trace convention):
  /// an interval touching an edge end includes the end node.
  static PiecewiseSet from_closed_intervals(
      GraphPtr g, const std::map<int, std::vector<std::pair<Rational, Rational>>>& raw) {
    PiecewiseSet s(g);
    for (const auto& [e, ivs] : raw) {
      if (e < 0 || e >= g->edge_count()) throw input_error("interval references unknown edge");
      for (const auto& [lo, hi] : ivs) {
        if (lo < Rational(0) || hi > Rational(1) || hi < lo)
          throw input_error("interval outside [0,1] or reversed on edge " + g->edge(e).id);
        s.add_raw(e, {lo, hi, true, true});
      }
    }
    s.canonicalize();
    return s;
  }

  const GraphPtr& graph() const { return graph_; }
  const std::map<int, std::vector<IntervalPiece>>& pieces() const { return pieces_; }
  const std::set<int>& nodes() const { return nodes_; }

  bool is_empty() const { return pieces_.empty() && nodes_.empty(); }

  bool contains(const GraphPoint& p) const {
    if (p.is_node()) return nodes_.count(p.node) > 0;
    auto it = pieces_.find(p.edge);
    if (it == pieces_.end()) return false;
    for (const auto& piece : it->second) {
      if (p.t > piece.lo && p.t < piece.hi) return true;
      if (p.t == piece.lo && piece.lo_closed) return true;
      if (p.t == piece.hi && piece.hi_closed) return true;
    }
    return false;
  }

  /// Adds a raw piece; call canonicalize() afterwards.
  void add_raw(int edge, IntervalPiece piece) { pieces_[edge].push_back(piece); }
  void add_node_raw(int node) { nodes_.insert(node); }

  /// Restores the canonical invariants: pieces sorted, merged, maximal,
  /// end-point closedness converted into node membership.
  void canonicalize() {
    for (auto it = pieces_.begin(); it != pieces_.end();) {
      auto& v = it->second;
      std::sort(v.begin(), v.end(), [](const IntervalPiece& a, const IntervalPiece& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
      });
      std::vector<IntervalPiece> merged;
      for (const auto& p : v) {
        if (p.hi < p.lo) throw input_error("reversed interval");
        if (p.degenerate() && !(p.lo_closed && p.hi_closed)) continue;  // empty
        if (!merged.empty()) {
          auto& last = merged.back();
          bool overlap = p.lo < last.hi;
          bool touch = p.lo == last.hi && (last.hi_closed || p.lo_closed);
          if (overlap || touch) {
            if (p.hi > last.hi) {
              last.hi = p.hi;
              last.hi_closed = p.hi_closed;
            } else if (p.hi == last.hi) {
              last.hi_closed = last.hi_closed || p.hi_closed;
            }
            if (p.lo == last.lo) last.lo_closed = last.lo_closed || p.lo_closed;
            continue;
          }
        }
        merged.push_back(p);
      }
      // fold end-point closedness into node membership
      const auto& e = graph_->edge(it->first);
      std::vector<IntervalPiece> out;
      for (auto p : merged) {
        if (p.lo == Rational(0) && p.lo_closed) {
          nodes_.insert(e.from);
          p.lo_closed = false;
        }
        if (p.hi == Rational(1) && p.hi_closed) {
          nodes_.insert(e.to);
          p.hi_closed = false;
        }
        if (p.degenerate() && !(p.lo_closed && p.hi_closed)) continue;  // was [0,0] or [1,1]
        out.push_back(p);
      }
      if (out.empty())
        it = pieces_.erase(it);
      else {
        it->second = std::move(out);
        ++it;
      }
    }
  }

  PiecewiseSet set_union(const PiecewiseSet& o) const {
    return combine(o, [](bool a, bool b) { return a || b; });
  }
  PiecewiseSet set_intersect(const PiecewiseSet& o) const {
    return combine(o, [](bool a, bool b) { return a && b; });
  }
  PiecewiseSet set_difference(const PiecewiseSet& o) const {
    return combine(o, [](bool a, bool b) { return a && !b; });
  }
  PiecewiseSet set_complement() const { return whole(graph_).set_difference(*this); }

  bool is_subset_of(const PiecewiseSet& o) const { return set_difference(o).is_empty(); }
  bool intersects(const PiecewiseSet& o) const { return !set_intersect(o).is_empty(); }

  friend bool operator==(const PiecewiseSet& a, const PiecewiseSet& b) {
    if (a.nodes_ != b.nodes_) return false;
    if (a.pieces_.size() != b.pieces_.size()) return false;
    for (auto ita = a.pieces_.begin(), itb = b.pieces_.begin(); ita != a.pieces_.end();
         ++ita, ++itb) {
      if (ita->first != itb->first || ita->second.size() != itb->second.size()) return false;
      for (size_t i = 0; i < ita->second.size(); ++i) {
        const auto& x = ita->second[i];
        const auto& y = itb->second[i];
        if (x.lo != y.lo || x.hi != y.hi || x.lo_closed != y.lo_closed ||
            x.hi_closed != y.hi_closed)
          return false;
      }
    }
    return true;
  }
  friend bool operator!=(const PiecewiseSet& a, const PiecewiseSet& b) { return !(a == b); }

  /// Topological closure.
  PiecewiseSet closure() const {
    PiecewiseSet r(graph_);
    r.nodes_ = nodes_;
    for (const auto& [e, v] : pieces_) {
      for (auto p : v) {
        if (p.lo == Rational(0)) r.nodes_.insert(graph_->edge(e).from);
        if (p.hi == Rational(1)) r.nodes_.insert(graph_->edge(e).to);
        p.lo_closed = p.lo > Rational(0);
        p.hi_closed = p.hi < Rational(1);
        r.pieces_[e].push_back(p);
      }
    }
    r.canonicalize();
    return r;
  }

  /// Topological interior. A node stays interior only when every incident
  /// edge germ is covered by an interval of positive reach.
  PiecewiseSet interior() const {
    PiecewiseSet r(graph_);
    for (const auto& [e, v] : pieces_) {
      for (auto p : v) {
        if (p.degenerate()) continue;
        p.lo_closed = false;
        p.hi_closed = false;
        r.pieces_[e].push_back(p);
      }
    }
    for (int n : nodes_) {
      bool all_covered = true;
      for (const auto& [ei, end] : graph_->incident_slots(n)) {
        if (!germ_covered(ei, end)) {
          all_covered = false;
          break;
        }
      }
      if (all_covered) r.nodes_.insert(n);
    }
    r.canonicalize();
    return r;
  }

  /// The finite boundary point set of a closed set (Bd = S minus Int S).
  std::vector<GraphPoint> boundary_points() const {
    std::vector<GraphPoint> out;
    PiecewiseSet inter = interior();
    for (const auto& [e, v] : pieces_) {
      for (const auto& p : v) {
        if (p.degenerate()) {
          out.push_back(graph_->edge_point(e, p.lo));
          continue;
        }
        if (p.lo > Rational(0) && p.lo_closed) out.push_back(graph_->edge_point(e, p.lo));
        if (p.hi < Rational(1) && p.hi_closed) out.push_back(graph_->edge_point(e, p.hi));
      }
    }
    for (int n : nodes_)
      if (!inter.nodes().count(n)) out.push_back(graph_->node_point(n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Whether the set equals its closure.
  bool is_closed() const { return *this == closure(); }
  bool is_open() const { return *this == interior(); }

  /// Splits the set into its connected components.
  std::vector<PiecewiseSet> connected_components() const {
    // union-find over pieces and nodes
    struct UF {
      std::vector<int> p;
      explicit UF(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
      }
      int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
      }
      void unite(int a, int b) { p[find(a)] = find(b); }
    };
    std::vector<std::pair<int, const IntervalPiece*>> flat;
    for (const auto& [e, v] : pieces_)
      for (const auto& p : v) flat.emplace_back(e, &p);
    std::map<int, int> node_slot;
    int idx = static_cast<int>(flat.size());
    for (int n : nodes_) node_slot[n] = idx++;
    UF uf(idx);
    for (size_t i = 0; i < flat.size(); ++i) {
      const auto& [e, p] = flat[i];
      const auto& edge = graph_->edge(e);
      if (p->lo == Rational(0) && nodes_.count(edge.from))
        uf.unite(static_cast<int>(i), node_slot[edge.from]);
      if (p->hi == Rational(1) && nodes_.count(edge.to))
        uf.unite(static_cast<int>(i), node_slot[edge.to]);
    }
    std::map<int, PiecewiseSet> comps;
    for (size_t i = 0; i < flat.size(); ++i) {
      int root = uf.find(static_cast<int>(i));
      auto [it, fresh] = comps.try_emplace(root, graph_);
      it->second.pieces_[flat[i].first].push_back(*flat[i].second);
    }
    for (int n : nodes_) {
      int root = uf.find(node_slot[n]);
      auto [it, fresh] = comps.try_emplace(root, graph_);
      it->second.nodes_.insert(n);
    }
    std::vector<PiecewiseSet> out;
    for (auto& [root, s] : comps) {
      s.canonicalize();
      out.push_back(std::move(s));
    }
    return out;
  }

  bool is_connected_set() const {
    if (is_empty()) throw input_error("connectivity of the empty set is undefined");
    return connected_components().size() == 1;
  }

private:
  bool germ_covered(int edge, int end) const {
    auto it = pieces_.find(edge);
    if (it == pieces_.end()) return false;
    for (const auto& p : it->second) {
      if (p.degenerate()) continue;
      if (end == 0 && p.lo == Rational(0)) return true;
      if (end == 1 && p.hi == Rational(1)) return true;
    }
    return false;
  }

  PiecewiseSet combine(const PiecewiseSet& o, const std::function<bool(bool, bool)>& op) const {
    if (graph_ != o.graph_) throw input_error("set operation across different graphs");
    PiecewiseSet r(graph_);
    std::set<int> edges;
    for (const auto& [e, v] : pieces_) edges.insert(e);
    for (const auto& [e, v] : o.pieces_) edges.insert(e);
    for (int e : edges) {
      std::vector<Rational> cuts{Rational(0), Rational(1)};
      auto add_cuts = [&](const PiecewiseSet& s) {
        auto it = s.pieces_.find(e);
        if (it == s.pieces_.end()) return;
        for (const auto& p : it->second) {
          cuts.push_back(p.lo);
          cuts.push_back(p.hi);
        }
      };
      add_cuts(*this);
      add_cuts(o);
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

      auto in_open = [&](const PiecewiseSet& s, const Rational& a, const Rational& b) {
        Rational mid = (a + b) / Rational(2);
        auto it = s.pieces_.find(e);
        if (it == s.pieces_.end()) return false;
        for (const auto& p : it->second)
          if (mid > p.lo && mid < p.hi) return true;
        return false;
      };
      auto in_point = [&](const PiecewiseSet& s, const Rational& t) {
        GraphPoint gp;
        gp.edge = e;
        gp.t = t;
        return s.contains(gp);
      };

      // Ordered atom list: open(c0,c1), point c1, open(c1,c2), ..., open(c_{m-1},c_m).
      // Point atoms exist only at interior cuts; the edge-end points are
      // node-governed. A maximal run of consecutive in-atoms is one piece.
      struct Atom {
        bool is_point;
        Rational a, b;  // point: a == b
        bool in;
      };
      std::vector<Atom> atoms;
      for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (i > 0)
          atoms.push_back({true, cuts[i], cuts[i],
                           op(in_point(*this, cuts[i]), in_point(o, cuts[i]))});
        atoms.push_back({false, cuts[i], cuts[i + 1],
                         op(in_open(*this, cuts[i], cuts[i + 1]),
                            in_open(o, cuts[i], cuts[i + 1]))});
      }
      size_t i = 0;
      while (i < atoms.size()) {
        if (!atoms[i].in) {
          ++i;
          continue;
        }
        size_t j = i;
        while (j + 1 < atoms.size() && atoms[j + 1].in) ++j;
        IntervalPiece piece;
        piece.lo = atoms[i].a;
        piece.lo_closed = atoms[i].is_point;
        piece.hi = atoms[j].b;
        piece.hi_closed = atoms[j].is_point;
        r.pieces_[e].push_back(piece);
        i = j + 1;
      }
    }
    for (int n = 0; n < graph_->node_count(); ++n)
      if (op(nodes_.count(n) > 0, o.nodes_.count(n) > 0)) r.nodes_.insert(n);
    r.canonicalize();
    return r;
  }

  GraphPtr graph_;
  std::map<int, std::vector<IntervalPiece>> pieces_;
  std::set<int> nodes_;
};

}  // namespace ncstar
