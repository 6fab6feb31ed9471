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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncstar/subcontinuum.hpp"

namespace ncstar {

inline constexpr long long kDefaultOracleBudget = 2'000'000;

enum class EnumerationMode {
  Exhaustive,  // every connected union of grid segments and grid nodes
  CutPoint,    // tree shortcut: X and every complement of a grid-node branch cut
};

inline const char* to_string(EnumerationMode m) {
  return m == EnumerationMode::Exhaustive ? "exhaustive" : "cut_point";
}

namespace detail {

struct Bitset {
  std::vector<std::uint64_t> w;
  explicit Bitset(int n) : w((n + 63) / 64, 0) {}
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
};

/// Counts connected edge-subgraphs of a tree, saturating at cap.
inline long long count_tree_edge_subgraphs(const GraphPtr& g, long long cap) {
  int n = g->node_count();
  std::vector<long long> down(n, 0);  // subtrees using descendant edges, containing the node
  std::vector<int> order, parent(n, -1), parent_edge(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (const auto& [ei, end] : g->incident_slots(v)) {
      int other = end == 0 ? g->edge(ei).to : g->edge(ei).from;
      if (!seen[other]) {
        seen[other] = 1;
        parent[other] = v;
        parent_edge[other] = ei;
        stack.push_back(other);
      }
    }
  }
  auto sat_mul = [cap](long long a, long long b) {
    if (a == 0 || b == 0) return 0LL;
    if (a > cap / b) return cap;
    return a * b;
  };
  auto sat_add = [cap](long long a, long long b) { return a > cap - b ? cap : a + b; };
  std::vector<long long> prod(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    for (const auto& [ei, end] : g->incident_slots(v)) {
      int other = end == 0 ? g->edge(ei).to : g->edge(ei).from;
      if (parent[other] == v && parent_edge[other] == ei)
        prod[v] = sat_mul(prod[v], sat_add(1, prod[other]));
    }
  }
  long long total = 0;
  for (int v = 0; v < n; ++v) total = sat_add(total, prod[v] > 0 ? prod[v] - 1 : 0);
  return sat_add(total, n);  // plus node singletons
}

}  // namespace detail

/// Finite sample of the hyperspace of a subdivided graph: the grid
/// subcontinua (connected unions of closed grid segments plus grid-node
/// singletons) and the filtered non-cut members, the latter materialized as
/// exact subcontinua of the base graph.
class HyperspaceSample {
public:
  GraphPtr base;
  int k = 1;
  EnumerationMode mode = EnumerationMode::Exhaustive;
  long long element_count = 0;  // all grid subcontinua (exact or DP count)
  bool elements_materialized = false;

  // exhaustive mode: one entry per element
  std::vector<detail::Bitset> segment_elements;  // connected segment sets
  std::vector<int> node_elements;                // grid-node singletons (fine node index)
  std::vector<char> segment_member;              // is_noncut flags
  std::vector<char> node_member;

  // members in base-graph coordinates, in canonical enumeration order
  std::vector<Subcontinuum> members;

  long long member_count() const { return static_cast<long long>(members.size()); }

  /// Node distance fields of all members (for pairwise Hausdorff loops).
  const std::vector<std::vector<Rational>>& member_fields() const {
    if (fields_.size() != members.size()) {
      fields_.clear();
      fields_.reserve(members.size());
      for (const auto& m : members) fields_.push_back(m.node_distance_field());
    }
    return fields_;
  }

  Rational member_distance(int i, int j) const {
    const auto& f = member_fields();
    return hausdorff_distance_cached(members[i], f[i], members[j], f[j]);
  }

private:
  mutable std::vector<std::vector<Rational>> fields_;
};

namespace detail {

/// Converts a grid segment mask to a subcontinuum of the base graph.
inline Subcontinuum mask_to_base(const SubdivisionMap& map, const Bitset& mask) {
  const GraphPtr& base = map.base();
  const GraphPtr& fine = map.fine();
  PiecewiseSet s(base);
  int k = map.k();
  for (int fe = 0; fe < fine->edge_count(); ++fe) {
    if (!mask.test(fe)) continue;
    auto [be, seg] = map.edge_origin(fe);
    s.add_raw(be, {Rational(seg, k), Rational(seg + 1, k), true, true});
  }
  s.canonicalize();
  return Subcontinuum::from_pointset(std::move(s));
}

/// Complement connectivity of a grid element given (segments, touched nodes).
inline bool grid_noncut(const GraphPtr& fine, const Bitset& mask,
                        const std::vector<char>& touched) {
  int N = fine->node_count(), E = fine->edge_count();
  std::vector<int> uf(N + E);
  for (int i = 0; i < N + E; ++i) uf[i] = i;
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
  for (int e = 0; e < E; ++e) {
    if (mask.test(e)) continue;
    const auto& ed = fine->edge(e);
    if (!touched[ed.from]) unite(N + e, ed.from);
    if (!touched[ed.to]) unite(N + e, ed.to);
  }
  int comps = 0;
  std::vector<char> counted(N + E, 0);
  for (int e = 0; e < E; ++e) {
    if (mask.test(e)) continue;
    int r = find(N + e);
    if (!counted[r]) {
      counted[r] = 1;
      ++comps;
    }
  }
  for (int v = 0; v < N; ++v) {
    if (touched[v]) continue;
    int r = find(v);
    if (!counted[r]) {
      counted[r] = 1;
      ++comps;
    }
  }
  return comps <= 1;
}

/// Binary-partition enumeration of connected edge sets: every connected set
/// containing `root` whose other edges exceed `root` is emitted exactly once
/// (first candidate in / first candidate permanently out).
template <typename Emit>
void enumerate_rec(const std::vector<std::vector<int>>& adj, int root, Bitset& S,
                   std::vector<int> cand, Bitset forb, const Emit& emit) {
  emit(S);
  Bitset in_cand(static_cast<int>(adj.size()));
  for (int v : cand) in_cand.set(v);
  while (!cand.empty()) {
    int v = cand.back();
    cand.pop_back();
    in_cand.reset(v);
    S.set(v);
    std::vector<int> cand2 = cand;
    for (int n : adj[v])
      if (n > root && !S.test(n) && !forb.test(n) && !in_cand.test(n)) cand2.push_back(n);
    enumerate_rec(adj, root, S, std::move(cand2), forb, emit);
    S.reset(v);
    forb.set(v);
  }
}

}  // namespace detail

/// Complete duplicate-free enumeration of the grid subcontinua of the k-fold
/// subdivision, with non-cut flags and member materialization. Throws a
/// resource_error when the element count would exceed the budget.
inline HyperspaceSample enumerate_grid_subcontinua(const GraphPtr& g, int k,
                                                   long long budget = kDefaultOracleBudget) {
  SubdivisionMap map = subdivide(g, k);
  const GraphPtr& fine = map.fine();
  int E = fine->edge_count(), N = fine->node_count();

  if (fine->is_acyclic()) {
    long long count = detail::count_tree_edge_subgraphs(fine, budget + 1);
    if (count > budget)
      throw resource_error("grid element count exceeds budget (count >= " +
                           std::to_string(count) + ", budget " + std::to_string(budget) + ")");
  }

  HyperspaceSample out;
  out.base = g;
  out.k = k;
  out.mode = EnumerationMode::Exhaustive;
  out.elements_materialized = true;

  std::vector<std::vector<int>> adj(E);
  for (int v = 0; v < N; ++v) {
    const auto& slots = fine->incident_slots(v);
    for (const auto& [e1, end1] : slots)
      for (const auto& [e2, end2] : slots)
        if (e1 != e2) adj[e1].push_back(e2);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }

  long long count = 0;
  auto emit = [&](const detail::Bitset& S) {
    if (++count > budget)
      throw resource_error("grid element count exceeds budget " + std::to_string(budget));
    out.segment_elements.push_back(S);
  };
  for (int r = 0; r < E; ++r) {
    detail::Bitset S(E), forb(E);
    S.set(r);
    std::vector<int> cand;
    for (int n : adj[r])
      if (n > r) cand.push_back(n);
    detail::enumerate_rec(adj, r, S, std::move(cand), std::move(forb), emit);
  }
  for (int v = 0; v < N; ++v) {
    if (++count > budget)
      throw resource_error("grid element count exceeds budget " + std::to_string(budget));
    out.node_elements.push_back(v);
  }
  out.element_count = count;

  // non-cut filter
  out.segment_member.resize(out.segment_elements.size());
  std::vector<char> touched(N);
  for (size_t i = 0; i < out.segment_elements.size(); ++i) {
    std::fill(touched.begin(), touched.end(), 0);
    const auto& mask = out.segment_elements[i];
    for (int e = 0; e < E; ++e)
      if (mask.test(e)) {
        touched[fine->edge(e).from] = 1;
        touched[fine->edge(e).to] = 1;
      }
    out.segment_member[i] = detail::grid_noncut(fine, mask, touched) ? 1 : 0;
  }
  out.node_member.resize(out.node_elements.size());
  detail::Bitset empty_mask(E);
  for (size_t i = 0; i < out.node_elements.size(); ++i) {
    std::fill(touched.begin(), touched.end(), 0);
    touched[out.node_elements[i]] = 1;
    out.node_member[i] = detail::grid_noncut(fine, empty_mask, touched) ? 1 : 0;
  }

  // materialize members on the base graph
  for (size_t i = 0; i < out.segment_elements.size(); ++i)
    if (out.segment_member[i]) out.members.push_back(detail::mask_to_base(map, out.segment_elements[i]));
  for (size_t i = 0; i < out.node_elements.size(); ++i)
    if (out.node_member[i])
      out.members.push_back(
          Subcontinuum::singleton(g, map.to_base(fine->node_point(out.node_elements[i]))));
  return out;
}

/// The grid NC* sample. Uses exhaustive enumeration when it fits the budget;
/// for trees whose element count overflows, falls back to the boundary-cut
/// enumeration (X plus every branch complement cut at a grid node), with
/// each candidate verified non-cut exactly. The fallback is complete for
/// trees because a grid member other than X has a one-point boundary at a
/// grid node.
inline HyperspaceSample sample_ncstar(const GraphPtr& g, int k,
                                      long long budget = kDefaultOracleBudget) {
  bool tree = g->is_acyclic();
  if (tree) {
    SubdivisionMap probe = subdivide(g, k);
    long long count = detail::count_tree_edge_subgraphs(probe.fine(), budget + 1);
    if (count > budget) {
      HyperspaceSample out;
      out.base = g;
      out.k = k;
      out.mode = EnumerationMode::CutPoint;
      out.element_count = count;  // saturated at budget + 1
      out.elements_materialized = false;
      out.members.push_back(Subcontinuum::whole(g));
      const GraphPtr& fine = probe.fine();
      for (int v = 0; v < fine->node_count(); ++v) {
        GraphPoint cut = probe.to_base(fine->node_point(v));
        auto comps = Subcontinuum::singleton(g, cut).complement_components();
        for (const auto& c : comps) {
          Subcontinuum m = complement_of_region(c);
          if (!m.is_noncut())
            throw domain_error("cut-point member failed the non-cut verification");
          out.members.push_back(std::move(m));
        }
      }
      return out;
    }
  }
  return enumerate_grid_subcontinua(g, k, budget);
}

/// Single-linkage clustering of the member sample in the eps-adjacency graph,
/// with the adequacy gaps the verdict depends on.
struct ClusterReport {
  Rational eps;
  int cluster_count = 0;
  std::vector<int> assignment;
  Rational grid_step;                  // max edge length / k of the sample
  Rational min_inter_cluster_gap;      // graph bound when a single cluster
  Rational max_intra_consecutive_gap;  // max over clusters of the MST bottleneck edge
  bool adequate = false;               // grid_step < eps, max_intra < eps < min_inter
  EnumerationMode mode = EnumerationMode::Exhaustive;
  long long element_count = 0;
  int member_count = 0;
};

inline ClusterReport cluster_components(const HyperspaceSample& sample, const Rational& eps) {
  if (!(eps > Rational(0))) throw input_error("eps must be positive");
  const int n = static_cast<int>(sample.members.size());
  ClusterReport rep;
  rep.eps = eps;
  rep.mode = sample.mode;
  rep.element_count = sample.element_count;
  rep.member_count = n;
  rep.grid_step = Rational(0);
  for (const auto& e : sample.base->edges())
    rep.grid_step = max(rep.grid_step, e.length / Rational(sample.k));
  if (n == 0) return rep;

  // adjacency with lower-bound pruning: pairs whose node-field bound already
  // exceeds eps cannot be eps-adjacent and need no exact evaluation
  const auto& fields = sample.member_fields();
  Rational inf = sample.base->infinite_bound();
  std::vector<std::vector<int>> adjacent(n);
  struct Skipped {
    Rational lb;
    int i, j;
  };
  std::vector<Skipped> skipped;
  std::vector<std::tuple<int, int, Rational>> exact_pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational lb = hausdorff_lower_bound(fields[i], fields[j], eps);
      if (lb > eps) {
        skipped.push_back({lb, i, j});
        continue;
      }
      Rational d = hausdorff_distance_cached(sample.members[i], fields[i], sample.members[j],
                                             fields[j]);
      exact_pairs.emplace_back(i, j, d);
      if (d <= eps) {
        adjacent[i].push_back(j);
        adjacent[j].push_back(i);
      }
    }
  std::vector<int> uf(n);
  for (int i = 0; i < n; ++i) uf[i] = i;
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j : adjacent[i]) uf[find(i)] = find(j);

  std::map<int, int> root_to_cluster;
  rep.assignment.resize(n);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    auto [it, fresh] = root_to_cluster.try_emplace(r, static_cast<int>(root_to_cluster.size()));
    rep.assignment[i] = it->second;
  }
  rep.cluster_count = static_cast<int>(root_to_cluster.size());

  // exact min inter-cluster gap: evaluated pairs first, then the skipped ones
  // in ascending lower-bound order until the bound rules the rest out
  rep.min_inter_cluster_gap = inf;
  for (const auto& [i, j, d] : exact_pairs)
    if (rep.assignment[i] != rep.assignment[j])
      rep.min_inter_cluster_gap = min(rep.min_inter_cluster_gap, d);
  std::sort(skipped.begin(), skipped.end(),
            [](const Skipped& a, const Skipped& b) { return a.lb < b.lb; });
  for (const auto& s : skipped) {
    if (rep.assignment[s.i] == rep.assignment[s.j]) continue;
    if (!(s.lb < rep.min_inter_cluster_gap)) break;
    rep.min_inter_cluster_gap =
        min(rep.min_inter_cluster_gap,
            hausdorff_distance_cached(sample.members[s.i], fields[s.i], sample.members[s.j],
                                      fields[s.j]));
  }

  // MST bottleneck per cluster: Kruskal over the eps-adjacency edges (any
  // minimax path inside a cluster already runs through edges <= eps, so the
  // pruned pairs cannot contribute)
  rep.max_intra_consecutive_gap = Rational(0);
  {
    std::vector<std::tuple<int, int, Rational>> edges;
    for (const auto& [i, j, d] : exact_pairs)
      if (d <= eps && rep.assignment[i] == rep.assignment[j]) edges.emplace_back(i, j, d);
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
      return std::get<2>(a) < std::get<2>(b);
    });
    std::vector<int> uf2(n);
    for (int i = 0; i < n; ++i) uf2[i] = i;
    auto find2 = [&](int x) {
      while (uf2[x] != x) x = uf2[x] = uf2[uf2[x]];
      return x;
    };
    for (const auto& [i, j, d] : edges) {
      int a = find2(i), b = find2(j);
      if (a == b) continue;
      uf2[a] = b;
      rep.max_intra_consecutive_gap = max(rep.max_intra_consecutive_gap, d);
    }
  }
  rep.adequate = rep.grid_step < eps && rep.max_intra_consecutive_gap < eps &&
                 eps < rep.min_inter_cluster_gap;
  return rep;
}

/// Limit analysis of a finite sequence of subcontinua.
struct LimitReport {
  bool cauchy = false;  // consecutive gaps nonincreasing
  std::vector<Rational> consecutive_gaps;
  std::optional<Subcontinuum> limit;
  std::optional<bool> limit_is_member;
  std::vector<Rational> distances_to_limit;
};

/// Recognizes constant sequences and monotone families whose trace endpoints
/// move geometrically (the nested-union/intersection pattern), extrapolates
/// the exact limit, and evaluates the non-cut predicate there. Unrecognized
/// sequences get the Cauchy diagnosis only.
inline LimitReport verify_limit(const std::vector<Subcontinuum>& seq) {
  if (seq.empty()) throw input_error("verify_limit needs a nonempty sequence");
  const GraphPtr& g = seq.front().graph();
  for (const auto& s : seq)
    if (s.graph() != g) throw input_error("sequence members on different graphs");
  LimitReport rep;
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    rep.consecutive_gaps.push_back(hausdorff_distance(seq[i], seq[i + 1]));
  rep.cauchy = true;
  for (size_t i = 0; i + 1 < rep.consecutive_gaps.size(); ++i)
    if (rep.consecutive_gaps[i + 1] > rep.consecutive_gaps[i]) rep.cauchy = false;

  auto finish = [&](Subcontinuum lim) {
    for (const auto& s : seq) rep.distances_to_limit.push_back(hausdorff_distance(s, lim));
    rep.limit_is_member = lim.is_noncut();
    rep.limit = std::move(lim);
  };

  bool constant = true;
  for (const auto& s : seq)
    if (!(s == seq.front())) constant = false;
  if (constant) {
    finish(seq.front());
    return rep;
  }

  // shape-constant check: identical node sets and per-edge interval counts
  for (const auto& s : seq) {
    if (s.nodes() != seq.front().nodes()) return rep;
    if (s.pointset().pieces().size() != seq.front().pointset().pieces().size()) return rep;
  }
  // collect endpoint sequences per (edge, piece index, side)
  struct Track {
    int edge;
    size_t piece;
    bool hi;
    std::vector<Rational> vals;
  };
  std::vector<Track> tracks;
  {
    const auto& first = seq.front().pointset().pieces();
    for (const auto& [e, v] : first) {
      for (size_t pi = 0; pi < v.size(); ++pi) {
        tracks.push_back({e, pi, false, {}});
        tracks.push_back({e, pi, true, {}});
      }
    }
  }
  for (const auto& s : seq) {
    const auto& pieces = s.pointset().pieces();
    for (auto& tr : tracks) {
      auto it = pieces.find(tr.edge);
      if (it == pieces.end() || it->second.size() <= tr.piece) return rep;
      const auto& p = it->second[tr.piece];
      tr.vals.push_back(tr.hi ? p.hi : p.lo);
    }
  }
  // piece counts must match across the sequence for the tracks to be aligned
  for (const auto& s : seq)
    for (const auto& [e, v] : s.pointset().pieces()) {
      auto it = seq.front().pointset().pieces().find(e);
      if (it == seq.front().pointset().pieces().end() || it->second.size() != v.size()) return rep;
    }

  PiecewiseSet lim_set(g);
  for (int n : seq.front().nodes()) lim_set.add_node_raw(n);
  std::map<std::pair<int, size_t>, std::pair<Rational, Rational>> lim_pieces;
  for (const auto& tr : tracks) {
    Rational lim_val;
    bool const_track = true;
    for (const auto& v : tr.vals)
      if (v != tr.vals.front()) const_track = false;
    if (const_track) {
      lim_val = tr.vals.front();
    } else {
      if (tr.vals.size() < 3) return rep;
      // geometric extrapolation: deltas with a constant ratio in (0,1)
      std::vector<Rational> deltas;
      for (size_t i = 0; i + 1 < tr.vals.size(); ++i) deltas.push_back(tr.vals[i + 1] - tr.vals[i]);
      for (const auto& d : deltas)
        if (d.is_zero()) return rep;
      Rational ratio = deltas[1] / deltas[0];
      if (!(ratio > Rational(0)) || !(ratio < Rational(1))) return rep;
      for (size_t i = 0; i + 1 < deltas.size(); ++i)
        if (deltas[i + 1] / deltas[i] != ratio) return rep;
      lim_val = tr.vals.back() + deltas.back() * ratio / (Rational(1) - ratio);
    }
    auto key = std::make_pair(tr.edge, tr.piece);
    if (!tr.hi)
      lim_pieces[key].first = lim_val;
    else
      lim_pieces[key].second = lim_val;
  }
  for (const auto& [key, lohi] : lim_pieces) {
    if (lohi.second < lohi.first) return rep;
    if (lohi.first < Rational(0) || lohi.second > Rational(1)) return rep;
    lim_set.add_raw(key.first, {lohi.first, lohi.second, true, true});
  }
  lim_set.canonicalize();
  try {
    finish(Subcontinuum::from_pointset(std::move(lim_set)));
  } catch (const input_error&) {
    // extrapolation produced a disconnected or empty set: no limit claim
  }
  return rep;
}

}  // namespace ncstar
