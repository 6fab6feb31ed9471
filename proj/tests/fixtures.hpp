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

#include "ncstar/metric_graph.hpp"

namespace fixtures {

using ncstar::GraphPtr;
using ncstar::MetricGraph;
using ncstar::Rational;

/// Single unit edge v0 -- v1.
inline GraphPtr arc() {
  return MetricGraph::create({"v0", "v1"}, {{"e", "v0", "v1", Rational(1)}});
}

/// One self-loop of length 4 at v0.
inline GraphPtr circle() {
  return MetricGraph::create({"v0"}, {{"loop", "v0", "v0", Rational(4)}});
}

/// Three unit legs meeting at r; legs oriented from the endpoints into r.
inline GraphPtr triod() {
  return MetricGraph::create({"r", "e1", "e2", "e3"},
                             {{"leg1", "e1", "r", Rational(1)},
                              {"leg2", "e2", "r", Rational(1)},
                              {"leg3", "e3", "r", Rational(1)}});
}

/// Loop of length 4 at v plus a unit hair v -- e.
inline GraphPtr lollipop() {
  return MetricGraph::create({"v", "e"},
                             {{"loop", "v", "v", Rational(4)}, {"hair", "e", "v", Rational(1)}});
}

/// Two nodes joined by three parallel unit edges.
inline GraphPtr theta() {
  return MetricGraph::create({"p", "q"},
                             {{"a", "p", "q", Rational(1)},
                              {"b", "p", "q", Rational(1)},
                              {"c", "p", "q", Rational(1)}});
}

/// Two unit loops at one node.
inline GraphPtr figure_eight() {
  return MetricGraph::create({"v"},
                             {{"loop1", "v", "v", Rational(1)}, {"loop2", "v", "v", Rational(1)}});
}

/// Two loops of length 4 joined by a unit bridge.
inline GraphPtr dumbbell() {
  return MetricGraph::create({"u", "v"},
                             {{"loop1", "u", "u", Rational(4)},
                              {"bridge", "u", "v", Rational(1)},
                              {"loop2", "v", "v", Rational(4)}});
}

/// Two ramification nodes joined by a unit internal edge, two unit hairs each.
inline GraphPtr h_tree() {
  return MetricGraph::create({"l", "r", "e1", "e2", "e3", "e4"},
                             {{"h1", "e1", "l", Rational(1)},
                              {"h2", "e2", "l", Rational(1)},
                              {"mid", "l", "r", Rational(1)},
                              {"h3", "e3", "r", Rational(1)},
                              {"h4", "e4", "r", Rational(1)}});
}

/// Five unit legs at one center (m = 1, n = 5).
inline GraphPtr star5() {
  std::vector<MetricGraph::EdgeSpec> es;
  std::vector<std::string> nodes{"c"};
  for (int i = 1; i <= 5; ++i) {
    nodes.push_back("e" + std::to_string(i));
    es.push_back({"leg" + std::to_string(i), "e" + std::to_string(i), "c", Rational(1)});
  }
  return MetricGraph::create(nodes, es);
}

/// Path v1 - v2 - v3 of unit internal edges with hairs: two at v1, one at v2,
/// two at v3 (m = 3 ramification points, n = 5 endpoints).
inline GraphPtr caterpillar() {
  return MetricGraph::create(
      {"v1", "v2", "v3", "e1", "e2", "e3", "e4", "e5"},
      {{"h1", "e1", "v1", Rational(1)},
       {"h2", "e2", "v1", Rational(1)},
       {"i1", "v1", "v2", Rational(1)},
       {"h3", "e3", "v2", Rational(1)},
       {"i2", "v2", "v3", Rational(1)},
       {"h4", "e4", "v3", Rational(1)},
       {"h5", "e5", "v3", Rational(1)}});
}

}  // namespace fixtures
