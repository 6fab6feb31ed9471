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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "ncstar/graph_ncstar.hpp"
#include "ncstar/hyperspace_oracle.hpp"
#include "ncstar/tree_ncstar.hpp"

using namespace ncstar;

TEST_CASE("grid enumeration counts: frozen desk values") {
  // unit arc at k=4: all [i/4, j/4] with 0 <= i <= j <= 4
  auto arc = enumerate_grid_subcontinua(fixtures::arc(), 4);
  CHECK(arc.element_count == 15);
  // triod at k=1: 7 segment unions + 4 node singletons
  auto t3 = enumerate_grid_subcontinua(fixtures::triod(), 1);
  CHECK(t3.element_count == 11);
  // loop of length 4 at k=4: 12 proper arcs + whole + 4 singletons
  auto c = enumerate_grid_subcontinua(fixtures::circle(), 4);
  CHECK(c.element_count == 17);
}

TEST_CASE("enumeration is duplicate-free and matches the tree DP count") {
  for (auto g : {fixtures::triod(), fixtures::h_tree(), fixtures::star5()}) {
    auto sample = enumerate_grid_subcontinua(g, 2);
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& m : sample.segment_elements) CHECK(seen.insert(m.w).second);
    long long dp = detail::count_tree_edge_subgraphs(subdivide(g, 2).fine(),
                                                     kDefaultOracleBudget);
    CHECK(sample.element_count == dp);
  }
}

TEST_CASE("budget guard raises a resource error") {
  CHECK_THROWS_AS(enumerate_grid_subcontinua(fixtures::star5(), 8, 100), resource_error);
  CHECK_THROWS_AS(enumerate_grid_subcontinua(fixtures::theta(), 8, 10), resource_error);
}

TEST_CASE("member filter: frozen counts and the circle identity") {
  auto arc = sample_ncstar(fixtures::arc(), 4);
  CHECK(arc.member_count() == 9);

  auto c = sample_ncstar(fixtures::circle(), 4);
  CHECK(c.member_count() == c.element_count);  // NC* = C(X) on the circle

  auto c8 = sample_ncstar(fixtures::circle(), 8);
  CHECK(c8.member_count() == c8.element_count);
}

TEST_CASE("filter soundness: flags agree with the exact non-cut test on the base graph") {
  for (auto g : {fixtures::triod(), fixtures::lollipop(), fixtures::theta()}) {
    auto sample = enumerate_grid_subcontinua(g, 2);
    SubdivisionMap map = subdivide(g, 2);
    for (size_t i = 0; i < sample.segment_elements.size(); ++i) {
      auto sub = detail::mask_to_base(map, sample.segment_elements[i]);
      CHECK(sub.is_noncut() == (sample.segment_member[i] == 1));
    }
    for (size_t i = 0; i < sample.node_elements.size(); ++i) {
      auto sub = Subcontinuum::singleton(
          g, map.to_base(map.fine()->node_point(sample.node_elements[i])));
      CHECK(sub.is_noncut() == (sample.node_member[i] == 1));
    }
  }
}

TEST_CASE("cut-point fallback produces exactly the exhaustive member set") {
  for (auto g : {fixtures::triod(), fixtures::h_tree()}) {
    auto full = sample_ncstar(g, 2);
    REQUIRE(full.mode == EnumerationMode::Exhaustive);
    // force the fallback with a tiny budget
    auto fast = sample_ncstar(g, 2, 5);
    REQUIRE(fast.mode == EnumerationMode::CutPoint);
    REQUIRE(full.member_count() == fast.member_count());
    auto contains = [](const std::vector<Subcontinuum>& v, const Subcontinuum& s) {
      for (const auto& x : v)
        if (x == s) return true;
      return false;
    };
    for (const auto& m : fast.members) CHECK(contains(full.members, m));
    for (const auto& m : full.members) CHECK(contains(fast.members, m));
  }
}

TEST_CASE("tree members match the classification clause by clause") {
  for (auto g : {fixtures::triod(), fixtures::h_tree()}) {
    auto en = enumerate_ncstar(g);
    for (int k : {2, 4}) {
      auto sample = sample_ncstar(g, k);
      // soundness: every member matches exactly one clause
      for (const auto& m : sample.members) {
        auto id = classify_member(en, m);
        REQUIRE(id.has_value());
        // round-trip: the identified clause re-instantiates to the member
        if (id->clause == MemberId::Clause::Family)
          CHECK(instantiate_family(en, id->family, id->param) == m);
      }
      // completeness: every grid clause instance appears among the members
      auto member_present = [&](const Subcontinuum& s) {
        for (const auto& m : sample.members)
          if (m == s) return true;
        return false;
      };
      CHECK(member_present(Subcontinuum::whole(g)));
      for (int e : en.endpoint_nodes)
        CHECK(member_present(Subcontinuum::singleton(g, g->node_point(e))));
      for (int fi = 0; fi < (int)en.families.size(); ++fi) {
        const auto& f = en.families[fi];
        const auto& te = g->topological_edges()[f.topo_index];
        // grid parameters: arclength multiples of length/k per combinatorial edge
        int steps = (int)te.steps.size() * k;
        for (int j = 0; j <= steps; ++j) {
          Rational t = te.length * Rational(j, steps);
          if (!f.in_domain(t)) continue;
          CHECK(member_present(instantiate_family(en, fi, t)));
        }
      }
    }
  }
}

TEST_CASE("cluster components: arc is one cluster, triod four, h-tree seven") {
  auto arc = sample_ncstar(fixtures::arc(), 4);
  auto rep = cluster_components(arc, Rational(3, 10));
  CHECK(rep.cluster_count == 1);
  CHECK(rep.adequate);

  auto t3 = sample_ncstar(fixtures::triod(), 8);
  auto rep3 = cluster_components(t3, Rational(1, 4));
  CHECK(rep3.cluster_count == 4);
  CHECK(rep3.adequate);
  CHECK(rep3.max_intra_consecutive_gap < Rational(1, 4));
  CHECK(rep3.min_inter_cluster_gap > Rational(1, 4));

  auto h = sample_ncstar(fixtures::h_tree(), 8);
  auto reph = cluster_components(h, Rational(1, 4));
  CHECK(reph.cluster_count == 7);
  CHECK(reph.adequate);
}

TEST_CASE("inadequate resolution is reported, not hidden") {
  auto t3 = sample_ncstar(fixtures::triod(), 1);
  auto rep = cluster_components(t3, Rational(1, 4));
  // grid gaps at k=1 exceed eps; the report must reveal that
  CHECK(!rep.adequate);
}

TEST_CASE("verify_limit: hair sequence, constant sequence, unrecognized") {
  auto t3 = fixtures::triod();
  std::vector<Subcontinuum> seq;
  for (int n = 1; n <= 5; ++n) {
    Rational r_n = Rational(1) - Rational(1, 1 << n);
    seq.push_back(Subcontinuum::from_closed_intervals(t3, {{"leg1", {{Rational(0), r_n}}}}));
  }
  auto rep = verify_limit(seq);
  CHECK(rep.cauchy);
  REQUIRE(rep.limit.has_value());
  CHECK(*rep.limit ==
        Subcontinuum::from_closed_intervals(t3, {{"leg1", {{Rational(0), Rational(1)}}}}));
  REQUIRE(rep.limit_is_member.has_value());
  CHECK(!*rep.limit_is_member);  // [e1, r] is not a member
  for (size_t i = 0; i + 1 < rep.distances_to_limit.size(); ++i)
    CHECK(rep.distances_to_limit[i + 1] < rep.distances_to_limit[i]);

  auto con = verify_limit({seq[0], seq[0], seq[0]});
  CHECK(con.cauchy);
  REQUIRE(con.limit.has_value());
  CHECK(*con.limit == seq[0]);
  CHECK(*con.limit_is_member);

  // a zig-zag sequence gets a cauchy diagnosis but no limit claim
  auto zig = verify_limit({seq[0], seq[3], seq[1], seq[4]});
  CHECK(!zig.limit.has_value());
}

TEST_CASE("nested decreasing family: exact intersection limit") {
  // D_n = [1/2 + 1/2^{n+1}, 1] on the arc, shrinking to [1/2, 1]
  auto arc = fixtures::arc();
  std::vector<Subcontinuum> seq;
  for (int n = 1; n <= 5; ++n)
    seq.push_back(Subcontinuum::from_closed_intervals(
        arc, {{"e", {{Rational(1, 2) + Rational(1, 2 << n), Rational(1)}}}}));
  auto rep = verify_limit(seq);
  REQUIRE(rep.limit.has_value());
  CHECK(*rep.limit ==
        Subcontinuum::from_closed_intervals(arc, {{"e", {{Rational(1, 2), Rational(1)}}}}));
}

TEST_CASE("moving singletons on a loop extrapolate to the node limit") {
  auto lp = fixtures::lollipop();
  std::vector<Subcontinuum> seq;
  for (int n = 1; n <= 4; ++n)
    seq.push_back(Subcontinuum::singleton(lp, lp->edge_point("loop", Rational(1, 1 << (n + 1)))));
  auto rep = verify_limit(seq);
  REQUIRE(rep.limit.has_value());
  CHECK(*rep.limit == Subcontinuum::singleton(lp, lp->node_point("v")));
  CHECK(!*rep.limit_is_member);  // v cuts the lollipop
}

TEST_CASE("witness sequences are recognized by the limit analysis") {
  for (auto g : {fixtures::lollipop(), fixtures::triod()}) {
    auto ws = noncompact_witness(g, 5);
    auto rep = verify_limit(ws.members);
    REQUIRE(rep.limit.has_value());
    CHECK(*rep.limit == *ws.limit);
    CHECK(*rep.limit_is_member == ws.limit_is_member);
    CHECK(rep.cauchy);
  }
}
