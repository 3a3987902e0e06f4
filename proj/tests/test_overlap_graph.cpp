// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "oracles.hpp"

#include <scsr/overlap_graph.hpp>

#include <catch_amalgamated.hpp>

#include <random>

using namespace scsr;

TEST_CASE("overlap graph vertices and weights", "[overlap_graph]")
{
  overlap_graph const g(string_set{"aaa", "aab"});
  CHECK(g.vertex_count() == 4);
  CHECK(g.str(0) == "aaa");
  CHECK(g.str(1) == "aaa");
  CHECK(g.str(2) == "aab");
  CHECK(g.str(3) == "baa");
  CHECK(g.weight(2, 0) == 0);
  CHECK(g.weight(0, 2) == 2);
  CHECK(mate(2) == 3);
  CHECK(mate(mate(2)) == 2);
  CHECK(overlap_graph::label(3) == "1R");

  overlap_graph const h(string_set{"abb"});
  CHECK(h.weight(0, 1) == oracle::overlap("abb", "bba"));
  CHECK(h.weight(0, 1) == 2);
}

TEST_CASE("reversed arcs keep their weight", "[overlap_graph][property]")
{
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::string> xs;
    for (int j = 0; j < 4; ++j) {
      xs.push_back(oracle::random_string(rng, 2, 1, 6));
    }
    overlap_graph const g{string_set(xs)};
    for (vertex_id a = 0; a < g.vertex_count(); ++a) {
      for (vertex_id b = 0; b < g.vertex_count(); ++b) {
        auto const e = g.make_arc(a, b);
        auto const r = reversed(e);
        REQUIRE(g.weight(r.from, r.to) == e.weight);
        REQUIRE(reversed(r) == e);
      }
    }
  }
}

TEST_CASE("can_add", "[overlap_graph]")
{
  path_collection pc(6);
  CHECK(pc.can_add({0, 2, 0}));
  CHECK_FALSE(pc.can_add({0, 1, 0}));
  CHECK_FALSE(pc.can_add({0, 0, 0}));
  pc.add_arc_pair({0, 2, 1});
  CHECK_FALSE(pc.can_add({2, 0, 1}));
  CHECK_FALSE(pc.can_add({0, 4, 0}));  // 0 already has a successor
  CHECK(pc.can_add({2, 4, 0}));
  CHECK_THROWS_AS(pc.add_arc_pair({2, 0, 1}), precondition_error);
}

TEST_CASE("add_arc_pair keeps paths paired", "[overlap_graph]")
{
  overlap_graph const g(string_set{"aabb", "abbb", "aaac"});
  // aaac reversed is caaa (vertex 5); aabb is 0, abbb is 2.
  path_collection pc(g.vertex_count());
  pc.add_arc_pair(g.make_arc(0, 2));
  CHECK(pc.involution_closed());
  CHECK(path_string(g, pc, 0) == "aabbb");
  CHECK(path_string(g, pc, 3) == "bbbaa");
  CHECK(path_string(g, pc, 3) == reverse(path_string(g, pc, 0)));

  pc.add_arc_pair(g.make_arc(5, 0));
  CHECK(path_string(g, pc, 5) == "caaabbb");
  CHECK(path_overlap(pc, 5) == 5);
  CHECK(is_semi_hamiltonian(g, pc, 5));
  auto const starts = pc.path_starts();
  CHECK(starts.size() == 2);
  CHECK(pc.arc_count() == 4);
  CHECK_THROWS_AS(path_string(g, pc, 0), precondition_error);

  auto const dot = to_dot(g, pc);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("v5 -> v0 [label=\"2\"]") != std::string::npos);
  CHECK(dot.find("label=\"2R\"") != std::string::npos);
}

TEST_CASE("path_string examples", "[overlap_graph]")
{
  overlap_graph const g(string_set{"aabbb", "aaac"});
  path_collection pc(g.vertex_count());
  CHECK(path_string(g, pc, 0) == "aabbb");
  CHECK(path_overlap(pc, 0) == 0);
  pc.add_arc_pair(g.make_arc(3, 0));
  CHECK(path_string(g, pc, 3) == "caaabbb");
  CHECK(path_overlap(pc, 3) == 2);
}

TEST_CASE("random insertions keep the path structure", "[overlap_graph][property]")
{
  std::mt19937_64 rng(42);
  for (int round = 0; round < 300; ++round) {
    std::size_t const m = 2 + rng() % 6;
    std::vector<std::string> xs;
    while (xs.size() < m) {
      auto s = oracle::random_string(rng, 3, 2, 5);
      if (std::find(xs.begin(), xs.end(), s) == xs.end()
          && std::find(xs.begin(), xs.end(), oracle::rev(s)) == xs.end()
          && s != oracle::rev(s)) {
        xs.push_back(s);
      }
    }
    overlap_graph const g{string_set(xs)};
    path_collection pc(g.vertex_count());
    std::size_t added = 0;
    for (int tries = 0; tries < 200 && added + 1 < m; ++tries) {
      arc const e = g.make_arc(
        static_cast<vertex_id>(rng() % g.vertex_count()),
        static_cast<vertex_id>(rng() % g.vertex_count()));
      if (pc.can_add(e)) {
        pc.add_arc_pair(e);
        ++added;
        REQUIRE(pc.involution_closed());
      }
    }
    for (auto s : pc.path_starts()) {
      auto const path = pc.path(s);
      auto const str = path_string(g, pc, s);
      std::size_t len = 0;
      for (auto v : path) {
        REQUIRE(oracle::contains(str, g.str(v)));
        len += g.str(v).size();
      }
      REQUIRE(str.size() == len - path_overlap(pc, s));
      REQUIRE(pc.other_end(s) == path.back());
    }
    if (added + 1 == m) {
      REQUIRE(pc.path_starts().size() == 2);
      for (auto s : pc.path_starts()) {
        REQUIRE(is_semi_hamiltonian(g, pc, s));
      }
    }
  }
}
