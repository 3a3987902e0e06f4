// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "oracles.hpp"

#include <scsr/reduction.hpp>

#include <catch_amalgamated.hpp>

#include <random>

using namespace scsr;

TEST_CASE("morphism_h", "[reduction]")
{
  CHECK(morphism_h("ab") == "$#a$#b");
  CHECK(morphism_h("") == "");
  CHECK(morphism_h("a") == "$#a");
  CHECK(morphism_h("ab", {'\0', '\1'}) == std::string("\0\1a\0\1b", 6));
  CHECK_THROWS_AS(morphism_h("a$"), reserved_symbol_error);
}

TEST_CASE("morphism_g", "[reduction]")
{
  CHECK(morphism_g("ab", 2) == "aabb");
  CHECK(morphism_g("ab", 1) == "ab");
  CHECK(morphism_g("a", 3) == "aaa");
  CHECK_THROWS_AS(morphism_g("a", 0), precondition_error);
}

TEST_CASE("build_reduction", "[reduction]")
{
  auto const r = build_reduction(string_set{"ab", "ba"});
  CHECK(r.k == 2);
  CHECK(r.transformed.members()
        == std::vector<std::string>{"$#a$#a$#b$#b", "$#b$#b$#a$#a"});
  CHECK(build_reduction(string_set{"a"}).transformed.members()
        == std::vector<std::string>{"$#a"});
  CHECK_THROWS_AS(build_reduction(string_set{"a#"}), reserved_symbol_error);
  CHECK_THROWS_AS(build_reduction(string_set{"a"}, {'x', 'x'}), reserved_symbol_error);

  auto const big = build_reduction(string_set{"abc", "ca", "b"});
  for (std::size_t i = 0; i < big.originals.count(); ++i) {
    CHECK(big.transformed[i].size() == 3 * big.k * big.originals[i].size());
  }
}

TEST_CASE("reserved symbol selection", "[reduction]")
{
  auto const d = choose_reserved_symbols(string_set{"ab"});
  CHECK(d.first == '$');
  CHECK(d.second == '#');
  auto const e = choose_reserved_symbols(string_set{"a$"});
  CHECK(e.first == '\0');
  CHECK(e.second == '\1');
  auto const f = choose_reserved_symbols(string_set{std::string("\0a$", 3)});
  CHECK(f.first == '\1');
  CHECK(f.second == '\2');
}

TEST_CASE("separator and scaling properties", "[reduction][property]")
{
  std::mt19937_64 rng(71);
  for (int i = 0; i < 5000; ++i) {
    auto const u = oracle::random_string(rng, 3, 1, 6);
    auto const v = oracle::random_string(rng, 3, 1, 6);
    std::size_t const k = 1 + rng() % 4;
    REQUIRE(oracle::overlap(morphism_h(u), oracle::rev(morphism_h(v))) <= 1);
    auto const hu = morphism_h(morphism_g(u, k));
    auto const hv = morphism_h(morphism_g(v, k));
    REQUIRE(hu.size() == 3 * k * u.size());
    REQUIRE(oracle::overlap(hu, hv) == 3 * k * oracle::overlap(u, v));
  }
}

TEST_CASE("roundtrip examples", "[reduction]")
{
  auto const yes = check_reduction_roundtrip(string_set{"ab", "ba"}, 3);
  CHECK(yes.classic);
  CHECK(yes.reversals);
  CHECK(yes.classic_length == 3);

  auto const no = check_reduction_roundtrip(string_set{"ab", "ba"}, 2);
  CHECK_FALSE(no.classic);
  CHECK_FALSE(no.reversals);

  auto const one = check_reduction_roundtrip(string_set{"a"}, 1);
  CHECK(one.classic);
  CHECK(one.reversals);
}

TEST_CASE("roundtrip agrees on random instances", "[reduction][property]")
{
  std::mt19937_64 rng(72);
  for (int i = 0; i < 60; ++i) {
    auto const xs = oracle::random_set(rng, 1 + rng() % 4, 2 + i % 2, 1, 4);
    string_set const s(xs);
    auto const classic = oracle::shortest_superstring(xs, false);
    for (std::size_t ell = classic - 1; ell <= classic + 1; ++ell) {
      auto const r = check_reduction_roundtrip(s, ell);
      REQUIRE(r.classic == (classic <= ell));
      REQUIRE(r.classic == r.reversals);
    }
  }
}
