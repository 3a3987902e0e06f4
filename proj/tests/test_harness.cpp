// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "oracles.hpp"

#include <scsr/harness.hpp>

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace scsr;

namespace {

string_set parse(std::string const& text, input_format f = input_format::lines)
{
  std::istringstream in(text);
  return ingest(in, f);
}

} // namespace

TEST_CASE("ingest lines", "[harness]")
{
  auto const s = parse("aabb\naaac\nabbb\n");
  CHECK(s.count() == 3);
  CHECK(s.total_length() == 12);
  CHECK(parse("a\r\n\r\n\nb\na").members() == std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(parse("\n\n"), ingest_error);
}

TEST_CASE("ingest fasta", "[harness]")
{
  CHECK(parse(">r1\naab\nb\n>r2\naaac\n", input_format::fasta).members()
        == std::vector<std::string>{"aabb", "aaac"});
  try {
    parse(">r1\naab\n>r2\n\n>r3\nab\n", input_format::fasta);
    FAIL("expected an error");
  } catch (ingest_error const& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("r2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("aab\n>r1\nab\n", input_format::fasta), ingest_error);
  CHECK_THROWS_AS(parse(">r1\nab\n>r2", input_format::fasta), ingest_error);
  CHECK_THROWS_AS(ingest_path("/nonexistent/file", input_format::lines), ingest_error);
}

TEST_CASE("solve reports stats", "[harness]")
{
  solve_options opts;
  opts.exact = true;
  opts.stats = true;
  std::ostringstream out, err;
  REQUIRE(cmd_solve(parse("aabb\naaac\nabbb\n"), opts, out, err) == exit_ok);
  auto const line = out.str();
  CHECK(line.size() == 8);  // 7 symbols and a newline
  auto const j = nlohmann::json::parse(err.str());
  CHECK(j["n"] == 12);
  CHECK(j["m"] == 3);
  CHECK(j["m_after_norm"] == 3);
  CHECK(j["k_g"] == 7);
  CHECK(j["greedy_overlap"] == 5);
  CHECK(j["opt_overlap"] == 5);
  CHECK(j["k_min"] == 7);
  CHECK(j["compression_ratio"] == 1.0);
  CHECK(j["engine"] == "linear");
  CHECK(j["policy"] == "canonical");
  CHECK(j["wall_time_ns"].is_number_integer());
  CHECK(j.size() == 11);
}

TEST_CASE("solve on the tight instance", "[harness]")
{
  solve_options opts;
  opts.exact = true;
  opts.stats = true;
  opts.policy.mode = tie_break::adversarial_first_pair;
  for (auto engine : {engine_kind::linear, engine_kind::naive}) {
    opts.engine = engine;
    std::ostringstream out, err;
    REQUIRE(cmd_solve(parse("abbb\nbbbc\nbbbb\n"), opts, out, err) == exit_ok);
    auto const j = nlohmann::json::parse(err.str());
    CHECK(j["compression_ratio"] == 0.5);
    CHECK(j["greedy_overlap"] == 3);
    CHECK(j["opt_overlap"] == 6);
    CHECK(j["engine"] == std::string(to_string(engine)));
  }
}

TEST_CASE("solve without the oracle reports nulls", "[harness]")
{
  solve_options opts;
  opts.stats = true;
  std::ostringstream out, err;
  REQUIRE(cmd_solve(parse("xyz\n"), opts, out, err) == exit_ok);
  CHECK(out.str() == "xyz\n");
  auto const j = nlohmann::json::parse(err.str());
  CHECK(j["opt_overlap"].is_null());
  CHECK(j["k_min"].is_null());
  CHECK(j["compression_ratio"].is_null());
  CHECK(j["greedy_overlap"] == 0);
}

TEST_CASE("oracle over the limit is a warning", "[harness]")
{
  solve_options opts;
  opts.exact = true;
  opts.stats = true;
  opts.limit_m = 2;
  std::ostringstream out, err;
  REQUIRE(cmd_solve(parse("aabb\naaac\nabbb\n"), opts, out, err) == exit_ok);
  auto const text = err.str();
  CHECK(text.find("warning") != std::string::npos);
  auto const j = nlohmann::json::parse(text.substr(text.find('{')));
  CHECK(j["k_min"].is_null());
}

TEST_CASE("explain and dot output", "[harness]")
{
  solve_options opts;
  opts.explain = true;
  auto const path = (std::filesystem::temp_directory_path() / "scsr_test_paths.dot").string();
  opts.dot_path = path;
  std::ostringstream out, err;
  REQUIRE(cmd_solve(parse("ab\naaa\naab\nbaa\n"), opts, out, err) == exit_ok);
  CHECK(err.str().find("dropped \"ab\"") != std::string::npos);
  CHECK(err.str().find("dropped \"baa\": represented by its reversal") != std::string::npos);
  std::ifstream dot(path);
  std::string first;
  std::getline(dot, first);
  CHECK(first == "digraph paths {");
  std::remove(path.c_str());
}

TEST_CASE("gen", "[harness]")
{
  instance_spec spec;
  spec.family = instance_family::tight;
  spec.h = 3;
  std::ostringstream out;
  REQUIRE(cmd_gen(spec, out) == exit_ok);
  CHECK(out.str() == "abbb\nbbbc\nbbbb\n");

  instance_spec r;
  r.seed = 7;
  std::ostringstream a, b;
  cmd_gen(r, a);
  cmd_gen(r, b);
  CHECK(a.str() == b.str());
  CHECK_FALSE(a.str().empty());

  instance_spec sh;
  sh.family = instance_family::shredded;
  sh.flip_probability = 0.5;
  auto const genome = shredded_genome(sh);
  std::size_t flipped = 0;
  for (auto const& f : generate_instance(sh)) {
    REQUIRE(oracle::contains_r(genome, f));
    flipped += oracle::contains(genome, f) ? 0 : 1;
  }
  CHECK(flipped > 0);

  spec.h = 0;
  CHECK_THROWS_AS(generate_instance(spec), usage_error);
  r.min_length = 0;
  CHECK_THROWS_AS(generate_instance(r), usage_error);
}

TEST_CASE("bench", "[harness]")
{
  bench_options opts;
  opts.sizes = {2000, 4000};
  auto const rows = run_bench(opts);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 2000);
  CHECK(rows[1].n == 4000);
  CHECK(run_bench(opts)[1].k_g == rows[1].k_g);

  opts.sizes = {3000};
  std::ostringstream out;
  REQUIRE(cmd_bench(opts, out) == exit_ok);
  auto const text = out.str();
  CHECK(text.rfind("n\tm\twall_time_ns\tk_g\tgreedy_overlap\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);

  opts.raw = true;
  std::ostringstream raw;
  cmd_bench(opts, raw);
  auto const raw_text = raw.str();
  CHECK(std::count(raw_text.begin(), raw_text.end(), '\n') == 4);

  opts.sizes = {4000, 2000};
  CHECK_THROWS_AS(cmd_bench(opts, out), usage_error);
}

TEST_CASE("reduce", "[harness]")
{
  std::ostringstream out, err;
  CHECK(cmd_reduce(parse("ab\nba\n"), 3, default_limit_m, out, err) == exit_ok);
  CHECK(out.str().find("classic\ttrue") != std::string::npos);
  CHECK(out.str().find("reversals\ttrue") != std::string::npos);
  CHECK(out.str().find("$#a$#a$#b$#b") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cmd_reduce(parse("ab\nba\n"), 2, default_limit_m, out2, err2) == exit_ok);
  CHECK(out2.str().find("classic\tfalse") != std::string::npos);
  CHECK(out2.str().find("reversals\tfalse") != std::string::npos);

  std::ostringstream out3, err3;
  CHECK(cmd_reduce(parse("ab\nba\nca\n"), 5, 2, out3, err3) == exit_usage);
  CHECK(err3.str().find("limit") != std::string::npos);

  std::ostringstream out4, err4;
  CHECK(cmd_reduce(parse("a$\n"), 2, default_limit_m, out4, err4) == exit_ok);
  CHECK(out4.str().find("\\x00\\x01a") != std::string::npos);
}

TEST_CASE("escape_bytes", "[harness]")
{
  CHECK(escape_bytes("a$#") == "a$#");
  CHECK(escape_bytes(std::string("\0\x7f\\", 3)) == "\\x00\\x7f\\x5c");
}
