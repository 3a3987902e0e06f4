// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#pragma once

/**
 * @file harness.hpp
 * @brief Input parsing, run statistics and the command implementations
 *        behind the `scsr` tool.
 *
 * Commands write their primary output to `out` and diagnostics to `err` and
 * return the process exit status: 0 on success, 1 when a result fails its
 * own consistency checks, 2 for usage and size-limit errors.
 */

#include <scsr/error.hpp>
#include <scsr/exact.hpp>
#include <scsr/greedy.hpp>
#include <scsr/instances.hpp>
#include <scsr/overlap_graph.hpp>
#include <scsr/reduction.hpp>
#include <scsr/strings.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scsr {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invariant = 1;
inline constexpr int exit_usage = 2;

enum class input_format { lines, fasta };

inline std::optional<input_format> parse_input_format(std::string_view name)
{
  if (name == "lines") {
    return input_format::lines;
  }
  if (name == "fasta") {
    return input_format::fasta;
  }
  return std::nullopt;
}

enum class engine_kind { linear, naive };

inline std::string_view to_string(engine_kind e)
{
  return e == engine_kind::linear ? "linear" : "naive";
}

inline std::optional<engine_kind> parse_engine(std::string_view name)
{
  if (name == "linear") {
    return engine_kind::linear;
  }
  if (name == "naive") {
    return engine_kind::naive;
  }
  return std::nullopt;
}

/// Reads a string set.
///
/// lines: one string per line, blank lines skipped.
/// fasta: '>' header lines start records whose sequence lines are joined;
///        a record without sequence is an error.
/// A trailing '\r' is stripped from every line. Duplicates are dropped.
inline string_set ingest(std::istream& in, input_format format)
{
  std::vector<std::string> strings;
  std::string line;
  std::size_t line_no = 0;

  std::optional<std::string> header;
  std::size_t header_line = 0;
  std::string sequence;
  auto close_record = [&] {
    if (!header) {
      return;
    }
    if (sequence.empty()) {
      throw ingest_error("empty FASTA record \"" + *header + "\"", header_line);
    }
    strings.push_back(std::move(sequence));
    sequence.clear();
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (format == input_format::lines) {
      if (!line.empty()) {
        strings.push_back(line);
      }
      continue;
    }
    if (!line.empty() && line.front() == '>') {
      close_record();
      header = line.substr(1);
      header_line = line_no;
    } else if (!line.empty()) {
      if (!header) {
        throw ingest_error("sequence data before the first FASTA header", line_no);
      }
      sequence += line;
    }
  }
  if (in.bad()) {
    throw ingest_error("read failure", line_no);
  }
  if (format == input_format::fasta) {
    close_record();
  }
  if (strings.empty()) {
    throw ingest_error("input contains no strings", 0);
  }
  return string_set(std::move(strings));
}

/// Reads `path`, or standard input when `path` is empty or "-".
inline string_set ingest_path(std::string const& path, input_format format)
{
  if (path.empty() || path == "-") {
    return ingest(std::cin, format);
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw ingest_error("cannot read \"" + path + "\"", 0);
  }
  return ingest(file, format);
}

struct run_stats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t m_after_norm = 0;
  std::size_t n_after_norm = 0;
  std::size_t k_g = 0;
  std::size_t greedy_overlap = 0;
  std::optional<std::size_t> opt_overlap;
  std::optional<std::size_t> k_min;
  std::optional<double> compression_ratio;
  std::int64_t wall_time_ns = 0;
  engine_kind engine = engine_kind::linear;
  tie_break_policy policy;

  nlohmann::json to_json() const
  {
    auto optional = [](auto const& v) -> nlohmann::json {
      return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    return {
      {"n", n},
      {"m", m},
      {"m_after_norm", m_after_norm},
      {"k_g", k_g},
      {"greedy_overlap", greedy_overlap},
      {"opt_overlap", optional(opt_overlap)},
      {"k_min", optional(k_min)},
      {"compression_ratio", optional(compression_ratio)},
      {"wall_time_ns", wall_time_ns},
      {"engine", std::string(to_string(engine))},
      {"policy", std::string(to_string(policy.mode))},
    };
  }
};

/// Greedy compression over optimal compression. 1 when neither compresses.
inline double compression_ratio(std::size_t greedy_overlap, std::size_t opt_overlap)
{
  if (opt_overlap == 0) {
    return 1.0;
  }
  return static_cast<double>(greedy_overlap) / static_cast<double>(opt_overlap);
}

inline greedy_trace run_engine(
  engine_kind engine, string_set const& s, tie_break_policy const& policy)
{
  return engine == engine_kind::linear ? greedy_r_linear(s, policy)
                                       : greedy_r_naive(s, policy);
}

struct solve_options {
  engine_kind engine = engine_kind::linear;
  tie_break_policy policy;
  bool exact = false;
  bool stats = false;
  bool explain = false;
  std::size_t limit_m = default_limit_m;
  std::optional<std::string> dot_path;
};

struct solve_outcome {
  greedy_trace trace;
  run_stats stats;
};

/// Runs the chosen engine (and optionally the exact oracle) and fills stats.
inline solve_outcome solve(
  string_set const& s, solve_options const& options, std::ostream& err)
{
  solve_outcome r;
  auto const start = std::chrono::steady_clock::now();
  r.trace = run_engine(options.engine, s, options.policy);
  auto const stop = std::chrono::steady_clock::now();

  auto& st = r.stats;
  st.n = s.total_length();
  st.m = s.count();
  st.m_after_norm = r.trace.kept.count();
  st.n_after_norm = r.trace.normalized_length();
  st.k_g = r.trace.final.size();
  st.greedy_overlap = r.trace.total_overlap;
  st.wall_time_ns =
    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
  st.engine = options.engine;
  st.policy = options.policy;

  if (options.exact) {
    try {
      auto const opt = exact_scsr(s, options.limit_m);
      st.opt_overlap = opt.opt_overlap;
      st.k_min = opt.length();
      st.compression_ratio = compression_ratio(st.greedy_overlap, opt.opt_overlap);
    } catch (size_limit_error const& e) {
      err << "warning: exact oracle skipped: " << e.what() << '\n';
    }
  }
  return r;
}

inline int cmd_solve(
  string_set const& s, solve_options const& options, std::ostream& out,
  std::ostream& err)
{
  auto const [trace, stats] = solve(s, options, err);

  if (options.explain) {
    for (auto const& d : make_reverse_factor_free(s).dropped) {
      err << "dropped \"" << d.value << "\": " << d.reason << '\n';
    }
  }

  out << trace.final << '\n';
  if (options.stats) {
    err << stats.to_json().dump() << '\n';
  }
  if (options.dot_path) {
    overlap_graph const g(trace.kept);
    path_collection pc(g.vertex_count());
    for (std::size_t i = 0; i < trace.arcs.size(); i += 2) {
      pc.add_arc_pair(trace.arcs[i]);
    }
    std::ofstream dot(*options.dot_path);
    if (!dot) {
      err << "error: cannot write \"" << *options.dot_path << "\"\n";
      return exit_usage;
    }
    dot << to_dot(g, pc);
  }

  if (stats.k_g != stats.n_after_norm - stats.greedy_overlap) {
    err << "error: output length does not match the reported overlap\n";
    return exit_invariant;
  }
  if (!verify_superstring_r(trace.final, s)) {
    err << "error: output is not a superstring with reversals of the input\n";
    return exit_invariant;
  }
  if (stats.compression_ratio && *stats.compression_ratio < 0.5) {
    err << "error: compression ratio below one half\n";
    return exit_invariant;
  }
  return exit_ok;
}

inline int cmd_gen(instance_spec const& spec, std::ostream& out)
{
  for (auto const& s : generate_instance(spec)) {
    out << s << '\n';
  }
  return exit_ok;
}

struct bench_options {
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 1;
  std::size_t repeats = 3;
  bool raw = false;
};

struct bench_row {
  std::size_t n;
  std::size_t m;
  std::int64_t wall_time_ns;
  std::size_t k_g;
  std::size_t greedy_overlap;
  std::size_t run;  // 0 for medians
};

/// Times the linear engine on one random instance per size; one median row
/// per size, plus every individual run in `raw` when requested.
inline std::vector<bench_row> run_bench(
  bench_options const& options, std::vector<bench_row>* raw = nullptr)
{
  std::vector<bench_row> medians;
  for (std::size_t i = 0; i < options.sizes.size(); ++i) {
    auto const size = options.sizes[i];
    string_set const s(random_instance_of_length(
      size, detail::mix64(options.seed) ^ detail::mix64(size)));
    std::vector<bench_row> runs;
    for (std::size_t r = 0; r < std::max<std::size_t>(options.repeats, 1); ++r) {
      auto const start = std::chrono::steady_clock::now();
      auto const trace = greedy_r_linear(s);
      auto const stop = std::chrono::steady_clock::now();
      runs.push_back(
        {s.total_length(), s.count(),
         std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count(),
         trace.final.size(), trace.total_overlap, r + 1});
    }
    if (raw) {
      raw->insert(raw->end(), runs.begin(), runs.end());
    }
    std::sort(runs.begin(), runs.end(), [](auto const& a, auto const& b) {
      return a.wall_time_ns < b.wall_time_ns;
    });
    auto median = runs[runs.size() / 2];
    median.run = 0;
    medians.push_back(median);
  }
  return medians;
}

inline int cmd_bench(bench_options const& options, std::ostream& out)
{
  if (!std::is_sorted(options.sizes.begin(), options.sizes.end())) {
    throw usage_error("benchmark sizes must be ascending");
  }
  std::vector<bench_row> raw;
  auto const rows = run_bench(options, options.raw ? &raw : nullptr);
  auto emit = [&](bench_row const& r, bool with_run) {
    out << r.n << '\t' << r.m << '\t' << r.wall_time_ns << '\t' << r.k_g << '\t'
        << r.greedy_overlap;
    if (with_run) {
      out << '\t' << r.run;
    }
    out << '\n';
  };
  if (options.raw) {
    out << "n\tm\twall_time_ns\tk_g\tgreedy_overlap\trun\n";
    for (auto const& r : raw) {
      emit(r, true);
    }
  } else {
    out << "n\tm\twall_time_ns\tk_g\tgreedy_overlap\n";
    for (auto const& r : rows) {
      emit(r, false);
    }
  }
  return exit_ok;
}

/// Printable form of a byte string: non-printable bytes become \xHH.
inline std::string escape_bytes(std::string_view s)
{
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (char ch : s) {
    auto const b = static_cast<unsigned char>(ch);
    if (b >= 0x20 && b < 0x7f && b != '\\') {
      out.push_back(ch);
    } else {
      out += "\\x";
      out.push_back(hex[b >> 4]);
      out.push_back(hex[b & 15]);
    }
  }
  return out;
}

inline int cmd_reduce(
  string_set const& s, std::size_t ell, std::size_t limit_m, std::ostream& out,
  std::ostream& err)
{
  if (s.count() > limit_m) {
    err << "error: " << size_limit_error(s.count(), limit_m).what() << '\n';
    return exit_usage;
  }
  roundtrip_result r;
  try {
    r = check_reduction_roundtrip(s, ell, choose_reserved_symbols(s), limit_m);
  } catch (size_limit_error const& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  auto const& inst = r.instance;
  out << "# k=" << inst.k << " reserved=" << escape_bytes({&inst.reserved.first, 1})
      << escape_bytes({&inst.reserved.second, 1}) << " ell=" << ell
      << " bound=" << 3 * inst.k * ell << '\n';
  for (auto const& y : inst.transformed) {
    out << escape_bytes(y) << '\n';
  }
  auto yes = [](bool b) { return b ? "true" : "false"; };
  out << "classic\t" << yes(r.classic) << "\tshortest=" << r.classic_length << '\n';
  out << "reversals\t" << yes(r.reversals) << "\tshortest=" << r.reversal_length
      << '\n';
  if (r.classic != r.reversals) {
    err << "error: the two decisions disagree\n";
    return exit_invariant;
  }
  return exit_ok;
}

} // namespace scsr
