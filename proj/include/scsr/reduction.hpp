// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#pragma once

/**
 * @file reduction.hpp
 * @brief Reduction from classic superstring to superstring-with-reversals.
 *
 * Each string s of an m-string instance becomes h(g_m(s)), where g_k repeats
 * every symbol k times and h prefixes every symbol with two reserved
 * separators ("$#" by default). The separators make any overlap between a
 * transformed string and a reversed one at most a single symbol, while
 * overlaps between transformed strings scale by exactly 3k.
 */

#include <scsr/error.hpp>
#include <scsr/exact.hpp>
#include <scsr/strings.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scsr {

struct reserved_symbols {
  char first = '$';
  char second = '#';
};

struct reduction_instance {
  string_set originals;
  string_set transformed;
  std::size_t k = 0;
  reserved_symbols reserved;
};

inline std::string morphism_h(std::string_view s, reserved_symbols reserved = {})
{
  std::string out;
  out.reserve(3 * s.size());
  for (char c : s) {
    if (c == reserved.first || c == reserved.second) {
      throw reserved_symbol_error("reserved symbol occurs in \"" + std::string(s) + "\"");
    }
    out.push_back(reserved.first);
    out.push_back(reserved.second);
    out.push_back(c);
  }
  return out;
}

inline std::string morphism_g(std::string_view s, std::size_t k)
{
  if (k == 0) {
    throw precondition_error("morphism_g: repetition factor must be at least 1");
  }
  std::string out;
  out.reserve(k * s.size());
  for (char c : s) {
    out.append(k, c);
  }
  return out;
}

/// Picks '$' and '#' when both are absent from `s`, otherwise the two
/// smallest byte values that are.
inline reserved_symbols choose_reserved_symbols(string_set const& s)
{
  bool used[256] = {};
  for (auto const& u : s) {
    for (char c : u) {
      used[static_cast<unsigned char>(c)] = true;
    }
  }
  if (!used[static_cast<unsigned char>('$')] && !used[static_cast<unsigned char>('#')]) {
    return {};
  }
  std::vector<char> free;
  for (int b = 0; b < 256 && free.size() < 2; ++b) {
    if (!used[b]) {
      free.push_back(static_cast<char>(b));
    }
  }
  if (free.size() < 2) {
    throw reserved_symbol_error("input uses at least 255 distinct byte values");
  }
  return {free[0], free[1]};
}

inline reduction_instance build_reduction(
  string_set const& s, reserved_symbols reserved = {})
{
  if (reserved.first == reserved.second) {
    throw reserved_symbol_error("the two reserved symbols must differ");
  }
  reduction_instance out{s, {}, s.count(), reserved};
  std::vector<std::string> ys;
  ys.reserve(s.count());
  for (auto const& u : s) {
    ys.push_back(morphism_h(morphism_g(u, out.k), reserved));
  }
  out.transformed = string_set(std::move(ys));
  return out;
}

struct roundtrip_result {
  bool classic;     // a classic superstring of length <= ell exists
  bool reversals;   // a reversal superstring of the transformed set fits 3*m*ell
  std::size_t classic_length;
  std::size_t reversal_length;
  reduction_instance instance;
};

/// Decides both sides of the reduction with the exact oracles.
inline roundtrip_result check_reduction_roundtrip(
  string_set const& s, std::size_t ell, reserved_symbols reserved = {},
  std::size_t limit_m = default_limit_m)
{
  auto instance = build_reduction(s, reserved);
  auto const classic = exact_scs(s, limit_m).length();
  auto const with_reversals = exact_scsr(instance.transformed, limit_m).length();
  std::size_t const bound = 3 * instance.k * ell;
  return {classic <= ell, with_reversals <= bound, classic, with_reversals,
          std::move(instance)};
}

} // namespace scsr
