// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#pragma once

/**
 * @file instances.hpp
 * @brief Seeded instance generators.
 *
 *   random    independent uniform strings over the first `alphabet` letters
 *   tight     {a b^h, b^h c, b^(h+1)}, on which greedy can reach exactly half
 *             the optimal compression
 *   shredded  fragments of a random genome, each reversed with probability
 *             `flip_probability`
 */

#include <scsr/error.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace scsr {

enum class instance_family { random, tight, shredded };

struct instance_spec {
  instance_family family = instance_family::random;
  std::uint64_t seed = 1;

  std::size_t alphabet = 4;
  std::size_t count = 10;
  std::size_t min_length = 5;
  std::size_t max_length = 20;

  std::size_t h = 3;

  std::size_t genome_length = 1000;
  std::size_t fragment_length = 50;
  double coverage = 5.0;
  double flip_probability = 0.5;
};

/// The genome behind a shredded instance (same seed, same genome).
inline std::string shredded_genome(instance_spec const& spec)
{
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::size_t> symbol(0, spec.alphabet - 1);
  std::string genome(spec.genome_length, 'a');
  for (auto& c : genome) {
    c = static_cast<char>('a' + symbol(rng));
  }
  return genome;
}

inline std::vector<std::string> generate_instance(instance_spec const& spec)
{
  std::vector<std::string> out;
  switch (spec.family) {
  case instance_family::tight: {
    if (spec.h == 0) {
      throw usage_error("tight family needs h >= 1");
    }
    std::string const bh(spec.h, 'b');
    out = {"a" + bh, bh + "c", bh + "b"};
    break;
  }
  case instance_family::random: {
    if (spec.alphabet < 1 || spec.alphabet > 26) {
      throw usage_error("alphabet size must be in [1, 26]");
    }
    if (spec.min_length < 1 || spec.min_length > spec.max_length) {
      throw usage_error("need 1 <= min length <= max length");
    }
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::size_t> length(spec.min_length, spec.max_length);
    std::uniform_int_distribution<std::size_t> symbol(0, spec.alphabet - 1);
    for (std::size_t i = 0; i < spec.count; ++i) {
      std::string s(length(rng), 'a');
      for (auto& c : s) {
        c = static_cast<char>('a' + symbol(rng));
      }
      out.push_back(std::move(s));
    }
    break;
  }
  case instance_family::shredded: {
    if (spec.alphabet < 1 || spec.alphabet > 26) {
      throw usage_error("alphabet size must be in [1, 26]");
    }
    if (spec.fragment_length < 1 || spec.fragment_length > spec.genome_length) {
      throw usage_error("need 1 <= fragment length <= genome length");
    }
    if (!(spec.coverage > 0) || spec.flip_probability < 0 || spec.flip_probability > 1) {
      throw usage_error("coverage must be positive and flip probability in [0, 1]");
    }
    auto const genome = shredded_genome(spec);
    std::mt19937_64 rng(spec.seed ^ 0x5eed5eed5eed5eedULL);
    std::uniform_int_distribution<std::size_t> start(
      0, spec.genome_length - spec.fragment_length);
    std::bernoulli_distribution flip(spec.flip_probability);
    auto const fragments = static_cast<std::size_t>(std::ceil(
      spec.coverage * static_cast<double>(spec.genome_length)
      / static_cast<double>(spec.fragment_length)));
    for (std::size_t i = 0; i < fragments; ++i) {
      std::string f = genome.substr(start(rng), spec.fragment_length);
      if (flip(rng)) {
        f.assign(f.rbegin(), f.rend());
      }
      out.push_back(std::move(f));
    }
    break;
  }
  }
  return out;
}

/// Random strings with lengths in [min_length, max_length] and total length
/// exactly `total` (the last string is cut short if needed).
inline std::vector<std::string> random_instance_of_length(
  std::size_t total, std::uint64_t seed, std::size_t alphabet = 4,
  std::size_t min_length = 50, std::size_t max_length = 150)
{
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(min_length, max_length);
  std::uniform_int_distribution<std::size_t> symbol(0, alphabet - 1);
  std::vector<std::string> out;
  std::size_t used = 0;
  while (used < total) {
    std::string s(std::min(length(rng), total - used), 'a');
    for (auto& c : s) {
      c = static_cast<char>('a' + symbol(rng));
    }
    used += s.size();
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace scsr
