// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#pragma once

#include <scsr/aho_corasick.hpp>
#include <scsr/strings.hpp>

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace scsr {

/// Why an input string did not survive normalization.
struct dropped_string {
  std::string value;
  std::string reason;
};

/// Reverse-factor-free representatives of an input set.
///
/// Every kept string u satisfies u <= reverse(u), kept strings are sorted
/// lexicographically, and every input string is a factor of some kept string
/// or of its reversal.
struct normalized_input {
  string_set kept;
  std::vector<dropped_string> dropped;
  std::vector<std::string> palindromes;
};

namespace detail {

// For each member: index of a member it is a proper factor of, or npos.
// `a` must be the automaton built over `x`.
inline std::vector<std::size_t> find_containers(string_set const& x, automaton const& a)
{
  constexpr auto npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> container(x.count(), npos);
  std::vector<std::size_t> member_at(a.state_count(), npos);
  for (std::size_t i = 0; i < x.count(); ++i) {
    member_at[a.terminal_of(i)] = i;
  }

  // below[q]: some member whose string has the string of q as a prefix,
  // proper unless q is a leaf. Children have larger ids than their parent.
  std::vector<std::size_t> below(a.state_count(), npos);
  for (auto q = static_cast<automaton::state_id>(a.state_count()); q-- > 1;) {
    if (below[q] == npos) {
      below[q] = member_at[q];
    }
    if (below[a.parent(q)] == npos) {
      below[a.parent(q)] = below[q];
    }
  }

  // A member is a proper factor of another iff it is a proper prefix of one
  // (its terminal state has children) or a proper suffix of some state's
  // string (it is that state's output link).
  auto mark = [&](std::size_t member, std::size_t by) {
    if (container[member] == npos) {
      container[member] = by;
    }
  };
  for (automaton::state_id q = 1; q < a.state_count(); ++q) {
    if (member_at[q] != npos && below[q] != member_at[q]) {
      mark(member_at[q], below[q]);
    }
    if (auto const hit = a.output_link(q); hit != automaton::none) {
      mark(member_at[hit], below[q]);
    }
  }
  return container;
}

inline std::vector<std::size_t> find_containers(string_set const& x)
{
  if (x.empty()) {
    return {};
  }
  return find_containers(x, automaton(x));
}

} // namespace detail

/// Removes every member that is a proper factor of another member.
/// Survivors keep their relative order.
inline string_set make_factor_free(string_set const& x)
{
  auto const container = detail::find_containers(x);
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < x.count(); ++i) {
    if (container[i] == static_cast<std::size_t>(-1)) {
      kept.push_back(x[i]);
    }
  }
  return string_set(std::move(kept));
}

namespace detail {

// Normalization together with the automaton built on the way. Its patterns
// are the reversal closure of the input, which contains every kept string
// and every kept string's reversal.
struct normalization {
  normalized_input result;
  automaton closure_automaton;
};

inline normalization normalize(string_set const& s)
{
  std::vector<std::string> closure;
  closure.reserve(2 * s.count());
  for (auto const& u : s) {
    closure.push_back(u);
    closure.push_back(reverse(u));
  }
  string_set const tilde(std::move(closure));
  automaton a(tilde);
  auto const container = find_containers(tilde, a);

  std::vector<std::string> kept;
  for (std::size_t i = 0; i < tilde.count(); ++i) {
    if (container[i] == static_cast<std::size_t>(-1)
        && tilde[i] <= reverse(tilde[i])) {
      kept.push_back(tilde[i]);
    }
  }
  std::sort(kept.begin(), kept.end());

  normalized_input out;
  out.kept = string_set(std::move(kept));
  for (auto const& u : out.kept) {
    if (is_palindrome(u)) {
      out.palindromes.push_back(u);
    }
  }

  std::unordered_map<std::string_view, std::size_t> index_of;
  index_of.reserve(tilde.count());
  for (std::size_t i = 0; i < tilde.count(); ++i) {
    index_of.emplace(tilde[i], i);
  }
  for (auto const& u : s) {
    auto const i = index_of.at(u);
    if (container[i] != static_cast<std::size_t>(-1)) {
      out.dropped.push_back(
        {u, "proper factor of \"" + tilde[container[i]] + "\""});
    } else if (u > reverse(u)) {
      out.dropped.push_back({u, "represented by its reversal"});
    }
  }
  return {std::move(out), std::move(a)};
}

} // namespace detail

/// Closes `s` under reversal, makes the closure factor-free and keeps the
/// lexicographically smaller string of each reversal pair.
inline normalized_input make_reverse_factor_free(string_set const& s)
{
  if (s.empty()) {
    return {};
  }
  return detail::normalize(s).result;
}

/// Quadratic reference check: no member is a factor of another member or of
/// another member's reversal.
inline bool is_reverse_factor_free(std::span<std::string const> members)
{
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) {
        continue;
      }
      if (is_factor(members[i], members[j])
          || is_factor(members[i], reverse(members[j]))) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_reverse_factor_free(string_set const& s)
{
  return is_reverse_factor_free(std::span<std::string const>(s.members()));
}

} // namespace scsr
