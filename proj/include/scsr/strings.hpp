// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#pragma once

/**
 * @file strings.hpp
 * @brief Byte-string algebra underlying the superstring algorithms.
 *
 * Strings are plain byte sequences held in std::string. Comparisons are
 * byte-wise unsigned (std::char_traits<char> semantics), which is also the
 * order used for every tie-break in this library.
 *
 *   overlap("aabb", "abbb")          == 3
 *   prefix_remainder("aabb", "abbb") == "a"
 *   merge("aabb", "abbb")            == "aabbb"
 */

#include <scsr/error.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace scsr {

inline std::string reverse(std::string_view s)
{
  return std::string(s.rbegin(), s.rend());
}

inline bool is_palindrome(std::string_view s)
{
  return std::equal(s.begin(), s.begin() + s.size() / 2, s.rbegin());
}

/// Length of the longest suffix of `u` that is also a prefix of `v`.
///
/// Runs the Knuth-Morris-Pratt automaton of `v` over the tail of `u`, so the
/// cost is O(|u| + |v|). The result may equal min(|u|, |v|); in particular
/// overlap(s, s) == |s|.
inline std::size_t overlap(std::string_view u, std::string_view v)
{
  if (u.empty() || v.empty()) {
    return 0;
  }

  std::vector<std::size_t> border(v.size(), 0);
  for (std::size_t i = 1, k = 0; i < v.size(); ++i) {
    while (k > 0 && v[i] != v[k]) {
      k = border[k - 1];
    }
    if (v[i] == v[k]) {
      ++k;
    }
    border[i] = k;
  }

  // Only the last |v| symbols of u can take part in the overlap.
  std::size_t const start = u.size() > v.size() ? u.size() - v.size() : 0;
  std::size_t k = 0;
  for (std::size_t i = start; i < u.size(); ++i) {
    if (k == v.size()) {
      k = border[k - 1];
    }
    while (k > 0 && u[i] != v[k]) {
      k = border[k - 1];
    }
    if (u[i] == v[k]) {
      ++k;
    }
  }
  return k;
}

/// The prefix of `u` left after cutting off its overlap with `v`.
inline std::string prefix_remainder(std::string_view u, std::string_view v)
{
  return std::string(u.substr(0, u.size() - overlap(u, v)));
}

/// `u` and `v` fused on their maximum overlap: prefix_remainder(u, v) + v.
inline std::string merge(std::string_view u, std::string_view v)
{
  std::string out(u.substr(0, u.size() - overlap(u, v)));
  out.append(v);
  return out;
}

inline bool is_factor(std::string_view t, std::string_view s)
{
  return s.find(t) != std::string_view::npos;
}

/// A deduplicated collection of nonempty byte strings.
///
/// Members keep the order of their first appearance. Empty strings are
/// rejected with empty_string_error; repeated strings are dropped silently.
class string_set {
 public:
  using const_iterator = std::vector<std::string>::const_iterator;

  string_set() = default;

  explicit string_set(std::vector<std::string> strings)
  {
    std::unordered_set<std::string_view> seen;
    seen.reserve(strings.size());
    members_.reserve(strings.size());
    // Views below point into `strings`, which is not resized while in use.
    for (auto& s : strings) {
      if (s.empty()) {
        throw empty_string_error();
      }
      if (seen.insert(s).second) {
        total_length_ += s.size();
        members_.push_back(s);
      }
    }
  }

  string_set(std::initializer_list<std::string_view> strings)
    : string_set(std::vector<std::string>(strings.begin(), strings.end()))
  {}

  std::vector<std::string> const& members() const noexcept { return members_; }
  std::string const& operator[](std::size_t i) const { return members_[i]; }

  /// Number of members (the instance's m).
  std::size_t count() const noexcept { return members_.size(); }

  /// Sum of member lengths (the instance's n).
  std::size_t total_length() const noexcept { return total_length_; }

  bool empty() const noexcept { return members_.empty(); }

  bool contains(std::string_view s) const
  {
    return std::find(members_.begin(), members_.end(), s) != members_.end();
  }

  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }

  friend bool operator==(string_set const&, string_set const&) = default;

 private:
  std::vector<std::string> members_;
  std::size_t total_length_ = 0;
};

} // namespace scsr
