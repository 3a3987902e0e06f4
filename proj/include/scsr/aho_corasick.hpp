// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#pragma once

/**
 * @file aho_corasick.hpp
 * @brief Aho-Corasick automaton over a fixed pattern set.
 *
 * States are numbered in breadth-first order with children visited in
 * increasing byte order. Consequently states of equal depth are numbered in
 * lexicographic order of the strings they spell, and the children of a state
 * occupy a contiguous id range.
 *
 * Transitions are stored either as a dense 256-entry table per state (small
 * automata) or as the sorted contiguous child ranges above, searched by
 * bisection. The choice is not observable through the interface.
 */

#include <scsr/error.hpp>
#include <scsr/strings.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scsr {

class automaton {
 public:
  using state_id = std::uint32_t;

  static constexpr state_id root = 0;
  static constexpr state_id none = std::numeric_limits<state_id>::max();

  /// Automata with at most this many states get dense transition tables.
  static constexpr std::size_t dense_state_limit = 4096;

  explicit automaton(std::span<std::string_view const> patterns)
  {
    build(patterns);
  }

  explicit automaton(string_set const& patterns)
  {
    std::vector<std::string_view> views(patterns.begin(), patterns.end());
    build(views);
  }

  std::size_t state_count() const noexcept { return depth_.size(); }
  std::size_t pattern_count() const noexcept { return terminal_of_.size(); }

  std::size_t depth(state_id q) const { return depth_[q]; }
  state_id parent(state_id q) const { return parent_[q]; }
  state_id failure(state_id q) const { return failure_[q]; }
  std::uint8_t label(state_id q) const { return label_[q]; }

  /// Nearest state on the proper failure chain of `q` that ends a pattern.
  state_id output_link(state_id q) const { return output_[q]; }

  /// True iff the string spelled by `q` is one of the patterns.
  bool is_terminal(state_id q) const { return terminal_[q]; }

  /// Terminal state of the pattern passed at position `index`.
  state_id terminal_of(std::size_t index) const { return terminal_of_[index]; }

  /// Position of `q` in the lexicographic order of all spelled strings.
  std::size_t lex_rank(state_id q) const { return lex_rank_[q]; }

  bool uses_dense_transitions() const noexcept { return !dense_.empty(); }

  /// Trie edge from `q` on `byte`, or `none`.
  state_id child(state_id q, std::uint8_t byte) const
  {
    if (!dense_.empty()) {
      return dense_[static_cast<std::size_t>(q) * 256 + byte];
    }
    auto const first = child_begin_[q];
    auto const last = first + child_count_[q];
    // Children are contiguous and sorted by label.
    state_id lo = first, hi = last;
    while (lo < hi) {
      state_id mid = lo + (hi - lo) / 2;
      if (label_[mid] < byte) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return (lo < last && label_[lo] == byte) ? lo : none;
  }

  /// Full goto/failure transition.
  state_id next(state_id q, std::uint8_t byte) const
  {
    for (;;) {
      state_id c = child(q, byte);
      if (c != none) {
        return c;
      }
      if (q == root) {
        return root;
      }
      q = failure_[q];
    }
  }

  /// State spelling exactly `s`, or `none` if `s` is not a prefix of a pattern.
  state_id find(std::string_view s) const
  {
    state_id q = root;
    for (char ch : s) {
      q = child(q, static_cast<std::uint8_t>(ch));
      if (q == none) {
        return none;
      }
    }
    return q;
  }

  std::string spell(state_id q) const
  {
    std::string out(depth_[q], '\0');
    for (std::size_t i = out.size(); i > 0; --i) {
      out[i - 1] = static_cast<char>(label_[q]);
      q = parent_[q];
    }
    return out;
  }

  /// States by non-increasing depth; equal depths in ascending id order.
  /// The root comes last.
  std::vector<state_id> reverse_bfs_order() const
  {
    std::vector<state_id> order;
    order.reserve(state_count());
    for (std::size_t d = depth_start_.size() - 1; d-- > 0;) {
      for (state_id q = depth_start_[d]; q < depth_start_[d + 1]; ++q) {
        order.push_back(q);
      }
    }
    return order;
  }

  /// Ids of the states at depth `d` form the range [first, last).
  std::pair<state_id, state_id> depth_range(std::size_t d) const
  {
    if (d + 1 >= depth_start_.size()) {
      return {static_cast<state_id>(state_count()),
              static_cast<state_id>(state_count())};
    }
    return {depth_start_[d], depth_start_[d + 1]};
  }

  std::size_t max_depth() const noexcept { return depth_start_.size() - 2; }

 private:
  void build(std::span<std::string_view const> patterns);

  std::vector<std::uint32_t> depth_;
  std::vector<state_id> parent_;
  std::vector<state_id> failure_;
  std::vector<state_id> output_;
  std::vector<std::uint8_t> label_;
  std::vector<bool> terminal_;
  std::vector<state_id> child_begin_;
  std::vector<std::uint16_t> child_count_;
  std::vector<state_id> dense_;
  std::vector<state_id> terminal_of_;
  std::vector<std::uint32_t> lex_rank_;
  std::vector<state_id> depth_start_;
};

inline void automaton::build(std::span<std::string_view const> patterns)
{
  if (patterns.empty()) {
    throw empty_set_error("automaton construction");
  }
  std::size_t total = 0;
  for (auto p : patterns) {
    if (p.empty()) {
      throw empty_string_error();
    }
    total += p.size();
  }

  std::vector<std::uint32_t> sorted(patterns.size());
  std::iota(sorted.begin(), sorted.end(), 0u);
  std::stable_sort(sorted.begin(), sorted.end(), [&](auto a, auto b) {
    return patterns[a] < patterns[b];
  });

  // Trie in creation order. Sorted insertion means a new child always carries
  // the largest byte among its siblings, so appending keeps them ordered.
  std::vector<state_id> t_parent{none};
  std::vector<std::uint8_t> t_label{0};
  std::vector<state_id> t_first{none}, t_last{none}, t_sibling{none};
  t_parent.reserve(total + 1);
  t_label.reserve(total + 1);
  t_first.reserve(total + 1);
  t_last.reserve(total + 1);
  t_sibling.reserve(total + 1);
  std::vector<state_id> t_terminal_of(patterns.size(), none);

  std::vector<state_id> path{0};
  std::string_view previous;
  for (auto index : sorted) {
    auto const s = patterns[index];
    std::size_t lcp = 0;
    while (lcp < s.size() && lcp < previous.size() && s[lcp] == previous[lcp]) {
      ++lcp;
    }
    path.resize(lcp + 1);
    for (std::size_t d = lcp; d < s.size(); ++d) {
      auto const id = static_cast<state_id>(t_parent.size());
      state_id const up = path[d];
      t_parent.push_back(up);
      t_label.push_back(static_cast<std::uint8_t>(s[d]));
      t_first.push_back(none);
      t_last.push_back(none);
      t_sibling.push_back(none);
      if (t_last[up] == none) {
        t_first[up] = id;
      } else {
        t_sibling[t_last[up]] = id;
      }
      t_last[up] = id;
      path.push_back(id);
    }
    t_terminal_of[index] = path[s.size()];
    previous = s;
  }

  std::size_t const n = t_parent.size();

  // Renumber breadth-first. Creation order was preorder, i.e. lexicographic.
  std::vector<state_id> tmp_to_bfs(n, none);
  depth_.assign(n, 0);
  parent_.assign(n, none);
  label_.assign(n, 0);
  child_begin_.assign(n, static_cast<state_id>(n));
  child_count_.assign(n, 0);
  lex_rank_.assign(n, 0);
  std::vector<state_id> bfs_to_tmp;
  bfs_to_tmp.reserve(n);
  bfs_to_tmp.push_back(0);
  tmp_to_bfs[0] = 0;
  for (state_id head = 0; head < bfs_to_tmp.size(); ++head) {
    state_id const t = bfs_to_tmp[head];
    lex_rank_[head] = t;
    if (t_first[t] != none) {
      child_begin_[head] = static_cast<state_id>(bfs_to_tmp.size());
    }
    for (state_id c = t_first[t]; c != none; c = t_sibling[c]) {
      auto const q = static_cast<state_id>(bfs_to_tmp.size());
      tmp_to_bfs[c] = q;
      bfs_to_tmp.push_back(c);
      parent_[q] = head;
      label_[q] = t_label[c];
      depth_[q] = depth_[head] + 1;
      ++child_count_[head];
    }
  }

  terminal_of_.resize(patterns.size());
  terminal_.assign(n, false);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    terminal_of_[i] = tmp_to_bfs[t_terminal_of[i]];
    terminal_[terminal_of_[i]] = true;
  }

  depth_start_.clear();
  for (state_id q = 0; q < n; ++q) {
    while (depth_start_.size() <= depth_[q]) {
      depth_start_.push_back(q);
    }
  }
  depth_start_.push_back(static_cast<state_id>(n));

  if (n <= dense_state_limit) {
    dense_.assign(n * 256, none);
    for (state_id q = 1; q < n; ++q) {
      dense_[static_cast<std::size_t>(parent_[q]) * 256 + label_[q]] = q;
    }
  }

  failure_.assign(n, root);
  output_.assign(n, none);
  for (state_id q = 1; q < n; ++q) {
    state_id const p = parent_[q];
    if (p != root) {
      state_id f = failure_[p];
      state_id c = child(f, label_[q]);
      while (c == none && f != root) {
        f = failure_[f];
        c = child(f, label_[q]);
      }
      failure_[q] = c == none ? root : c;
    }
    state_id const f = failure_[q];
    output_[q] = (f != root && terminal_[f]) ? f : output_[f];
  }
}

/// Builds the automaton over the members of `patterns`.
inline automaton build_automaton(string_set const& patterns)
{
  return automaton(patterns);
}

/// A graph vertex id paired with the string the vertex stands for.
struct vertex_string {
  std::uint32_t id;
  std::string_view text;
};

/// Per-state vertex lists: PrefSet and SufSet of every automaton state.
///
/// pref_set(q) lists the vertices whose string starts with the string spelled
/// by q; suf_set(q) those whose string ends with it. Both include the root
/// (the empty string). Within each list vertices keep the order in which they
/// were passed to compute_state_sets().
class state_sets {
 public:
  using state_id = automaton::state_id;

  std::span<std::uint32_t const> pref_set(state_id q) const
  {
    return {pref_items_.data() + pref_offset_[q],
            pref_offset_[q + 1] - pref_offset_[q]};
  }

  std::span<std::uint32_t const> suf_set(state_id q) const
  {
    return {suf_items_.data() + suf_offset_[q],
            suf_offset_[q + 1] - suf_offset_[q]};
  }

  std::size_t total_size() const noexcept
  {
    return pref_items_.size() + suf_items_.size();
  }

  std::vector<std::uint32_t> const& pref_items() const noexcept
  {
    return pref_items_;
  }
  std::vector<std::uint32_t> const& suf_items() const noexcept
  {
    return suf_items_;
  }
  std::vector<std::size_t> const& pref_offsets() const noexcept
  {
    return pref_offset_;
  }
  std::vector<std::size_t> const& suf_offsets() const noexcept
  {
    return suf_offset_;
  }

 private:
  friend state_sets compute_state_sets(
    automaton const&, std::span<vertex_string const>);

  std::vector<std::size_t> pref_offset_, suf_offset_;
  std::vector<std::uint32_t> pref_items_, suf_items_;
};

/// Buckets every vertex into the PrefSet of each state on its trie path and
/// the SufSet of each state on its failure chain. Total work and output size
/// are O(sum of vertex string lengths).
inline state_sets compute_state_sets(
  automaton const& a, std::span<vertex_string const> vertices)
{
  using state_id = automaton::state_id;
  std::size_t const n = a.state_count();

  std::vector<state_id> terminal(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    state_id q = a.find(vertices[i].text);
    if (q == automaton::none || !a.is_terminal(q)
        || a.depth(q) != vertices[i].text.size()) {
      throw unknown_string_error(std::string(vertices[i].text));
    }
    terminal[i] = q;
  }

  state_sets out;
  auto fill = [&](std::vector<std::size_t>& offset,
                  std::vector<std::uint32_t>& items, auto step) {
    offset.assign(n + 1, 0);
    for (auto t : terminal) {
      for (state_id q = t;; q = step(q)) {
        ++offset[q + 1];
        if (q == automaton::root) {
          break;
        }
      }
    }
    std::partial_sum(offset.begin(), offset.end(), offset.begin());
    items.resize(offset[n]);
    std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (state_id q = terminal[i];; q = step(q)) {
        items[cursor[q]++] = vertices[i].id;
        if (q == automaton::root) {
          break;
        }
      }
    }
  };

  fill(out.pref_offset_, out.pref_items_, [&](state_id q) { return a.parent(q); });
  fill(out.suf_offset_, out.suf_items_, [&](state_id q) { return a.failure(q); });
  return out;
}

} // namespace scsr
