// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#pragma once

/**
 * @file greedy.hpp
 * @brief Greedy superstring-with-reversals engines.
 *
 * greedy_r_naive() repeatedly merges the pair of working strings (either
 * orientation) with the largest overlap. It recomputes all pairwise overlaps
 * in every round and exists as a reference.
 *
 * greedy_r_linear() produces the same result in time linear in the input
 * length (plus the sort of the pattern set). It works on the overlap graph:
 * automaton states are visited by decreasing depth, each state standing for
 * a candidate overlap w, and arcs (a, b) with a ending in w and b starting
 * with w are added in pairs {e, reversed(e)} while they keep F a set of
 * disjoint paths.
 *
 * Both engines rank tied candidates by the same key, so they make identical
 * choices:
 *
 *   (overlap desc, w, str(a), str(b))
 *
 * where a is the vertex ending the left path, b the vertex starting the right
 * one and w the overlap string. In canonical mode the three strings compare
 * lexicographically; in seeded-random mode each one is first compared by a
 * seeded hash.
 */

#include <scsr/aho_corasick.hpp>
#include <scsr/error.hpp>
#include <scsr/overlap_graph.hpp>
#include <scsr/preprocess.hpp>
#include <scsr/strings.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace scsr {

enum class tie_break {
  canonical,
  /// Merge the first two input strings first whenever their overlap is
  /// maximal, then continue canonically.
  adversarial_first_pair,
  seeded_random,
};

struct tie_break_policy {
  tie_break mode = tie_break::canonical;
  std::uint64_t seed = 0;
};

inline std::string_view to_string(tie_break mode)
{
  switch (mode) {
  case tie_break::canonical:
    return "canonical";
  case tie_break::adversarial_first_pair:
    return "adversarial-first-pair";
  case tie_break::seeded_random:
    return "seeded-random";
  }
  return "?";
}

inline std::optional<tie_break> parse_tie_break(std::string_view name)
{
  for (auto mode : {tie_break::canonical, tie_break::adversarial_first_pair,
                    tie_break::seeded_random}) {
    if (to_string(mode) == name) {
      return mode;
    }
  }
  return std::nullopt;
}

struct greedy_step {
  std::string left;   // string of the vertex ending the left path
  std::string right;  // string of the vertex starting the right path
  std::size_t overlap;

  friend bool operator==(greedy_step const&, greedy_step const&) = default;
};

struct greedy_trace {
  std::vector<greedy_step> steps;
  std::string final;
  std::size_t total_overlap = 0;
  /// Normalized input. Vertex ids in `arcs` index its members.
  string_set kept;
  /// Chosen arcs, each followed by its reversal.
  std::vector<arc> arcs;

  std::size_t normalized_length() const noexcept { return kept.total_length(); }
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_step(std::uint64_t h, std::uint8_t byte)
{
  return h * 0x100000001b3ULL + byte + 1;
}

inline std::uint64_t hash_finish(std::uint64_t h, std::uint64_t seed)
{
  return mix64(h ^ mix64(seed));
}

class rank_policy {
 public:
  explicit rank_policy(tie_break_policy const& p)
    : random_(p.mode == tie_break::seeded_random)
    , seed_(p.seed)
  {}

  bool random() const noexcept { return random_; }

  std::uint64_t rank(std::string_view s) const
  {
    if (!random_) {
      return 0;
    }
    std::uint64_t h = 0;
    for (char ch : s) {
      h = hash_step(h, static_cast<std::uint8_t>(ch));
    }
    return hash_finish(h, seed_);
  }

  std::uint64_t finish(std::uint64_t partial) const
  {
    return random_ ? hash_finish(partial, seed_) : 0;
  }

 private:
  bool random_;
  std::uint64_t seed_;
};

// Vertices whose strings are the first two input strings, if both survived.
inline std::optional<std::pair<vertex_id, vertex_id>> forced_first_pair(
  string_set const& input, overlap_graph const& g)
{
  if (input.count() < 2) {
    return std::nullopt;
  }
  auto find = [&](std::string const& s) {
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
      if (g.str(v) == s) {
        return v;
      }
    }
    return no_vertex;
  };
  auto u = find(input[0]);
  auto v = find(input[1]);
  if (u == no_vertex || v == no_vertex) {
    return std::nullopt;
  }
  return std::pair{u, v};
}

inline std::string canonical_orientation(std::string s)
{
  auto r = reverse(s);
  return r < s ? r : s;
}

} // namespace detail

struct naive_options {
  /// Check after every round that the working set is reverse-factor-free,
  /// and before every merge that overlaps with the merged string equal those
  /// with its parts. Throws invariant_violation otherwise.
  bool check_invariants = false;
};

/// Reference greedy: O(m^2) overlap computations per round.
inline greedy_trace greedy_r_naive(
  string_set const& s, tie_break_policy const& policy = {},
  naive_options const& options = {})
{
  if (s.empty()) {
    throw empty_set_error("greedy_r_naive");
  }
  auto norm = make_reverse_factor_free(s);
  greedy_trace trace;
  trace.kept = norm.kept;
  overlap_graph const g(trace.kept);
  detail::rank_policy const ranks(policy);

  struct item {
    std::string text;
    vertex_id first;
    vertex_id last;
  };
  std::vector<item> working;
  for (vertex_id i = 0; i < trace.kept.count(); ++i) {
    working.push_back({trace.kept[i], 2 * i, 2 * i});
  }

  std::optional<std::pair<std::string, std::string>> forced;
  if (policy.mode == tie_break::adversarial_first_pair && s.count() >= 2) {
    forced.emplace(s[0], s[1]);
  }

  struct oriented {
    std::size_t item;
    std::string text;
    vertex_id first;
    vertex_id last;
  };
  struct key {
    std::size_t overlap;
    std::uint64_t w_rank;
    std::string_view w;
    std::uint64_t a_rank;
    std::string_view a;
    std::uint64_t b_rank;
    std::string_view b;

    bool better_than(key const& o) const
    {
      if (overlap != o.overlap) {
        return overlap > o.overlap;
      }
      return std::tie(w_rank, w, a_rank, a, b_rank, b)
             < std::tie(o.w_rank, o.w, o.a_rank, o.a, o.b_rank, o.b);
    }
  };

  while (working.size() > 1) {
    std::vector<oriented> closure;
    for (std::size_t i = 0; i < working.size(); ++i) {
      auto const& x = working[i];
      closure.push_back({i, x.text, x.first, x.last});
      auto r = reverse(x.text);
      if (r != x.text) {
        closure.push_back({i, std::move(r), mate(x.last), mate(x.first)});
      }
    }

    std::optional<key> best;
    std::size_t best_u = 0, best_v = 0;
    std::optional<std::pair<std::size_t, std::size_t>> forced_pair;
    for (std::size_t i = 0; i < closure.size(); ++i) {
      auto const& u = closure[i];
      for (std::size_t j = 0; j < closure.size(); ++j) {
        auto const& v = closure[j];
        if (u.text == v.text || u.text == reverse(v.text)) {
          continue;
        }
        auto const ov = overlap(u.text, v.text);
        std::string_view w = std::string_view(u.text).substr(u.text.size() - ov);
        std::string_view a = g.str(u.last), b = g.str(v.first);
        key k{ov, ranks.rank(w), w, ranks.rank(a), a, ranks.rank(b), b};
        if (!best || k.better_than(*best)) {
          best = k;
          best_u = i;
          best_v = j;
        }
        if (forced && u.text == forced->first && v.text == forced->second) {
          forced_pair.emplace(i, j);
        }
      }
    }
    if (!best) {
      throw invariant_violation("greedy_r_naive: no admissible pair");
    }
    if (forced_pair) {
      auto const& [i, j] = *forced_pair;
      if (overlap(closure[i].text, closure[j].text) == best->overlap) {
        best_u = i;
        best_v = j;
      }
    }
    forced.reset();

    auto const& u = closure[best_u];
    auto const& v = closure[best_v];
    auto const ov = overlap(u.text, v.text);
    std::string merged = merge(u.text, v.text);

    if (options.check_invariants) {
      if (g.weight(u.last, v.first) != ov) {
        throw invariant_violation(
          "overlap of \"" + u.text + "\" and \"" + v.text
          + "\" differs from the overlap of their boundary strings");
      }
      for (auto const& w : closure) {
        if (overlap(w.text, merged) != overlap(w.text, u.text)
            || overlap(merged, w.text) != overlap(v.text, w.text)) {
          throw invariant_violation(
            "merging \"" + u.text + "\" and \"" + v.text
            + "\" changes an overlap with \"" + w.text + "\"");
        }
      }
    }

    trace.steps.push_back({g.str(u.last), g.str(v.first), ov});
    trace.total_overlap += ov;
    arc const e{u.last, v.first, ov};
    trace.arcs.push_back(e);
    trace.arcs.push_back(reversed(e));

    item next{std::move(merged), u.first, v.last};
    auto const gone_a = std::max(u.item, v.item);
    auto const gone_b = std::min(u.item, v.item);
    working.erase(working.begin() + static_cast<std::ptrdiff_t>(gone_a));
    working.erase(working.begin() + static_cast<std::ptrdiff_t>(gone_b));
    working.push_back(std::move(next));

    if (options.check_invariants) {
      std::vector<std::string> texts;
      for (auto const& x : working) {
        texts.push_back(x.text);
      }
      if (!is_reverse_factor_free(texts)) {
        throw invariant_violation(
          "working set is no longer reverse-factor-free after round "
          + std::to_string(trace.steps.size()));
      }
    }
  }

  trace.final = detail::canonical_orientation(working.front().text);
  return trace;
}

namespace detail {

// Singly linked views over the PrefSet / SufSet arrays. Entries are unlinked
// once their vertex stops being a path start (resp. end), which is final.
class pruned_lists {
 public:
  static constexpr std::uint32_t end = static_cast<std::uint32_t>(-1);

  pruned_lists(std::vector<std::uint32_t> const& items,
               std::vector<std::size_t> const& offsets)
    : items_(items)
    , next_(items.size())
    , head_(offsets.size() - 1)
  {
    for (std::size_t q = 0; q + 1 < offsets.size(); ++q) {
      auto const lo = offsets[q], hi = offsets[q + 1];
      head_[q] = lo == hi ? end : static_cast<std::uint32_t>(lo);
      for (auto i = lo; i < hi; ++i) {
        next_[i] = i + 1 == hi ? end : static_cast<std::uint32_t>(i + 1);
      }
    }
  }

  std::uint32_t head(std::size_t q) const { return head_[q]; }
  std::uint32_t next(std::uint32_t pos) const { return next_[pos]; }
  std::uint32_t item(std::uint32_t pos) const { return items_[pos]; }

  // Removes `pos` (whose predecessor is `prev`); returns the following entry.
  std::uint32_t unlink(std::size_t q, std::uint32_t prev, std::uint32_t pos)
  {
    auto const after = next_[pos];
    if (prev == end) {
      head_[q] = after;
    } else {
      next_[prev] = after;
    }
    return after;
  }

 private:
  std::vector<std::uint32_t> const& items_;
  std::vector<std::uint32_t> next_;
  std::vector<std::uint32_t> head_;
};

} // namespace detail

/// Linear-time greedy on the overlap graph.
inline greedy_trace greedy_r_linear(
  string_set const& s, tie_break_policy const& policy = {})
{
  using state_id = automaton::state_id;

  if (s.empty()) {
    throw empty_set_error("greedy_r_linear");
  }
  // The normalization automaton spells every vertex string, and its extra
  // states (prefixes of dropped strings) carry empty PrefSets.
  auto norm = detail::normalize(s);
  automaton const& a = norm.closure_automaton;
  greedy_trace trace;
  trace.kept = std::move(norm.result.kept);
  std::size_t const m = trace.kept.count();
  if (m == 1) {
    trace.final = trace.kept[0];
    return trace;
  }

  overlap_graph const g(trace.kept);
  detail::rank_policy const ranks(policy);
  auto const vertex_count = static_cast<vertex_id>(g.vertex_count());

  std::vector<std::string_view> texts(vertex_count);
  for (vertex_id v = 0; v < vertex_count; ++v) {
    texts[v] = g.str(v);
  }

  // Tie order among vertices inside every PrefSet / SufSet list.
  std::vector<vertex_string> ordered(vertex_count);
  {
    std::vector<std::tuple<std::uint64_t, std::uint32_t, vertex_id>> keys(
      vertex_count);
    for (vertex_id v = 0; v < vertex_count; ++v) {
      keys[v] = {ranks.rank(texts[v]),
                 static_cast<std::uint32_t>(a.lex_rank(a.find(texts[v]))), v};
    }
    std::sort(keys.begin(), keys.end());
    for (vertex_id i = 0; i < vertex_count; ++i) {
      auto const v = std::get<2>(keys[i]);
      ordered[i] = {v, texts[v]};
    }
  }
  auto const sets = compute_state_sets(a, ordered);

  // Candidate overlaps by decreasing length; equal lengths in key order.
  std::vector<state_id> order = a.reverse_bfs_order();
  if (ranks.random()) {
    std::vector<std::uint64_t> partial(a.state_count(), 0);
    for (state_id q = 1; q < a.state_count(); ++q) {
      partial[q] = detail::hash_step(partial[a.parent(q)], a.label(q));
    }
    std::vector<std::uint64_t> rank(a.state_count());
    for (state_id q = 0; q < a.state_count(); ++q) {
      rank[q] = ranks.finish(partial[q]);
    }
    // `order` is grouped by depth; reorder inside each group.
    auto first = order.begin();
    while (first != order.end()) {
      auto const d = a.depth(*first);
      auto last = std::find_if(
        first, order.end(), [&](state_id q) { return a.depth(q) != d; });
      std::sort(first, last, [&](state_id x, state_id y) {
        return std::pair{rank[x], x} < std::pair{rank[y], y};
      });
      first = last;
    }
  }

  path_collection pc(vertex_count);
  detail::pruned_lists pref(sets.pref_items(), sets.pref_offsets());
  detail::pruned_lists suf(sets.suf_items(), sets.suf_offsets());
  constexpr auto end = detail::pruned_lists::end;

  // First admissible (a, b) at state q in list order. For a fixed a at most
  // two live starts are inadmissible (mate(a) and the start of a's own
  // path), so each probe is amortized constant time.
  auto find_arc = [&](state_id q) -> std::optional<std::pair<vertex_id, vertex_id>> {
    while (pref.head(q) != end && !pc.is_start(pref.item(pref.head(q)))) {
      pref.unlink(q, end, pref.head(q));
    }
    if (pref.head(q) == end) {
      return std::nullopt;
    }
    auto prev = end;
    for (auto pos = suf.head(q); pos != end;) {
      vertex_id const alpha = suf.item(pos);
      if (!pc.is_end(alpha)) {
        pos = suf.unlink(q, prev, pos);
        continue;
      }
      auto const blocked = pc.other_end(alpha);
      auto bprev = end;
      for (auto bpos = pref.head(q); bpos != end;) {
        vertex_id const beta = pref.item(bpos);
        if (!pc.is_start(beta)) {
          bpos = pref.unlink(q, bprev, bpos);
          continue;
        }
        if (beta != mate(alpha) && beta != blocked) {
          return std::pair{alpha, beta};
        }
        bprev = bpos;
        bpos = pref.next(bpos);
      }
      prev = pos;
      pos = suf.next(pos);
    }
    return std::nullopt;
  };

  auto insert = [&](arc const& e) {
    pc.add_arc_pair(e);
    trace.steps.push_back({g.str(e.from), g.str(e.to), e.weight});
    trace.total_overlap += e.weight;
    trace.arcs.push_back(e);
    trace.arcs.push_back(reversed(e));
  };

  std::size_t position = 0;
  if (policy.mode == tie_break::adversarial_first_pair) {
    if (auto forced = detail::forced_first_pair(s, g)) {
      while (position < order.size() && !find_arc(order[position])) {
        ++position;
      }
      auto const e = g.make_arc(forced->first, forced->second);
      if (position < order.size() && e.weight == a.depth(order[position])
          && pc.can_add(e)) {
        insert(e);
      }
    }
  }

  for (; position < order.size() && trace.steps.size() + 1 < m; ++position) {
    state_id const q = order[position];
    while (trace.steps.size() + 1 < m) {
      auto found = find_arc(q);
      if (!found) {
        break;
      }
      arc const e{found->first, found->second, a.depth(q)};
      assert(g.weight(e.from, e.to) == e.weight);
      insert(e);
    }
  }
  if (trace.steps.size() + 1 != m) {
    throw invariant_violation("greedy_r_linear: paths were not joined");
  }

  auto const starts = pc.path_starts();
  trace.final = detail::canonical_orientation(path_string(g, pc, starts.front()));
  return trace;
}

/// True iff every member of `s`, or its reversal, occurs in `candidate`.
///
/// One Aho-Corasick pass over the candidate; each state's output chain is
/// walked at most once.
inline bool verify_superstring_r(std::string_view candidate, string_set const& s)
{
  if (s.empty()) {
    return true;
  }
  std::vector<std::string_view> patterns;
  std::vector<std::string> reversals;
  reversals.reserve(s.count());
  for (auto const& u : s) {
    reversals.push_back(reverse(u));
  }
  for (std::size_t i = 0; i < s.count(); ++i) {
    patterns.push_back(s[i]);
    patterns.push_back(reversals[i]);
  }
  automaton const a(patterns);

  std::vector<bool> seen(a.state_count(), false);
  auto q = automaton::root;
  for (char ch : candidate) {
    q = a.next(q, static_cast<std::uint8_t>(ch));
    for (auto r = q; r != automaton::none && !seen[r]; r = a.output_link(r)) {
      seen[r] = true;
    }
  }
  for (std::size_t i = 0; i < s.count(); ++i) {
    if (!seen[a.terminal_of(2 * i)] && !seen[a.terminal_of(2 * i + 1)]) {
      return false;
    }
  }
  return true;
}

} // namespace scsr
