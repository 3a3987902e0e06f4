// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#pragma once

/**
 * @file exact.hpp
 * @brief Exhaustive solvers for small instances.
 *
 * Every ordering of the normalized strings, in every orientation, is a
 * candidate path; the best has maximum total overlap and, among those, the
 * lexicographically smallest string. The search is a depth-first enumeration
 * in (index, orientation) order with a simple admissible bound: the overlap
 * so far plus, for each unplaced string, the largest overlap any other vertex
 * has into it. Branches are cut only when that bound is strictly below the
 * best total, so every optimal path is still compared.
 */

#include <scsr/error.hpp>
#include <scsr/overlap_graph.hpp>
#include <scsr/preprocess.hpp>
#include <scsr/strings.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scsr {

inline constexpr std::size_t default_limit_m = 9;

struct oriented_string {
  std::size_t string_id;
  bool reversed;

  friend bool operator==(oriented_string const&, oriented_string const&) = default;
};

struct exact_result {
  std::string best_string;
  std::size_t opt_overlap = 0;
  /// Ordering of `members`, each in the orientation used.
  std::vector<oriented_string> witness;
  /// The normalized strings the witness refers to.
  string_set members;

  /// Length of an optimal superstring (members' total length - opt_overlap).
  std::size_t length() const noexcept { return best_string.size(); }
};

namespace detail {

class path_search {
 public:
  // `vertices` lists the searchable vertices of `g`; a string whose vertices
  // spell the same text (palindromes) only needs one of them.
  path_search(overlap_graph const& g, std::vector<vertex_id> vertices)
    : g_(g)
    , vertices_(std::move(vertices))
    , n_(g.vertex_count())
    , weight_(n_ * n_, 0)
    , max_in_(g.string_count(), 0)
    , used_(g.string_count(), false)
  {
    for (auto x : vertices_) {
      for (auto y : vertices_) {
        if (overlap_graph::string_id(x) != overlap_graph::string_id(y)) {
          auto w = g.weight(x, y);
          weight_[x * n_ + y] = w;
          auto& in = max_in_[overlap_graph::string_id(y)];
          in = std::max(in, w);
        }
      }
    }
    for (auto w : max_in_) {
      remaining_bound_ += w;
    }
  }

  /// Restrict to paths on which a vertex spelling `from` is immediately
  /// followed by a vertex spelling `to`.
  void require_arc(std::vector<vertex_id> from, std::vector<vertex_id> to)
  {
    from_ = std::move(from);
    to_ = std::move(to);
  }

  std::optional<exact_result> run()
  {
    dfs();
    if (best_total_ < 0) {
      return std::nullopt;
    }
    exact_result r;
    r.best_string = best_string_;
    r.opt_overlap = static_cast<std::size_t>(best_total_);
    for (auto v : best_path_) {
      r.witness.push_back(
        {overlap_graph::string_id(v), overlap_graph::is_reversed(v)});
    }
    return r;
  }

 private:
  bool in(std::vector<vertex_id> const& set, vertex_id v) const
  {
    return std::find(set.begin(), set.end(), v) != set.end();
  }

  void dfs()
  {
    if (path_.size() == g_.string_count()) {
      if (!from_.empty()
          && (in(from_, path_.back())
              || std::none_of(path_.begin(), path_.end(),
                              [&](vertex_id v) { return in(from_, v); }))) {
        return;
      }
      consider_leaf();
      return;
    }
    for (auto v : vertices_) {
      auto const id = overlap_graph::string_id(v);
      if (used_[id]) {
        continue;
      }
      if (!from_.empty()) {
        bool const after_from = !path_.empty() && in(from_, path_.back());
        if (after_from != in(to_, v)) {
          continue;
        }
      }
      std::size_t const w = path_.empty() ? 0 : weight_[path_.back() * n_ + v];
      std::size_t const bound = total_ + w + remaining_bound_ - max_in_[id];
      if (static_cast<long long>(bound) < best_total_) {
        continue;
      }
      used_[id] = true;
      path_.push_back(v);
      total_ += w;
      remaining_bound_ -= max_in_[id];
      dfs();
      remaining_bound_ += max_in_[id];
      total_ -= w;
      path_.pop_back();
      used_[id] = false;
    }
  }

  void consider_leaf()
  {
    auto const total = static_cast<long long>(total_);
    if (total < best_total_) {
      return;
    }
    std::string s = g_.str(path_.front());
    for (std::size_t i = 1; i < path_.size(); ++i) {
      s.append(std::string_view(g_.str(path_[i]))
                 .substr(weight_[path_[i - 1] * n_ + path_[i]]));
    }
    if (total > best_total_ || s < best_string_) {
      best_total_ = total;
      best_string_ = std::move(s);
      best_path_ = path_;
    }
  }

  overlap_graph const& g_;
  std::vector<vertex_id> vertices_;
  std::size_t n_;
  std::vector<std::size_t> weight_;
  std::vector<std::size_t> max_in_;
  std::vector<bool> used_;
  std::vector<vertex_id> from_, to_;

  std::vector<vertex_id> path_;
  std::size_t total_ = 0;
  std::size_t remaining_bound_ = 0;
  long long best_total_ = -1;
  std::string best_string_;
  std::vector<vertex_id> best_path_;
};

inline std::vector<vertex_id> searchable_vertices(
  overlap_graph const& g, bool with_reversals)
{
  std::vector<vertex_id> out;
  for (std::size_t i = 0; i < g.string_count(); ++i) {
    auto const v = overlap_graph::vertex_of(i, false);
    out.push_back(v);
    if (with_reversals && g.str(v) != g.str(mate(v))) {
      out.push_back(mate(v));
    }
  }
  return out;
}

inline void check_limit(string_set const& members, std::size_t limit_m)
{
  if (members.count() > limit_m) {
    throw size_limit_error(members.count(), limit_m);
  }
}

} // namespace detail

/// Shortest common superstring with reversals, by exhaustive search.
inline exact_result exact_scsr(
  string_set const& s, std::size_t limit_m = default_limit_m)
{
  if (s.empty()) {
    throw empty_set_error("exact_scsr");
  }
  auto norm = make_reverse_factor_free(s);
  detail::check_limit(norm.kept, limit_m);
  overlap_graph const g(norm.kept);
  detail::path_search search(g, detail::searchable_vertices(g, true));
  auto r = *search.run();
  r.members = std::move(norm.kept);
  return r;
}

/// Best path that contains the arc from the vertex spelling `u` to the
/// vertex spelling `v` (both taken from the normalized set or its reversals).
inline exact_result exact_scsr_through_arc(
  string_set const& s, std::string_view u, std::string_view v,
  std::size_t limit_m = default_limit_m)
{
  if (s.empty()) {
    throw empty_set_error("exact_scsr_through_arc");
  }
  auto norm = make_reverse_factor_free(s);
  detail::check_limit(norm.kept, limit_m);
  overlap_graph const g(norm.kept);
  if (u == v || u == reverse(v)) {
    throw unrealizable_arc_error("arc endpoints are equal or mutually reversed");
  }

  auto vertices = detail::searchable_vertices(g, true);
  auto spelling = [&](std::string_view text) {
    std::vector<vertex_id> out;
    for (auto x : vertices) {
      if (g.str(x) == text) {
        out.push_back(x);
      }
    }
    if (out.empty()) {
      throw unrealizable_arc_error(
        "\"" + std::string(text) + "\" is not a normalized string or reversal");
    }
    return out;
  };

  detail::path_search search(g, vertices);
  search.require_arc(spelling(u), spelling(v));
  auto r = search.run();
  if (!r) {
    throw unrealizable_arc_error("no semi-Hamiltonian path uses the arc");
  }
  r->members = std::move(norm.kept);
  return *r;
}

/// Classic shortest common superstring (no reversals), by exhaustive search.
inline exact_result exact_scs(
  string_set const& s, std::size_t limit_m = default_limit_m)
{
  if (s.empty()) {
    throw empty_set_error("exact_scs");
  }
  auto members = make_factor_free(s);
  detail::check_limit(members, limit_m);
  overlap_graph const g(members);
  detail::path_search search(g, detail::searchable_vertices(g, false));
  auto r = *search.run();
  r.members = std::move(members);
  return r;
}

/// Whether some superstring with reversals of length <= ell exists.
inline bool decide_scsr(
  string_set const& s, std::size_t ell, std::size_t limit_m = default_limit_m)
{
  return exact_scsr(s, limit_m).length() <= ell;
}

} // namespace scsr
