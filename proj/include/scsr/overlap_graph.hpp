// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#pragma once

/**
 * @file overlap_graph.hpp
 * @brief Overlap graph closed under reversal, and disjoint path collections.
 *
 * Kept string i owns vertex 2i (the string itself) and vertex 2i+1 (its
 * reversal), so mate(v) == v ^ 1. Arcs are never stored wholesale; weights
 * come from overlap() on demand.
 */

#include <scsr/error.hpp>
#include <scsr/preprocess.hpp>
#include <scsr/strings.hpp>

#include <cassert>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace scsr {

using vertex_id = std::uint32_t;

inline constexpr vertex_id no_vertex = std::numeric_limits<vertex_id>::max();

constexpr vertex_id mate(vertex_id v) noexcept { return v ^ 1u; }

struct arc {
  vertex_id from;
  vertex_id to;
  std::size_t weight;

  friend bool operator==(arc const&, arc const&) = default;
};

/// The arc's image under the involution (a, b) -> (mate(b), mate(a)).
constexpr arc reversed(arc const& e) noexcept
{
  return {mate(e.to), mate(e.from), e.weight};
}

class overlap_graph {
 public:
  explicit overlap_graph(string_set const& kept)
  {
    strings_.reserve(2 * kept.count());
    for (auto const& s : kept) {
      strings_.push_back(s);
      strings_.push_back(reverse(s));
    }
  }

  explicit overlap_graph(normalized_input const& norm)
    : overlap_graph(norm.kept)
  {}

  std::size_t vertex_count() const noexcept { return strings_.size(); }
  std::size_t string_count() const noexcept { return strings_.size() / 2; }

  std::string const& str(vertex_id v) const { return strings_[v]; }

  static std::size_t string_id(vertex_id v) noexcept { return v / 2; }
  static bool is_reversed(vertex_id v) noexcept { return (v & 1u) != 0; }

  static vertex_id vertex_of(std::size_t string_id, bool reversed) noexcept
  {
    return static_cast<vertex_id>(2 * string_id + (reversed ? 1 : 0));
  }

  std::size_t weight(vertex_id from, vertex_id to) const
  {
    return overlap(strings_[from], strings_[to]);
  }

  arc make_arc(vertex_id from, vertex_id to) const
  {
    return {from, to, weight(from, to)};
  }

  /// "3" for vertex 2*3, "3R" for 2*3+1.
  static std::string label(vertex_id v)
  {
    return std::to_string(string_id(v)) + (is_reversed(v) ? "R" : "");
  }

 private:
  std::vector<std::string> strings_;
};

/// Arc set F kept as vertex-disjoint simple paths, closed under reversal.
///
/// Each path endpoint records the opposite endpoint of its path, so both
/// the disjointness test and an insertion take constant time.
class path_collection {
 public:
  explicit path_collection(std::size_t vertex_count)
    : succ_(vertex_count, no_vertex)
    , pred_(vertex_count, no_vertex)
    , other_end_(vertex_count)
    , succ_weight_(vertex_count, 0)
  {
    for (vertex_id v = 0; v < vertex_count; ++v) {
      other_end_[v] = v;
    }
  }

  std::size_t vertex_count() const noexcept { return succ_.size(); }
  std::size_t arc_count() const noexcept { return arcs_; }

  vertex_id successor(vertex_id v) const { return succ_[v]; }
  vertex_id predecessor(vertex_id v) const { return pred_[v]; }
  std::size_t successor_weight(vertex_id v) const { return succ_weight_[v]; }

  /// A path starts at v.
  bool is_start(vertex_id v) const { return pred_[v] == no_vertex; }
  /// A path ends at v.
  bool is_end(vertex_id v) const { return succ_[v] == no_vertex; }

  /// Opposite endpoint of the path having `v` as an endpoint.
  vertex_id other_end(vertex_id v) const
  {
    assert(is_start(v) || is_end(v));
    return other_end_[v];
  }

  /// Adding {e, reversed(e)} keeps F a set of disjoint paths.
  bool can_add(arc const& e) const
  {
    if (e.from == e.to || e.from >= vertex_count() || e.to >= vertex_count()) {
      return false;
    }
    // The end of a path and the start of a different path that is not the
    // reversal of the first one. Then reversed(e) is admissible as well.
    return is_end(e.from) && is_start(e.to) && e.to != mate(e.from)
           && e.to != other_end_[e.from];
  }

  void add_arc_pair(arc const& e)
  {
    if (!can_add(e)) {
      throw precondition_error("add_arc_pair: arc would break the path structure");
    }
    link(e);
    link(reversed(e));
    assert(involution_closed());
  }

  /// Every arc's reversal is in F too.
  bool involution_closed() const
  {
    for (vertex_id v = 0; v < vertex_count(); ++v) {
      vertex_id w = succ_[v];
      if (w != no_vertex
          && (succ_[mate(w)] != mate(v)
              || succ_weight_[mate(w)] != succ_weight_[v])) {
        return false;
      }
    }
    return true;
  }

  /// First vertices of all maximal paths, ascending.
  std::vector<vertex_id> path_starts() const
  {
    std::vector<vertex_id> out;
    for (vertex_id v = 0; v < vertex_count(); ++v) {
      if (is_start(v)) {
        out.push_back(v);
      }
    }
    return out;
  }

  /// Vertices of the maximal path starting at `start`.
  std::vector<vertex_id> path(vertex_id start) const
  {
    require_start(start);
    std::vector<vertex_id> out;
    for (vertex_id v = start; v != no_vertex; v = succ_[v]) {
      out.push_back(v);
    }
    return out;
  }

  std::vector<arc> arcs() const
  {
    std::vector<arc> out;
    for (vertex_id v = 0; v < vertex_count(); ++v) {
      if (succ_[v] != no_vertex) {
        out.push_back({v, succ_[v], succ_weight_[v]});
      }
    }
    return out;
  }

  void require_start(vertex_id v) const
  {
    if (v >= vertex_count() || !is_start(v)) {
      throw precondition_error(
        "vertex " + std::to_string(v) + " does not start a path");
    }
  }

 private:
  void link(arc const& e)
  {
    vertex_id const first = other_end_[e.from];
    vertex_id const last = other_end_[e.to];
    succ_[e.from] = e.to;
    pred_[e.to] = e.from;
    succ_weight_[e.from] = e.weight;
    other_end_[first] = last;
    other_end_[last] = first;
    ++arcs_;
  }

  std::vector<vertex_id> succ_;
  std::vector<vertex_id> pred_;
  std::vector<vertex_id> other_end_;
  std::vector<std::size_t> succ_weight_;
  std::size_t arcs_ = 0;
};

inline bool can_add(path_collection const& pc, arc const& e)
{
  return pc.can_add(e);
}

inline void add_arc_pair(path_collection& pc, arc const& e)
{
  pc.add_arc_pair(e);
}

/// Superstring spelled by the maximal path starting at `start`.
inline std::string path_string(
  overlap_graph const& g, path_collection const& pc, vertex_id start)
{
  pc.require_start(start);
  std::string out = g.str(start);
  for (vertex_id v = start; pc.successor(v) != no_vertex; v = pc.successor(v)) {
    out.append(std::string_view(g.str(pc.successor(v))).substr(pc.successor_weight(v)));
  }
  return out;
}

/// Total arc weight of the maximal path starting at `start`.
inline std::size_t path_overlap(path_collection const& pc, vertex_id start)
{
  pc.require_start(start);
  std::size_t total = 0;
  for (vertex_id v = start; pc.successor(v) != no_vertex; v = pc.successor(v)) {
    total += pc.successor_weight(v);
  }
  return total;
}

/// The path visits exactly one vertex of every mate pair.
inline bool is_semi_hamiltonian(
  overlap_graph const& g, path_collection const& pc, vertex_id start)
{
  std::vector<bool> seen(g.string_count(), false);
  std::size_t visited = 0;
  for (vertex_id v : pc.path(start)) {
    auto const id = overlap_graph::string_id(v);
    if (seen[id]) {
      return false;
    }
    seen[id] = true;
    ++visited;
  }
  return visited == g.string_count();
}

/// Graphviz rendering of the path collection. Vertices are labelled with the
/// string id plus an `R` for reversed orientation; arcs with their weight.
inline std::string to_dot(overlap_graph const& g, path_collection const& pc)
{
  std::ostringstream out;
  out << "digraph paths {\n  rankdir=LR;\n";
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v << " [label=\"" << overlap_graph::label(v) << "\"];\n";
  }
  for (auto const& e : pc.arcs()) {
    out << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.weight
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace scsr
