#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zgraph/group.hpp"

namespace zgraph {

enum class GraphKind { cyclic, commuting, enhanced_power };
const char* to_string(GraphKind kind);

struct DiameterResult {
  enum class Kind { finite, disconnected, empty };
  Kind kind = Kind::empty;
  int value = 0;  // meaningful only for finite

  static DiameterResult finite(int d) { return {Kind::finite, d}; }
  static DiameterResult disconnected() { return {Kind::disconnected, 0}; }
  static DiameterResult empty() { return {Kind::empty, 0}; }

  bool is_finite() const { return kind == Kind::finite; }
  bool finite_at_most(int d) const { return is_finite() && value <= d; }
  std::string str() const;

  friend bool operator==(const DiameterResult&, const DiameterResult&) = default;
};

/// Undirected graph on a labeled subset of group elements. Adjacency is one
/// bit row per vertex, so neighborhood unions are word-parallel.
class Graph {
 public:
  Graph() = default;
  Graph(GraphKind kind, std::string group_name, std::vector<int> labels,
        std::vector<int> label_orders);

  GraphKind kind() const { return kind_; }
  const std::string& group_name() const { return group_name_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& vertices() const { return labels_; }
  int label(int pos) const { return labels_[pos]; }
  int label_order(int pos) const { return label_orders_[pos]; }
  /// Position of an element label, or -1 if not a vertex.
  int position(int label) const;

  void add_edge(int a, int b);
  void toggle_edge(int a, int b);
  /// Builder support: OR a clique mask into one row, self bit excluded.
  /// Callers apply the same mask to every member so symmetry is preserved.
  void or_row(int pos, std::span<const std::uint64_t> mask);
  bool adjacent(int a, int b) const {
    return (bits_[static_cast<std::size_t>(a) * words_ + (b >> 6)] >>
            (b & 63)) & 1u;
  }
  int degree(int pos) const;
  std::int64_t edge_count() const;
  int words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(int pos) const {
    return {bits_.data() + static_cast<std::size_t>(pos) * words_,
            static_cast<std::size_t>(words_)};
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  GraphKind kind_ = GraphKind::cyclic;
  std::string group_name_;
  std::vector<int> labels_;
  std::vector<int> label_orders_;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Vertices: all nonidentity elements; edge iff the pair generates a cyclic
/// subgroup. Built by marking the clique of every cyclic subgroup <z>.
/// Requires |g| >= 2.
Graph cyclic_graph(const FiniteGroup& g);
/// Pairwise cyclic_pair construction, kept as the differential reference.
Graph cyclic_graph_naive(const FiniteGroup& g);

/// Vertices: noncentral elements; edge iff the pair commutes. Defined for
/// nonabelian groups only.
Graph commuting_graph(const FiniteGroup& g);

/// Cyclic-subgroup edge rule over all of g, identity included; connected for
/// every group.
Graph enhanced_power_graph(const FiniteGroup& g);

/// BFS partition; components ordered by least vertex label.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Longest shortest path over all vertex pairs, per-vertex BFS with
/// word-parallel frontier expansion.
DiameterResult diameter(const Graph& g);

/// Labels of vertices adjacent to every other vertex. The lone vertex of a
/// one-vertex graph qualifies.
std::vector<int> dominating_vertices(const Graph& g);

/// Deterministic DOT output: one node line per vertex (label and element
/// order), one sorted edge line per edge.
void export_dot(const Graph& g, std::ostream& os);
void export_dot(const Graph& g, const std::filesystem::path& path);

/// Plain "u v" edge lines, sorted. Isolated vertices are not represented;
/// use DOT when they matter.
void export_edge_list(const Graph& g, std::ostream& os);
void export_edge_list(const Graph& g, const std::filesystem::path& path);

struct EdgeList {
  std::vector<int> vertices;                 // sorted, deduplicated
  std::vector<std::pair<int, int>> edges;    // normalized (min,max), sorted
};

/// Reads plain edge lines and the node/edge lines of our DOT output, so a
/// DOT export round-trips through this reader.
EdgeList read_edge_list(std::istream& is);

}  // namespace zgraph
