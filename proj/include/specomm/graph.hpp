#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace specomm {

/// Dense internal vertex index, 0..n-1.
using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Natural ordering on vertex labels: integer labels compare numerically and
/// sort before all other labels, which compare lexicographically.
bool label_less(std::string_view a, std::string_view b);

/// Undirected simple graph with string labels.
///
/// Dense indices follow the natural label order, so index order and label
/// order agree everywhere and construction does not depend on the order in
/// which edges are supplied. Adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from labelled edges. Isolated vertices can be supplied in
  /// `extra_vertices`. Duplicate edges collapse; self-loops throw
  /// ValidationError.
  static Graph from_labeled_edges(std::span<const std::pair<std::string, std::string>> edges,
                                  std::span<const std::string> extra_vertices = {});

  /// Graph on vertices labelled "0".."n-1".
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return labels_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;
  /// Like find() but throws ValidationError for unknown labels.
  Vertex index_of(std::string_view label) const;

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Removes an existing edge; throws ValidationError if it is absent.
  void remove_edge(Vertex u, Vertex v);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Disjoint, nonempty vertex groups covering 0..universe-1.
class Partition {
 public:
  Partition() = default;
  /// Validates the groups; throws ValidationError if they are not a partition
  /// of the universe. Vertices inside each group are sorted; group order is kept.
  Partition(std::size_t universe, std::vector<std::vector<Vertex>> groups);

  std::size_t universe_size() const noexcept { return universe_; }
  std::size_t size() const noexcept { return groups_.size(); }
  const std::vector<std::vector<Vertex>>& groups() const noexcept { return groups_; }
  const std::vector<Vertex>& group(std::size_t i) const { return groups_.at(i); }

  /// Group index of every vertex.
  std::vector<std::size_t> membership() const;

  /// Same groups, ordered by their smallest vertex.
  Partition canonical() const;

  friend bool operator==(const Partition& a, const Partition& b) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::vector<Vertex>> groups_;
};

/// True when both partitions group the vertices identically, ignoring group order.
bool same_grouping(const Partition& a, const Partition& b);

Graph load_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& path);

/// Reads `vertex group` lines. Group labels become indices in first-appearance order.
Partition load_partition(std::istream& in, const Graph& g);
Partition load_partition(const std::filesystem::path& path, const Graph& g);

/// Writes `vertex group` lines, groups numbered from 1 in partition order,
/// vertices in label order.
void write_partition(std::ostream& out, const Graph& g, const Partition& p);

/// Maximal connected vertex sets, largest first, ties by smallest vertex.
Partition connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Subgraph induced by `subset`. Vertex i of the result is the i-th smallest
/// element of `subset`; labels are preserved.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

}  // namespace specomm
