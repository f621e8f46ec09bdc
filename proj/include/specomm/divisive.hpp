#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "specomm/graph.hpp"
#include "specomm/sparsifier.hpp"
#include "specomm/spectral.hpp"

namespace specomm {

/// Graph on which candidate splits are scored.
enum class SelectionGraph {
  kPartitioned,  ///< the graph being divided (the sparsified one in complete mode)
  kOriginal,     ///< the network before sparsification
};

struct DetectConfig {
  std::size_t k = 2;
  SelectionGraph modularity_graph = SelectionGraph::kPartitioned;
  SolverConfig solver;
};

/// Node number in a logically complete binary tree: the root is 1 and the
/// children of j are 2j and 2j+1. Stored as its binary digits so depth is
/// not bounded by a machine word.
class NodeNumber {
 public:
  NodeNumber() = default;
  static NodeNumber root() { return NodeNumber("1"); }

  NodeNumber left() const { return NodeNumber(bits_ + '0'); }
  NodeNumber right() const { return NodeNumber(bits_ + '1'); }
  std::size_t depth() const { return bits_.size() - 1; }
  const std::string& bits() const { return bits_; }
  /// Numeric value if it fits in 64 bits.
  std::optional<std::uint64_t> value() const;

  friend bool operator==(const NodeNumber&, const NodeNumber&) = default;

 private:
  explicit NodeNumber(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_ = "1";
};

struct NodeNumberHash {
  std::size_t operator()(const NodeNumber& n) const { return std::hash<std::string>{}(n.bits()); }
};

enum class NodeStatus {
  kLiveLeaf,  ///< a community of the current structure
  kInternal,  ///< already divided
  kSentinel,  ///< cached half of a live leaf's bisection, not yet accepted
};

struct DivisionNode {
  std::vector<Vertex> vertices;  ///< sorted
  NodeStatus status = NodeStatus::kLiveLeaf;
};

/// Record of the whole division process.
///
/// Every live leaf caches its bisection as two sentinel children the first
/// time it is evaluated; accepting a split turns the sentinels into live
/// leaves. Nodes are found by number through a hash table.
class DivisionTree {
 public:
  DivisionTree() = default;
  /// Root = all vertices. With several initial communities the first becomes
  /// the root's left child and the rest hang off the right child, recursively.
  DivisionTree(std::size_t vertex_count, const Partition& initial);

  const DivisionNode* find(const NodeNumber& number) const;
  const DivisionNode& at(const NodeNumber& number) const;
  bool has_sentinels(const NodeNumber& number) const;
  std::size_t node_count() const { return nodes_.size(); }

  /// Live leaves in a stable order (a split replaces its parent in place).
  const std::vector<NodeNumber>& live_leaves() const { return live_; }

  void attach_sentinels(const NodeNumber& number, std::vector<Vertex> first, std::vector<Vertex> second);
  /// Accepts the cached bisection of a live leaf.
  void accept_split(const NodeNumber& number);

  /// Current community structure, groups ordered by smallest vertex.
  Partition communities() const;

  const std::unordered_map<NodeNumber, DivisionNode, NodeNumberHash>& nodes() const { return nodes_; }

 private:
  std::size_t vertex_count_ = 0;
  std::unordered_map<NodeNumber, DivisionNode, NodeNumberHash> nodes_;
  std::vector<NodeNumber> live_;
};

struct DetectResult {
  Partition partition;
  std::size_t initial_components = 0;
  bool components_exceeded_k = false;  ///< more components than K; returned unchanged
  bool ran_out_of_splits = false;      ///< only singletons left before reaching K
  /// Every vertex set handed to spectra_bisection, in call order.
  std::vector<std::vector<Vertex>> bisected;
  /// Community structure after each accepted split, starting with the components.
  std::vector<Partition> history;
  DivisionTree tree;
};

/// Repeated spectral bisection.
///
/// Starts from the connected components of `g` and, while fewer than K
/// communities exist, splits the community whose bisection yields the largest
/// modularity (scored on `g` or `original` per cfg.modularity_graph; ties go to
/// the community holding the smallest vertex). `original` must have the same
/// vertex labels as `g`.
DetectResult detect(const Graph& g, const DetectConfig& cfg, const Graph& original);
inline DetectResult detect(const Graph& g, const DetectConfig& cfg) { return detect(g, cfg, g); }

enum class Mode {
  kLite,      ///< bisection only
  kComplete,  ///< sparsification, then bisection
};

struct PipelineResult {
  DetectResult detection;
  std::optional<SparsifyResult> sparsified;  ///< present in complete mode
};

PipelineResult run_pipeline(const Graph& g, std::optional<double> theta, std::size_t k, Mode mode,
                            SelectionGraph selection = SelectionGraph::kPartitioned,
                            const SolverConfig& solver = {});

}  // namespace specomm
