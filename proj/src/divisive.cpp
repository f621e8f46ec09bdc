#include "specomm/divisive.hpp"

#include <algorithm>
#include <cstdint>

#include "specomm/errors.hpp"

namespace specomm {

std::optional<std::uint64_t> NodeNumber::value() const {
  if (bits_.size() > 64) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : bits_) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  return v;
}

DivisionTree::DivisionTree(std::size_t vertex_count, const Partition& initial)
    : vertex_count_(vertex_count) {
  if (initial.universe_size() != vertex_count) {
    throw ValidationError("initial communities do not cover the vertex set");
  }
  std::vector<Vertex> all(vertex_count);
  for (Vertex v = 0; v < vertex_count; ++v) all[v] = v;

  const std::size_t c = initial.size();
  if (c <= 1) {
    nodes_.emplace(NodeNumber::root(), DivisionNode{std::move(all), NodeStatus::kLiveLeaf});
    live_.push_back(NodeNumber::root());
    return;
  }
  nodes_.emplace(NodeNumber::root(), DivisionNode{std::move(all), NodeStatus::kInternal});
  NodeNumber chain = NodeNumber::root();
  for (std::size_t i = 0; i + 1 < c; ++i) {
    nodes_.emplace(chain.left(), DivisionNode{initial.group(i), NodeStatus::kLiveLeaf});
    live_.push_back(chain.left());
    if (i + 2 == c) {
      nodes_.emplace(chain.right(), DivisionNode{initial.group(i + 1), NodeStatus::kLiveLeaf});
      live_.push_back(chain.right());
      break;
    }
    std::vector<Vertex> rest;
    for (std::size_t j = i + 1; j < c; ++j) {
      rest.insert(rest.end(), initial.group(j).begin(), initial.group(j).end());
    }
    std::sort(rest.begin(), rest.end());
    nodes_.emplace(chain.right(), DivisionNode{std::move(rest), NodeStatus::kInternal});
    chain = chain.right();
  }
}

const DivisionNode* DivisionTree::find(const NodeNumber& number) const {
  auto it = nodes_.find(number);
  return it == nodes_.end() ? nullptr : &it->second;
}

const DivisionNode& DivisionTree::at(const NodeNumber& number) const {
  if (const DivisionNode* node = find(number)) return *node;
  throw AlgorithmError("no division-tree node numbered " + number.bits() + " (binary)");
}

bool DivisionTree::has_sentinels(const NodeNumber& number) const {
  return nodes_.count(number.left()) != 0;
}

void DivisionTree::attach_sentinels(const NodeNumber& number, std::vector<Vertex> first,
                                    std::vector<Vertex> second) {
  if (at(number).status != NodeStatus::kLiveLeaf) {
    throw AlgorithmError("sentinels can only be attached to a live community");
  }
  if (has_sentinels(number)) throw AlgorithmError("community already bisected");
  nodes_.emplace(number.left(), DivisionNode{std::move(first), NodeStatus::kSentinel});
  nodes_.emplace(number.right(), DivisionNode{std::move(second), NodeStatus::kSentinel});
}

void DivisionTree::accept_split(const NodeNumber& number) {
  auto it = nodes_.find(number);
  if (it == nodes_.end() || it->second.status != NodeStatus::kLiveLeaf || !has_sentinels(number)) {
    throw AlgorithmError("split accepted for a community without a cached bisection");
  }
  it->second.status = NodeStatus::kInternal;
  nodes_.at(number.left()).status = NodeStatus::kLiveLeaf;
  nodes_.at(number.right()).status = NodeStatus::kLiveLeaf;
  auto pos = std::find(live_.begin(), live_.end(), number);
  pos = live_.erase(pos);
  live_.insert(pos, {number.left(), number.right()});
}

Partition DivisionTree::communities() const {
  std::vector<std::vector<Vertex>> groups;
  groups.reserve(live_.size());
  for (const auto& leaf : live_) groups.push_back(at(leaf).vertices);
  return Partition(vertex_count_, std::move(groups)).canonical();
}

namespace {

// Edge and degree tallies of a vertex set on the scoring graph.
struct GroupTally {
  std::int64_t internal_edges = 0;
  std::int64_t volume = 0;
};

class SplitScorer {
 public:
  explicit SplitScorer(const Graph& scoring)
      : graph_(scoring), mark_(scoring.vertex_count(), 0),
        two_m_(2 * static_cast<std::int64_t>(scoring.edge_count())) {}

  GroupTally tally(const std::vector<Vertex>& group) {
    ++stamp_;
    for (Vertex v : group) mark_[v] = stamp_;
    GroupTally t;
    for (Vertex v : group) {
      t.volume += static_cast<std::int64_t>(graph_.degree(v));
      for (Vertex w : graph_.neighbors(v)) {
        if (v < w && mark_[w] == stamp_) ++t.internal_edges;
      }
    }
    return t;
  }

  /// Modularity gain of replacing `whole` by `first` and `second`, scaled by
  /// 4 m^2 so that it is an exact integer.
  std::int64_t scaled_gain(const GroupTally& whole, const GroupTally& first, const GroupTally& second) const {
    const std::int64_t edge_term =
        2 * two_m_ * (first.internal_edges + second.internal_edges - whole.internal_edges);
    const std::int64_t volume_term =
        first.volume * first.volume + second.volume * second.volume - whole.volume * whole.volume;
    return edge_term - volume_term;
  }

 private:
  const Graph& graph_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::int64_t two_m_;
};

}  // namespace

DetectResult detect(const Graph& g, const DetectConfig& cfg, const Graph& original) {
  if (g.empty()) throw ValidationError("community detection on an empty graph");
  if (cfg.k == 0) throw ValidationError("the number of communities must be at least 1");
  if (cfg.k > g.vertex_count()) {
    throw ValidationError("requested " + std::to_string(cfg.k) + " communities but the graph has only " +
                          std::to_string(g.vertex_count()) + " vertices");
  }
  if (original.labels() != g.labels()) {
    throw ValidationError("original graph has a different vertex set");
  }

  DetectResult result;
  const Partition components = connected_components(g);
  result.initial_components = components.size();
  result.tree = DivisionTree(g.vertex_count(), components);
  result.history.push_back(result.tree.communities());
  if (components.size() >= cfg.k) {
    result.components_exceeded_k = components.size() > cfg.k;
    result.partition = result.history.back();
    return result;
  }

  const Graph& scoring = cfg.modularity_graph == SelectionGraph::kOriginal ? original : g;
  if (scoring.edge_count() == 0) {
    throw ValidationError("modularity is undefined on an edgeless scoring graph");
  }
  SplitScorer scorer(scoring);
  DivisionTree& tree = result.tree;

  while (tree.live_leaves().size() < cfg.k) {
    // Bisect every community seen for the first time; others reuse their sentinels.
    for (const NodeNumber& leaf : std::vector<NodeNumber>(tree.live_leaves())) {
      const auto& members = tree.at(leaf).vertices;
      if (members.size() < 2 || tree.has_sentinels(leaf)) continue;
      const Graph sub = induced_subgraph(g, members);
      Bisection halves = spectra_bisection(sub, cfg.solver);
      for (Vertex& v : halves.first) v = members[v];
      for (Vertex& v : halves.second) v = members[v];
      result.bisected.push_back(members);
      tree.attach_sentinels(leaf, std::move(halves.first), std::move(halves.second));
    }

    std::optional<NodeNumber> best;
    std::int64_t best_gain = 0;
    Vertex best_min = 0;
    for (const NodeNumber& leaf : tree.live_leaves()) {
      const auto& members = tree.at(leaf).vertices;
      if (members.size() < 2) continue;
      const std::int64_t gain =
          scorer.scaled_gain(scorer.tally(members), scorer.tally(tree.at(leaf.left()).vertices),
                             scorer.tally(tree.at(leaf.right()).vertices));
      if (!best || gain > best_gain || (gain == best_gain && members.front() < best_min)) {
        best = leaf;
        best_gain = gain;
        best_min = members.front();
      }
    }
    if (!best) {
      result.ran_out_of_splits = true;
      break;
    }
    tree.accept_split(*best);
    result.history.push_back(tree.communities());
  }

  result.partition = tree.communities();
  return result;
}

PipelineResult run_pipeline(const Graph& g, std::optional<double> theta, std::size_t k, Mode mode,
                            SelectionGraph selection, const SolverConfig& solver) {
  DetectConfig cfg{k, selection, solver};
  PipelineResult out;
  if (mode == Mode::kLite) {
    out.detection = detect(g, cfg, g);
    return out;
  }
  out.sparsified = sparsify(g, SparsifyConfig{theta.value_or(kDefaultTheta)});
  out.detection = detect(out.sparsified->graph, cfg, g);
  return out;
}

}  // namespace specomm
