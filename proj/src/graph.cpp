#include "specomm/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "specomm/errors.hpp"

namespace specomm {

namespace {

bool is_integer_label(std::string_view s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Compares two integer labels by value without overflow.
int compare_integer_labels(std::string_view a, std::string_view b) {
  const bool neg_a = a[0] == '-';
  const bool neg_b = b[0] == '-';
  auto digits = [](std::string_view s) {
    if (s[0] == '-' || s[0] == '+') s.remove_prefix(1);
    while (s.size() > 1 && s[0] == '0') s.remove_prefix(1);
    return s;
  };
  std::string_view da = digits(a);
  std::string_view db = digits(b);
  const bool zero_a = da == "0";
  const bool zero_b = db == "0";
  const bool really_neg_a = neg_a && !zero_a;
  const bool really_neg_b = neg_b && !zero_b;
  if (really_neg_a != really_neg_b) return really_neg_a ? -1 : 1;
  int magnitude = 0;
  if (da.size() != db.size()) {
    magnitude = da.size() < db.size() ? -1 : 1;
  } else {
    int c = da.compare(db);
    magnitude = (c > 0) - (c < 0);
  }
  return really_neg_a ? -magnitude : magnitude;
}

// Splits a line into whitespace-separated tokens. Returns false for blank and
// comment lines.
bool tokenize(const std::string& line, std::vector<std::string>& tokens) {
  tokens.clear();
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return !tokens.empty() && tokens.front()[0] != '#';
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
  const bool ia = is_integer_label(a);
  const bool ib = is_integer_label(b);
  if (ia != ib) return ia;
  if (ia) {
    int c = compare_integer_labels(a, b);
    if (c != 0) return c < 0;
  }
  return a < b;
}

Graph Graph::from_labeled_edges(std::span<const std::pair<std::string, std::string>> edges,
                                std::span<const std::string> extra_vertices) {
  std::vector<std::string> labels(extra_vertices.begin(), extra_vertices.end());
  labels.reserve(labels.size() + 2 * edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw ValidationError("self-loop on vertex '" + a + "'");
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end(),
            [](const std::string& x, const std::string& y) { return label_less(x, y); });
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  Graph g;
  g.labels_ = std::move(labels);
  g.index_.reserve(g.labels_.size());
  for (Vertex i = 0; i < g.labels_.size(); ++i) g.index_.emplace(g.labels_[i], i);
  g.adjacency_.resize(g.labels_.size());
  for (const auto& [a, b] : edges) {
    Vertex u = g.index_.at(a);
    Vertex v = g.index_.at(b);
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t half_degree_sum = 0;
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    half_degree_sum += adj.size();
  }
  g.edge_count_ = half_degree_sum / 2;
  return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.labels_.reserve(n);
  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.labels_.push_back(std::to_string(i));
    g.index_.emplace(g.labels_.back(), static_cast<Vertex>(i));
  }
  g.adjacency_.resize(n);
  for (const auto& [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw ValidationError("self-loop on vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t half_degree_sum = 0;
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    half_degree_sum += adj.size();
  }
  g.edge_count_ = half_degree_sum / 2;
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= labels_.size()) {
    throw ValidationError("unknown vertex index " + std::to_string(v));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

const std::string& Graph::label(Vertex v) const {
  check_vertex(v);
  return labels_[v];
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw ValidationError("unknown vertex '" + std::string(label) + "'");
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) {
    throw ValidationError("edge (" + label(u) + ", " + label(v) + ") is not present");
  }
  auto erase = [](std::vector<Vertex>& adj, Vertex x) {
    adj.erase(std::lower_bound(adj.begin(), adj.end(), x));
  };
  erase(adjacency_[u], v);
  erase(adjacency_[v], u);
  --edge_count_;
}

Partition::Partition(std::size_t universe, std::vector<std::vector<Vertex>> groups)
    : universe_(universe), groups_(std::move(groups)) {
  std::vector<bool> seen(universe_, false);
  std::size_t covered = 0;
  for (auto& group : groups_) {
    if (group.empty()) throw ValidationError("partition contains an empty group");
    std::sort(group.begin(), group.end());
    for (Vertex v : group) {
      if (v >= universe_) {
        throw ValidationError("partition vertex " + std::to_string(v) + " outside universe");
      }
      if (seen[v]) {
        throw ValidationError("vertex " + std::to_string(v) + " appears in two groups");
      }
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != universe_) {
    throw ValidationError("partition covers " + std::to_string(covered) + " of " +
                          std::to_string(universe_) + " vertices");
  }
}

std::vector<std::size_t> Partition::membership() const {
  std::vector<std::size_t> of(universe_);
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    for (Vertex v : groups_[i]) of[v] = i;
  }
  return of;
}

Partition Partition::canonical() const {
  Partition p = *this;
  std::sort(p.groups_.begin(), p.groups_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return p;
}

bool same_grouping(const Partition& a, const Partition& b) {
  return a.canonical() == b.canonical();
}

Graph load_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!tokenize(line, tokens)) continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two vertex labels, got " + std::to_string(tokens.size()) +
                                    " fields");
    }
    if (tokens[0] == tokens[1]) {
      throw ValidationError("line " + std::to_string(line_no) + ": self-loop on vertex '" +
                            tokens[0] + "'");
    }
    edges.emplace_back(std::move(tokens[0]), std::move(tokens[1]));
  }
  if (in.bad()) throw DataError("read error while loading edge list");
  return Graph::from_labeled_edges(edges);
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open edge list '" + path.string() + "'");
  return load_edge_list(in);
}

Partition load_partition(std::istream& in, const Graph& g) {
  std::vector<std::optional<std::size_t>> group_of(g.vertex_count());
  std::unordered_map<std::string, std::size_t> group_index;
  std::vector<std::vector<Vertex>> groups;
  std::vector<std::string> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!tokenize(line, tokens)) continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 'vertex group', got " + std::to_string(tokens.size()) +
                                    " fields");
    }
    auto v = g.find(tokens[0]);
    if (!v) {
      throw ValidationError("line " + std::to_string(line_no) + ": vertex '" + tokens[0] +
                            "' is not in the graph");
    }
    auto [it, inserted] = group_index.try_emplace(tokens[1], groups.size());
    if (inserted) groups.emplace_back();
    if (group_of[*v]) {
      if (*group_of[*v] != it->second) {
        throw ValidationError("line " + std::to_string(line_no) + ": vertex '" + tokens[0] +
                              "' assigned to two groups");
      }
      continue;
    }
    group_of[*v] = it->second;
    groups[it->second].push_back(*v);
  }
  if (in.bad()) throw DataError("read error while loading partition");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!group_of[v]) {
      throw ValidationError("vertex '" + g.label(v) + "' missing from partition file");
    }
  }
  return Partition(g.vertex_count(), std::move(groups));
}

Partition load_partition(const std::filesystem::path& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open partition file '" + path.string() + "'");
  return load_partition(in, g);
}

void write_partition(std::ostream& out, const Graph& g, const Partition& p) {
  auto of = p.membership();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << g.label(v) << ' ' << (of[v] + 1) << '\n';
  }
}

Partition connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> visited(n, false);
  std::vector<std::vector<Vertex>> groups;
  std::queue<Vertex> frontier;
  for (Vertex s = 0; s < n; ++s) {
    if (visited[s]) continue;
    std::vector<Vertex> component;
    visited[s] = true;
    frontier.push(s);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      component.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!visited[w]) {
          visited[w] = true;
          frontier.push(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    groups.push_back(std::move(component));
  }
  // Discovery order already sorts ties by smallest vertex; stable_sort keeps it.
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return Partition(n, std::move(groups));
}

bool is_connected(const Graph& g) {
  return g.vertex_count() > 0 && connected_components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  if (subset.empty()) throw ValidationError("induced subgraph of an empty vertex set");
  std::vector<Vertex> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Vertex v : members) {
    if (v >= g.vertex_count()) {
      throw ValidationError("unknown vertex index " + std::to_string(v));
    }
  }

  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> labels;
  labels.reserve(members.size());
  for (Vertex u : members) {
    labels.push_back(g.label(u));
    for (Vertex w : g.neighbors(u)) {
      if (u < w && std::binary_search(members.begin(), members.end(), w)) {
        edges.emplace_back(g.label(u), g.label(w));
      }
    }
  }
  return Graph::from_labeled_edges(edges, labels);
}

}  // namespace specomm
