#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lrank {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with sorted neighbour lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Self-loops are rejected, duplicate edges collapse.
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return m_; }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  // Each edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
  std::size_t m_ = 0;
};

struct Layering {
  std::vector<std::vector<int>> layers;
  std::vector<int> layer_of;

  int depth() const { return static_cast<int>(layers.size()) - 1; }
};

Layering bfs_layering(const Graph& g, const std::vector<int>& roots);

Graph graph_power(const Graph& g, int k);

// Vertex ids are mixed-radix with the first factor most significant.
struct ProductGraph {
  Graph graph;
  std::vector<int> radices;

  std::vector<int> coords(int v) const;
  int index(const std::vector<int>& coords) const;
};

ProductGraph strong_product(const std::vector<Graph>& factors);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // local id -> id in the original graph
};

// Local ids follow the order of `s` after sorting and deduplication.
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> s);

// Connected components, each sorted; components ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// PACE .gr format. Labels travel in `c label <v> <text>` comment lines.
Graph read_gr(std::istream& in);
void write_gr(std::ostream& out, const Graph& g);
Graph read_gr_file(const std::string& path);
void write_gr_file(const std::string& path, const Graph& g);

}  // namespace lrank
