#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace qcwalk {

enum class GraphFamily { Complete, Cycle, Star, Path, Custom };

std::string to_string(GraphFamily family);
GraphFamily family_from_string(const std::string& name);

/// Finite simple undirected connected graph on nodes labeled 1..N.
///
/// The star convention places the hub at node 1; the cycle connects node j
/// to j +- 1 (mod N). Instances are immutable after construction and safe
/// to share across threads.
class Graph {
 public:
  static Graph complete(int n);
  static Graph cycle(int n);           // requires n >= 3
  static Graph star(int n);            // node 1 is the hub
  static Graph path(int n);            // 1 - 2 - ... - n
  static Graph from_family(GraphFamily family, int n);

  /// Builds a graph from an explicit edge list (1-based labels).
  /// Rejects self-loops, duplicate edges, out-of-range labels and
  /// disconnected graphs.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          GraphFamily tag = GraphFamily::Custom);

  int size() const { return n_; }
  GraphFamily family() const { return family_; }

  /// Edges normalized as (min,max) pairs, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool adjacent(int j, int k) const;   // 1-based labels
  int degree(int j) const;             // 1-based label

  Eigen::MatrixXd adjacency() const;
  Eigen::MatrixXd degree_matrix() const;

  /// Combinatorial Laplacian L = D - A (transition rate fixed to 1).
  Eigen::MatrixXd laplacian() const;

 private:
  Graph(int n, std::vector<std::pair<int, int>> edges, GraphFamily family);

  int n_;
  GraphFamily family_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> degrees_;
  std::vector<unsigned char> adj_;     // row-major n*n adjacency flags
};

}  // namespace qcwalk
