#include "qcwalk/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qcwalk {

std::string to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::Complete: return "complete";
    case GraphFamily::Cycle: return "cycle";
    case GraphFamily::Star: return "star";
    case GraphFamily::Path: return "path";
    case GraphFamily::Custom: return "custom";
  }
  throw std::invalid_argument("unknown graph family");
}

GraphFamily family_from_string(const std::string& name) {
  if (name == "complete") return GraphFamily::Complete;
  if (name == "cycle") return GraphFamily::Cycle;
  if (name == "star") return GraphFamily::Star;
  if (name == "path") return GraphFamily::Path;
  if (name == "custom") return GraphFamily::Custom;
  throw std::invalid_argument("unknown graph family: \"" + name + "\"");
}

namespace {

void require_min_size(const char* family, int n, int min_n) {
  if (n < min_n) {
    throw std::invalid_argument(std::string(family) + " graph needs n >= " +
                                std::to_string(min_n) + ", got " +
                                std::to_string(n));
  }
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, GraphFamily family)
    : n_(n), family_(family), edges_(std::move(edges)) {
  for (auto& [j, k] : edges_) {
    if (j > k) std::swap(j, k);
    if (j < 1 || k > n_) {
      throw std::invalid_argument("edge (" + std::to_string(j) + "," +
                                  std::to_string(k) +
                                  ") out of range for n = " +
                                  std::to_string(n_));
    }
    if (j == k) {
      throw std::invalid_argument("self-loop at node " + std::to_string(j));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge in edge list");
  }

  degrees_.assign(n_, 0);
  adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (const auto& [j, k] : edges_) {
    ++degrees_[j - 1];
    ++degrees_[k - 1];
    adj_[static_cast<std::size_t>(j - 1) * n_ + (k - 1)] = 1;
    adj_[static_cast<std::size_t>(k - 1) * n_ + (j - 1)] = 1;
  }

  // Connectivity by DFS from node 1.
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n_; ++w) {
      if (adj_[static_cast<std::size_t>(v) * n_ + w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n_) {
    throw std::invalid_argument("graph is disconnected (" +
                                std::to_string(reached) + " of " +
                                std::to_string(n_) + " nodes reachable)");
  }
}

Graph Graph::complete(int n) {
  require_min_size("complete", n, 2);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) edges.emplace_back(j, k);
  return Graph(n, std::move(edges), GraphFamily::Complete);
}

Graph Graph::cycle(int n) {
  require_min_size("cycle", n, 3);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int j = 1; j < n; ++j) edges.emplace_back(j, j + 1);
  edges.emplace_back(n, 1);
  return Graph(n, std::move(edges), GraphFamily::Cycle);
}

Graph Graph::star(int n) {
  require_min_size("star", n, 2);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int k = 2; k <= n; ++k) edges.emplace_back(1, k);
  return Graph(n, std::move(edges), GraphFamily::Star);
}

Graph Graph::path(int n) {
  require_min_size("path", n, 2);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int j = 1; j < n; ++j) edges.emplace_back(j, j + 1);
  return Graph(n, std::move(edges), GraphFamily::Path);
}

Graph Graph::from_family(GraphFamily family, int n) {
  switch (family) {
    case GraphFamily::Complete: return complete(n);
    case GraphFamily::Cycle: return cycle(n);
    case GraphFamily::Star: return star(n);
    case GraphFamily::Path: return path(n);
    case GraphFamily::Custom: break;
  }
  throw std::invalid_argument("custom graphs need an explicit edge list");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        GraphFamily tag) {
  if (n < 2) {
    throw std::invalid_argument("graph needs n >= 2, got " + std::to_string(n));
  }
  return Graph(n, edges, tag);
}

bool Graph::adjacent(int j, int k) const {
  return adj_[static_cast<std::size_t>(j - 1) * n_ + (k - 1)] != 0;
}

int Graph::degree(int j) const { return degrees_[j - 1]; }

Eigen::MatrixXd Graph::adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& [j, k] : edges_) {
    a(j - 1, k - 1) = 1.0;
    a(k - 1, j - 1) = 1.0;
  }
  return a;
}

Eigen::MatrixXd Graph::degree_matrix() const {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n_, n_);
  for (int j = 0; j < n_; ++j) d(j, j) = degrees_[j];
  return d;
}

Eigen::MatrixXd Graph::laplacian() const {
  Eigen::MatrixXd l = degree_matrix();
  for (const auto& [j, k] : edges_) {
    l(j - 1, k - 1) = -1.0;
    l(k - 1, j - 1) = -1.0;
  }
  return l;
}

}  // namespace qcwalk
