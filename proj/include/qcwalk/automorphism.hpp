#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qcwalk/graph.hpp"
#include "qcwalk/spectrum.hpp"

namespace qcwalk {

/// A permutation of {1..n} stored 0-based: perm[j] = image of node j+1, minus 1.
using Permutation = std::vector<int>;

/// Cycle-type statistics of one permutation.
struct CycleCounts {
  int odd_cycles = 0;    // cycles of odd length, fixed points included
  int even_cycles = 0;
  int bound() const { return odd_cycles + 2 * even_cycles; }
};

CycleCounts cycle_counts(const Permutation& perm);

/// Visit every adjacency-preserving permutation of the graph's nodes.
/// Enumeration streams: the visitor is called once per automorphism and may
/// return false to stop early. Backtracking prunes on degree mismatch and
/// partial-adjacency violation, so regular graphs are the worst case.
void for_each_automorphism(const Graph& g,
                           const std::function<bool(const Permutation&)>& visit);

/// Materialized automorphism group, capped to keep memory honest.
struct AutomorphismReport {
  std::vector<Permutation> elements;   // identity first
  std::uint64_t order = 0;
  int best_bound = 0;                  // min over elements of s + 2t
  Permutation best_element;            // attains best_bound
};

AutomorphismReport enumerate_automorphisms(const Graph& g, int max_n = 10);

/// Outcome of testing the spectral bound: every automorphism with s odd and
/// t even cycles forces at most s + 2t simple Laplacian eigenvalues, so the
/// bound must hold with the group minimum of s + 2t.
struct TheoremCheck {
  int simple_count = 0;
  std::uint64_t automorphism_count = 0;
  int best_bound = 0;        // min over the group of s + 2t
  Permutation best_element;  // attains best_bound
  int min_margin = 0;        // best_bound - simple_count
  bool holds = false;        // min_margin >= 0, i.e. no automorphism violates
};

TheoremCheck check_simple_eigenvalue_bound(const Graph& g, const Spectrum& s,
                                           int max_n = 10);

}  // namespace qcwalk
