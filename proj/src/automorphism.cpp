#include "qcwalk/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "qcwalk/errors.hpp"

namespace qcwalk {

CycleCounts cycle_counts(const Permutation& perm) {
  CycleCounts counts;
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int v = start; !seen[v]; v = perm[v]) {
      seen[v] = 1;
      ++len;
    }
    (len % 2 ? counts.odd_cycles : counts.even_cycles) += 1;
  }
  return counts;
}

namespace {

// Depth-first assignment of images. Position i may map to any unused node of
// equal degree whose adjacencies to all already-placed nodes match.
bool extend(const Graph& g, Permutation& perm, std::vector<char>& used, int i,
            const std::function<bool(const Permutation&)>& visit) {
  const int n = g.size();
  if (i == n) return visit(perm);
  for (int image = 0; image < n; ++image) {
    if (used[image] || g.degree(image + 1) != g.degree(i + 1)) continue;
    bool ok = true;
    for (int j = 0; j < i; ++j) {
      if (g.adjacent(i + 1, j + 1) != g.adjacent(image + 1, perm[j] + 1)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    perm[i] = image;
    used[image] = 1;
    const bool keep_going = extend(g, perm, used, i + 1, visit);
    used[image] = 0;
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void for_each_automorphism(
    const Graph& g, const std::function<bool(const Permutation&)>& visit) {
  Permutation perm(g.size(), -1);
  std::vector<char> used(g.size(), 0);
  extend(g, perm, used, 0, visit);
}

AutomorphismReport enumerate_automorphisms(const Graph& g, int max_n) {
  if (g.size() > max_n) {
    throw SizeLimitError("automorphism enumeration capped at n = " +
                         std::to_string(max_n) + ", graph has " +
                         std::to_string(g.size()) + " nodes");
  }
  AutomorphismReport report;
  report.best_bound = g.size() + 1;
  for_each_automorphism(g, [&](const Permutation& perm) {
    report.elements.push_back(perm);
    const int bound = cycle_counts(perm).bound();
    if (bound < report.best_bound) {
      report.best_bound = bound;
      report.best_element = perm;
    }
    return true;
  });
  report.order = report.elements.size();

  // The identity enumerates first (images tried in ascending order), which
  // the report's consumers rely on.
  Permutation identity(g.size());
  std::iota(identity.begin(), identity.end(), 0);
  if (report.elements.empty() || report.elements.front() != identity) {
    throw NumericalError("automorphism enumeration lost the identity");
  }
  return report;
}

TheoremCheck check_simple_eigenvalue_bound(const Graph& g, const Spectrum& s,
                                           int max_n) {
  if (g.size() > max_n) {
    throw SizeLimitError("theorem check capped at n = " +
                         std::to_string(max_n) + ", graph has " +
                         std::to_string(g.size()) + " nodes");
  }
  TheoremCheck check;
  check.simple_count = degeneracy_report(s).simple_count;
  check.best_bound = g.size() + 1;
  for_each_automorphism(g, [&](const Permutation& perm) {
    ++check.automorphism_count;
    const int bound = cycle_counts(perm).bound();
    if (bound < check.best_bound) {
      check.best_bound = bound;
      check.best_element = perm;
    }
    return true;
  });
  check.min_margin = check.best_bound - check.simple_count;
  check.holds = check.min_margin >= 0;
  return check;
}

}  // namespace qcwalk
