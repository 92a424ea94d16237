// Quivers: labeled directed multigraphs, path enumeration, strongly
// connected components, and the bipartition/ordering combinatorics used to
// seed stratification candidates.
#pragma once

#include <string>
#include <vector>

#include "stratakit/field.hpp"

namespace stratakit {

struct Arrow {
  std::string label;
  int src = -1;
  int tgt = -1;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;
  // Throws InputError on duplicate labels or dangling endpoints.
  void validate() const;
  bool is_acyclic() const;
};

// A path stores its arrows in application order: arrows[0] is traversed
// first. The printed label reads right-to-left ("b*a" applies a first), and
// a trivial path at vertex v prints as "e_v".
struct Path {
  int source = -1;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }
  int target(const Quiver& q) const;
  std::string label(const Quiver& q) const;
  bool operator==(const Path&) const = default;
};

// Concatenation "q then p": defined when q ends where p starts.
bool composable(const Quiver& qv, const Path& p, const Path& q);
Path compose(const Quiver& qv, const Path& p, const Path& q);

// All paths of length <= max_len, ordered by length, then lexicographically
// on the arrow-label sequence in application order; trivial paths sort by
// vertex label. Throws InputError past `limit` paths.
std::vector<Path> enumerate_paths(const Quiver& q, int max_len,
                                  std::size_t limit = 500000);

// reach[v][w] = true iff a path of length >= 1 runs from v to w.
std::vector<std::vector<bool>> positive_reachability(const Quiver& q);

// Strongly connected components, listed sources-first: no arrow runs from a
// later class to an earlier one. Ties broken by smallest member label.
// Vertices inside a class are sorted by label.
std::vector<std::vector<int>> condensation(const Quiver& q);

// A two-block vertex partition with no path from the lower block to the
// upper block (the lower block only receives).
struct VertexBipartition {
  std::vector<int> lower;
  std::vector<int> upper;
};

// Every nontrivial directed bipartition, sorted by lower-block size then by
// the lower block's label sequence. Empty exactly when the condensation has
// a single class.
std::vector<VertexBipartition> directed_bipartitions(const Quiver& q);

// The condensation classes themselves: the finest vertex ordering whose
// summed idempotents can satisfy the one-directional condition.
std::vector<std::vector<int>> finest_stratification_order(const Quiver& q);

}  // namespace stratakit
