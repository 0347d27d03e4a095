#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace oddcycle {

/// Edge x_{cycle,position}, both 1-based as in the usual labeling.
struct EdgeLabel {
  unsigned cycle = 0;
  unsigned position = 0;

  friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

/// "x1,3"
std::string to_string(const EdgeLabel& label);

/// n odd cycles of lengths 2k_i + 1, all glued at one hub vertex.
///
/// r[j-1] counts the cycles of length 2j+1; k lists one half-length per
/// cycle in cycle order. Edges are flattened to indices 0..2N+n-1, ordered by
/// cycle and then position, so index 0 is x_{1,1} and the flat order is the
/// variable order of the graded-lex monomial order (smaller index = larger
/// variable).
class OddCycleComposition {
 public:
  /// Cycles are ordered by descending length. Throws InvalidInput if every
  /// r_j is zero.
  static OddCycleComposition from_r(std::span<const unsigned> r);
  /// Keeps the given cycle order. Throws InvalidInput on any k_i == 0 or an
  /// empty list.
  static OddCycleComposition from_k(std::span<const unsigned> k);

  static OddCycleComposition from_r(std::initializer_list<unsigned> r) {
    return from_r(std::span<const unsigned>(r.begin(), r.size()));
  }
  static OddCycleComposition from_k(std::initializer_list<unsigned> k) {
    return from_k(std::span<const unsigned>(k.begin(), k.size()));
  }

  const std::vector<unsigned>& r() const { return r_; }
  const std::vector<unsigned>& k() const { return k_; }

  /// n
  unsigned num_cycles() const { return static_cast<unsigned>(k_.size()); }
  /// N = sum of k_i
  unsigned k_sum() const { return k_sum_; }
  /// 2N + n
  std::size_t num_edges() const { return 2 * std::size_t{k_sum_} + k_.size(); }
  /// 2N + 1
  std::size_t num_vertices() const { return 2 * std::size_t{k_sum_} + 1; }

  /// 1-based cycle, 1-based position in [1, 2k_cycle + 1].
  std::size_t edge_index(unsigned cycle, unsigned position) const;
  EdgeLabel label(std::size_t flat_index) const;

  /// Same cycles sorted by descending k.
  OddCycleComposition canonical() const;
  bool all_triangles() const { return k_sum_ == k_.size(); }

  friend bool operator==(const OddCycleComposition& a, const OddCycleComposition& b) {
    return a.k_ == b.k_;
  }

 private:
  OddCycleComposition(std::vector<unsigned> r, std::vector<unsigned> k);

  std::vector<unsigned> r_;
  std::vector<unsigned> k_;
  std::vector<std::size_t> offsets_;  // flat index of x_{i,1}
  unsigned k_sum_ = 0;
};

using VertexId = std::uint32_t;

struct LabeledEdge {
  EdgeLabel label;
  VertexId a = 0;
  VertexId b = 0;
};

/// Vertex 0 is the hub u; u_i^{(j)} follow cycle by cycle. Edges are stored
/// in flat-index order.
struct LabeledGraph {
  std::vector<std::string> vertex_names;
  std::vector<LabeledEdge> edges;

  std::size_t num_vertices() const { return vertex_names.size(); }
  std::size_t num_edges() const { return edges.size(); }
};

LabeledGraph labeled_graph(const OddCycleComposition& c);

/// Odd-position and even-position edges of one cycle, as sorted flat indices.
struct CycleParts {
  std::vector<std::size_t> odd;   // x_{i,1}, x_{i,3}, ..., x_{i,2k_i+1}
  std::vector<std::size_t> even;  // x_{i,2}, ..., x_{i,2k_i}
};

/// 1-based cycle index; throws InvalidInput when out of range.
CycleParts cycle_parts(const OddCycleComposition& c, unsigned cycle);

/// "1,1,1"
std::string join_list(std::span<const unsigned> values, char sep = ',');

}  // namespace oddcycle
