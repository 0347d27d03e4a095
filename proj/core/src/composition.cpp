#include "oddcycle/composition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "oddcycle/error.hpp"

namespace oddcycle {

std::string to_string(const EdgeLabel& label) {
  return "x" + std::to_string(label.cycle) + "," + std::to_string(label.position);
}

OddCycleComposition::OddCycleComposition(std::vector<unsigned> r, std::vector<unsigned> k)
    : r_(std::move(r)), k_(std::move(k)) {
  offsets_.reserve(k_.size());
  std::size_t offset = 0;
  for (unsigned ki : k_) {
    offsets_.push_back(offset);
    offset += 2 * std::size_t{ki} + 1;
    k_sum_ += ki;
  }
}

OddCycleComposition OddCycleComposition::from_r(std::span<const unsigned> r) {
  std::vector<unsigned> trimmed(r.begin(), r.end());
  while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
  if (trimmed.empty()) throw InvalidInput("empty composition: at least one r_j must be positive");

  std::vector<unsigned> k;
  for (std::size_t j = trimmed.size(); j >= 1; --j) k.insert(k.end(), trimmed[j - 1], static_cast<unsigned>(j));
  return OddCycleComposition(std::move(trimmed), std::move(k));
}

OddCycleComposition OddCycleComposition::from_k(std::span<const unsigned> k) {
  if (k.empty()) throw InvalidInput("empty composition: no cycles given");
  unsigned m = 0;
  for (unsigned ki : k) {
    if (ki == 0) throw InvalidInput("invalid cycle length: every k_i must be at least 1");
    m = std::max(m, ki);
  }
  std::vector<unsigned> r(m, 0);
  for (unsigned ki : k) ++r[ki - 1];
  return OddCycleComposition(std::move(r), std::vector<unsigned>(k.begin(), k.end()));
}

std::size_t OddCycleComposition::edge_index(unsigned cycle, unsigned position) const {
  if (cycle < 1 || cycle > k_.size()) throw InvalidInput("cycle index out of range");
  if (position < 1 || position > 2 * k_[cycle - 1] + 1) throw InvalidInput("edge position out of range");
  return offsets_[cycle - 1] + position - 1;
}

EdgeLabel OddCycleComposition::label(std::size_t flat_index) const {
  if (flat_index >= num_edges()) throw InvalidInput("flat edge index out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), flat_index);
  const auto cycle = static_cast<unsigned>(it - offsets_.begin());
  return {cycle, static_cast<unsigned>(flat_index - offsets_[cycle - 1] + 1)};
}

OddCycleComposition OddCycleComposition::canonical() const {
  std::vector<unsigned> k = k_;
  std::sort(k.begin(), k.end(), std::greater<>());
  return from_k(k);
}

LabeledGraph labeled_graph(const OddCycleComposition& c) {
  LabeledGraph g;
  g.vertex_names.reserve(c.num_vertices());
  g.edges.reserve(c.num_edges());
  g.vertex_names.emplace_back("u");

  for (unsigned i = 1; i <= c.num_cycles(); ++i) {
    const unsigned ki = c.k()[i - 1];
    // u_i^{(j)} gets id first + j - 1.
    const auto first = static_cast<VertexId>(g.vertex_names.size());
    for (unsigned j = 1; j <= 2 * ki; ++j) {
      g.vertex_names.push_back("u" + std::to_string(i) + "^" + std::to_string(j));
    }
    g.edges.push_back({{i, 1}, 0, first});
    for (unsigned j = 2; j <= 2 * ki; ++j) g.edges.push_back({{i, j}, first + j - 2, first + j - 1});
    g.edges.push_back({{i, 2 * ki + 1}, first + 2 * ki - 1, 0});
  }
  return g;
}

CycleParts cycle_parts(const OddCycleComposition& c, unsigned cycle) {
  if (cycle < 1 || cycle > c.num_cycles()) {
    throw InvalidInput("cycle index " + std::to_string(cycle) + " out of range [1, " +
                       std::to_string(c.num_cycles()) + "]");
  }
  const unsigned ki = c.k()[cycle - 1];
  CycleParts parts;
  for (unsigned j = 1; j <= 2 * ki + 1; ++j) {
    (j % 2 == 1 ? parts.odd : parts.even).push_back(c.edge_index(cycle, j));
  }
  return parts;
}

std::string join_list(std::span<const unsigned> values, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << sep;
    os << values[i];
  }
  return os.str();
}

}  // namespace oddcycle
