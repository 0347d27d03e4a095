#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oddcycle/composition.hpp"

namespace oddcycle {

/// Monomial in the edge variables, stored as (flat index, exponent) pairs
/// sorted by index with every exponent >= 1.
class Monomial {
 public:
  using Term = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;
  /// Terms in any order; repeated indices are summed and zero exponents dropped.
  explicit Monomial(std::vector<Term> terms);
  /// Squarefree product of the given variables. Throws InvalidInput on repeats.
  static Monomial product_of(std::span<const std::size_t> indices);
  static Monomial variable(std::size_t index, std::uint32_t exponent = 1);

  const std::vector<Term>& terms() const { return terms_; }
  std::uint64_t degree() const { return degree_; }
  std::uint32_t exponent(std::size_t index) const;
  bool is_one() const { return terms_.empty(); }
  bool is_squarefree() const;

  bool divides(const Monomial& other) const;
  /// other / *this; caller guarantees divides(other).
  Monomial cofactor_in(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Term> terms_;
  std::uint64_t degree_ = 0;
};

/// Graded lexicographic comparison: total degree first, then at the smallest
/// flat index where exponents differ, the larger exponent wins.
/// `greater` means a is the larger monomial.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

/// plus - minus
struct Binomial {
  Monomial plus;
  Monomial minus;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// One binomial per cycle pair i < j, in lexicographic (i, j) order:
///   plus  = x_{i,1} x_{i,3} ... x_{i,2k_i+1} * x_{j,2} x_{j,4} ... x_{j,2k_j}
///   minus = x_{i,2} x_{i,4} ... x_{i,2k_i}   * x_{j,1} x_{j,3} ... x_{j,2k_j+1}
std::vector<Binomial> generators(const OddCycleComposition& c);

/// Plus-parts of generators(c), same order.
std::vector<Monomial> initial_monomials(const OddCycleComposition& c);

/// The grlex-greater of the two parts.
Monomial leading_monomial(const Binomial& b);

inline constexpr std::size_t kDefaultReductionStepCap = 10'000;

/// Buchberger test for one pair: forms S(f, g) and divides it by the leading
/// monomials of `basis`. Returns true iff the remainder is zero.
/// Throws ReductionDidNotTerminate once `step_cap` reduction steps are spent.
bool s_pair_reduces_to_zero(const Binomial& f, const Binomial& g, std::span<const Binomial> basis,
                            std::size_t step_cap = kDefaultReductionStepCap);

/// Image of an edge monomial under x_e -> v_a v_b, as sorted
/// (vertex, exponent) pairs with positive exponents.
class VertexExponentVector {
 public:
  using Entry = std::pair<VertexId, std::uint32_t>;

  VertexExponentVector() = default;

  const std::vector<Entry>& entries() const { return entries_; }
  std::uint64_t total() const;
  void add_vertex(VertexId v, std::uint32_t times = 1);

  friend auto operator<=>(const VertexExponentVector&, const VertexExponentVector&) = default;

 private:
  std::vector<Entry> entries_;
};

VertexExponentVector edge_map(const Monomial& m, const LabeledGraph& g);

/// phi(plus) == phi(minus)
bool kernel_check(const Binomial& b, const LabeledGraph& g);

/// Number of degree-d monomials in the 2N+n edge variables divisible by no
/// initial monomial. Entry d of the series version is the count in degree d.
std::uint64_t standard_monomial_count(const OddCycleComposition& c, unsigned degree);
std::vector<std::uint64_t> standard_monomial_series(const OddCycleComposition& c, unsigned max_degree);

/// Hilbert function of the edge subring: distinct phi-images of degree-d
/// edge monomials, by breadth-first expansion one edge at a time.
std::uint64_t edge_subring_hilbert(const OddCycleComposition& c, unsigned degree);
std::vector<std::uint64_t> edge_subring_hilbert_series(const OddCycleComposition& c, unsigned max_degree);

/// "x1,1*x1,3*x2,2"; "1" for the empty monomial.
std::string to_string(const Monomial& m, const OddCycleComposition& c);
std::string to_string(const Binomial& b, const OddCycleComposition& c);

}  // namespace oddcycle
