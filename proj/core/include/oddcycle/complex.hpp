#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "oddcycle/composition.hpp"
#include "oddcycle/polynomial.hpp"
#include "oddcycle/toric.hpp"

namespace oddcycle {

/// Set of flat edge indices below 64, stored as a bitmask.
class IndexSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  /// Throws InstanceTooLarge for indices >= kCapacity.
  static IndexSet of(std::span<const std::size_t> indices);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const { return i < kCapacity && ((bits_ >> i) & 1u); }
  constexpr bool is_subset_of(IndexSet other) const { return (bits_ & other.bits_) == bits_; }
  std::vector<std::size_t> indices() const;

  IndexSet& insert(std::size_t i);
  constexpr IndexSet& operator|=(IndexSet o) { bits_ |= o.bits_; return *this; }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Simplicial complex given by its facets over the ground set {0, ..., n-1}.
/// Facets are kept sorted, distinct, and pairwise incomparable.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Drops duplicates and any set contained in another one.
  SimplicialComplex(std::size_t ground_size, std::vector<IndexSet> facets);

  std::size_t ground_size() const { return ground_size_; }
  const std::vector<IndexSet>& facets() const { return facets_; }
  /// Largest face cardinality; 0 for the void complex.
  std::size_t max_face_size() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t ground_size_ = 0;
  std::vector<IndexSet> facets_;
};

/// Outcome of the explicit facet enumeration, before deduplication is hidden.
struct FacetEnumeration {
  SimplicialComplex complex;
  /// per_block[j-1]: facets emitted for block j (j = 1..n).
  std::vector<std::size_t> per_block;
  std::size_t emitted = 0;
  /// emitted - distinct; nonzero means two blocks overlapped.
  std::size_t duplicates = 0;
};

/// Facets of the Stanley-Reisner complex of the initial ideal, listed block
/// by block: for j = 1..n,
///   zeta_1 u ... u zeta_{j-1} u E_2 u ... u E_j u O_j u ... u O_{n-1}
///   u omega_{j+1} u ... u omega_n u (O_n u E_1)
/// where zeta_i is any k_i-subset of O_i and omega_i any (k_i - 1)-subset of E_i.
FacetEnumeration enumerate_facets(const OddCycleComposition& c);
SimplicialComplex facets_closed_form(const OddCycleComposition& c);

inline constexpr std::size_t kBruteForceGroundCap = 20;

/// Maximal subsets of {0..ground_size-1} containing the support of no
/// monomial, found by include/exclude search. Throws InstanceTooLarge above
/// `ground_cap`, InvalidInput if a monomial is not squarefree.
SimplicialComplex facets_brute_force(std::span<const Monomial> monomials, std::size_t ground_size,
                                     std::size_t ground_cap = kBruteForceGroundCap);

/// counts[c] = number of faces with c vertices (so counts[0] = f_{-1} = 1).
struct FVector {
  std::vector<std::uint64_t> counts;

  /// f_{dim}; dim = -1 is the empty face.
  std::uint64_t f(int dim) const;
  friend bool operator==(const FVector&, const FVector&) = default;
};

inline constexpr std::uint64_t kFaceEnumerationBudget = std::uint64_t{1} << 28;

/// Enumerates every subset of every facet with global deduplication. Throws
/// InstanceTooLarge when the sum of 2^|F| exceeds `budget`.
FVector f_vector(const SimplicialComplex& complex, std::uint64_t budget = kFaceEnumerationBudget);

/// sum_i f_{i-1} t^i (1-t)^{d-i}. Throws InvalidInput if d is smaller than
/// the largest face.
IntPolynomial h_from_f(const FVector& f, std::size_t d);

struct DecompositionReport {
  std::size_t prime_facets = 0;         // facets of the shortened composition
  std::size_t double_prime_facets = 0;  // facets with cycle 1 removed
  std::size_t target_facets = 0;
  bool union_holds = false;
  /// False when there is no second part (n = 1), in which case the
  /// intersection identity has nothing to compare.
  bool intersection_applicable = false;
  bool intersection_holds = false;

  bool holds() const { return union_holds && (!intersection_applicable || intersection_holds); }
};

/// Splits the complex along the last two edges of cycle 1. With x, y the
/// edges at positions 2k_1+1 and 2k_1, checks
///   facets(c) == { F' u {x, y} } u { F'' u O_1' u E_1 }
/// where F' ranges over the facets for (k_1 - 1, k_2, ...) and F'' over the
/// facets for (k_2, ..., k_n), and that the maximal pairwise intersections
/// of the two families are exactly { F' u {y} }.
/// Throws InvalidInput when k_1 == 1.
DecompositionReport verify_decomposition(const OddCycleComposition& c);

/// Space-separated labels in flat order, e.g. "x1,1 x1,3 x2,2".
std::string facet_labels(IndexSet facet, const OddCycleComposition& c);

}  // namespace oddcycle
