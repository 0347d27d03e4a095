#include "oddcycle/complex.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "oddcycle/error.hpp"

namespace oddcycle {

IndexSet IndexSet::of(std::span<const std::size_t> indices) {
  IndexSet s;
  for (auto i : indices) s.insert(i);
  return s;
}

std::vector<std::size_t> IndexSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

IndexSet& IndexSet::insert(std::size_t i) {
  if (i >= kCapacity) throw InstanceTooLarge("index set supports at most 64 ground elements");
  bits_ |= std::uint64_t{1} << i;
  return *this;
}

SimplicialComplex::SimplicialComplex(std::size_t ground_size, std::vector<IndexSet> facets)
    : ground_size_(ground_size) {
  if (ground_size > IndexSet::kCapacity) throw InstanceTooLarge("complex ground set exceeds 64 elements");
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // Larger sets first so every candidate is checked against all possible supersets.
  std::vector<IndexSet> by_size = facets;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](IndexSet a, IndexSet b) { return a.size() > b.size(); });
  std::vector<IndexSet> kept;
  for (IndexSet f : by_size) {
    const bool covered =
        std::any_of(kept.begin(), kept.end(), [&](IndexSet g) { return f.is_subset_of(g); });
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  facets_ = std::move(kept);
}

std::size_t SimplicialComplex::max_face_size() const {
  std::size_t best = 0;
  for (auto f : facets_) best = std::max(best, f.size());
  return best;
}

namespace {

// Each group offers alternatives; a facet takes one alternative per group.
void cartesian_unions(const std::vector<std::vector<IndexSet>>& groups, std::size_t at, IndexSet acc,
                      std::vector<IndexSet>& out) {
  if (at == groups.size()) {
    out.push_back(acc);
    return;
  }
  for (IndexSet choice : groups[at]) cartesian_unions(groups, at + 1, acc | choice, out);
}

// All subsets of `set` with exactly one element removed.
std::vector<IndexSet> drop_one(std::span<const std::size_t> set) {
  const IndexSet full = IndexSet::of(set);
  std::vector<IndexSet> out;
  for (auto i : set) out.emplace_back(full.bits() & ~(std::uint64_t{1} << i));
  return out;
}

}  // namespace

FacetEnumeration enumerate_facets(const OddCycleComposition& c) {
  if (c.num_edges() > IndexSet::kCapacity) throw InstanceTooLarge("facet enumeration supports at most 64 edges");
  const unsigned n = c.num_cycles();
  std::vector<CycleParts> parts;
  for (unsigned i = 1; i <= n; ++i) parts.push_back(cycle_parts(c, i));
  auto odd = [&](unsigned i) { return IndexSet::of(parts[i - 1].odd); };
  auto even = [&](unsigned i) { return IndexSet::of(parts[i - 1].even); };

  const IndexSet always = odd(n) | even(1);
  FacetEnumeration result;
  std::vector<IndexSet> emitted;
  for (unsigned j = 1; j <= n; ++j) {
    IndexSet fixed = always;
    for (unsigned i = 2; i <= j; ++i) fixed |= even(i);
    for (unsigned i = j; i + 1 <= n; ++i) fixed |= odd(i);

    std::vector<std::vector<IndexSet>> groups;
    for (unsigned i = 1; i < j; ++i) groups.push_back(drop_one(parts[i - 1].odd));       // zeta_i
    for (unsigned i = j + 1; i <= n; ++i) groups.push_back(drop_one(parts[i - 1].even)); // omega_i

    const std::size_t before = emitted.size();
    cartesian_unions(groups, 0, fixed, emitted);
    result.per_block.push_back(emitted.size() - before);
  }
  result.emitted = emitted.size();
  std::vector<IndexSet> distinct = emitted;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  result.duplicates = result.emitted - distinct.size();
  result.complex = SimplicialComplex(c.num_edges(), std::move(distinct));
  return result;
}

SimplicialComplex facets_closed_form(const OddCycleComposition& c) { return enumerate_facets(c).complex; }

SimplicialComplex facets_brute_force(std::span<const Monomial> monomials, std::size_t ground_size,
                                     std::size_t ground_cap) {
  if (ground_size > ground_cap || ground_size > IndexSet::kCapacity) {
    throw InstanceTooLarge("instance too large for oracle: ground size " + std::to_string(ground_size) +
                           " exceeds cap " + std::to_string(ground_cap));
  }
  std::vector<IndexSet> forbidden;
  for (const auto& m : monomials) {
    if (!m.is_squarefree()) throw InvalidInput("facets_brute_force: monomial is not squarefree");
    IndexSet s;
    for (const auto& [index, exp] : m.terms()) {
      if (index >= ground_size) throw InvalidInput("facets_brute_force: variable outside ground set");
      s.insert(index);
    }
    forbidden.push_back(s);
  }
  auto is_face = [&](IndexSet s) {
    return std::none_of(forbidden.begin(), forbidden.end(), [&](IndexSet f) { return f.is_subset_of(s); });
  };

  std::vector<IndexSet> facets;
  std::function<void(std::size_t, IndexSet)> search = [&](std::size_t v, IndexSet current) {
    if (v == ground_size) {
      for (std::size_t w = 0; w < ground_size; ++w) {
        if (!current.contains(w) && is_face(current | IndexSet(std::uint64_t{1} << w))) return;
      }
      facets.push_back(current);
      return;
    }
    const IndexSet with = current | IndexSet(std::uint64_t{1} << v);
    if (is_face(with)) search(v + 1, with);
    search(v + 1, current);
  };
  search(0, IndexSet{});
  return SimplicialComplex(ground_size, std::move(facets));
}

std::uint64_t FVector::f(int dim) const {
  const auto at = static_cast<std::size_t>(dim + 1);
  return at < counts.size() ? counts[at] : 0;
}

FVector f_vector(const SimplicialComplex& complex, std::uint64_t budget) {
  std::uint64_t work = 0;
  for (auto f : complex.facets()) {
    if (f.size() >= 63) throw InstanceTooLarge("facet too large for face enumeration");
    work += std::uint64_t{1} << f.size();
    if (work > budget) throw InstanceTooLarge("instance too large for face enumeration");
  }

  FVector out;
  out.counts.assign(complex.max_face_size() + 1, 0);
  if (complex.facets().empty()) return out;
  auto record = [&](std::uint64_t face) { ++out.counts[static_cast<std::size_t>(std::popcount(face))]; };

  constexpr std::size_t kDenseLimit = 26;
  if (complex.ground_size() <= kDenseLimit) {
    std::vector<bool> seen(std::size_t{1} << complex.ground_size(), false);
    for (auto facet : complex.facets()) {
      const std::uint64_t full = facet.bits();
      for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
        if (!seen[sub]) {
          seen[sub] = true;
          record(sub);
        }
        if (sub == 0) break;
      }
    }
  } else {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(work));
    for (auto facet : complex.facets()) {
      const std::uint64_t full = facet.bits();
      for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
        if (seen.insert(sub).second) record(sub);
        if (sub == 0) break;
      }
    }
  }
  return out;
}

IntPolynomial h_from_f(const FVector& f, std::size_t d) {
  if (!f.counts.empty() && d + 1 < f.counts.size()) {
    throw InvalidInput("dimension mismatch: d=" + std::to_string(d) + " is below the largest face size " +
                       std::to_string(f.counts.size() - 1));
  }
  const IntPolynomial one_minus_t{1, -1};
  IntPolynomial h;
  for (std::size_t i = 0; i < f.counts.size(); ++i) {
    if (f.counts[i] == 0) continue;
    h += IntPolynomial::term(BigInt(f.counts[i]), i) * one_minus_t.pow(static_cast<unsigned>(d - i));
  }
  return h;
}

DecompositionReport verify_decomposition(const OddCycleComposition& c) {
  const auto& k = c.k();
  if (k.front() < 2) throw InvalidInput("cycle 1 not extendable; choose an ordering with k_1 >= 2");
  const unsigned k1 = k.front();
  const unsigned n = c.num_cycles();

  std::vector<unsigned> shortened = k;
  --shortened.front();
  const auto prime = OddCycleComposition::from_k(shortened);

  const std::size_t x = c.edge_index(1, 2 * k1 + 1);
  const std::size_t y = c.edge_index(1, 2 * k1);
  const CycleParts first = cycle_parts(c, 1);
  IndexSet odd_prime = IndexSet::of(first.odd);
  odd_prime = IndexSet(odd_prime.bits() & ~(std::uint64_t{1} << x));
  const IndexSet even_first = IndexSet::of(first.even);

  // Labels are unchanged when cycle 1 grows by two edges at its far end.
  auto lift_prime = [&](IndexSet f) {
    IndexSet out;
    for (auto i : f.indices()) {
      const EdgeLabel l = prime.label(i);
      out.insert(c.edge_index(l.cycle, l.position));
    }
    return out;
  };

  DecompositionReport report;
  const auto prime_facets = facets_closed_form(prime).facets();
  report.prime_facets = prime_facets.size();

  std::vector<IndexSet> with_x;
  std::vector<IndexSet> expected_meet;
  for (auto f : prime_facets) {
    const IndexSet lifted = lift_prime(f);
    with_x.push_back(lifted | IndexSet(std::uint64_t{1} << x) | IndexSet(std::uint64_t{1} << y));
    expected_meet.push_back(lifted | IndexSet(std::uint64_t{1} << y));
  }

  std::vector<IndexSet> with_odd;
  if (n >= 2) {
    const auto double_prime = OddCycleComposition::from_k(std::span<const unsigned>(k).subspan(1));
    const auto dp_facets = facets_closed_form(double_prime).facets();
    report.double_prime_facets = dp_facets.size();
    const IndexSet even_second = IndexSet::of(cycle_parts(c, 2).even);
    for (auto f : dp_facets) {
      IndexSet lifted;
      for (auto i : f.indices()) {
        const EdgeLabel l = double_prime.label(i);
        lifted.insert(c.edge_index(l.cycle + 1, l.position));
      }
      with_odd.push_back(lifted | even_second | odd_prime | even_first);
    }
  }

  const auto target = facets_closed_form(c).facets();
  report.target_facets = target.size();

  std::vector<IndexSet> joined = with_x;
  joined.insert(joined.end(), with_odd.begin(), with_odd.end());
  std::sort(joined.begin(), joined.end());
  joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
  report.union_holds = joined == target;

  report.intersection_applicable = !with_odd.empty();
  if (report.intersection_applicable) {
    std::vector<IndexSet> meets;
    for (auto a : with_x) {
      for (auto b : with_odd) meets.push_back(a & b);
    }
    const SimplicialComplex meet(c.num_edges(), std::move(meets));
    std::sort(expected_meet.begin(), expected_meet.end());
    report.intersection_holds = meet.facets() == expected_meet;
  }
  return report;
}

std::string facet_labels(IndexSet facet, const OddCycleComposition& c) {
  std::string out;
  for (auto i : facet.indices()) {
    if (!out.empty()) out += ' ';
    out += to_string(c.label(i));
  }
  return out;
}

}  // namespace oddcycle
