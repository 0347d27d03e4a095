#include "oddcycle/cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "oddcycle/complex.hpp"
#include "oddcycle/error.hpp"
#include "oddcycle/invariants.hpp"
#include "oddcycle/toric.hpp"

namespace oddcycle::cli {

void validate(const SweepRange& range) {
  if (range.max_n < 1 || range.max_N < range.max_n) {
    throw InvalidInput("sweep range needs max_N >= max_n >= 1");
  }
}

std::vector<OddCycleComposition> enumerate_compositions(unsigned max_n, unsigned max_N) {
  std::vector<OddCycleComposition> out;
  std::vector<unsigned> k;
  // Non-increasing sequences of length n with sum <= max_N.
  std::function<void(unsigned, unsigned, unsigned)> extend = [&](unsigned n, unsigned cap, unsigned budget) {
    if (k.size() == n) {
      out.push_back(OddCycleComposition::from_k(k));
      return;
    }
    const auto still_needed = static_cast<unsigned>(n - k.size() - 1);
    for (unsigned v = 1; v <= cap && v + still_needed <= budget; ++v) {
      k.push_back(v);
      extend(n, v, budget - v);
      k.pop_back();
    }
  };
  for (unsigned n = 1; n <= max_n && n <= max_N; ++n) extend(n, max_N, max_N);
  return out;
}

bool PointResult::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.status == Status::fail; });
}

namespace {

constexpr std::size_t index_of(std::string_view name) {
  for (std::size_t i = 0; i < kCheckNames.size(); ++i)
    if (kCheckNames[i] == name) return i;
  return kCheckNames.size();
}

CheckOutcome verdict(bool ok, std::string detail = {}) {
  return {ok ? Status::pass : Status::fail, ok ? std::string{} : std::move(detail)};
}

CheckOutcome skipped(std::string why) { return {Status::skip, std::move(why)}; }

template <typename F>
CheckOutcome guarded(F&& body) {
  try {
    return body();
  } catch (const InstanceTooLarge& e) {
    return skipped(e.what());
  } catch (const std::exception& e) {
    return {Status::fail, e.what()};
  }
}

}  // namespace

PointResult check_composition(const OddCycleComposition& input, const SweepRange& range) {
  const OddCycleComposition c = input.canonical();
  const unsigned n = c.num_cycles();
  const std::size_t facet_size = 2 * std::size_t{c.k_sum()} + 1;

  PointResult result;
  result.k = c.k();
  auto set = [&](std::string_view name, CheckOutcome outcome) { result.checks[index_of(name)] = std::move(outcome); };

  const IntPolynomial closed = h_closed_form(c);
  const BigInt facet_formula = facet_count_formula(c);

  std::optional<FacetEnumeration> facets;
  try {
    facets = enumerate_facets(c);
  } catch (const InstanceTooLarge& e) {
    set("facets", skipped(e.what()));
    set("f_vector", skipped(e.what()));
  }

  set("h_agree", guarded([&] {
        if (h_recursive(c) != closed) return verdict(false, "recursion disagrees with closed form");
        if (!facets) return skipped("complex route too large");
        const IntPolynomial from_complex = h_from_f(f_vector(facets->complex), facet_size);
        return verdict(from_complex == closed, "complex route gives " + to_string(from_complex));
      }));

  set("h_shape", guarded([&] {
        if (closed.evaluate(1) != facet_formula) return verdict(false, "h(1) differs from facet count formula");
        if (n == 1) return verdict(closed == IntPolynomial::one(), "single cycle must give h = 1");
        const bool ok = closed[0] == 1 && closed[1] == n - 1 && closed.degree() == c.k_sum();
        return verdict(ok, "expected h_0 = 1, h_1 = n-1, deg h = N");
      }));

  if (facets) {
    set("facets", guarded([&] {
          const auto& list = facets->complex.facets();
          if (facets->duplicates != 0) return verdict(false, "closed-form blocks overlap");
          for (auto f : list)
            if (f.size() != facet_size) return verdict(false, "facet of wrong cardinality");
          // Block j has prod_{i<j} (k_i + 1) * prod_{i>j} k_i facets.
          const auto& k = c.k();
          for (unsigned j = 1; j <= n; ++j) {
            std::size_t expected = 1;
            for (unsigned i = 1; i <= n; ++i) {
              if (i < j) expected *= k[i - 1] + 1;
              if (i > j) expected *= k[i - 1];
            }
            if (facets->per_block[j - 1] != expected) return verdict(false, "block size mismatch");
          }
          return verdict(BigInt(list.size()) == facet_formula, "facet count differs from formula");
        }));
    set("f_vector", guarded([&] {
          const FVector f = f_vector(facets->complex);
          const bool ok = f.f(-1) == 1 && f.f(0) == c.num_edges() &&
                          f.counts.size() == facet_size + 1 && f.counts.back() == facets->complex.facets().size();
          return verdict(ok, "f_{-1} = 1, f_0 = 2N+n, top count = facet count");
        }));
  }

  set("bruteforce", guarded([&] {
        if (!range.enable_bruteforce_complex) return skipped("disabled");
        if (!facets) return skipped("closed form too large");
        if (c.num_edges() > kBruteForceGroundCap) return skipped("beyond brute-force cap");
        if (facets_brute_force(initial_monomials(c), c.num_edges()) != facets->complex)
          return verdict(false, "brute-force facets differ");
        // Facets depend on cycle order, so try the reversed order too.
        std::vector<unsigned> reversed(c.k().rbegin(), c.k().rend());
        const auto other = OddCycleComposition::from_k(reversed);
        return verdict(facets_brute_force(initial_monomials(other), other.num_edges()) == facets_closed_form(other),
                       "brute-force facets differ for reversed cycle order");
      }));

  const auto gens = generators(c);
  set("initial", guarded([&] {
        const auto init = initial_monomials(c);
        if (gens.size() != std::size_t{n} * (n - 1) / 2) return verdict(false, "wrong generator count");
        std::size_t p = 0;
        for (unsigned i = 1; i <= n; ++i) {
          for (unsigned j = i + 1; j <= n; ++j, ++p) {
            const auto degree = c.k()[i - 1] + c.k()[j - 1] + 1;
            if (leading_monomial(gens[p]) != init[p] || !init[p].is_squarefree() || init[p].degree() != degree)
              return verdict(false, "initial monomial mismatch at pair " + std::to_string(p));
          }
        }
        return verdict(true);
      }));

  set("kernel", guarded([&] {
        const auto g = labeled_graph(c);
        for (const auto& b : gens)
          if (!kernel_check(b, g)) return verdict(false, "generator outside the toric ideal");
        return verdict(true);
      }));

  set("buchberger", guarded([&] {
        if (!range.enable_buchberger) return skipped("disabled");
        for (std::size_t i = 0; i < gens.size(); ++i)
          for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!s_pair_reduces_to_zero(gens[i], gens[j], gens))
              return verdict(false, "S-pair " + std::to_string(i) + "," + std::to_string(j) + " has nonzero remainder");
        return verdict(true);
      }));

  set("hilbert", guarded([&] {
        const auto standard = standard_monomial_series(c, range.hilbert_degree);
        const auto image = edge_subring_hilbert_series(c, range.hilbert_degree);
        return verdict(standard == image, "standard monomial count differs from edge subring");
      }));

  set("decomposition", guarded([&] {
        if (c.k().front() < 2) return skipped("k_1 = 1");
        const auto report = verify_decomposition(c);
        return verdict(report.holds(), report.union_holds ? "intersection identity fails" : "union identity fails");
      }));

  set("classify", guarded([&] {
        const auto report = classify(c);
        return verdict(report.prediction_agrees, "classification contradicts characterization");
      }));

  return result;
}

SweepSummary run_sweep(const SweepRange& range, unsigned jobs) {
  validate(range);
  const auto points = enumerate_compositions(range.max_n, range.max_N);
  SweepSummary summary;
  summary.points.resize(points.size());

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(points.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) summary.points[i] = check_composition(points[i], range);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const auto& p : summary.points) {
    for (const auto& check : p.checks) {
      if (check.status == Status::fail) ++summary.failures;
      if (check.status == Status::skip) ++summary.skips;
    }
  }
  return summary;
}

}  // namespace oddcycle::cli
