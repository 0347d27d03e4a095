#pragma once

#include <map>
#include <vector>

#include "oddcycle/composition.hpp"
#include "oddcycle/polynomial.hpp"

namespace oddcycle {

/// prod_j (1 + ... + t^j)^{r_j} - t * prod_j (1 + ... + t^{j-1})^{r_j}
IntPolynomial h_closed_form(const OddCycleComposition& c);

/// h-polynomial by deletion/extension on cycle lengths:
///   h(k_1, ..., k_n) = t * h(k_1 - 1, k_2, ..., k_n) + h(k_2, ..., k_n)
/// for k_1 >= 2, with h = 1 for a single cycle and h = (1+t)^n - t when
/// every cycle is a triangle. Results are memoized on the sorted k-multiset,
/// so one instance must not be shared across threads.
class HRecursion {
 public:
  IntPolynomial operator()(const OddCycleComposition& c);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  IntPolynomial evaluate(std::vector<unsigned> sorted_k);

  std::map<std::vector<unsigned>, IntPolynomial> memo_;
};

IntPolynomial h_recursive(const OddCycleComposition& c);

/// Cohen-Macaulay type: n - 1 for n >= 2, and 1 for a single cycle
/// (the edge ring is then a polynomial ring).
unsigned cm_type(const OddCycleComposition& c);

struct ETilde {
  BigInt value;
  /// h'_0 .. h'_s where h'_i = (h_s + ... + h_{s-i}) - (h_0 + ... + h_i)
  std::vector<BigInt> h_prime;
};

/// e~ from an h-polynomial with s = deg h: the coefficients of
/// (t^s h(1/t) - h(t)) / (1 - t), and their sum.
/// Throws InvalidInput unless h_0 == 1 and h(1) != 0.
ETilde e_tilde_from_h(const IntPolynomial& h);

/// (n - 2) * prod_j j^{r_j}; throws InvalidInput for n < 3.
BigInt e_tilde_closed(const OddCycleComposition& c);

struct GorensteinReport {
  IntPolynomial h;
  std::size_t s = 0;
  unsigned type = 1;
  BigInt e_tilde;
  std::vector<BigInt> h_prime;
  bool is_gorenstein = false;
  bool is_almost_gorenstein = false;

  /// n <= 2, or every cycle a triangle.
  bool predicted_almost_gorenstein = false;
  /// e~ closed form for n >= 3; equals e_tilde otherwise.
  BigInt e_tilde_expected;
  /// Computed flags and e~ match the characterization.
  bool prediction_agrees = false;
};

GorensteinReport classify(const OddCycleComposition& c);

/// prod_i (k_i + 1) - prod_i k_i
BigInt facet_count_formula(const OddCycleComposition& c);

}  // namespace oddcycle
