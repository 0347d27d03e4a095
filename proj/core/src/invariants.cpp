#include "oddcycle/invariants.hpp"

#include <algorithm>
#include <functional>

#include "oddcycle/error.hpp"

namespace oddcycle {

IntPolynomial h_closed_form(const OddCycleComposition& c) {
  IntPolynomial full = IntPolynomial::one();
  IntPolynomial shorter = IntPolynomial::one();
  const auto& r = c.r();
  for (std::size_t j = 1; j <= r.size(); ++j) {
    if (r[j - 1] == 0) continue;
    full *= q_int(static_cast<unsigned>(j)).pow(r[j - 1]);
    shorter *= q_int(static_cast<unsigned>(j - 1)).pow(r[j - 1]);
  }
  return full - IntPolynomial::t() * shorter;
}

IntPolynomial HRecursion::operator()(const OddCycleComposition& c) {
  std::vector<unsigned> k = c.k();
  std::sort(k.begin(), k.end(), std::greater<>());
  return evaluate(std::move(k));
}

IntPolynomial HRecursion::evaluate(std::vector<unsigned> sorted_k) {
  if (auto it = memo_.find(sorted_k); it != memo_.end()) return it->second;

  IntPolynomial h;
  const std::size_t n = sorted_k.size();
  if (n == 1) {
    h = IntPolynomial::one();
  } else if (sorted_k.front() == 1) {
    h = IntPolynomial{1, 1}.pow(static_cast<unsigned>(n)) - IntPolynomial::t();
  } else {
    // Extend the longest cycle; it sits in position 1 after sorting.
    std::vector<unsigned> shortened = sorted_k;
    --shortened.front();
    std::sort(shortened.begin(), shortened.end(), std::greater<>());
    std::vector<unsigned> removed(sorted_k.begin() + 1, sorted_k.end());
    h = IntPolynomial::t() * evaluate(std::move(shortened)) + evaluate(std::move(removed));
  }
  memo_.emplace(std::move(sorted_k), h);
  return h;
}

IntPolynomial h_recursive(const OddCycleComposition& c) {
  HRecursion recursion;
  return recursion(c);
}

unsigned cm_type(const OddCycleComposition& c) {
  return c.num_cycles() >= 2 ? c.num_cycles() - 1 : 1;
}

ETilde e_tilde_from_h(const IntPolynomial& h) {
  if (h[0] != 1) throw InvalidInput("e_tilde_from_h: h_0 must be 1");
  if (h.evaluate(1).is_zero()) throw InvalidInput("e_tilde_from_h: h(1) must be nonzero");
  const std::size_t s = *h.degree();
  // (reverse - h)(1) == 0 for every h, so the division is exact.
  const IntPolynomial quotient = divide_by_one_minus_t(reverse(h, s) - h);
  ETilde out;
  out.h_prime.reserve(s + 1);
  for (std::size_t i = 0; i <= s; ++i) {
    out.h_prime.push_back(quotient[i]);
    out.value += quotient[i];
  }
  return out;
}

BigInt e_tilde_closed(const OddCycleComposition& c) {
  const unsigned n = c.num_cycles();
  if (n < 3) throw InvalidInput("closed form stated only for n >= 3");
  BigInt product = 1;
  const auto& r = c.r();
  for (std::size_t j = 1; j <= r.size(); ++j) {
    for (unsigned e = 0; e < r[j - 1]; ++e) product *= j;
  }
  return BigInt(n - 2) * product;
}

GorensteinReport classify(const OddCycleComposition& c) {
  GorensteinReport report;
  report.h = h_closed_form(c);
  report.s = *report.h.degree();
  report.type = cm_type(c);
  ETilde et = e_tilde_from_h(report.h);
  report.e_tilde = std::move(et.value);
  report.h_prime = std::move(et.h_prime);
  report.is_gorenstein = is_palindromic(report.h);
  report.is_almost_gorenstein = BigInt(report.type - 1) == report.e_tilde;

  const unsigned n = c.num_cycles();
  report.predicted_almost_gorenstein = n <= 2 || c.all_triangles();
  report.e_tilde_expected = n >= 3 ? e_tilde_closed(c) : report.e_tilde;
  report.prediction_agrees = report.is_almost_gorenstein == report.predicted_almost_gorenstein &&
                             report.is_gorenstein == (n <= 2) &&
                             report.e_tilde == report.e_tilde_expected &&
                             (!report.is_gorenstein || report.is_almost_gorenstein);
  return report;
}

BigInt facet_count_formula(const OddCycleComposition& c) {
  BigInt with_one = 1;
  BigInt plain = 1;
  for (unsigned ki : c.k()) {
    with_one *= ki + 1;
    plain *= ki;
  }
  return with_one - plain;
}

}  // namespace oddcycle
