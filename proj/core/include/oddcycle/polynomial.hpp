#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddcycle {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial in t with exact integer coefficients.
///
/// Coefficient i is the coefficient of t^i. Trailing zeros are always
/// trimmed, so the zero polynomial stores no coefficients and has no degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  /// c * t^power
  static IntPolynomial term(const BigInt& c, std::size_t power);
  static IntPolynomial one() { return term(1, 0); }
  static IntPolynomial t() { return term(1, 1); }

  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  /// Coefficient of t^i; zero past the degree.
  BigInt operator[](std::size_t i) const;

  BigInt evaluate(const BigInt& t) const;
  IntPolynomial pow(unsigned exponent) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator-(IntPolynomial p);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// 1 + t + ... + t^j; q_int(0) == 1.
IntPolynomial q_int(unsigned j);

/// t^s * p(1/t). Throws InvalidInput when s < deg(p).
IntPolynomial reverse(const IntPolynomial& p, std::size_t s);

/// Exact quotient p / (1 - t). Throws NotDivisible unless p(1) == 0.
IntPolynomial divide_by_one_minus_t(const IntPolynomial& p);

/// h_i == h_{deg-i} for every i. The zero polynomial is symmetric.
bool is_palindromic(const IntPolynomial& p);

/// Coefficients as plain decimal strings, padded with zeros to `min_length`.
std::vector<std::string> coefficient_strings(const IntPolynomial& p, std::size_t min_length = 0);

/// Human-readable form, e.g. "1 + 2t + 3t^2".
std::string to_string(const IntPolynomial& p);
std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace oddcycle
