#include "oddcycle/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "oddcycle/error.hpp"

namespace oddcycle {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs)
    : coeffs_(coeffs.begin(), coeffs.end()) {
  trim();
}

IntPolynomial IntPolynomial::term(const BigInt& c, std::size_t power) {
  std::vector<BigInt> coeffs(power + 1);
  coeffs[power] = c;
  return IntPolynomial(std::move(coeffs));
}

std::optional<std::size_t> IntPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt IntPolynomial::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = one();
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(IntPolynomial p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPolynomial q_int(unsigned j) { return IntPolynomial(std::vector<BigInt>(j + 1, BigInt(1))); }

IntPolynomial reverse(const IntPolynomial& p, std::size_t s) {
  const auto deg = p.degree();
  if (!deg) return {};
  if (s < *deg) {
    throw InvalidInput("reversal bound too small: s=" + std::to_string(s) +
                       " < deg=" + std::to_string(*deg));
  }
  std::vector<BigInt> out(s + 1);
  for (std::size_t i = 0; i <= s; ++i) out[i] = p[s - i];
  return IntPolynomial(std::move(out));
}

IntPolynomial divide_by_one_minus_t(const IntPolynomial& p) {
  // p = q - t*q, so q_i is the i-th prefix sum of p.
  const auto& c = p.coefficients();
  if (c.empty()) return {};
  std::vector<BigInt> q(c.size() - 1);
  BigInt running = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    running += c[i];
    q[i] = running;
  }
  running += c.back();
  if (!running.is_zero()) throw NotDivisible("not divisible by (1-t): p(1) = " + running.str());
  return IntPolynomial(std::move(q));
}

bool is_palindromic(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

std::vector<std::string> coefficient_strings(const IntPolynomial& p, std::size_t min_length) {
  std::vector<std::string> out;
  out.reserve(std::max(min_length, p.coefficients().size()));
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  while (out.size() < min_length) out.emplace_back("0");
  return out;
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    BigInt mag = abs(c[i]);
    if (first) {
      if (c[i] < 0) os << '-';
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_string(p); }

}  // namespace oddcycle
