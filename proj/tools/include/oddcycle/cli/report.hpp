#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oddcycle/composition.hpp"
#include "oddcycle/invariants.hpp"
#include "oddcycle/polynomial.hpp"

namespace oddcycle::cli {

/// Everything the hvec/classify/table commands print about one composition.
struct Report {
  std::vector<unsigned> r;
  std::vector<unsigned> k;
  unsigned n = 0;
  unsigned big_n = 0;
  IntPolynomial h;
  std::size_t s = 0;
  BigInt facets;
  unsigned type = 1;
  BigInt e_tilde;
  std::vector<BigInt> h_prime;
  bool gorenstein = false;
  bool almost_gorenstein = false;
  bool methods_agree = false;
  /// h per route, when more than the closed form was computed.
  std::map<std::string, IntPolynomial> methods;
};

Report make_report(const OddCycleComposition& c, const GorensteinReport& g);

/// Integers only; throws std::overflow_error for values outside int64.
nlohmann::json to_json(const BigInt& value);
nlohmann::json to_json(const IntPolynomial& p);
nlohmann::json to_json(const Report& report);

/// Canonical single-line JSON: sorted keys, integers only.
std::string dump(const nlohmann::json& j);

inline const char* bool_text(bool b) { return b ? "true" : "false"; }
/// "1;2;3;1"
std::string semicolon_list(const IntPolynomial& p);
std::string semicolon_list(const std::vector<unsigned>& values);

inline constexpr const char* kTableHeader = "r,n,N,h,s,facets,type,e_tilde,gorenstein,almost_gorenstein";
std::string table_row(const Report& report);

}  // namespace oddcycle::cli
