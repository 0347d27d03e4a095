#include "oddcycle/cli/report.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace oddcycle::cli {

Report make_report(const OddCycleComposition& c, const GorensteinReport& g) {
  Report r;
  r.r = c.r();
  r.k = c.k();
  r.n = c.num_cycles();
  r.big_n = c.k_sum();
  r.h = g.h;
  r.s = g.s;
  r.facets = facet_count_formula(c);
  r.type = g.type;
  r.e_tilde = g.e_tilde;
  r.h_prime = g.h_prime;
  r.gorenstein = g.is_gorenstein;
  r.almost_gorenstein = g.is_almost_gorenstein;
  r.methods_agree = g.prediction_agrees;
  return r;
}

nlohmann::json to_json(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("value " + value.str() + " exceeds the JSON integer range");
  }
  return static_cast<std::int64_t>(value);
}

nlohmann::json to_json(const IntPolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json j;
  j["r"] = report.r;
  j["k"] = report.k;
  j["n"] = report.n;
  j["N"] = report.big_n;
  j["h"] = to_json(report.h);
  j["s"] = report.s;
  j["facets"] = to_json(report.facets);
  j["type"] = report.type;
  j["e_tilde"] = to_json(report.e_tilde);
  nlohmann::json prime = nlohmann::json::array();
  for (const auto& v : report.h_prime) prime.push_back(to_json(v));
  j["h_prime"] = std::move(prime);
  j["gorenstein"] = report.gorenstein;
  j["almost_gorenstein"] = report.almost_gorenstein;
  j["methods_agree"] = report.methods_agree;
  if (!report.methods.empty()) {
    nlohmann::json methods = nlohmann::json::object();
    for (const auto& [name, h] : report.methods) methods[name] = to_json(h);
    j["methods"] = std::move(methods);
  }
  return j;
}

std::string dump(const nlohmann::json& j) { return j.dump(); }

std::string semicolon_list(const IntPolynomial& p) {
  std::string out;
  for (const auto& c : p.coefficients()) {
    if (!out.empty()) out += ';';
    out += c.str();
  }
  return out.empty() ? "0" : out;
}

std::string semicolon_list(const std::vector<unsigned>& values) { return join_list(values, ';'); }

std::string table_row(const Report& report) {
  std::ostringstream os;
  os << semicolon_list(report.r) << ',' << report.n << ',' << report.big_n << ',' << semicolon_list(report.h) << ','
     << report.s << ',' << report.facets << ',' << report.type << ',' << report.e_tilde << ','
     << bool_text(report.gorenstein) << ',' << bool_text(report.almost_gorenstein);
  return os.str();
}

}  // namespace oddcycle::cli
