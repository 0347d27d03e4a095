#include "oddcycle/cli/commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>

#include "oddcycle/cli/report.hpp"
#include "oddcycle/complex.hpp"
#include "oddcycle/error.hpp"
#include "oddcycle/invariants.hpp"
#include "oddcycle/toric.hpp"

namespace oddcycle::cli {

std::vector<unsigned> parse_list(const std::string& text) {
  std::vector<unsigned> out;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(',', start);
    std::string_view token(text.data() + start, (end == std::string::npos ? text.size() : end) - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidInput("malformed integer list '" + text + "'");
    }
    out.push_back(value);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

namespace {

std::string tuple_text(const std::vector<unsigned>& values) { return "(" + join_list(values, ',') + ")"; }

std::string tuple_text(const IntPolynomial& p) {
  std::string s = semicolon_list(p);
  std::replace(s.begin(), s.end(), ';', ',');
  return "(" + s + ")";
}

IntPolynomial h_via_complex(const OddCycleComposition& c) {
  return h_from_f(f_vector(facets_closed_form(c)), 2 * std::size_t{c.k_sum()} + 1);
}

void print_header(const OddCycleComposition& c, std::ostream& out) {
  out << "r = " << tuple_text(c.r()) << "  k = " << tuple_text(c.k()) << "  n = " << c.num_cycles()
      << "  N = " << c.k_sum() << '\n';
}

const char* status_text(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "FAIL";
    case Status::skip: return "skip";
  }
  return "?";
}

}  // namespace

int cmd_hvec(const OddCycleComposition& c, Method method, Format format, std::ostream& out, std::ostream&) {
  std::map<std::string, IntPolynomial> routes;
  if (method == Method::formula || method == Method::all) routes["formula"] = h_closed_form(c);
  if (method == Method::recursion || method == Method::all) routes["recursion"] = h_recursive(c);
  if (method == Method::complex || method == Method::all) routes["complex"] = h_via_complex(c);

  const IntPolynomial& first = routes.begin()->second;
  const bool agree = std::all_of(routes.begin(), routes.end(), [&](const auto& kv) { return kv.second == first; });

  Report report = make_report(c, classify(c));
  report.h = first;
  report.s = first.degree().value_or(0);
  report.methods_agree = agree;
  if (routes.size() > 1) report.methods = routes;

  switch (format) {
    case Format::text:
      print_header(c, out);
      for (const auto& [name, h] : routes) out << std::left << std::setw(10) << name << "h = " << tuple_text(h) << '\n';
      if (routes.size() > 1) out << "agree = " << bool_text(agree) << '\n';
      break;
    case Format::json:
      out << dump(to_json(report)) << '\n';
      break;
    case Format::csv:
      out << "r,method,h\n";
      for (const auto& [name, h] : routes) out << semicolon_list(c.r()) << ',' << name << ',' << semicolon_list(h) << '\n';
      break;
  }
  return agree ? kExitOk : kExitDisagreement;
}

int cmd_classify(const OddCycleComposition& c, Format format, std::ostream& out, std::ostream& err) {
  const GorensteinReport g = classify(c);
  const Report report = make_report(c, g);
  switch (format) {
    case Format::text:
      print_header(c, out);
      out << "h = " << tuple_text(g.h) << "  s = " << g.s << '\n'
          << "type = " << g.type << "  e_tilde = " << g.e_tilde << '\n'
          << "gorenstein = " << bool_text(g.is_gorenstein) << '\n'
          << "almost_gorenstein = " << bool_text(g.is_almost_gorenstein) << '\n';
      break;
    case Format::json:
      out << dump(to_json(report)) << '\n';
      break;
    case Format::csv:
      out << kTableHeader << '\n' << table_row(report) << '\n';
      break;
  }
  if (!g.prediction_agrees) {
    err << "classification contradicts the characterization (n <= 2 or N = n)\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

int cmd_facets(const OddCycleComposition& c, bool brute_force, Format format, std::ostream& out, std::ostream& err) {
  const FacetEnumeration e = enumerate_facets(c);
  const auto& facets = e.complex.facets();
  bool agree = e.duplicates == 0;
  if (brute_force) agree = agree && facets_brute_force(initial_monomials(c), c.num_edges()) == e.complex;

  switch (format) {
    case Format::text:
      print_header(c, out);
      for (std::size_t j = 0; j < e.per_block.size(); ++j) out << "j = " << j + 1 << ": " << e.per_block[j] << " facets\n";
      for (auto f : facets) out << facet_labels(f, c) << '\n';
      out << "total = " << facets.size() << '\n';
      if (brute_force) out << "oracle agrees = " << bool_text(agree) << '\n';
      break;
    case Format::json: {
      nlohmann::json j;
      j["k"] = c.k();
      j["r"] = c.r();
      j["count"] = facets.size();
      j["per_block"] = e.per_block;
      nlohmann::json list = nlohmann::json::array();
      for (auto f : facets) list.push_back(f.indices());
      j["facets"] = std::move(list);
      if (brute_force) j["oracle_agrees"] = agree;
      out << dump(j) << '\n';
      break;
    }
    case Format::csv:
      out << "facet\n";
      for (auto f : facets) {
        std::string row;
        for (auto i : f.indices()) {
          if (!row.empty()) row += ';';
          row += to_string(c.label(i));
        }
        out << '"' << row << "\"\n";
      }
      break;
  }
  if (!agree) {
    err << "closed-form facets disagree with the oracle\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

int cmd_gens(const OddCycleComposition& c, Format format, std::ostream& out, std::ostream&) {
  const auto gens = generators(c);
  switch (format) {
    case Format::text:
      print_header(c, out);
      for (const auto& b : gens) out << to_string(b, c) << "    in: " << to_string(leading_monomial(b), c) << '\n';
      break;
    case Format::json: {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& b : gens) {
        list.push_back({{"plus", to_string(b.plus, c)},
                        {"minus", to_string(b.minus, c)},
                        {"initial", to_string(leading_monomial(b), c)}});
      }
      out << dump(nlohmann::json{{"k", c.k()}, {"r", c.r()}, {"generators", list}}) << '\n';
      break;
    }
    case Format::csv:
      out << "plus,minus,initial\n";
      for (const auto& b : gens)
        out << '"' << to_string(b.plus, c) << "\",\"" << to_string(b.minus, c) << "\",\"" << to_string(leading_monomial(b), c)
            << "\"\n";
      break;
  }
  return kExitOk;
}

int cmd_verify(const SweepRange& range, unsigned jobs, Format format, std::ostream& out, std::ostream& err) {
  const SweepSummary summary = run_sweep(range, jobs);

  switch (format) {
    case Format::text: {
      out << std::left << std::setw(14) << "k" << std::setw(16) << "h";
      for (auto name : kCheckNames) out << ' ' << name;
      out << '\n';
      for (const auto& p : summary.points) {
        const auto h = h_closed_form(OddCycleComposition::from_k(p.k));
        out << std::setw(14) << join_list(p.k, ',') << std::setw(16) << semicolon_list(h);
        for (std::size_t i = 0; i < kCheckNames.size(); ++i)
          out << ' ' << std::setw(static_cast<int>(kCheckNames[i].size())) << status_text(p.checks[i].status);
        out << '\n';
      }
      out << summary.points.size() << " compositions, " << summary.failures << " failures, " << summary.skips
          << " skipped\n";
      break;
    }
    case Format::json:
    case Format::csv: {
      if (format == Format::csv) {
        out << "k";
        for (auto name : kCheckNames) out << ',' << name;
        out << '\n';
        for (const auto& p : summary.points) {
          out << join_list(p.k, ';');
          for (const auto& check : p.checks) out << ',' << status_text(check.status);
          out << '\n';
        }
        break;
      }
      nlohmann::json points = nlohmann::json::array();
      for (const auto& p : summary.points) {
        nlohmann::json checks = nlohmann::json::object();
        for (std::size_t i = 0; i < kCheckNames.size(); ++i)
          checks[std::string(kCheckNames[i])] = status_text(p.checks[i].status);
        points.push_back({{"k", p.k}, {"checks", checks}});
      }
      out << dump({{"points", points},
                   {"failures", summary.failures},
                   {"skips", summary.skips},
                   {"passed", summary.passed()}})
          << '\n';
      break;
    }
  }

  for (const auto& p : summary.points) {
    for (std::size_t i = 0; i < kCheckNames.size(); ++i) {
      if (p.checks[i].status == Status::fail)
        err << "FAIL (" << join_list(p.k, ',') << ") " << kCheckNames[i] << ": " << p.checks[i].detail << '\n';
    }
  }
  return summary.passed() ? kExitOk : kExitDisagreement;
}

int cmd_table(const SweepRange& range, const std::string& path, std::ostream& out, std::ostream& err) {
  validate(range);
  std::ofstream file;
  if (path != "-") {
    file.open(path);
    if (!file) {
      err << "error: cannot open '" << path << "' for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = path == "-" ? out : file;
  bool consistent = true;
  sink << kTableHeader << '\n';
  for (const auto& c : enumerate_compositions(range.max_n, range.max_N)) {
    const auto g = classify(c);
    consistent = consistent && g.prediction_agrees;
    sink << table_row(make_report(c, g)) << '\n';
  }
  sink.flush();
  if (!sink) {
    err << "error: write to '" << path << "' failed\n";
    return kExitUsage;
  }
  return consistent ? kExitOk : kExitDisagreement;
}

namespace {

struct CompositionArgs {
  std::string r;
  std::string k;
};

void add_composition(CLI::App* sub, CompositionArgs& args) {
  auto* r = sub->add_option("--r", args.r, "multiplicities r_1,...,r_m (r_j cycles of length 2j+1)");
  auto* k = sub->add_option("--k", args.k, "half-lengths k_1,...,k_n in cycle order");
  r->excludes(k);
  k->excludes(r);
}

OddCycleComposition resolve(const CompositionArgs& args) {
  if (args.r.empty() == args.k.empty()) throw InvalidInput("exactly one of --r or --k is required");
  if (!args.r.empty()) return OddCycleComposition::from_r(parse_list(args.r));
  return OddCycleComposition::from_k(parse_list(args.k));
}

void add_range(CLI::App* sub, SweepRange& range) {
  sub->add_option("--max-n", range.max_n, "largest number of cycles")->capture_default_str();
  sub->add_option("--max-N", range.max_N, "largest k_1 + ... + k_n")->capture_default_str();
}

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"h-vectors and almost-Gorenstein classification for odd-cycle compositions", "oddcycle"};
  app.require_subcommand(1);

  CompositionArgs comp;
  Method method = Method::all;
  Format format = Format::text;
  bool oracle = false;
  SweepRange range;
  unsigned jobs = 0;
  std::string path = "-";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or csv")->transform(CLI::CheckedTransformer(kFormats));
  };

  auto* hvec = app.add_subcommand("hvec", "h-polynomial by formula, recursion or the Stanley-Reisner complex");
  add_composition(hvec, comp);
  const std::map<std::string, Method> methods{
      {"formula", Method::formula}, {"recursion", Method::recursion}, {"complex", Method::complex}, {"all", Method::all}};
  hvec->add_option("--method", method, "formula, recursion, complex or all")->transform(CLI::CheckedTransformer(methods));
  add_format(hvec);

  auto* cls = app.add_subcommand("classify", "type, e~ and the (almost) Gorenstein property");
  add_composition(cls, comp);
  add_format(cls);

  auto* fac = app.add_subcommand("facets", "facets of the initial complex");
  add_composition(fac, comp);
  fac->add_flag("--oracle", oracle, "cross-check against brute-force enumeration");
  add_format(fac);

  auto* gens = app.add_subcommand("gens", "toric ideal generators and initial monomials");
  add_composition(gens, comp);
  add_format(gens);

  auto* ver = app.add_subcommand("verify", "run every check over a range of compositions");
  add_range(ver, range);
  ver->add_option("--hilbert-degree", range.hilbert_degree, "Hilbert function compared up to this degree")
      ->capture_default_str();
  ver->add_flag("--no-buchberger", [&](std::int64_t) { range.enable_buchberger = false; }, "skip S-pair reduction");
  ver->add_flag("--no-bruteforce", [&](std::int64_t) { range.enable_bruteforce_complex = false; },
                "skip brute-force facet enumeration");
  ver->add_option("--jobs", jobs, "worker threads, 0 for all cores")->capture_default_str();
  add_format(ver);

  auto* tab = app.add_subcommand("table", "CSV of invariants over a range of compositions");
  add_range(tab, range);
  tab->add_option("--out", path, "output file, - for stdout")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*hvec) return cmd_hvec(resolve(comp), method, format, out, err);
    if (*cls) return cmd_classify(resolve(comp), format, out, err);
    if (*fac) return cmd_facets(resolve(comp), oracle, format, out, err);
    if (*gens) return cmd_gens(resolve(comp), format, out, err);
    if (*ver) {
      validate(range);
      return cmd_verify(range, jobs, format, out, err);
    }
    return cmd_table(range, path, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace oddcycle::cli
