#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "oddcycle/cli/sweep.hpp"
#include "oddcycle/composition.hpp"

namespace oddcycle::cli {

// Exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitUsage = 2;

enum class Method { formula, recursion, complex, all };
enum class Format { text, json, csv };

/// "1,1,1" -> {1, 1, 1}. Throws InvalidInput on malformed input.
std::vector<unsigned> parse_list(const std::string& text);

int cmd_hvec(const OddCycleComposition& c, Method method, Format format, std::ostream& out, std::ostream& err);
int cmd_classify(const OddCycleComposition& c, Format format, std::ostream& out, std::ostream& err);
int cmd_facets(const OddCycleComposition& c, bool brute_force, Format format, std::ostream& out, std::ostream& err);
int cmd_gens(const OddCycleComposition& c, Format format, std::ostream& out, std::ostream& err);
int cmd_verify(const SweepRange& range, unsigned jobs, Format format, std::ostream& out, std::ostream& err);
/// `path` "-" writes to `out`.
int cmd_table(const SweepRange& range, const std::string& path, std::ostream& out, std::ostream& err);

/// Full command line, argv[0] included.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddcycle::cli
