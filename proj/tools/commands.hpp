#ifndef QINV_TOOLS_COMMANDS_HPP
#define QINV_TOOLS_COMMANDS_HPP

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qinv::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

enum class Format { plain, json, csv };

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs one named invariant sweep for n = 1..max_n. Throws
/// std::invalid_argument for an unknown suite or an out-of-range max_n.
std::vector<Check> run_suite(const std::string& suite, int max_n, int truncation = -1);

/// Largest max_n each suite accepts.
const std::map<std::string, int>& suite_limits();

/// Rows of the named integer table for n = 1..max_n.
std::vector<std::vector<std::string>> sequence_rows(const std::string& stat, int max_n);

/// OEIS identifier whose prefix is stored under data/oeis for `stat`.
std::string sequence_oeis_id(const std::string& stat);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qinv::cli

#endif  // QINV_TOOLS_COMMANDS_HPP
